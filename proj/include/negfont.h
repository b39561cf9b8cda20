/* negfont.h — C interface to the negativity-font invariant library.
 *
 * All functions return NF_OK (0) on success or a negative-free error code;
 * nf_last_error() returns a thread-local human-readable message for the most
 * recent failure on the calling thread. Objects returned through out-pointers
 * are owned by the caller and released with the matching *_free function.
 */

#ifndef NEGFONT_H
#define NEGFONT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nf_state nf_state; /* opaque N-qubit pure state */

typedef enum nf_status {
    NF_OK = 0,
    NF_ERR_INVALID_ARGUMENT = 1,
    NF_ERR_ZERO_STATE = 2,
    NF_ERR_BAD_BITSTRING = 3,
    NF_ERR_DUPLICATE_INDEX = 4,
    NF_ERR_PARSE = 5,
    NF_ERR_QUBIT_OUT_OF_RANGE = 6,
    NF_ERR_NOT_A_PERMUTATION = 7,
    NF_ERR_WRONG_ARITY = 8,
    NF_ERR_OVERLAPPING_SETS = 9,
    NF_ERR_INCOMPLETE_ASSIGNMENT = 10,
    NF_ERR_SAME_QUBIT = 11,
    NF_ERR_NOT_UNITARY = 12,
    NF_ERR_NOT_HERMITIAN = 13,
    NF_ERR_NO_CONVERGENCE = 14,
    NF_ERR_BAD_K = 15,
    NF_ERR_UNKNOWN_QUANTITY = 16,
    NF_ERR_DEGENERATE_FONTS = 17,
    NF_ERR_UNKNOWN_PRESET = 18,
    NF_ERR_BAD_PARAMS = 19,
    NF_ERR_NON_FINITE = 20,
    NF_ERR_BAD_PAIR = 21,
    NF_ERR_BAD_ROLES = 22,
    NF_ERR_IO = 23,
    NF_ERR_INTERNAL = 24
} nf_status;

const char* nf_version(void);
const char* nf_status_name(int status);
const char* nf_last_error(void); /* thread-local; empty string if none */

/* ---- state construction and inspection ---- */

/* Text format: '# comment' lines, optional 'qubits N' line, then data lines
 * 'BITS RE IM'. States are normalized on construction. */
nf_status nf_state_from_text(const char* text, nf_state** out);
nf_status nf_state_from_file(const char* path, nf_state** out);
/* Preset catalog: ghz, state1, chi, chi_c, hs, c1, c2, c3, phi, b(a,b,c,d). */
nf_status nf_state_preset(const char* name, nf_state** out);
nf_status nf_state_random(int n_qubits, uint64_t seed, uint64_t stream,
                          nf_state** out);
void nf_state_free(nf_state* state);

int nf_state_qubits(const nf_state* state); /* 0 on null */
nf_status nf_state_serialize(const nf_state* state, char** out_text);
nf_status nf_state_amplitude(const nf_state* state, const char* bits, double* re,
                             double* im);

/* ---- fonts ---- */

typedef struct nf_font_record {
    int transposed_qubit;
    int k_value;
    char left_index[16];  /* complement bitstring I (I < J) */
    char right_index[16]; /* complement bitstring J */
    double det_re;
    double det_im;
    char label[64]; /* display notation for the font determinant */
} nf_font_record;

/* Fonts of qubit `p` with |det| > min_abs, sorted by (K, I, J). Free the
 * array with nf_fonts_free. */
nf_status nf_enumerate_fonts(const nf_state* state, int p, double min_abs,
                             nf_font_record** out_records, size_t* out_count);
void nf_fonts_free(nf_font_record* records);

/* ---- negativities ---- */

/* k = 0 selects the global partial transpose; k in 2..N the K-way one.
 * method: "spectral" (trace norm), "fonts" (sqrt of the font sum; global
 * only), or "entropy" (sqrt of the reduced linear entropy; global only). */
nf_status nf_negativity(const nf_state* state, int p, int k, const char* method,
                        double* out_value);
nf_status nf_negativity_sq_fonts(const nf_state* state, int p, double* out_value);
nf_status nf_linear_entropy(const nf_state* state, int p, double* out_value);
/* Max element residual of the K-way decomposition of the global transpose. */
nf_status nf_pt_decomposition_residual(const nf_state* state, int p,
                                       double* out_residual);

/* ---- reports, tables, sweeps ---- */

/* format: "pretty", "tsv" or "json". Free with nf_string_free. */
nf_status nf_report(const nf_state* state, const char* state_name,
                    const char* format, char** out_text);
nf_status nf_render_table1(char** out_text, int* out_mismatches);
nf_status nf_render_table2(char** out_text, int* out_mismatches);

/* Max deviation of a named invariant under `samples` random product
 * unitaries; group is "su2" or "u2". */
nf_status nf_invariance_sweep(const nf_state* state, const char* quantity,
                              const char* group, int samples, uint64_t seed,
                              double* out_max_deviation);
/* Newline-separated quantity names valid for this state. */
nf_status nf_sweep_quantities(const nf_state* state, char** out_text);

/* Canonicalization of chi-like states; out_applied_json (optional) receives a
 * JSON array of the applied single-qubit unitaries in application order. */
nf_status nf_canonicalize_chi(const nf_state* state, nf_state** out_state,
                              char** out_applied_json);

/* Bundled identity checks; returns NF_OK with *out_failures > 0 when suites
 * fail (the report text carries the details). */
nf_status nf_selftest(uint64_t seed, int samples, char** out_text,
                      int* out_failures);

void nf_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* NEGFONT_H */
