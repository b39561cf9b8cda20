// fonts.hpp — negativity fonts of a partial transpose.
//
// A font is a 2x2 matrix of amplitudes: rows are the two values of the
// transposed qubit p, columns are a pair of bit assignments on the other
// qubits that differ on a "flipped" set. With K = |flipped| + 1 it feeds one
// negative eigenvalue candidate of the K-way partial transpose.
//
//   det = a[p=0, base] a[p=1, ~base] - a[p=1, base] a[p=0, ~base]
//
// where ~base negates every bit of the flipped set.

#pragma once

#include <string>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

struct FontRecord {
    int transposed_qubit = 0;
    std::string left_index;  // complement bitstring I (length N-1), I < J
    std::string right_index; // complement bitstring J
    int k_value = 0;         // 1 + hamming(I, J)
    cdouble det;
};

// Paper-style label, e.g. "D^{0000}" or "D_{(A3)1}^{010}": subscripts list the
// fixed qubits with their bits, superscripts the flipped-qubit bits of the
// left column in qubit order.
std::string font_label(const FontRecord& record, int n_qubits);

// Low-level determinant: flip_mask must contain qubit p's bit; label is a full
// basis index choosing the left column (p's bit in label may be 0 or 1; the
// value is antisymmetric under flipping it).
cdouble font_det_label(const PureState& state, int p, std::uint32_t flip_mask,
                       std::uint32_t label);

// Validated form: flipped qubits with their base bits, fixed qubits with their
// bits; p, flipped and fixed must partition 1..N.
cdouble font_det(const PureState& state, int p,
                 const std::vector<std::pair<int, int>>& flipped_base,
                 const std::vector<std::pair<int, int>>& fixed_bits);

// One record per unordered pair I < J of complement bitstrings with
// |det| > min_abs, sorted by (K, I, J).
std::vector<FontRecord> enumerate_fonts(const PureState& state, int p,
                                        double min_abs = 1e-12);

// 4 sum |det|^2 over every font of qubit p; equals the squared global
// negativity of the partial transpose with respect to p.
double negativity_sq_from_fonts(const PureState& state, int p);

// Two-qubit invariants built from one N-way/(N-1)-way font family.
struct PairInvariantSet {
    int qubit_p = 0;
    int qubit_q = 0;
    std::vector<std::pair<int, int>> rest; // (qubit, bit) for the other N-2
    double m = 0.0; // |D0|^2 + |D1|^2 + |E0|^2 + |E1|^2
    cdouble t;      // D0 - D1
    cdouble i;      // (D0 + D1)^2 - 4 E0 E1
    cdouble p;      // D0 D1 - E0 E1
};

PairInvariantSet pair_invariants_mtip(const PureState& state, int p, int q,
                                      const std::vector<std::pair<int, int>>& rest);

// The four font determinants entering the pair invariants: N-way with the
// q-index at 0 and 1, and (N-1)-way with q fixed at 0 and 1.
struct PairFonts {
    cdouble d0, d1, e0, e1;
};
PairFonts pair_fonts(const PureState& state, int p, int q,
                     const std::vector<std::pair<int, int>>& rest);

} // namespace negfont
