// state.hpp — N-qubit pure states, basis-index conventions, single-qubit
// unitaries, permutations, slicing and the text file format.
//
// Index convention: qubit A1 is the most significant bit of the basis index,
// so the printed ket |i1 i2 ... iN> and the bitstring of the index coincide.
// index = sum_m i_m 2^(N-m).

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negfont/errors.hpp"

namespace negfont {

using cdouble = std::complex<double>;

constexpr int kMinQubits = 2;
constexpr int kMaxQubits = 10; // dim 1024 cap for the dense operator path

// Bit position of qubit q (1-based) inside a basis index.
constexpr int bit_position(int n_qubits, int q) { return n_qubits - q; }
constexpr std::uint32_t qubit_mask(int n_qubits, int q) {
    return std::uint32_t{1} << bit_position(n_qubits, q);
}
inline int index_bit(std::uint32_t index, int n_qubits, int q) {
    return static_cast<int>((index >> bit_position(n_qubits, q)) & 1u);
}

void require_qubit(int n_qubits, int q); // throws qubit_out_of_range

class SingleQubitUnitary {
public:
    // Entries row-major; throws not_unitary unless U†U = I within 1e-12.
    SingleQubitUnitary(cdouble u00, cdouble u01, cdouble u10, cdouble u11);

    static SingleQubitUnitary identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cdouble at(int row, int col) const { return u_[2 * row + col]; }
    cdouble determinant() const { return u_[0] * u_[3] - u_[1] * u_[2]; }
    SingleQubitUnitary dagger() const;
    double unitarity_defect() const; // max |(U†U - I)_ij|

private:
    std::array<cdouble, 4> u_;
};

class PureState {
public:
    // Renormalizes; throws zero_state when the norm is below 1e-12 and
    // wrong_arity when n_qubits is outside [2, 10].
    PureState(int n_qubits, std::vector<cdouble> amplitudes);

    // Test hook: adopts the amplitudes without renormalizing.
    static PureState unchecked(int n_qubits, std::vector<cdouble> amplitudes);

    int qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cdouble>& amplitudes() const { return amps_; }
    cdouble amplitude(std::uint32_t index) const { return amps_.at(index); }
    cdouble amplitude(std::string_view bits) const;

    double norm() const;
    bool is_normalized(double tol = 1e-10) const;

private:
    PureState() = default;
    int n_ = 0;
    std::vector<cdouble> amps_;
};

// Builds a state from (bitstring, amplitude) entries; unspecified amplitudes
// are zero and the result is normalized.
PureState make_state(int n_qubits,
                     const std::vector<std::pair<std::string, cdouble>>& entries);

// Text format: optional '# comment' lines, an optional leading 'qubits N'
// declaration, then data lines 'BITS RE IM'. N is otherwise inferred from the
// first bitstring.
PureState parse_state_text(std::string_view text);
std::string serialize_state_text(const PureState& state);
PureState load_state_file(const std::string& path);

// a'_{..i_q..} = sum_j u[i_q][j] a_{..j..}
PureState apply_single_qubit_unitary(const PureState& state, int q,
                                     const SingleQubitUnitary& u);

// perm must be a permutation of 1..N; qubit perm[m-1] of the result carries
// what qubit m carried before: a'_{i_perm(1)...i_perm(N)} = a_{i_1...i_N}.
PureState permute_qubits(const PureState& state, const std::vector<int>& perm);

// N=4 only: amplitudes with qubit s fixed to value, remaining qubits in
// ascending label order (unnormalized slice).
std::array<cdouble, 8> slice_on_qubit(const PureState& state, int s, int value);

} // namespace negfont
