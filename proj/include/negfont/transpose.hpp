// transpose.hpp — density operators, global and K-way partial transposes,
// Hermitian spectra and trace-norm negativities.

#pragma once

#include <cstddef>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

class OperatorMatrix {
public:
    OperatorMatrix(int n_qubits); // zero matrix of dim 2^n

    int qubits() const { return n_; }
    std::size_t dim() const { return dim_; }
    cdouble& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
    const cdouble& at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

    bool hermitian_flag() const { return hermitian_; }
    void set_hermitian(bool h) { hermitian_ = h; }
    double hermiticity_defect() const; // max |m_rc - conj(m_cr)|

    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;

private:
    int n_;
    std::size_t dim_;
    bool hermitian_ = false;
    std::vector<cdouble> m_;
};

OperatorMatrix density_matrix(const PureState& state);

// <i|rho^Tp|j> = <i with i_p -> j_p | rho | j with j_p -> i_p>
OperatorMatrix partial_transpose_global(const OperatorMatrix& rho, int p);

// Selective transposition: elements with sum(1-delta) = k and differing p-bit
// are transposed (for k = 2 the 1-difference elements are absorbed as well);
// everything else is copied.
OperatorMatrix partial_transpose_kway(const OperatorMatrix& rho, int p, int k);

// Full spectrum, ascending, via cyclic Jacobi rotations on the complex
// Hermitian matrix. Throws not_hermitian / no_convergence.
std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m);

struct EigenSystem {
    std::vector<double> values;  // ascending
    OperatorMatrix vectors;      // columns are eigenvectors
};
EigenSystem hermitian_eigensystem(const OperatorMatrix& m);

enum class NegativityKind { global, kway };

struct NegativityResult {
    int qubit = 0;
    NegativityKind kind = NegativityKind::global;
    int k = 0; // meaningful for kway
    double value = 0.0;
    std::vector<double> eigenvalues;
};

NegativityResult negativity(const PureState& state, int p);
NegativityResult negativity_kway(const PureState& state, int p, int k);

// 2 (1 - tr (rho^Ap)^2); equals the squared global negativity for pure states.
double reduced_qubit_linear_entropy(const PureState& state, int p);

// Max element residual of rho_G^Tp - sum_K rho_K^Tp + (N-2) rho.
double check_pt_decomposition(const PureState& state, int p);

} // namespace negfont
