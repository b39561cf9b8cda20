#include "negfont/transpose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace negfont {

OperatorMatrix::OperatorMatrix(int n_qubits)
    : n_(n_qubits), dim_(std::size_t{1} << n_qubits), m_(dim_ * dim_) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw Error(Errc::wrong_arity, "operator qubit count outside 1..10");
    }
}

double OperatorMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

cdouble OperatorMatrix::trace() const {
    cdouble t{};
    for (std::size_t r = 0; r < dim_; ++r) t += at(r, r);
    return t;
}

double OperatorMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : m_) s += std::norm(v);
    return std::sqrt(s);
}

double OperatorMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& v : m_) worst = std::max(worst, std::abs(v));
    return worst;
}

OperatorMatrix density_matrix(const PureState& state) {
    OperatorMatrix rho(state.qubits());
    const auto& a = state.amplitudes();
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            rho.at(r, c) = a[r] * std::conj(a[c]);
        }
    }
    rho.set_hermitian(true);
    return rho;
}

OperatorMatrix partial_transpose_global(const OperatorMatrix& rho, int p) {
    const int n = rho.qubits();
    require_qubit(n, p);
    const std::uint32_t pm = qubit_mask(n, p);
    OperatorMatrix out(n);
    for (std::uint32_t r = 0; r < rho.dim(); ++r) {
        for (std::uint32_t c = 0; c < rho.dim(); ++c) {
            if ((r ^ c) & pm) {
                out.at(r, c) = rho.at(r ^ pm, c ^ pm);
            } else {
                out.at(r, c) = rho.at(r, c);
            }
        }
    }
    out.set_hermitian(rho.hermitian_flag());
    return out;
}

OperatorMatrix partial_transpose_kway(const OperatorMatrix& rho, int p, int k) {
    const int n = rho.qubits();
    require_qubit(n, p);
    if (k < 2 || k > n) {
        throw Error(Errc::bad_k, "k must lie in 2..N");
    }
    const std::uint32_t pm = qubit_mask(n, p);
    OperatorMatrix out(n);
    for (std::uint32_t r = 0; r < rho.dim(); ++r) {
        for (std::uint32_t c = 0; c < rho.dim(); ++c) {
            const int h = std::popcount(r ^ c);
            const bool pdiff = ((r ^ c) & pm) != 0;
            const bool selected = pdiff && (k > 2 ? h == k : (h == 1 || h == 2));
            out.at(r, c) = selected ? rho.at(r ^ pm, c ^ pm) : rho.at(r, c);
        }
    }
    out.set_hermitian(rho.hermitian_flag());
    return out;
}

namespace {

constexpr int kMaxSweeps = 100;

EigenSystem jacobi(const OperatorMatrix& input, bool want_vectors) {
    if (!input.hermitian_flag() || input.hermiticity_defect() > 1e-12) {
        throw Error(Errc::not_hermitian, "matrix is not Hermitian within 1e-12");
    }
    const std::size_t n = input.dim();
    OperatorMatrix a = input;
    OperatorMatrix v(input.qubits());
    if (want_vectors) {
        for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;
    }
    const double norm = a.frobenius_norm();
    const double threshold = 1e-13 * norm;

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a.at(p, q));
        }
        return std::sqrt(2.0 * s);
    };

    bool converged = norm == 0.0 || offdiag() <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble beta = a.at(p, q);
                const double ab = std::abs(beta);
                if (ab == 0.0) continue;
                // Phase out beta, then a real 2x2 rotation.
                const cdouble w = beta / ab;
                const double alpha = a.at(p, p).real();
                const double gamma = a.at(q, q).real();
                const double tau = (gamma - alpha) / (2.0 * ab);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U = P^dagger G with P = diag(1, w) phasing beta real and G
                // the real Jacobi rotation:
                //   U = [[c, s], [-s conj(w), c conj(w)]]
                const cdouble cw = std::conj(w);
                // A <- U^dagger A U (columns then rows), V <- V U.
                for (std::size_t r = 0; r < n; ++r) {
                    const cdouble arp = a.at(r, p);
                    const cdouble arq = a.at(r, q);
                    a.at(r, p) = c * arp - s * cw * arq;
                    a.at(r, q) = s * arp + c * cw * arq;
                }
                for (std::size_t cidx = 0; cidx < n; ++cidx) {
                    const cdouble apc = a.at(p, cidx);
                    const cdouble aqc = a.at(q, cidx);
                    a.at(p, cidx) = c * apc - s * w * aqc;
                    a.at(q, cidx) = s * apc + c * w * aqc;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = a.at(p, p).real();
                a.at(q, q) = a.at(q, q).real();
                if (want_vectors) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const cdouble vrp = v.at(r, p);
                        const cdouble vrq = v.at(r, q);
                        v.at(r, p) = c * vrp - s * cw * vrq;
                        v.at(r, q) = s * vrp + c * cw * vrq;
                    }
                }
            }
        }
        converged = offdiag() <= threshold;
    }
    if (!converged) {
        throw Error(Errc::no_convergence, "Jacobi sweep cap reached");
    }

    EigenSystem sys{std::vector<double>(n), OperatorMatrix(input.qubits())};
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
    for (std::size_t i = 0; i < n; ++i) {
        sys.values[i] = diag[order[i]];
        if (want_vectors) {
            for (std::size_t r = 0; r < n; ++r) sys.vectors.at(r, i) = v.at(r, order[i]);
        }
    }
    return sys;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m) {
    return jacobi(m, false).values;
}

EigenSystem hermitian_eigensystem(const OperatorMatrix& m) { return jacobi(m, true); }

namespace {

NegativityResult negativity_of(const OperatorMatrix& pt, int p, NegativityKind kind, int k) {
    NegativityResult res;
    res.qubit = p;
    res.kind = kind;
    res.k = k;
    res.eigenvalues = hermitian_eigenvalues(pt);
    double trace_norm = 0.0;
    for (double ev : res.eigenvalues) trace_norm += std::abs(ev);
    res.value = trace_norm - 1.0;
    return res;
}

} // namespace

NegativityResult negativity(const PureState& state, int p) {
    const OperatorMatrix rho = density_matrix(state);
    return negativity_of(partial_transpose_global(rho, p), p, NegativityKind::global, 0);
}

NegativityResult negativity_kway(const PureState& state, int p, int k) {
    const OperatorMatrix rho = density_matrix(state);
    return negativity_of(partial_transpose_kway(rho, p, k), p, NegativityKind::kway, k);
}

double reduced_qubit_linear_entropy(const PureState& state, int p) {
    const int n = state.qubits();
    require_qubit(n, p);
    const std::uint32_t pm = qubit_mask(n, p);
    const auto& a = state.amplitudes();
    cdouble r00{}, r01{}, r11{};
    for (std::uint32_t idx = 0; idx < a.size(); ++idx) {
        if (idx & pm) continue;
        r00 += a[idx] * std::conj(a[idx]);
        r11 += a[idx | pm] * std::conj(a[idx | pm]);
        r01 += a[idx] * std::conj(a[idx | pm]);
    }
    const double purity = std::norm(r00) + std::norm(r11) + 2.0 * std::norm(r01);
    return 2.0 * (1.0 - purity);
}

double check_pt_decomposition(const PureState& state, int p) {
    const int n = state.qubits();
    if (n < 3) {
        throw Error(Errc::wrong_arity, "decomposition check requires N >= 3");
    }
    require_qubit(n, p);
    const OperatorMatrix rho = density_matrix(state);
    const OperatorMatrix global = partial_transpose_global(rho, p);
    OperatorMatrix sum(n);
    for (int k = 2; k <= n; ++k) {
        const OperatorMatrix ptk = partial_transpose_kway(rho, p, k);
        for (std::size_t r = 0; r < sum.dim(); ++r) {
            for (std::size_t c = 0; c < sum.dim(); ++c) {
                sum.at(r, c) += ptk.at(r, c);
            }
        }
    }
    double worst = 0.0;
    const double nm2 = static_cast<double>(n - 2);
    for (std::size_t r = 0; r < sum.dim(); ++r) {
        for (std::size_t c = 0; c < sum.dim(); ++c) {
            const cdouble resid = global.at(r, c) - (sum.at(r, c) - nm2 * rho.at(r, c));
            worst = std::max(worst, std::abs(resid));
        }
    }
    return worst;
}

} // namespace negfont
