// lu.hpp — the special-form local unitaries U(x), predicted transformation of
// font determinants under them, randomized invariance sweeps, and the
// canonicalization procedure that removes the four-way fonts of the chi state.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negfont/fonts.hpp"
#include "negfont/state.hpp"

namespace negfont {

// U(x) = (1 + |x|^2)^(-1/2) [[1, -x*], [x, 1]]; determinant 1, U(0) = I.
SingleQubitUnitary u_from_x(cdouble x);

struct FontTransformPrediction {
    int p = 0;
    int q = 0;
    std::vector<std::pair<int, int>> rest;
    cdouble x;
    // order: D^{iq=0}, D^{iq=1}, E_{q=0}, E_{q=1}
    std::array<cdouble, 4> predicted;
    std::array<cdouble, 4> recomputed; // direct evaluation after applying U(x) on q
    double max_error() const;
};

// Predicts the four determinants after U(x) on qubit q from the untransformed
// ones, and carries the direct re-evaluation for comparison.
FontTransformPrediction predict_font_transform(const PureState& state, int p, int q,
                                               const std::vector<std::pair<int, int>>& rest,
                                               cdouble x);

enum class UnitaryGroup { su2, u2 };

// Applies `samples` independent random product unitaries (one factor per
// qubit) and returns the maximum deviation of the named quantity, relative
// when the reference modulus exceeds 1e-6 and absolute otherwise.
double invariance_sweep(const PureState& state, std::string_view quantity,
                        int samples, std::uint64_t seed, UnitaryGroup group);

// Quantity names accepted by invariance_sweep for an N-qubit state.
std::vector<std::string> sweep_quantities(int n_qubits);

struct CanonicalizeResult {
    PureState state;
    cdouble x; // parameter applied on A3
    std::vector<std::pair<int, SingleQubitUnitary>> applied; // (qubit, U) in order
    double fourway_mass = 0.0; // sum |D|^2 over four-way fonts of the output
};

// U^{A3}(x) with (x*)^2 = -D_{(A3)0(A4)0}^{00} / D_{(A3)1(A4)0}^{00}, followed
// by U(1) on A1 and A2. Both square roots are tried and the output with the
// smaller four-way font mass is kept (principal root on ties). Throws
// degenerate_fonts when the denominator determinant is below 1e-12.
CanonicalizeResult canonicalize_chi(const PureState& state);

} // namespace negfont
