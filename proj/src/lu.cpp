#include "negfont/lu.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "negfont/invariants.hpp"
#include "negfont/rng.hpp"
#include "negfont/transpose.hpp"

namespace negfont {

SingleQubitUnitary u_from_x(cdouble x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
        throw Error(Errc::non_finite, "x must be finite");
    }
    const double norm = std::sqrt(1.0 + std::norm(x));
    return {1.0 / norm, -std::conj(x) / norm, x / norm, 1.0 / norm};
}

double FontTransformPrediction::max_error() const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(predicted[i] - recomputed[i]));
    }
    return worst;
}

FontTransformPrediction predict_font_transform(const PureState& state, int p, int q,
                                               const std::vector<std::pair<int, int>>& rest,
                                               cdouble x) {
    const PairFonts f = pair_fonts(state, p, q, rest);
    const double den = 1.0 + std::norm(x);
    const cdouble xc = std::conj(x);
    FontTransformPrediction pr;
    pr.p = p;
    pr.q = q;
    pr.rest = rest;
    pr.x = x;
    pr.predicted[0] = (f.d0 - std::norm(x) * f.d1 + x * f.e0 - xc * f.e1) / den;
    pr.predicted[1] = (f.d1 - std::norm(x) * f.d0 + x * f.e0 - xc * f.e1) / den;
    pr.predicted[2] = (f.e0 + xc * xc * f.e1 - xc * (f.d0 + f.d1)) / den;
    pr.predicted[3] = (f.e1 + x * x * f.e0 + x * (f.d0 + f.d1)) / den;
    const PureState moved = apply_single_qubit_unitary(state, q, u_from_x(x));
    const PairFonts g = pair_fonts(moved, p, q, rest);
    pr.recomputed = {g.d0, g.d1, g.e0, g.e1};
    return pr;
}

namespace {

using QuantityFn = std::function<cdouble(const PureState&)>;

std::map<std::string, QuantityFn, std::less<>> quantity_table(int n) {
    std::map<std::string, QuantityFn, std::less<>> table;
    for (int p = 1; p <= n; ++p) {
        table["negsq_" + std::to_string(p)] = [p](const PureState& s) {
            return cdouble{negativity_sq_from_fonts(s, p), 0.0};
        };
    }
    if (n == 4) {
        table["t4"] = [](const PureState& s) { return t4(s); };
        table["t4sq"] = [](const PureState& s) { const cdouble t = t4(s); return t * t; };
        table["tau4"] = [](const PureState& s) { return cdouble{tau4(s), 0.0}; };
        for (const auto& pr : kPairOrder) {
            const std::string name =
                "j4_" + std::to_string(pr[0]) + std::to_string(pr[1]);
            table[name] = [pr](const PureState& s) { return j4(s, pr[0], pr[1]); };
        }
        table["beta4"] = [](const PureState& s) { return cdouble{beta4(s).beta4, 0.0}; };
        table["delta4_avg"] = [](const PureState& s) { return cdouble{delta4(s).avg, 0.0}; };
        table["delta4_sum"] = [](const PureState& s) { return cdouble{delta4(s).sum, 0.0}; };
        table["i6"] = [](const PureState& s) { return i6_a2a3(s); };
        table["i6_printed"] = [](const PureState& s) { return i6_a2a3_printed(s); };
        // Three-qubit pieces; invariant under unitaries on their own three
        // qubits but movable by the fourth (exposed for experimentation).
        const int roles[3][3] = {{2, 3, 4}, {3, 2, 4}, {4, 2, 3}};
        for (const auto& r : roles) {
            const std::string suffix =
                "_1" + std::to_string(r[0]) + "_" + std::to_string(r[1]);
            table["i4" + suffix] = [r](const PureState& s) {
                return triple_invariants(s, r[0], r[1], r[2]).i4;
            };
            table["p3" + suffix] = [r](const PureState& s) {
                return triple_invariants(s, r[0], r[1], r[2]).p3;
            };
        }
    }
    return table;
}

} // namespace

std::vector<std::string> sweep_quantities(int n_qubits) {
    std::vector<std::string> names;
    for (const auto& [name, fn] : quantity_table(n_qubits)) names.push_back(name);
    return names;
}

double invariance_sweep(const PureState& state, std::string_view quantity,
                        int samples, std::uint64_t seed, UnitaryGroup group) {
    const auto table = quantity_table(state.qubits());
    const auto it = table.find(quantity);
    if (it == table.end()) {
        throw Error(Errc::unknown_quantity,
                    "unknown quantity '" + std::string(quantity) + "'");
    }
    const QuantityFn& fn = it->second;
    const cdouble ref = fn(state);
    const int n = state.qubits();
    double worst = 0.0;
    for (int sample = 0; sample < samples; ++sample) {
        PureState moved = state;
        for (int q = 1; q <= n; ++q) {
            const std::uint64_t stream =
                static_cast<std::uint64_t>(sample) * 64 + static_cast<std::uint64_t>(q);
            const SingleQubitUnitary u = group == UnitaryGroup::su2
                                             ? random_su2(seed, stream)
                                             : random_u2(seed, stream);
            moved = apply_single_qubit_unitary(moved, q, u);
        }
        double dev = std::abs(fn(moved) - ref);
        if (std::abs(ref) > 1e-6) dev /= std::abs(ref);
        worst = std::max(worst, dev);
    }
    return worst;
}

CanonicalizeResult canonicalize_chi(const PureState& state) {
    if (state.qubits() != 4) {
        throw Error(Errc::wrong_arity, "canonicalization requires a 4-qubit state");
    }
    // Two-way fonts fixing (A3, A4), flipping {A1, A2}, row A1.
    const std::uint32_t m12 = qubit_mask(4, 1) | qubit_mask(4, 2);
    const cdouble num = font_det_label(state, 1, m12, 0b0000);
    const cdouble den = font_det_label(state, 1, m12, 0b0010);
    if (std::abs(den) < 1e-12) {
        throw Error(Errc::degenerate_fonts,
                    "two-way (A3)(A4) font denominator below 1e-12");
    }
    const cdouble xstar = std::sqrt(-num / den); // principal root
    auto fourway_mass = [](const PureState& s) {
        double mass = 0.0;
        const FourWaySet set = fourway_determinants(s);
        for (const auto& d : set.d) mass += std::norm(d);
        return 0.5 * mass; // each font counted twice by antisymmetry
    };

    std::vector<CanonicalizeResult> candidates;
    for (const cdouble root : {xstar, -xstar}) {
        const cdouble x = std::conj(root);
        CanonicalizeResult cand{state, x, {}, 0.0};
        const SingleQubitUnitary u3 = u_from_x(x);
        const SingleQubitUnitary u1 = u_from_x(1.0);
        cand.state = apply_single_qubit_unitary(cand.state, 3, u3);
        cand.applied.emplace_back(3, u3);
        cand.state = apply_single_qubit_unitary(cand.state, 1, u1);
        cand.applied.emplace_back(1, u1);
        cand.state = apply_single_qubit_unitary(cand.state, 2, u1);
        cand.applied.emplace_back(2, u1);
        cand.fourway_mass = fourway_mass(cand.state);
        candidates.push_back(std::move(cand));
    }
    // Principal root wins ties.
    return candidates[1].fourway_mass < candidates[0].fourway_mass
               ? std::move(candidates[1])
               : std::move(candidates[0]);
}

} // namespace negfont
