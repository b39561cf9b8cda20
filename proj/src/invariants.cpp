#include "negfont/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "negfont/fonts.hpp"

namespace negfont {

namespace {

void require_four(const PureState& state) {
    if (state.qubits() != 4) {
        throw Error(Errc::wrong_arity, "four-qubit invariant requested for N != 4");
    }
}

constexpr std::uint32_t kAll = 0b1111;

std::uint32_t label4(int i1, int i2, int i3, int i4) {
    return static_cast<std::uint32_t>(i1 << 3 | i2 << 2 | i3 << 1 | i4);
}

// D^{0 i2 i3 i4}: four-way font, row A1.
cdouble d4(const PureState& s, int i2, int i3, int i4) {
    return font_det_label(s, 1, kAll, label4(0, i2, i3, i4));
}

// Three-way font, row A1, fixing qubit `fixed` (2..4) at `y`; base[0] / base[1]
// are the bits of the two remaining non-A1 qubits in ascending label order.
cdouble d3(const PureState& s, int fixed, int y, int b_lo, int b_hi) {
    std::uint32_t flip = qubit_mask(4, 1);
    std::uint32_t label = y ? qubit_mask(4, fixed) : 0;
    int taken = 0;
    for (int q = 2; q <= 4; ++q) {
        if (q == fixed) continue;
        flip |= qubit_mask(4, q);
        const int bit = taken++ == 0 ? b_lo : b_hi;
        if (bit) label |= qubit_mask(4, q);
    }
    return font_det_label(s, 1, flip, label);
}

// Two-way font flipping {A1, t}, superscript bits 0; fixed bits on the other
// two qubits in ascending label order.
cdouble d2(const PureState& s, int t, int y_lo, int y_hi) {
    std::uint32_t flip = qubit_mask(4, 1) | qubit_mask(4, t);
    std::uint32_t label = 0;
    int taken = 0;
    for (int q = 2; q <= 4; ++q) {
        if (q == t) continue;
        const int bit = taken++ == 0 ? y_lo : y_hi;
        if (bit) label |= qubit_mask(4, q);
    }
    return font_det_label(s, 1, flip, label);
}

// Signed four-way combination for pair (A1, At): (1/2) sum (-1)^{i_t} D^{0 i2 i3 i4}.
cdouble four_combo(const PureState& s, int t) {
    cdouble total{};
    for (int i2 = 0; i2 < 2; ++i2) {
        for (int i3 = 0; i3 < 2; ++i3) {
            for (int i4 = 0; i4 < 2; ++i4) {
                const int it = t == 2 ? i2 : t == 3 ? i3 : i4;
                const double sign = it ? -1.0 : 1.0;
                total += sign * d4(s, i2, i3, i4);
            }
        }
    }
    return 0.5 * total;
}

// Difference, in the partner index i_t, of the three-way fonts fixing qubit
// `fixed` at y (the third superscript index stays 0).
cdouble mediator_diff(const PureState& s, int fixed, int y, int t) {
    int pos_of_t = -1;
    int taken = 0;
    for (int q = 2; q <= 4; ++q) {
        if (q == fixed) continue;
        if (q == t) pos_of_t = taken;
        ++taken;
    }
    if (pos_of_t == 0) {
        return d3(s, fixed, y, 0, 0) - d3(s, fixed, y, 1, 0);
    }
    return d3(s, fixed, y, 0, 0) - d3(s, fixed, y, 0, 1);
}

} // namespace

FourWaySet fourway_determinants(const PureState& state) {
    require_four(state);
    FourWaySet set;
    for (int i2 = 0; i2 < 2; ++i2) {
        for (int i3 = 0; i3 < 2; ++i3) {
            for (int i4 = 0; i4 < 2; ++i4) {
                set.d[4 * i2 + 2 * i3 + i4] = d4(state, i2, i3, i4);
            }
        }
    }
    return set;
}

cdouble t4(const PureState& state) {
    require_four(state);
    return d4(state, 0, 0, 0) + d4(state, 0, 1, 1) - d4(state, 0, 1, 0) -
           d4(state, 0, 0, 1);
}

double tau4(const PureState& state) {
    const cdouble t = t4(state);
    return 4.0 * std::abs(t * t);
}

namespace {

cdouble j4_direct(const PureState& s, int t) {
    const cdouble combo = four_combo(s, t);
    cdouble result = combo * combo;
    // Two-way fonts flipping {A1, At}, all four assignments of the fixed pair.
    const cdouble g00 = d2(s, t, 0, 0);
    const cdouble g01 = d2(s, t, 0, 1);
    const cdouble g10 = d2(s, t, 1, 0);
    const cdouble g11 = d2(s, t, 1, 1);
    result += 8.0 * (g00 * g11 + g01 * g10);
    // Three-way difference products for each of the two mediators.
    for (int fixed = 2; fixed <= 4; ++fixed) {
        if (fixed == t) continue;
        result -= 4.0 * mediator_diff(s, fixed, 0, t) * mediator_diff(s, fixed, 1, t);
    }
    return result;
}

} // namespace

cdouble j4(const PureState& state, int qubit_a, int qubit_b) {
    require_four(state);
    int a = qubit_a, b = qubit_b;
    if (a > b) std::swap(a, b);
    if (a < 1 || b > 4 || a == b) {
        throw Error(Errc::bad_pair, "pair must be two distinct qubits among A1..A4");
    }
    if (a == 1) return j4_direct(state, b);
    // Complementary pair carries the same invariant.
    int rest[2];
    int k = 0;
    for (int q = 1; q <= 4; ++q) {
        if (q != a && q != b) rest[k++] = q;
    }
    return j4_direct(state, rest[1]); // rest[0] == 1
}

Beta4Result beta4(const PureState& state) {
    require_four(state);
    Beta4Result res;
    double total = 0.0;
    for (const auto& pr : kPairOrder) {
        const double b = (4.0 / 3.0) * std::abs(j4(state, pr[0], pr[1]));
        res.pairs.push_back({static_cast<double>(pr[0]), static_cast<double>(pr[1]), b});
        total += b;
    }
    res.beta4 = total / 6.0;
    return res;
}

Delta4Result delta4(const PureState& state) {
    require_four(state);
    double sum = 0.0;
    for (int p = 1; p <= 4; ++p) sum += negativity_sq_from_fonts(state, p);
    const double tau = tau4(state);
    return {sum - tau, 0.25 * sum - tau};
}

TripleInvariantSet triple_invariants(const PureState& state, int q, int mediator,
                                     int fixed) {
    require_four(state);
    if (q < 2 || q > 4 || mediator < 2 || mediator > 4 || fixed < 2 || fixed > 4 ||
        q == mediator || q == fixed || mediator == fixed) {
        throw Error(Errc::bad_roles,
                    "pair partner, mediator and fixed qubit must partition {A2,A3,A4}");
    }
    TripleInvariantSet out;
    out.pair_q = q;
    out.mediator = mediator;
    out.fixed = fixed;

    // W_z^{(x)}: three-way slice font flipping {A1, q, mediator} with the fixed
    // qubit at x; z is the partner index, the mediator index stays 0.
    auto W = [&](int z, int x) -> cdouble {
        int lo = 0, hi = 0;
        // bits of the two flipped non-A1 qubits in ascending order
        int first = std::min(q, mediator);
        if (q == first) {
            lo = z;
            hi = 0;
        } else {
            lo = 0;
            hi = z;
        }
        return d3(state, fixed, x, lo, hi);
    };
    // G_y^{(x)}: two-way slice font flipping {A1, q}, mediator fixed at y.
    auto G = [&](int y, int x) -> cdouble {
        const int lo_q = std::min(mediator, fixed);
        const int lo_bit = lo_q == mediator ? y : x;
        const int hi_bit = lo_q == mediator ? x : y;
        return d2(state, q, lo_bit, hi_bit);
    };

    cdouble wd[2], g0sum{}, g1sum{};
    cdouble i3s[2];
    for (int x = 0; x < 2; ++x) {
        wd[x] = W(0, x) - W(1, x);
        const cdouble g0 = G(0, x);
        const cdouble g1 = G(1, x);
        g0sum += g0;
        g1sum += g1;
        i3s[x] = wd[x] * wd[x] - 4.0 * g0 * g1;
    }
    const cdouble wall = wd[0] + wd[1];
    out.i3_slice0 = i3s[0];
    out.i3_slice1 = i3s[1];
    out.i3_overall = wall * wall - 4.0 * g0sum * g1sum;
    out.p3 = 2.0 * (i3s[0] + i3s[1] - out.i3_overall);
    const cdouble combo = four_combo(state, q);
    out.i4 = combo * combo -
             4.0 * mediator_diff(state, mediator, 0, q) * mediator_diff(state, mediator, 1, q);
    out.tau3_slice0 = 4.0 * std::abs(i3s[0]);
    out.tau3_slice1 = 4.0 * std::abs(i3s[1]);
    return out;
}

namespace {

// Building blocks of the degree-6 pair invariant; every font here has A2 as
// the transposed (row) qubit.
struct SexticFonts {
    // two-way fonts flipping {A2,A3}, fixing A1 = i1, A4 = i4
    cdouble g[2][2];
    // four-way combo D^{0000} + D^{0001} - D^{0010} - D^{0011}
    cdouble combo;

    explicit SexticFonts(const PureState& s) {
        const std::uint32_t m23 = qubit_mask(4, 2) | qubit_mask(4, 3);
        for (int i1 = 0; i1 < 2; ++i1) {
            for (int i4 = 0; i4 < 2; ++i4) {
                g[i1][i4] = font_det_label(s, 2, m23, label4(i1, 0, 0, i4));
            }
        }
        combo = font_det_label(s, 2, kAll, label4(0, 0, 0, 0)) +
                font_det_label(s, 2, kAll, label4(0, 0, 0, 1)) -
                font_det_label(s, 2, kAll, label4(0, 0, 1, 0)) -
                font_det_label(s, 2, kAll, label4(0, 0, 1, 1));
    }
};

// D_{(A1)i1}^{(i2 i3 i4)}: three-way font fixing A1, flipping {A2,A3,A4}.
cdouble a1_font(const PureState& s, int i1, int i2, int i3, int i4) {
    const std::uint32_t m = qubit_mask(4, 2) | qubit_mask(4, 3) | qubit_mask(4, 4);
    return font_det_label(s, 2, m, label4(i1, i2, i3, i4));
}

// D_{(A4)i4}^{(i1 i2 i3)}: three-way font fixing A4, flipping {A1,A2,A3}.
cdouble a4_font(const PureState& s, int i4, int i1, int i2, int i3) {
    const std::uint32_t m = qubit_mask(4, 1) | qubit_mask(4, 2) | qubit_mask(4, 3);
    return font_det_label(s, 2, m, label4(i1, i2, i3, i4));
}

} // namespace

cdouble i6_a2a3(const PureState& state) {
    require_four(state);
    const SexticFonts f(state);
    // Index-consistent reading: every three-way difference is taken in the A3
    // index with the other superscripts at 0. Equal to the determinant of the
    // 3x3 coefficient matrix of the (x,t)-biquadratic form (verified in tests).
    auto U = [&](int i1) { return a1_font(state, i1, 0, 0, 0) - a1_font(state, i1, 0, 1, 0); };
    auto V = [&](int i4) { return a4_font(state, i4, 0, 0, 0) - a4_font(state, i4, 0, 0, 1); };
    cdouble total = (f.g[0][0] * f.g[1][1] - f.g[0][1] * f.g[1][0]) * f.combo;
    total += f.g[0][1] * U(1) * V(0);
    total -= f.g[0][0] * U(1) * V(1);
    total += f.g[1][0] * U(0) * V(1);
    total -= f.g[1][1] * U(0) * V(0);
    return total;
}

cdouble i6_a2a3_printed(const PureState& state) {
    require_four(state);
    const SexticFonts f(state);
    // Superscripts exactly as displayed in the source, including the
    // inconsistent ones; not unitary-invariant (see i6_a2a3).
    cdouble total = (f.g[0][0] * f.g[1][1] - f.g[0][1] * f.g[1][0]) * f.combo;
    total += f.g[0][1] *
             (a1_font(state, 1, 0, 0, 0) - a1_font(state, 1, 1, 0, 0)) *
             (a4_font(state, 0, 0, 0, 0) - a4_font(state, 0, 0, 0, 1));
    total -= f.g[0][0] *
             (a1_font(state, 1, 0, 0, 0) - a1_font(state, 1, 0, 1, 0)) *
             (a4_font(state, 1, 0, 0, 0) - a4_font(state, 1, 0, 1, 0));
    total += f.g[1][0] *
             (a1_font(state, 0, 0, 0, 0) - a1_font(state, 0, 0, 1, 0)) *
             (a4_font(state, 1, 0, 0, 0) - a4_font(state, 1, 0, 1, 0));
    total -= f.g[1][1] *
             (a1_font(state, 0, 0, 0, 0) - a1_font(state, 0, 0, 1, 0)) *
             (a4_font(state, 0, 0, 0, 0) - a4_font(state, 0, 1, 0, 0));
    return total;
}

InvariantReport full_report(const PureState& state) {
    require_four(state);
    InvariantReport rep;
    rep.t4 = t4(state);
    rep.t4_sq = rep.t4 * rep.t4;
    rep.tau4 = 4.0 * std::abs(rep.t4_sq);
    for (std::size_t i = 0; i < kPairOrder.size(); ++i) {
        rep.j4[i] = j4(state, kPairOrder[i][0], kPairOrder[i][1]);
        rep.beta4_pairs[i] = (4.0 / 3.0) * std::abs(rep.j4[i]);
    }
    double btotal = 0.0;
    for (double b : rep.beta4_pairs) btotal += b;
    rep.beta4 = btotal / 6.0;
    const Delta4Result d = delta4(state);
    rep.delta4_sum = d.sum;
    rep.delta4_avg = d.avg;
    rep.i6_a2a3 = i6_a2a3(state);
    rep.triples[0] = triple_invariants(state, 2, 3, 4);
    rep.triples[1] = triple_invariants(state, 3, 2, 4);
    rep.triples[2] = triple_invariants(state, 4, 2, 3);
    for (int p = 1; p <= 4; ++p) {
        rep.negativity_sq[p - 1] = negativity_sq_from_fonts(state, p);
    }

    constexpr double tol = 1e-10;
    const cdouble jmean = (rep.j4[0] + rep.j4[1] + rep.j4[2]) / 3.0;
    if (std::abs(rep.t4_sq - jmean) > tol) {
        rep.inconsistencies.push_back("T4^2 != (J12 + J13 + J14)/3");
    }
    for (const auto& tr : rep.triples) {
        const cdouble j = j4(state, 1, tr.pair_q);
        if (std::abs(j - (tr.i4 + tr.p3)) > tol) {
            rep.inconsistencies.push_back("J4(A1,A" + std::to_string(tr.pair_q) +
                                          ") != I4 + P3");
        }
        const cdouble recomb = 2.0 * (tr.i3_slice0 + tr.i3_slice1 - tr.i3_overall);
        if (std::abs(tr.p3 - recomb) > tol) {
            rep.inconsistencies.push_back("P3 recombination failed for pair A1A" +
                                          std::to_string(tr.pair_q));
        }
    }
    rep.consistent = rep.inconsistencies.empty();
    return rep;
}

} // namespace negfont
