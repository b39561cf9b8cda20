// invariants.hpp — polynomial local-unitary invariants of four-qubit pure
// states: the degree-2 four-way invariant T4 and four-tangle, the degree-4
// pair invariants J4 with their three-qubit constituents I4/P3/I3, the
// entanglement monotone beta4, the coherence residual Delta4, and a degree-6
// invariant for the (A2,A3) pair.
//
// Unless noted otherwise, fonts entering these formulas have qubit A1 as the
// transposed (row) qubit.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

// The eight four-way font determinants D^{0 i2 i3 i4}, keyed by (i2,i3,i4).
// Antisymmetry pairs them: d(~i2,~i3,~i4) = -d(i2,i3,i4).
struct FourWaySet {
    std::array<cdouble, 8> d{};
    cdouble at(int i2, int i3, int i4) const { return d[4 * i2 + 2 * i3 + i4]; }
};
FourWaySet fourway_determinants(const PureState& state);

// T4 = D^{0000} + D^{0011} - D^{0010} - D^{0001}
cdouble t4(const PureState& state);
// tau4 = 4 |T4^2|, in [0, 1]
double tau4(const PureState& state);

// J4 for an unordered qubit pair. Pairs containing A1 evaluate the direct
// formula (signed four-way combination squared, plus 8 x two-way font cross
// products, minus 4 x three-way difference products); the complementary pair
// has the same value by definition.
cdouble j4(const PureState& state, int qubit_a, int qubit_b);

struct Beta4Result {
    double beta4 = 0.0;
    // (pair_a, pair_b, beta) for the six unordered pairs, beta = (4/3)|J4|
    std::vector<std::array<double, 3>> pairs;
};
Beta4Result beta4(const PureState& state);

struct Delta4Result {
    double sum = 0.0; // sum_p (N_G^Ap)^2 - tau4
    double avg = 0.0; // (1/4) sum_p (N_G^Ap)^2 - tau4  (table normalization)
};
Delta4Result delta4(const PureState& state);

// Three-qubit subsystem invariants for pair (A1, q) with a mediator qubit r
// and the fourth qubit s sliced out. {q, r, s} must partition {A2, A3, A4}.
struct TripleInvariantSet {
    int pair_q = 0;
    int mediator = 0;
    int fixed = 0;
    cdouble i3_slice0, i3_slice1; // slice three-qubit invariants
    cdouble i3_overall;
    cdouble p3;                   // 2 I3_0 + 2 I3_1 - 2 I3_overall
    cdouble i4;                   // four-way combo^2 - 4 mediator-diff product
    double tau3_slice0 = 0.0;     // 4 |I3_slice|
    double tau3_slice1 = 0.0;
};
TripleInvariantSet triple_invariants(const PureState& state, int q, int mediator,
                                     int fixed);

// Degree-6 invariant of the (A2,A3) unitary pair, expressed in fonts of the
// partial transpose with respect to A2. i6_a2a3 uses the index-consistent
// reading (every three-way difference taken in the A3 index), which is
// unitary-invariant; i6_a2a3_printed keeps the inconsistent superscripts of
// the source display and is retained for comparison only.
cdouble i6_a2a3(const PureState& state);
cdouble i6_a2a3_printed(const PureState& state);

struct InvariantReport {
    cdouble t4;
    cdouble t4_sq;
    double tau4 = 0.0;
    // j4 for pairs (1,2),(1,3),(1,4),(2,3),(2,4),(3,4) in that order
    std::array<cdouble, 6> j4{};
    double beta4 = 0.0;
    std::array<double, 6> beta4_pairs{};
    double delta4_sum = 0.0;
    double delta4_avg = 0.0;
    cdouble i6_a2a3;
    // triples for (q,mediator,fixed) = (2,3,4), (3,2,4), (4,2,3)
    std::array<TripleInvariantSet, 3> triples;
    std::array<double, 4> negativity_sq{}; // per qubit, font sum
    bool consistent = true;                 // internal identities within 1e-10
    std::vector<std::string> inconsistencies;
};
InvariantReport full_report(const PureState& state);

// Order of pairs used by InvariantReport::j4 and beta4_pairs.
constexpr std::array<std::array<int, 2>, 6> kPairOrder{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

} // namespace negfont
