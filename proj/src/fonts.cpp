#include "negfont/fonts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace negfont {

cdouble font_det_label(const PureState& state, int p, std::uint32_t flip_mask,
                       std::uint32_t label) {
    const int n = state.qubits();
    require_qubit(n, p);
    const std::uint32_t pm = qubit_mask(n, p);
    if (!(flip_mask & pm)) {
        throw Error(Errc::overlapping_sets, "flip mask must contain the transposed qubit");
    }
    const auto& a = state.amplitudes();
    return a[label] * a[label ^ flip_mask] - a[label ^ pm] * a[label ^ flip_mask ^ pm];
}

cdouble font_det(const PureState& state, int p,
                 const std::vector<std::pair<int, int>>& flipped_base,
                 const std::vector<std::pair<int, int>>& fixed_bits) {
    const int n = state.qubits();
    require_qubit(n, p);
    if (flipped_base.empty()) {
        throw Error(Errc::incomplete_assignment, "flipped set must be nonempty");
    }
    std::uint32_t flip = qubit_mask(n, p);
    std::uint32_t label = 0;
    std::uint32_t covered = qubit_mask(n, p);
    for (const auto& [q, bit] : flipped_base) {
        require_qubit(n, q);
        const std::uint32_t m = qubit_mask(n, q);
        if (covered & m) {
            throw Error(Errc::overlapping_sets,
                        "qubit A" + std::to_string(q) + " assigned more than once");
        }
        covered |= m;
        flip |= m;
        if (bit) label |= m;
    }
    for (const auto& [q, bit] : fixed_bits) {
        require_qubit(n, q);
        const std::uint32_t m = qubit_mask(n, q);
        if (covered & m) {
            throw Error(Errc::overlapping_sets,
                        "qubit A" + std::to_string(q) + " assigned more than once");
        }
        covered |= m;
        if (bit) label |= m;
    }
    if (covered != (std::uint32_t{1} << n) - 1) {
        throw Error(Errc::incomplete_assignment, "assignments do not cover every qubit");
    }
    return font_det_label(state, p, flip, label);
}

namespace {

// Insert the p-bit into a complement index (bits of the other qubits in qubit
// order) to form a full basis index.
std::uint32_t with_pbit(std::uint32_t comp, int n, int p, int pbit) {
    const int pos = bit_position(n, p);
    const std::uint32_t low = comp & ((std::uint32_t{1} << pos) - 1);
    const std::uint32_t high = comp >> pos;
    return (high << (pos + 1)) | (static_cast<std::uint32_t>(pbit) << pos) | low;
}

std::string comp_bits(std::uint32_t comp, int n) {
    std::string out(static_cast<std::size_t>(n - 1), '0');
    for (int b = 0; b < n - 1; ++b) {
        if ((comp >> (n - 2 - b)) & 1u) out[b] = '1';
    }
    return out;
}

} // namespace

std::vector<FontRecord> enumerate_fonts(const PureState& state, int p, double min_abs) {
    const int n = state.qubits();
    require_qubit(n, p);
    const auto& a = state.amplitudes();
    const std::uint32_t half = std::uint32_t{1} << (n - 1);
    std::vector<FontRecord> out;
    for (std::uint32_t i = 0; i < half; ++i) {
        for (std::uint32_t j = i + 1; j < half; ++j) {
            const cdouble det = a[with_pbit(i, n, p, 0)] * a[with_pbit(j, n, p, 1)] -
                                a[with_pbit(i, n, p, 1)] * a[with_pbit(j, n, p, 0)];
            if (std::abs(det) <= min_abs) continue;
            FontRecord rec;
            rec.transposed_qubit = p;
            rec.left_index = comp_bits(i, n);
            rec.right_index = comp_bits(j, n);
            rec.k_value = 1 + std::popcount(i ^ j);
            rec.det = det;
            out.push_back(std::move(rec));
        }
    }
    std::sort(out.begin(), out.end(), [](const FontRecord& x, const FontRecord& y) {
        if (x.k_value != y.k_value) return x.k_value < y.k_value;
        if (x.left_index != y.left_index) return x.left_index < y.left_index;
        return x.right_index < y.right_index;
    });
    return out;
}

double negativity_sq_from_fonts(const PureState& state, int p) {
    const int n = state.qubits();
    require_qubit(n, p);
    const auto& a = state.amplitudes();
    const std::uint32_t half = std::uint32_t{1} << (n - 1);
    double sum = 0.0;
    for (std::uint32_t i = 0; i < half; ++i) {
        for (std::uint32_t j = i + 1; j < half; ++j) {
            const cdouble det = a[with_pbit(i, n, p, 0)] * a[with_pbit(j, n, p, 1)] -
                                a[with_pbit(i, n, p, 1)] * a[with_pbit(j, n, p, 0)];
            sum += std::norm(det);
        }
    }
    return 4.0 * sum;
}

std::string font_label(const FontRecord& rec, int n_qubits) {
    // Flipped set: the transposed qubit plus every position where the
    // complement indices differ. Superscript = left-column bits of the flipped
    // qubits (transposed qubit at 0), subscript = fixed qubits with their bits.
    const int n = n_qubits;
    const int p = rec.transposed_qubit;
    std::string sup, sub;
    int ci = 0;
    for (int q = 1; q <= n; ++q) {
        if (q == p) {
            sup += '0';
            continue;
        }
        const char l = rec.left_index[ci];
        const char r = rec.right_index[ci];
        ++ci;
        if (l != r) {
            sup += l;
        } else {
            sub += "(A" + std::to_string(q) + ")" + l;
        }
    }
    std::string out = "D";
    if (!sub.empty()) out += "_{" + sub + "}";
    out += "^{" + sup + "}";
    return out;
}

PairFonts pair_fonts(const PureState& state, int p, int q,
                     const std::vector<std::pair<int, int>>& rest) {
    const int n = state.qubits();
    require_qubit(n, p);
    require_qubit(n, q);
    if (p == q) {
        throw Error(Errc::same_qubit, "p and q must differ");
    }
    std::uint32_t covered = qubit_mask(n, p) | qubit_mask(n, q);
    std::uint32_t rest_bits = 0;
    for (const auto& [r, bit] : rest) {
        require_qubit(n, r);
        const std::uint32_t m = qubit_mask(n, r);
        if (covered & m) {
            throw Error(Errc::overlapping_sets,
                        "qubit A" + std::to_string(r) + " assigned more than once");
        }
        covered |= m;
        if (bit) rest_bits |= m;
    }
    if (covered != (std::uint32_t{1} << n) - 1) {
        throw Error(Errc::incomplete_assignment, "rest assignment must cover the other qubits");
    }
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    const std::uint32_t qm = qubit_mask(n, q);
    PairFonts f;
    f.d0 = font_det_label(state, p, all, rest_bits);
    f.d1 = font_det_label(state, p, all, rest_bits | qm);
    f.e0 = font_det_label(state, p, all & ~qm, rest_bits);
    f.e1 = font_det_label(state, p, all & ~qm, rest_bits | qm);
    return f;
}

PairInvariantSet pair_invariants_mtip(const PureState& state, int p, int q,
                                      const std::vector<std::pair<int, int>>& rest) {
    const PairFonts f = pair_fonts(state, p, q, rest);
    PairInvariantSet s;
    s.qubit_p = p;
    s.qubit_q = q;
    s.rest = rest;
    s.m = std::norm(f.d0) + std::norm(f.d1) + std::norm(f.e0) + std::norm(f.e1);
    s.t = f.d0 - f.d1;
    s.i = (f.d0 + f.d1) * (f.d0 + f.d1) - 4.0 * f.e0 * f.e1;
    s.p = f.d0 * f.d1 - f.e0 * f.e1;
    return s;
}

} // namespace negfont
