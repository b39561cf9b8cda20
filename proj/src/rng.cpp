#include "negfont/rng.hpp"

#include <cmath>

namespace negfont {

namespace {

// splitmix64; the whole generator, not just the seeder, so that streams are
// cheap to fork and the draw sequence is platform-independent.
std::uint64_t splitmix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    s_ = seed ^ 0x6a09e667f3bcc908ull;
    (void)splitmix(s_);
    s_ ^= stream * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull;
    (void)splitmix(s_);
}

std::uint64_t Rng::next() { return splitmix(s_); }

double Rng::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

cdouble Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

namespace {

// Ginibre + Gram-Schmidt with positive R diagonal: Haar on U(2).
std::array<cdouble, 4> haar_u2(Rng& rng) {
    while (true) {
        const cdouble g00 = rng.complex_normal();
        const cdouble g10 = rng.complex_normal();
        const cdouble g01 = rng.complex_normal();
        const cdouble g11 = rng.complex_normal();
        const double n0 = std::sqrt(std::norm(g00) + std::norm(g10));
        if (n0 < 1e-8) continue;
        const cdouble q00 = g00 / n0, q10 = g10 / n0;
        const cdouble proj = std::conj(q00) * g01 + std::conj(q10) * g11;
        const cdouble v0 = g01 - proj * q00;
        const cdouble v1 = g11 - proj * q10;
        const double n1 = std::sqrt(std::norm(v0) + std::norm(v1));
        if (n1 < 1e-8) continue;
        return {q00, v0 / n1, q10, v1 / n1};
    }
}

} // namespace

SingleQubitUnitary random_u2(std::uint64_t seed, std::uint64_t stream) {
    Rng rng(seed, stream);
    const auto q = haar_u2(rng);
    return {q[0], q[1], q[2], q[3]};
}

SingleQubitUnitary random_su2(std::uint64_t seed, std::uint64_t stream) {
    Rng rng(seed, stream);
    auto q = haar_u2(rng);
    const cdouble det = q[0] * q[3] - q[1] * q[2];
    const cdouble s = std::sqrt(det); // principal branch
    for (auto& e : q) e /= s;
    return {q[0], q[1], q[2], q[3]};
}

PureState random_state(int n_qubits, std::uint64_t seed, std::uint64_t stream) {
    Rng rng(seed, stream);
    std::vector<cdouble> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) a = rng.complex_normal();
    return PureState(n_qubits, std::move(amps));
}

} // namespace negfont
