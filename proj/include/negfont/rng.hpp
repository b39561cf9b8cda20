// rng.hpp — deterministic splittable randomness: Haar unitaries and random
// states for invariance sweeps and self-tests. A given (seed, stream) pair
// always yields the same draw, independent of call order elsewhere.

#pragma once

#include <cstdint>

#include "negfont/state.hpp"

namespace negfont {

class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();     // raw 64-bit
    double uniform();         // [0, 1)
    double normal();          // standard normal (Box-Muller)
    cdouble complex_normal(); // re, im independent N(0,1)

private:
    std::uint64_t s_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-distributed on SU(2): Ginibre sample, Gram-Schmidt, determinant phase
// divided out (principal branch).
SingleQubitUnitary random_su2(std::uint64_t seed, std::uint64_t stream);

// Haar on U(2) (no determinant fix).
SingleQubitUnitary random_u2(std::uint64_t seed, std::uint64_t stream);

// Normalized state with i.i.d. complex Gaussian amplitudes.
PureState random_state(int n_qubits, std::uint64_t seed, std::uint64_t stream);

} // namespace negfont
