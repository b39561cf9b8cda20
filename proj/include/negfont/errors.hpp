// errors.hpp — error codes and the exception type thrown by the core library.

#pragma once

#include <stdexcept>
#include <string>

namespace negfont {

// Stable codes; the C API exposes the same numbering.
enum class Errc : int {
    ok = 0,
    invalid_argument = 1,
    zero_state = 2,
    bad_bitstring = 3,
    duplicate_index = 4,
    parse_error = 5,
    qubit_out_of_range = 6,
    not_a_permutation = 7,
    wrong_arity = 8,
    overlapping_sets = 9,
    incomplete_assignment = 10,
    same_qubit = 11,
    not_unitary = 12,
    not_hermitian = 13,
    no_convergence = 14,
    bad_k = 15,
    unknown_quantity = 16,
    degenerate_fonts = 17,
    unknown_preset = 18,
    bad_params = 19,
    non_finite = 20,
    bad_pair = 21,
    bad_roles = 22,
    io_error = 23,
    internal = 24,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    // Parse failures carry the 1-based line number of the offending line.
    static Error parse(int line, const std::string& message) {
        Error e(Errc::parse_error, "line " + std::to_string(line) + ": " + message);
        e.line_ = line;
        return e;
    }

    Errc code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    Errc code_;
    int line_ = 0;
};

} // namespace negfont
