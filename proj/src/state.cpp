#include "negfont/state.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace negfont {

void require_qubit(int n_qubits, int q) {
    if (q < 1 || q > n_qubits) {
        throw Error(Errc::qubit_out_of_range,
                    "qubit A" + std::to_string(q) + " is outside 1.." +
                        std::to_string(n_qubits));
    }
}

SingleQubitUnitary::SingleQubitUnitary(cdouble u00, cdouble u01, cdouble u10,
                                       cdouble u11)
    : u_{u00, u01, u10, u11} {
    if (unitarity_defect() > 1e-12) {
        throw Error(Errc::not_unitary, "matrix is not unitary within 1e-12");
    }
}

SingleQubitUnitary SingleQubitUnitary::dagger() const {
    return {std::conj(u_[0]), std::conj(u_[2]), std::conj(u_[1]), std::conj(u_[3])};
}

double SingleQubitUnitary::unitarity_defect() const {
    // U†U - I
    const cdouble g00 = std::conj(u_[0]) * u_[0] + std::conj(u_[2]) * u_[2] - 1.0;
    const cdouble g01 = std::conj(u_[0]) * u_[1] + std::conj(u_[2]) * u_[3];
    const cdouble g11 = std::conj(u_[1]) * u_[1] + std::conj(u_[3]) * u_[3] - 1.0;
    return std::max({std::abs(g00), std::abs(g01), std::abs(g11)});
}

PureState::PureState(int n_qubits, std::vector<cdouble> amplitudes) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw Error(Errc::wrong_arity, "qubit count " + std::to_string(n_qubits) +
                                           " outside supported range 2..10");
    }
    const std::size_t want = std::size_t{1} << n_qubits;
    if (amplitudes.size() != want) {
        throw Error(Errc::invalid_argument,
                    "amplitude vector has length " + std::to_string(amplitudes.size()) +
                        ", expected " + std::to_string(want));
    }
    double nrm2 = 0.0;
    for (const auto& a : amplitudes) nrm2 += std::norm(a);
    const double nrm = std::sqrt(nrm2);
    if (nrm < 1e-12) {
        throw Error(Errc::zero_state, "state has vanishing norm");
    }
    for (auto& a : amplitudes) a /= nrm;
    n_ = n_qubits;
    amps_ = std::move(amplitudes);
}

PureState PureState::unchecked(int n_qubits, std::vector<cdouble> amplitudes) {
    PureState s;
    s.n_ = n_qubits;
    s.amps_ = std::move(amplitudes);
    return s;
}

cdouble PureState::amplitude(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != n_) {
        throw Error(Errc::bad_bitstring, "bitstring length " +
                                             std::to_string(bits.size()) +
                                             " does not match qubit count");
    }
    std::uint32_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(Errc::bad_bitstring, "bitstring contains non-binary character");
        }
        idx = (idx << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return amps_[idx];
}

double PureState::norm() const {
    double nrm2 = 0.0;
    for (const auto& a : amps_) nrm2 += std::norm(a);
    return std::sqrt(nrm2);
}

bool PureState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

namespace {

std::uint32_t parse_bits(int n_qubits, std::string_view bits, int line) {
    if (static_cast<int>(bits.size()) != n_qubits) {
        if (line > 0) throw Error::parse(line, "bitstring '" + std::string(bits) + "' has wrong length");
        throw Error(Errc::bad_bitstring, "bitstring '" + std::string(bits) + "' has wrong length");
    }
    std::uint32_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            if (line > 0) throw Error::parse(line, "bitstring '" + std::string(bits) + "' has a non-binary character");
            throw Error(Errc::bad_bitstring, "bitstring '" + std::string(bits) + "' has a non-binary character");
        }
        idx = (idx << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return idx;
}

} // namespace

PureState make_state(int n_qubits,
                     const std::vector<std::pair<std::string, cdouble>>& entries) {
    if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
        throw Error(Errc::wrong_arity, "qubit count " + std::to_string(n_qubits) +
                                           " outside supported range 2..10");
    }
    std::vector<cdouble> amps(std::size_t{1} << n_qubits, cdouble{});
    std::set<std::uint32_t> seen;
    for (const auto& [bits, value] : entries) {
        const std::uint32_t idx = parse_bits(n_qubits, bits, 0);
        if (!seen.insert(idx).second) {
            throw Error(Errc::duplicate_index, "duplicate bitstring '" + bits + "'");
        }
        amps[idx] = value;
    }
    return PureState(n_qubits, std::move(amps));
}

PureState parse_state_text(std::string_view text) {
    std::vector<std::pair<std::uint32_t, cdouble>> entries;
    std::set<std::uint32_t> seen;
    int n_qubits = 0;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;      // blank
        if (first[0] == '#') continue;     // comment
        if (first == "qubits") {
            int n = 0;
            if (!(ls >> n) || n < kMinQubits || n > kMaxQubits) {
                throw Error::parse(line_no, "invalid qubit declaration");
            }
            if (n_qubits != 0 && n != n_qubits) {
                throw Error::parse(line_no, "conflicting qubit declaration");
            }
            n_qubits = n;
            continue;
        }
        if (n_qubits == 0) {
            n_qubits = static_cast<int>(first.size());
            if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
                throw Error::parse(line_no, "cannot infer a qubit count in 2..10 from '" + first + "'");
            }
        }
        const std::uint32_t idx = parse_bits(n_qubits, first, line_no);
        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im)) {
            throw Error::parse(line_no, "expected 'BITS RE IM'");
        }
        std::string extra;
        if (ls >> extra) {
            throw Error::parse(line_no, "trailing token '" + extra + "'");
        }
        if (!seen.insert(idx).second) {
            throw Error::parse(line_no, "duplicate bitstring '" + first + "'");
        }
        entries.emplace_back(idx, cdouble{re, im});
    }
    if (n_qubits == 0) {
        throw Error(Errc::zero_state, "no data lines in state text");
    }
    std::vector<cdouble> amps(std::size_t{1} << n_qubits, cdouble{});
    for (const auto& [idx, v] : entries) amps[idx] = v;
    return PureState(n_qubits, std::move(amps));
}

std::string serialize_state_text(const PureState& state) {
    std::string out = "qubits " + std::to_string(state.qubits()) + "\n";
    char buf[80];
    const int n = state.qubits();
    for (std::uint32_t idx = 0; idx < state.dim(); ++idx) {
        const cdouble a = state.amplitude(idx);
        if (a == cdouble{}) continue;
        std::string bits(n, '0');
        for (int q = 1; q <= n; ++q) {
            bits[q - 1] = static_cast<char>('0' + index_bit(idx, n, q));
        }
        std::snprintf(buf, sizeof buf, " %.17g %.17g\n", a.real(), a.imag());
        out += bits;
        out += buf;
    }
    return out;
}

PureState load_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw Error(Errc::io_error, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_state_text(ss.str());
}

PureState apply_single_qubit_unitary(const PureState& state, int q,
                                     const SingleQubitUnitary& u) {
    require_qubit(state.qubits(), q);
    const std::uint32_t pm = qubit_mask(state.qubits(), q);
    const auto& a = state.amplitudes();
    std::vector<cdouble> out(a.size());
    for (std::uint32_t idx = 0; idx < a.size(); ++idx) {
        if (idx & pm) continue;
        const cdouble a0 = a[idx];
        const cdouble a1 = a[idx | pm];
        out[idx] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
        out[idx | pm] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
    return PureState(state.qubits(), std::move(out));
}

PureState permute_qubits(const PureState& state, const std::vector<int>& perm) {
    const int n = state.qubits();
    if (static_cast<int>(perm.size()) != n) {
        throw Error(Errc::not_a_permutation, "permutation has wrong length");
    }
    std::vector<bool> hit(n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || hit[v]) {
            throw Error(Errc::not_a_permutation, "not a permutation of 1.." + std::to_string(n));
        }
        hit[v] = true;
    }
    const auto& a = state.amplitudes();
    std::vector<cdouble> out(a.size());
    for (std::uint32_t idx = 0; idx < a.size(); ++idx) {
        // qubit perm[m-1] of the image carries bit m of idx
        std::uint32_t dst = 0;
        for (int m = 1; m <= n; ++m) {
            if (index_bit(idx, n, m)) dst |= qubit_mask(n, perm[m - 1]);
        }
        out[dst] = a[idx];
    }
    return PureState(n, std::move(out));
}

std::array<cdouble, 8> slice_on_qubit(const PureState& state, int s, int value) {
    if (state.qubits() != 4) {
        throw Error(Errc::wrong_arity, "slice_on_qubit requires a 4-qubit state");
    }
    require_qubit(4, s);
    if (value != 0 && value != 1) {
        throw Error(Errc::invalid_argument, "slice value must be 0 or 1");
    }
    std::array<cdouble, 8> out{};
    std::array<int, 3> rest{};
    int k = 0;
    for (int q = 1; q <= 4; ++q) {
        if (q != s) rest[k++] = q;
    }
    for (std::uint32_t c = 0; c < 8; ++c) {
        std::uint32_t idx = value ? qubit_mask(4, s) : 0;
        for (int m = 0; m < 3; ++m) {
            if ((c >> (2 - m)) & 1u) idx |= qubit_mask(4, rest[m]);
        }
        out[c] = state.amplitude(idx);
    }
    return out;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ok: return "ok";
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::zero_state: return "zero_state";
        case Errc::bad_bitstring: return "bad_bitstring";
        case Errc::duplicate_index: return "duplicate_index";
        case Errc::parse_error: return "parse_error";
        case Errc::qubit_out_of_range: return "qubit_out_of_range";
        case Errc::not_a_permutation: return "not_a_permutation";
        case Errc::wrong_arity: return "wrong_arity";
        case Errc::overlapping_sets: return "overlapping_sets";
        case Errc::incomplete_assignment: return "incomplete_assignment";
        case Errc::same_qubit: return "same_qubit";
        case Errc::not_unitary: return "not_unitary";
        case Errc::not_hermitian: return "not_hermitian";
        case Errc::no_convergence: return "no_convergence";
        case Errc::bad_k: return "bad_k";
        case Errc::unknown_quantity: return "unknown_quantity";
        case Errc::degenerate_fonts: return "degenerate_fonts";
        case Errc::unknown_preset: return "unknown_preset";
        case Errc::bad_params: return "bad_params";
        case Errc::non_finite: return "non_finite";
        case Errc::bad_pair: return "bad_pair";
        case Errc::bad_roles: return "bad_roles";
        case Errc::io_error: return "io_error";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

} // namespace negfont
