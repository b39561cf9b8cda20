#include "negfont/catalog.hpp"

#include <cctype>
#include <cmath>

namespace negfont {

namespace {

PureState from_entries(const std::vector<std::pair<std::string, cdouble>>& entries) {
    return make_state(4, entries);
}

std::vector<double> parse_b_params(std::string_view name) {
    // "b(a,b,c,d)" with real decimal parameters
    const auto open = name.find('(');
    const auto close = name.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        close < open) {
        throw Error(Errc::bad_params, "expected b(a,b,c,d)");
    }
    std::vector<double> values;
    std::string token;
    for (char c : name.substr(open + 1, close - open - 1)) {
        if (c == ',') {
            if (token.empty()) throw Error(Errc::bad_params, "empty parameter");
            values.push_back(std::stod(token));
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    if (!token.empty()) values.push_back(std::stod(token));
    if (values.size() != 4) {
        throw Error(Errc::bad_params, "b preset takes exactly four parameters");
    }
    return values;
}

} // namespace

PureState preset_b(cdouble a, cdouble b, cdouble c, cdouble d) {
    const double norm2 = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (norm2 < 1e-24) {
        throw Error(Errc::bad_params, "b preset parameters have vanishing norm");
    }
    return from_entries({{"0000", a}, {"1100", b}, {"0011", c}, {"1111", d}});
}

PureState preset(std::string_view name) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s8 = 1.0 / std::sqrt(8.0);
    const cdouble w = std::polar(1.0, 2.0 * M_PI / 3.0);  // exp(2 pi i / 3)
    const cdouble w2 = std::polar(1.0, 4.0 * M_PI / 3.0); // exp(4 pi i / 3)

    if (name == "ghz") {
        return from_entries({{"0000", s2}, {"1111", s2}});
    }
    if (name == "state1") {
        return from_entries({{"0000", s8}, {"1111", s8}, {"0100", s8}, {"1011", -s8},
                             {"0010", s8}, {"1101", -s8}, {"0110", s8}, {"1001", s8}});
    }
    if (name == "chi") {
        return from_entries({{"0000", s8}, {"0011", -s8}, {"0110", s8}, {"0101", -s8},
                             {"1100", s8}, {"1111", s8}, {"1010", s8}, {"1001", s8}});
    }
    if (name == "chi_c") {
        return from_entries({{"0000", 0.5}, {"0111", -0.5}, {"1110", 0.5}, {"1001", 0.5}});
    }
    if (name == "hs") {
        return from_entries({{"0011", s6}, {"1100", s6},
                             {"1010", w * s6}, {"0101", w * s6},
                             {"1001", w2 * s6}, {"0110", w2 * s6}});
    }
    if (name == "c1") {
        return from_entries({{"0000", 0.5}, {"1100", 0.5}, {"0011", 0.5}, {"1111", -0.5}});
    }
    if (name == "c2") {
        return from_entries({{"0000", 0.5}, {"0110", 0.5}, {"1001", 0.5}, {"1111", -0.5}});
    }
    if (name == "c3") {
        return from_entries({{"0000", 0.5}, {"1010", 0.5}, {"0101", 0.5}, {"1111", -0.5}});
    }
    if (name == "phi") {
        return from_entries({{"0000", 0.5}, {"1101", 0.5},
                             {"1011", s8}, {"0011", s8}, {"0110", s8}, {"1110", -s8}});
    }
    if (name.rfind("b(", 0) == 0 || name == "b") {
        const auto v = parse_b_params(name);
        return preset_b(v[0], v[1], v[2], v[3]);
    }
    throw Error(Errc::unknown_preset, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
    return {"ghz", "state1", "b(a,b,c,d)", "chi", "chi_c", "hs", "c1", "c2", "c3", "phi"};
}

} // namespace negfont
