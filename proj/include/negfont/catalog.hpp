// catalog.hpp — the preset four-qubit states the report tables are built from.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

// Names: ghz, state1, chi, chi_c, hs, c1, c2, c3, phi, and the parametric
// b(a,b,c,d) with real parameters. Throws unknown_preset / bad_params.
PureState preset(std::string_view name);

// a|0000> + b|1100> + c|0011> + d|1111>, normalized; zero norm is bad_params.
PureState preset_b(cdouble a, cdouble b, cdouble c, cdouble d);

std::vector<std::string> preset_names();

} // namespace negfont
