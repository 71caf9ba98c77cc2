#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hodge/arrangement.hpp"
#include "hodge/lattice.hpp"
#include "hodge/spectrum.hpp"

namespace hodge::io {

using Json = nlohmann::ordered_json;

/// One hyperplane per line, whitespace-separated rationals ("3", "-1/2");
/// '#' starts a comment, blank lines are skipped. Throws ParseError on
/// malformed numbers or ragged rows, plus the validation errors.
Arrangement parse_arrangement(std::string_view text);

/// Inverse of parse_arrangement on canonical forms.
std::string format_arrangement(const Arrangement& arr);

/// "alpha n" per line, alpha ascending.
std::string spectrum_text(const Spectrum& sp);
Json spectrum_json(const Spectrum& sp);

std::string lattice_text(const Lattice& lattice);
Json lattice_json(const Arrangement& arr, const Lattice& lattice);

/// Codim ≥ 2 flats with their dense / nnc flags.
std::string dense_text(const Arrangement& arr, const Lattice& lattice);
Json dense_json(const Arrangement& arr, const Lattice& lattice);

}  // namespace hodge::io
