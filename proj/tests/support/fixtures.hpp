#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hodge/arrangement.hpp"
#include "hodge/spectrum.hpp"

namespace hodge::testing {

using Rows = std::vector<std::vector<long>>;

// Coordinate hyperplanes in C^4.
inline const Rows kA1 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
// x1 x2 x3 (x1+x2+x3) x4.
inline const Rows kA3 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}};
// x1 x2 (x1+x2) · x3 x4 (x3+x4) (x3+2x4).
inline const Rows kA4 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0},
                         {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 2}};
// x1 x2 (x1+x2) x3 read in C^4.
inline const Rows kA2 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}};
// x1 x2 (x1+x2) x3 in C^3.
inline const Rows kA2rank3 = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
// Four generic planes in C^3.
inline const Rows kA5 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};

/// Builds a spectrum from (numerator, denominator, multiplicity) triples.
inline Spectrum make_spectrum(int ambient, int degree, const std::vector<std::tuple<long, long, long>>& terms) {
  Spectrum sp(ambient, degree);
  for (auto [p, q, n] : terms) sp.add(ratio(p, q), Integer(n));
  return sp;
}

}  // namespace hodge::testing
