#pragma once

#include <map>
#include <string>

#include "hodge/rational.hpp"

namespace hodge {

/// Hodge spectrum Σ n_α t^α. Only nonzero multiplicities are stored, so two
/// spectra are equal iff their entry maps are equal.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(int ambient, int degree) : ambient_(ambient), degree_(degree) {}

  int ambient() const noexcept { return ambient_; }
  int degree() const noexcept { return degree_; }
  const std::map<Rational, Integer>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Multiplicity at alpha, 0 when absent.
  Integer at(const Rational& alpha) const;

  /// Adds `n` to the multiplicity at alpha, dropping the entry if it becomes 0.
  void add(const Rational& alpha, const Integer& n);

  Integer total() const;

  /// Multiplication by (-t)^k: α ↦ α + k, n ↦ (-1)^k n. k may be negative.
  Spectrum shifted(int k) const;

  /// "3t - 6t^2 + t^(3/4)" style rendering, for diagnostics.
  std::string to_polynomial_string() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.entries_ == b.entries_; }

 private:
  int ambient_ = 0;
  int degree_ = 0;
  std::map<Rational, Integer> entries_;
};

}  // namespace hodge
