#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

using IndexSet = std::vector<int>;  // sorted, no duplicates

/// A homogeneous linear form sum_j coeffs[j] * x_{j+1}.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::size_t dimension() const noexcept { return coeffs_.size(); }
  bool is_zero() const;

  /// Scaled so the first nonzero coefficient is 1. Requires !is_zero().
  LinearForm canonical() const;

  /// Appends `extra` zero coefficients.
  LinearForm padded(std::size_t extra) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs_ < b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Reduced central arrangement; forms are stored canonically.
class Arrangement {
 public:
  const std::vector<LinearForm>& forms() const noexcept { return forms_; }
  const LinearForm& form(int index) const { return forms_.at(static_cast<std::size_t>(index)); }
  int ambient() const noexcept { return ambient_; }
  int degree() const noexcept { return static_cast<int>(forms_.size()); }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  friend Arrangement validate_arrangement(std::vector<LinearForm> forms, int ambient);
  std::vector<LinearForm> forms_;
  int ambient_ = 0;
};

/// Canonicalizes the forms and checks the central/reduced hypotheses.
/// Throws EmptyArrangement, DimensionMismatch, ZeroForm or NotReduced.
Arrangement validate_arrangement(std::vector<LinearForm> forms, int ambient);

/// Convenience for tests and fixtures: integer coefficient rows.
Arrangement make_arrangement(const std::vector<std::vector<long>>& rows);

/// Rank of a rational matrix by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows);

/// Rank of the forms indexed by `subset`; 0 for the empty subset.
int rank_of(const Arrangement& arr, std::span<const int> subset);
int rank_of(const Arrangement& arr);

/// The same arrangement written in rank_of(arr) variables, and the number of
/// dropped variables n - rank.
std::pair<Arrangement, int> essentialize(const Arrangement& arr);

/// Appends `extra` unused variables to every form.
Arrangement pad_variables(const Arrangement& arr, int extra);

}  // namespace hodge
