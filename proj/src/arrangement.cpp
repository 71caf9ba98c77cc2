#include "hodge/arrangement.hpp"

#include <algorithm>
#include <string>

namespace hodge {

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

LinearForm LinearForm::canonical() const {
  auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q != 0; });
  const Rational scale = *lead;
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) {
    Rational r = q / scale;
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return LinearForm(std::move(out));
}

LinearForm LinearForm::padded(std::size_t extra) const {
  auto out = coeffs_;
  out.resize(coeffs_.size() + extra, Rational(0));
  return LinearForm(std::move(out));
}

Arrangement validate_arrangement(std::vector<LinearForm> forms, int ambient) {
  if (forms.empty()) throw Error(ErrorCode::EmptyArrangement, "no linear forms given");
  if (ambient < 1) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be positive");

  Arrangement arr;
  arr.ambient_ = ambient;
  arr.forms_.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].dimension() != static_cast<std::size_t>(ambient))
      throw Error(ErrorCode::DimensionMismatch,
                  "form " + std::to_string(i) + " has " + std::to_string(forms[i].dimension()) +
                      " coefficients, expected " + std::to_string(ambient));
    if (forms[i].is_zero()) throw Error(ErrorCode::ZeroForm, "form " + std::to_string(i) + " is identically zero");
    arr.forms_.push_back(forms[i].canonical());
  }

  std::vector<std::size_t> order(arr.forms_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return arr.forms_[a] < arr.forms_[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (arr.forms_[order[k - 1]] == arr.forms_[order[k]]) {
      auto [lo, hi] = std::minmax(order[k - 1], order[k]);
      throw Error(ErrorCode::NotReduced,
                  "forms " + std::to_string(lo) + " and " + std::to_string(hi) + " are proportional");
    }
  }
  return arr;
}

Arrangement make_arrangement(const std::vector<std::vector<long>>& rows) {
  std::vector<LinearForm> forms;
  for (const auto& row : rows) {
    std::vector<Rational> coeffs;
    for (long v : row) coeffs.emplace_back(v);
    forms.emplace_back(std::move(coeffs));
  }
  const int n = rows.empty() ? 1 : static_cast<int>(rows.front().size());
  return validate_arrangement(std::move(forms), n);
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  return static_cast<int>(rref(rows).size());
}

int rank_of(const Arrangement& arr, std::span<const int> subset) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(subset.size());
  for (int idx : subset) {
    if (idx < 0 || idx >= arr.degree())
      throw Error(ErrorCode::IndexOutOfRange, "hyperplane index " + std::to_string(idx) + " out of range");
    rows.push_back(arr.form(idx).coeffs());
  }
  return matrix_rank(std::move(rows));
}

int rank_of(const Arrangement& arr) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : arr.forms()) rows.push_back(f.coeffs());
  return matrix_rank(std::move(rows));
}

std::pair<Arrangement, int> essentialize(const Arrangement& arr) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : arr.forms()) rows.push_back(f.coeffs());
  const auto pivots = rref(rows);
  const int rank = static_cast<int>(pivots.size());
  if (rank == arr.ambient()) return {arr, 0};

  // The pivot columns of the row space are independent, so projecting onto
  // them is injective on the span of the forms.
  std::vector<LinearForm> restricted;
  for (const auto& f : arr.forms()) {
    std::vector<Rational> coeffs;
    for (auto col : pivots) coeffs.push_back(f.coeffs()[col]);
    restricted.emplace_back(std::move(coeffs));
  }
  return {validate_arrangement(std::move(restricted), rank), arr.ambient() - rank};
}

Arrangement pad_variables(const Arrangement& arr, int extra) {
  std::vector<LinearForm> forms;
  for (const auto& f : arr.forms()) forms.push_back(f.padded(static_cast<std::size_t>(extra)));
  return validate_arrangement(std::move(forms), arr.ambient() + extra);
}

}  // namespace hodge
