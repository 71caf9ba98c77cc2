#pragma once

#include <string_view>
#include <vector>

#include "hodge/arrangement.hpp"

namespace hodge {

/// An edge of the arrangement, identified by the closed set of hyperplanes
/// containing it.
struct Flat {
  IndexSet hyperplanes;
  int codim = 0;

  int multiplicity() const noexcept { return static_cast<int>(hyperplanes.size()); }

  /// Subspace containment: this ⊇ other.
  bool contains(const Flat& other) const;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// All flats grouped by codimension; levels[0] holds the ambient space only.
struct Lattice {
  std::vector<std::vector<Flat>> levels;

  int rank() const noexcept { return static_cast<int>(levels.size()) - 1; }
  const std::vector<Flat>& codim(int k) const;
  std::size_t size() const;
};

/// {l : rank(S ∪ {l}) = rank(S)}.
IndexSet closure(const Arrangement& arr, std::span<const int> subset);

Lattice build_lattice(const Arrangement& arr);

/// Connected components of the matroid of the forms in `ground` (as index
/// sets into the arrangement), from the fundamental circuits of a greedy basis.
std::vector<IndexSet> matroid_components(const Arrangement& arr, std::span<const int> ground);

/// Exhaustive check for a split P1 ⊔ P2 with rank(P1) + rank(P2) = rank(ground).
/// Exponential; intended for cross-checking |ground| ≤ 12.
bool decomposable_by_partition(const Arrangement& arr, std::span<const int> ground);

bool is_dense(const Arrangement& arr, const Flat& flat);

enum class EdgePolicy { Dense, Nnc, All };

std::string_view to_string(EdgePolicy policy);
EdgePolicy parse_edge_policy(std::string_view text);

/// Codimension 2 and 3 edges selected by a policy, plus their containments.
struct LatticeSummary {
  int degree = 0;
  EdgePolicy policy = EdgePolicy::Dense;
  std::vector<Flat> edges2;
  std::vector<Flat> edges3;
  /// containments[v] lists the indices w into edges3 with edges3[w] ⊂ edges2[v].
  std::vector<std::vector<int>> containments;

  /// Recomputes containments from the hyperplane sets.
  void link();
  bool contains(int v, int w) const;
};

/// Flats of codimension equal to the ambient dimension (the origin) are
/// never edges. Throws RankTooHigh if rank_of(arr) > 4.
LatticeSummary lattice_summary(const Arrangement& arr, EdgePolicy policy);
LatticeSummary lattice_summary(const Arrangement& arr, const Lattice& lattice, EdgePolicy policy);

/// Whether a flat belongs to the non-normal-crossing locus: codim 2 with
/// m ≥ 3 or codim 3 with m ≥ 4.
bool is_nnc(const Flat& flat);

/// Möbius values μ(ambient, X), aligned with lattice.levels.
std::vector<std::vector<Integer>> mobius_values(const Lattice& lattice);

/// Coefficients of the characteristic-type polynomial Σ_X |μ(X)| t^{codim X}.
std::vector<Integer> poincare_polynomial(const Lattice& lattice);

/// Euler characteristic of the projectivized complement.
Integer proj_complement_euler(const Arrangement& arr);

}  // namespace hodge
