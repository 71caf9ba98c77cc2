#include "hodge/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hodge {

bool Flat::contains(const Flat& other) const {
  return std::includes(other.hyperplanes.begin(), other.hyperplanes.end(), hyperplanes.begin(),
                       hyperplanes.end());
}

const std::vector<Flat>& Lattice::codim(int k) const {
  static const std::vector<Flat> empty;
  if (k < 0 || k >= static_cast<int>(levels.size())) return empty;
  return levels[static_cast<std::size_t>(k)];
}

std::size_t Lattice::size() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.size();
  return n;
}

IndexSet closure(const Arrangement& arr, std::span<const int> subset) {
  IndexSet base(subset.begin(), subset.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  const int r = rank_of(arr, base);

  IndexSet out;
  IndexSet probe = base;
  probe.push_back(0);
  for (int l = 0; l < arr.degree(); ++l) {
    if (std::binary_search(base.begin(), base.end(), l)) {
      out.push_back(l);
      continue;
    }
    probe.back() = l;
    if (rank_of(arr, probe) == r) out.push_back(l);
  }
  return out;
}

Lattice build_lattice(const Arrangement& arr) {
  Lattice lattice;
  lattice.levels.push_back({Flat{{}, 0}});
  for (int k = 0;; ++k) {
    std::set<IndexSet> next;
    for (const auto& flat : lattice.levels[static_cast<std::size_t>(k)]) {
      IndexSet grown = flat.hyperplanes;
      grown.push_back(0);
      for (int l = 0; l < arr.degree(); ++l) {
        if (std::binary_search(flat.hyperplanes.begin(), flat.hyperplanes.end(), l)) continue;
        grown.back() = l;
        next.insert(closure(arr, grown));
      }
    }
    if (next.empty()) break;
    std::vector<Flat> level;
    level.reserve(next.size());
    for (const auto& hs : next) level.push_back(Flat{hs, k + 1});
    lattice.levels.push_back(std::move(level));
  }
  return lattice;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<IndexSet> matroid_components(const Arrangement& arr, std::span<const int> ground) {
  const std::size_t g = ground.size();
  std::vector<std::size_t> basis;  // positions into ground
  IndexSet basis_idx;
  for (std::size_t pos = 0; pos < g; ++pos) {
    basis_idx.push_back(ground[pos]);
    if (rank_of(arr, basis_idx) == static_cast<int>(basis_idx.size())) {
      basis.push_back(pos);
    } else {
      basis_idx.pop_back();
    }
  }

  DisjointSets sets(g);
  const int r = static_cast<int>(basis.size());
  for (std::size_t pos = 0; pos < g; ++pos) {
    if (std::find(basis.begin(), basis.end(), pos) != basis.end()) continue;
    // Fundamental circuit of ground[pos]: the basis elements it can replace.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      IndexSet swapped = basis_idx;
      swapped[k] = ground[pos];
      if (rank_of(arr, swapped) == r) sets.unite(static_cast<int>(pos), static_cast<int>(basis[k]));
    }
  }

  std::vector<IndexSet> components;
  std::vector<int> slot(g, -1);
  for (std::size_t pos = 0; pos < g; ++pos) {
    const int root = sets.find(static_cast<int>(pos));
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(s)].push_back(ground[pos]);
  }
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  return components;
}

bool decomposable_by_partition(const Arrangement& arr, std::span<const int> ground) {
  const std::size_t g = ground.size();
  if (g < 2) return false;
  const int whole = rank_of(arr, ground);
  // Element 0 always sits in the first part; that enumerates each split once.
  const unsigned long limit = 1ul << (g - 1);
  for (unsigned long mask = 0; mask + 1 < limit; ++mask) {
    IndexSet first{ground[0]}, second;
    for (std::size_t k = 1; k < g; ++k) {
      if (mask & (1ul << (k - 1)))
        first.push_back(ground[k]);
      else
        second.push_back(ground[k]);
    }
    if (rank_of(arr, first) + rank_of(arr, second) == whole) return true;
  }
  return false;
}

bool is_dense(const Arrangement& arr, const Flat& flat) {
  if (flat.hyperplanes.empty()) return false;
  return matroid_components(arr, flat.hyperplanes).size() == 1;
}

std::string_view to_string(EdgePolicy policy) {
  switch (policy) {
    case EdgePolicy::Dense: return "dense";
    case EdgePolicy::Nnc: return "nnc";
    case EdgePolicy::All: return "all";
  }
  return "dense";
}

EdgePolicy parse_edge_policy(std::string_view text) {
  if (text == "dense") return EdgePolicy::Dense;
  if (text == "nnc") return EdgePolicy::Nnc;
  if (text == "all") return EdgePolicy::All;
  throw Error(ErrorCode::ParseError, "unknown edge policy '" + std::string(text) + "'");
}

void LatticeSummary::link() {
  containments.assign(edges2.size(), {});
  for (std::size_t v = 0; v < edges2.size(); ++v)
    for (std::size_t w = 0; w < edges3.size(); ++w)
      if (edges2[v].contains(edges3[w]) && edges2[v].hyperplanes != edges3[w].hyperplanes)
        containments[v].push_back(static_cast<int>(w));
}

bool LatticeSummary::contains(int v, int w) const {
  const auto& list = containments.at(static_cast<std::size_t>(v));
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool is_nnc(const Flat& flat) {
  return (flat.codim == 2 && flat.multiplicity() >= 3) || (flat.codim == 3 && flat.multiplicity() >= 4);
}

LatticeSummary lattice_summary(const Arrangement& arr, const Lattice& lattice, EdgePolicy policy) {
  if (lattice.rank() > 4)
    throw Error(ErrorCode::RankTooHigh, "essential rank " + std::to_string(lattice.rank()) + " exceeds 4");
  auto keep = [&](const Flat& f) {
    // The origin is not an edge of the projectivized arrangement.
    if (f.codim >= arr.ambient()) return false;
    switch (policy) {
      case EdgePolicy::Dense: return is_dense(arr, f);
      case EdgePolicy::Nnc: return is_nnc(f);
      case EdgePolicy::All: return true;
    }
    return false;
  };
  LatticeSummary s;
  s.degree = arr.degree();
  s.policy = policy;
  for (const auto& f : lattice.codim(2))
    if (keep(f)) s.edges2.push_back(f);
  for (const auto& f : lattice.codim(3))
    if (keep(f)) s.edges3.push_back(f);
  s.link();
  return s;
}

LatticeSummary lattice_summary(const Arrangement& arr, EdgePolicy policy) {
  if (rank_of(arr) > 4) throw Error(ErrorCode::RankTooHigh, "essential rank exceeds 4");
  return lattice_summary(arr, build_lattice(arr), policy);
}

std::vector<std::vector<Integer>> mobius_values(const Lattice& lattice) {
  std::vector<std::vector<Integer>> mu(lattice.levels.size());
  for (std::size_t k = 0; k < lattice.levels.size(); ++k) {
    mu[k].resize(lattice.levels[k].size());
    for (std::size_t x = 0; x < lattice.levels[k].size(); ++x) {
      if (k == 0) {
        mu[k][x] = 1;
        continue;
      }
      const Flat& top = lattice.levels[k][x];
      Integer sum = 0;
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t y = 0; y < lattice.levels[j].size(); ++y)
          if (lattice.levels[j][y].contains(top)) sum += mu[j][y];
      mu[k][x] = -sum;
    }
  }
  return mu;
}

std::vector<Integer> poincare_polynomial(const Lattice& lattice) {
  const auto mu = mobius_values(lattice);
  std::vector<Integer> coeffs(lattice.levels.size());
  for (std::size_t k = 0; k < mu.size(); ++k)
    for (const auto& m : mu[k]) coeffs[k] += abs(m);
  return coeffs;
}

Integer proj_complement_euler(const Arrangement& arr) {
  const auto p = poincare_polynomial(build_lattice(arr));
  // Divide by (1 + t); the remainder π(-1) vanishes for any nonempty arrangement.
  const std::size_t r = p.size() - 1;
  std::vector<Integer> q(r);
  Integer carry = 0;
  for (std::size_t k = r; k >= 1; --k) {
    q[k - 1] = p[k] - carry;
    carry = q[k - 1];
  }
  if (p[0] - carry != 0) throw std::logic_error("Poincare polynomial not divisible by 1 + t");
  Integer value = 0;
  for (std::size_t k = 0; k < q.size(); ++k) value += (k % 2 == 0) ? q[k] : Integer(-q[k]);
  return value;
}

}  // namespace hodge
