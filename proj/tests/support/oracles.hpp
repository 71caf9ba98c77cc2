#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the lattice, formula or ring code beyond reading a summary.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "hodge/arrangement.hpp"
#include "hodge/chow.hpp"
#include "hodge/formulas.hpp"
#include "hodge/lattice.hpp"
#include "hodge/spectrum.hpp"

namespace hodge::testing {

/// Plain falling-factorial binomial, written separately from gbinom.
inline Integer binom_ref(const Integer& t, int k) {
  Rational acc = 1;
  for (int j = 0; j < k; ++j) acc *= Rational(t - j) / (j + 1);
  return acc.get_num();
}

// ---------------------------------------------------------------------------
// Rank by largest nonvanishing minor.

inline Rational determinant_ref(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational sub = determinant_ref(std::move(minor));
    total += (col % 2 == 0 ? m[0][col] : Rational(-m[0][col])) * sub;
  }
  return total;
}

inline void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

inline int minor_rank(const Arrangement& arr, const std::vector<int>& rows) {
  const int n = arr.ambient();
  for (int k = std::min<int>(static_cast<int>(rows.size()), n); k > 0; --k) {
    bool found = false;
    for_each_combination(static_cast<int>(rows.size()), k, [&](const std::vector<int>& rsel) {
      if (found) return;
      for_each_combination(n, k, [&](const std::vector<int>& csel) {
        if (found) return;
        std::vector<std::vector<Rational>> m;
        for (int r : rsel) {
          std::vector<Rational> row;
          for (int c : csel) row.push_back(arr.form(rows[static_cast<std::size_t>(r)]).coeffs()[static_cast<std::size_t>(c)]);
          m.push_back(std::move(row));
        }
        if (determinant_ref(std::move(m)) != 0) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Whitney's formula: π(t) = Σ_S (-1)^|S| (-t)^rank(S) over all subsets.

inline std::vector<Integer> whitney_poincare(const Arrangement& arr) {
  const int d = arr.degree();
  std::vector<Integer> coeffs(static_cast<std::size_t>(arr.ambient() + 1), 0);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> subset;
    for (int l = 0; l < d; ++l)
      if (mask & (1u << l)) subset.push_back(l);
    const int r = minor_rank(arr, subset);
    const int sign = ((subset.size() + static_cast<std::size_t>(r)) % 2 == 0) ? 1 : -1;
    coeffs[static_cast<std::size_t>(r)] += sign;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

// ---------------------------------------------------------------------------
// Closed forms for decomposable arrangements in C^4.

/// f1(x1,x2,x3)·x4; codim-2 dense edges of f1 enter through their multiplicities.
inline Spectrum split_3_1_spectrum(int d, const std::vector<int>& dense_codim2_multiplicities) {
  Integer sum = 0;
  for (int m : dense_codim2_multiplicities) sum += binom_ref(m - 1, 2);
  Spectrum sp(4, d);
  sp.add(1, binom_ref(d - 2, 2) - sum);
  sp.add(2, -binom_ref(d - 1, 2) + sum);
  sp.add(3, Integer(d - 1));
  return sp;
}

/// f1(x1,x2)·f2(x3,x4) with gcd(s1, s2) = 1.
inline Spectrum split_2_2_spectrum(int s1, int s2) {
  Spectrum sp(4, s1 + s2);
  sp.add(1, Integer((s1 - 1) * (s2 - 1)));
  sp.add(2, Integer(1 - s1 * s2));
  sp.add(3, Integer(s1 + s2 - 1));
  return sp;
}

// ---------------------------------------------------------------------------
// Expanded μ_p, transcribed term by term.

inline Integer printed_mu(int p, const LatticeSummary& s, const chow::DivisorClass& u) {
  const Integer d = s.degree, u0 = u.u0;
  auto mV = [&](std::size_t v) { return Integer(s.edges2[v].multiplicity()); };
  auto mW = [&](std::size_t w) { return Integer(s.edges3[w].multiplicity()); };
  const auto& B = binom_ref;
  Integer total = 0;
  switch (p) {
    case 0:
      total = B(u0 - 1, 3);
      for (std::size_t w = 0; w < s.edges3.size(); ++w) total -= B(u.ub[w], 3);
      for (std::size_t v = 0; v < s.edges2.size(); ++v) {
        const Integer& uV = u.ua[v];
        total -= (u0 - 3) * B(uV, 2) - 2 * B(uV, 3);
        for (int wi : s.containments[v]) {
          const Integer& uW = u.ub[static_cast<std::size_t>(wi)];
          total -= 2 * B(uV, 3) - (uW - 2) * B(uV, 2);
        }
      }
      break;
    case 1:
      total = (d - u0 - 1) * B(u0 - 1, 2);
      for (std::size_t w = 0; w < s.edges3.size(); ++w) total -= (mW(w) - u.ub[w] - 1) * B(u.ub[w], 2);
      for (std::size_t v = 0; v < s.edges2.size(); ++v) {
        const Integer& uV = u.ua[v];
        const Integer vV = mV(v) - uV - 1;
        total -= uV * vV * (u0 - 2) + (d - u0 - 1 - 2 * vV) * B(uV, 2);
        for (int wi : s.containments[v]) {
          const auto w = static_cast<std::size_t>(wi);
          total += uV * vV * (u.ub[w] - uV) + (mW(w) - u.ub[w] - 1) * B(uV, 2);
        }
      }
      break;
    case 2:
      total = (u0 - 1) * B(d - u0 - 1, 2);
      for (std::size_t w = 0; w < s.edges3.size(); ++w) total -= u.ub[w] * B(mW(w) - u.ub[w] - 1, 2);
      for (std::size_t v = 0; v < s.edges2.size(); ++v) {
        const Integer& uV = u.ua[v];
        const Integer vV = mV(v) - uV - 1;
        total -= vV * uV * (d - u0 - 2) + (u0 - 1 - 2 * uV) * B(vV, 2);
        for (int wi : s.containments[v]) {
          const auto w = static_cast<std::size_t>(wi);
          const Integer vW = mW(w) - u.ub[w] - 1;
          total += vV * uV * (vW - vV) + u.ub[w] * B(vV, 2);
        }
      }
      break;
    case 3:
      total = B(d - u0 - 1, 3);
      for (std::size_t w = 0; w < s.edges3.size(); ++w) total -= B(mW(w) - u.ub[w] - 1, 3);
      for (std::size_t v = 0; v < s.edges2.size(); ++v) {
        const Integer vV = mV(v) - u.ua[v] - 1;
        total -= (d - u0 - 3) * B(vV, 2) - 2 * B(vV, 3);
        for (int wi : s.containments[v]) {
          const auto w = static_cast<std::size_t>(wi);
          total -= 2 * B(vV, 3) - (mW(w) - u.ub[w] - 3) * B(vV, 2);
        }
      }
      break;
    default:
      throw std::invalid_argument("printed_mu: p out of range");
  }
  return total;
}

// ---------------------------------------------------------------------------
// Expanded Chern classes, transcribed term by term.

inline chow::RingElement printed_chern_tangent(const chow::ContextPtr& ctx) {
  using chow::RingElement;
  RingElement x = RingElement::constant(ctx, 1);
  RingElement deg1 = RingElement::c(ctx) * Rational(4);
  for (int v = 0; v < ctx->num_a(); ++v) deg1 += RingElement::a(ctx, v);
  for (int w = 0; w < ctx->num_b(); ++w) deg1 += RingElement::b(ctx, w) * Rational(2);
  x -= deg1;
  RingElement deg2 = RingElement::c(ctx) * RingElement::c(ctx) * Rational(6);
  for (int v = 0; v < ctx->num_a(); ++v) {
    const RingElement a = RingElement::a(ctx, v);
    deg2 += a * RingElement::c(ctx) * Rational(2) - a * a;
  }
  x += deg2;
  const RingElement c3 = power(RingElement::c(ctx), 3);
  x -= c3 * Rational(2 * ctx->num_a() + 2 * ctx->num_b() + 4);
  return x;
}

inline chow::RingElement printed_chern_log(const chow::ContextPtr& ctx) {
  using chow::RingElement;
  const auto& s = ctx->summary();
  const Integer d = s.degree;
  const RingElement c = RingElement::c(ctx);
  RingElement x = RingElement::constant(ctx, 1);

  RingElement deg1 = c * Rational(d - 4);
  for (int v = 0; v < ctx->num_a(); ++v) deg1 += RingElement::a(ctx, v) * Rational(ctx->m_a(v) - 2);
  for (int w = 0; w < ctx->num_b(); ++w) deg1 += RingElement::b(ctx, w) * Rational(ctx->m_b(w) - 3);
  x -= deg1;

  RingElement deg2 = c * c * Rational(binom_ref(d - 3, 2));
  for (int v = 0; v < ctx->num_a(); ++v) {
    const RingElement a = RingElement::a(ctx, v);
    Integer inner = d - 3;
    for (int w : ctx->below(v)) inner -= ctx->m_b(w) - 2;
    deg2 += a * a * Rational(binom_ref(ctx->m_a(v) - 1, 2));
    deg2 += a * c * Rational(Integer(ctx->m_a(v) - 2) * inner);
  }
  for (int w = 0; w < ctx->num_b(); ++w) {
    const RingElement b = RingElement::b(ctx, w);
    deg2 += b * b * Rational(binom_ref(ctx->m_b(w) - 2, 2));
  }
  x += deg2;

  Integer k3 = binom_ref(d - 2, 3);
  for (int v = 0; v < ctx->num_a(); ++v) {
    const int m = ctx->m_a(v);
    k3 += 2 * binom_ref(m - 1, 3) - (d - 4) * binom_ref(m - 1, 2);
    for (int w : ctx->below(v)) k3 -= 2 * binom_ref(m - 1, 3) - Integer(ctx->m_b(w) - 3) * binom_ref(m - 1, 2);
  }
  for (int w = 0; w < ctx->num_b(); ++w) k3 -= binom_ref(ctx->m_b(w) - 1, 3);
  x -= power(c, 3) * Rational(k3);
  return x;
}

// ---------------------------------------------------------------------------
// Synthetic edge data: random hyperplane incidences that satisfy the
// intersection constraints of lines and points in P^3 (two distinct lines
// share at most one plane, two distinct points at most two), without asking
// for a realizing arrangement.

inline LatticeSummary synthetic_summary(std::mt19937_64& rng, int d) {
  LatticeSummary s;
  s.degree = d;
  s.policy = EdgePolicy::Nnc;
  auto random_subset = [&](int size) {
    std::vector<int> all(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) all[static_cast<std::size_t>(l)] = l;
    std::shuffle(all.begin(), all.end(), rng);
    IndexSet out(all.begin(), all.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto overlap = [](const IndexSet& x, const IndexSet& y) {
    std::vector<int> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
  };
  std::uniform_int_distribution<int> count(0, 3);
  const int want2 = count(rng), want3 = count(rng);
  for (int tries = 0; tries < 50 && static_cast<int>(s.edges3.size()) < want3 && d >= 4; ++tries) {
    IndexSet cand = random_subset(std::uniform_int_distribution<int>(4, std::min(d, 6))(rng));
    bool ok = true;
    for (const auto& f : s.edges3) ok = ok && overlap(f.hyperplanes, cand) <= 2;
    if (ok) s.edges3.push_back(Flat{cand, 3});
  }
  for (int tries = 0; tries < 50 && static_cast<int>(s.edges2.size()) < want2 && d >= 3; ++tries) {
    IndexSet cand = random_subset(std::uniform_int_distribution<int>(3, std::min(d, 5))(rng));
    bool ok = true;
    for (const auto& f : s.edges2) ok = ok && overlap(f.hyperplanes, cand) <= 1;
    if (ok) s.edges2.push_back(Flat{cand, 2});
  }
  s.link();
  return s;
}

inline chow::DivisorClass random_divisor(std::mt19937_64& rng, int num_a, int num_b, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  chow::DivisorClass u{Integer(coef(rng)), {}, {}};
  for (int v = 0; v < num_a; ++v) u.ua.emplace_back(coef(rng));
  for (int w = 0; w < num_b; ++w) u.ub.emplace_back(coef(rng));
  return u;
}

}  // namespace hodge::testing
