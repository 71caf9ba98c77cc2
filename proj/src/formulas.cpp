#include "hodge/formulas.hpp"

#include <string>

namespace hodge {

Integer gbinom(const Integer& t, int k) {
  if (k < 0) throw std::invalid_argument("gbinom: negative k");
  Integer num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= t - j;
    den *= j + 1;
  }
  return num / den;  // k! divides any product of k consecutive integers
}

namespace {

Integer delta(int a, int b) { return a == b ? 1 : 0; }

std::pair<Integer, Integer> weights_for(int m, int i, int d, Branch branch) {
  const Integer im = Integer(i) * m, rest = Integer(d - i) * m, dd = d;
  if (branch == Branch::Lower) return {ceil_div(im, dd) - 1, floor_div(rest, dd)};
  return {floor_div(im, dd), ceil_div(rest, dd) - 1};
}

void require_shape(const LatticeSummary& s, const EdgeWeights& w, bool need_v) {
  const bool ok = w.u2.size() == s.edges2.size() && w.u3.size() == s.edges3.size() &&
                  (!need_v || (w.v2.size() == s.edges2.size() && w.v3.size() == s.edges3.size()));
  if (!ok) throw Error(ErrorCode::InconsistentWeights, "edge weights do not cover the summary's edges");
}

}  // namespace

void check_weight_duality(const LatticeSummary& summary, const EdgeWeights& w) {
  require_shape(summary, w, true);
  for (std::size_t v = 0; v < summary.edges2.size(); ++v)
    if (w.u2[v] + w.v2[v] != summary.edges2[v].multiplicity() - 1)
      throw Error(ErrorCode::InconsistentWeights, "u + v != m - 1 on codim-2 edge " + std::to_string(v));
  for (std::size_t k = 0; k < summary.edges3.size(); ++k)
    if (w.u3[k] + w.v3[k] != summary.edges3[k].multiplicity() - 1)
      throw Error(ErrorCode::InconsistentWeights, "u + v != m - 1 on codim-3 edge " + std::to_string(k));
}

EdgeWeights edge_weights(const LatticeSummary& summary, int i, Branch branch) {
  const int d = summary.degree;
  EdgeWeights w;
  for (const auto& f : summary.edges2) {
    auto [u, v] = weights_for(f.multiplicity(), i, d, branch);
    w.u2.push_back(u);
    w.v2.push_back(v);
  }
  for (const auto& f : summary.edges3) {
    auto [u, v] = weights_for(f.multiplicity(), i, d, branch);
    w.u3.push_back(u);
    w.v3.push_back(v);
  }
  check_weight_duality(summary, w);
  return w;
}

Integer eta0(int i, const LatticeSummary& s, const EdgeWeights& w) {
  require_shape(s, w, false);
  Integer total = gbinom(i - 1, 3) + delta(0, i);
  for (const auto& uw : w.u3) total -= gbinom(uw, 3);
  for (std::size_t v = 0; v < s.edges2.size(); ++v) {
    const Integer& uv = w.u2[v];
    const Integer b2 = gbinom(uv, 2), b3 = gbinom(uv, 3);
    total -= Integer(i - 3) * b2 - 2 * b3;
    for (int k : s.containments[v]) total -= 2 * b3 - (w.u3[static_cast<std::size_t>(k)] - 2) * b2;
  }
  return total;
}

Integer eta1(int i, int d, const LatticeSummary& s, const EdgeWeights& w) {
  require_shape(s, w, true);
  Integer total = Integer(d - i - 1) * gbinom(i - 1, 2);
  for (std::size_t k = 0; k < s.edges3.size(); ++k) total -= w.v3[k] * gbinom(w.u3[k], 2);
  for (std::size_t v = 0; v < s.edges2.size(); ++v) {
    const Integer &uv = w.u2[v], &vv = w.v2[v];
    const Integer b2 = gbinom(uv, 2);
    total -= uv * vv * (i - 2) + (Integer(d - i - 1) - 2 * vv) * b2;
    for (int k : s.containments[v]) {
      const auto kk = static_cast<std::size_t>(k);
      total += uv * vv * (w.u3[kk] - uv) + w.v3[kk] * b2;
    }
  }
  return total;
}

Spectrum closed_form_rank4(const LatticeSummary& s) {
  const int d = s.degree;
  Spectrum sp(4, d);
  for (int i = 1; i <= d; ++i) {
    const auto w = edge_weights(s, i, Branch::Lower);
    const Rational frac = ratio(i, d);
    sp.add(frac, eta0(i, s, w));
    sp.add(frac + 1, eta1(i, d, s, w));
  }
  for (int i = 0; i < d; ++i) {
    const auto w = edge_weights(s, i, Branch::Upper);
    const Rational frac = ratio(i, d);
    sp.add(4 - frac, eta0(i, s, w));
    sp.add(3 - frac, eta1(i, d, s, w));
  }
  return sp;
}

namespace {

void require_essential(const Arrangement& arr, int n) {
  if (arr.ambient() != n || rank_of(arr) != n)
    throw Error(ErrorCode::NotEssential, "expected an essential arrangement of rank " + std::to_string(n) +
                                             " in C^" + std::to_string(n));
}

}  // namespace

Spectrum spectrum_rank4(const Arrangement& arr, EdgePolicy policy) {
  if (rank_of(arr) > 4) throw Error(ErrorCode::RankTooHigh, "essential rank exceeds 4");
  require_essential(arr, 4);
  return closed_form_rank4(lattice_summary(arr, policy));
}

Spectrum spectrum_rank3(const Arrangement& arr, EdgePolicy policy) {
  require_essential(arr, 3);
  const auto s = lattice_summary(arr, policy);
  const int d = arr.degree();
  Spectrum sp(3, d);
  for (int i = 1; i <= d; ++i) {
    Integer low = gbinom(i - 1, 2);
    Integer mid = Integer(i - 1) * (d - i - 1);
    Integer high = gbinom(d - i - 1, 2) - delta(i, d);
    for (const auto& v : s.edges2) {
      const int m = v.multiplicity();
      const Integer c = ceil_div(Integer(i) * m, d);
      low -= gbinom(c - 1, 2);
      mid -= (c - 1) * (m - c);
      high -= gbinom(m - c, 2);
    }
    const Rational frac = ratio(i, d);
    sp.add(frac, low);
    sp.add(frac + 1, mid);
    sp.add(frac + 2, high);
  }
  return sp;
}

Spectrum spectrum_rank2(const Arrangement& arr) {
  const int d = arr.degree();
  Spectrum sp(2, d);
  for (int i = 1; i <= d; ++i) {
    const Rational frac = ratio(i, d);
    sp.add(frac, Integer(i - 1));
    sp.add(frac + 1, Integer(d - i - 1) + delta(i, d));
  }
  return sp;
}

Spectrum spectrum(const Arrangement& arr, EdgePolicy policy) {
  const auto [ess, dropped] = essentialize(arr);
  const int r = ess.ambient();
  Spectrum base;
  switch (r) {
    case 1: base = Spectrum(1, ess.degree()); break;
    case 2: base = spectrum_rank2(ess); break;
    case 3: base = spectrum_rank3(ess, policy); break;
    case 4: base = spectrum_rank4(ess, policy); break;
    default:
      throw Error(ErrorCode::RankTooHigh, "essential rank " + std::to_string(r) + " exceeds 4");
  }
  return base.shifted(dropped);
}

Spectrum generic_spectrum(int d) {
  if (d < 1) throw std::invalid_argument("generic_spectrum: degree must be positive");
  Spectrum sp(4, d);
  for (int i = 1; i <= d; ++i) {
    const Rational frac = ratio(i, d);
    sp.add(frac, gbinom(i - 1, 3));
    sp.add(frac + 1, Integer(d - i - 1) * gbinom(i - 1, 2));
  }
  for (int i = 0; i < d; ++i) {
    const Rational frac = ratio(i, d);
    sp.add(4 - frac, gbinom(i - 1, 3) + delta(0, i));
    sp.add(3 - frac, Integer(d - i - 1) * gbinom(i - 1, 2));
  }
  return sp;
}

Integer expected_euler_sum(const Arrangement& arr) {
  const Integer value = Integer(arr.degree()) * proj_complement_euler(arr) - 1;
  return (arr.ambient() % 2 == 1) ? value : Integer(-value);
}

bool euler_sum_check(const Arrangement& arr, const Spectrum& sp) {
  return sp.total() == expected_euler_sum(arr);
}

}  // namespace hodge
