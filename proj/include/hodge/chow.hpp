#pragma once

#include <array>
#include <memory>
#include <vector>

#include "hodge/arrangement.hpp"
#include "hodge/lattice.hpp"
#include "hodge/spectrum.hpp"

namespace hodge::chow {

/// Cohomology ring of the canonical log resolution of a degree-d arrangement
/// in P^3, presented on the non-normal-crossing edges. Generators: c (the
/// class -[E₀] of the pulled-back hyperplane), a_V for codim-2 edges and b_W
/// for codim-3 edges.
///
/// Normal-form basis, by degree:
///   0: 1
///   1: c, a_V, b_W
///   2: c², a_V², a_V·c, b_W²
///   3: c³
class RingContext {
 public:
  /// Throws ContextMismatch unless the summary uses the nnc policy.
  explicit RingContext(LatticeSummary summary);

  static std::shared_ptr<const RingContext> from_arrangement(const Arrangement& arr);

  const LatticeSummary& summary() const noexcept { return summary_; }
  int degree() const noexcept { return summary_.degree; }
  int num_a() const noexcept { return static_cast<int>(summary_.edges2.size()); }
  int num_b() const noexcept { return static_cast<int>(summary_.edges3.size()); }
  int m_a(int v) const { return summary_.edges2[static_cast<std::size_t>(v)].multiplicity(); }
  int m_b(int w) const { return summary_.edges3[static_cast<std::size_t>(w)].multiplicity(); }
  /// Number of codim-3 edges inside V.
  int t(int v) const { return static_cast<int>(summary_.containments[static_cast<std::size_t>(v)].size()); }
  const std::vector<int>& below(int v) const { return summary_.containments[static_cast<std::size_t>(v)]; }
  const std::vector<int>& above(int w) const { return above_[static_cast<std::size_t>(w)]; }

  /// The codim-2 / codim-3 edges lying on hyperplane l.
  const std::vector<int>& a_on_hyperplane(int l) const { return a_on_[static_cast<std::size_t>(l)]; }
  const std::vector<int>& b_on_hyperplane(int l) const { return b_on_[static_cast<std::size_t>(l)]; }

  // Coordinate layout of RingElement.
  std::size_t size() const noexcept { return idx_c3() + 1; }
  std::size_t idx_one() const noexcept { return 0; }
  std::size_t idx_c() const noexcept { return 1; }
  std::size_t idx_a(int v) const noexcept { return 2 + static_cast<std::size_t>(v); }
  std::size_t idx_b(int w) const noexcept { return 2 + na() + static_cast<std::size_t>(w); }
  std::size_t idx_c2() const noexcept { return 2 + na() + nb(); }
  std::size_t idx_a2(int v) const noexcept { return idx_c2() + 1 + static_cast<std::size_t>(v); }
  std::size_t idx_ac(int v) const noexcept { return idx_c2() + 1 + na() + static_cast<std::size_t>(v); }
  std::size_t idx_b2(int w) const noexcept { return idx_c2() + 1 + 2 * na() + static_cast<std::size_t>(w); }
  std::size_t idx_c3() const noexcept { return idx_c2() + 1 + 2 * na() + nb(); }
  int degree_of(std::size_t index) const noexcept;

 private:
  std::size_t na() const noexcept { return summary_.edges2.size(); }
  std::size_t nb() const noexcept { return summary_.edges3.size(); }

  LatticeSummary summary_;
  std::vector<std::vector<int>> above_;
  std::vector<std::vector<int>> a_on_, b_on_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

/// A class in the ring, stored in normal form over the basis above.
class RingElement {
 public:
  explicit RingElement(ContextPtr ctx);

  static RingElement constant(ContextPtr ctx, const Rational& value);
  static RingElement c(ContextPtr ctx);
  static RingElement a(ContextPtr ctx, int v);
  static RingElement b(ContextPtr ctx, int w);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Homogeneous part of degree k.
  RingElement part(int k) const;
  /// Multiplies the degree-k part by factor^k (Adams-type rescaling).
  RingElement scaled_by_degree(const Rational& factor) const;
  bool is_zero() const;

  RingElement& operator+=(const RingElement& y);
  RingElement& operator-=(const RingElement& y);
  RingElement& operator*=(const Rational& s);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator-(RingElement x) { return x *= Rational(-1); }
  friend RingElement operator*(RingElement x, const Rational& s) { return x *= s; }
  friend RingElement operator*(const Rational& s, RingElement x) { return x *= s; }
  friend bool operator==(const RingElement& x, const RingElement& y);

 private:
  void require_same(const RingElement& y) const;
  ContextPtr ctx_;
  std::vector<Rational> coeffs_;
};

/// Ring product; throws ContextMismatch across contexts.
RingElement mul(const RingElement& x, const RingElement& y);
inline RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }

RingElement power(const RingElement& x, int k);

/// (y)^{-1} for y with nonzero constant term; the series terminates at degree 3.
RingElement inverse(const RingElement& y);

/// Degree-3 evaluation: -(coefficient of c³).
Rational integrate(const RingElement& x);

/// Total Chern classes of the tangent bundle of the resolution and of the
/// sheaf of logarithmic 1-forms along the total transform.
struct ChernData {
  RingElement tangent;
  RingElement log_forms;
};

ChernData chern_classes(const ContextPtr& ctx);

/// Graded parts (c_1, c_2, c_3) of a total Chern class.
std::array<RingElement, 3> graded(const RingElement& total);

/// 1 + c₁/2 + (c₁² + c₂)/12 + c₁c₂/24.
RingElement todd_from_chern(const std::array<RingElement, 3>& cs);

/// Chern character of a rank-r bundle from its Chern classes.
RingElement ch_from_chern(int rank, const std::array<RingElement, 3>& cs);

/// Chern character of ∧^p of a rank-3 bundle with Chern classes cs,
/// p in 0..3; throws BadRank otherwise.
RingElement ch_wedge(int p, const std::array<RingElement, 3>& cs);

/// Integer class u₀c + Σ u_V a_V + Σ u_W b_W.
struct DivisorClass {
  Integer u0;
  std::vector<Integer> ua;
  std::vector<Integer> ub;
};

RingElement to_element(const ContextPtr& ctx, const DivisorClass& u);

/// exp(u) truncated at degree 3.
RingElement ch_line(const ContextPtr& ctx, const DivisorClass& u);

/// Precomputed Todd class and ∧^p Chern characters for one context.
class HrrEvaluator {
 public:
  explicit HrrEvaluator(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const ChernData& chern() const noexcept { return chern_; }
  const RingElement& todd() const noexcept { return todd_; }
  /// ch(∧^p Ω¹(log)).
  const RingElement& wedge(int p) const;

  /// (-1)^(p-3) ∫ ch(∧^p Ω¹(log)) · ch(O(u)) · td, as an exact rational.
  Rational mu_exact(int p, const DivisorClass& u) const;

  /// mu_exact, which must be an integer; throws NonIntegerResult otherwise.
  Integer mu(int p, const DivisorClass& u) const;

  /// Class of the reduced total transform: Σ(1-m_V)a_V + Σ(1-m_W)b_W - d c.
  DivisorClass reduced_boundary() const;

  /// mu_p(u) - mu_{3-p}(-z-u); zero when the ring tables are consistent.
  Rational serre_residual(int p, const DivisorClass& u) const;

  /// Twist i c + Σ ⌊i m/d⌋ (edge classes) used at index i.
  DivisorClass twist(int i) const;

 private:
  ContextPtr ctx_;
  ChernData chern_;
  RingElement todd_;
  std::vector<RingElement> wedge_;
  std::vector<RingElement> wedge_todd_;
};

/// Spectrum via Hirzebruch-Riemann-Roch on the resolution. Requires an
/// arrangement in C^4 (rank ≤ 4, it need not be essential).
Spectrum spectrum_via_chow_ambient4(const Arrangement& arr);

/// As above, restricted to essential rank-4 arrangements in C^4.
/// Throws RankTooHigh or NotEssential.
Spectrum spectrum_via_chow(const Arrangement& arr);

/// Any arrangement of essential rank ≤ 4: essentialize, pad to C^4, run the
/// resolution pipeline and shift back to the original ambient dimension.
Spectrum spectrum_via_chow_any(const Arrangement& arr);

}  // namespace hodge::chow
