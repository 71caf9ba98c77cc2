#include "hodge/chow.hpp"

#include <string>

namespace hodge::chow {

RingContext::RingContext(LatticeSummary summary) : summary_(std::move(summary)) {
  if (summary_.policy != EdgePolicy::Nnc)
    throw Error(ErrorCode::ContextMismatch, "the ring presentation needs the nnc edge set");
  if (summary_.containments.size() != summary_.edges2.size()) summary_.link();

  above_.assign(summary_.edges3.size(), {});
  for (int v = 0; v < num_a(); ++v)
    for (int w : below(v)) above_[static_cast<std::size_t>(w)].push_back(v);

  const auto d = static_cast<std::size_t>(summary_.degree);
  a_on_.assign(d, {});
  b_on_.assign(d, {});
  for (int v = 0; v < num_a(); ++v)
    for (int l : summary_.edges2[static_cast<std::size_t>(v)].hyperplanes) {
      if (l < 0 || static_cast<std::size_t>(l) >= d)
        throw Error(ErrorCode::IndexOutOfRange, "edge references hyperplane " + std::to_string(l));
      a_on_[static_cast<std::size_t>(l)].push_back(v);
    }
  for (int w = 0; w < num_b(); ++w)
    for (int l : summary_.edges3[static_cast<std::size_t>(w)].hyperplanes) {
      if (l < 0 || static_cast<std::size_t>(l) >= d)
        throw Error(ErrorCode::IndexOutOfRange, "edge references hyperplane " + std::to_string(l));
      b_on_[static_cast<std::size_t>(l)].push_back(w);
    }
}

std::shared_ptr<const RingContext> RingContext::from_arrangement(const Arrangement& arr) {
  if (arr.ambient() != 4)
    throw Error(ErrorCode::DimensionMismatch, "the resolution ring is built for arrangements in C^4");
  return std::make_shared<const RingContext>(lattice_summary(arr, EdgePolicy::Nnc));
}

int RingContext::degree_of(std::size_t index) const noexcept {
  if (index == 0) return 0;
  if (index < idx_c2()) return 1;
  if (index < idx_c3()) return 2;
  return 3;
}

RingElement::RingElement(ContextPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->size()) {}

RingElement RingElement::constant(ContextPtr ctx, const Rational& value) {
  RingElement x(std::move(ctx));
  x.coeffs_[0] = value;
  return x;
}

RingElement RingElement::c(ContextPtr ctx) {
  RingElement x(std::move(ctx));
  x.coeffs_[x.ctx_->idx_c()] = 1;
  return x;
}

RingElement RingElement::a(ContextPtr ctx, int v) {
  RingElement x(std::move(ctx));
  x.coeffs_[x.ctx_->idx_a(v)] = 1;
  return x;
}

RingElement RingElement::b(ContextPtr ctx, int w) {
  RingElement x(std::move(ctx));
  x.coeffs_[x.ctx_->idx_b(w)] = 1;
  return x;
}

RingElement RingElement::part(int k) const {
  RingElement out(ctx_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (ctx_->degree_of(i) == k) out.coeffs_[i] = coeffs_[i];
  return out;
}

RingElement RingElement::scaled_by_degree(const Rational& factor) const {
  const Rational f2 = factor * factor;
  const std::array<Rational, 4> scale{Rational(1), factor, f2, f2 * factor};
  RingElement out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] *= scale[static_cast<std::size_t>(ctx_->degree_of(i))];
  return out;
}

bool RingElement::is_zero() const {
  for (const auto& q : coeffs_)
    if (q != 0) return false;
  return true;
}

void RingElement::require_same(const RingElement& y) const {
  if (ctx_ != y.ctx_) throw Error(ErrorCode::ContextMismatch, "ring elements from different contexts");
}

RingElement& RingElement::operator+=(const RingElement& y) {
  require_same(y);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& y) {
  require_same(y);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const Rational& s) {
  for (auto& q : coeffs_) q *= s;
  return *this;
}

bool operator==(const RingElement& x, const RingElement& y) {
  x.require_same(y);
  return x.coeffs_ == y.coeffs_;
}

namespace {

// Adds the degree-2 product of the degree-1 parts of x and y into out.
void mul11(const RingContext& k, const RingElement& x, const RingElement& y, RingElement& out) {
  const Rational &xc = x[k.idx_c()], &yc = y[k.idx_c()];
  out[k.idx_c2()] += xc * yc;
  for (int v = 0; v < k.num_a(); ++v) {
    const Rational &xa = x[k.idx_a(v)], &ya = y[k.idx_a(v)];
    out[k.idx_a2(v)] += xa * ya;
    // a_V b_W = -a_V c for W ⊂ V
    Rational ac = xc * ya + xa * yc;
    for (int w : k.below(v)) ac -= xa * y[k.idx_b(w)] + x[k.idx_b(w)] * ya;
    out[k.idx_ac(v)] += ac;
  }
  for (int w = 0; w < k.num_b(); ++w) out[k.idx_b2(w)] += x[k.idx_b(w)] * y[k.idx_b(w)];
}

// c³-coefficient of (degree-1 part of x) · (degree-2 part of y).
Rational mul12(const RingContext& k, const RingElement& x, const RingElement& y) {
  // c·c² = c³, c·a_V² = -c³
  Rational sum_a2 = 0;
  for (int v = 0; v < k.num_a(); ++v) sum_a2 += y[k.idx_a2(v)];
  Rational top = x[k.idx_c()] * (y[k.idx_c2()] - sum_a2);
  // a_V³ = 2(1 - t_V) c³, a_V·a_V c = -c³
  for (int v = 0; v < k.num_a(); ++v) {
    const Rational& xa = x[k.idx_a(v)];
    if (xa == 0) continue;
    top += xa * (Rational(2 * (1 - k.t(v))) * y[k.idx_a2(v)] - y[k.idx_ac(v)]);
  }
  // b_W·a_V² = c³ for W ⊂ V, b_W³ = -c³
  for (int w = 0; w < k.num_b(); ++w) {
    const Rational& xb = x[k.idx_b(w)];
    if (xb == 0) continue;
    Rational s = -y[k.idx_b2(w)];
    for (int v : k.above(w)) s += y[k.idx_a2(v)];
    top += xb * s;
  }
  return top;
}

}  // namespace

RingElement mul(const RingElement& x, const RingElement& y) {
  if (x.context() != y.context()) throw Error(ErrorCode::ContextMismatch, "ring elements from different contexts");
  const RingContext& k = *x.context();
  const Rational &x0 = x[0], &y0 = y[0];

  RingElement out(x.context());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = x0 * y[i] + y0 * x[i];
  out[0] = x0 * y0;
  mul11(k, x, y, out);
  out[k.idx_c3()] += mul12(k, x, y) + mul12(k, y, x);
  return out;
}

RingElement power(const RingElement& x, int k) {
  RingElement out = RingElement::constant(x.context(), Rational(1));
  for (int j = 0; j < k; ++j) out = mul(out, x);
  return out;
}

RingElement inverse(const RingElement& y) {
  const Rational y0 = y[0];
  if (y0 == 0) throw std::domain_error("inverse of a nilpotent ring element");
  const auto one = RingElement::constant(y.context(), Rational(1));
  // y = y0 (1 + x) with x nilpotent of order 4
  const RingElement x = y * Rational(1 / y0) - one;
  const RingElement x2 = mul(x, x);
  RingElement out = one - x + x2 - mul(x2, x);
  return out * Rational(1 / y0);
}

Rational integrate(const RingElement& x) { return -x[x.context()->idx_c3()]; }

ChernData chern_classes(const ContextPtr& ctx) {
  const auto one = RingElement::constant(ctx, Rational(1));
  const auto c = RingElement::c(ctx);

  // Blow-up factors F = (1 + e - ẽ)^{-γ} (1 + e) (1 - ẽ)^γ, where ẽ sums the
  // generators of every edge inside the center, including the center itself.
  auto factor = [&](const RingElement& e, const RingElement& tilde, int gamma) {
    return power(inverse(one + e - tilde), gamma) * (one + e) * power(one - tilde, gamma);
  };

  RingElement tangent = power(one - c, 4);
  for (int w = 0; w < ctx->num_b(); ++w) {
    const auto bw = RingElement::b(ctx, w);
    tangent = tangent * factor(bw, c + bw, 3);
  }
  for (int v = 0; v < ctx->num_a(); ++v) {
    const auto av = RingElement::a(ctx, v);
    RingElement tilde = c + av;
    for (int w : ctx->below(v)) tilde += RingElement::b(ctx, w);
    tangent = tangent * factor(av, tilde, 2);
  }

  RingElement log_forms = tangent.scaled_by_degree(Rational(-1));  // c(Ω¹) = c(T^∨)
  for (int w = 0; w < ctx->num_b(); ++w) log_forms = log_forms * inverse(one - RingElement::b(ctx, w));
  for (int v = 0; v < ctx->num_a(); ++v) log_forms = log_forms * inverse(one - RingElement::a(ctx, v));
  for (int l = 0; l < ctx->degree(); ++l) {
    // strict transform of D_l: d_l = -(c + Σ_{W ⊂ D_l} b_W + Σ_{V ⊂ D_l} a_V)
    RingElement s = c;
    for (int w : ctx->b_on_hyperplane(l)) s += RingElement::b(ctx, w);
    for (int v : ctx->a_on_hyperplane(l)) s += RingElement::a(ctx, v);
    log_forms = log_forms * inverse(one + s);
  }
  return {std::move(tangent), std::move(log_forms)};
}

std::array<RingElement, 3> graded(const RingElement& total) {
  return {total.part(1), total.part(2), total.part(3)};
}

RingElement todd_from_chern(const std::array<RingElement, 3>& cs) {
  const auto& [c1, c2, c3] = cs;
  const auto ctx = c1.context();
  const RingElement c1sq = c1 * c1;
  return RingElement::constant(ctx, Rational(1)) + c1 * Rational(1, 2) + (c1sq + c2) * Rational(1, 12) +
         (c1 * c2) * Rational(1, 24);
}

RingElement ch_from_chern(int rank, const std::array<RingElement, 3>& cs) {
  const auto& [c1, c2, c3] = cs;
  const auto ctx = c1.context();
  const RingElement c1sq = c1 * c1;
  return RingElement::constant(ctx, Rational(rank)) + c1 + (c1sq - c2 * Rational(2)) * Rational(1, 2) +
         (c1sq * c1 - (c1 * c2) * Rational(3) + c3 * Rational(3)) * Rational(1, 6);
}

RingElement ch_wedge(int p, const std::array<RingElement, 3>& cs) {
  if (p < 0 || p > 3) throw Error(ErrorCode::BadRank, "exterior power " + std::to_string(p) + " of a rank-3 bundle");
  const auto ctx = cs[0].context();
  // With y_i = exp(x_i) over the Chern roots, ch(∧^p) is the p-th elementary
  // symmetric function of the y_i and ψ^j(ch) = Σ y_i^j is the j-th power sum.
  const RingElement ch = ch_from_chern(3, cs);
  std::vector<RingElement> e{RingElement::constant(ctx, Rational(1))};
  for (int k = 1; k <= p; ++k) {
    RingElement acc(ctx);
    for (int j = 1; j <= k; ++j) {
      RingElement term = e[static_cast<std::size_t>(k - j)] * ch.scaled_by_degree(Rational(j));
      if (j % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    e.push_back(acc * Rational(1, k));
  }
  return e[static_cast<std::size_t>(p)];
}

RingElement to_element(const ContextPtr& ctx, const DivisorClass& u) {
  if (u.ua.size() != ctx->summary().edges2.size() || u.ub.size() != ctx->summary().edges3.size())
    throw Error(ErrorCode::ContextMismatch, "divisor class does not match the ring's generators");
  RingElement x(ctx);
  x[ctx->idx_c()] = u.u0;
  for (int v = 0; v < ctx->num_a(); ++v) x[ctx->idx_a(v)] = u.ua[static_cast<std::size_t>(v)];
  for (int w = 0; w < ctx->num_b(); ++w) x[ctx->idx_b(w)] = u.ub[static_cast<std::size_t>(w)];
  return x;
}

RingElement ch_line(const ContextPtr& ctx, const DivisorClass& u) {
  const RingElement x = to_element(ctx, u);
  const RingElement x2 = x * x;
  return RingElement::constant(ctx, Rational(1)) + x + x2 * Rational(1, 2) + (x2 * x) * Rational(1, 6);
}

HrrEvaluator::HrrEvaluator(ContextPtr ctx)
    : ctx_(std::move(ctx)), chern_(chern_classes(ctx_)), todd_(todd_from_chern(graded(chern_.tangent))) {
  const auto log_cs = graded(chern_.log_forms);
  for (int p = 0; p <= 3; ++p) {
    wedge_.push_back(ch_wedge(p, log_cs));
    wedge_todd_.push_back(wedge_.back() * todd_);
  }
}

const RingElement& HrrEvaluator::wedge(int p) const {
  if (p < 0 || p > 3) throw Error(ErrorCode::BadRank, "exterior power " + std::to_string(p) + " of a rank-3 bundle");
  return wedge_[static_cast<std::size_t>(p)];
}

Rational HrrEvaluator::mu_exact(int p, const DivisorClass& u) const {
  wedge(p);
  const Rational value = integrate(wedge_todd_[static_cast<std::size_t>(p)] * ch_line(ctx_, u));
  return (p % 2 == 1) ? value : Rational(-value);  // (-1)^(p-3)
}

Integer HrrEvaluator::mu(int p, const DivisorClass& u) const {
  const Rational value = mu_exact(p, u);
  if (!is_integer(value))
    throw Error(ErrorCode::NonIntegerResult, "mu_" + std::to_string(p) + " = " + format_rational(value));
  return value.get_num();
}

DivisorClass HrrEvaluator::reduced_boundary() const {
  DivisorClass z{Integer(-ctx_->degree()), {}, {}};
  for (int v = 0; v < ctx_->num_a(); ++v) z.ua.emplace_back(1 - ctx_->m_a(v));
  for (int w = 0; w < ctx_->num_b(); ++w) z.ub.emplace_back(1 - ctx_->m_b(w));
  return z;
}

Rational HrrEvaluator::serre_residual(int p, const DivisorClass& u) const {
  const DivisorClass z = reduced_boundary();
  if (u.ua.size() != z.ua.size() || u.ub.size() != z.ub.size())
    throw Error(ErrorCode::ContextMismatch, "divisor class does not match the ring's generators");
  DivisorClass dual{-z.u0 - u.u0, {}, {}};
  for (std::size_t v = 0; v < z.ua.size(); ++v) dual.ua.push_back(-z.ua[v] - u.ua[v]);
  for (std::size_t w = 0; w < z.ub.size(); ++w) dual.ub.push_back(-z.ub[w] - u.ub[w]);
  return mu_exact(p, u) - mu_exact(3 - p, dual);
}

DivisorClass HrrEvaluator::twist(int i) const {
  const Integer d = ctx_->degree();
  DivisorClass u{Integer(i), {}, {}};
  for (int v = 0; v < ctx_->num_a(); ++v) u.ua.push_back(floor_div(Integer(i) * ctx_->m_a(v), d));
  for (int w = 0; w < ctx_->num_b(); ++w) u.ub.push_back(floor_div(Integer(i) * ctx_->m_b(w), d));
  return u;
}

Spectrum spectrum_via_chow_ambient4(const Arrangement& arr) {
  const HrrEvaluator hrr(RingContext::from_arrangement(arr));
  const int d = arr.degree();
  Spectrum sp(4, d);
  for (int i = 0; i < d; ++i) {
    const DivisorClass u = hrr.twist(i);
    for (int p = 0; p <= 3; ++p) {
      if (p == 0 && i == 0) continue;  // α = 4 lies outside the support
      sp.add(Rational(4 - p) - ratio(i, d), hrr.mu(p, u));
    }
  }
  return sp;
}

Spectrum spectrum_via_chow(const Arrangement& arr) {
  const int r = rank_of(arr);
  if (r > 4) throw Error(ErrorCode::RankTooHigh, "essential rank " + std::to_string(r) + " exceeds 4");
  if (r != 4 || arr.ambient() != 4)
    throw Error(ErrorCode::NotEssential, "the resolution pipeline expects an essential arrangement in C^4");
  return spectrum_via_chow_ambient4(arr);
}

Spectrum spectrum_via_chow_any(const Arrangement& arr) {
  const auto [ess, dropped] = essentialize(arr);
  const int r = ess.ambient();
  if (r > 4) throw Error(ErrorCode::RankTooHigh, "essential rank " + std::to_string(r) + " exceeds 4");
  return spectrum_via_chow_ambient4(pad_variables(ess, 4 - r)).shifted(arr.ambient() - 4);
}

}  // namespace hodge::chow
