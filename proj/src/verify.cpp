#include "hodge/verify.hpp"

#include <functional>
#include <random>

#include "hodge/chow.hpp"
#include "hodge/formulas.hpp"

namespace hodge {

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckRecord* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string versus(const Spectrum& left, const Spectrum& right) {
  return "left=" + left.to_polynomial_string() + " right=" + right.to_polynomial_string();
}

// Any exception thrown by a check is recorded as its failure.
CheckRecord guarded(std::string name, const std::function<CheckRecord()>& body) {
  try {
    CheckRecord r = body();
    r.name = std::move(name);
    return r;
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
}

std::string twist_string(const chow::DivisorClass& u) {
  std::string out = "u0=" + u.u0.get_str() + " a=[";
  for (std::size_t k = 0; k < u.ua.size(); ++k) out += (k ? "," : "") + u.ua[k].get_str();
  out += "] b=[";
  for (std::size_t k = 0; k < u.ub.size(); ++k) out += (k ? "," : "") + u.ub[k].get_str();
  return out + "]";
}

}  // namespace

VerifyReport run_verify(const Arrangement& arr, const VerifyOptions& options) {
  VerifyReport report;
  const Arrangement ess = essentialize(arr).first;
  if (ess.ambient() > 4) throw Error(ErrorCode::RankTooHigh, "essential rank exceeds 4");
  // The resolution ring and the rank-4 closed form both live in C^4.
  const Arrangement in4 = pad_variables(ess, 4 - ess.ambient());

  report.checks.push_back(guarded("dual-path", [&] {
    const Spectrum formula = spectrum(arr);
    const Spectrum chow = chow::spectrum_via_chow_any(arr);
    return CheckRecord{"", formula == chow, formula == chow ? "" : versus(formula, chow)};
  }));

  report.checks.push_back(guarded("s-invariance", [&] {
    const Spectrum dense = spectrum(arr, EdgePolicy::Dense);
    std::string details;
    for (auto policy : {EdgePolicy::Nnc, EdgePolicy::All}) {
      const Spectrum other = spectrum(arr, policy);
      if (!(other == dense)) details += std::string(to_string(policy)) + ": " + versus(dense, other) + "; ";
    }
    // The rank-4 closed form must also be policy-independent on the padded arrangement.
    const auto lattice = build_lattice(in4);
    const Spectrum base = closed_form_rank4(lattice_summary(in4, lattice, EdgePolicy::Dense));
    for (auto policy : {EdgePolicy::Nnc, EdgePolicy::All}) {
      const Spectrum other = closed_form_rank4(lattice_summary(in4, lattice, policy));
      if (!(other == base)) details += "C^4 " + std::string(to_string(policy)) + ": " + versus(base, other) + "; ";
    }
    return CheckRecord{"", details.empty(), details};
  }));

  report.checks.push_back(guarded("serre", [&] {
    const chow::HrrEvaluator hrr(chow::RingContext::from_arrangement(in4));
    const auto& ctx = *hrr.context();
    std::vector<chow::DivisorClass> samples;
    for (int i = 0; i < arr.degree(); ++i) samples.push_back(hrr.twist(i));
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int s = 0; s < options.random_twists; ++s) {
      chow::DivisorClass u{Integer(coef(rng)), {}, {}};
      for (int v = 0; v < ctx.num_a(); ++v) u.ua.emplace_back(coef(rng));
      for (int w = 0; w < ctx.num_b(); ++w) u.ub.emplace_back(coef(rng));
      samples.push_back(std::move(u));
    }
    for (const auto& u : samples)
      for (int p = 0; p <= 3; ++p) {
        const Rational r = hrr.serre_residual(p, u);
        if (r != 0)
          return CheckRecord{"", false,
                             "p=" + std::to_string(p) + " " + twist_string(u) + " residual=" + format_rational(r)};
      }
    return CheckRecord{"", true, ""};
  }));

  report.checks.push_back(guarded("euler-sum", [&] {
    const Spectrum sp = spectrum(arr);
    const Integer expected = expected_euler_sum(arr);
    const bool ok = sp.total() == expected;
    return CheckRecord{"", ok, ok ? "" : "left=" + sp.total().get_str() + " right=" + expected.get_str()};
  }));

  report.checks.push_back(guarded("ts-shift", [&] {
    const Spectrum padded = spectrum(pad_variables(arr, 1));
    const Spectrum shifted = spectrum(arr).shifted(1);
    return CheckRecord{"", padded == shifted, padded == shifted ? "" : versus(padded, shifted)};
  }));

  report.checks.push_back(guarded("weight-duality", [&] {
    const auto lattice = build_lattice(in4);
    const int d = arr.degree();
    for (auto policy : {EdgePolicy::Dense, EdgePolicy::Nnc, EdgePolicy::All}) {
      const auto s = lattice_summary(in4, lattice, policy);
      for (int i = 1; i <= d; ++i) edge_weights(s, i, Branch::Lower);
      for (int i = 0; i < d; ++i) edge_weights(s, i, Branch::Upper);
    }
    return CheckRecord{"", true, ""};
  }));

  if (!report.all_passed()) report.input_echo = io::format_arrangement(arr);
  return report;
}

std::string report_text(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.details.empty()) out += ": " + c.details;
    out += "\n";
  }
  if (!report.input_echo.empty()) out += "# input\n" + report.input_echo;
  return out;
}

io::Json report_json(const VerifyReport& report) {
  io::Json checks = io::Json::array();
  for (const auto& c : report.checks) {
    io::Json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    e["details"] = c.details;
    checks.push_back(std::move(e));
  }
  io::Json j;
  j["passed"] = report.all_passed();
  j["checks"] = std::move(checks);
  if (!report.input_echo.empty()) j["input"] = report.input_echo;
  return j;
}

}  // namespace hodge
