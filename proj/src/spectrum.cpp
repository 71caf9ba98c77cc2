#include "hodge/spectrum.hpp"

namespace hodge {

Integer Spectrum::at(const Rational& alpha) const {
  auto it = entries_.find(alpha);
  return it == entries_.end() ? Integer(0) : it->second;
}

void Spectrum::add(const Rational& alpha, const Integer& n) {
  if (n == 0) return;
  Rational key(alpha);
  key.canonicalize();
  auto [it, inserted] = entries_.try_emplace(key, n);
  if (!inserted) {
    it->second += n;
    if (it->second == 0) entries_.erase(it);
  }
}

Integer Spectrum::total() const {
  Integer sum = 0;
  for (const auto& [alpha, n] : entries_) sum += n;
  return sum;
}

Spectrum Spectrum::shifted(int k) const {
  Spectrum out(ambient_ + k, degree_);
  const bool flip = (k % 2) != 0;
  for (const auto& [alpha, n] : entries_) out.entries_.emplace(alpha + k, flip ? Integer(-n) : n);
  return out;
}

std::string Spectrum::to_polynomial_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, n] : entries_) {
    Integer mag = abs(n);
    if (first)
      out += n < 0 ? "-" : "";
    else
      out += n < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (alpha != 1) {
      const auto a = format_rational(alpha);
      out += alpha.get_den() == 1 ? "^" + a : "^(" + a + ")";
    }
  }
  return out;
}

}  // namespace hodge
