#include "hodge/rational.hpp"

#include <cctype>

namespace hodge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::EmptyArrangement: return "EmptyArrangement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::InconsistentWeights: return "InconsistentWeights";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_integer(num));

  const auto den = text.substr(slash + 1);
  // denominators carry no sign
  if (den.empty() || den.front() == '-' || den.front() == '+' || !is_integer_literal(den))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hodge
