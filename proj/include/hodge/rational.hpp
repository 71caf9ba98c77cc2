#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  ZeroForm,
  NotReduced,
  EmptyArrangement,
  DimensionMismatch,
  IndexOutOfRange,
  RankTooHigh,
  NotEssential,
  InconsistentWeights,
  ContextMismatch,
  BadRank,
  NonIntegerResult,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parses "7", "-3", "1/2", "-4/6" (reduced on the way in).
Rational parse_rational(std::string_view text);

/// Reduced form, "p/q" or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// p/q in lowest terms; q must be nonzero.
inline Rational ratio(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hodge
