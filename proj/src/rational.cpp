#include "ordercheck/rational.hpp"

#include <cctype>
#include <cmath>

#include "ordercheck/error.hpp"

namespace ordercheck {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw InputError(ErrorCode::kParse,
                   "not a rational literal: '" + std::string(text) + "'");
}

// Signed integer with an optional leading sign.
mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) fail(whole);
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) fail(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) fail(text);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw InputError(ErrorCode::kParse,
                       "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if (int_part.empty() && frac.empty()) fail(text);
    if (!int_part.empty() && !all_digits(int_part)) fail(text);
    if (!frac.empty() && !all_digits(frac)) fail(text);
    std::string digits = std::string(int_part) + std::string(frac);
    if (digits.empty()) fail(text);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw InputError(ErrorCode::kInvalidArgument, "non-finite value has no rational form");
  }
  return Rational(value);
}

double to_double(const Rational& value) { return value.get_d(); }

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kNonZeroSum: return "NonZeroSum";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNegativeThreshold: return "NegativeThreshold";
    case ErrorCode::kMalformedRepresentation: return "MalformedRepresentation";
    case ErrorCode::kNonConvexSample: return "NonConvexSample";
    case ErrorCode::kInvalidAtom: return "InvalidAtom";
    case ErrorCode::kInexactFunction: return "InexactFunction";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kProductNotOne: return "ProductNotOne";
    case ErrorCode::kNonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kEvaluationFailure: return "EvaluationFailure";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ordercheck
