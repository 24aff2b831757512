#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "doctest.h"
#include "ordercheck/core.hpp"
#include "ordercheck/error.hpp"
#include "ordercheck/rational.hpp"

namespace th {

using ordercheck::Rational;

inline Rational q(const char* text) { return ordercheck::parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline ordercheck::OrderedZeroSumSequence seq(std::initializer_list<const char*> items) {
  return ordercheck::make_sequence(qs(items));
}

inline ordercheck::NonnegMultiset ms(std::initializer_list<const char*> items) {
  return ordercheck::NonnegMultiset(qs(items));
}

}  // namespace th

#define CHECK_INPUT_ERROR(expr, expected)                              \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ordercheck::InputError& e_) {                       \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(e_.code() == (expected), std::string(e_.what()));               \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected InputError from " #expr);         \
  } while (false)
