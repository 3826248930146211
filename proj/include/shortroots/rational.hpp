#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace shortroots {

using Rational = boost::rational<std::int64_t>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<int>>;

inline bool isIntegral(const Rational& r) { return r.denominator() == 1; }

// boost::rational mixed int comparisons recurse under C++20 rewritten operators;
// compare numerators or Rational values instead.
inline bool isZero(const Rational& r) { return r.numerator() == 0; }

std::string toString(const Rational& r);

// Exact inverse by Gauss-Jordan elimination; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix toRational(const IntMatrix& m);

}  // namespace shortroots
