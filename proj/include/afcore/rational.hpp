#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace afcore {

// Exact scalar field for operator certification. Every operator in the
// truncated representations is a sum of products of 0/1 partial
// isometries, so 64-bit numerators never come close to overflowing.
using Rational = boost::rational<std::int64_t>;

// Comparing a boost::rational with a plain integer through == recurses
// forever under C++20 rewritten comparisons, so tests go through these.
inline bool is_zero(const Rational& r) { return r.numerator() == 0; }
inline bool is_one(const Rational& r) { return r.numerator() == 1 && r.denominator() == 1; }
inline bool is_negative(const Rational& r) { return r.numerator() < 0; }

}  // namespace afcore
