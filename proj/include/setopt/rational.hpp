#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace setopt {

using Q = mpq_class;
using Vec = std::vector<Q>;

// Accepts "3", "-2/5", "0.125", "1e-6", "-1.5e3".
Q parse_rational(std::string_view s);
std::string to_string(const Q& q);
std::string to_string(const Vec& v);

// Exact value of a binary double.
Q from_double(double d);
double to_double(const Q& q);

// Simplest rational (smallest denominator, then numerator) in [lo, hi].
Q simplest_between(Q lo, Q hi);

inline int sgn(const Q& q) { return ::sgn(q); }
Q floor_q(const Q& q);
Q abs_q(const Q& q);

Q dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Q& s, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Q l1_norm(const Vec& a);

// 2D helpers.
Q cross(const Vec& a, const Vec& b);
Vec perp(const Vec& a);  // rotate by +90 degrees

// Positive multiple of a that is a primitive integer vector. a must be nonzero.
Vec primitive(const Vec& a);
// Returns s > 0 such that s*a is primitive integer.
Q primitive_factor(const Vec& a);

// Orders directions in R^2 by polar angle in [0, 2pi).
bool angle_less(const Vec& a, const Vec& b);
bool lex_less(const Vec& a, const Vec& b);

}  // namespace setopt
