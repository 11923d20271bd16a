#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace superknap {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// LE/GE describe a knapsack or an inequality; EQ only appears in rows.
enum class Sense { LE, GE, EQ };

const char* sense_name(Sense s);

Integer floor_div(const Integer& num, const Integer& den);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer dot(const IntVector& x, const IntVector& y);
Rational dot(const RatVector& x, const RatVector& y);
Rational dot(const IntVector& x, const RatVector& y);

RatVector to_rational(const IntVector& x);
bool is_integral(const RatVector& x);
// Requires is_integral(x).
IntVector to_integer(const RatVector& x);

Integer parse_integer(std::string_view text);
// Accepts "p", "p/q" and finite decimals such as "841.5".
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
// "(0,3,1,1,2)"
std::string to_string(const IntVector& x);
std::string to_string(const RatVector& x);

}  // namespace superknap
