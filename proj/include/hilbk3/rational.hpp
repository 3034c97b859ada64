#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hilbk3 {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Always "p/q", including integers ("3/1", "0/1").
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or "p"; throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);

Rational dot(const Vector& a, const Vector& b);

bool is_zero(const Vector& v);

}  // namespace hilbk3
