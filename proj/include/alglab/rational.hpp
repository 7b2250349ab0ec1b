#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alglab {

/// Exact rational scalar, GMP-backed. Always canonical: gcd(|num|, den) = 1, den > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading '-', q a positive integer literal).
/// Returns nullopt for anything else, including q = 0.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

bool is_zero(const Vec& v);
void add_scaled(Vec& target, const Vec& source, const Rational& scale);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);

} // namespace alglab
