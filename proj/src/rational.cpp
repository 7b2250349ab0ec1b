#include "alglab/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace alglab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.find('/') != std::string_view::npos)
            return std::nullopt;
    }
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!all_digits(num))
        return std::nullopt;
    Integer n{std::string(num)};
    if (negative)
        n = -n;
    if (den.empty())
        return Rational(n);
    if (!all_digits(den))
        return std::nullopt;
    Integer d{std::string(den)};
    if (d == 0)
        return std::nullopt;
    return Rational(n) / Rational(d);
}

std::string to_string(const Rational& value) { return value.str(); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

void add_scaled(Vec& target, const Vec& source, const Rational& scale) {
    assert(target.size() == source.size());
    for (std::size_t i = 0; i < target.size(); ++i)
        target[i] += scale * source[i];
}

Vec operator+(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

} // namespace alglab
