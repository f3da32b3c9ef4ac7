#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace rectdual {

/// Exact rational number used for all combinatorial geometry.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat &r) { return r.convert_to<double>(); }

inline BigInt rat_num(const Rat &r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat &r) { return boost::multiprecision::denominator(r); }

/// Serializes as "p" for integers and "p/q" otherwise.
inline std::string format_rational(const Rat &r)
{
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Accepts "p", "p/q" and plain decimals like "-1.25".
inline Rat parse_rational(const std::string &s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rat(p, q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos)
        return Rat(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    BigInt p(digits);
    BigInt q = 1;
    for (size_t i = 0; i < frac_len; ++i)
        q *= 10;
    return Rat(p, q);
}

/// Rounds a double to `sig` significant decimal digits and returns the exact
/// rational value of that decimal. Used when handing numeric solver output
/// back to the exact pipeline.
inline Rat rat_from_double(double x, int sig = 12)
{
    if (x == 0.0)
        return Rat(0);
    if (!std::isfinite(x))
        throw std::invalid_argument("non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", sig - 1, x);
    // buf looks like -1.234567e+05
    std::string s(buf);
    auto epos = s.find('e');
    std::string mant = s.substr(0, epos);
    int exp10 = std::stoi(s.substr(epos + 1));
    Rat m = parse_rational(mant);
    Rat scale = 1;
    for (int i = 0; i < std::abs(exp10); ++i)
        scale *= 10;
    return exp10 >= 0 ? Rat(m * scale) : Rat(m / scale);
}

inline Rat rat_abs(const Rat &r) { return r < 0 ? Rat(-r) : r; }

} // namespace rectdual
