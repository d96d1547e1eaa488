#ifndef DRMAT_RATIONAL_HPP
#define DRMAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace drmat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer int_gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer int_lcm(const Integer& a, const Integer& b)
{
    return boost::multiprecision::lcm(a, b);
}

/// gcd on Q normalized so that gcd(a,b)*x has integer content whenever a,b do.
inline Rational rat_gcd(const Rational& a, const Rational& b)
{
    if (a == 0) return b < 0 ? Rational(-b) : b;
    if (b == 0) return a < 0 ? Rational(-a) : a;
    return Rational(int_gcd(num(a), num(b)), int_lcm(den(a), den(b)));
}

inline std::string to_string(const Rational& q)
{
    return q.str();
}

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace drmat

#endif
