#ifndef DOMCOUNT_EXACT_HPP
#define DOMCOUNT_EXACT_HPP

// Exact arbitrary-precision counters and weights. Counts are never rounded;
// rationals are kept reduced with positive denominator (cpp_rational does both).

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace domcount {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Thrown when an enumeration would exceed the configured work cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline BigCount pow_count(const BigCount& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_count: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline BigRational pow_rational(const BigRational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_rational: negative exponent");
    BigCount num = boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                              static_cast<unsigned>(exp));
    BigCount den = boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                              static_cast<unsigned>(exp));
    return BigRational(num, den);
}

// log2 of a positive integer, accurate to long double precision even when the
// value itself does not fit in a long double.
inline long double log2_count(const BigCount& x) {
    if (x <= 0) throw std::invalid_argument("log2_count: nonpositive value");
    unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 62) return std::log2(x.convert_to<long double>());
    BigCount top = x >> (bits - 62);
    return std::log2(top.convert_to<long double>()) + static_cast<long double>(bits - 62);
}

inline long double log2_rational(const BigRational& x) {
    return log2_count(boost::multiprecision::numerator(x)) -
           log2_count(boost::multiprecision::denominator(x));
}

inline std::string to_decimal(const BigCount& x) { return x.str(); }

inline std::string to_decimal(const BigRational& x) {
    BigCount den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

// Parses "p" or "p/q" with q > 0.
inline BigRational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigCount(text));
        BigCount num(text.substr(0, slash));
        BigCount den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return BigRational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

}  // namespace domcount

#endif
