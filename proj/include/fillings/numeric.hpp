#ifndef FILLINGS_NUMERIC_HPP
#define FILLINGS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fillings {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer floor_int(const Rational& r) {
    Integer n = numerator(r);
    Integer d = denominator(r);  // canonical: d > 0
    Integer q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Accepts "p" or "p/q" with optional sign on p; q > 0.
inline bool parse_rational(const std::string& text, Rational& out) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            out = Rational(Integer(text));
        } else {
            Integer p(text.substr(0, slash));
            Integer q(text.substr(slash + 1));
            if (q <= 0) return false;
            out = Rational(p, q);
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace fillings

#endif
