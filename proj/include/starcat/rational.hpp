#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace starcat {

// Exact arithmetic backbone. GMP keeps rationals canonical (reduced,
// positive denominator), which is exactly the invariant we need.
using BigInt = mpz_class;
using Rational = mpq_class;

// Always prints an explicit denominator ("3/1"), so files and JSON
// reports are unambiguous. Canonicalizes a copy first: mpq_class built from
// a (num, den) pair is not reduced until asked.
inline std::string fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    Rational q;
    if (slash == std::string::npos) {
        q = Rational(BigInt(s));
    } else {
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        q = Rational(num, den);
        q.canonicalize();
    }
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace starcat
