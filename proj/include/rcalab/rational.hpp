#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcalab {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; always go through this.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

// Accepts "p", "-p" and "p/q".
inline Rational parse_rational(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational number: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 raised to a negative power");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational out = 1, b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace rcalab
