#pragma once

/* Exact arithmetic substrate: unbounded integers and rationals.
 *
 * Everything the engine counts and every polynomial coefficient lives in
 * these types.  boost::multiprecision supplies the representations; the
 * rational backend keeps values in lowest terms with a positive
 * denominator, which is exactly the canonical form we rely on for
 * equality and serialization.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace severi {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* C(n,k), exact.  Out-of-range k yields 0 rather than an error: the
 * recursion multiplies chains of binomials and relies on a zero factor to
 * kill invalid terms uniformly. */
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i) after this line
    }
    return r;
}

inline BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/* base^exp for nonnegative exponents; 0^0 == 1 by the usual combinatorial
 * convention. */
inline BigInt ipow(const BigInt& base, long long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/* "9/2", "-27", "525" — lowest terms, no "/1" suffix. */
inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/* Strict decimal parse for cache records: digits only, optional leading
 * minus, no blanks.  cpp_int's own constructor accepts some forms we do
 * not want to let into cache files. */
inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_bigint: empty string");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("parse_bigint: no digits");
    if (s[i] == '0' && (s.size() > i + 1 || i == 1))
        throw std::invalid_argument("parse_bigint: leading zero"); // also rejects "-0"
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_bigint: bad digit in \"" + s + "\"");
    return BigInt(s);
}

} // namespace severi
