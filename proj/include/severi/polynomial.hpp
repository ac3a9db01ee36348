#pragma once

/* Dense univariate polynomials over Rational, plus the two exact
 * numerical tools the project needs: interpolation through integer
 * nodes and forward-difference tables.  Degrees here stay small
 * (nothing above 14), so dense storage is the right shape.
 */

#include "severi/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace severi {

class RationalPoly {
public:
    RationalPoly() = default;

    /* coefficients low to high; trailing zeros are trimmed so that equal
     * polynomials compare equal */
    explicit RationalPoly(std::vector<Rational> coeffs);

    /* degree of the zero polynomial is -1 by convention */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /* coefficient of x^k; zero beyond the stored range */
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& x) const;
    Rational evaluate(long long x) const { return evaluate(Rational(x)); }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly scaled(const Rational& f) const;

    /* P(x+h) expanded in x, exactly */
    RationalPoly shifted(long long h) const;

    /* highest power first: "9/2 e^6 - 27 e^5 + ... + 525" */
    std::string str(const std::string& var = "e") const;

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

private:
    std::vector<Rational> c_;
};

/* The unique polynomial of degree < points.size() through the given
 * points, computed exactly in Newton form.  Throws on duplicate nodes. */
RationalPoly interpolate(const std::vector<std::pair<long long, Rational>>& points);

/* order-th forward differences of values sampled at consecutive integers.
 * For a degree-r polynomial the r-th row is constant r!·(leading coeff);
 * that is what the leading-term checks use.  order must be < values.size(). */
std::vector<Rational> forward_difference_table(std::vector<Rational> values, int order);

} // namespace severi
