#include "severi/polynomial.hpp"

#include <set>
#include <sstream>

namespace severi {

static const Rational kZero = 0;

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::evaluate(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RationalPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::scaled(const Rational& f) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= f;
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::shifted(long long h) const {
    /* Horner in the shifted variable: fold coefficients from the top,
     * multiplying the accumulator by (x + h) each round. */
    RationalPoly acc;
    RationalPoly xh(std::vector<Rational>{Rational(h), Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * xh + RationalPoly(std::vector<Rational>{*it});
    return acc;
}

std::string RationalPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = coeff(k);
        if (a == 0) continue;
        Rational mag = a < 0 ? Rational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1 && k > 0);
        if (!unit_coeff) os << to_string(mag);
        if (k > 0) {
            if (!unit_coeff) os << " ";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RationalPoly interpolate(const std::vector<std::pair<long long, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    {
        std::set<long long> xs;
        for (const auto& p : points)
            if (!xs.insert(p.first).second)
                throw std::invalid_argument("interpolate: duplicate node x=" + std::to_string(p.first));
    }

    /* Newton divided differences.  dd starts as the y-column and each pass
     * leaves dd[j] = f[x_{j-level} .. x_j]. */
    const std::size_t n = points.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    std::vector<Rational> top(n); // dd[j..j] after j passes, i.e. f[x_0..x_j]
    top[0] = dd[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t j = n - 1; j >= level; --j)
            dd[j] = (dd[j] - dd[j - 1]) / Rational(points[j].first - points[j - level].first);
        top[level] = dd[level];
    }

    /* expand sum_j top[j] * prod_{i<j} (x - x_i) */
    RationalPoly result;
    RationalPoly basis(std::vector<Rational>{Rational(1)});
    for (std::size_t j = 0; j < n; ++j) {
        result = result + basis.scaled(top[j]);
        basis = basis * RationalPoly(std::vector<Rational>{Rational(-points[j].first), Rational(1)});
    }
    return result;
}

std::vector<Rational> forward_difference_table(std::vector<Rational> values, int order) {
    if (order < 0) throw std::invalid_argument("forward_difference_table: negative order");
    if (order >= static_cast<int>(values.size()))
        throw std::invalid_argument("forward_difference_table: order >= number of values");
    for (int pass = 0; pass < order; ++pass) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return values;
}

} // namespace severi
