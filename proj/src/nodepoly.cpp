#include "severi/nodepoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace severi {

PolynomialFamily::PolynomialFamily(int delta, std::vector<int> tail)
    : delta_(delta), tail_(std::move(tail)) {
    if (delta_ < 0) throw std::invalid_argument("PolynomialFamily: node count must be >= 0");
    for (int v : tail_)
        if (v < 0) throw std::invalid_argument("PolynomialFamily: negative tail multiplicity");
    while (!tail_.empty() && tail_.back() == 0) tail_.pop_back();
}

int PolynomialFamily::tail_weight() const {
    int w = 0;
    for (std::size_t i = 0; i < tail_.size(); ++i) w += static_cast<int>(i + 2) * tail_[i];
    return w;
}

int PolynomialFamily::tail_size() const {
    int s = 0;
    for (int v : tail_) s += v;
    return s;
}

TangencyVector PolynomialFamily::pi_at(int e) const {
    const int transverse = e - tail_weight();
    if (transverse < 0)
        throw std::invalid_argument("PolynomialFamily: degree " + std::to_string(e) +
                                    " is too small for the tail of weight " + std::to_string(tail_weight()));
    std::vector<int> v;
    v.reserve(tail_.size() + 1);
    v.push_back(transverse);
    v.insert(v.end(), tail_.begin(), tail_.end());
    return TangencyVector(std::move(v));
}

int PolynomialFamily::default_e_min() const { return delta_ + std::max(tail_weight(), 1); }

std::string PolynomialFamily::str() const {
    std::ostringstream os;
    os << "delta=" << delta_ << " pi(e)=[";
    if (tail_weight() == 0)
        os << "e";
    else
        os << "e-" << tail_weight();
    for (int v : tail_) os << "," << v;
    os << "]";
    return os.str();
}

RationalPoly node_polynomial(SeveriEngine& engine, const PolynomialFamily& f, int e_min, int samples) {
    if (e_min < f.delta() + 1)
        throw std::invalid_argument("node_polynomial: window start " + std::to_string(e_min) +
                                    " is below delta+1 = " + std::to_string(f.delta() + 1));
    if (e_min < f.tail_weight())
        throw std::invalid_argument("node_polynomial: window start " + std::to_string(e_min) +
                                    " leaves no room for the tail (weight " + std::to_string(f.tail_weight()) + ")");
    const int needed = f.expected_degree() + 1;
    if (samples < needed + 1)
        throw std::invalid_argument("node_polynomial: need at least " + std::to_string(needed + 1) +
                                    " samples for degree " + std::to_string(f.expected_degree()) +
                                    " plus a guard, got " + std::to_string(samples));

    std::vector<std::pair<long long, Rational>> points;
    points.reserve(static_cast<std::size_t>(needed));
    for (int e = e_min; e < e_min + needed; ++e)
        points.emplace_back(e, Rational(engine.tangency_degree(f.pi_at(e), f.delta(), e)));
    RationalPoly poly = interpolate(points);

    // Every extra sample must land on the interpolant, otherwise the window
    // starts below the range where the family is a polynomial.
    for (int e = e_min + needed; e < e_min + samples; ++e) {
        const Rational actual(engine.tangency_degree(f.pi_at(e), f.delta(), e));
        const Rational predicted = poly.evaluate(Rational(e));
        if (actual != predicted)
            throw std::runtime_error("node_polynomial: " + f.str() + " is not polynomial over the window: at e=" +
                                     std::to_string(e) + " the engine gives " + to_string(actual) +
                                     " but the interpolant gives " + to_string(predicted));
    }
    return poly;
}

RationalPoly node_polynomial(SeveriEngine& engine, const PolynomialFamily& f) {
    return node_polynomial(engine, f, f.default_e_min(), f.expected_degree() + 2);
}

CoefficientRecord leading_coefficients(int delta) {
    if (delta < 1) throw std::invalid_argument("leading_coefficients: need delta >= 1");
    CoefficientRecord rec;
    rec.delta = delta;
    rec.degree = 2 * delta;
    rec.a_top = Rational(ipow(BigInt(3), delta), factorial(delta));
    rec.a_sub = Rational(BigInt(-2) * ipow(BigInt(3), delta), factorial(delta - 1));
    return rec;
}

LeadingTermReport verify_leading_terms(SeveriEngine& engine, int delta, int e_min) {
    if (delta < 1) throw std::invalid_argument("verify_leading_terms: need delta >= 1");
    if (e_min < delta + 1)
        throw std::invalid_argument("verify_leading_terms: window start " + std::to_string(e_min) +
                                    " is below delta+1 = " + std::to_string(delta + 1));
    const int r = 2 * delta;

    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(r) + 1);
    for (int e = e_min; e <= e_min + r; ++e) values.emplace_back(engine.severi_degree(delta, e));

    const Rational top = forward_difference_table(values, r).front();
    const Rational sub = forward_difference_table(values, r - 1).front();

    LeadingTermReport rep;
    rep.delta = delta;
    rep.e_min = e_min;
    rep.top_difference = numerator(top);
    rep.expected_difference = factorial(r) * ipow(BigInt(3), delta) / factorial(delta);
    rep.a_top = top / Rational(factorial(r));
    rep.a_sub = sub / Rational(factorial(r - 1)) -
                rep.a_top * Rational(BigInt(r) * e_min + BigInt(r) * (r - 1) / 2);

    const CoefficientRecord expected = leading_coefficients(delta);
    rep.passed = rep.a_top == expected.a_top && rep.a_sub == expected.a_sub;
    return rep;
}

} // namespace severi
