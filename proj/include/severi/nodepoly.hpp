#pragma once

// Families of tangency counts, polynomial in the curve degree. A family
// fixes the node count delta and the higher contact orders (the tail); the
// order-1 multiplicity is whatever the degree leaves over. Sampling the
// engine along such a family and interpolating recovers the family's node
// polynomial exactly; finite differences recover its top two coefficients
// without a full interpolation, which keeps delta = 6, 7 affordable.

#include <string>
#include <vector>

#include "severi/engine.hpp"
#include "severi/numeric.hpp"
#include "severi/polynomial.hpp"
#include "severi/tangency.hpp"

namespace severi {

class PolynomialFamily {
  public:
    // tail[i] is the multiplicity of contact order i+2; trailing zeros are
    // trimmed. An empty tail gives the plain Severi degree e -> N(delta, e).
    PolynomialFamily(int delta, std::vector<int> tail);

    int delta() const { return delta_; }
    const std::vector<int>& tail() const { return tail_; }

    int tail_weight() const; // sum of i * l_i over the tail, i >= 2
    int tail_size() const;   // sum of the tail multiplicities

    // The full contact pattern at curve degree e: order-1 multiplicity
    // e - tail_weight(), then the tail. Throws when e is too small for the
    // tail to fit.
    TangencyVector pi_at(int e) const;

    // Degree of the family polynomial: 2 delta + (number of higher contacts).
    int expected_degree() const { return 2 * delta_ + tail_size(); }

    // Smallest sample degree the interpolation defaults to. delta + 1 for
    // the plain families; tails push the window up by their weight, which
    // keeps at least delta transverse contacts in play at every sample
    // (verified against every family in the test suite; smaller windows can
    // leave the polynomial range).
    int default_e_min() const;

    std::string str() const; // "delta=2 pi(e)=[e-2,1]"

    bool operator==(const PolynomialFamily&) const = default;

  private:
    int delta_;
    std::vector<int> tail_;
};

// Interpolates the family polynomial from engine samples at
// e = e_min .. e_min + samples - 1. The first expected_degree + 1 samples
// determine the polynomial; every further sample is a guard checked against
// the interpolant, so samples must be at least expected_degree + 2. A guard
// mismatch throws std::runtime_error naming the failing degree (the window
// starts below the polynomial range). Preconditions (e_min >= delta + 1,
// room for the tail, enough samples) throw std::invalid_argument.
RationalPoly node_polynomial(SeveriEngine& engine, const PolynomialFamily& f, int e_min, int samples);

// Same, with e_min = f.default_e_min() and the minimal sample count.
RationalPoly node_polynomial(SeveriEngine& engine, const PolynomialFamily& f);

struct CoefficientRecord {
    int delta = 0;
    int degree = 0;  // 2 delta
    Rational a_top;  // 3^delta / delta!
    Rational a_sub;  // -2 * 3^delta / (delta - 1)!
};

// The closed-form top two coefficients of e -> N(delta, e). delta >= 1.
CoefficientRecord leading_coefficients(int delta);

struct LeadingTermReport {
    int delta = 0;
    int e_min = 0;
    BigInt top_difference;       // the (2 delta)-th forward difference at e_min
    BigInt expected_difference;  // (2 delta)! * 3^delta / delta!
    Rational a_top;              // recovered from the differences
    Rational a_sub;
    bool passed = false;
};

// Samples N(delta, e) at the 2 delta + 1 degrees starting at e_min and
// recovers the top two coefficients from the forward-difference table:
// a_r = D^r / r! and a_{r-1} = D^{r-1}/(r-1)! - a_r (r e_min + r(r-1)/2)
// for r = 2 delta. Passes when both match leading_coefficients(delta).
LeadingTermReport verify_leading_terms(SeveriEngine& engine, int delta, int e_min);

} // namespace severi
