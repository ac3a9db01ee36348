#pragma once

// Reference data the verification suite and the tests check the engine
// against: individual counts, closed forms for the low node counts, and the
// tangency families with published general formulas. Everything is exact.

#include <string>
#include <vector>

#include "severi/nodepoly.hpp"
#include "severi/numeric.hpp"
#include "severi/polynomial.hpp"
#include "severi/tangency.hpp"

namespace severi {

struct ValueFixture {
    std::string id;
    TangencyVector pi; // ignored when plain
    bool plain;        // true: N(delta, d) with all contacts transverse and free
    int delta;
    int d;
    BigInt expected;
    bool fast; // part of the quick suite
};

// N(delta, e) agrees with poly(e) for e = e_lo .. e_hi.
struct ClosedFormFixture {
    std::string id;
    int delta;
    RationalPoly poly;
    int e_lo;
    int e_hi;
};

// A tangency family whose general formula is on record. The reference
// polynomial is quoted in the variable d = e + shift (the families were
// published indexed one above the curve degree); the engine polynomial
// P(e) must equal reference(e + shift). Advisory fixtures are reported,
// never asserted: their quoted formulas look typo-ridden (one goes negative
// for every degree in range).
struct FamilyFixture {
    std::string id;
    PolynomialFamily family;
    RationalPoly reference;
    int shift;
    bool advisory;
};

const std::vector<ValueFixture>& value_fixtures();
const std::vector<ClosedFormFixture>& closed_form_fixtures();
const std::vector<FamilyFixture>& family_fixtures();

// The degree-law sweep: every tail with at most two higher contacts up to
// contact order 4, crossed with delta = 0..3.
const std::vector<std::vector<int>>& degree_law_tails();

} // namespace severi
