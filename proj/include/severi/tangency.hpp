#pragma once

/* Contact data between a plane curve and a fixed line, stored as a
 * multiplicity vector: entry i (1-based order) counts the points where
 * the curve meets the line with local intersection multiplicity i.
 *
 * weight = sum i*l_i is the total intersection number, so for a degree-d
 * curve it must equal d.  size = sum l_i is the number of contact points.
 * The classical invariants m = prod i^{l_i} and n = (sum l_i)!/prod l_i!
 * multiply to the degree of the locus of such divisors on the line.
 */

#include "severi/numeric.hpp"

#include <string>
#include <vector>

namespace severi {

class TangencyVector {
public:
    TangencyVector() = default;

    /* entries must be >= 0; trailing zeros are trimmed so equal contact
     * data compares equal and can key a memo table */
    explicit TangencyVector(std::vector<int> multiplicities);

    /* bracket notation: "[2,1]" means two transverse points and one
     * simple tangency; "[]" is the empty vector.  Strict: no blanks. */
    static TangencyVector parse(const std::string& text);
    std::string str() const;

    const std::vector<int>& entries() const { return m_; }
    int count(int order) const; // 0 for orders beyond the stored range
    int max_order() const { return static_cast<int>(m_.size()); }
    bool empty() const { return m_.empty(); }

    int weight() const;
    int size() const;

    /* pi +- e_k for contact order k (1-based).  minus_one throws if no
     * contact of that order is present. */
    TangencyVector plus_one(int order) const;
    TangencyVector minus_one(int order) const;

    friend bool operator==(const TangencyVector&, const TangencyVector&) = default;

private:
    std::vector<int> m_;
};

/* shorter vectors first, then entrywise lexicographic: the enumeration
 * and serialization order used everywhere (traces, cache files) */
bool canonical_less(const TangencyVector& a, const TangencyVector& b);

BigInt m_invariant(const TangencyVector& pi); // prod i^{l_i}
BigInt n_invariant(const TangencyVector& pi); // multinomial (sum l_i)! / prod l_i!
BigInt gamma_degree(const TangencyVector& pi); // m(pi) * n(pi)

/* prod_i C(a_i, b_i); zero as soon as b exceeds a somewhere */
BigInt vector_binomial(const TangencyVector& a, const TangencyVector& b);

/* all b <= a componentwise, canonically ordered; exactly prod (a_i + 1)
 * of them */
std::vector<TangencyVector> enumerate_sub(const TangencyVector& a);

/* all c >= b componentwise with weight(c) <= max_weight, canonically
 * ordered.  Entries beyond index max_weight cannot occur (a single
 * contact of order k already weighs k). */
std::vector<TangencyVector> enumerate_super(const TangencyVector& b, int max_weight);

} // namespace severi
