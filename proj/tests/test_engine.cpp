#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <vector>

#include "severi/engine.hpp"
#include "severi/parallel.hpp"
#include "test_util.hpp"

using namespace severi;
using severi::testutil::patterns_of_weight;
using severi::testutil::random_state;

namespace {

// Counts the ways to split 2n labeled points into unordered pairs, by
// direct enumeration: the first unplaced point picks its partner, recurse.
long long count_pairings(std::vector<bool>& used) {
    std::size_t first = used.size();
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) {
            first = i;
            break;
        }
    if (first == used.size()) return 1;
    used[first] = true;
    long long total = 0;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        total += count_pairings(used);
        used[j] = false;
    }
    used[first] = false;
    return total;
}

long long pairings(int points) {
    std::vector<bool> used(static_cast<std::size_t>(points), false);
    return count_pairings(used);
}

} // namespace

TEST_CASE("point budgets") {
    CHECK(SeveriState{5, 3, TangencyVector(), TangencyVector({5})}.point_count() == 17);
    CHECK(SeveriState{4, 2, TangencyVector(), TangencyVector({2, 1})}.point_count() == 11);
    CHECK(SeveriState{1, 0, TangencyVector({1}), TangencyVector()}.point_count() == 1);
    // A fixed contact costs one more condition than a free one of the same order.
    CHECK(SeveriState{4, 2, TangencyVector({1}), TangencyVector({1, 1})}.point_count() == 10);
}

TEST_CASE("state validation") {
    CHECK_NOTHROW(SeveriState{3, 1, TangencyVector({1}), TangencyVector({2})}.validate());
    CHECK_THROWS_AS((SeveriState{3, 1, TangencyVector({1}), TangencyVector({1})}.validate()),
                    std::invalid_argument); // weights sum to 2, not 3
    CHECK_THROWS_AS((SeveriState{0, 0, TangencyVector(), TangencyVector()}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SeveriState{2, -1, TangencyVector(), TangencyVector({2})}.validate()), std::invalid_argument);
    CHECK(SeveriState{5, 3, TangencyVector(), TangencyVector({5})}.str() == "(5,3,[],[5])");
}

TEST_CASE("base cases at degree one") {
    SeveriEngine engine;
    CHECK(engine.severi_number({1, 0, TangencyVector({1}), TangencyVector()}) == 1);
    CHECK(engine.severi_number({1, 0, TangencyVector(), TangencyVector({1})}) == 1);
    CHECK(engine.severi_number({1, 1, TangencyVector(), TangencyVector({1})}) == 0); // a line has no nodes
}

TEST_CASE("counts against independent enumerations") {
    SeveriEngine engine;
    // A 1-nodal conic through 4 general points is a pair of lines; the count
    // is the number of ways to pair up the 4 points.
    CHECK(engine.severi_degree(1, 2) == pairings(4));
    // A 3-nodal cubic through 6 points is three lines, one per pair.
    CHECK(engine.severi_degree(3, 3) == pairings(6));
    CHECK(engine.severi_degree(3, 3) == 15);
    // A 2-nodal cubic through 7 points is a conic plus a line: choose the 2
    // points the line passes through.
    CHECK(engine.severi_degree(2, 3) == binomial(7, 2));
    // Smooth curves fill the whole linear system.
    for (int d = 1; d <= 9; ++d) CHECK(engine.severi_degree(0, d) == 1);
    for (int d = 1; d <= 7; ++d) CHECK(engine.tangency_degree(TangencyVector({d}), 0, d) == 1);
}

TEST_CASE("reference counts") {
    SeveriEngine engine;
    CHECK(engine.severi_number({2, 1, TangencyVector(), TangencyVector({2})}) == 3);
    CHECK(engine.severi_number({5, 3, TangencyVector(), TangencyVector({5})}) == 7915);
    CHECK(engine.severi_degree(3, 4) == 675);
    CHECK(engine.severi_degree(4, 6) == 437517);
    CHECK(engine.tangency_degree(TangencyVector({2, 1}), 3, 4) == 2364);
    CHECK(engine.tangency_degree(TangencyVector({3, 1}), 3, 5) == 49580);
    CHECK(engine.tangency_degree(TangencyVector({2, 1}), 2, 4) == 1010);
}

TEST_CASE("guards return empty counts, errors stay errors") {
    SeveriEngine engine;
    // Over-constrained: more conditions than the system has dimensions.
    CHECK(SeveriState{2, 6, TangencyVector(), TangencyVector({2})}.point_count() < 0);
    CHECK(engine.severi_number({2, 6, TangencyVector(), TangencyVector({2})}) == 0);
    // Over-noded: delta beyond C(d,2) with a nonnegative budget.
    CHECK(engine.severi_number({3, 4, TangencyVector(), TangencyVector({3})}) == 0);
    // Malformed states throw instead of returning 0.
    CHECK_THROWS_AS(engine.severi_number({3, 0, TangencyVector(), TangencyVector({1})}), std::invalid_argument);
    CHECK_THROWS_AS(engine.tangency_degree(TangencyVector({3, 1}), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(engine.severi_degree(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(engine.severi_degree(1, 0), std::invalid_argument);
}

TEST_CASE("single expansion step") {
    const SeveriState root{5, 3, TangencyVector(), TangencyVector({5})};
    const Expansion expansion = expand_once(root);
    // Only order-1 contacts are present, and no pattern of weight 4
    // dominates [5], so the fix-point term is alone.
    REQUIRE(expansion.terms.size() == 1);
    CHECK(expansion.terms[0].kind == TermKind::fix_point);
    CHECK(expansion.terms[0].coefficient == 1);
    CHECK(expansion.terms[0].child == SeveriState{5, 3, TangencyVector({1}), TangencyVector({4})});

    CHECK_THROWS_AS(expand_once({1, 0, TangencyVector(), TangencyVector({1})}), std::invalid_argument);
    CHECK_THROWS_AS(expand_once({2, 6, TangencyVector(), TangencyVector({2})}), std::invalid_argument); // budget < 1
}

TEST_CASE("expansion terms on random states") {
    std::mt19937 rng(20240817);
    int expanded = 0;
    while (expanded < 250) {
        const SeveriState s = random_state(rng, 8);
        if (s.point_count() < 1) continue;
        ++expanded;
        const Expansion expansion = expand_once(s);
        CHECK(expansion.state == s);

        bool seen_degenerate = false;
        int last_fix_order = 0;
        const Expansion again = expand_once(s);
        REQUIRE(again.terms.size() == expansion.terms.size());
        for (std::size_t i = 0; i < expansion.terms.size(); ++i) {
            const auto& term = expansion.terms[i];
            // Deterministic: a second expansion yields the same term list.
            CHECK(again.terms[i].coefficient == term.coefficient);
            CHECK(again.terms[i].child == term.child);
            CHECK(again.terms[i].kind == term.kind);

            CHECK(term.coefficient >= 1);
            CHECK_NOTHROW(term.child.validate());
            // Every child consumes exactly one point.
            CHECK(term.child.point_count() == s.point_count() - 1);

            if (term.kind == TermKind::fix_point) {
                CHECK_FALSE(seen_degenerate); // fix-point terms come first...
                const int k = term.child.alpha.weight() - s.alpha.weight();
                CHECK(k > last_fix_order); // ...ordered by ascending contact order
                last_fix_order = k;
                CHECK(term.child.d == s.d);
                CHECK(term.child.delta == s.delta);
            } else {
                seen_degenerate = true;
                CHECK(term.child.d == s.d - 1);
                CHECK(term.child.delta <= s.delta);
                CHECK(term.child.alpha.weight() + term.child.beta.weight() == s.d - 1);
                // The residual keeps a sub-pattern of the fixed contacts and
                // dominates the free ones.
                CHECK(vector_binomial(s.alpha, term.child.alpha) >= 1);
                CHECK(vector_binomial(term.child.beta, s.beta) >= 1);
            }
        }
    }
}

TEST_CASE("recursion is consistent with its own expansion") {
    SeveriEngine engine;
    // Every valid state with d <= 6, delta up to one past the node bound:
    // the count must equal the weighted sum over one expansion step.
    for (int d = 2; d <= 6; ++d) {
        for (int delta = 0; delta <= d * (d - 1) / 2 + 1; ++delta) {
            for (int wa = 0; wa <= d; ++wa) {
                for (const auto& alpha : patterns_of_weight(wa)) {
                    for (const auto& beta : patterns_of_weight(d - wa)) {
                        const SeveriState s{d, delta, alpha, beta};
                        if (s.point_count() < 1) continue;
                        BigInt total = 0;
                        for (const auto& term : expand_once(s).terms)
                            total += term.coefficient * engine.severi_number(term.child);
                        CHECK(engine.severi_number(s) == total);
                    }
                }
            }
        }
    }
}

TEST_CASE("counts are nonnegative and independent of query order") {
    std::mt19937 rng(7);
    SeveriEngine forward;
    std::vector<SeveriState> states;
    for (int i = 0; i < 60; ++i) {
        const SeveriState s = random_state(rng, 7);
        if (s.point_count() >= 0) states.push_back(s);
    }
    std::vector<BigInt> values;
    for (const auto& s : states) {
        values.push_back(forward.severi_number(s));
        CHECK(values.back() >= 0);
    }
    SeveriEngine backward;
    for (std::size_t i = states.size(); i-- > 0;) CHECK(backward.severi_number(states[i]) == values[i]);
}

TEST_CASE("memo preload is transparent") {
    SeveriEngine cold;
    const BigInt expected = cold.severi_degree(3, 6);

    SeveriEngine warm;
    warm.preload(cold.snapshot());
    const auto before = warm.stats();
    CHECK(warm.severi_degree(3, 6) == expected);
    // The preloaded memo already holds the whole recursion tree.
    CHECK(warm.stats().states == before.states);

    // A partial preload changes nothing about the value either.
    SeveriEngine partial;
    auto snapshot = cold.snapshot();
    snapshot.resize(snapshot.size() / 2);
    partial.preload(snapshot);
    CHECK(partial.severi_degree(3, 6) == expected);
}

TEST_CASE("snapshots are canonically sorted") {
    SeveriEngine engine;
    engine.severi_degree(2, 4);
    const auto snapshot = engine.snapshot();
    CHECK(snapshot.size() == engine.stats().states);
    for (std::size_t i = 0; i + 1 < snapshot.size(); ++i)
        CHECK(canonical_less(snapshot[i].first, snapshot[i + 1].first));
}

TEST_CASE("tables share the memo and match single queries") {
    SeveriEngine engine;
    const auto table = engine.severi_table(2, 6);
    REQUIRE(table.size() == 3);
    REQUIRE(table[0].size() == 6);
    for (int d = 1; d <= 6; ++d) CHECK(table[0][static_cast<std::size_t>(d - 1)] == 1);
    CHECK(table[1][3] == 27);  // N(1,4)
    CHECK(table[2][4] == 882); // N(2,5)
    SeveriEngine fresh;
    for (int delta = 0; delta <= 2; ++delta)
        for (int d = 1; d <= 6; ++d)
            CHECK(table[static_cast<std::size_t>(delta)][static_cast<std::size_t>(d - 1)] ==
                  fresh.severi_degree(delta, d));
}

TEST_CASE("concurrent queries agree with sequential ones") {
    std::mt19937 rng(99);
    std::vector<SeveriState> states;
    for (int i = 0; i < 40; ++i) states.push_back(random_state(rng, 7));

    SeveriEngine sequential;
    std::vector<BigInt> expected;
    for (const auto& s : states) expected.push_back(sequential.severi_number(s));

    SeveriEngine concurrent;
    std::vector<BigInt> got(states.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < states.size(); ++i)
        tasks.push_back([&concurrent, &states, &got, i] { got[i] = concurrent.severi_number(states[i]); });
    run_parallel(std::move(tasks), 4);

    CHECK(got == expected);
    CHECK(concurrent.stats().states == sequential.stats().states);
}
