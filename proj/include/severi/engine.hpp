#pragma once

// The counting engine. A state (d, delta, alpha, beta) describes degree-d
// plane curves with delta nodes and prescribed contact to a fixed line:
// alpha holds contacts pinned at chosen points of the line, beta holds
// contacts free to slide along it. severi_number counts such curves through
// the complementary number of general points. The recursion degenerates one
// point at a time onto the line, trading the state for states of the same
// degree (a free contact becomes fixed) or of degree d-1 (the curve splits
// off the line), until everything bottoms out at lines through two points.

#include <atomic>
#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "severi/numeric.hpp"
#include "severi/tangency.hpp"

namespace severi {

struct SeveriState {
    int d = 1;
    int delta = 0;
    TangencyVector alpha;
    TangencyVector beta;

    // Number of general point conditions left: d(d+3)/2 - delta minus the
    // cost of the contact pattern. A fixed contact of order i eats i
    // conditions, a free one eats i-1. May go negative; callers treat
    // negative as "over-constrained, the locus is empty".
    int point_count() const;

    // Throws std::invalid_argument unless d >= 1, delta >= 0 and
    // weight(alpha) + weight(beta) == d (a degree-d curve meets a line in
    // exactly d points, counted with multiplicity).
    void validate() const;

    std::string str() const; // "(5,3,[],[5])"

    bool operator==(const SeveriState&) const = default;
};

// Orders states by (d, delta, alpha, beta); used for cache files and memo
// snapshots so serialized output is reproducible.
bool canonical_less(const SeveriState& a, const SeveriState& b);

struct SeveriStateHash {
    std::size_t operator()(const SeveriState& s) const noexcept;
};

enum class TermKind { fix_point, degenerate };

struct ExpansionTerm {
    TermKind kind;
    BigInt coefficient; // always >= 1
    SeveriState child;  // point_count exactly one less than the parent
};

struct Expansion {
    SeveriState state;
    std::vector<ExpansionTerm> terms;
};

// One degeneration step. Requires d >= 2 and point_count >= 1 (throws
// std::invalid_argument otherwise). Terms come out in a fixed order:
// fix-point terms by ascending contact order, then degenerate terms by
// canonical order of (alpha', beta'). Terms whose node budget would go
// negative are dropped here, so every child is a valid state.
Expansion expand_once(const SeveriState& s);

class SeveriEngine {
  public:
    struct Stats {
        std::size_t states = 0;        // distinct states memoized
        unsigned long long hits = 0;   // memo lookups that were already present
    };

    // Core count. Returns 0 for over-constrained states (point_count < 0)
    // and for delta > C(d,2) (a reduced degree-d curve cannot carry more
    // nodes than a union of d lines). Throws on malformed states.
    BigInt severi_number(const SeveriState& s);

    // N(delta, d): all d intersections with the line transverse and free.
    BigInt severi_degree(int delta, int d);

    // N(pi, delta, d): contact pattern pi, all contacts moving. Throws
    // std::invalid_argument when weight(pi) != d.
    BigInt tangency_degree(const TangencyVector& pi, int delta, int d);

    // Matrix [delta][d-1] of severi_degree(delta, d), delta = 0..delta_max,
    // d = 1..d_max, sharing this engine's memo across entries.
    std::vector<std::vector<BigInt>> severi_table(int delta_max, int d_max);

    // Memo contents sorted canonically; pairs well with preload to persist
    // work across runs. Loading only ever saves recomputation, it cannot
    // change any value.
    std::vector<std::pair<SeveriState, BigInt>> snapshot() const;
    void preload(const std::vector<std::pair<SeveriState, BigInt>>& entries);

    Stats stats() const;

  private:
    BigInt expand_and_sum(const SeveriState& s);

    mutable std::shared_mutex mutex_;
    std::unordered_map<SeveriState, BigInt, SeveriStateHash> memo_;
    std::atomic<unsigned long long> hits_{0};
};

} // namespace severi
