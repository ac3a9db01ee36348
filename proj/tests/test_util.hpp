#pragma once

// Shared helpers for the randomized property tests. Everything is seeded,
// so failures reproduce.

#include <random>
#include <vector>

#include "severi/engine.hpp"
#include "severi/tangency.hpp"

namespace severi::testutil {

// Uniform-ish multiplicity vector of exactly the given weight: repeatedly
// split off a random part. Not uniform over partitions, which is fine for
// property testing.
inline TangencyVector random_pattern(std::mt19937& rng, int weight) {
    std::vector<int> v;
    int rest = weight;
    while (rest > 0) {
        const int part = std::uniform_int_distribution<int>(1, rest)(rng);
        if (static_cast<int>(v.size()) < part) v.resize(static_cast<std::size_t>(part), 0);
        ++v[static_cast<std::size_t>(part - 1)];
        rest -= part;
    }
    return TangencyVector(std::move(v));
}

// Random valid state with 2 <= d <= d_max. The node count may exceed the
// C(d,2) bound by one so the over-noded guard gets exercised too.
inline SeveriState random_state(std::mt19937& rng, int d_max) {
    const int d = std::uniform_int_distribution<int>(2, d_max)(rng);
    const int delta = std::uniform_int_distribution<int>(0, d * (d - 1) / 2 + 1)(rng);
    const int alpha_weight = std::uniform_int_distribution<int>(0, d)(rng);
    return SeveriState{d, delta, random_pattern(rng, alpha_weight), random_pattern(rng, d - alpha_weight)};
}

// All multiplicity vectors of exactly the given weight.
inline std::vector<TangencyVector> patterns_of_weight(int weight) {
    std::vector<TangencyVector> out;
    for (const auto& v : enumerate_super(TangencyVector(), weight))
        if (v.weight() == weight) out.push_back(v);
    return out;
}

} // namespace severi::testutil
