#pragma once

// Memo persistence. The cache file is line oriented and sorted, so repeated
// saves of the same memo are byte-identical:
//
//   severi-cache v1
//   d;delta;alpha;beta;value
//   ...
//
// with alpha and beta in bracket notation and the value in decimal. Loading
// is strict: a wrong header or any malformed record refuses the whole file
// (std::runtime_error naming the line) rather than silently dropping data.
// A loaded cache can only ever save recomputation; values are never changed
// by it.

#include <string>
#include <utility>
#include <vector>

#include "severi/engine.hpp"

namespace severi {

inline constexpr const char* cache_header = "severi-cache v1";

void cache_save(const std::string& path, const std::vector<std::pair<SeveriState, BigInt>>& entries);

std::vector<std::pair<SeveriState, BigInt>> cache_load(const std::string& path);

} // namespace severi
