#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "severi/cache.hpp"

using namespace severi;

namespace {

// A scratch file that cleans up after itself.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
    void write(const std::string& content) const {
        std::ofstream out(path);
        out << content;
    }
    std::string read() const {
        std::ifstream in(path);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
};

} // namespace

TEST_CASE("save, load, recompute without new states") {
    TempFile file("severi_cache_roundtrip.txt");

    SeveriEngine engine;
    const BigInt expected = engine.severi_degree(4, 6);
    cache_save(file.path.string(), engine.snapshot());

    SeveriEngine revived;
    revived.preload(cache_load(file.path.string()));
    const auto before = revived.stats();
    CHECK(revived.severi_degree(4, 6) == expected);
    CHECK(revived.severi_degree(4, 6) == 437517);
    CHECK(revived.stats().states == before.states); // full cache hit, nothing recomputed
}

TEST_CASE("round-trip preserves every record exactly") {
    TempFile first("severi_cache_a.txt");
    TempFile second("severi_cache_b.txt");

    SeveriEngine engine;
    engine.tangency_degree(TangencyVector({2, 1}), 2, 4);
    engine.severi_degree(2, 5);
    const auto snapshot = engine.snapshot();

    cache_save(first.path.string(), snapshot);
    const auto loaded = cache_load(first.path.string());
    REQUIRE(loaded.size() == snapshot.size());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
        CHECK(loaded[i].first == snapshot[i].first);
        CHECK(loaded[i].second == snapshot[i].second);
    }

    // Saving what was loaded reproduces the file byte for byte.
    cache_save(second.path.string(), loaded);
    CHECK(first.read() == second.read());
    CHECK(first.read().rfind("severi-cache v1\n", 0) == 0);
}

TEST_CASE("unsorted input is canonicalized on save") {
    TempFile file("severi_cache_sorted.txt");
    SeveriEngine engine;
    engine.severi_degree(2, 4);
    auto entries = engine.snapshot();
    REQUIRE(entries.size() >= 2);
    std::swap(entries.front(), entries.back());
    cache_save(file.path.string(), entries);
    const auto loaded = cache_load(file.path.string());
    for (std::size_t i = 0; i + 1 < loaded.size(); ++i) CHECK(canonical_less(loaded[i].first, loaded[i + 1].first));
}

TEST_CASE("an empty cache with a valid header is fine") {
    TempFile file("severi_cache_empty.txt");
    file.write("severi-cache v1\n");
    CHECK(cache_load(file.path.string()).empty());
}

TEST_CASE("bad files are refused whole, never half-loaded") {
    TempFile file("severi_cache_bad.txt");

    file.write("severi-cache v2\n");
    CHECK_THROWS_AS(cache_load(file.path.string()), std::runtime_error);

    file.write("");
    CHECK_THROWS_AS(cache_load(file.path.string()), std::runtime_error);

    // One good record, then a corrupted one: the good record must not leak
    // out of a failed load.
    file.write("severi-cache v1\n1;0;[];[1];1\n2;0;[];[2;oops\n");
    CHECK_THROWS_AS(cache_load(file.path.string()), std::runtime_error);

    file.write("severi-cache v1\n1;0;[];[1];not-a-number\n");
    CHECK_THROWS_AS(cache_load(file.path.string()), std::runtime_error);

    file.write("severi-cache v1\n1;0;[];[2];1\n"); // weight 2 on a degree-1 state
    CHECK_THROWS_AS(cache_load(file.path.string()), std::runtime_error);

    file.write("severi-cache v1\n1;0;[];[1];1;extra\n");
    CHECK_THROWS_AS(cache_load(file.path.string()), std::runtime_error);

    try {
        file.write("severi-cache v1\n1;0;[];[1];1\nbroken\n");
        cache_load(file.path.string());
        FAIL("expected a refusal");
    } catch (const std::runtime_error& err) {
        CHECK(std::string(err.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(cache_load("/nonexistent/severi.cache"), std::runtime_error);
}

TEST_CASE("loading a cache never changes a value") {
    TempFile file("severi_cache_transparent.txt");

    SeveriEngine engine;
    engine.severi_degree(3, 5);
    cache_save(file.path.string(), engine.snapshot());

    SeveriEngine warm;
    warm.preload(cache_load(file.path.string()));
    SeveriEngine cold;
    // Warm and cold engines agree on queries far from the cached ones.
    CHECK(warm.severi_degree(2, 6) == cold.severi_degree(2, 6));
    CHECK(warm.tangency_degree(TangencyVector({1, 2}), 2, 5) == cold.tangency_degree(TangencyVector({1, 2}), 2, 5));
    CHECK(warm.tangency_degree(TangencyVector({1, 2}), 2, 5) == 7560);
}
