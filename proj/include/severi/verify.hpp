#pragma once

// The self-check suite behind `severi verify`. Each check compares engine
// output against the reference data in fixtures.hpp or against a law the
// counts are known to satisfy (degree of the family polynomial, the two
// leading coefficients, the cross-delta coefficient recursion). Advisory
// checks cover the two quoted family formulas of doubtful accuracy: their
// outcome is reported but never fails the suite. Info entries flag values
// computed below the d > delta threshold the polynomial statements assume.

#include <cstddef>
#include <string>
#include <vector>

#include "severi/engine.hpp"

namespace severi {

enum class CheckStatus { pass, fail, advisory_mismatch, info };

std::string to_string(CheckStatus status);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string expected; // printable form; empty for info entries
    std::string actual;
    std::string note;     // extra context, e.g. both polynomials on a mismatch
    bool advisory = false;
};

enum class VerifySuite { quick, paper };

struct VerificationReport {
    VerifySuite suite = VerifySuite::quick;
    std::vector<CheckResult> entries;
    SeveriEngine::Stats engine_stats;
    double wall_seconds = 0.0; // shown in text output only

    std::size_t count(CheckStatus status) const;
    // Success means no entry failed; advisory mismatches and info entries
    // do not count against the suite.
    bool ok() const { return count(CheckStatus::fail) == 0; }
};

// Runs the suite on the given engine. quick covers the closed forms, the
// value fixtures, the asserted families, the degree law and the delta <= 5
// leading coefficients in a few seconds; paper adds the delta = 6, 7
// leading-term windows, the large regressions, the advisory formulas and
// the below-threshold flags. Entries appear in a fixed order regardless of
// the thread count.
VerificationReport run_verification(SeveriEngine& engine, VerifySuite suite, int threads);

} // namespace severi
