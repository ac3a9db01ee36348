#pragma once

// Rendering of CLI results. Three formats: text for humans, json for
// machines (canonical: keys sorted, counts as decimal strings, no volatile
// fields, so equal results print byte-identically), csv for spreadsheets.
// Traces are text only; they are a debugging view of the recursion tree.

#include <string>
#include <vector>

#include "severi/engine.hpp"
#include "severi/nodepoly.hpp"
#include "severi/polynomial.hpp"
#include "severi/verify.hpp"

namespace severi {

enum class OutputFormat { text, json, csv };

// Accepts "text", "json", "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

struct ComputeResult {
    int delta = 0;
    int d = 1;
    TangencyVector pi; // the contact pattern actually counted
    BigInt value;
};

struct PolynomialResult {
    PolynomialFamily family;
    int e_min = 0;
    int samples = 0;
    RationalPoly poly;
};

struct TableResult {
    int delta_max = 0;
    int d_max = 1;
    std::vector<std::vector<BigInt>> values; // [delta][d-1]
};

std::string format_compute(const ComputeResult& result, OutputFormat format);
std::string format_polynomial(const PolynomialResult& result, OutputFormat format);
std::string format_table(const TableResult& result, OutputFormat format);
std::string format_verify(const VerificationReport& report, OutputFormat format);

// Prints the root state with its count, then the expansion tree to the
// given depth: one line per term with coefficient, child state, child count
// and rule kind. Each level's lines weighted-sum to the line above.
std::string format_trace(SeveriEngine& engine, const SeveriState& root, int depth);

} // namespace severi
