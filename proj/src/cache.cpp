#include "severi/cache.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace severi {

namespace {

int parse_small_int(const std::string& text) {
    if (text.empty() || text.size() > 9) throw std::invalid_argument("expected a small integer, got \"" + text + "\"");
    for (char c : text)
        if (c < '0' || c > '9') throw std::invalid_argument("expected a small integer, got \"" + text + "\"");
    if (text.size() > 1 && text[0] == '0') throw std::invalid_argument("leading zero in \"" + text + "\"");
    return std::stoi(text);
}

} // namespace

void cache_save(const std::string& path, const std::vector<std::pair<SeveriState, BigInt>>& entries) {
    std::vector<std::pair<SeveriState, BigInt>> sorted = entries;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cache_save: cannot open " + path + " for writing");
    out << cache_header << "\n";
    for (const auto& [state, value] : sorted)
        out << state.d << ";" << state.delta << ";" << state.alpha.str() << ";" << state.beta.str() << ";"
            << to_string(value) << "\n";
    out.flush();
    if (!out) throw std::runtime_error("cache_save: write to " + path + " failed");
}

std::vector<std::pair<SeveriState, BigInt>> cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cache_load: cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || line != cache_header)
        throw std::runtime_error("cache_load: " + path + " does not start with \"" + std::string(cache_header) +
                                 "\" (got \"" + line + "\")");

    std::vector<std::pair<SeveriState, BigInt>> entries;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            throw std::runtime_error("cache_load: " + path + " line " + std::to_string(lineno) + " is empty");
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ';') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 5)
            throw std::runtime_error("cache_load: " + path + " line " + std::to_string(lineno) + " has " +
                                     std::to_string(fields.size()) + " fields, expected 5");
        try {
            SeveriState state{parse_small_int(fields[0]), parse_small_int(fields[1]),
                              TangencyVector::parse(fields[2]), TangencyVector::parse(fields[3])};
            state.validate();
            entries.emplace_back(std::move(state), parse_bigint(fields[4]));
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error("cache_load: " + path + " line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return entries;
}

} // namespace severi
