#include "severi/tangency.hpp"

#include <algorithm>
#include <sstream>

namespace severi {

TangencyVector::TangencyVector(std::vector<int> multiplicities) : m_(std::move(multiplicities)) {
    for (int v : m_)
        if (v < 0) throw std::invalid_argument("TangencyVector: negative multiplicity");
    while (!m_.empty() && m_.back() == 0) m_.pop_back();
}

TangencyVector TangencyVector::parse(const std::string& text) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("TangencyVector: cannot parse \"" + text + "\"");
    };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail();
    std::vector<int> vals;
    std::size_t i = 1;
    const std::size_t end = text.size() - 1;
    if (i == end) return TangencyVector(); // "[]"
    while (true) {
        std::size_t start = i;
        while (i < end && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) fail(); // empty entry
        if (i - start > 1 && text[start] == '0') fail(); // no leading zeros
        if (i - start > 9) fail(); // multiplicities are small by nature
        vals.push_back(std::stoi(text.substr(start, i - start)));
        if (i == end) break;
        if (text[i] != ',') fail();
        ++i;
    }
    return TangencyVector(std::move(vals));
}

std::string TangencyVector::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i) os << ",";
        os << m_[i];
    }
    os << "]";
    return os.str();
}

int TangencyVector::count(int order) const {
    if (order < 1 || order > max_order()) return 0;
    return m_[static_cast<std::size_t>(order - 1)];
}

int TangencyVector::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < m_.size(); ++i) w += static_cast<int>(i + 1) * m_[i];
    return w;
}

int TangencyVector::size() const {
    int s = 0;
    for (int v : m_) s += v;
    return s;
}

TangencyVector TangencyVector::plus_one(int order) const {
    if (order < 1) throw std::invalid_argument("plus_one: order must be >= 1");
    std::vector<int> v = m_;
    if (static_cast<int>(v.size()) < order) v.resize(static_cast<std::size_t>(order), 0);
    ++v[static_cast<std::size_t>(order - 1)];
    return TangencyVector(std::move(v));
}

TangencyVector TangencyVector::minus_one(int order) const {
    if (count(order) < 1) throw std::invalid_argument("minus_one: no contact of order " + std::to_string(order));
    std::vector<int> v = m_;
    --v[static_cast<std::size_t>(order - 1)];
    return TangencyVector(std::move(v));
}

bool canonical_less(const TangencyVector& a, const TangencyVector& b) {
    if (a.entries().size() != b.entries().size())
        return a.entries().size() < b.entries().size();
    return a.entries() < b.entries();
}

BigInt m_invariant(const TangencyVector& pi) {
    BigInt r = 1;
    const auto& m = pi.entries();
    for (std::size_t i = 0; i < m.size(); ++i) r *= ipow(BigInt(i + 1), m[i]);
    return r;
}

BigInt n_invariant(const TangencyVector& pi) {
    BigInt r = factorial(pi.size());
    for (int v : pi.entries()) r /= factorial(v);
    return r;
}

BigInt gamma_degree(const TangencyVector& pi) { return m_invariant(pi) * n_invariant(pi); }

BigInt vector_binomial(const TangencyVector& a, const TangencyVector& b) {
    const int hi = std::max(a.max_order(), b.max_order());
    BigInt r = 1;
    for (int k = 1; k <= hi; ++k) {
        if (b.count(k) > a.count(k)) return 0;
        r *= binomial(a.count(k), b.count(k));
    }
    return r;
}

std::vector<TangencyVector> enumerate_sub(const TangencyVector& a) {
    std::vector<TangencyVector> out;
    std::vector<int> cur(a.entries().size(), 0);
    /* odometer over 0..a_i per slot */
    while (true) {
        out.emplace_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < a.entries()[i]) {
                ++cur[i];
                std::fill(cur.begin(), cur.begin() + static_cast<long>(i), 0);
                break;
            }
        }
        if (i == cur.size()) break;
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/* multiplicity vectors of weight exactly w, i.e. partitions of w */
static void partitions_of(int w, int max_part, std::vector<int>& cur,
                          std::vector<TangencyVector>& out) {
    if (w == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(w, max_part); p >= 1; --p) {
        if (static_cast<int>(cur.size()) < p) cur.resize(static_cast<std::size_t>(p), 0);
        ++cur[static_cast<std::size_t>(p - 1)];
        partitions_of(w - p, p, cur, out);
        --cur[static_cast<std::size_t>(p - 1)];
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
    }
}

std::vector<TangencyVector> enumerate_super(const TangencyVector& b, int max_weight) {
    if (b.weight() > max_weight)
        throw std::invalid_argument("enumerate_super: base vector already exceeds max_weight");
    std::vector<TangencyVector> extras;
    std::vector<int> cur;
    for (int w = 0; w <= max_weight - b.weight(); ++w) partitions_of(w, w, cur, extras);

    std::vector<TangencyVector> out;
    out.reserve(extras.size());
    for (const auto& e : extras) {
        std::vector<int> sum(static_cast<std::size_t>(std::max(b.max_order(), e.max_order())), 0);
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] = b.count(static_cast<int>(i + 1)) + e.count(static_cast<int>(i + 1));
        out.emplace_back(std::move(sum));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace severi
