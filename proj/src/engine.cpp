#include "severi/engine.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace severi {

int SeveriState::point_count() const {
    int cost = 0;
    for (std::size_t i = 0; i < alpha.entries().size(); ++i)
        cost += static_cast<int>(i + 1) * alpha.entries()[i];
    for (std::size_t i = 0; i < beta.entries().size(); ++i)
        cost += static_cast<int>(i) * beta.entries()[i];
    return d * (d + 3) / 2 - delta - cost;
}

void SeveriState::validate() const {
    if (d < 1) throw std::invalid_argument("SeveriState: degree must be >= 1, got " + std::to_string(d));
    if (delta < 0) throw std::invalid_argument("SeveriState: node count must be >= 0, got " + std::to_string(delta));
    if (alpha.weight() + beta.weight() != d)
        throw std::invalid_argument("SeveriState: contact weights " + alpha.str() + " + " + beta.str() +
                                    " do not sum to the degree " + std::to_string(d));
}

std::string SeveriState::str() const {
    std::ostringstream os;
    os << "(" << d << "," << delta << "," << alpha.str() << "," << beta.str() << ")";
    return os.str();
}

bool canonical_less(const SeveriState& a, const SeveriState& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.delta != b.delta) return a.delta < b.delta;
    if (!(a.alpha == b.alpha)) return canonical_less(a.alpha, b.alpha);
    return canonical_less(a.beta, b.beta);
}

std::size_t SeveriStateHash::operator()(const SeveriState& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.d) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(s.delta);
    auto mix = [&h](int v) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(-1); // separator so ([1],[]) and ([],[1]) differ
    for (int v : s.alpha.entries()) mix(v);
    mix(-1);
    for (int v : s.beta.entries()) mix(v);
    return h;
}

Expansion expand_once(const SeveriState& s) {
    s.validate();
    if (s.d < 2) throw std::invalid_argument("expand_once: a line (d=1) is a base case with no expansion");
    if (s.point_count() < 1)
        throw std::invalid_argument("expand_once: state " + s.str() + " has no point left to degenerate");

    Expansion ex{s, {}};

    // A free contact of order k collides with the degenerated point and
    // becomes fixed; the k accounts for the choices of sheet.
    for (int k = 1; k <= s.beta.max_order(); ++k) {
        if (s.beta.count(k) < 1) continue;
        ex.terms.push_back({TermKind::fix_point, BigInt(k),
                            SeveriState{s.d, s.delta, s.alpha.plus_one(k), s.beta.minus_one(k)}});
    }

    // The curve splits off the line: the residual has degree d-1, keeps a
    // sub-pattern alpha' of the fixed contacts and acquires free contacts
    // beta' >= beta, nodes being spent on the new intersections.
    for (const auto& ap : enumerate_sub(s.alpha)) {
        const int residual = s.d - 1 - ap.weight();
        if (residual < s.beta.weight()) continue;
        for (const auto& bp : enumerate_super(s.beta, residual)) {
            if (bp.weight() != residual) continue;
            const int extra = bp.size() - s.beta.size();
            const int delta_child = s.delta + extra - (s.d - 1);
            if (delta_child < 0) continue;
            BigInt coeff = vector_binomial(s.alpha, ap) * vector_binomial(bp, s.beta);
            for (int k = 1; k <= bp.max_order(); ++k) {
                const int gained = bp.count(k) - s.beta.count(k);
                if (gained > 0) coeff *= ipow(BigInt(k), gained);
            }
            ex.terms.push_back({TermKind::degenerate, std::move(coeff),
                                SeveriState{s.d - 1, delta_child, ap, bp}});
        }
    }
    return ex;
}

BigInt SeveriEngine::severi_number(const SeveriState& s) {
    s.validate();
    if (s.point_count() < 0) return 0;
    if (BigInt(s.delta) > binomial(s.d, 2)) return 0;

    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(s);
        if (it != memo_.end()) {
            ++hits_;
            return it->second;
        }
    }

    BigInt value = expand_and_sum(s);

    {
        std::unique_lock lock(mutex_);
        memo_.emplace(s, value); // a concurrent duplicate computed the same value
    }
    return value;
}

BigInt SeveriEngine::expand_and_sum(const SeveriState& s) {
    if (s.d == 1) {
        // A line meets the line L once, transversally, through one fixed
        // point of L or two general points. Anything else is empty.
        const bool fixed_contact = s.alpha == TangencyVector({1}) && s.beta.empty();
        const bool free_contact = s.alpha.empty() && s.beta == TangencyVector({1});
        return (s.delta == 0 && (fixed_contact || free_contact)) ? 1 : 0;
    }
    // With delta <= C(d,2) already ensured, point_count >= d >= 2 holds, so
    // the expansion precondition is automatic here.
    BigInt total = 0;
    for (const auto& term : expand_once(s).terms) total += term.coefficient * severi_number(term.child);
    return total;
}

BigInt SeveriEngine::severi_degree(int delta, int d) {
    if (d < 1) throw std::invalid_argument("severi_degree: degree must be >= 1, got " + std::to_string(d));
    if (delta < 0) throw std::invalid_argument("severi_degree: node count must be >= 0, got " + std::to_string(delta));
    return severi_number(SeveriState{d, delta, TangencyVector(), TangencyVector({d})});
}

BigInt SeveriEngine::tangency_degree(const TangencyVector& pi, int delta, int d) {
    if (d < 1) throw std::invalid_argument("tangency_degree: degree must be >= 1, got " + std::to_string(d));
    if (delta < 0) throw std::invalid_argument("tangency_degree: node count must be >= 0, got " + std::to_string(delta));
    if (pi.weight() != d)
        throw std::invalid_argument("tangency_degree: contact pattern " + pi.str() + " has weight " +
                                    std::to_string(pi.weight()) + ", expected the degree " + std::to_string(d));
    return severi_number(SeveriState{d, delta, TangencyVector(), pi});
}

std::vector<std::vector<BigInt>> SeveriEngine::severi_table(int delta_max, int d_max) {
    if (delta_max < 0 || d_max < 1)
        throw std::invalid_argument("severi_table: need delta_max >= 0 and d_max >= 1");
    std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(delta_max) + 1);
    for (int delta = 0; delta <= delta_max; ++delta) {
        auto& row = out[static_cast<std::size_t>(delta)];
        row.reserve(static_cast<std::size_t>(d_max));
        for (int d = 1; d <= d_max; ++d) row.push_back(severi_degree(delta, d));
    }
    return out;
}

std::vector<std::pair<SeveriState, BigInt>> SeveriEngine::snapshot() const {
    std::vector<std::pair<SeveriState, BigInt>> out;
    {
        std::shared_lock lock(mutex_);
        out.assign(memo_.begin(), memo_.end());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

void SeveriEngine::preload(const std::vector<std::pair<SeveriState, BigInt>>& entries) {
    std::unique_lock lock(mutex_);
    for (const auto& [state, value] : entries) memo_.emplace(state, value);
}

SeveriEngine::Stats SeveriEngine::stats() const {
    Stats st;
    {
        std::shared_lock lock(mutex_);
        st.states = memo_.size();
    }
    st.hits = hits_.load();
    return st;
}

} // namespace severi
