#pragma once

#include "curvelab/branches.hpp"
#include "curvelab/error.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/series.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace curvelab {

/// A set of naturals: finitely many entries plus optionally every n >= tail.
class ContactSet {
public:
    ContactSet() = default;
    ContactSet(std::set<unsigned> finite, std::optional<unsigned> tail = std::nullopt)
        : finite_(std::move(finite)), tail_(tail) {
        canonicalize();
    }

    static ContactSet from_tail(unsigned n) { return ContactSet({}, n); }

    const std::set<unsigned>& finite() const { return finite_; }
    const std::optional<unsigned>& tail() const { return tail_; }
    bool bounded() const { return !tail_; }
    bool empty() const { return finite_.empty() && !tail_; }

    bool contains(unsigned n) const { return finite_.count(n) > 0 || (tail_ && n >= *tail_); }

    ContactSet shifted(unsigned k) const {
        std::set<unsigned> f;
        for (unsigned n : finite_) f.insert(n + k);
        return ContactSet(std::move(f), tail_ ? std::optional<unsigned>(*tail_ + k) : std::nullopt);
    }

    friend ContactSet operator|(const ContactSet& a, const ContactSet& b) {
        std::set<unsigned> f = a.finite_;
        f.insert(b.finite_.begin(), b.finite_.end());
        std::optional<unsigned> t = a.tail_;
        if (b.tail_) t = t ? std::min(*t, *b.tail_) : *b.tail_;
        return ContactSet(std::move(f), t);
    }

    friend bool operator==(const ContactSet&, const ContactSet&) = default;

    /// "{2, 4, 5}", "{3} u {n >= 5}", "{n >= 1}".
    std::string to_string() const {
        std::string s;
        if (!finite_.empty()) {
            s = "{";
            bool first = true;
            for (unsigned n : finite_) {
                if (!first) s += ", ";
                s += std::to_string(n);
                first = false;
            }
            s += "}";
        }
        if (tail_) {
            if (!s.empty()) s += " u ";
            s += "{n >= " + std::to_string(*tail_) + "}";
        }
        return s.empty() ? "{}" : s;
    }

private:
    void canonicalize() {
        if (!tail_) return;
        finite_.erase(finite_.lower_bound(*tail_), finite_.end());
        while (*tail_ > 0 && finite_.count(*tail_ - 1)) {
            finite_.erase(*tail_ - 1);
            --*tail_;
        }
    }

    std::set<unsigned> finite_;
    std::optional<unsigned> tail_;
};

inline bool is_bounded(const ContactSet& s) { return s.bounded(); }

/// {k m : 1 <= k < beta/m} u {beta}; every n >= 1 for a smooth branch (m = 1).
inline ContactSet contact_set_irreducible(unsigned m, std::optional<unsigned> beta) {
    if (m == 0) fail(Errc::InvalidBranch, "multiplicity 0");
    if (m == 1) return ContactSet::from_tail(1);
    if (!beta) fail(Errc::InvalidBranch, "singular branch without a Puiseux exponent");
    if (*beta <= m || *beta % m == 0)
        fail(Errc::InvalidBranch, "beta = " + std::to_string(*beta) + " must exceed m = " + std::to_string(m) +
                                      " and not be a multiple of it");
    std::set<unsigned> s{*beta};
    for (unsigned k = 1; k * m < *beta; ++k) s.insert(k * m);
    return ContactSet(std::move(s));
}

/// (mult f + I(g)) u (mult g + I(f)) for germs with transverse tangent cones.
inline ContactSet contact_set_transverse_union(unsigned mult_f, const ContactSet& set_f, unsigned mult_g,
                                               const ContactSet& set_g) {
    return set_g.shifted(mult_f) | set_f.shifted(mult_g);
}

struct BranchInvariants {
    unsigned m;
    unsigned beta;
};

/// {M, M - M_1 + beta_1, ..., M - M_k + beta_k} where group j shares one
/// tangent direction, M_j sums its multiplicities and beta_j its exponents.
/// Each branch must satisfy beta < 2m, or beta < m when `strict` is set.
inline ContactSet contact_set_shared_tangents(const std::vector<std::vector<BranchInvariants>>& groups,
                                              bool strict = false) {
    if (groups.empty()) fail(Errc::InvalidArgument, "contact_set_shared_tangents: no groups");
    unsigned M = 0;
    std::vector<std::pair<unsigned, unsigned>> sums;
    for (const auto& g : groups) {
        if (g.empty()) fail(Errc::InvalidArgument, "contact_set_shared_tangents: empty group");
        unsigned Mj = 0, bj = 0;
        for (const auto& b : g) {
            if (b.m < 2) fail(Errc::HypothesisViolated, "smooth branch in a tangent group");
            unsigned bound = strict ? b.m : 2 * b.m;
            if (b.beta <= b.m || b.beta >= bound)
                fail(Errc::HypothesisViolated, "beta = " + std::to_string(b.beta) + " violates beta < " +
                                                   (strict ? "m" : "2m") + " for m = " + std::to_string(b.m));
            Mj += b.m;
            bj += b.beta;
        }
        M += Mj;
        sums.emplace_back(Mj, bj);
    }
    std::set<unsigned> s{M};
    for (const auto& [Mj, bj] : sums) s.insert(M - Mj + bj);
    return ContactSet(std::move(s));
}

/// ord f(alpha(t)) for a smooth probe alpha; Infinite when alpha lies on f = 0.
inline Count probe_order_sample(const BiPoly& f, const Param& probe) {
    auto lin = [](const TruncSeries& s) {
        auto it = s.coeffs().find(1);
        return it != s.coeffs().end();
    };
    if (!lin(probe.x()) && !lin(probe.y())) fail(Errc::InvalidArgument, "probe is not an immersion at t = 0");
    return detail::order_count(compose(f, probe.x(), probe.y()));
}

namespace detail {

/// Probe orders for probes tangent to one direction, enumerated on the
/// prefix tree of the branches' polynomial parts.
class TangentProbeEnumerator {
public:
    struct Item {
        unsigned m;
        std::optional<unsigned> beta;
        const TruncSeries* y; // v(t) in the branch's own frame
        bool flip;            // u = -t^m in the group frame
    };

    TangentProbeEnumerator(std::vector<Item> items, unsigned base) : items_(std::move(items)), base_(base) {}

    ContactSet run() {
        std::vector<std::size_t> all;
        for (std::size_t k = 0; k < items_.size(); ++k) all.push_back(k);
        explore(2, all, base_);
        return ContactSet(values_, tail_);
    }

private:
    /// Coefficient of u^k in the branch's polynomial part, u the group coordinate.
    Rat phi(const Item& it, unsigned k) const {
        Rat a = it.y->coeff(k * it.m);
        if (it.flip && k % 2) a = -a;
        return a;
    }

    void explore(unsigned k, std::vector<std::size_t> live, unsigned acc) {
        // Singular branches whose contribution is capped at beta are settled.
        std::vector<std::size_t> open;
        for (auto b : live) {
            const auto& it = items_[b];
            if (it.beta && it.m * k >= *it.beta) acc += *it.beta;
            else open.push_back(b);
        }
        if (open.empty()) {
            values_.insert(acc);
            return;
        }
        if (open.size() == 1 && !items_[open[0]].beta) {
            // One smooth branch left: any further agreement depth is possible.
            add_tail(acc + k);
            return;
        }
        unsigned all_diverge = acc;
        for (auto b : open) all_diverge += items_[b].m * k;
        values_.insert(all_diverge);
        std::map<Rat, std::vector<std::size_t>> by_value;
        for (auto b : open) by_value[phi(items_[b], k)].push_back(b);
        for (const auto& [v, keep] : by_value) {
            unsigned next = acc;
            for (auto b : open)
                if (phi(items_[b], k) != v) next += items_[b].m * k;
            explore(k + 1, keep, next);
        }
    }

    void add_tail(unsigned n) { tail_ = tail_ ? std::min(*tail_, n) : n; }

    std::vector<Item> items_;
    unsigned base_;
    std::set<unsigned> values_;
    std::optional<unsigned> tail_;
};

} // namespace detail

/// I(f) from branch data: the transverse probe gives sum m_b, and probes
/// tangent to a direction L meet branch b with order min(beta_b, m_b d_b)
/// where d_b is the order of agreement with b's polynomial part.
inline ContactSet contact_set_from_branches(const std::vector<BranchData>& branches) {
    if (branches.empty()) fail(Errc::InvalidArgument, "contact_set_from_branches: no branches");
    unsigned M = 0;
    for (const auto& b : branches) M += b.m;
    ContactSet result({M});
    std::vector<Direction> dirs;
    for (const auto& b : branches)
        if (std::find(dirs.begin(), dirs.end(), b.tangent) == dirs.end()) dirs.push_back(b.tangent);
    for (const auto& d : dirs) {
        std::vector<detail::TangentProbeEnumerator::Item> items;
        unsigned base = 0;
        for (const auto& b : branches) {
            if (b.tangent == d) items.push_back({b.m, b.beta, &b.normal.y(), b.frame.flip});
            else base += b.m;
        }
        result = result | detail::TangentProbeEnumerator(std::move(items), base).run();
    }
    return result;
}

inline ContactSet contact_set(const BiPoly& f, unsigned precision = kDefaultPrecision) {
    return contact_set_from_branches(rational_branches(f, precision));
}

} // namespace curvelab
