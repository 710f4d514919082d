#pragma once

// Counting intersecting subfamilies by order.
//
// An intersecting subfamily of F is an independent set of the disjointness
// graph of F that avoids the empty set, so the profile (N_0, ..., N_m) is the
// size-graded independence polynomial of that graph.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "family.hpp"

namespace probint {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an exhaustive computation would exceed its size limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// counts[k] = number of intersecting subfamilies of order k.
template <class Int>
struct BasicProfile {
    std::vector<Int> counts;

    std::size_t m() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    const Int& operator[](std::size_t k) const { return counts[k]; }

    Int total() const {
        Int s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }

    template <class Other>
    BasicProfile<Other> cast() const {
        BasicProfile<Other> out;
        out.counts.reserve(counts.size());
        for (const auto& c : counts) out.counts.push_back(static_cast<Other>(c));
        return out;
    }

    friend bool operator==(const BasicProfile&, const BasicProfile&) = default;
    friend auto operator<=>(const BasicProfile& a, const BasicProfile& b) { return a.counts <=> b.counts; }
};

using Profile = BasicProfile<BigInt>;

/// "m=3; N=1,3,2,0"
template <class Int>
std::string format_profile(const BasicProfile<Int>& p) {
    std::ostringstream os;
    os << "m=" << p.m() << "; N=";
    for (std::size_t k = 0; k < p.counts.size(); ++k) {
        if (k) os << ',';
        os << p.counts[k];
    }
    return os.str();
}

inline Profile parse_profile(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("profile must look like 'm=<int>; N=<c0>,...'");
    auto head = detail::trim(text.substr(0, semi));
    auto tail = detail::trim(text.substr(semi + 1));
    int m = 0;
    if (head.substr(0, 2) != "m=" || !detail::parse_uint(head.substr(2), m)) throw std::invalid_argument("bad profile header");
    if (tail.substr(0, 2) != "N=") throw std::invalid_argument("bad profile counts");
    tail = tail.substr(2);
    Profile p;
    std::size_t pos = 0;
    while (pos <= tail.size()) {
        const auto k = tail.find(',', pos);
        const auto tok = detail::trim(tail.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("profile counts must be decimal integers");
        p.counts.emplace_back(std::string(tok));
        if (k == std::string_view::npos) break;
        pos = k + 1;
    }
    if (p.counts.size() != static_cast<std::size_t>(m) + 1) throw std::invalid_argument("profile length does not match m");
    return p;
}

// ---------------------------------------------------------------------------

/// Vertices are family members in canonical order; u ~ w iff the members
/// are disjoint.  Empty members are flagged rather than given a loop.
struct DisjointnessGraph {
    static constexpr std::size_t kMaxVertices = 64;

    std::size_t size = 0;
    std::vector<std::uint64_t> adj;
    std::uint64_t flagged = 0;

    bool edge(std::size_t u, std::size_t w) const { return (adj[u] >> w) & 1u; }
    bool is_flagged(std::size_t u) const { return (flagged >> u) & 1u; }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (auto a : adj) e += static_cast<std::size_t>(std::popcount(a));
        return e / 2;
    }
};

inline DisjointnessGraph disjointness_graph(std::span<const ElemSet> sets) {
    if (sets.size() > DisjointnessGraph::kMaxVertices) throw BudgetExceeded("disjointness graph limited to 64 members");
    DisjointnessGraph g;
    g.size = sets.size();
    g.adj.assign(g.size, 0);
    for (std::size_t u = 0; u < g.size; ++u) {
        if (sets[u].empty()) g.flagged |= std::uint64_t{1} << u;
        for (std::size_t w = u + 1; w < g.size; ++w)
            if (sets[u].disjoint(sets[w])) {
                g.adj[u] |= std::uint64_t{1} << w;
                g.adj[w] |= std::uint64_t{1} << u;
            }
    }
    return g;
}

inline DisjointnessGraph disjointness_graph(const Family& f) { return disjointness_graph(f.members()); }

namespace detail {

template <class Int>
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

template <class Int>
void poly_add_shifted(std::vector<Int>& acc, const std::vector<Int>& b) {
    if (acc.size() < b.size() + 1) acc.resize(b.size() + 1, Int(0));
    for (std::size_t j = 0; j < b.size(); ++j) acc[j + 1] += b[j];
}

inline std::uint64_t component_of(const std::vector<std::uint64_t>& adj, std::uint64_t alive, int start) {
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[u] & alive & ~comp;
        comp |= fresh;
        frontier |= fresh;
    }
    return comp;
}

// Independence polynomial of the subgraph induced on `alive`.
template <class Int>
std::vector<Int> independence_poly(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    if (!alive) return {Int(1)};

    const std::uint64_t comp = component_of(adj, alive, std::countr_zero(alive));
    if (comp != alive) return poly_mul(independence_poly<Int>(adj, comp), independence_poly<Int>(adj, alive & ~comp));

    // Connected: branch on a maximum-degree vertex, lowest index on ties.
    int best = -1, best_deg = -1;
    for (std::uint64_t b = alive; b; b &= b - 1) {
        const int u = std::countr_zero(b);
        const int d = std::popcount(adj[u] & alive);
        if (d > best_deg) best = u, best_deg = d;
    }
    const std::uint64_t bit = std::uint64_t{1} << best;
    if (best_deg == 0) return {Int(1), Int(1)};
    if (std::popcount(alive) == 2) return {Int(1), Int(2)};  // single edge

    std::vector<Int> out = independence_poly<Int>(adj, alive & ~bit);
    poly_add_shifted(out, independence_poly<Int>(adj, alive & ~bit & ~adj[best]));
    return out;
}

}  // namespace detail

/// Profile of an explicit graph: independent sets avoiding flagged vertices.
template <class Int = BigInt>
BasicProfile<Int> profile_of_graph(const DisjointnessGraph& g) {
    std::uint64_t all = (g.size == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size) - 1);
    auto poly = detail::independence_poly<Int>(g.adj, all & ~g.flagged);
    poly.resize(g.size + 1, Int(0));
    return BasicProfile<Int>{std::move(poly)};
}

/// Branch-and-reduce count; handles up to 40 members.
template <class Int = BigInt>
BasicProfile<Int> profile(const Family& f) {
    if (f.size() > 40) throw BudgetExceeded("profile is limited to families of at most 40 members");
    return profile_of_graph<Int>(disjointness_graph(f));
}

/// Reference count by enumerating all 2^m subfamilies and testing each one
/// with the set-level predicate.  At most 20 members.
template <class Int = BigInt>
BasicProfile<Int> profile_bruteforce(const Family& f) {
    const std::size_t m = f.size();
    if (m > 20) throw BudgetExceeded("brute-force profile is limited to 20 members");
    std::vector<Int> counts(m + 1, Int(0));
    std::vector<ElemSet> sub;
    sub.reserve(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        sub.clear();
        for (std::size_t k = 0; k < m; ++k)
            if ((mask >> k) & 1u) sub.push_back(f[k]);
        if (is_intersecting(sub)) counts[sub.size()] += 1;
    }
    return BasicProfile<Int>{std::move(counts)};
}

/// P(F_p is intersecting) = sum_k N_k p^k (1-p)^(m-k), summed from the
/// smallest term up.
template <class Int>
double prob_intersecting(const BasicProfile<Int>& p, double prob) {
    if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
    const std::size_t m = p.m();
    std::vector<double> terms;
    terms.reserve(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        const double c = static_cast<double>(p.counts[k]);
        terms.push_back(c * std::pow(prob, static_cast<double>(k)) * std::pow(1.0 - prob, static_cast<double>(m - k)));
    }
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms) s += t;
    return std::clamp(s, 0.0, 1.0);
}

inline double prob_intersecting(const Family& f, double prob) { return prob_intersecting(profile(f), prob); }

enum class Dominance { equal, dominates, dominated, incomparable };

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::equal: return "equal";
        case Dominance::dominates: return "dominates";
        case Dominance::dominated: return "dominated";
        case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

/// Componentwise comparison of P against Q.
template <class Int>
Dominance dominates(const BasicProfile<Int>& p, const BasicProfile<Int>& q) {
    if (p.counts.size() != q.counts.size()) throw std::invalid_argument("profiles of different length");
    bool ge = true, le = true;
    for (std::size_t k = 0; k < p.counts.size(); ++k) {
        if (p.counts[k] < q.counts[k]) ge = false;
        if (p.counts[k] > q.counts[k]) le = false;
    }
    if (ge && le) return Dominance::equal;
    if (ge) return Dominance::dominates;
    if (le) return Dominance::dominated;
    return Dominance::incomparable;
}

/// P >= Q componentwise.
template <class Int>
bool dominates_or_equal(const BasicProfile<Int>& p, const BasicProfile<Int>& q) {
    const auto d = dominates(p, q);
    return d == Dominance::equal || d == Dominance::dominates;
}

}  // namespace probint
