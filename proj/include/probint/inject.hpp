#pragma once

// Size-preserving injections from the intersecting subfamilies of F into
// those of a compression C(F), for ij-compressions and (U,v,f)-compressions.
//
// Both compressions pair sets: a "source" S (j in S, i not in S for ij;
// v not in S for (U,v,f)) is paired with its image, the "target" T.  Every
// member of F is then a fixed member, half of a pair whose other half is
// absent (class 1 if it is the target, class 2 if the source), or half of a
// pair with both halves present (class 12).
//
// An intersecting B in F has a signature: its membership on fixed, class-1
// and class-2 members, and for each class-12 pair whether B holds neither,
// exactly one, or both halves.  Within one signature class the map phi moves
// every class-2 source in B to its target, and also moves the class-12
// sources that every member of the class is forced to hold (the set Y).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "compress.hpp"
#include "count.hpp"
#include "family.hpp"

namespace probint {

namespace detail {

enum class PairRole : std::uint8_t { fixed, source, target };

/// Index-level view of F under a pairing compression.  Subfamilies of F and
/// of C(F) are bitmasks over canonical member positions.
struct PairEngine {
    static constexpr std::size_t kMaxMembers = 20;

    struct Key {
        std::uint64_t chosen = 0;  // B on non-pair members, plus both halves of "both present" pairs
        std::uint64_t single = 0;  // sources of pairs where B holds exactly one half
        friend bool operator==(const Key&, const Key&) = default;
    };

    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return std::hash<std::uint64_t>{}(k.chosen * 0x9E3779B97F4A7C15ull ^ k.single); }
    };

    Family family{1};
    Family compressed{1};
    std::vector<PairRole> role;
    std::vector<int> partner;      // other half of the pair when present in F, else -1
    std::vector<int> kept_index;   // position in C(F) if the member stays
    std::vector<int> moved_index;  // position in C(F) of the member's image (sources only)
    std::uint64_t non_pair_mask = 0;   // fixed, class-1 and class-2 members
    std::uint64_t pair_source_mask = 0;  // sources in class 12
    std::uint64_t moving_mask = 0;     // sources in class 2
    DisjointnessGraph graph;
    DisjointnessGraph compressed_graph;

    std::size_t size() const noexcept { return family.size(); }

    template <class Classify, class TargetOf>
    static PairEngine build(const Family& f, Family compressed, Classify classify, TargetOf target_of) {
        if (f.size() > kMaxMembers) throw BudgetExceeded("injection machinery is limited to families of at most 20 members");
        PairEngine e;
        e.family = f;
        e.compressed = std::move(compressed);
        const std::size_t m = f.size();
        e.role.resize(m);
        e.partner.assign(m, -1);
        e.kept_index.assign(m, -1);
        e.moved_index.assign(m, -1);
        for (std::size_t k = 0; k < m; ++k) e.role[k] = classify(f[k]);
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << k;
            if (e.role[k] == PairRole::source) {
                const ElemSet t = target_of(f[k]);
                const int pk = f.index_of(t);
                e.moved_index[k] = e.compressed.index_of(t);
                if (pk >= 0) {
                    e.partner[k] = pk;
                    e.partner[pk] = static_cast<int>(k);
                    e.pair_source_mask |= bit;
                    e.kept_index[k] = e.compressed.index_of(f[k]);
                } else {
                    e.moving_mask |= bit;
                }
            } else {
                e.kept_index[k] = e.compressed.index_of(f[k]);
            }
        }
        for (std::size_t k = 0; k < m; ++k)
            if (e.partner[k] < 0) e.non_pair_mask |= std::uint64_t{1} << k;
        e.graph = disjointness_graph(f);
        e.compressed_graph = disjointness_graph(e.compressed);
        return e;
    }

    bool independent(std::uint64_t mask) const {
        if (mask & graph.flagged) return false;
        for (std::uint64_t b = mask; b; b &= b - 1)
            if (graph.adj[std::countr_zero(b)] & mask) return false;
        return true;
    }

    Key key_of(std::uint64_t b) const {
        Key key;
        key.chosen = b & non_pair_mask;
        for (std::uint64_t s = pair_source_mask; s; s &= s - 1) {
            const int k = std::countr_zero(s);
            const std::uint64_t sb = std::uint64_t{1} << k;
            const std::uint64_t tb = std::uint64_t{1} << partner[k];
            const bool hs = b & sb, ht = b & tb;
            if (hs && ht) key.chosen |= sb | tb;
            else if (hs || ht) key.single |= sb;
        }
        return key;
    }

    /// Sources (as positions of class-12 pairs in `key.single`) held by every
    /// intersecting family with this signature.  Depth-first over the free
    /// one-of-two choices; throws if the class is empty.
    std::uint64_t forced_sources(const Key& key) const {
        if (!independent(key.chosen)) throw std::invalid_argument("signature class is empty");
        std::vector<int> positions;
        for (std::uint64_t s = key.single; s; s &= s - 1) positions.push_back(std::countr_zero(s));
        std::uint64_t target_seen = 0;  // source bits whose target was taken in some completion
        bool inhabited = false;
        const std::uint64_t all = key.single;

        auto fits = [&](int v, std::uint64_t cur) {
            return !graph.is_flagged(static_cast<std::size_t>(v)) && !(graph.adj[v] & cur);
        };
        std::function<void(std::size_t, std::uint64_t, std::uint64_t)> dfs =
            [&](std::size_t depth, std::uint64_t cur, std::uint64_t took_target) {
                if (inhabited && target_seen == all) return;
                if (depth == positions.size()) {
                    inhabited = true;
                    target_seen |= took_target;
                    return;
                }
                const int s = positions[depth];
                const int t = partner[s];
                if (fits(t, cur)) dfs(depth + 1, cur | (std::uint64_t{1} << t), took_target | (std::uint64_t{1} << s));
                if (fits(s, cur)) dfs(depth + 1, cur | (std::uint64_t{1} << s), took_target);
            };
        dfs(0, key.chosen, 0);
        if (!inhabited) throw std::invalid_argument("signature class is empty");
        return all & ~target_seen;
    }

    /// phi(B) as a mask over C(F), given the forced sources of B's class.
    std::uint64_t image(std::uint64_t b, std::uint64_t forced) const {
        const std::uint64_t moves = (b & moving_mask) | (b & forced);
        std::uint64_t out = 0;
        for (std::uint64_t r = b; r; r &= r - 1) {
            const int k = std::countr_zero(r);
            const int idx = ((moves >> k) & 1u) ? moved_index[k] : kept_index[k];
            out |= std::uint64_t{1} << idx;
        }
        return out;
    }

    std::uint64_t mask_of(const Family& b) const {
        if (b.n() != family.n()) throw std::invalid_argument("subfamily over a different ground set");
        std::uint64_t mask = 0;
        for (ElemSet s : b) {
            const int k = family.index_of(s);
            if (k < 0) throw std::invalid_argument("set " + compact_set(s) + " is not a member of the family");
            mask |= std::uint64_t{1} << k;
        }
        return mask;
    }

    std::uint64_t phi(std::uint64_t b) const {
        if (!independent(b)) throw std::invalid_argument("subfamily is not intersecting");
        return image(b, forced_sources(key_of(b)));
    }
};

inline std::vector<ElemSet> sorted(std::vector<ElemSet> v) {
    std::sort(v.begin(), v.end(), CanonicalLess{});
    return v;
}

inline bool contains_set(const std::vector<ElemSet>& sorted_sets, ElemSet x) {
    return std::binary_search(sorted_sets.begin(), sorted_sets.end(), x, CanonicalLess{});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ij case

/// Partition of F around the pair (i, j).  a1, a2, a12 hold sets X in
/// [n] - {i,j}; a0 holds the members containing both or neither of i, j.
struct IjContext {
    Family family{1};
    int i = 0;
    int j = 0;
    std::vector<ElemSet> a1, a2, a12, a0;
    detail::PairEngine engine;

    ElemSet with_i(ElemSet x) const { return x | ElemSet::singleton(i); }
    ElemSet with_j(ElemSet x) const { return x | ElemSet::singleton(j); }
};

inline IjContext make_ij_context(const Family& f, int i, int j) {
    check_ij(f, i, j);
    IjContext ctx;
    ctx.family = f;
    ctx.i = i;
    ctx.j = j;
    const ElemSet ij = ElemSet::singleton(i) | ElemSet::singleton(j);
    for (ElemSet a : f) {
        const bool hi = a.contains(i), hj = a.contains(j);
        const ElemSet x = a - ij;
        if (hi == hj) ctx.a0.push_back(a);
        else if (hi) (f.contains(ctx.with_j(x)) ? ctx.a12 : ctx.a1).push_back(x);
        else if (!f.contains(ctx.with_i(x))) ctx.a2.push_back(x);
    }
    ctx.a1 = detail::sorted(ctx.a1);
    ctx.a2 = detail::sorted(ctx.a2);
    ctx.a12 = detail::sorted(ctx.a12);
    ctx.a0 = detail::sorted(ctx.a0);
    ctx.engine = detail::PairEngine::build(
        f, compress_family_ij(f, i, j),
        [&](ElemSet a) {
            const bool hi = a.contains(i), hj = a.contains(j);
            if (hi == hj) return detail::PairRole::fixed;
            return hj ? detail::PairRole::source : detail::PairRole::target;
        },
        [&](ElemSet a) { return compress_set_ij(a, i, j); });
    return ctx;
}

struct IjSignature {
    std::vector<ElemSet> x1, x2, x12_0, x12_1, x12_2, x0;
    friend bool operator==(const IjSignature&, const IjSignature&) = default;
};

namespace detail {

inline PairEngine::Key key_from(const IjContext& ctx, const IjSignature& sig) {
    const auto& f = ctx.family;
    PairEngine::Key key;
    auto idx = [&](ElemSet s) {
        const int k = f.index_of(s);
        if (k < 0) throw std::invalid_argument("signature refers to a set outside the family");
        return std::uint64_t{1} << k;
    };
    auto need = [](bool ok) {
        if (!ok) throw std::invalid_argument("signature does not match the context partition");
    };
    for (ElemSet x : sig.x1) {
        need(contains_set(ctx.a1, x));
        key.chosen |= idx(ctx.with_i(x));
    }
    for (ElemSet x : sig.x2) {
        need(contains_set(ctx.a2, x));
        key.chosen |= idx(ctx.with_j(x));
    }
    for (ElemSet x : sig.x0) {
        need(contains_set(ctx.a0, x));
        key.chosen |= idx(x);
    }
    for (ElemSet x : sig.x12_2) {
        need(contains_set(ctx.a12, x));
        key.chosen |= idx(ctx.with_i(x)) | idx(ctx.with_j(x));
    }
    for (ElemSet x : sig.x12_1) {
        need(contains_set(ctx.a12, x));
        key.single |= idx(ctx.with_j(x));
    }
    for (ElemSet x : sig.x12_0) need(contains_set(ctx.a12, x));
    need(sig.x12_0.size() + sig.x12_1.size() + sig.x12_2.size() == ctx.a12.size());
    return key;
}

}  // namespace detail

/// Signature of an intersecting B inside F.
inline IjSignature signature_of_ij(const Family& b, const IjContext& ctx) {
    const std::uint64_t mask = ctx.engine.mask_of(b);
    if (!ctx.engine.independent(mask)) throw std::invalid_argument("subfamily is not intersecting");
    IjSignature sig;
    for (ElemSet x : ctx.a1)
        if (b.contains(ctx.with_i(x))) sig.x1.push_back(x);
    for (ElemSet x : ctx.a2)
        if (b.contains(ctx.with_j(x))) sig.x2.push_back(x);
    for (ElemSet a : ctx.a0)
        if (b.contains(a)) sig.x0.push_back(a);
    for (ElemSet x : ctx.a12) {
        const int held = int(b.contains(ctx.with_i(x))) + int(b.contains(ctx.with_j(x)));
        (held == 0 ? sig.x12_0 : held == 1 ? sig.x12_1 : sig.x12_2).push_back(x);
    }
    return sig;
}

/// Y: the X in x12_1 such that no intersecting family of the class holds iX.
inline std::vector<ElemSet> forced_set_ij(const IjContext& ctx, const IjSignature& sig) {
    const auto key = detail::key_from(ctx, sig);
    const std::uint64_t forced = ctx.engine.forced_sources(key);
    std::vector<ElemSet> out;
    const ElemSet jbit = ElemSet::singleton(ctx.j);
    for (std::uint64_t s = forced; s; s &= s - 1) out.push_back(ctx.family[std::countr_zero(s)] - jbit);
    return detail::sorted(std::move(out));
}

/// phi(B) = B + {iX : X in x2 or Y} - {jX : X in x2 or Y}.
inline Family phi_ij(const Family& b, const IjContext& ctx) {
    return ctx.engine.compressed.select(ctx.engine.phi(ctx.engine.mask_of(b)));
}

// ---------------------------------------------------------------------------
// (U,v,f) case

/// Partition classes for one W in U.  X ranges over subsets of
/// S = [n] - (U + v); a1 holds X with only v f(W) X present, a2 those with
/// only WX present, a12 those with both.
struct UvfClasses {
    std::vector<ElemSet> a1, a2, a12;
};

using WMap = std::map<ElemSet, UvfClasses, CanonicalLess>;

struct UvfContext {
    Family family{1};
    UvfSpec spec;
    ElemSet rest;  // S
    WMap classes;  // every W in U
    detail::PairEngine engine;

    ElemSet source(ElemSet w, ElemSet x) const { return w | x; }
    ElemSet target(ElemSet w, ElemSet x) const { return ElemSet::singleton(spec.v) | spec.f.image(w) | x; }
};

inline UvfContext make_uvf_context(const Family& f, const UvfSpec& spec) {
    spec.validate_for(f.n());
    if (spec.u.order() > 16) throw BudgetExceeded("|U| limited to 16");
    UvfContext ctx;
    ctx.family = f;
    ctx.spec = spec;
    ctx.rest = ElemSet(f.ground().mask()) - spec.u - ElemSet::singleton(spec.v);
    const std::uint32_t ub = spec.u.bits();
    for (std::uint32_t w = 0;; w = (w - ub) & ub) {
        ctx.classes[ElemSet(w)];
        if (w == ub) break;
    }
    for (ElemSet a : f) {
        const ElemSet x = a - spec.u - ElemSet::singleton(spec.v);
        if (a.contains(spec.v)) {
            const ElemSet w = spec.f.image(a & spec.u);
            if (!f.contains(ctx.source(w, x))) ctx.classes[w].a1.push_back(x);
        } else {
            const ElemSet w = a & spec.u;
            (f.contains(ctx.target(w, x)) ? ctx.classes[w].a12 : ctx.classes[w].a2).push_back(x);
        }
    }
    for (auto& [w, c] : ctx.classes) {
        c.a1 = detail::sorted(c.a1);
        c.a2 = detail::sorted(c.a2);
        c.a12 = detail::sorted(c.a12);
    }
    ctx.engine = detail::PairEngine::build(
        f, compress_family_uvf(f, spec),
        [&](ElemSet a) { return a.contains(spec.v) ? detail::PairRole::target : detail::PairRole::source; },
        [&](ElemSet a) { return compress_set_uvf(a, spec); });
    return ctx;
}

struct UvfSignatureEntry {
    std::vector<ElemSet> x1, x2, x12_0, x12_1, x12_2;
    friend bool operator==(const UvfSignatureEntry&, const UvfSignatureEntry&) = default;
};

using UvfSignature = std::map<ElemSet, UvfSignatureEntry, CanonicalLess>;
using UvfForcedSets = std::map<ElemSet, std::vector<ElemSet>, CanonicalLess>;

inline UvfSignature signature_of_uvf(const Family& b, const UvfContext& ctx) {
    const std::uint64_t mask = ctx.engine.mask_of(b);
    if (!ctx.engine.independent(mask)) throw std::invalid_argument("subfamily is not intersecting");
    UvfSignature sig;
    for (const auto& [w, c] : ctx.classes) {
        auto& e = sig[w];
        for (ElemSet x : c.a1)
            if (b.contains(ctx.target(w, x))) e.x1.push_back(x);
        for (ElemSet x : c.a2)
            if (b.contains(ctx.source(w, x))) e.x2.push_back(x);
        for (ElemSet x : c.a12) {
            const int held = int(b.contains(ctx.source(w, x))) + int(b.contains(ctx.target(w, x)));
            (held == 0 ? e.x12_0 : held == 1 ? e.x12_1 : e.x12_2).push_back(x);
        }
    }
    return sig;
}

namespace detail {

inline PairEngine::Key key_from(const UvfContext& ctx, const UvfSignature& sig) {
    const auto& f = ctx.family;
    PairEngine::Key key;
    auto idx = [&](ElemSet s) {
        const int k = f.index_of(s);
        if (k < 0) throw std::invalid_argument("signature refers to a set outside the family");
        return std::uint64_t{1} << k;
    };
    auto need = [](bool ok) {
        if (!ok) throw std::invalid_argument("signature does not match the context partition");
    };
    for (const auto& [w, e] : sig) {
        auto it = ctx.classes.find(w);
        need(it != ctx.classes.end());
        const auto& c = it->second;
        for (ElemSet x : e.x1) {
            need(contains_set(c.a1, x));
            key.chosen |= idx(ctx.target(w, x));
        }
        for (ElemSet x : e.x2) {
            need(contains_set(c.a2, x));
            key.chosen |= idx(ctx.source(w, x));
        }
        for (ElemSet x : e.x12_2) {
            need(contains_set(c.a12, x));
            key.chosen |= idx(ctx.source(w, x)) | idx(ctx.target(w, x));
        }
        for (ElemSet x : e.x12_1) {
            need(contains_set(c.a12, x));
            key.single |= idx(ctx.source(w, x));
        }
        for (ElemSet x : e.x12_0) need(contains_set(c.a12, x));
        need(e.x12_0.size() + e.x12_1.size() + e.x12_2.size() == c.a12.size());
    }
    for (const auto& [w, c] : ctx.classes)
        need(!c.a12.empty() ? sig.count(w) == 1 : true);
    return key;
}

}  // namespace detail

/// Y^W for every W in U.
inline UvfForcedSets forced_sets_uvf(const UvfContext& ctx, const UvfSignature& sig) {
    const auto key = detail::key_from(ctx, sig);
    const std::uint64_t forced = ctx.engine.forced_sources(key);
    UvfForcedSets out;
    for (const auto& [w, c] : ctx.classes) out[w];
    for (std::uint64_t s = forced; s; s &= s - 1) {
        const ElemSet a = ctx.family[std::countr_zero(s)];
        out[a & ctx.spec.u].push_back(a - ctx.spec.u);
    }
    for (auto& [w, ys] : out) ys = detail::sorted(std::move(ys));
    return out;
}

/// phi(B) = B + {v f(W) X : X in x2^W or Y^W} - {WX : X in x2^W or Y^W}.
inline Family phi_uvf(const Family& b, const UvfContext& ctx) {
    return ctx.engine.compressed.select(ctx.engine.phi(ctx.engine.mask_of(b)));
}

// ---------------------------------------------------------------------------
// Harness

struct InjectionReport {
    std::string operation;
    std::size_t family_size = 0;
    std::uint64_t intersecting_subfamilies = 0;
    std::uint64_t classes = 0;
    bool injective = true;
    bool size_preserving = true;
    bool image_intersecting = true;    // every phi(B) is an intersecting subfamily of C(F)
    bool class_order_uniform = true;   // all members of a signature class share one order
    bool forced_sets_consistent = true;  // backtracking Y agrees with Y read off the enumerated class
    Profile before;
    Profile after;
    bool profile_dominates = true;
    std::optional<std::string> counterexample;

    bool passed() const {
        return injective && size_preserving && image_intersecting && class_order_uniform && forced_sets_consistent && profile_dominates;
    }
};

namespace detail {

template <class Visit>
void for_each_intersecting_subfamily(const DisjointnessGraph& g, Visit&& visit) {
    const std::size_t m = g.size;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t cur) {
        if (k == m) {
            visit(cur);
            return;
        }
        rec(k + 1, cur);
        if (!g.is_flagged(k) && !(g.adj[k] & cur)) rec(k + 1, cur | (std::uint64_t{1} << k));
    };
    rec(0, 0);
}

inline InjectionReport verify_engine(const PairEngine& e, std::string operation) {
    InjectionReport rep;
    rep.operation = std::move(operation);
    rep.family_size = e.size();

    struct ClassInfo {
        std::uint64_t forced = 0;
        std::uint64_t always_source = ~std::uint64_t{0};
        int order = -1;
    };
    std::unordered_map<PairEngine::Key, ClassInfo, PairEngine::KeyHash> classes;
    std::vector<std::uint64_t> preimage(std::size_t{1} << e.compressed.size(), ~std::uint64_t{0});
    std::vector<BigInt> before(e.size() + 1, 0);

    auto fail = [&](bool& flag, const std::string& what, std::uint64_t b) {
        flag = false;
        if (!rep.counterexample)
            rep.counterexample = what + ": B=" + compact_family(e.family.select(b));
    };

    for_each_intersecting_subfamily(e.graph, [&](std::uint64_t b) {
        ++rep.intersecting_subfamilies;
        const int order = std::popcount(b);
        before[order] += 1;
        const auto key = e.key_of(b);
        auto [it, fresh] = classes.try_emplace(key);
        auto& info = it->second;
        if (fresh) {
            info.forced = e.forced_sources(key);
            info.order = order;
        } else if (info.order != order) {
            fail(rep.class_order_uniform, "signature class with mixed orders", b);
        }
        info.always_source &= b;

        const std::uint64_t img = e.image(b, info.forced);
        if (std::popcount(img) != order) fail(rep.size_preserving, "phi changed the order", b);
        bool ok = !(img & e.compressed_graph.flagged);
        for (std::uint64_t r = img; r && ok; r &= r - 1)
            if (e.compressed_graph.adj[std::countr_zero(r)] & img) ok = false;
        if (!ok) fail(rep.image_intersecting, "phi(B) is not intersecting", b);
        auto& slot = preimage[img];
        if (slot != ~std::uint64_t{0} && slot != b) fail(rep.injective, "phi not injective, collides with " + compact_family(e.family.select(slot)), b);
        slot = b;
    });

    for (const auto& [key, info] : classes)
        if ((info.always_source & key.single) != info.forced) {
            rep.forced_sets_consistent = false;
            if (!rep.counterexample) rep.counterexample = "forced set differs from class enumeration";
        }
    rep.classes = classes.size();
    rep.before = Profile{std::move(before)};
    rep.after = profile(e.compressed);
    rep.profile_dominates = dominates_or_equal(rep.after, rep.before);
    if (!rep.profile_dominates && !rep.counterexample)
        rep.counterexample = "profile of C(F) " + format_profile(rep.after) + " does not dominate " + format_profile(rep.before);
    return rep;
}

}  // namespace detail

/// Enumerates every intersecting B in F, applies phi and checks that it is
/// an order-preserving injection into the intersecting subfamilies of C(F).
inline InjectionReport verify_injection(const IjContext& ctx) {
    return detail::verify_engine(ctx.engine, "ij i=" + std::to_string(ctx.i) + " j=" + std::to_string(ctx.j));
}

inline InjectionReport verify_injection(const UvfContext& ctx) {
    return detail::verify_engine(ctx.engine, "uvf " + format_uvf(ctx.spec));
}

inline std::string format_injection_report(const InjectionReport& r) {
    std::ostringstream os;
    auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
    os << "operation=" << r.operation << "\n"
       << "family_size=" << r.family_size << "\n"
       << "intersecting_subfamilies=" << r.intersecting_subfamilies << "\n"
       << "signature_classes=" << r.classes << "\n"
       << "injective=" << pf(r.injective) << "\n"
       << "size_preserving=" << pf(r.size_preserving) << "\n"
       << "image_intersecting=" << pf(r.image_intersecting) << "\n"
       << "class_order_uniform=" << pf(r.class_order_uniform) << "\n"
       << "forced_sets_consistent=" << pf(r.forced_sets_consistent) << "\n"
       << "profile_before=" << format_profile(r.before) << "\n"
       << "profile_after=" << format_profile(r.after) << "\n"
       << "profile_dominates=" << pf(r.profile_dominates) << "\n"
       << "verdict=" << (r.passed() ? "confirmed" : "refuted") << "\n";
    if (r.counterexample) os << "counterexample=" << *r.counterexample << "\n";
    return os.str();
}

}  // namespace probint
