#pragma once

// ij-, UV- and (U,v,f)-compressions of sets and families, the
// compressed-state predicates, and the two termination drivers.
//
// Family-level semantics are shared by all three operators: a member A is
// replaced by its image C(A) unless C(A) is already a member, in which case A
// is blocked and stays.  The result always has the same order as the input.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "family.hpp"

namespace probint {

namespace detail {

inline void require_element(int e, const char* name) {
    if (e < 1 || e > kMaxGroundSize) throw std::invalid_argument(std::string(name) + " is not a valid element label");
}

// Image of a family under a set map, with blocking.
template <class SetMap>
Family compress_family_with(const Family& f, SetMap&& image) {
    std::vector<ElemSet> out;
    out.reserve(f.size());
    for (ElemSet a : f) {
        const ElemSet c = image(a);
        out.push_back((c == a || f.contains(c)) ? a : c);
    }
    return Family(f.n(), std::move(out));
}

template <class SetMap>
bool is_compressed_with(const Family& f, SetMap&& image) {
    for (ElemSet a : f) {
        const ElemSet c = image(a);
        if (c != a && !f.contains(c)) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ij-compression

inline ElemSet compress_set_ij(ElemSet a, int i, int j) {
    detail::require_element(i, "i");
    detail::require_element(j, "j");
    if (i >= j) throw std::invalid_argument("ij-compression needs i < j");
    if (a.contains(j) && !a.contains(i)) return (a | ElemSet::singleton(i)) - ElemSet::singleton(j);
    return a;
}

inline void check_ij(const Family& f, int i, int j) {
    if (i < 1 || j > f.n() || i >= j) throw std::invalid_argument("ij-compression needs 1 <= i < j <= n");
}

inline Family compress_family_ij(const Family& f, int i, int j) {
    check_ij(f, i, j);
    return detail::compress_family_with(f, [=](ElemSet a) { return compress_set_ij(a, i, j); });
}

inline bool is_ij_compressed(const Family& f, int i, int j) {
    check_ij(f, i, j);
    return detail::is_compressed_with(f, [=](ElemSet a) { return compress_set_ij(a, i, j); });
}

inline bool is_left_compressed(const Family& f) {
    for (int i = 1; i <= f.n(); ++i)
        for (int j = i + 1; j <= f.n(); ++j)
            if (!is_ij_compressed(f, i, j)) return false;
    return true;
}

struct IjStep {
    int i = 0;
    int j = 0;
    friend bool operator==(const IjStep&, const IjStep&) = default;
};

struct LeftCompressResult {
    Family family;
    std::vector<IjStep> trace;
};

/// Applies ij-compressions until the family is left-compressed.  Pairs are
/// scanned lexicographically; the scan restarts after every change.
inline LeftCompressResult left_compress(Family f) {
    std::vector<IjStep> trace;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= f.n() && !changed; ++i)
            for (int j = i + 1; j <= f.n() && !changed; ++j) {
                Family g = compress_family_ij(f, i, j);
                if (!(g == f)) {
                    trace.push_back({i, j});
                    f = std::move(g);
                    changed = true;
                }
            }
    }
    return {std::move(f), std::move(trace)};
}

// ---------------------------------------------------------------------------
// UV-compression

inline ElemSet compress_set_uv(ElemSet a, ElemSet u, ElemSet v) {
    if (u.meets(v)) throw std::invalid_argument("UV-compression needs disjoint U and V");
    if (v.subset_of(a) && u.disjoint(a)) return (a | u) - v;
    return a;
}

inline Family compress_family_uv(const Family& f, ElemSet u, ElemSet v) {
    if (u.meets(v)) throw std::invalid_argument("UV-compression needs disjoint U and V");
    if ((u | v).bits() & ~f.ground().mask()) throw std::invalid_argument("U and V must lie inside the ground set");
    return detail::compress_family_with(f, [=](ElemSet a) { return compress_set_uv(a, u, v); });
}

inline bool is_uv_compressed(const Family& f, ElemSet u, ElemSet v) {
    if (u.meets(v)) throw std::invalid_argument("UV-compression needs disjoint U and V");
    if ((u | v).bits() & ~f.ground().mask()) throw std::invalid_argument("U and V must lie inside the ground set");
    return detail::is_compressed_with(f, [=](ElemSet a) { return compress_set_uv(a, u, v); });
}

/// Calls visit(U', V') for every U' in U, V' in V with |U'| > |V'| and
/// (U', V') != (U, V).  Stops early when visit returns false.
template <class Visit>
bool for_each_simpler_pair(ElemSet u, ElemSet v, Visit&& visit) {
    // Standard submask walk, including the empty submask.
    for (std::uint32_t vs = v.bits();; vs = (vs - 1) & v.bits()) {
        for (std::uint32_t us = u.bits();; us = (us - 1) & u.bits()) {
            const ElemSet up(us), vp(vs);
            if (up.order() > vp.order() && !(up == u && vp == v))
                if (!visit(up, vp)) return false;
            if (us == 0) break;
        }
        if (vs == 0) break;
    }
    return true;
}

/// F is U'V'-compressed for every strictly simpler pair (U', V').
inline bool is_simpler_uv_compressed(const Family& f, ElemSet u, ElemSet v) {
    if (u.meets(v)) throw std::invalid_argument("UV-compression needs disjoint U and V");
    return for_each_simpler_pair(u, v, [&](ElemSet up, ElemSet vp) { return is_uv_compressed(f, up, vp); });
}

// ---------------------------------------------------------------------------
// (U,v,f)-compression

/// Fixed-point-free involution on a finite set U (possibly empty).
class PairingFn {
public:
    PairingFn() { partner_.fill(0); }

    /// Builds from a list of unordered pairs that must cover each element of
    /// their union exactly once.
    explicit PairingFn(const std::vector<std::pair<int, int>>& pairs) {
        partner_.fill(0);
        std::uint32_t seen = 0;
        for (auto [a, b] : pairs) {
            detail::require_element(a, "pairing element");
            detail::require_element(b, "pairing element");
            if (a == b) throw std::invalid_argument("pairing function has a fixed point at " + std::to_string(a));
            const std::uint32_t bits = (1u << (a - 1)) | (1u << (b - 1));
            if (seen & bits) throw std::invalid_argument("pairing function uses an element twice");
            seen |= bits;
            partner_[a - 1] = static_cast<std::uint8_t>(b);
            partner_[b - 1] = static_cast<std::uint8_t>(a);
        }
        domain_ = ElemSet(seen);
    }

    ElemSet domain() const noexcept { return domain_; }
    int operator()(int x) const { return domain_.contains(x) ? partner_[x - 1] : x; }

    /// Pointwise image of a subset of the domain.
    ElemSet image(ElemSet s) const {
        std::uint32_t out = 0;
        for (std::uint32_t b = s.bits(); b; b &= b - 1) out |= 1u << (partner_[std::countr_zero(b)] - 1);
        return ElemSet(out);
    }

    /// Pairs (a, f(a)) with a < f(a), ascending by a.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int e : domain_.elements())
            if (e < partner_[e - 1]) out.emplace_back(e, partner_[e - 1]);
        return out;
    }

    friend bool operator==(const PairingFn& a, const PairingFn& b) {
        return a.domain_ == b.domain_ && a.pairs() == b.pairs();
    }

private:
    ElemSet domain_;
    std::array<std::uint8_t, kMaxGroundSize> partner_{};
};

/// Parameters (U, v, f) of a (U,v,f)-compression.
struct UvfSpec {
    ElemSet u;
    int v = 0;
    PairingFn f;

    UvfSpec() = default;
    UvfSpec(ElemSet u_, int v_, PairingFn f_) : u(u_), v(v_), f(std::move(f_)) { validate(); }

    void validate() const {
        detail::require_element(v, "v");
        if (u.contains(v)) throw std::invalid_argument("v must lie outside U");
        if (u.order() % 2 != 0) throw std::invalid_argument("U must have even order");
        if (!(f.domain() == u)) throw std::invalid_argument("pairing function must be defined exactly on U");
    }

    void validate_for(int n) const {
        validate();
        if (v > n || (u.bits() >> n) != 0) throw std::invalid_argument("(U,v,f) parameters exceed the ground set");
    }

    friend bool operator==(const UvfSpec&, const UvfSpec&) = default;
};

/// "U=2,3,4,5; v=1; f=2-4,3-5"
inline std::string format_uvf(const UvfSpec& s) {
    std::string out = "U=";
    bool first = true;
    for (int e : s.u.elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += "; v=" + std::to_string(s.v) + "; f=";
    first = true;
    for (auto [a, b] : s.f.pairs()) {
        if (!first) out += ',';
        out += std::to_string(a) + "-" + std::to_string(b);
        first = false;
    }
    return out;
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto k = s.find(sep, pos);
        out.push_back(s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos));
        if (k == std::string_view::npos) break;
        pos = k + 1;
    }
    return out;
}

inline int parse_label(std::string_view s) {
    int v = 0;
    if (!parse_uint(trim(s), v) || v < 1 || v > kMaxGroundSize)
        throw std::invalid_argument("bad element label '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

/// Comma-separated labels, e.g. "1,2,3"; empty text is the empty set.
inline ElemSet parse_elem_list(std::string_view text) {
    text = detail::trim(text);
    if (text.empty() || text == "-") return {};
    std::uint32_t bits = 0;
    for (auto tok : detail::split(text, ',')) {
        const int e = detail::parse_label(tok);
        if (bits & (1u << (e - 1))) throw std::invalid_argument("element " + std::to_string(e) + " listed twice");
        bits |= 1u << (e - 1);
    }
    return ElemSet(bits);
}

/// "1,2,3"; the inverse of parse_elem_list.
inline std::string format_elem_list(ElemSet s) {
    std::string out;
    for (int e : s.elements()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

/// Inverse of format_uvf.  The pair list must cover U exactly.
inline UvfSpec parse_uvf(std::string_view text) {
    std::optional<ElemSet> u;
    std::optional<int> v;
    std::optional<PairingFn> f;
    for (auto part : detail::split(text, ';')) {
        part = detail::trim(part);
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value in (U,v,f) spec");
        const auto key = detail::trim(part.substr(0, eq));
        const auto val = detail::trim(part.substr(eq + 1));
        if (key == "U") {
            u = parse_elem_list(val);
        } else if (key == "v") {
            v = detail::parse_label(val);
        } else if (key == "f") {
            std::vector<std::pair<int, int>> pairs;
            if (!val.empty())
                for (auto tok : detail::split(val, ',')) {
                    const auto dash = tok.find('-');
                    if (dash == std::string_view::npos) throw std::invalid_argument("pairing entries look like a-b");
                    pairs.emplace_back(detail::parse_label(tok.substr(0, dash)), detail::parse_label(tok.substr(dash + 1)));
                }
            f = PairingFn(pairs);
        } else {
            throw std::invalid_argument("unknown key '" + std::string(key) + "' in (U,v,f) spec");
        }
    }
    if (!u || !v || !f) throw std::invalid_argument("(U,v,f) spec needs U=, v= and f=");
    return UvfSpec(*u, *v, *f);
}

inline ElemSet compress_set_uvf(ElemSet a, const UvfSpec& s) {
    s.validate();
    if (a.contains(s.v)) return a;
    return s.f.image(a & s.u) | ElemSet::singleton(s.v) | (a - s.u);
}

inline Family compress_family_uvf(const Family& f, const UvfSpec& s) {
    s.validate_for(f.n());
    return detail::compress_family_with(f, [&](ElemSet a) { return compress_set_uvf(a, s); });
}

inline bool is_uvf_compressed(const Family& f, const UvfSpec& s) {
    s.validate_for(f.n());
    return detail::is_compressed_with(f, [&](ElemSet a) { return compress_set_uvf(a, s); });
}

struct UvPair {
    ElemSet u;
    ElemSet v;
    friend bool operator==(const UvPair&, const UvPair&) = default;
};

/// The UV-compressions (U_1,V_1), ..., (U_k,V_k) whose composition
/// C_{U_1V_1} ... C_{U_kV_k} stands in for C_{U,v,f} on suitably compressed
/// families: V_i ranges over the |U|/2-subsets of U in ascending bitmask
/// order and U_i = (U - V_i) + v.
inline std::vector<UvPair> uvf_as_uv_composition(const UvfSpec& s) {
    s.validate();
    const int half = s.u.order() / 2;
    std::vector<UvPair> out;
    const std::uint32_t ub = s.u.bits();
    // Ascending submasks of U.
    for (std::uint32_t sub = 0;; sub = (sub - ub) & ub) {
        if (std::popcount(sub) == half) out.push_back({(s.u - ElemSet(sub)) | ElemSet::singleton(s.v), ElemSet(sub)});
        if (sub == ub) break;
    }
    return out;
}

/// The steps of uvf_as_uv_composition whose V_i takes one element from each
/// f-pair, so that f(V_i) = U - V_i.  For |U| = 2 this is every step.  For
/// larger U the other steps can move a member that C_{U,v,f} leaves alone
/// (V_i a union of f-pairs), and only this subsequence reproduces it.
inline std::vector<UvPair> uvf_as_transversal_composition(const UvfSpec& s) {
    std::vector<UvPair> out;
    for (const auto& p : uvf_as_uv_composition(s))
        if (s.f.image(p.v) == s.u - p.v) out.push_back(p);
    return out;
}

/// Applies the composition with the rightmost compression first.
inline Family apply_uv_composition(Family f, const std::vector<UvPair>& steps) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) f = compress_family_uv(f, it->u, it->v);
    return f;
}

/// F is U'V'-compressed for every disjoint U' in U+v, V' in U with
/// |V'| < |U|/2, |U'| <= |U|/2 + 1 and |U'| > |V'|.
inline bool meets_composition_precondition(const Family& f, const UvfSpec& s) {
    const ElemSet uv = s.u | ElemSet::singleton(s.v);
    const int half = s.u.order() / 2;
    for (std::uint32_t vs = s.u.bits();; vs = (vs - 1) & s.u.bits()) {
        const ElemSet vp(vs);
        if (vp.order() < half) {
            const std::uint32_t avail = (uv - vp).bits();
            for (std::uint32_t us = avail;; us = (us - 1) & avail) {
                const ElemSet up(us);
                if (up.order() <= half + 1 && up.order() > vp.order() && !is_uv_compressed(f, up, vp)) return false;
                if (us == 0) break;
            }
        }
        if (vs == 0) break;
    }
    return true;
}

// ---------------------------------------------------------------------------
// layerize

struct LayerizeResult {
    Family family;
    std::vector<UvfSpec> trace;
};

struct WvWitness {
    ElemSet w;
    ElemSet v;
};

/// Least disjoint (W, V) with |W| = |V| + 1 such that F is not
/// WV-compressed, ordered by (|V|, V bits, W bits).
inline std::optional<WvWitness> find_layer_witness(const Family& f) {
    const int n = f.n();
    const std::uint32_t full = f.ground().mask();
    std::vector<std::vector<std::uint32_t>> by_order(n + 1);
    for (std::uint32_t b = 0;; ++b) {
        by_order[std::popcount(b)].push_back(b);
        if (b == full) break;
    }
    for (int vk = 0; vk + vk + 1 <= n; ++vk) {
        for (std::uint32_t vb : by_order[vk]) {
            const ElemSet v(vb);
            bool any_source = false;
            for (ElemSet a : f)
                if (v.subset_of(a)) { any_source = true; break; }
            if (!any_source) continue;
            for (std::uint32_t wb : by_order[vk + 1]) {
                if (wb & vb) continue;
                const ElemSet w(wb);
                if (!is_uv_compressed(f, w, v)) return WvWitness{w, v};
            }
        }
    }
    return std::nullopt;
}

/// The (U,v,f) step derived from a witness: v = min W, U = (W - v) + V, and
/// f matching the k-th smallest element of W - v with the k-th smallest of V.
inline UvfSpec uvf_from_witness(const WvWitness& wit) {
    const int v = wit.w.min_element();
    const auto wrest = (wit.w - ElemSet::singleton(v)).elements();
    const auto vel = wit.v.elements();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < vel.size(); ++k) pairs.emplace_back(wrest[k], vel[k]);
    return UvfSpec((wit.w - ElemSet::singleton(v)) | wit.v, v, PairingFn(pairs));
}

/// Drives F by (U,v,f)-compressions to a family sandwiched between two
/// consecutive upper layers.
inline LayerizeResult layerize(Family f) {
    std::vector<UvfSpec> trace;
    while (auto wit = find_layer_witness(f)) {
        UvfSpec spec = uvf_from_witness(*wit);
        f = compress_family_uvf(f, spec);
        trace.push_back(std::move(spec));
    }
    return {std::move(f), std::move(trace)};
}

}  // namespace probint
