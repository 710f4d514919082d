#pragma once

// Ground sets, subsets of [n] as bitmasks, and canonical set families.
//
// Element k of [n] = {1,...,n} is stored at bit k-1.  A Family keeps its
// members sorted by (order, bitmask) and rejects duplicates, so two families
// over the same ground set compare equal iff they hold the same sets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace probint {

inline constexpr int kMaxGroundSize = 24;

/// Thrown by the text parsers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class GroundSet {
public:
    explicit GroundSet(int n) : n_(n) {
        if (n < 1 || n > kMaxGroundSize)
            throw std::invalid_argument("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
    }

    int size() const noexcept { return n_; }
    std::uint32_t mask() const noexcept { return (n_ == 32) ? ~0u : ((1u << n_) - 1u); }
    bool contains(int element) const noexcept { return element >= 1 && element <= n_; }

    friend bool operator==(GroundSet, GroundSet) = default;

private:
    int n_;
};

/// A subset of [n].  Knows nothing about n; Family enforces the bound.
class ElemSet {
public:
    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint32_t bits) : bits_(bits) {}

    static ElemSet of(std::initializer_list<int> elements) {
        std::uint32_t b = 0;
        for (int e : elements) {
            if (e < 1 || e > kMaxGroundSize) throw std::invalid_argument("element out of range");
            b |= 1u << (e - 1);
        }
        return ElemSet(b);
    }

    static constexpr ElemSet singleton(int element) { return ElemSet(1u << (element - 1)); }

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr int order() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int element) const noexcept { return (bits_ >> (element - 1)) & 1u; }
    constexpr bool subset_of(ElemSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint(ElemSet o) const noexcept { return (bits_ & o.bits_) == 0; }
    constexpr bool meets(ElemSet o) const noexcept { return !disjoint(o); }

    /// Sum of the element labels.
    constexpr int label_sum() const noexcept {
        int s = 0;
        for (std::uint32_t b = bits_; b; b &= b - 1) s += std::countr_zero(b) + 1;
        return s;
    }

    /// Smallest element, or 0 for the empty set.
    constexpr int min_element() const noexcept { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    constexpr ElemSet operator|(ElemSet o) const noexcept { return ElemSet(bits_ | o.bits_); }
    constexpr ElemSet operator&(ElemSet o) const noexcept { return ElemSet(bits_ & o.bits_); }
    constexpr ElemSet operator-(ElemSet o) const noexcept { return ElemSet(bits_ & ~o.bits_); }

    friend constexpr bool operator==(ElemSet, ElemSet) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Canonical member order: by order, then by bitmask value.
struct CanonicalLess {
    constexpr bool operator()(ElemSet a, ElemSet b) const noexcept {
        const int oa = a.order(), ob = b.order();
        return oa != ob ? oa < ob : a.bits() < b.bits();
    }
};

/// "1 3 4" for {1,3,4}; "-" for the empty set.
inline std::string format_set(ElemSet s) {
    if (s.empty()) return "-";
    std::string out;
    for (int e : s.elements()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

/// Compact "134" / "{}" rendering for diagnostics; comma separated once n > 9.
inline std::string compact_set(ElemSet s) {
    if (s.empty()) return "{}";
    std::string out;
    const bool wide = (s.bits() >> 9) != 0;
    for (int e : s.elements()) {
        if (wide && !out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

class Family {
public:
    explicit Family(int n) : ground_(n) {}

    /// Canonicalizes; throws on duplicates or elements outside [n].
    Family(int n, std::vector<ElemSet> sets) : ground_(n), sets_(std::move(sets)) {
        const std::uint32_t outside = ~ground_.mask();
        for (ElemSet s : sets_)
            if (s.bits() & outside) throw std::invalid_argument("member " + compact_set(s) + " not inside [" + std::to_string(n) + "]");
        std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
        if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
            throw std::invalid_argument("duplicate member in family");
    }

    Family(int n, std::initializer_list<ElemSet> sets) : Family(n, std::vector<ElemSet>(sets)) {}

    int n() const noexcept { return ground_.size(); }
    GroundSet ground() const noexcept { return ground_; }
    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    std::span<const ElemSet> members() const noexcept { return sets_; }
    ElemSet operator[](std::size_t k) const { return sets_[k]; }
    auto begin() const noexcept { return sets_.begin(); }
    auto end() const noexcept { return sets_.end(); }

    bool contains(ElemSet s) const noexcept {
        return std::binary_search(sets_.begin(), sets_.end(), s, CanonicalLess{});
    }

    /// Position of s in canonical order, or -1.
    int index_of(ElemSet s) const noexcept {
        auto it = std::lower_bound(sets_.begin(), sets_.end(), s, CanonicalLess{});
        return (it != sets_.end() && *it == s) ? static_cast<int>(it - sets_.begin()) : -1;
    }

    bool subfamily_of(const Family& other) const {
        if (n() != other.n()) return false;
        return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(), sets_.end(), CanonicalLess{});
    }

    /// Members selected by bit k of `mask` (k indexes canonical order).
    Family select(std::uint64_t mask) const {
        std::vector<ElemSet> out;
        for (std::uint64_t b = mask; b; b &= b - 1) out.push_back(sets_[std::countr_zero(b)]);
        Family f(n());
        f.sets_ = std::move(out);  // already canonical
        return f;
    }

    /// Sum over members of |A|.
    long total_order() const noexcept {
        long s = 0;
        for (ElemSet a : sets_) s += a.order();
        return s;
    }

    /// Sum over members of the sum of their labels.
    long label_weight() const noexcept {
        long s = 0;
        for (ElemSet a : sets_) s += a.label_sum();
        return s;
    }

    friend bool operator==(const Family& a, const Family& b) {
        return a.ground_ == b.ground_ && a.sets_ == b.sets_;
    }

private:
    GroundSet ground_;
    std::vector<ElemSet> sets_;
};

/// "{13,23,14}" in canonical order.
inline std::string compact_family(const Family& f) {
    std::string out = "{";
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += ',';
        out += compact_set(f[k]);
    }
    return out + "}";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Strict decimal parse of a non-negative int; no sign, no trailing junk.
inline bool parse_uint(std::string_view s, int& out) {
    if (s.empty() || s.size() > 9) return false;
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

}  // namespace detail

/// Parses the family text format: a `n=<int>` header, then one member per
/// line as ascending labels or `-` for the empty set.  `#` lines and blank
/// lines are skipped.
inline Family parse_family(std::string_view text) {
    int line_no = 0;
    int n = 0;
    bool have_header = false;
    std::vector<ElemSet> sets;
    std::vector<int> set_lines;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (!have_header) {
            if (line.substr(0, 2) != "n=") throw ParseError(line_no, "expected header 'n=<integer>'");
            if (!detail::parse_uint(detail::trim(line.substr(2)), n) || n < 1 || n > kMaxGroundSize)
                throw ParseError(line_no, "ground set size must be an integer in 1.." + std::to_string(kMaxGroundSize));
            have_header = true;
            continue;
        }

        if (line == "-") {
            sets.emplace_back();
            set_lines.push_back(line_no);
            continue;
        }

        std::uint32_t bits = 0;
        int prev = 0;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
            if (p >= line.size()) break;
            std::size_t q = p;
            while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
            int e = 0;
            if (!detail::parse_uint(line.substr(p, q - p), e))
                throw ParseError(line_no, "malformed element '" + std::string(line.substr(p, q - p)) + "'");
            if (e < 1 || e > n) throw ParseError(line_no, "element " + std::to_string(e) + " out of range 1.." + std::to_string(n));
            if (e <= prev) throw ParseError(line_no, "elements must be strictly ascending");
            prev = e;
            bits |= 1u << (e - 1);
            p = q;
        }
        sets.emplace_back(bits);
        set_lines.push_back(line_no);
    }

    if (!have_header) throw ParseError(line_no, "missing header 'n=<integer>'");

    std::vector<std::size_t> order(sets.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return CanonicalLess{}(sets[a], sets[b]); });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (sets[order[k]] == sets[order[k - 1]])
            throw ParseError(std::max(set_lines[order[k]], set_lines[order[k - 1]]), "duplicate member " + compact_set(sets[order[k]]));

    return Family(n, std::move(sets));
}

inline std::string format_family(const Family& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    for (ElemSet s : f) out += format_set(s) + "\n";
    return out;
}

/// Every pair of members, a member with itself included, shares an element.
inline bool is_intersecting(std::span<const ElemSet> sets) {
    for (std::size_t a = 0; a < sets.size(); ++a) {
        if (sets[a].empty()) return false;
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            if (sets[a].disjoint(sets[b])) return false;
    }
    return true;
}

inline bool is_intersecting(const Family& f) { return is_intersecting(f.members()); }

inline bool is_t_intersecting(const Family& f, int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    const auto m = f.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a; b < m.size(); ++b)
            if ((m[a] & m[b]).order() < t) return false;
    return true;
}

enum class LayerMode { exact, at_least };

/// [n]^(r) or [n]^(>=r).
inline Family layer_family(int n, int r, LayerMode mode) {
    GroundSet g(n);
    if (r < 0 || r > n) throw std::invalid_argument("layer rank r must satisfy 0 <= r <= n");
    std::vector<ElemSet> sets;
    for (std::uint32_t b = 0; b <= g.mask(); ++b) {
        const int k = std::popcount(b);
        if (mode == LayerMode::exact ? k == r : k >= r) sets.emplace_back(b);
        if (b == g.mask()) break;
    }
    return Family(n, std::move(sets));
}

/// Binomial coefficient for the small arguments used here.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int t = 1; t <= k; ++t) c = c * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    return c;
}

/// |[n]^(>=r)| = sum_{j=r}^{n} C(n,j).
inline std::uint64_t upper_layers_size(int n, int r) {
    std::uint64_t s = 0;
    for (int j = std::max(r, 0); j <= n; ++j) s += binomial(n, j);
    return s;
}

/// [n]^(>=r+1) is contained in f, which is contained in [n]^(>=r).
inline bool is_sandwiched(const Family& f, int r) {
    const int n = f.n();
    for (ElemSet a : f)
        if (a.order() < r) return false;
    std::size_t above = 0;
    for (ElemSet a : f)
        if (a.order() >= r + 1) ++above;
    return above == upper_layers_size(n, r + 1);
}

/// The largest r with sum_{j>=r+1} C(n,j) <= size <= sum_{j>=r} C(n,j).
inline int sandwich_rank(int n, std::uint64_t size) {
    if (size > (std::uint64_t{1} << n)) throw std::invalid_argument("family larger than the cube");
    for (int r = n; r >= 0; --r)
        if (size <= upper_layers_size(n, r)) return r;
    return 0;
}

/// Sandwiched for the rank its own size determines.
inline bool is_sandwiched(const Family& f) { return is_sandwiched(f, sandwich_rank(f.n(), f.size())); }

}  // namespace probint
