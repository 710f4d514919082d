#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "probint/family.hpp"

namespace probint::test {

/// "13" -> {1,3}; single-digit labels only, "{}" or "-" for the empty set.
inline ElemSet S(const std::string& digits) {
    std::uint32_t b = 0;
    for (char c : digits)
        if (c >= '1' && c <= '9') b |= 1u << (c - '1');
    return ElemSet(b);
}

/// F(4, "13 23 24")
inline Family F(int n, const std::string& sets) {
    std::istringstream is(sets);
    std::vector<ElemSet> out;
    for (std::string tok; is >> tok;) out.push_back(S(tok));
    return Family(n, std::move(out));
}

/// Uniform random family of the given order over P[n].
inline Family random_family(std::mt19937_64& rng, int n, std::size_t size) {
    std::vector<std::uint32_t> pool(std::size_t{1} << n);
    for (std::size_t a = 0; a < pool.size(); ++a) pool[a] = static_cast<std::uint32_t>(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<ElemSet> sets;
    for (std::size_t a = 0; a < size; ++a) sets.emplace_back(pool[a]);
    return Family(n, std::move(sets));
}

inline Family random_family(std::mt19937_64& rng, int n, std::size_t lo, std::size_t hi) {
    return random_family(rng, n, std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
}

/// Random intersecting family: greedily keeps sets meeting everything kept.
inline Family random_intersecting(std::mt19937_64& rng, int n, std::size_t max_size) {
    std::vector<std::uint32_t> pool(std::size_t{1} << n);
    for (std::size_t a = 0; a < pool.size(); ++a) pool[a] = static_cast<std::uint32_t>(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t want = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
    std::vector<ElemSet> kept;
    for (std::uint32_t b : pool) {
        if (kept.size() == want) break;
        const ElemSet s(b);
        if (s.empty()) continue;
        bool ok = true;
        for (ElemSet k : kept)
            if (k.disjoint(s)) { ok = false; break; }
        if (ok) kept.push_back(s);
    }
    return Family(n, std::move(kept));
}

}  // namespace probint::test
