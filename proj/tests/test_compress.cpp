#include <functional>

#include <gtest/gtest.h>

#include "probint/compress.hpp"
#include "support.hpp"

using namespace probint;
using probint::test::F;
using probint::test::S;

namespace {

UvfSpec spec_2345() { return UvfSpec(S("2345"), 1, PairingFn({{2, 4}, {3, 5}})); }

// Applies every compression named in the composition precondition until
// none of them changes the family.
Family close_for_composition(Family f, const UvfSpec& s) {
    const int half = s.u.order() / 2;
    const ElemSet uv = s.u | ElemSet::singleton(s.v);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint32_t vb = 0; vb < (1u << 24) && vb <= s.u.bits(); ++vb) {
            const ElemSet vp(vb);
            if (!vp.subset_of(s.u) || vp.order() >= half) continue;
            for (std::uint32_t ub = 1; ub <= uv.bits(); ++ub) {
                const ElemSet up(ub);
                if (!up.subset_of(uv) || up.meets(vp) || up.order() > half + 1 || up.order() <= vp.order()) continue;
                Family g = compress_family_uv(f, up, vp);
                if (!(g == f)) {
                    f = std::move(g);
                    changed = true;
                }
            }
        }
    }
    return f;
}

std::vector<UvfSpec> all_specs(int n) {
    // Every (U, v, f) with U in [n], |U| even and >= 2.
    std::vector<UvfSpec> out;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t ub = 1; ub <= full; ++ub) {
        const ElemSet u(ub);
        if (u.order() % 2) continue;
        // Perfect matchings of U.
        std::function<void(std::vector<int>, std::vector<std::pair<int, int>>)> rec = [&](std::vector<int> rest, std::vector<std::pair<int, int>> acc) {
            if (rest.empty()) {
                for (int v = 1; v <= n; ++v)
                    if (!u.contains(v)) out.emplace_back(u, v, PairingFn(acc));
                return;
            }
            const int a = rest.front();
            for (std::size_t k = 1; k < rest.size(); ++k) {
                auto next = rest;
                next.erase(next.begin() + static_cast<long>(k));
                next.erase(next.begin());
                auto acc2 = acc;
                acc2.emplace_back(a, rest[k]);
                rec(next, acc2);
            }
        };
        rec(u.elements(), {});
    }
    return out;
}

}  // namespace

TEST(IjCompression, SetExamples) {
    EXPECT_EQ(compress_set_ij(S("24"), 1, 2), S("14"));
    EXPECT_EQ(compress_set_ij(S("13"), 1, 2), S("13"));
    EXPECT_EQ(compress_set_ij(S("12"), 1, 2), S("12"));
    EXPECT_THROW(compress_set_ij(S("12"), 2, 2), std::invalid_argument);
    EXPECT_THROW(compress_set_ij(S("12"), 3, 2), std::invalid_argument);
}

TEST(IjCompression, FamilyExamples) {
    EXPECT_EQ(compress_family_ij(F(4, "13 23 24"), 1, 2), F(4, "13 23 14"));
    EXPECT_EQ(compress_family_ij(F(4, "13 23"), 1, 2), F(4, "13 23"));
    EXPECT_EQ(compress_family_ij(Family(4), 1, 3), Family(4));
    EXPECT_THROW(compress_family_ij(F(4, "13"), 1, 5), std::invalid_argument);
}

TEST(IjCompression, Predicates) {
    EXPECT_TRUE(is_ij_compressed(F(4, "13 23 14"), 1, 2));
    EXPECT_FALSE(is_ij_compressed(F(4, "13 23 24"), 1, 2));
    EXPECT_TRUE(is_left_compressed(F(3, "12 13")));
    EXPECT_FALSE(is_left_compressed(F(3, "12 23")));
}

TEST(IjCompression, PreservesOrderAndIntersecting) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        const Family f = probint::test::random_family(rng, 5, 0, 20);
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                const Family c = compress_family_ij(f, i, j);
                ASSERT_EQ(c.size(), f.size());
                ASSERT_TRUE(is_ij_compressed(c, i, j));
                ASSERT_EQ(compress_family_ij(c, i, j), c);
                if (is_intersecting(f)) {
                    ASSERT_TRUE(is_intersecting(c));
                }
            }
    }
}

TEST(LeftCompress, Examples) {
    const auto res = left_compress(F(4, "13 23 24"));
    EXPECT_TRUE(is_left_compressed(res.family));
    EXPECT_EQ(res.family.size(), 3u);
    ASSERT_FALSE(res.trace.empty());
    EXPECT_EQ(res.trace.front(), (IjStep{1, 2}));
    EXPECT_EQ(compress_family_ij(F(4, "13 23 24"), 1, 2), F(4, "13 23 14"));

    const auto fixed = left_compress(F(3, "12 13"));
    EXPECT_EQ(fixed.family, F(3, "12 13"));
    EXPECT_TRUE(fixed.trace.empty());
    EXPECT_TRUE(left_compress(Family(3)).trace.empty());
}

TEST(LeftCompress, PotentialDecreasesEachStep) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const Family f = probint::test::random_family(rng, 5, 0, 32);
        const auto res = left_compress(f);
        Family cur = f;
        for (const auto& s : res.trace) {
            const Family next = compress_family_ij(cur, s.i, s.j);
            ASSERT_LT(next.label_weight(), cur.label_weight());
            cur = next;
        }
        EXPECT_EQ(cur, res.family);
        EXPECT_TRUE(is_left_compressed(res.family));
        EXPECT_EQ(res.family.size(), f.size());
    }
}

TEST(UvCompression, Examples) {
    EXPECT_EQ(compress_set_uv(S("45"), S("123"), S("45")), S("123"));
    EXPECT_EQ(compress_set_uv(S("46"), S("123"), S("45")), S("46"));
    EXPECT_EQ(compress_set_uv(S("45"), S("12"), S("4")), S("125"));
    EXPECT_EQ(compress_family_uv(F(6, "45 46"), S("12"), S("4")), F(6, "125 126"));
    EXPECT_EQ(compress_family_uv(F(6, "45 46"), S("123"), S("45")), F(6, "123 46"));
    EXPECT_EQ(compress_family_uv(Family(6), S("12"), S("4")), Family(6));
    EXPECT_THROW(compress_set_uv(S("45"), S("14"), S("4")), std::invalid_argument);
    EXPECT_TRUE(is_uv_compressed(F(6, "125 126"), S("12"), S("4")));
    EXPECT_FALSE(is_uv_compressed(F(6, "45 46"), S("12"), S("4")));
}

TEST(UvCompression, SimplerPairs) {
    EXPECT_FALSE(is_simpler_uv_compressed(F(6, "45 46"), S("123"), S("45")));
    EXPECT_TRUE(is_simpler_uv_compressed(F(6, "125 126"), S("12"), S("4")));
    EXPECT_TRUE(is_simpler_uv_compressed(F(6, "45 46"), S("1"), ElemSet()));

    // Oracle: enumerate (U', V') directly over all subsets of [6].
    std::vector<std::pair<ElemSet, ElemSet>> seen;
    for_each_simpler_pair(S("123"), S("45"), [&](ElemSet u, ElemSet v) {
        seen.emplace_back(u, v);
        return true;
    });
    std::size_t expected = 0;
    for (std::uint32_t u = 0; u < 64; ++u)
        for (std::uint32_t v = 0; v < 64; ++v) {
            const ElemSet up(u), vp(v);
            if (up.subset_of(S("123")) && vp.subset_of(S("45")) && up.order() > vp.order() && !(up == S("123") && vp == S("45")))
                ++expected;
        }
    EXPECT_EQ(seen.size(), expected);
}

TEST(Pairing, Validation) {
    EXPECT_THROW(PairingFn({{2, 2}}), std::invalid_argument);
    EXPECT_THROW(PairingFn({{2, 3}, {3, 4}}), std::invalid_argument);
    EXPECT_THROW(UvfSpec(S("23"), 2, PairingFn({{2, 3}})), std::invalid_argument);
    EXPECT_THROW(UvfSpec(S("234"), 1, PairingFn({{2, 3}})), std::invalid_argument);
    EXPECT_THROW(UvfSpec(S("2345"), 1, PairingFn({{2, 3}})), std::invalid_argument);
    const PairingFn f({{2, 4}, {3, 5}});
    for (int x : S("2345").elements()) {
        EXPECT_NE(f(x), x);
        EXPECT_EQ(f(f(x)), x);
    }
    EXPECT_EQ(f.image(S("23")), S("45"));
    EXPECT_NO_THROW(UvfSpec(ElemSet(), 1, PairingFn()));  // the |V| = 0 steps of layerize
}

TEST(Pairing, ParseFormatRoundTrip) {
    const UvfSpec s = spec_2345();
    EXPECT_EQ(format_uvf(s), "U=2,3,4,5; v=1; f=2-4,3-5");
    EXPECT_EQ(parse_uvf(format_uvf(s)), s);
    EXPECT_EQ(parse_uvf("v=1; U=2,3,4,5; f=3-5,4-2"), s);
    EXPECT_EQ(parse_uvf("U=; v=3; f="), UvfSpec(ElemSet(), 3, PairingFn()));
    EXPECT_THROW(parse_uvf("U=2,3; v=1"), std::invalid_argument);
    EXPECT_THROW(parse_uvf("U=2,3; v=1; f=2+3"), std::invalid_argument);
    EXPECT_THROW(parse_uvf("U=2,3; v=1; f=2-3; g=1"), std::invalid_argument);
    EXPECT_EQ(parse_elem_list("1, 2,3"), S("123"));
    EXPECT_EQ(format_elem_list(S("135")), "1,3,5");
    EXPECT_THROW(parse_elem_list("1,1"), std::invalid_argument);
}

TEST(UvfCompression, Examples) {
    const UvfSpec s = spec_2345();
    EXPECT_EQ(compress_set_uvf(S("23"), s), S("145"));
    EXPECT_EQ(compress_set_uvf(S("1236"), s), S("1236"));
    EXPECT_EQ(compress_set_uvf(ElemSet(), UvfSpec(S("12"), 3, PairingFn({{1, 2}}))), S("3"));

    const Family a = F(6, "23 1236");
    const Family c = compress_family_uvf(a, s);
    EXPECT_EQ(c, F(6, "145 1236"));
    EXPECT_TRUE(is_t_intersecting(a, 2));
    EXPECT_FALSE(is_t_intersecting(c, 2));
    EXPECT_EQ(compress_family_uvf(Family(6), s), Family(6));
    EXPECT_TRUE(is_uvf_compressed(c, s));
    EXPECT_THROW(compress_family_uvf(F(4, "23"), s), std::invalid_argument);
}

TEST(UvfCompression, PreservesIntersecting) {
    std::mt19937_64 rng(3);
    const auto specs = all_specs(5);
    for (int t = 0; t < 300; ++t) {
        const Family f = probint::test::random_intersecting(rng, 5, 16);
        for (const auto& s : specs) {
            const Family c = compress_family_uvf(f, s);
            ASSERT_EQ(c.size(), f.size());
            ASSERT_TRUE(is_intersecting(c)) << compact_family(f) << " " << format_uvf(s);
        }
    }
}

TEST(Composition, Examples) {
    const auto steps = uvf_as_uv_composition(UvfSpec(S("23"), 1, PairingFn({{2, 3}})));
    ASSERT_EQ(steps.size(), 2u);
    EXPECT_EQ(steps[0], (UvPair{S("13"), S("2")}));
    EXPECT_EQ(steps[1], (UvPair{S("12"), S("3")}));
    EXPECT_EQ(uvf_as_uv_composition(spec_2345()).size(), 6u);
    EXPECT_EQ(uvf_as_transversal_composition(spec_2345()).size(), 4u);
}

// Differential check of composition against direct (U,v,f)-compression on
// families closed under the precondition compressions.
TEST(Composition, MatchesDirectCompressionForPairOfOrderTwo) {
    std::mt19937_64 rng(4);
    const std::vector<UvfSpec> specs{UvfSpec(S("23"), 1, PairingFn({{2, 3}})), UvfSpec(S("13"), 2, PairingFn({{1, 3}})),
                                     UvfSpec(S("45"), 2, PairingFn({{4, 5}}))};
    std::size_t nontrivial = 0;
    for (const auto& s : specs)
        for (int t = 0; t < 2000; ++t) {
            const Family f = close_for_composition(probint::test::random_family(rng, 5, 1, 20), s);
            ASSERT_TRUE(meets_composition_precondition(f, s));
            const Family direct = compress_family_uvf(f, s);
            nontrivial += !(direct == f);
            ASSERT_EQ(apply_uv_composition(f, uvf_as_uv_composition(s)), direct) << compact_family(f);
        }
    EXPECT_GT(nontrivial, 100u);
}

TEST(Composition, TransversalStepsMatchDirectCompression) {
    std::mt19937_64 rng(5);
    const std::vector<UvfSpec> specs{spec_2345(), UvfSpec(S("2345"), 1, PairingFn({{2, 3}, {4, 5}})),
                                     UvfSpec(S("1246"), 3, PairingFn({{1, 6}, {2, 4}}))};
    std::size_t nontrivial = 0;
    for (const auto& s : specs)
        for (int t = 0; t < 3000; ++t) {
            const Family f = close_for_composition(probint::test::random_family(rng, 6, 1, 30), s);
            const Family direct = compress_family_uvf(f, s);
            nontrivial += !(direct == f);
            ASSERT_EQ(apply_uv_composition(f, uvf_as_transversal_composition(s)), direct) << compact_family(f) << " " << format_uvf(s);
        }
    EXPECT_GT(nontrivial, 10u);
}

// With |U| = 4, the full list of |U|/2-subsets includes V_i = {3,5}, a
// union of f-pairs; C_{U_i V_i} then moves 35 although C_{U,v,f} does not.
TEST(Composition, AllHalfSubsetsCanOvershootForLargerU) {
    const Family f = F(5, "35 123 134 234 125 135 235 145 245 345 1234 1235 1245 1345 2345 12345");
    const UvfSpec s = spec_2345();
    ASSERT_TRUE(meets_composition_precondition(f, s));
    EXPECT_EQ(compress_family_uvf(f, s), f);
    EXPECT_NE(apply_uv_composition(f, uvf_as_uv_composition(s)), f);
    EXPECT_EQ(apply_uv_composition(f, uvf_as_transversal_composition(s)), f);
}

TEST(Layerize, Examples) {
    const Family layer = layer_family(4, 2, LayerMode::at_least);
    const auto fixed = layerize(layer);
    EXPECT_EQ(fixed.family, layer);
    EXPECT_TRUE(fixed.trace.empty());

    const auto tiny = layerize(Family(2, {ElemSet()}));
    EXPECT_EQ(tiny.family, F(2, "12"));
    EXPECT_LE(tiny.trace.size(), 2u);

    // Order of a full upper-layer family forces the layer itself.
    std::mt19937_64 rng(6);
    for (int r = 0; r <= 4; ++r) {
        const Family f = probint::test::random_family(rng, 4, upper_layers_size(4, r));
        EXPECT_EQ(layerize(f).family, layer_family(4, r, LayerMode::at_least));
    }
}

TEST(Layerize, WitnessRecipe) {
    const auto wit = find_layer_witness(F(4, "13 23 24"));
    ASSERT_TRUE(wit.has_value());
    EXPECT_EQ(wit->w.order(), wit->v.order() + 1);
    EXPECT_TRUE(wit->w.disjoint(wit->v));
    const UvfSpec s = uvf_from_witness(*wit);
    EXPECT_EQ(s.v, wit->w.min_element());
    EXPECT_EQ(s.u, (wit->w - ElemSet::singleton(s.v)) | wit->v);
    EXPECT_EQ(s.f.image(wit->w - ElemSet::singleton(s.v)), wit->v);
    EXPECT_FALSE(find_layer_witness(layer_family(4, 2, LayerMode::at_least)).has_value());
}

TEST(Layerize, PotentialIncreasesAndEndsSandwiched) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Family f = probint::test::random_family(rng, n, 1, std::size_t{1} << n);
        const auto res = layerize(f);
        Family cur = f;
        for (const auto& s : res.trace) {
            const Family next = compress_family_uvf(cur, s);
            ASSERT_GT(next.total_order(), cur.total_order());
            cur = next;
        }
        EXPECT_EQ(cur, res.family);
        EXPECT_EQ(res.family.size(), f.size());
        EXPECT_TRUE(is_sandwiched(res.family)) << compact_family(f);
        if (is_intersecting(f)) {
            EXPECT_TRUE(is_intersecting(res.family));
        }
    }
}

TEST(Compression, IjIsTheSingletonUvCaseAndAllAreIdempotent) {
    std::mt19937_64 rng(8);
    const auto specs = all_specs(4);
    for (int t = 0; t < 200; ++t) {
        const Family f = probint::test::random_family(rng, 4, 0, 16);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                const Family c = compress_family_ij(f, i, j);
                ASSERT_EQ(c, compress_family_uv(f, ElemSet::singleton(i), ElemSet::singleton(j)));
                ASSERT_EQ(compress_family_ij(c, i, j), c);
            }
        for (const auto& s : specs) {
            const Family c = compress_family_uvf(f, s);
            ASSERT_EQ(c.size(), f.size());
            ASSERT_EQ(compress_family_uvf(c, s), c);
        }
        const ElemSet u = S("12"), v = S("3");
        const Family c = compress_family_uv(f, u, v);
        ASSERT_EQ(c.size(), f.size());
        ASSERT_EQ(compress_family_uv(c, u, v), c);
    }
}
