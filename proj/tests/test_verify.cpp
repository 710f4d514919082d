#include <gtest/gtest.h>

#include "probint/verify.hpp"
#include "support.hpp"

using namespace probint;
using probint::test::F;
using probint::test::S;

namespace {

std::string stat(const ExperimentReport& r, const std::string& key) { return r.find_stat(key).value_or("<missing>"); }

// Per-order counts through a plain pair check, for small families.
std::vector<std::uint64_t> counts_of(const std::vector<ElemSet>& sets) {
    const std::size_t m = sets.size();
    std::vector<std::uint64_t> out(m + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a)
            for (std::size_t b = a; b < m && ok; ++b)
                if (((mask >> a) & (mask >> b) & 1u) && sets[a].disjoint(sets[b])) ok = false;
        if (ok) ++out[std::popcount(mask)];
    }
    return out;
}

}  // namespace

TEST(LayerOptimality, ExhaustiveExamples) {
    const auto r42 = check_layer_optimality(4, 2);
    EXPECT_EQ(r42.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(r42, "families"), "4368");
    const auto r32 = check_layer_optimality(3, 2);
    EXPECT_EQ(r32.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(r32, "families"), "70");
    EXPECT_EQ(stat(r32, "named_profile"), "m=4; N=1,4,6,4,1");
    const auto r30 = check_layer_optimality(3, 0);
    EXPECT_EQ(r30.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(r30, "families"), "1");
}

// Independent sweep over all 70 four-member families over [3].
TEST(LayerOptimality, AgreesWithDirectSweepAtNThree) {
    const auto layer = counts_of({S("12"), S("13"), S("23"), S("123")});
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 4) continue;
        std::vector<ElemSet> sets;
        for (std::uint32_t b = 0; b < 8; ++b)
            if ((mask >> b) & 1u) sets.emplace_back(b);
        const auto c = counts_of(sets);
        for (std::size_t k = 0; k < c.size(); ++k) ASSERT_GE(layer[k], c[k]);
    }
}

TEST(Sandwich, Examples) {
    for (auto [n, size] : {std::pair{4, 11}, {4, 9}, {3, 5}, {4, 16}, {2, 3}}) {
        const auto rep = check_sandwich(n, static_cast<std::size_t>(size));
        EXPECT_EQ(rep.verdict, Verdict::confirmed) << n << " " << size;
        ASSERT_FALSE(rep.witnesses.empty());
        EXPECT_TRUE(is_sandwiched(rep.witnesses.front().second));
    }
    EXPECT_EQ(check_sandwich(4, 11).witnesses.front().second, layer_family(4, 2, LayerMode::at_least));
    EXPECT_THROW(check_sandwich(4, 8), std::invalid_argument);
    EXPECT_THROW(check_sandwich(4, 17), std::invalid_argument);
}

TEST(NearLayerFamilies, Construction) {
    const Family layer = layer_family(4, 2, LayerMode::at_least);
    auto with = [&](std::vector<ElemSet> extra) {
        std::vector<ElemSet> s(layer.begin(), layer.end());
        s.insert(s.end(), extra.begin(), extra.end());
        return Family(4, s);
    };
    auto without = [&](std::vector<ElemSet> gone) {
        std::vector<ElemSet> s;
        for (ElemSet a : layer)
            if (std::find(gone.begin(), gone.end(), a) == gone.end()) s.push_back(a);
        return Family(4, s);
    };
    EXPECT_EQ(near_layer_family(4, 2, 1), with({S("1")}));
    EXPECT_EQ(near_layer_family(4, 2, 2), with({S("1"), S("2")}));
    EXPECT_EQ(near_layer_family(4, 2, -1), without({S("34")}));
    EXPECT_EQ(near_layer_family(4, 2, -2), without({S("24"), S("34")}));
    EXPECT_EQ(near_layer_family(4, 3, 2), Family(4, {S("12"), S("13"), S("123"), S("124"), S("134"), S("234"), S("1234")}));
    EXPECT_THROW(near_layer_family(4, 1, 1), std::invalid_argument);
    EXPECT_THROW(near_layer_family(4, 2, 0), std::invalid_argument);
    EXPECT_THROW(near_layer_family(4, 4, -2), std::invalid_argument);
}

TEST(NearLayerFamilies, ExhaustiveExamples) {
    const auto plus1 = check_corollary_next(4, 2, 1);
    EXPECT_EQ(plus1.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(plus1, "families"), "1820");
    const auto minus1 = check_corollary_next(4, 2, -1);
    EXPECT_EQ(minus1.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(minus1, "families"), "8008");
    EXPECT_EQ(check_corollary_next(4, 2, -2).verdict, Verdict::confirmed);
    EXPECT_EQ(check_corollary_next(4, 2, 2).verdict, Verdict::confirmed);
}

TEST(LeftCompressedOptimum, Examples) {
    const auto a = check_left_compressed_optimum(4, 2, 4);
    EXPECT_EQ(a.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(a, "families"), "15");
    EXPECT_TRUE(is_left_compressed(a.witnesses.front().second));
    const auto b = check_left_compressed_optimum(5, 2, 5);
    EXPECT_EQ(b.verdict, Verdict::confirmed);
    EXPECT_EQ(stat(b, "families"), "252");
    const auto full = check_left_compressed_optimum(4, 2, 6);
    EXPECT_EQ(full.verdict, Verdict::confirmed);
    EXPECT_EQ(full.witnesses.front().second, layer_family(4, 2, LayerMode::exact));
}

TEST(Question1, Examples) {
    const auto a = check_question1(4, 11);
    EXPECT_EQ(a.verdict, Verdict::confirmed);
    EXPECT_EQ(a.witnesses.front().second, layer_family(4, 2, LayerMode::at_least));
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(check_question1(n, 1).verdict, Verdict::confirmed);
    const auto nine = check_question1(4, 9);
    EXPECT_NE(nine.verdict, Verdict::inconclusive);
    EXPECT_TRUE(nine.find_stat("per_order_maximum").has_value());
}

TEST(NestedChain, SmallCubes) {
    for (int n = 1; n <= 4; ++n) {
        const auto rep = check_nested_chain(n);
        EXPECT_EQ(rep.verdict, Verdict::confirmed) << n;
        const std::size_t half = std::size_t{1} << (n - 1);
        ASSERT_EQ(rep.witnesses.size(), half);
        for (std::size_t k = 0; k < half; ++k) {
            EXPECT_EQ(rep.witnesses[k].second.size(), half + k + 1);
            if (k) {
                EXPECT_TRUE(rep.witnesses[k - 1].second.subfamily_of(rep.witnesses[k].second));
            }
        }
    }
    EXPECT_EQ(stat(check_nested_chain(3), "families"), "93");
    EXPECT_THROW(check_nested_chain(5), BudgetExceeded);
}

TEST(Sweeps, BudgetAndSampling) {
    SweepOptions tight;
    tight.budget = 100;
    EXPECT_THROW(check_layer_optimality(4, 2, tight), BudgetExceeded);

    SweepOptions sampled;
    sampled.samples = 300;
    sampled.seed = 9;
    const auto a = check_sandwich(4, 10, sampled);
    const auto b = check_sandwich(4, 10, sampled);
    EXPECT_EQ(format_report(a), format_report(b));
    EXPECT_EQ(stat(a, "families"), "300");
    EXPECT_NE(a.verdict, Verdict::refuted);
    EXPECT_NE(format_report(a).find("param.mode=sampled"), std::string::npos);
}

TEST(Question2, DeterministicAndClean) {
    Question2Options o;
    o.trials = 400;
    o.seed = 5;
    const auto a = search_question2(o);
    const auto b = search_question2(o);
    EXPECT_EQ(format_report(a), format_report(b));
    EXPECT_EQ(a.verdict, Verdict::inconclusive);
    EXPECT_GT(std::stoull(stat(a, "instances_nontrivial")), 0u);
    EXPECT_GT(std::stoull(stat(a, "instances_nontrivial_v2")), 0u);

    o.v_sizes = {0};
    EXPECT_EQ(search_question2(o).verdict, Verdict::inconclusive);

    o.v_sizes = {3};  // |U| > 3 leaves no room in [5]
    EXPECT_THROW(search_question2(o), std::invalid_argument);
}

TEST(Question2, ClosureAndSaturationSatisfyPrecondition) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const Family f = probint::test::random_family(rng, 5, 1, 12);
        const ElemSet u = S("123"), v = S("45");
        EXPECT_TRUE(is_simpler_uv_compressed(close_under_simpler(f, u, v), u, v));
        const Family sat = saturate_under_simpler(f, u, v);
        EXPECT_TRUE(is_simpler_uv_compressed(sat, u, v));
        EXPECT_TRUE(f.subfamily_of(sat));
    }
}

TEST(Report, Format) {
    ExperimentReport r;
    r.name = "demo";
    r.param("n", 4);
    r.stat("families", 12);
    r.verdict = Verdict::refuted;
    r.witnesses.emplace_back("w", F(4, "13"));
    r.wall_seconds = 1.5;
    const std::string text = format_report(r);
    EXPECT_EQ(text,
              "experiment: demo\n  n = 4\nverdict: refuted\nwitness w:\nn=4\n1 3\n"
              "[report]\nexperiment=demo\nparam.n=4\nstat.families=12\nwitnesses=1\nverdict=refuted\n[/report]\n");
    EXPECT_NE(format_report(r, true).find("wall_seconds=1.5\n"), std::string::npos);
}

TEST(LayerOptimality, ImpliesSandwichAtTheLayerSize) {
    for (int r = 0; r <= 2; ++r) {
        ASSERT_EQ(check_layer_optimality(4, r).verdict, Verdict::confirmed);
        EXPECT_EQ(check_sandwich(4, upper_layers_size(4, r)).verdict, Verdict::confirmed);
    }
}

// The steps taken by layerize are (U,v,f)-compressions, so they never lose
// intersecting subfamilies of any order.
TEST(Question2, LayerizeStepsNeverLoseSubfamilies) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        Family cur = probint::test::random_family(rng, 5, 1, 20);
        for (const auto& s : layerize(cur).trace) {
            const Family next = compress_family_uvf(cur, s);
            ASSERT_TRUE(dominates_or_equal(profile(next), profile(cur))) << format_uvf(s);
            cur = next;
        }
    }
}
