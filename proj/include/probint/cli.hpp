#pragma once

// probint command line.  run() is the whole program; main() only forwards
// argv.  Exit codes: 0 success / confirmed / inconclusive, 1 refuted,
// 2 usage or input error, 3 budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compress.hpp"
#include "count.hpp"
#include "family.hpp"
#include "inject.hpp"
#include "verify.hpp"

namespace probint::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kBudget = 3 };

namespace detail {

struct FamilyInput {
    std::string path;
    std::string inline_text;

    void attach(CLI::App* app) {
        auto* in = app->add_option("--in", path, "family file");
        auto* fam = app->add_option("--family", inline_text, "inline family, ';' separates lines (\"n=4; 1 3; 2 3\")");
        in->excludes(fam);
        fam->excludes(in);
    }

    Family load() const {
        if (!path.empty()) {
            std::ifstream is(path);
            if (!is) throw std::invalid_argument("cannot open --in file '" + path + "'");
            std::stringstream ss;
            ss << is.rdbuf();
            return parse_family(ss.str());
        }
        if (!inline_text.empty()) {
            std::string text = inline_text;
            for (char& c : text)
                if (c == ';') c = '\n';
            return parse_family(text);
        }
        throw std::invalid_argument("one of --in or --family is required");
    }
};

struct SweepFlags {
    std::uint64_t budget = SweepOptions{}.budget;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;

    void attach(CLI::App* app) {
        app->add_option("--budget", budget, "maximum number of families for an exhaustive sweep");
        auto* s = app->add_option("--samples", samples, "sample this many families instead of enumerating");
        auto* seed_opt = app->add_option("--seed", seed, "seed for --samples");
        s->needs(seed_opt);
        seed_opt->needs(s);
    }

    SweepOptions options() const {
        SweepOptions o;
        o.budget = budget;
        if (samples) {
            o.samples = *samples;
            o.seed = seed;
        }
        return o;
    }
};

inline int verdict_code(Verdict v) { return v == Verdict::refuted ? kRefuted : kOk; }

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Runs f, prefixing any argument error with the flag it came from.
template <class Fn>
auto with_flag(const char* flag, Fn&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(flag) + ": " + e.what());
    }
}

inline std::vector<int> parse_uint_list(std::string_view text) {
    std::vector<int> out;
    for (auto tok : probint::detail::split(text, ',')) {
        int x = 0;
        if (!probint::detail::parse_uint(probint::detail::trim(tok), x))
            throw std::invalid_argument("expected a comma-separated list of non-negative integers, got '" + std::string(text) + "'");
        out.push_back(x);
    }
    return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"probint: compressions, injections and intersecting-subfamily counts for set families", "probint"};
    app.require_subcommand(1);

    detail::FamilyInput input;
    bool timing = false;
    int exit_code = kOk;

    // compress ij|uv|uvf
    auto* compress = app.add_subcommand("compress", "apply one compression to a family");
    compress->require_subcommand(1);
    int ci = 0, cj = 0;
    auto* c_ij = compress->add_subcommand("ij", "ij-compression");
    c_ij->add_option("--i", ci, "first element, i < j")->required();
    c_ij->add_option("--j", cj, "second element")->required();
    input.attach(c_ij);
    std::string cu, cv;
    auto* c_uv = compress->add_subcommand("uv", "UV-compression");
    c_uv->add_option("--U", cu, "comma-separated elements")->required();
    c_uv->add_option("--V", cv, "comma-separated elements; empty for V = {}")->required();
    input.attach(c_uv);
    std::string cspec;
    auto* c_uvf = compress->add_subcommand("uvf", "(U,v,f)-compression");
    c_uvf->add_option("--spec", cspec, "\"U=2,3,4,5; v=1; f=2-4,3-5\"")->required();
    input.attach(c_uvf);

    auto* leftc = app.add_subcommand("leftcompress", "ij-compress until left-compressed");
    input.attach(leftc);
    auto* layer = app.add_subcommand("layerize", "(U,v,f)-compress until sandwiched between upper layers");
    input.attach(layer);
    auto* prof = app.add_subcommand("profile", "counts of intersecting subfamilies by order");
    input.attach(prof);
    double pval = 0;
    auto* prob = app.add_subcommand("prob", "probability that a p-random subfamily is intersecting");
    prob->add_option("--p", pval, "inclusion probability, 0 < p < 1")->required();
    input.attach(prob);

    // inject verify ij|uvf
    auto* inject = app.add_subcommand("inject", "subfamily injections");
    inject->require_subcommand(1);
    auto* iverify = inject->add_subcommand("verify", "check phi is an order-preserving injection");
    iverify->require_subcommand(1);
    int ii = 0, ij = 0;
    auto* iv_ij = iverify->add_subcommand("ij", "ij case");
    iv_ij->add_option("--i", ii, "first element, i < j")->required();
    iv_ij->add_option("--j", ij, "second element")->required();
    input.attach(iv_ij);
    std::string ispec;
    auto* iv_uvf = iverify->add_subcommand("uvf", "(U,v,f) case");
    iv_uvf->add_option("--spec", ispec, "\"U=2,3,4,5; v=1; f=2-4,3-5\"")->required();
    input.attach(iv_uvf);

    // verify ...
    auto* verify = app.add_subcommand("verify", "experiments");
    verify->require_subcommand(1);
    verify->add_flag("--timing", timing, "include wall time in the report");
    verify->fallthrough();
    int vn = 0, vr = 0, voff = 0;
    std::size_t vsize = 0;
    detail::SweepFlags sweep_flags;

    auto* v_layer = verify->add_subcommand("layer", "[n]^(>=r) dominates every family of its order");
    v_layer->add_option("--n", vn)->required();
    v_layer->add_option("--r", vr)->required();
    sweep_flags.attach(v_layer);

    auto* v_sand = verify->add_subcommand("sandwich", "some undominated family is sandwiched");
    v_sand->add_option("--n", vn)->required();
    v_sand->add_option("--size", vsize)->required();
    sweep_flags.attach(v_sand);

    auto* v_next = verify->add_subcommand("next", "named families at layer size +-1, +-2");
    v_next->add_option("--n", vn)->required();
    v_next->add_option("--r", vr)->required();
    v_next->add_option("--offset", voff, "-2, -1, 1 or 2")->required()->allow_extra_args(false);
    sweep_flags.attach(v_next);

    auto* v_uni = verify->add_subcommand("uniform", "some undominated family in [n]^(r) is left-compressed");
    v_uni->add_option("--n", vn)->required();
    v_uni->add_option("--r", vr)->required();
    v_uni->add_option("--size", vsize)->required();
    sweep_flags.attach(v_uni);

    auto* v_q1 = verify->add_subcommand("q1", "simultaneous per-order maximizer");
    v_q1->add_option("--n", vn)->required();
    v_q1->add_option("--size", vsize)->required();
    sweep_flags.attach(v_q1);

    Question2Options q2;
    std::string q2_vs = "1,2";
    bool expect_none = false;
    auto* v_q2 = verify->add_subcommand("q2", "random search for a UV-compression that loses intersecting subfamilies");
    v_q2->add_option("--n", q2.n)->required();
    v_q2->add_option("--trials", q2.trials)->required();
    v_q2->add_option("--seed", q2.seed)->required();
    v_q2->add_option("--v-sizes", q2_vs, "comma-separated |V| values");
    v_q2->add_option("--max-size", q2.max_size, "largest sampled family");
    v_q2->add_flag("--expect-no-counterexample", expect_none, "state the expectation in the report");

    auto* v_chain = verify->add_subcommand("chain", "nested chain of undominated families");
    v_chain->add_option("--n", vn)->required();
    sweep_flags.attach(v_chain);

    std::vector<const char*> argv;
    argv.push_back("probint");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    auto report = [&](const ExperimentReport& r) {
        out << format_report(r, timing);
        exit_code = detail::verdict_code(r.verdict);
    };

    try {
        if (c_ij->parsed()) {
            const Family f = input.load();
            const Family c = detail::with_flag("--i/--j", [&] { return compress_family_ij(f, ci, cj); });
            out << format_family(c);
            for (ElemSet a : f)
                if (!c.contains(a)) out << "# moved " << compact_set(a) << " -> " << compact_set(compress_set_ij(a, ci, cj)) << "\n";
        } else if (c_uv->parsed()) {
            const Family f = input.load();
            const ElemSet u = detail::with_flag("--U", [&] { return parse_elem_list(cu); });
            const ElemSet v = detail::with_flag("--V", [&] { return parse_elem_list(cv); });
            const Family c = detail::with_flag("--U/--V", [&] { return compress_family_uv(f, u, v); });
            out << format_family(c);
            for (ElemSet a : f)
                if (!c.contains(a)) out << "# moved " << compact_set(a) << " -> " << compact_set(compress_set_uv(a, u, v)) << "\n";
        } else if (c_uvf->parsed()) {
            const Family f = input.load();
            const UvfSpec spec = detail::with_flag("--spec", [&] { return parse_uvf(cspec); });
            const Family c = detail::with_flag("--spec", [&] { return compress_family_uvf(f, spec); });
            out << format_family(c);
            for (ElemSet a : f)
                if (!c.contains(a)) out << "# moved " << compact_set(a) << " -> " << compact_set(compress_set_uvf(a, spec)) << "\n";
        } else if (leftc->parsed()) {
            const Family f = input.load();
            auto res = left_compress(f);
            out << format_family(res.family);
            long potential = f.label_weight();
            Family cur = f;
            for (const auto& s : res.trace) {
                cur = compress_family_ij(cur, s.i, s.j);
                out << "# step i=" << s.i << " j=" << s.j << " label_sum " << potential << " -> " << cur.label_weight() << "\n";
                potential = cur.label_weight();
            }
        } else if (layer->parsed()) {
            const Family f = input.load();
            auto res = layerize(f);
            out << format_family(res.family);
            Family cur = f;
            for (const auto& s : res.trace) {
                const long before = cur.total_order();
                cur = compress_family_uvf(cur, s);
                out << "# step " << format_uvf(s) << " total_order " << before << " -> " << cur.total_order() << "\n";
            }
            out << "# sandwich_rank=" << sandwich_rank(res.family.n(), res.family.size()) << "\n";
        } else if (prof->parsed()) {
            out << format_profile(profile(input.load())) << "\n";
        } else if (prob->parsed()) {
            const auto p = profile(input.load());
            const double pr = detail::with_flag("--p", [&] { return prob_intersecting(p, pval); });
            out << "p=" << detail::format_double(pval) << " prob=" << detail::format_double(pr) << "\n";
        } else if (iv_ij->parsed()) {
            const Family f = input.load();
            const auto rep = verify_injection(detail::with_flag("--i/--j", [&] { return make_ij_context(f, ii, ij); }));
            out << format_injection_report(rep);
            exit_code = rep.passed() ? kOk : kRefuted;
        } else if (iv_uvf->parsed()) {
            const Family f = input.load();
            const auto ctx = detail::with_flag("--spec", [&] { return make_uvf_context(f, parse_uvf(ispec)); });
            const auto rep = verify_injection(ctx);
            out << format_injection_report(rep);
            exit_code = rep.passed() ? kOk : kRefuted;
        } else if (v_layer->parsed()) {
            report(check_layer_optimality(vn, vr, sweep_flags.options()));
        } else if (v_sand->parsed()) {
            report(check_sandwich(vn, vsize, sweep_flags.options()));
        } else if (v_next->parsed()) {
            report(check_corollary_next(vn, vr, voff, sweep_flags.options()));
        } else if (v_uni->parsed()) {
            report(check_left_compressed_optimum(vn, vr, vsize, sweep_flags.options()));
        } else if (v_q1->parsed()) {
            report(check_question1(vn, vsize, sweep_flags.options()));
        } else if (v_q2->parsed()) {
            q2.v_sizes = detail::with_flag("--v-sizes", [&] { return detail::parse_uint_list(q2_vs); });
            auto r = search_question2(q2);
            if (expect_none) {
                r.param("expectation", "no-counterexample");
                r.notes.push_back(r.verdict == Verdict::refuted ? "expectation violated: counterexample found"
                                                                : "expectation met: no counterexample among the tested instances");
            }
            report(r);
        } else if (v_chain->parsed()) {
            report(check_nested_chain(vn, sweep_flags.options()));
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "argument error: " << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}

}  // namespace probint::cli
