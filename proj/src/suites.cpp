#include "uopt/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "uopt/core_orders.hpp"
#include "uopt/measures.hpp"
#include "uopt/minu.hpp"
#include "uopt/pareto.hpp"
#include "uopt/uncertainty.hpp"

namespace uopt::suites {
namespace {

using V2 = Vec<2, int>;
using V3 = Vec<3, int>;

template <typename T, typename P>
Property expect_pass(std::string name, Gen<T> g, P prop) {
    return {std::move(name), Expect::Pass, [g = std::move(g), prop](std::size_t n, std::uint64_t seed) {
                return check(n, g, prop, seed);
            }};
}

template <typename T, typename P>
Property expect_falsified(std::string name, Gen<T> g, P prop) {
    return {std::move(name), Expect::Falsify, [g = std::move(g), prop](std::size_t n, std::uint64_t seed) {
                return falsify(n, g, prop, seed);
            }};
}

template <typename T, typename P>
Property expect(bool pass, std::string name, Gen<T> g, P prop) {
    return pass ? expect_pass(std::move(name), std::move(g), prop) : expect_falsified(std::move(name), std::move(g), prop);
}

// --- shared generators ------------------------------------------------------

Gen<FinSet<int>> int_sets() { return gen_finset(gen_int(-20, 20), 0, 12); }

std::vector<int> int_range(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

using IntTable = TableFun<int, int>;

Gen<std::pair<IntTable, FinSet<int>>> int_tables_with_sets() {
    return gen_pair(gen_table_fun(int_range(-6, 6), gen_int(-4, 4)), gen_finset(gen_int(-8, 8), 0, 12));
}

template <std::size_t N>
Gen<std::pair<TableFun<int, Vec<N, int>>, FinSet<int>>> vec_tables_with_sets() {
    return gen_pair(gen_table_fun(int_range(0, 11), gen_vec<N>(gen_int(0, 5))), gen_finset(gen_int(0, 11), 0, 12));
}

Gen<SeqU<int>> seq_values() { return gen_seq_u(gen_int(-10, 10), 1, 6); }
Gen<SimpleProb<int>> sp_values() { return gen_simple_prob(gen_int(0, 4), 1, 5); }
Gen<Interval<double>> interval_values() { return gen_interval(gen_dyadic(-8, 8, 4)); }
Gen<HistPDF<double>> pdf_values() { return gen_hist_pdf(gen_dyadic(-8, 8, 4), 1, 5); }
Gen<IdU<int>> id_values() { return gen_id_u(gen_int(-100, 100)); }

// --- core -------------------------------------------------------------------

std::vector<Property> core_suite() {
    std::vector<Property> ps;
    for (const IntFun& f : int_function_pool()) {
        ps.push_back(expect_pass("min-lower-bound[" + f.name + "]", int_sets(), [f](const FinSet<int>& as) { return min_is_lower_bound(f, as); }));
        ps.push_back(expect_pass("argmin-sound[" + f.name + "]", int_sets(), [f](const FinSet<int>& as) { return argmin_is_sound(f, as); }));
        ps.push_back(expect_pass("argmin-complete[" + f.name + "]", int_sets(), [f](const FinSet<int>& as) { return argmin_is_complete(f, as); }));
    }
    using Case = std::pair<IntTable, FinSet<int>>;
    ps.push_back(expect_pass("min-lower-bound[table]", int_tables_with_sets(), [](const Case& c) { return min_is_lower_bound(c.first, c.second); }));
    ps.push_back(expect_pass("argmin-sound[table]", int_tables_with_sets(), [](const Case& c) { return argmin_is_sound(c.first, c.second); }));
    ps.push_back(expect_pass("argmin-complete[table]", int_tables_with_sets(), [](const Case& c) { return argmin_is_complete(c.first, c.second); }));
    return ps;
}

// --- relations --------------------------------------------------------------

std::vector<Property> relations_suite() {
    const Gen<V2> v = gen_vec<2>(gen_int(-3, 3));
    const auto pairs = gen_pair(v, v);
    const auto triples = gen_tuple(v, v, v);
    using Triple = std::tuple<V2, V2, V2>;
    const Dominance dom;
    const auto indiff = indifference_of(dom);
    return {
        expect_pass("dominance-anti-reflexive", v, [dom](const V2& x) { return is_anti_reflexive(dom, x); }),
        expect_pass("dominance-transitive", triples, [dom](const Triple& t) {
            const auto& [x, y, z] = t;
            return implies(dom(x, y) && dom(y, z), dom(x, z));
        }),
        expect_falsified("dominance-total", pairs, [dom](const std::pair<V2, V2>& p) { return is_total(dom, p.first, p.second); }),
        expect_pass("indifference-reflexive", v, [indiff](const V2& x) { return indiff(x, x); }),
        expect_pass("indifference-symmetric", pairs, [indiff](const std::pair<V2, V2>& p) {
            return indiff(p.first, p.second) == indiff(p.second, p.first);
        }),
        expect_falsified("indifference-transitive", triples, [indiff](const Triple& t) {
            const auto& [x, y, z] = t;
            return is_transitive(indiff, x, y, z);
        }),
    };
}

// --- pareto -----------------------------------------------------------------

/// `ys` is drawn dominated by `xs` half of the time so the antecedent of the
/// domination-preservation property is exercised.
Gen<std::tuple<FinSet<V2>, V2, FinSet<V2>>> dominated_triples() {
    const Gen<V2> v = gen_vec<2>(gen_int(-4, 4));
    const auto sets = gen_finset(v, 0, 8);
    return [=](Rng& r) {
        FinSet<V2> xs = sets(r);
        V2 x = v(r);
        FinSet<V2> ys;
        if (!xs.empty() && r.bernoulli(0.5)) {
            const auto m = static_cast<std::size_t>(r.uniform_int(0, 6));
            for (std::size_t k = 0; k < m; ++k) {
                V2 y = xs[static_cast<std::size_t>(r.uniform_int(0, static_cast<std::int64_t>(xs.size()) - 1))];
                const auto axis = static_cast<std::size_t>(r.uniform_int(0, 1));
                y[axis] += static_cast<int>(r.uniform_int(1, 3));
                y[1 - axis] += static_cast<int>(r.uniform_int(0, 3));
                ys.push_back(y);
            }
        } else {
            ys = sets(r);
        }
        return std::tuple<FinSet<V2>, V2, FinSet<V2>>{std::move(xs), x, std::move(ys)};
    };
}

template <std::size_t N>
void add_solver_props(std::vector<Property>& ps, const std::string& tag) {
    using Case = std::pair<TableFun<int, Vec<N, int>>, FinSet<int>>;
    const auto g = vec_tables_with_sets<N>();
    ps.push_back(expect_pass("pareto-min-is-front" + tag, g, [](const Case& c) { return prop_pareto_min(c.first, c.second); }));
    ps.push_back(expect_pass("argpareto-sound" + tag, g, [](const Case& c) { return prop_argpareto_sound(c.first, c.second); }));
    ps.push_back(expect_pass("argpareto-complete" + tag, g, [](const Case& c) { return prop_argpareto_complete(c.first, c.second); }));
    ps.push_back(expect_pass("component-min-on-front" + tag, g, [](const Case& c) { return prop_min_on_front(c.first, c.second); }));
}

std::vector<Property> pareto_suite() {
    const Gen<V2> v = gen_vec<2>(gen_int(-4, 4));
    const auto sets = gen_finset(v, 0, 10);
    std::vector<Property> ps{
        expect_pass("bump-subset", gen_pair(sets, v), [](const std::pair<FinSet<V2>, V2>& c) { return prop_bump_subset(c.first, c.second); }),
        expect_pass("bump-keeps-antichain", gen_pair(gen_antichain(v, 8), v), [](const std::pair<FinSet<V2>, V2>& c) {
            return implies(is_indiff(Dominance{}, c.first), prop_bump_keeps_indiff(c.first, c.second));
        }),
        expect_pass("bump-keeps-domination", dominated_triples(), [](const std::tuple<FinSet<V2>, V2, FinSet<V2>>& c) {
            const auto& [xs, x, ys] = c;
            return implies(set_dom_set(xs, ys), prop_bump_keeps_domination(xs, x, ys));
        }),
        expect_pass("pareto-opt-is-front", sets, [](const FinSet<V2>& xs) { return prop_pareto_opt(xs); }),
        expect_pass("merge-law", gen_pair(sets, sets), [](const std::pair<FinSet<V2>, FinSet<V2>>& c) {
            return set_equal(merge_fronts(pareto_opt(c.first), pareto_opt(c.second)), pareto_opt(set_concat(c.first, c.second)));
        }),
    };
    add_solver_props<2>(ps, "[2d]");
    add_solver_props<3>(ps, "[3d]");

    const Gen<std::pair<FinSet<V2>, FinSet<V2>>> shuffled = [sets](Rng& r) {
        FinSet<V2> xs = sets(r);
        std::vector<V2> ys = xs.elems();
        std::shuffle(ys.begin(), ys.end(), r);
        return std::pair<FinSet<V2>, FinSet<V2>>{std::move(xs), FinSet<V2>(std::move(ys))};
    };
    ps.push_back(expect_pass("pareto-opt-permutation-invariant", shuffled, [](const std::pair<FinSet<V2>, FinSet<V2>>& c) {
        return set_equal(pareto_opt(c.first), pareto_opt(c.second));
    }));

    using P = std::pair<int, int>;
    const auto testfun3 = [](const P& a) { return c3(0, a.first, a.second); };
    const auto pair_sets = gen_finset(gen_pair(gen_int(-5, 5), gen_int(-5, 5)), 0, 8);
    ps.push_back(expect_pass("component-min-on-front[const 0, fst, snd]", pair_sets,
                             [testfun3](const FinSet<P>& as) { return prop_min_on_front(testfun3, as); }));
    const auto testfun = [](const P& a) { return a.first + a.second * a.first; };
    ps.push_back(expect_pass("front-is-min[x + y*x]", pair_sets, [testfun](const FinSet<P>& as) { return prop_single_front(testfun, as); }));
    ps.push_back(expect_pass("argfront-is-argmin[x + y*x]", pair_sets, [testfun](const FinSet<P>& as) { return prop_single_argfront(testfun, as); }));
    ps.push_back(expect_pass("argfront-singleton[(0, x)]", gen_nonempty_finset(gen_int(-20, 20), 10), [](const FinSet<int>& as) {
        return is_singleton_set(argpareto_min([](int x) { return c2(0, x); }, as));
    }));
    ps.push_back(expect_falsified("component-argmin-within-front[const 0, fst, snd]", pair_sets,
                                  [testfun3](const FinSet<P>& as) { return prop_argmin_within_front(testfun3, as); }));
    return ps;
}

// --- single objective as a one-dimensional front ---------------------------

std::vector<Property> single_objective_suite() {
    std::vector<Property> ps;
    for (const IntFun& f : int_function_pool()) {
        ps.push_back(expect_pass("front-is-min[" + f.name + "]", int_sets(), [f](const FinSet<int>& as) { return prop_single_front(f, as); }));
        ps.push_back(expect_pass("argfront-is-argmin[" + f.name + "]", int_sets(), [f](const FinSet<int>& as) { return prop_single_argfront(f, as); }));
    }
    using Case = std::pair<IntTable, FinSet<int>>;
    ps.push_back(expect_pass("front-is-min[table]", int_tables_with_sets(), [](const Case& c) { return prop_single_front(c.first, c.second); }));
    ps.push_back(expect_pass("argfront-is-argmin[table]", int_tables_with_sets(), [](const Case& c) { return prop_single_argfront(c.first, c.second); }));
    return ps;
}

// --- uncertainty ------------------------------------------------------------

/// `u2` is a shifted copy of `u1` half of the time, likewise `u3` of `u2`.
template <typename U>
Gen<std::tuple<U, U, U>> chained(Gen<U> g) {
    return [g](Rng& r) {
        U u1 = g(r);
        U u2 = r.bernoulli(0.5) ? shift_up(u1) : g(r);
        U u3 = r.bernoulli(0.5) ? shift_up(u2) : g(r);
        return std::tuple<U, U, U>{std::move(u1), std::move(u2), std::move(u3)};
    };
}

template <typename U, typename A>
void add_uncertainty_props(std::vector<Property>& ps, const std::string& tag, Gen<U> g, Gen<A> ga,
                           bool total_expected_false = true) {
    ps.push_back(expect_pass("fmap-identity" + tag, g, [](const U& u) { return fmap(u, [](const auto& x) { return x; }) == u; }));
    ps.push_back(expect_pass("elem-matches-outcomes" + tag, gen_pair(ga, g), [](const std::pair<A, U>& c) {
        const auto os = outcomes(c.second);
        return generic_elem(c.first, c.second) == (std::find(os.begin(), os.end(), c.first) != os.end());
    }));
    ps.push_back(expect_pass("all-any-duality" + tag, gen_pair(ga, g), [](const std::pair<A, U>& c) {
        const auto below = fmap(c.second, [&](const auto& x) { return x < c.first; });
        const auto not_below = fmap(c.second, [&](const auto& x) { return !(x < c.first); });
        return generic_all(below) == !generic_any(not_below);
    }));
    ps.push_back(expect_pass("strict-dominance-irreflexive" + tag, g, [](const U& u) { return !strict_dom_u(u, u); }));
    ps.push_back(expect_pass("strict-dominance-transitive" + tag, chained(g), [](const std::tuple<U, U, U>& t) {
        const auto& [a, b, c] = t;
        return implies(strict_dom_u(a, b) && strict_dom_u(b, c), strict_dom_u(a, c));
    }));
    if (total_expected_false) {
        ps.push_back(expect_falsified("strict-dominance-total" + tag, gen_pair(g, g), [](const std::pair<U, U>& c) {
            return c.first == c.second || strict_dom_u(c.first, c.second) || strict_dom_u(c.second, c.first);
        }));
    }
    ps.push_back(expect_pass("pointwise-le-reflexive" + tag, g, [](const U& u) { return pointwise_le(u, u); }));
    ps.push_back(expect_pass("not-dominated-reflexive" + tag, g, [](const U& u) { return not_strictly_dominated(u, u); }));
    ps.push_back(expect_pass("raised-pairs-pointwise-le" + tag, gen_m1_pair(g), [](const std::pair<U, U>& p) { return pointwise_le(p.first, p.second); }));
    ps.push_back(expect_pass("shifted-pairs-strictly-dominate" + tag, gen_m2_pair(g), [](const std::pair<U, U>& p) { return strict_dom_u(p.first, p.second); }));
}

std::vector<Property> uncertainty_suite() {
    std::vector<Property> ps;
    add_uncertainty_props(ps, "[seq]", seq_values(), gen_int(-10, 10));
    add_uncertainty_props(ps, "[sp]", sp_values(), gen_int(0, 4));
    add_uncertainty_props(ps, "[interval]", interval_values(), gen_dyadic(-8, 8, 4));
    add_uncertainty_props(ps, "[pdf]", pdf_values(), gen_dyadic(-8, 8, 4));
    add_uncertainty_props(ps, "[id]", id_values(), gen_int(-100, 100), false);

    using SP = SimpleProb<int>;
    const Gen<std::pair<SP, SP>> sp_pairs = gen_pair(sp_values(), sp_values());
    ps.push_back(expect_pass("strict-dominance-ignores-probabilities[sp]", sp_pairs, [](const std::pair<SP, SP>& c) {
        // Reweight both sides deterministically and compare verdicts.
        auto reweight = [](SP u) {
            double sum = 0.0;
            for (std::size_t i = 0; i < u.pairs.size(); ++i) sum += (u.pairs[i].prob = static_cast<double>(i + 1));
            for (auto& w : u.pairs) w.prob /= sum;
            return u;
        };
        return strict_dom_u(c.first, c.second) == strict_dom_u(reweight(c.first), reweight(c.second));
    }));
    return ps;
}

// --- generators -------------------------------------------------------------

std::vector<Property> generators_suite() {
    const Gen<std::uint64_t> seeds = [](Rng& r) { return r(); };
    return {
        expect_pass("simple-prob-valid", sp_values(), [](const SimpleProb<int>& u) { return is_valid(u); }),
        expect_pass("interval-ordered", interval_values(), [](const Interval<double>& u) { return is_valid(u); }),
        expect_pass("hist-pdf-valid", pdf_values(), [](const HistPDF<double>& u) { return is_valid(u); }),
        expect_pass("sequence-nonempty", seq_values(), [](const SeqU<int>& u) { return !u.elems.empty(); }),
        expect_pass("same-seed-same-stream", seeds, [](std::uint64_t s) {
            Rng a(s), b(s);
            const auto g = gen_simple_prob(gen_int(-5, 5), 1, 6);
            for (int i = 0; i < 100; ++i)
                if (!(g(a) == g(b))) return false;
            return true;
        }),
    };
}

// --- monotonicity conditions ------------------------------------------------

struct Verdicts {
    bool m1;
    bool m2;
};

template <typename U>
void add_monotonicity(std::vector<Property>& ps, const Gen<U>& g, const std::vector<Measure<U>>& ms,
                      const std::map<std::string, Verdicts>& expected, bool with_m1, bool with_m2) {
    for (const auto& mu : ms) {
        const Verdicts v = expected.at(mu.name);
        if (with_m1) {
            const Expect e = v.m1 ? Expect::Pass : Expect::Falsify;
            ps.push_back({"M1 " + mu.name, e, [g, mu, e](std::size_t n, std::uint64_t s) { return check_m1(g, mu, n, s, e); }});
        }
        if (with_m2) {
            const Expect e = v.m2 ? Expect::Pass : Expect::Falsify;
            ps.push_back({"M2 " + mu.name, e, [g, mu, e](std::size_t n, std::uint64_t s) { return check_m2(g, mu, n, s, e); }});
        }
    }
}

const std::map<std::string, Verdicts> kSeqVerdicts{
    {"sum", {true, true}},   {"average", {true, true}}, {"head", {true, true}},     {"best", {true, true}},
    {"worst", {true, true}}, {"length", {true, false}}, {"const 3", {true, false}},
};
const std::map<std::string, Verdicts> kSpVerdicts{
    {"expVal", {true, true}},      {"best", {true, true}},     {"worst", {true, true}},
    {"mostLikely", {false, true}}, {"const 3", {true, false}},
};
const std::map<std::string, Verdicts> kIntervalVerdicts{
    {"sum", {true, true}},    {"average", {true, true}}, {"best", {true, true}},
    {"worst", {true, true}},  {"width", {false, false}}, {"const 3", {true, false}},
};
const std::map<std::string, Verdicts> kPdfVerdicts{
    {"expVal", {true, true}}, {"mostLikely", {true, true}}, {"const 3", {true, false}},
};
const std::map<std::string, Verdicts> kIdVerdicts{
    {"unwrap", {true, true}}, {"const 7", {true, false}},
};

// --- min_u / argmin_u ---------------------------------------------------------

template <typename A, typename U, typename F>
void add_minu_props(std::vector<Property>& ps, const std::string& tag, const Measure<U>& mu, bool sound,
                    Gen<FinSet<A>> sets, F f) {
    const std::string suffix = "[" + mu.name + "]" + tag;
    ps.push_back(expect_pass("min-u-nonempty-subset" + suffix, sets, [mu, f](const FinSet<A>& as) { return min_u_nonempty_subset(mu, f, as); }));
    ps.push_back(expect(sound, "min-u-sound" + suffix, sets, [mu, f](const FinSet<A>& as) { return min_u_sound(mu, f, as); }));
    ps.push_back(expect_pass("argmin-u-maps-into-min-u" + suffix, sets, [mu, f](const FinSet<A>& as) { return argmin_u_maps_into_min_u(mu, f, as); }));
    ps.push_back(expect_pass("argmin-u-complete" + suffix, sets, [mu, f](const FinSet<A>& as) { return argmin_u_complete(mu, f, as); }));
}

/// Soundness on random table objectives, for measures satisfying M2.
template <typename U>
void add_minu_random(std::vector<Property>& ps, const Measure<U>& mu, Gen<U> codomain) {
    using Case = std::pair<TableFun<int, U>, FinSet<int>>;
    const auto g = gen_pair(gen_table_fun(int_range(0, 5), std::move(codomain)), gen_nonempty_finset(gen_int(0, 7), 6));
    ps.push_back(expect_pass("min-u-sound[" + mu.name + "] random objective", g, [mu](const Case& c) { return min_u_sound(mu, c.first, c.second); }));
}

template <typename U, typename A, typename F>
std::vector<Property> minu_suite(const std::vector<Measure<U>>& ms, const std::map<std::string, Verdicts>& verdicts,
                                 const std::string& tag, Gen<FinSet<A>> sets, F f, Gen<U> codomain) {
    std::vector<Property> ps;
    for (const auto& mu : ms) {
        const bool m2 = verdicts.at(mu.name).m2;
        add_minu_props(ps, tag, mu, m2, sets, f);
        if (m2) add_minu_random(ps, mu, codomain);
    }
    return ps;
}

std::vector<Property> minu_id_suite() {
    std::vector<Property> ps;
    const auto sets = gen_nonempty_finset(gen_int(-5, 5), 6);
    const IntFun square{"square", [](int x) { return x * x; }};
    for (const auto& mu : id_measures<int>()) {
        const bool m2 = kIdVerdicts.at(mu.name).m2;
        const auto f = [square](int x) { return IdU<int>{square(x)}; };
        add_minu_props(ps, " f x = Id (x*x)", mu, m2, sets, f);
        for (const IntFun& g : int_function_pool()) {
            const std::string suffix = "[" + mu.name + "] " + g.name;
            const bool distinct_images = g.name != "const 5";
            // A constant objective has one image, so even `const 7` passes.
            const bool pass = m2 || !distinct_images;
            ps.push_back(expect(pass, "id-min-u-singleton" + suffix, sets, [mu, g](const FinSet<int>& as) { return id_min_u_singleton(mu, g, as); }));
            ps.push_back(expect(pass, "id-min-u-is-min" + suffix, sets, [mu, g](const FinSet<int>& as) { return id_min_u_is_min(mu, g, as); }));
            ps.push_back(expect(pass, "id-argmin-u-is-argmin" + suffix, sets, [mu, g](const FinSet<int>& as) { return id_argmin_u_is_argmin(mu, g, as); }));
        }
    }
    return ps;
}

// --- registry ---------------------------------------------------------------

using Builder = std::vector<Property> (*)();

const std::vector<std::pair<std::string, Builder>>& registry() {
    static const std::vector<std::pair<std::string, Builder>> r{
        {"core", core_suite},
        {"relations", relations_suite},
        {"pareto", pareto_suite},
        {"single-objective", single_objective_suite},
        {"uncertainty", uncertainty_suite},
        {"generators", generators_suite},
        {"m1-seq", [] {
             std::vector<Property> ps;
             add_monotonicity(ps, seq_values(), seq_measures<int>(), kSeqVerdicts, true, false);
             return ps;
         }},
        {"m2-seq", [] {
             std::vector<Property> ps;
             add_monotonicity(ps, seq_values(), seq_measures<int>(), kSeqVerdicts, false, true);
             return ps;
         }},
        {"m-sp", [] {
             std::vector<Property> ps;
             add_monotonicity(ps, sp_values(), sp_measures<int>(), kSpVerdicts, true, true);
             return ps;
         }},
        {"m-interval", [] {
             std::vector<Property> ps;
             add_monotonicity(ps, interval_values(), interval_measures<double>(), kIntervalVerdicts, true, true);
             return ps;
         }},
        {"m-pdf", [] {
             std::vector<Property> ps;
             add_monotonicity(ps, pdf_values(), pdf_measures<double>(), kPdfVerdicts, true, true);
             return ps;
         }},
        {"m-id", [] {
             std::vector<Property> ps;
             add_monotonicity(ps, id_values(), id_measures<int>(), kIdVerdicts, true, true);
             return ps;
         }},
        {"minu-seq", [] {
             // Random sequence objectives have a fixed length: across lengths
             // `sum` is not monotone under strict dominance.
             auto ps = minu_suite(seq_measures<int>(), kSeqVerdicts, " f_seq", gen_nonempty_finset(gen_int(0, 4), 6), f_seq,
                                  gen_seq_u(gen_int(-5, 5), 3, 3));
             using Case = std::pair<TableFun<int, SeqU<int>>, FinSet<int>>;
             const Measure<SeqU<int>> sum{"sum", sum_seq<int>};
             ps.push_back(expect_falsified(
                 "min-u-sound[sum] random objective, mixed lengths",
                 gen_pair(gen_table_fun(int_range(0, 5), gen_seq_u(gen_int(-5, 5), 1, 4)), gen_nonempty_finset(gen_int(0, 7), 6)),
                 [sum](const Case& c) { return min_u_sound(sum, c.first, c.second); }));
             return ps;
         }},
        {"minu-sp", [] {
             return minu_suite(sp_measures<int>(), kSpVerdicts, " f_SP", gen_nonempty_finset(gen_bool(), 4), f_sp,
                               gen_simple_prob(gen_int(0, 6), 1, 4));
         }},
        {"minu-interval", [] {
             return minu_suite(interval_measures<double>(), kIntervalVerdicts, " f_I", gen_nonempty_finset(gen_bool(), 4),
                               f_interval, gen_interval(gen_dyadic(-4, 4, 4)));
         }},
        {"minu-pdf", [] {
             return minu_suite(pdf_measures<double>(), kPdfVerdicts, " f_PDF", gen_nonempty_finset(gen_bool(), 4), f_pdf,
                               gen_hist_pdf(gen_dyadic(-4, 4, 4), 1, 4));
         }},
        {"minu-id", minu_id_suite},
    };
    return r;
}

}  // namespace

std::string Report::line() const {
    std::ostringstream os;
    os << '[' << suite << "] " << property << ": " << result.summary() << " (expected "
       << (result.expect == Expect::Pass ? "pass" : "falsified") << ", " << (result.met() ? "ok" : "UNEXPECTED") << ')';
    return os.str();
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> ns = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : registry()) out.push_back(name);
        return out;
    }();
    return ns;
}

bool exists(const std::string& suite) {
    return std::find(names().begin(), names().end(), suite) != names().end();
}

std::vector<Property> properties(const std::string& suite) {
    for (const auto& [name, build] : registry())
        if (name == suite) return build();
    throw std::out_of_range("unknown suite: " + suite);
}

std::vector<Report> run(const std::string& suite, std::size_t n, std::uint64_t seed) {
    std::vector<Report> out;
    const std::vector<std::string> selected = suite == "all" ? names() : std::vector<std::string>{suite};
    for (const auto& s : selected)
        for (const auto& p : properties(s)) out.push_back({s, p.name, p.run(n, seed)});
    return out;
}

Report run_one(const std::string& suite, const std::string& property, std::size_t n, std::uint64_t seed) {
    for (const auto& p : properties(suite))
        if (p.name == property) return {suite, p.name, p.run(n, seed)};
    throw std::out_of_range("unknown property: " + suite + "/" + property);
}

bool all_met(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.result.met(); });
}

}  // namespace uopt::suites
