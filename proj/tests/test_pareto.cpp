#include "catch_amalgamated.hpp"

#include <algorithm>
#include <vector>

#include "uopt/figure1.hpp"
#include "uopt/pareto.hpp"
#include "uopt/proptest.hpp"

using namespace uopt;
using figure1::point;
using P = figure1::Point;

namespace {

// Minimal elements by exhaustive pairwise comparison.
template <typename V>
FinSet<V> minimal_elements(const FinSet<V>& xs) {
    std::vector<V> out;
    for (const V& x : xs) {
        bool dominated = false;
        for (const V& y : xs) {
            bool le = true, lt = false;
            for (std::size_t i = 0; i < V::dimension; ++i) {
                if (y[i] > x[i]) le = false;
                if (y[i] < x[i]) lt = true;
            }
            if (le && lt) dominated = true;
        }
        if (!dominated) out.push_back(x);
    }
    return FinSet<V>(std::move(out));
}

FinSet<P> named(std::initializer_list<const char*> names) {
    FinSet<P> s;
    for (const char* n : names) s.push_back(point(n));
    return s;
}

}  // namespace

TEST_CASE("dominance examples") {
    CHECK(dominates(c2(1.0, 0.75), c2(1.0, 1.5)));
    CHECK_FALSE(dominates(c2(1.0, 0.75), c2(1.0, 0.75)));
    CHECK_FALSE(dominates(c2(-1.0, 2.5), c2(1.0, 1.5)));
    CHECK_FALSE(dominates(c2(1.0, 1.5), c2(-1.0, 2.5)));
    CHECK(dominates(c3(0, 0, 0), c3(0, 0, 1)));
}

TEST_CASE("runtime-dimension dominance rejects mismatched lengths") {
    const std::vector<int> a{1, 2}, b{1, 2, 3};
    CHECK_THROWS_AS(dominates<int>(a, b), DimensionError);
    CHECK(dominates<int>(std::vector<int>{1, 2}, std::vector<int>{1, 3}));
}

TEST_CASE("comps") {
    const auto le = [](int a, int b) { return a <= b; };
    const auto lt = [](int a, int b) { return a < b; };
    CHECK(comps(Quantifier::All, le, c2(1, 2), c2(1, 3)));
    CHECK_FALSE(comps(Quantifier::Any, lt, c2(1, 2), c2(1, 2)));
    CHECK(comps(Quantifier::Any, lt, c2(1, 2), c2(1, 3)));
}

TEST_CASE("set dominance lifts") {
    CHECK(set_dom_elem(FinSet<P>{c2(1.0, 0.75)}, c2(2.5, 2.0)));
    CHECK_FALSE(set_dom_elem(FinSet<P>{}, c2(0.0, 0.0)));
    CHECK_FALSE(set_dom_elem(FinSet<P>{c2(0.0, 1.0), c2(1.0, 0.0)}, c2(0.0, 1.0)));
    CHECK(set_dom_set(figure1::expected_front(), named({"q1", "q2", "q3"})));
    CHECK(set_dom_set(FinSet<P>{c2(5.0, 5.0)}, FinSet<P>{}));
    CHECK_FALSE(set_dom_set(FinSet<P>{}, FinSet<P>{c2(0.0, 0.0)}));
}

TEST_CASE("is_pareto_opt_of") {
    CHECK(is_pareto_opt_of(figure1::expected_front(), figure1::all_points()));
    CHECK(is_pareto_opt_of(FinSet<P>{}, FinSet<P>{}));
    CHECK_FALSE(is_pareto_opt_of(named({"q3"}), figure1::all_points()));
}

TEST_CASE("bump cases") {
    CHECK(bump(c2(1.0, 2.0), FinSet<P>{}) == FinSet<P>{c2(1.0, 2.0)});
    const FinSet<P> ps{c2(1.0, 0.75), c2(1.5, -0.5)};
    CHECK(bump(c2(2.0, 0.5), ps) == ps);
    CHECK(bump(c2(1.0, 0.75), FinSet<P>{c2(1.0, 1.5), c2(2.5, 2.0)}) == FinSet<P>{c2(1.0, 0.75)});
    // Equal member: unchanged.
    CHECK(bump(c2(1.5, -0.5), ps) == ps);
    // Incomparable with everyone: appended.
    CHECK(bump(c2(-1.0, 2.5), ps) == FinSet<P>{c2(1.0, 0.75), c2(1.5, -0.5), c2(-1.0, 2.5)});
}

TEST_CASE("pareto_opt examples") {
    CHECK(pareto_opt(FinSet<P>{}).empty());
    CHECK(pareto_opt(FinSet<P>{c2(3.0, 4.0)}) == FinSet<P>{c2(3.0, 4.0)});
    CHECK(set_equal(pareto_opt(figure1::all_points()), figure1::expected_front()));
    CHECK(pareto_opt(figure1::all_points()).size() == 4);
}

TEST_CASE("seven-point statements") {
    for (const auto& s : figure1::kStatements) {
        INFO(s.lhs << " vs " << s.rhs);
        CHECK(figure1::holds(s));
    }
}

TEST_CASE("merge_fronts examples") {
    const auto front = pareto_opt(figure1::all_points());
    CHECK(merge_fronts(FinSet<P>{}, front) == front);
    CHECK(set_equal(merge_fronts(front, front), front));
    const auto a = pareto_opt(named({"p1", "p2"}));
    const auto b = pareto_opt(named({"q1", "q2", "q3", "p3", "p4"}));
    CHECK(set_equal(merge_fronts(a, b), figure1::expected_front()));
}

TEST_CASE("pareto_opt matches the minimal-elements oracle") {
    Rng rng(2024);
    const auto gen2 = gen_finset(gen_vec<2>(gen_int(-3, 3)), 0, 12);
    const auto gen3 = gen_finset(gen_vec<3>(gen_int(-3, 3)), 0, 12);
    for (int t = 0; t < 1000; ++t) {
        const auto xs = gen2(rng);
        const auto ys = gen2(rng);
        const auto front = pareto_opt(xs);
        REQUIRE(set_equal(front, minimal_elements(xs)));
        REQUIRE(is_pareto_opt_of(front, xs));
        REQUIRE(set_equal(merge_fronts(front, pareto_opt(ys)), pareto_opt(set_concat(xs, ys))));
        const auto zs = gen3(rng);
        REQUIRE(set_equal(pareto_opt(zs), minimal_elements(zs)));
    }
}

TEST_CASE("pareto_opt is permutation invariant") {
    Rng rng(5);
    const auto gen = gen_finset(gen_vec<2>(gen_int(-4, 4)), 0, 10);
    for (int t = 0; t < 500; ++t) {
        const auto xs = gen(rng);
        auto ys = xs.elems();
        std::shuffle(ys.begin(), ys.end(), rng);
        REQUIRE(set_equal(pareto_opt(xs), pareto_opt(FinSet<Vec<2, int>>(ys))));
    }
}

TEST_CASE("parallel front equals the sequential one") {
    Rng rng(9);
    const auto gen = gen_finset(gen_vec<2>(gen_int(-50, 50)), 0, 400);
    for (int t = 0; t < 20; ++t) {
        const auto xs = gen(rng);
        for (std::size_t parts : {1u, 2u, 3u, 7u}) REQUIRE(set_equal(pareto_opt_parallel(xs, parts), pareto_opt(xs)));
    }
}

TEST_CASE("argpareto_min on the seven-point example") {
    const auto id = [](const P& p) { return p; };
    const auto all = figure1::all_points();
    CHECK(set_equal(pareto_min(id, all), figure1::expected_front()));
    CHECK(argpareto_min(id, all) == figure1::expected_front());
}

TEST_CASE("single objective fronts") {
    const auto as = FinSet<int>{4, -1, 3, -1, 9};
    const auto f = [](int x) { return x * x - x; };
    CHECK(set_equal(pareto_min(lift_c1(f), as), FinSet{c1(minimum(f, as))}));
    CHECK(set_equal(argpareto_min(lift_c1(f), as), argmin(f, as)));
    const auto g = [](int x) { return c2(0, x); };
    CHECK(is_singleton_set(argpareto_min(g, as)));
}

TEST_CASE("solver properties on pairs") {
    using IP = std::pair<int, int>;
    const auto testfun3 = [](const IP& a) { return c3(0, a.first, a.second); };
    const auto testfun = [](const IP& a) { return a.first + a.second * a.first; };
    const auto gen = gen_finset(gen_pair(gen_int(-5, 5), gen_int(-5, 5)), 0, 8);
    Rng rng(77);
    bool falsified = false;
    for (int t = 0; t < 2000; ++t) {
        const auto as = gen(rng);
        REQUIRE(prop_pareto_min(testfun3, as));
        REQUIRE(prop_argpareto_sound(testfun3, as));
        REQUIRE(prop_argpareto_complete(testfun3, as));
        REQUIRE(prop_min_on_front(testfun3, as));
        REQUIRE(prop_single_front(testfun, as));
        REQUIRE(prop_single_argfront(testfun, as));
        if (!prop_argmin_within_front(testfun3, as)) falsified = true;
    }
    CHECK(falsified);
}

TEST_CASE("per-objective argmin need not lie on the front") {
    using IP = std::pair<int, int>;
    const auto testfun3 = [](const IP& a) { return c3(0, a.first, a.second); };
    // Every input minimizes the constant objective, but (1,1) is dominated by (0,0).
    const FinSet<IP> as{{0, 0}, {1, 1}};
    CHECK_FALSE(prop_argmin_within_front(testfun3, as));
}
