#pragma once

// Strict dominance on fixed-dimension vectors, its lifts to sets, and the
// incremental Pareto-front computation built on `bump`.

#include <algorithm>
#include <array>
#include <cstddef>
#include <future>
#include <ostream>
#include <span>
#include <vector>

#include "uopt/core_orders.hpp"
#include "uopt/errors.hpp"
#include "uopt/finset.hpp"

namespace uopt {

/// A point of exactly N ordered scalars. The dimension is part of the type,
/// so two `Vec`s that can be compared always have equal length.
template <std::size_t N, typename S>
struct Vec {
    static_assert(N >= 1, "Vec needs at least one coordinate");
    using scalar_type = S;
    static constexpr std::size_t dimension = N;

    std::array<S, N> coords{};

    constexpr S& operator[](std::size_t i) { return coords[i]; }
    constexpr const S& operator[](std::size_t i) const { return coords[i]; }
    [[nodiscard]] std::span<const S> span() const noexcept { return coords; }

    friend constexpr bool operator==(const Vec&, const Vec&) = default;
};

template <typename S>
constexpr Vec<1, S> c1(S a) { return Vec<1, S>{{a}}; }
template <typename S>
constexpr Vec<2, S> c2(S a, S b) { return Vec<2, S>{{a, b}}; }
template <typename S>
constexpr Vec<3, S> c3(S a, S b, S c) { return Vec<3, S>{{a, b, c}}; }

template <std::size_t N, typename S>
std::ostream& operator<<(std::ostream& os, const Vec<N, S>& v) {
    os << '(';
    for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

enum class Quantifier { All, Any };

/// Applies `q` to the componentwise results of `op` on equally long
/// sequences. Throws DimensionError on a length mismatch.
template <typename S, typename Op>
bool comps(Quantifier q, Op&& op, std::span<const S> xs, std::span<const S> ys) {
    if (xs.size() != ys.size()) throw DimensionError("comps: dimension mismatch");
    if (q == Quantifier::All) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (!op(xs[i], ys[i])) return false;
        return true;
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (op(xs[i], ys[i])) return true;
    return false;
}

template <std::size_t N, typename S, typename Op>
bool comps(Quantifier q, Op&& op, const Vec<N, S>& xs, const Vec<N, S>& ys) {
    return comps<S>(q, std::forward<Op>(op), xs.span(), ys.span());
}

/// Runtime-dimension dominance, for callers holding plain coordinate spans.
template <typename S>
bool dominates(std::span<const S> x, std::span<const S> y) {
    return comps<S>(Quantifier::All, [](const S& a, const S& b) { return a <= b; }, x, y) &&
           comps<S>(Quantifier::Any, [](const S& a, const S& b) { return a < b; }, x, y);
}

/// `x ≺ y`: componentwise `<=` and strictly `<` somewhere.
template <std::size_t N, typename S>
constexpr bool dominates(const Vec<N, S>& x, const Vec<N, S>& y) {
    bool strict = false;
    for (std::size_t i = 0; i < N; ++i) {
        if (y[i] < x[i]) return false;
        if (x[i] < y[i]) strict = true;
    }
    return strict;
}

struct Dominance {
    template <typename P>
    bool operator()(const P& x, const P& y) const {
        return dominates(x, y);
    }
};

/// `xs ⋅≺ y`: some member of `xs` dominates `y`.
template <typename P>
bool set_dom_elem(const FinSet<P>& xs, const P& y) {
    return exists(xs, [&](const P& x) { return dominates(x, y); });
}

/// `xs ⋅⋅≺ ys`: every member of `ys` is dominated by some member of `xs`.
template <typename P>
bool set_dom_set(const FinSet<P>& xs, const FinSet<P>& ys) {
    return for_all(ys, [&](const P& y) { return set_dom_elem(xs, y); });
}

/// Subset of `xs`, mutually indifferent, and dominating the rest of `xs`.
template <typename P>
bool is_pareto_opt_of(const FinSet<P>& pxs, const FinSet<P>& xs) {
    return is_subset(pxs, xs) && is_indiff(Dominance{}, pxs) && set_dom_set(pxs, set_difference(xs, pxs));
}

/// Inserts `x` into the mutually indifferent front `ps`.
///
/// Scans `ps` in order; at the first member `p`:
///   1. `p == x` or `p ≺ x`: the front is returned unchanged;
///   2. `x ≺ p`: `x` takes `p`'s place and every later member dominated by
///      `x` is dropped;
///   3. otherwise move on. If no member decides, `x` is appended.
template <typename P>
FinSet<P> bump(const P& x, FinSet<P> ps) {
    auto& v = ps.elems();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const P& p = v[i];
        if (p == x || dominates(p, x)) return ps;
        if (dominates(x, p)) {
            v[i] = x;
            auto tail = std::remove_if(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(),
                                       [&](const P& q) { return dominates(x, q); });
            v.erase(tail, v.end());
            return ps;
        }
    }
    v.push_back(x);
    return ps;
}

/// The Pareto front of `xs`, as the right fold of `bump` from `{}`.
template <typename P>
FinSet<P> pareto_opt(const FinSet<P>& xs) {
    FinSet<P> front;
    for (std::size_t i = xs.size(); i-- > 0;) front = bump(xs[i], std::move(front));
    return front;
}

/// Combines two fronts by bumping each member of the smaller one into the
/// larger one. Set-equal to `pareto_opt(a ++ b)`.
template <typename P>
FinSet<P> merge_fronts(const FinSet<P>& a, const FinSet<P>& b) {
    const bool a_small = a.size() <= b.size();
    FinSet<P> acc = a_small ? b : a;
    for (const P& x : (a_small ? a : b)) acc = bump(x, std::move(acc));
    return acc;
}

/// Divide-and-conquer front: `parts` chunks computed concurrently, then
/// merged pairwise. Set-equal to `pareto_opt(xs)`.
template <typename P>
FinSet<P> pareto_opt_parallel(const FinSet<P>& xs, std::size_t parts) {
    parts = std::max<std::size_t>(1, std::min(parts, xs.size()));
    if (parts <= 1) return pareto_opt(xs);
    const std::size_t chunk = (xs.size() + parts - 1) / parts;
    std::vector<std::future<FinSet<P>>> jobs;
    for (std::size_t lo = 0; lo < xs.size(); lo += chunk) {
        const std::size_t hi = std::min(xs.size(), lo + chunk);
        std::vector<P> slice(xs.begin() + static_cast<std::ptrdiff_t>(lo), xs.begin() + static_cast<std::ptrdiff_t>(hi));
        jobs.push_back(std::async(std::launch::async, [s = FinSet<P>(std::move(slice))] { return pareto_opt(s); }));
    }
    std::vector<FinSet<P>> fronts;
    for (auto& j : jobs) fronts.push_back(j.get());
    while (fronts.size() > 1) {
        std::vector<FinSet<P>> next;
        for (std::size_t i = 0; i + 1 < fronts.size(); i += 2) next.push_back(merge_fronts(fronts[i], fronts[i + 1]));
        if (fronts.size() % 2 == 1) next.push_back(std::move(fronts.back()));
        fronts = std::move(next);
    }
    return fronts.front();
}

template <typename A, typename Fs>
auto pareto_min(Fs&& fs, const FinSet<A>& as) {
    return pareto_opt(map_set(fs, as));
}

/// Every input whose image lies on the front, in input order.
template <typename A, typename Fs>
FinSet<A> argpareto_min(Fs&& fs, const FinSet<A>& as) {
    const auto ps = pareto_min(fs, as);
    return filter_set([&](const A& a) { return ps.contains(fs(a)); }, as);
}

// ---------------------------------------------------------------------------
// Properties of bump, paretoOpt and the multi-objective solver.

template <typename P>
bool prop_bump_subset(const FinSet<P>& xs, const P& x) {
    FinSet<P> with_x = xs;
    with_x.push_back(x);
    return is_subset(bump(x, xs), with_x);
}

template <typename P>
bool prop_bump_keeps_indiff(const FinSet<P>& xs, const P& x) {
    return !is_indiff(Dominance{}, xs) || is_indiff(Dominance{}, bump(x, xs));
}

template <typename P>
bool prop_bump_keeps_domination(const FinSet<P>& xs, const P& x, const FinSet<P>& ys) {
    return !set_dom_set(xs, ys) || set_dom_set(bump(x, xs), ys);
}

template <typename P>
bool prop_pareto_opt(const FinSet<P>& xs) {
    return is_pareto_opt_of(pareto_opt(xs), xs);
}

template <typename A, typename Fs>
bool prop_pareto_min(Fs&& fs, const FinSet<A>& as) {
    return is_pareto_opt_of(pareto_min(fs, as), map_set(fs, as));
}

template <typename A, typename Fs>
bool prop_argpareto_sound(Fs&& fs, const FinSet<A>& as) {
    const auto ps = pareto_min(fs, as);
    const auto aps = argpareto_min(fs, as);
    return for_all(as, [&](const A& a) { return !aps.contains(a) || ps.contains(fs(a)); });
}

template <typename A, typename Fs>
bool prop_argpareto_complete(Fs&& fs, const FinSet<A>& as) {
    const auto ps = pareto_min(fs, as);
    const auto aps = argpareto_min(fs, as);
    return for_all(as, [&](const A& a) { return !ps.contains(fs(a)) || aps.contains(a); });
}

/// Single objective lifted to one dimension: `fs = C1 ∘ f`.
template <typename F>
auto lift_c1(F f) {
    return [f](const auto& a) { return c1(f(a)); };
}

/// The i-th objective of `fs` as a scalar function.
template <typename Fs>
auto component(Fs fs, std::size_t i) {
    return [fs, i](const auto& a) { return fs(a)[i]; };
}

template <typename A, typename F>
bool prop_single_front(F&& f, const FinSet<A>& as) {
    if (as.empty()) return true;
    return set_equal(pareto_min(lift_c1(f), as), FinSet{c1(minimum(f, as))});
}

template <typename A, typename F>
bool prop_single_argfront(F&& f, const FinSet<A>& as) {
    if (as.empty()) return true;
    return set_equal(argpareto_min(lift_c1(f), as), argmin(f, as));
}

/// For every objective `f` in `fs`: `min f as ∈ map f (argparetoMin fs as)`.
template <typename A, typename Fs>
bool prop_min_on_front(Fs&& fs, const FinSet<A>& as) {
    if (as.empty()) return true;
    using V = std::decay_t<decltype(fs(as[0]))>;
    const auto aps = argpareto_min(fs, as);
    for (std::size_t i = 0; i < V::dimension; ++i) {
        auto f = component(fs, i);
        if (!map_set(f, aps).contains(minimum(f, as))) return false;
    }
    return true;
}

/// For every objective `f` in `fs`:
/// `argparetoMin (C1 ∘ f) as ⊆ argparetoMin fs as`. Does not hold in general.
template <typename A, typename Fs>
bool prop_argmin_within_front(Fs&& fs, const FinSet<A>& as) {
    using V = std::decay_t<decltype(fs(std::declval<const A&>()))>;
    const auto aps = argpareto_min(fs, as);
    for (std::size_t i = 0; i < V::dimension; ++i) {
        if (!is_subset(argpareto_min(lift_c1(component(fs, i)), as), aps)) return false;
    }
    return true;
}

}  // namespace uopt
