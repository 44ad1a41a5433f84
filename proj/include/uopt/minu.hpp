#pragma once

// Minimization under functorial uncertainty: `min_u` ranks uncertain images
// by a measure, `argmin_u` recovers their preimages.

#include "uopt/core_orders.hpp"
#include "uopt/errors.hpp"
#include "uopt/finset.hpp"
#include "uopt/measures.hpp"
#include "uopt/uncertainty.hpp"

namespace uopt {

/// `argmin μ (map f as)`: the images of minimal measure. Throws
/// EmptySetError on `{}`.
template <typename A, typename U, typename F>
FinSet<U> min_u(const Measure<U>& mu, F&& f, const FinSet<A>& as) {
    if (as.empty()) throw EmptySetError("min_u: empty set");
    return argmin(mu, map_set(f, as));
}

/// The inputs whose image lies in `min_u μ f as`, in input order.
template <typename A, typename U, typename F>
FinSet<A> argmin_u(const Measure<U>& mu, F&& f, const FinSet<A>& as) {
    const auto ms = min_u(mu, f, as);
    return filter_set([&](const A& a) { return ms.contains(f(a)); }, as);
}

/// `as ≠ {} ⇒ {} ≠ min_u μ f as ⊆ map f as`
template <typename A, typename U, typename F>
bool min_u_nonempty_subset(const Measure<U>& mu, F&& f, const FinSet<A>& as) {
    if (as.empty()) return true;
    const auto ms = min_u(mu, f, as);
    return !ms.empty() && is_subset(ms, map_set(f, as));
}

/// Nothing returned is strictly dominated by any image:
/// `∀ a ∈ as. ∀ ub ∈ min_u μ f as. ub ≾u f a`.
template <typename A, typename U, typename F>
bool min_u_sound(const Measure<U>& mu, F&& f, const FinSet<A>& as) {
    if (as.empty()) return true;
    const auto ms = min_u(mu, f, as);
    return for_all(as, [&](const A& a) {
        const U fa = f(a);
        return for_all(ms, [&](const U& ub) { return not_strictly_dominated(ub, fa); });
    });
}

template <typename A, typename U, typename F>
bool argmin_u_maps_into_min_u(const Measure<U>& mu, F&& f, const FinSet<A>& as) {
    if (as.empty()) return true;
    const auto ms = min_u(mu, f, as);
    const auto am = argmin_u(mu, f, as);
    return for_all(as, [&](const A& a) { return !am.contains(a) || ms.contains(f(a)); });
}

template <typename A, typename U, typename F>
bool argmin_u_complete(const Measure<U>& mu, F&& f, const FinSet<A>& as) {
    if (as.empty()) return true;
    const auto ms = min_u(mu, f, as);
    const auto am = argmin_u(mu, f, as);
    return for_all(as, [&](const A& a) { return !ms.contains(f(a)) || am.contains(a); });
}

// Identity reduction: with U = Id, min_u and argmin_u collapse to the plain
// single-objective versions. `g` is the unwrapped objective.

template <typename A, typename B, typename G>
bool id_min_u_singleton(const Measure<IdU<B>>& mu, G&& g, const FinSet<A>& as) {
    if (as.empty()) return true;
    return is_singleton_set(min_u(mu, [&](const A& a) { return IdU<B>{g(a)}; }, as));
}

template <typename A, typename B, typename G>
bool id_min_u_is_min(const Measure<IdU<B>>& mu, G&& g, const FinSet<A>& as) {
    if (as.empty()) return true;
    return set_equal(min_u(mu, [&](const A& a) { return IdU<B>{g(a)}; }, as), FinSet<IdU<B>>{IdU<B>{minimum(g, as)}});
}

template <typename A, typename B, typename G>
bool id_argmin_u_is_argmin(const Measure<IdU<B>>& mu, G&& g, const FinSet<A>& as) {
    if (as.empty()) return true;
    return set_equal(argmin_u(mu, [&](const A& a) { return IdU<B>{g(a)}; }, as), argmin(g, as));
}

// ---------------------------------------------------------------------------
// Fixed objectives on which weak measures go wrong.

inline SeqU<int> f_seq(int n) {
    if (n == 0) return {{3, 2, 2}};
    if (n == 1) return {{1, 1, 0}};
    return {{3, 1, 0}};
}

inline SimpleProb<int> f_sp(bool b) {
    if (!b) return {{{2, 0.4}, {0, 0.3}, {1, 0.3}}};
    return {{{3, 0.4}, {4, 0.3}, {4, 0.3}}};
}

inline Interval<double> f_interval(bool b) {
    return b ? Interval<double>{0.0, 1.0} : Interval<double>{1.1, 1.2};
}

inline HistPDF<double> f_pdf(bool b) {
    return b ? HistPDF<double>{{0.0, 0.1}, {0.6, 0.4}} : HistPDF<double>{{1.0, 2.0}, {0.6, 0.4}};
}

}  // namespace uopt
