#pragma once

// Measure functions per uncertainty functor and the monotonicity checks
// M1 (pointwise) and M2 (under universal strict dominance).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uopt/errors.hpp"
#include "uopt/proptest.hpp"
#include "uopt/uncertainty.hpp"

namespace uopt {

/// A named map from uncertain values to the reals.
template <typename U>
struct Measure {
    std::string name;
    std::function<double(const U&)> apply;

    double operator()(const U& u) const { return apply(u); }
};

// --- sequences --------------------------------------------------------------

namespace detail {
template <typename B>
const std::vector<B>& nonempty(const SeqU<B>& u, const char* who) {
    if (u.elems.empty()) throw EmptySetError(std::string(who) + ": empty sequence");
    return u.elems;
}
}  // namespace detail

template <typename B>
double sum_seq(const SeqU<B>& u) {
    const auto& xs = detail::nonempty(u, "sumSeq");
    double s = 0.0;
    for (const B& x : xs) s += static_cast<double>(x);
    return s;
}

template <typename B>
double average_seq(const SeqU<B>& u) {
    return sum_seq(u) / static_cast<double>(detail::nonempty(u, "averageSeq").size());
}

template <typename B>
double head_seq(const SeqU<B>& u) { return static_cast<double>(detail::nonempty(u, "headSeq").front()); }

template <typename B>
double best_seq(const SeqU<B>& u) {
    const auto& xs = detail::nonempty(u, "bestSeq");
    return static_cast<double>(*std::min_element(xs.begin(), xs.end()));
}

template <typename B>
double worst_seq(const SeqU<B>& u) {
    const auto& xs = detail::nonempty(u, "worstSeq");
    return static_cast<double>(*std::max_element(xs.begin(), xs.end()));
}

template <typename B>
double length_seq(const SeqU<B>& u) { return static_cast<double>(u.elems.size()); }

template <typename U>
Measure<U> const_measure(double c) {
    std::ostringstream os;
    os << "const " << c;
    return {os.str(), [c](const U&) { return c; }};
}

template <typename B>
std::vector<Measure<SeqU<B>>> seq_measures() {
    return {
        {"sum", sum_seq<B>},   {"average", average_seq<B>}, {"head", head_seq<B>},
        {"best", best_seq<B>}, {"worst", worst_seq<B>},     {"length", length_seq<B>},
        const_measure<SeqU<B>>(3),
    };
}

// --- simple probability -----------------------------------------------------

template <typename B>
double exp_val_sp(const SimpleProb<B>& u) {
    require_valid(u, "expValSP");
    double s = 0.0;
    for (const auto& w : u.pairs) s += static_cast<double>(w.value) * w.prob;
    return s;
}

template <typename B>
double best_sp(const SimpleProb<B>& u) {
    require_valid(u, "bestSP");
    const auto vs = outcomes(u);
    return static_cast<double>(*std::min_element(vs.begin(), vs.end()));
}

template <typename B>
double worst_sp(const SimpleProb<B>& u) {
    require_valid(u, "worstSP");
    const auto vs = outcomes(u);
    return static_cast<double>(*std::max_element(vs.begin(), vs.end()));
}

/// The value carrying the most probability mass. Mass of repeated values is
/// added up first; among equally likely values the first listed wins.
template <typename B>
double most_likely_sp(const SimpleProb<B>& u) {
    require_valid(u, "mostLikelySP");
    std::vector<std::pair<B, double>> mass;
    for (const auto& w : u.pairs) {
        auto it = std::find_if(mass.begin(), mass.end(), [&](const auto& m) { return m.first == w.value; });
        if (it == mass.end()) mass.emplace_back(w.value, w.prob);
        else it->second += w.prob;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < mass.size(); ++i)
        if (mass[i].second > mass[best].second) best = i;
    return static_cast<double>(mass[best].first);
}

template <typename B>
std::vector<Measure<SimpleProb<B>>> sp_measures() {
    return {
        {"expVal", exp_val_sp<B>},
        {"best", best_sp<B>},
        {"worst", worst_sp<B>},
        {"mostLikely", most_likely_sp<B>},
        const_measure<SimpleProb<B>>(3),
    };
}

// --- intervals --------------------------------------------------------------

template <typename S>
double sum_i(const Interval<S>& u) {
    require_valid(u, "sumI");
    return static_cast<double>(u.start) + static_cast<double>(u.end);
}

template <typename S>
double average_i(const Interval<S>& u) {
    require_valid(u, "averageI");
    return (static_cast<double>(u.start) + static_cast<double>(u.end)) / 2.0;
}

template <typename S>
double best_i(const Interval<S>& u) {
    require_valid(u, "bestI");
    return static_cast<double>(u.start);
}

template <typename S>
double worst_i(const Interval<S>& u) {
    require_valid(u, "worstI");
    return static_cast<double>(u.end);
}

template <typename S>
double width_i(const Interval<S>& u) {
    require_valid(u, "widthI");
    return static_cast<double>(width(u));
}

template <typename S>
std::vector<Measure<Interval<S>>> interval_measures() {
    return {
        {"sum", sum_i<S>},     {"average", average_i<S>}, {"best", best_i<S>},
        {"worst", worst_i<S>}, {"width", width_i<S>},     const_measure<Interval<S>>(3),
    };
}

// --- histograms -------------------------------------------------------------

template <typename S>
double exp_val_pdf(const HistPDF<S>& u) {
    require_valid(u, "expValPDF");
    double s = 0.0;
    for (std::size_t i = 0; i < u.weights.size(); ++i) s += bin_midpoint(u, i) * u.weights[i];
    return s;
}

/// Midpoint of the heaviest bin; the lowest index wins ties.
template <typename S>
double most_likely_pdf(const HistPDF<S>& u) {
    require_valid(u, "mostLikelyPDF");
    const auto it = std::max_element(u.weights.begin(), u.weights.end());
    return bin_midpoint(u, static_cast<std::size_t>(it - u.weights.begin()));
}

template <typename S>
std::vector<Measure<HistPDF<S>>> pdf_measures() {
    return {
        {"expVal", exp_val_pdf<S>},
        {"mostLikely", most_likely_pdf<S>},
        const_measure<HistPDF<S>>(3),
    };
}

// --- identity ---------------------------------------------------------------

template <typename B>
double unwrap(const IdU<B>& u) { return static_cast<double>(u.value); }

template <typename B>
std::vector<Measure<IdU<B>>> id_measures() {
    return {{"unwrap", unwrap<B>}, const_measure<IdU<B>>(7)};
}

// ---------------------------------------------------------------------------
// Pair constructions for M1 and M2.
//
// M1 pairs raise every value by its own non-negative amount. A uniform raise
// commutes with every measure in the catalog and so could never expose an
// M1 failure. M2 pairs shift every value by one more than the spread, which
// makes the first structure universally strictly better.

template <typename B>
IdU<B> raise_pointwise(const IdU<B>& u, Rng& r) {
    return {u.value + static_cast<B>(r.uniform_int(0, 2))};
}

template <typename B>
SeqU<B> raise_pointwise(const SeqU<B>& u, Rng& r) {
    return fmap(u, [&](const B& x) { return x + static_cast<B>(r.uniform_int(0, 2)); });
}

/// Values only; probabilities are part of the shape.
template <typename B>
SimpleProb<B> raise_pointwise(const SimpleProb<B>& u, Rng& r) {
    return fmap(u, [&](const B& x) { return x + static_cast<B>(r.uniform_int(0, 2)); });
}

/// Raises the end by a quarter-step amount in [0, 2] and the start by a
/// quarter-step amount that keeps the interval ordered.
inline Interval<double> raise_pointwise(const Interval<double>& u, Rng& r) {
    const double d_end = static_cast<double>(r.uniform_int(0, 8)) / 4.0;
    const auto room = static_cast<std::int64_t>((width(u) + d_end) * 4.0);
    const double d_start = static_cast<double>(r.uniform_int(0, room)) / 4.0;
    return {u.start + d_start, u.end + d_end};
}

inline HistPDF<double> raise_pointwise(const HistPDF<double>& u, Rng& r) {
    return {raise_pointwise(u.support, r), u.weights};
}

template <typename B>
B m2_shift(const IdU<B>&) { return B{1}; }

template <typename B>
B m2_shift(const SeqU<B>& u) {
    if (u.elems.empty()) return B{1};
    const auto [lo, hi] = std::minmax_element(u.elems.begin(), u.elems.end());
    return B{1} + (*hi - *lo);
}

template <typename B>
B m2_shift(const SimpleProb<B>& u) {
    const auto vs = outcomes(u);
    const auto [lo, hi] = std::minmax_element(vs.begin(), vs.end());
    return B{1} + (*hi - *lo);
}

template <typename S>
S m2_shift(const Interval<S>& u) { return S{1} + width(u); }

template <typename S>
S m2_shift(const HistPDF<S>& u) { return S{1} + width(interval_of(u)); }

template <typename U>
U shift_up(const U& u) {
    const auto s = m2_shift(u);
    return fmap(u, [s](const auto& x) { return x + s; });
}

template <typename U>
Gen<std::pair<U, U>> gen_m1_pair(Gen<U> g) {
    return [g](Rng& r) {
        U ub1 = g(r);
        U ub2 = raise_pointwise(ub1, r);
        return std::pair<U, U>{std::move(ub1), std::move(ub2)};
    };
}

template <typename U>
Gen<std::pair<U, U>> gen_m2_pair(Gen<U> g) {
    return [g](Rng& r) {
        U ub1 = g(r);
        U ub2 = shift_up(ub1);
        return std::pair<U, U>{std::move(ub1), std::move(ub2)};
    };
}

/// `ub1 ≤· ub2 ⇒ μ ub1 ≤ μ ub2`
template <typename U>
Verdict m1_holds(const Measure<U>& mu, const U& ub1, const U& ub2) {
    return implies(pointwise_le(ub1, ub2), mu(ub1) <= mu(ub2));
}

/// `ub1 ≺u ub2 ⇒ μ ub1 < μ ub2`
template <typename U>
Verdict m2_holds(const Measure<U>& mu, const U& ub1, const U& ub2) {
    return implies(strict_dom_u(ub1, ub2), mu(ub1) < mu(ub2));
}

template <typename U>
CheckResult check_m1(const Gen<U>& g, const Measure<U>& mu, std::size_t n, std::uint64_t seed,
                     Expect expect = Expect::Pass) {
    return run_cases(n, gen_m1_pair(g), [&](const std::pair<U, U>& p) { return m1_holds(mu, p.first, p.second); },
                     seed, expect);
}

template <typename U>
CheckResult check_m2(const Gen<U>& g, const Measure<U>& mu, std::size_t n, std::uint64_t seed,
                     Expect expect = Expect::Pass) {
    return run_cases(n, gen_m2_pair(g), [&](const std::pair<U, U>& p) { return m2_holds(mu, p.first, p.second); },
                     seed, expect);
}

}  // namespace uopt
