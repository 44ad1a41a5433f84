#pragma once

// Uncertainty functors: containers of possible outcomes that support shape
// equality (≈), pointwise order (≤·) and universal strict dominance (≺u).
//
// Each instance provides three primitives as free functions:
//   fmap(u, f)      apply f to every value, keeping the structure
//   outcomes(u)     the possible outcomes, as a sequence
//   zip_u(u1, u2)   pair up values of two same-shaped structures
// plus a validity predicate `is_valid`. Shape, membership, quantifiers and
// the orders are derived from these generically.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "uopt/errors.hpp"

namespace uopt {

struct Unit {
    friend constexpr bool operator==(Unit, Unit) = default;
};

inline constexpr double kProbabilityTolerance = 1e-9;

/// Exactly one outcome.
template <typename B>
struct IdU {
    B value{};
    friend bool operator==(const IdU&, const IdU&) = default;
};

/// A sequence of possible outcomes (List as an uncertainty functor).
template <typename B>
struct SeqU {
    std::vector<B> elems;
    friend bool operator==(const SeqU&, const SeqU&) = default;
};

template <typename B>
struct Weighted {
    B value{};
    double prob = 0.0;
    friend bool operator==(const Weighted&, const Weighted&) = default;
};

/// Finite probability distribution as value-probability pairs. Values may
/// repeat; their probabilities then add up.
template <typename B>
struct SimpleProb {
    std::vector<Weighted<B>> pairs;
    friend bool operator==(const SimpleProb&, const SimpleProb&) = default;
};

/// Every value between `start` and `end` is possible.
template <typename S>
struct Interval {
    S start{};
    S end{};
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Histogram density: `weights.size()` equally wide bins over `support`.
template <typename S>
struct HistPDF {
    Interval<S> support;
    std::vector<double> weights;
    friend bool operator==(const HistPDF&, const HistPDF&) = default;
};

// --- fmap -------------------------------------------------------------------

template <typename B, typename F>
auto fmap(const IdU<B>& u, F&& f) {
    using R = std::decay_t<decltype(f(u.value))>;
    return IdU<R>{f(u.value)};
}

template <typename B, typename F>
auto fmap(const SeqU<B>& u, F&& f) {
    using R = std::decay_t<decltype(f(std::declval<const B&>()))>;
    SeqU<R> out;
    out.elems.reserve(u.elems.size());
    for (const B& b : u.elems) out.elems.push_back(f(b));
    return out;
}

template <typename B, typename F>
auto fmap(const SimpleProb<B>& u, F&& f) {
    using R = std::decay_t<decltype(f(std::declval<const B&>()))>;
    SimpleProb<R> out;
    out.pairs.reserve(u.pairs.size());
    for (const auto& [v, p] : u.pairs) out.pairs.push_back({f(v), p});
    return out;
}

template <typename S, typename F>
auto fmap(const Interval<S>& u, F&& f) {
    using R = std::decay_t<decltype(f(u.start))>;
    return Interval<R>{f(u.start), f(u.end)};
}

template <typename S, typename F>
auto fmap(const HistPDF<S>& u, F&& f) {
    using R = std::decay_t<decltype(f(u.support.start))>;
    return HistPDF<R>{fmap(u.support, f), u.weights};
}

// --- outcomes ---------------------------------------------------------------

template <typename B>
std::vector<B> outcomes(const IdU<B>& u) { return {u.value}; }

template <typename B>
std::vector<B> outcomes(const SeqU<B>& u) { return u.elems; }

/// All listed values, including zero-probability ones.
template <typename B>
std::vector<B> outcomes(const SimpleProb<B>& u) {
    std::vector<B> out;
    out.reserve(u.pairs.size());
    for (const auto& w : u.pairs) out.push_back(w.value);
    return out;
}

template <typename S>
std::vector<S> outcomes(const Interval<S>& u) { return {u.start, u.end}; }

/// Only the support endpoints: bin weights never take part in dominance.
template <typename S>
std::vector<S> outcomes(const HistPDF<S>& u) { return outcomes(u.support); }

// --- zip --------------------------------------------------------------------

template <typename U>
bool same_shape(const U& u1, const U& u2);

template <typename A, typename B>
IdU<std::pair<A, B>> zip_u(const IdU<A>& u1, const IdU<B>& u2) {
    return {{u1.value, u2.value}};
}

template <typename A, typename B>
SeqU<std::pair<A, B>> zip_u(const SeqU<A>& u1, const SeqU<B>& u2) {
    if (u1.elems.size() != u2.elems.size()) throw ShapeError("zip: sequences differ in length");
    SeqU<std::pair<A, B>> out;
    for (std::size_t i = 0; i < u1.elems.size(); ++i) out.elems.emplace_back(u1.elems[i], u2.elems[i]);
    return out;
}

template <typename A, typename B>
SimpleProb<std::pair<A, B>> zip_u(const SimpleProb<A>& u1, const SimpleProb<B>& u2) {
    if (u1.pairs.size() != u2.pairs.size()) throw ShapeError("zip: distributions differ in length");
    SimpleProb<std::pair<A, B>> out;
    for (std::size_t i = 0; i < u1.pairs.size(); ++i) {
        if (u1.pairs[i].prob != u2.pairs[i].prob) throw ShapeError("zip: distributions differ in weights");
        out.pairs.push_back({{u1.pairs[i].value, u2.pairs[i].value}, u1.pairs[i].prob});
    }
    return out;
}

template <typename A, typename B>
Interval<std::pair<A, B>> zip_u(const Interval<A>& u1, const Interval<B>& u2) {
    return {{u1.start, u2.start}, {u1.end, u2.end}};
}

template <typename A, typename B>
HistPDF<std::pair<A, B>> zip_u(const HistPDF<A>& u1, const HistPDF<B>& u2) {
    if (u1.weights != u2.weights) throw ShapeError("zip: histograms differ in bins");
    return {zip_u(u1.support, u2.support), u1.weights};
}

// --- validity ---------------------------------------------------------------

namespace detail {
inline bool is_distribution(const std::vector<double>& ps) {
    if (ps.empty()) return false;
    double sum = 0.0;
    for (double p : ps) {
        if (!(p >= 0.0)) return false;
        sum += p;
    }
    return std::abs(sum - 1.0) <= kProbabilityTolerance;
}
}  // namespace detail

template <typename B>
bool is_valid(const IdU<B>&) { return true; }

/// Sequences are valid even when empty; emptiness is a concern of the
/// callers that need outcomes.
template <typename B>
bool is_valid(const SeqU<B>&) { return true; }

template <typename B>
bool is_valid(const SimpleProb<B>& u) {
    std::vector<double> ps;
    for (const auto& w : u.pairs) ps.push_back(w.prob);
    return detail::is_distribution(ps);
}

template <typename S>
bool is_valid(const Interval<S>& u) { return u.start <= u.end; }

template <typename S>
bool is_valid(const HistPDF<S>& u) {
    return is_valid(u.support) && detail::is_distribution(u.weights);
}

template <typename U>
void require_valid(const U& u, const char* where) {
    if (!is_valid(u)) throw ValidityError(std::string(where) + ": invalid uncertain value");
}

template <typename U>
concept UncertainValue = requires(const U& u) {
    { outcomes(u) };
    { is_valid(u) } -> std::convertible_to<bool>;
    { fmap(u, [](const auto&) { return Unit{}; }) };
};

// --- generic derivations ----------------------------------------------------

/// `fmap (const ())`: the structure with all values erased.
template <typename U>
auto generic_shape(const U& u) {
    return fmap(u, [](const auto&) { return Unit{}; });
}

/// `≈`
template <typename U>
bool same_shape(const U& u1, const U& u2) {
    return generic_shape(u1) == generic_shape(u2);
}

/// Membership via `¬ (fmap (a ==) u == fmap (const False) u)`.
template <typename A, typename U>
bool generic_elem(const A& a, const U& u) {
    return !(fmap(u, [&](const auto& x) { return static_cast<bool>(a == x); }) ==
             fmap(u, [](const auto&) { return false; }));
}

/// `u == fmap (const True) u`
template <typename U>
bool generic_all(const U& u) {
    return u == fmap(u, [](const auto&) { return true; });
}

/// `u /= fmap (const False) u`
template <typename U>
bool generic_any(const U& u) {
    return !(u == fmap(u, [](const auto&) { return false; }));
}

/// `≺u`: every outcome of `u1` is strictly below every outcome of `u2`.
/// Throws ValidityError on invalid structures.
template <typename U>
bool strict_dom_u(const U& u1, const U& u2) {
    require_valid(u1, "strict_dom_u");
    require_valid(u2, "strict_dom_u");
    const auto xs = outcomes(u1);
    const auto ys = outcomes(u2);
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (!(x < y)) return false;
    return true;
}

/// `≤·`: same shape and componentwise `<=`. False on a shape mismatch.
template <typename U>
bool pointwise_le(const U& u1, const U& u2) {
    if (!same_shape(u1, u2)) return false;
    return generic_all(fmap(zip_u(u1, u2), [](const auto& pr) { return pr.first <= pr.second; }));
}

/// `≾u`: `u1` is not strictly dominated by `u2`.
template <typename U>
bool not_strictly_dominated(const U& u1, const U& u2) {
    return !strict_dom_u(u2, u1);
}

// --- instance-specific helpers ---------------------------------------------

template <typename S>
S width(const Interval<S>& i) { return i.end - i.start; }

template <typename S>
const Interval<S>& interval_of(const HistPDF<S>& pdf) { return pdf.support; }

/// Midpoint of bin `i` of a histogram, as a convex combination of the
/// support endpoints so it is monotone in both under rounding.
template <typename S>
double bin_midpoint(const HistPDF<S>& pdf, std::size_t i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(pdf.weights.size());
    return static_cast<double>(pdf.support.start) * (1.0 - t) + static_cast<double>(pdf.support.end) * t;
}

// --- printing ---------------------------------------------------------------

template <typename B>
std::ostream& operator<<(std::ostream& os, const IdU<B>& u) { return os << "Id " << u.value; }

template <typename B>
std::ostream& operator<<(std::ostream& os, const SeqU<B>& u) {
    os << '[';
    for (std::size_t i = 0; i < u.elems.size(); ++i) os << (i ? "," : "") << u.elems[i];
    return os << ']';
}

template <typename B>
std::ostream& operator<<(std::ostream& os, const SimpleProb<B>& u) {
    os << "SP [";
    for (std::size_t i = 0; i < u.pairs.size(); ++i)
        os << (i ? "," : "") << '(' << u.pairs[i].value << ',' << u.pairs[i].prob << ')';
    return os << ']';
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Interval<S>& u) {
    return os << "I (" << u.start << ',' << u.end << ')';
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const HistPDF<S>& u) {
    os << "PDF (" << u.support << ", [";
    for (std::size_t i = 0; i < u.weights.size(); ++i) os << (i ? "," : "") << u.weights[i];
    return os << "])";
}

}  // namespace uopt
