#pragma once

// Single-objective minimum/argmin over finite sets, the three properties that
// characterize them, and generic relation-property checks.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uopt/errors.hpp"
#include "uopt/finset.hpp"

namespace uopt {

/// `forAll as p`: true iff `p` holds for every element (vacuously on `{}`).
template <typename T, typename P>
bool for_all(const FinSet<T>& as, P&& p) {
    return std::all_of(as.begin(), as.end(), std::forward<P>(p));
}

template <typename T, typename P>
bool exists(const FinSet<T>& as, P&& p) {
    return std::any_of(as.begin(), as.end(), std::forward<P>(p));
}

/// Minimal objective value of `f` on `as`. Throws EmptySetError on `{}`.
template <typename T, typename F>
auto minimum(F&& f, const FinSet<T>& as) {
    if (as.empty()) throw EmptySetError("minimum: empty set");
    auto best = f(as[0]);
    for (std::size_t i = 1; i < as.size(); ++i) {
        auto v = f(as[i]);
        if (v < best) best = v;
    }
    return best;
}

/// Every element of `as` at which `f` attains `minimum(f, as)`, in input order.
template <typename T, typename F>
FinSet<T> argmin(F&& f, const FinSet<T>& as) {
    const auto m = minimum(f, as);
    return filter_set([&](const T& a) { return f(a) == m; }, as);
}

// The three clauses are kept separate (rather than fused into one
// biconditional) so each can be checked and reported on its own.
// All return true on the empty set.

template <typename T, typename F>
bool min_is_lower_bound(F&& f, const FinSet<T>& as) {
    if (as.empty()) return true;
    const auto m = minimum(f, as);
    return for_all(as, [&](const T& a) { return m <= f(a); });
}

template <typename T, typename F>
bool argmin_is_sound(F&& f, const FinSet<T>& as) {
    if (as.empty()) return true;
    const auto m = minimum(f, as);
    const auto am = argmin(f, as);
    return for_all(as, [&](const T& a) { return !am.contains(a) || f(a) == m; });
}

template <typename T, typename F>
bool argmin_is_complete(F&& f, const FinSet<T>& as) {
    if (as.empty()) return true;
    const auto m = minimum(f, as);
    const auto am = argmin(f, as);
    return for_all(as, [&](const T& a) { return !(f(a) == m) || am.contains(a); });
}

// ---------------------------------------------------------------------------
// Relation properties, evaluated pointwise on supplied arguments.

template <typename R, typename T>
bool is_anti_reflexive(R&& rel, const T& x) {
    return !rel(x, x);
}

template <typename R, typename T>
bool is_transitive(R&& rel, const T& x, const T& y, const T& z) {
    return !(rel(x, y) && rel(y, z)) || rel(x, z);
}

/// Connectedness for strict relations: equal elements are not required to
/// be related.
template <typename R, typename T>
bool is_total(R&& rel, const T& x, const T& y) {
    return x == y || rel(x, y) || rel(y, x);
}

/// Neither argument is related to the other.
template <typename R, typename T>
bool indifferent(R&& rel, const T& x, const T& y) {
    return !rel(x, y) && !rel(y, x);
}

/// The relation `indiff rel` as a callable.
template <typename R>
auto indifference_of(R rel) {
    return [rel](const auto& x, const auto& y) { return indifferent(rel, x, y); };
}

/// No two distinct elements of `xs` are related either way (an antichain).
template <typename R, typename T>
bool is_indiff(R&& rel, const FinSet<T>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j]) continue;
            if (rel(xs[i], xs[j]) || rel(xs[j], xs[i])) return false;
        }
    }
    return true;
}

enum class RelationProperty { AntiReflexive, Transitive, Total, Indifferent };

constexpr std::string_view to_string(RelationProperty p) {
    switch (p) {
        case RelationProperty::AntiReflexive: return "anti-reflexive";
        case RelationProperty::Transitive: return "transitive";
        case RelationProperty::Total: return "total";
        case RelationProperty::Indifferent: return "indifferent";
    }
    return "?";
}

/// Outcome of checking a relation property over a sample.
/// `witness` is set exactly when `holds` is false.
template <typename T>
struct RelationVerdict {
    RelationProperty property;
    bool holds = true;
    std::optional<std::vector<T>> witness;
};

/// Checks `property` of `rel` exhaustively over all tuples drawn from
/// `sample` (singletons, pairs or triples as the property needs) and
/// reports the first failing tuple. Cubic in the sample size.
template <typename T, typename R>
RelationVerdict<T> classify_relation(RelationProperty property, R&& rel, std::span<const T> sample) {
    RelationVerdict<T> v{property, true, std::nullopt};
    auto fail = [&](std::vector<T> w) {
        v.holds = false;
        v.witness = std::move(w);
        return v;
    };
    const std::size_t n = sample.size();
    switch (property) {
        case RelationProperty::AntiReflexive:
            for (const T& x : sample)
                if (!is_anti_reflexive(rel, x)) return fail({x});
            break;
        case RelationProperty::Transitive:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (!is_transitive(rel, sample[i], sample[j], sample[k]))
                            return fail({sample[i], sample[j], sample[k]});
            break;
        case RelationProperty::Total:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!is_total(rel, sample[i], sample[j])) return fail({sample[i], sample[j]});
            break;
        case RelationProperty::Indifferent:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (sample[i] == sample[j]) continue;
                    if (!indifferent(rel, sample[i], sample[j])) return fail({sample[i], sample[j]});
                }
            break;
    }
    return v;
}

}  // namespace uopt
