#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

namespace uopt {

/// A finite set stored as a sequence.
///
/// Construction keeps the elements as given: no sorting, no deduplication.
/// Every set predicate below (membership, subset, equality, difference)
/// ignores order and multiplicity, so `{1,1,2}` and `{2,1}` are the same set.
/// Only `operator==` on the element type is required.
template <typename T>
class FinSet {
public:
    using value_type = T;
    using const_iterator = typename std::vector<T>::const_iterator;

    FinSet() = default;
    FinSet(std::initializer_list<T> init) : elems_(init) {}
    explicit FinSet(std::vector<T> elems) : elems_(std::move(elems)) {}

    [[nodiscard]] const std::vector<T>& elems() const noexcept { return elems_; }
    [[nodiscard]] std::vector<T>& elems() noexcept { return elems_; }

    [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
    [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }

    const_iterator begin() const noexcept { return elems_.begin(); }
    const_iterator end() const noexcept { return elems_.end(); }
    typename std::vector<T>::const_reference operator[](std::size_t i) const { return elems_[i]; }

    void push_back(T value) { elems_.push_back(std::move(value)); }

    [[nodiscard]] bool contains(const T& x) const {
        return std::find(elems_.begin(), elems_.end(), x) != elems_.end();
    }

    /// Sequence (structural) equality. Use `set_equal` for set semantics.
    friend bool operator==(const FinSet&, const FinSet&) = default;

private:
    std::vector<T> elems_;
};

template <typename T>
bool is_subset(const FinSet<T>& a, const FinSet<T>& b) {
    return std::all_of(a.begin(), a.end(), [&](const T& x) { return b.contains(x); });
}

template <typename T>
bool set_equal(const FinSet<T>& a, const FinSet<T>& b) {
    return is_subset(a, b) && is_subset(b, a);
}

/// `a \\ b`: every occurrence of a member of `b` is dropped from `a`.
template <typename T>
FinSet<T> set_difference(const FinSet<T>& a, const FinSet<T>& b) {
    std::vector<T> out;
    for (const T& x : a) {
        if (!b.contains(x)) out.push_back(x);
    }
    return FinSet<T>(std::move(out));
}

/// `a ++ b`.
template <typename T>
FinSet<T> set_concat(const FinSet<T>& a, const FinSet<T>& b) {
    std::vector<T> out(a.elems());
    out.insert(out.end(), b.begin(), b.end());
    return FinSet<T>(std::move(out));
}

/// True iff the set has exactly one distinct element.
template <typename T>
bool is_singleton_set(const FinSet<T>& a) {
    if (a.empty()) return false;
    return std::all_of(a.begin(), a.end(), [&](const T& x) { return x == a[0]; });
}

template <typename T, typename F>
auto map_set(F&& f, const FinSet<T>& as) {
    using R = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<R> out;
    out.reserve(as.size());
    for (const T& a : as) out.push_back(f(a));
    return FinSet<R>(std::move(out));
}

template <typename T, typename P>
FinSet<T> filter_set(P&& keep, const FinSet<T>& as) {
    std::vector<T> out;
    for (const T& a : as) {
        if (keep(a)) out.push_back(a);
    }
    return FinSet<T>(std::move(out));
}

}  // namespace uopt
