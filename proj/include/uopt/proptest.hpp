#pragma once

// Seedable property checking: a splitmix64 generator, value generators for
// every structure in the library, and the `check` / `falsify` drivers.
//
// Case i of a run with seed s draws from `Rng(s).split(i)`, so any reported
// witness is reproduced from (seed, case index) alone. No shrinking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "uopt/finset.hpp"
#include "uopt/pareto.hpp"
#include "uopt/uncertainty.hpp"

namespace uopt {

/// splitmix64. Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream number `i`; does not advance this generator.
    [[nodiscard]] Rng split(std::uint64_t i) const {
        Rng tmp(state_ ^ (0xd1b54a32d192ed03ULL * (i + 1)));
        return Rng(tmp());
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(*this);
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    double normal(double mean, double stddev) { return std::normal_distribution<double>(mean, stddev)(*this); }

    [[nodiscard]] std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

template <typename T>
using Gen = std::function<T(Rng&)>;

// ---------------------------------------------------------------------------
// Rendering witnesses.

namespace detail {
template <typename T>
concept Streamable = requires(std::ostream& os, const T& t) { os << t; };
}  // namespace detail

template <typename T>
std::string show(const T& x);

template <typename T>
std::string show(const std::vector<T>& xs);
template <typename T>
std::string show(const FinSet<T>& xs);
template <typename A, typename B>
std::string show(const std::pair<A, B>& p);
template <typename... Ts>
std::string show(const std::tuple<Ts...>& t);
inline std::string show(bool b) { return b ? "True" : "False"; }

template <typename T>
std::string show(const std::vector<T>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + show(xs[i]);
    return s + "]";
}

template <typename T>
std::string show(const FinSet<T>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + show(xs[i]);
    return s + "}";
}

template <typename A, typename B>
std::string show(const std::pair<A, B>& p) {
    return "(" + show(p.first) + ", " + show(p.second) + ")";
}

template <typename... Ts>
std::string show(const std::tuple<Ts...>& t) {
    std::string s = "(";
    std::apply([&](const auto&... xs) {
        std::size_t i = 0;
        ((s += (i++ ? ", " : "") + show(xs)), ...);
    }, t);
    return s + ")";
}

template <typename T>
std::string show(const T& x) {
    if constexpr (detail::Streamable<T>) {
        std::ostringstream os;
        os << x;
        return os.str();
    } else {
        return "<value>";
    }
}

// ---------------------------------------------------------------------------
// Drivers.

enum class Verdict { Pass, Fail, Vacuous };

/// `antecedent ⇒ consequent`, remembering whether the antecedent held.
inline Verdict implies(bool antecedent, bool consequent) {
    if (!antecedent) return Verdict::Vacuous;
    return consequent ? Verdict::Pass : Verdict::Fail;
}

enum class Outcome { Passed, Falsified, Discarded };
enum class Expect { Pass, Falsify };

/// Properties whose antecedent holds in fewer than this fraction of cases
/// are reported as Discarded.
inline constexpr double kMinNonVacuousRatio = 0.01;

struct CheckResult {
    Outcome outcome = Outcome::Passed;
    Expect expect = Expect::Pass;
    std::size_t requested = 0;
    std::size_t tests = 0;        // cases run
    std::size_t non_vacuous = 0;  // cases whose antecedent held
    std::uint64_t seed = 0;
    std::optional<std::size_t> failing_case;  // zero-based case index
    std::string witness;

    [[nodiscard]] double discard_ratio() const {
        return tests == 0 ? 0.0 : 1.0 - static_cast<double>(non_vacuous) / static_cast<double>(tests);
    }

    /// True when the outcome is the one the caller asked for.
    [[nodiscard]] bool met() const {
        return expect == Expect::Pass ? outcome == Outcome::Passed : outcome == Outcome::Falsified;
    }

    [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        switch (outcome) {
            case Outcome::Passed: os << "+++ OK, passed " << tests << " tests"; break;
            case Outcome::Falsified:
                os << "*** Failed, Falsified (after " << tests << " test" << (tests == 1 ? "" : "s") << "): " << witness;
                break;
            case Outcome::Discarded:
                os << "*** Gave up, " << non_vacuous << " of " << tests << " cases satisfied the antecedent";
                break;
        }
        return os.str();
    }
};

namespace detail {
inline Verdict to_verdict(bool b) { return b ? Verdict::Pass : Verdict::Fail; }
inline Verdict to_verdict(Verdict v) { return v; }
}  // namespace detail

/// Runs `prop` on `n` generated cases and stops at the first failure.
template <typename T, typename Prop>
CheckResult run_cases(std::size_t n, const Gen<T>& gen, Prop&& prop, std::uint64_t seed, Expect expect) {
    CheckResult r;
    r.expect = expect;
    r.requested = n;
    r.seed = seed;
    const Rng root(seed);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = root.split(i);
        T x = gen(rng);
        const Verdict v = detail::to_verdict(prop(x));
        ++r.tests;
        if (v == Verdict::Vacuous) continue;
        ++r.non_vacuous;
        if (v == Verdict::Fail) {
            r.outcome = Outcome::Falsified;
            r.failing_case = i;
            r.witness = show(x);
            return r;
        }
    }
    const bool too_vacuous = n > 0 && static_cast<double>(r.non_vacuous) < kMinNonVacuousRatio * static_cast<double>(n);
    r.outcome = too_vacuous ? Outcome::Discarded : Outcome::Passed;
    return r;
}

/// Expects `prop` to hold on all `n` cases.
template <typename T, typename Prop>
CheckResult check(std::size_t n, const Gen<T>& gen, Prop&& prop, std::uint64_t seed) {
    return run_cases(n, gen, std::forward<Prop>(prop), seed, Expect::Pass);
}

/// Expects a counterexample within `n` cases.
template <typename T, typename Prop>
CheckResult falsify(std::size_t n, const Gen<T>& gen, Prop&& prop, std::uint64_t seed) {
    return run_cases(n, gen, std::forward<Prop>(prop), seed, Expect::Falsify);
}

/// Regenerates the input of case `index` of a run with `seed`.
template <typename T>
T replay(const Gen<T>& gen, std::uint64_t seed, std::size_t index) {
    Rng rng = Rng(seed).split(index);
    return gen(rng);
}

// ---------------------------------------------------------------------------
// Generators.

inline Gen<int> gen_int(int lo, int hi) {
    return [=](Rng& r) { return static_cast<int>(r.uniform_int(lo, hi)); };
}

inline Gen<bool> gen_bool() {
    return [](Rng& r) { return r.uniform_int(0, 1) == 1; };
}

/// Multiples of `1/denominator` in [lo, hi]. Sums and differences of such
/// values are exact in double for small ranges, which keeps measure ties exact.
inline Gen<double> gen_dyadic(int lo, int hi, int denominator) {
    return [=](Rng& r) {
        return static_cast<double>(r.uniform_int(static_cast<std::int64_t>(lo) * denominator,
                                                 static_cast<std::int64_t>(hi) * denominator)) /
               denominator;
    };
}

template <typename T>
Gen<T> gen_element(std::vector<T> choices) {
    return [choices = std::move(choices)](Rng& r) {
        return choices[static_cast<std::size_t>(r.uniform_int(0, static_cast<std::int64_t>(choices.size()) - 1))];
    };
}

template <typename A, typename B>
Gen<std::pair<A, B>> gen_pair(Gen<A> ga, Gen<B> gb) {
    return [=](Rng& r) {
        A a = ga(r);
        B b = gb(r);
        return std::pair<A, B>{std::move(a), std::move(b)};
    };
}

template <typename... Ts>
Gen<std::tuple<Ts...>> gen_tuple(Gen<Ts>... gs) {
    return [=](Rng& r) { return std::tuple<Ts...>{gs(r)...}; };
}

template <std::size_t N, typename S>
Gen<Vec<N, S>> gen_vec(Gen<S> g) {
    return [=](Rng& r) {
        Vec<N, S> v;
        for (std::size_t i = 0; i < N; ++i) v[i] = g(r);
        return v;
    };
}

template <typename T>
Gen<std::vector<T>> gen_vector(Gen<T> g, std::size_t min_len, std::size_t max_len) {
    return [=](Rng& r) {
        const auto n = static_cast<std::size_t>(r.uniform_int(static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
        std::vector<T> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(g(r));
        return out;
    };
}

template <typename T>
Gen<FinSet<T>> gen_finset(Gen<T> g, std::size_t min_size, std::size_t max_size) {
    auto gv = gen_vector(std::move(g), min_size, max_size);
    return [=](Rng& r) { return FinSet<T>(gv(r)); };
}

template <typename T>
Gen<FinSet<T>> gen_nonempty_finset(Gen<T> g, std::size_t max_size) {
    return gen_finset(std::move(g), 1, std::max<std::size_t>(1, max_size));
}

/// Sets whose members are pairwise indifferent under dominance. Built by
/// rejection against the members already accepted.
template <typename P>
Gen<FinSet<P>> gen_antichain(Gen<P> g, std::size_t max_size) {
    return [=](Rng& r) {
        const auto target = static_cast<std::size_t>(r.uniform_int(0, static_cast<std::int64_t>(max_size)));
        FinSet<P> out;
        for (std::size_t tries = 0; out.size() < target && tries < 8 * max_size + 8; ++tries) {
            P x = g(r);
            const bool ok = std::all_of(out.begin(), out.end(),
                                        [&](const P& p) { return !dominates(p, x) && !dominates(x, p); });
            if (ok) out.push_back(std::move(x));
        }
        return out;
    };
}

template <typename B>
Gen<SeqU<B>> gen_seq_u(Gen<B> g, std::size_t min_len, std::size_t max_len) {
    auto gv = gen_vector(std::move(g), min_len, max_len);
    return [=](Rng& r) { return SeqU<B>{gv(r)}; };
}

template <typename B>
Gen<IdU<B>> gen_id_u(Gen<B> g) {
    return [=](Rng& r) { return IdU<B>{g(r)}; };
}

/// Positive integer raw weights in [1, max_weight], divided by their sum.
inline std::vector<double> normalized_weights(Rng& r, std::size_t n, int max_weight) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) sum += (x = static_cast<double>(r.uniform_int(1, max_weight)));
    for (auto& x : w) x /= sum;
    return w;
}

template <typename B>
Gen<SimpleProb<B>> gen_simple_prob(Gen<B> g, std::size_t min_size, std::size_t max_size, int max_weight = 4) {
    return [=](Rng& r) {
        const auto n = static_cast<std::size_t>(r.uniform_int(static_cast<std::int64_t>(std::max<std::size_t>(1, min_size)),
                                                              static_cast<std::int64_t>(max_size)));
        SimpleProb<B> sp;
        for (std::size_t i = 0; i < n; ++i) sp.pairs.push_back({g(r), 0.0});
        const auto w = normalized_weights(r, n, max_weight);
        for (std::size_t i = 0; i < n; ++i) sp.pairs[i].prob = w[i];
        return sp;
    };
}

/// Endpoints drawn independently, then ordered.
template <typename S>
Gen<Interval<S>> gen_interval(Gen<S> g) {
    return [=](Rng& r) {
        S a = g(r);
        S b = g(r);
        if (b < a) std::swap(a, b);
        return Interval<S>{a, b};
    };
}

template <typename S>
Gen<HistPDF<S>> gen_hist_pdf(Gen<S> g, std::size_t min_bins, std::size_t max_bins, int max_weight = 4) {
    auto gi = gen_interval(std::move(g));
    return [=](Rng& r) {
        HistPDF<S> h;
        h.support = gi(r);
        const auto n = static_cast<std::size_t>(r.uniform_int(static_cast<std::int64_t>(std::max<std::size_t>(1, min_bins)),
                                                              static_cast<std::int64_t>(max_bins)));
        h.weights = normalized_weights(r, n, max_weight);
        return h;
    };
}

/// A finite function given by a table over `domain`, falling back to
/// `fallback` off the table. Printable, so it can appear in witnesses.
template <typename A, typename B>
struct TableFun {
    std::vector<std::pair<A, B>> table;
    B fallback{};

    B operator()(const A& a) const {
        for (const auto& [k, v] : table)
            if (k == a) return v;
        return fallback;
    }

    friend std::ostream& operator<<(std::ostream& os, const TableFun& f) {
        os << "fun{";
        for (std::size_t i = 0; i < f.table.size(); ++i) os << (i ? "," : "") << show(f.table[i].first) << "->" << show(f.table[i].second);
        return os << ",_->" << show(f.fallback) << '}';
    }
};

template <typename A, typename B>
Gen<TableFun<A, B>> gen_table_fun(std::vector<A> domain, Gen<B> codomain) {
    return [=](Rng& r) {
        TableFun<A, B> f;
        for (const A& a : domain) f.table.emplace_back(a, codomain(r));
        f.fallback = codomain(r);
        return f;
    };
}

/// A named integer function, for pools of fixed objectives.
struct IntFun {
    std::string name;
    std::function<int(int)> fn;
    int operator()(int x) const { return fn(x); }
    friend std::ostream& operator<<(std::ostream& os, const IntFun& f) { return os << f.name; }
};

/// Fixed integer objectives used by the single-objective suites.
inline std::vector<IntFun> int_function_pool() {
    return {
        {"id", [](int x) { return x; }},
        {"negate", [](int x) { return -x; }},
        {"square", [](int x) { return x * x; }},
        {"mod3", [](int x) { return ((x % 3) + 3) % 3; }},
        {"const 5", [](int) { return 5; }},
        {"distance to 3", [](int x) { return x > 3 ? x - 3 : 3 - x; }},
    };
}

}  // namespace uopt
