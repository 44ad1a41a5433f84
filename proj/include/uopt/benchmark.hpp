#pragma once

// Two-objective benchmark on a rectangle of controls: dense random sampling
// and an evolutionary seed-and-grow search that keeps the tracked front equal
// to `argpareto_min` over everything evaluated so far.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uopt/finset.hpp"
#include "uopt/pareto.hpp"
#include "uopt/proptest.hpp"

namespace uopt::bench {

using Point2 = Vec<2, double>;

/// Shifted Easom-type bowl: minimum 4.2 at (π, π).
inline double f1(double x, double y) {
    const double dx = x - std::numbers::pi;
    const double dy = y - std::numbers::pi;
    return 5.2 - std::cos(x) * std::cos(y) * std::exp(-(dx * dx + dy * dy));
}

/// Scaled Himmelblau function: four zeros, one at (3, 2). The expression
/// matches the batched kernel operation for operation.
inline double f2(double x, double y) {
    const double u = x * x + y - 11.0;
    const double v = x + y * y - 7.0;
    return (u * u + v * v) / 100.0;
}

inline Point2 objectives(const Point2& c) { return c2(f1(c[0], c[1]), f2(c[0], c[1])); }

using Objectives = std::function<Point2(const Point2&)>;

struct Rect2 {
    double x_lo = -5.0, x_hi = 5.0;
    double y_lo = -5.0, y_hi = 5.0;

    [[nodiscard]] bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
    [[nodiscard]] bool contains(const Point2& p) const {
        return x_lo <= p[0] && p[0] <= x_hi && y_lo <= p[1] && p[1] <= y_hi;
    }
};

/// Parses "x_lo,x_hi,y_lo,y_hi". Empty on malformed input or lo > hi.
std::optional<Rect2> parse_rect(std::string_view text);

/// `n` points drawn uniformly from `rect`, x before y for each point.
FinSet<Point2> random_grid_2d(std::size_t n, const Rect2& rect, Rng& rng);

/// `side × side` cell-centred regular grid, row by row.
FinSet<Point2> regular_grid_2d(std::size_t side, const Rect2& rect);

struct LabeledPoint {
    Point2 control;
    Point2 objectives;
    bool safe = false;
    bool pareto = false;
};

/// A mutually indifferent set of 2-D images stored column-wise, each
/// carrying a caller-defined tag. Scans go through the active kernels.
class Front2D {
public:
    [[nodiscard]] std::size_t size() const noexcept { return f1_.size(); }
    [[nodiscard]] bool empty() const noexcept { return f1_.empty(); }
    [[nodiscard]] Point2 image(std::size_t i) const { return c2(f1_[i], f2_[i]); }
    [[nodiscard]] std::uint32_t tag(std::size_t i) const { return tags_[i]; }
    [[nodiscard]] std::span<const std::uint32_t> tags() const noexcept { return tags_; }

    /// Same result, in the same order, as the generic `bump`.
    void bump(const Point2& v, std::uint32_t tag);

    enum class Insert { Dominated, Tied, Entered };

    /// Tie-keeping insertion for `argpareto_min` tracking: a dominated image
    /// is rejected, an image equal to a member joins, and an image
    /// dominating members replaces all of them. Tags of removed members are
    /// appended to `evicted`.
    Insert insert(const Point2& v, std::uint32_t tag, std::vector<std::uint32_t>& evicted);

    [[nodiscard]] FinSet<Point2> images() const;

private:
    void erase_dominated_from(std::size_t from, const Point2& v, std::vector<std::uint32_t>* evicted);

    std::vector<double> f1_, f2_;
    std::vector<std::uint32_t> tags_;
    std::vector<std::uint8_t> mask_;
};

/// `pareto_opt` for 2-D points through `Front2D::bump`.
FinSet<Point2> pareto_opt_2d(const FinSet<Point2>& xs);

/// Every evaluated control with its image, and the split into the front
/// (`pys`) and the rest (`npys`). Invariant: pys == argpareto_min(fs, all).
struct FrontState {
    std::vector<Point2> controls;
    std::vector<Point2> images;
    std::vector<std::uint8_t> in_front;
    Front2D front;

    [[nodiscard]] std::size_t evaluations() const noexcept { return controls.size(); }
    [[nodiscard]] FinSet<Point2> pys() const;
    [[nodiscard]] FinSet<Point2> npys() const;
    [[nodiscard]] FinSet<Point2> all_controls() const { return FinSet<Point2>(controls); }

    /// Records an evaluated control and updates the split.
    Front2D::Insert add(const Point2& control, const Point2& image);
};

FrontState seed_front(const Objectives& fs, const FinSet<Point2>& ys);

struct EvolveParams {
    double epsilon = 0.2;  // probability of a uniform exploration draw
    double sigma = 0.02;   // mutation std-dev as a fraction of the domain width
};

/// Draws one new control, evaluates it once and adds it to `state`.
void evolve_step(FrontState& state, const Objectives& fs, const Rect2& rect, Rng& rng, const EvolveParams& params);

/// Full recomputation: `set_equal(pys, argpareto_min(fs, pys ++ npys))` and
/// `pys ∩ npys = {}`.
bool invariant_holds(const FrontState& state, const Objectives& fs);

struct BenchConfig {
    std::uint64_t seed = 137;
    std::size_t sample_size = 250000;
    std::size_t grid_side = 50;
    std::size_t iterations = 22500;
    Rect2 domain;
    double threshold = 0.15;
    EvolveParams evolve;
    std::size_t check_every = 0;  // evolution: full invariant check every k steps (0: never)
    bool verify_final = true;     // evolution: full invariant check at the end
};

struct Metrics {
    std::size_t evaluations = 0;
    double f1min = 0.0;
    double f2min = 0.0;
    Point2 argmin_f1;
    Point2 argmin_f2;
    std::size_t front_size = 0;
    std::size_t safe_count = 0;
    std::size_t unsafe_count = 0;
};

/// Labels `controls` by evaluating `fs` once per control. Safe means the
/// second objective is at most `threshold`; pareto means the image lies on
/// the front of all images.
std::vector<LabeledPoint> classify(const FinSet<Point2>& controls, const Objectives& fs, double threshold);

/// Minima are over all points; argmins are the first minimizing points.
Metrics compute_metrics(std::span<const LabeledPoint> points);

struct RunResult {
    std::vector<LabeledPoint> points;
    Metrics metrics;
};

/// Uniform sampling with the benchmark objectives; f2 is evaluated in batch.
RunResult run_sampling(const BenchConfig& config);

struct EvolutionResult {
    FrontState state;
    RunResult run;
    bool invariant_ok = true;
    std::optional<std::size_t> violated_after;  // step count at the first failed check
};

/// Seeds from the regular grid, then performs `iterations` evolve steps,
/// checking the invariant as configured. Stops at the first failed check.
EvolutionResult run_evolution(const BenchConfig& config);

}  // namespace uopt::bench
