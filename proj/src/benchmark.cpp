#include "uopt/benchmark.hpp"

#include <algorithm>
#include <charconv>

#include "uopt/kernels.hpp"

namespace uopt::bench {

std::optional<Rect2> parse_rect(std::string_view text) {
    double v[4];
    std::size_t k = 0;
    while (k < 4) {
        const std::size_t comma = text.find(',');
        std::string_view field = text.substr(0, comma);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v[k]);
        if (ec != std::errc{} || end != field.data() + field.size() || !std::isfinite(v[k])) return std::nullopt;
        ++k;
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (k == 4) return std::nullopt;
    }
    if (k != 4) return std::nullopt;
    Rect2 r{v[0], v[1], v[2], v[3]};
    if (!r.valid()) return std::nullopt;
    return r;
}

FinSet<Point2> random_grid_2d(std::size_t n, const Rect2& rect, Rng& rng) {
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.uniform(rect.x_lo, rect.x_hi);
        const double y = rng.uniform(rect.y_lo, rect.y_hi);
        pts.push_back(c2(x, y));
    }
    return FinSet<Point2>(std::move(pts));
}

FinSet<Point2> regular_grid_2d(std::size_t side, const Rect2& rect) {
    std::vector<Point2> pts;
    pts.reserve(side * side);
    const double wx = (rect.x_hi - rect.x_lo) / static_cast<double>(side);
    const double wy = (rect.y_hi - rect.y_lo) / static_cast<double>(side);
    for (std::size_t j = 0; j < side; ++j)
        for (std::size_t i = 0; i < side; ++i)
            pts.push_back(c2(rect.x_lo + (static_cast<double>(i) + 0.5) * wx, rect.y_lo + (static_cast<double>(j) + 0.5) * wy));
    return FinSet<Point2>(std::move(pts));
}

// ---------------------------------------------------------------------------
// Front2D

void Front2D::erase_dominated_from(std::size_t from, const Point2& v, std::vector<std::uint32_t>* evicted) {
    const std::size_t n = size();
    if (from >= n) return;
    mask_.resize(n);
    kernels::active_kernels().dominated_mask(f1_.data() + from, f2_.data() + from, n - from, v[0], v[1], mask_.data());
    std::size_t out = from;
    for (std::size_t i = from; i < n; ++i) {
        if (mask_[i - from] != 0) {
            if (evicted != nullptr) evicted->push_back(tags_[i]);
            continue;
        }
        f1_[out] = f1_[i];
        f2_[out] = f2_[i];
        tags_[out] = tags_[i];
        ++out;
    }
    f1_.resize(out);
    f2_.resize(out);
    tags_.resize(out);
}

void Front2D::bump(const Point2& v, std::uint32_t tag) {
    const std::size_t n = size();
    const std::size_t i = kernels::active_kernels().first_comparable(f1_.data(), f2_.data(), n, v[0], v[1]);
    if (i == n) {
        f1_.push_back(v[0]);
        f2_.push_back(v[1]);
        tags_.push_back(tag);
        return;
    }
    if (f1_[i] <= v[0] && f2_[i] <= v[1]) return;  // p == v or p ≺ v
    f1_[i] = v[0];
    f2_[i] = v[1];
    tags_[i] = tag;
    erase_dominated_from(i + 1, v, nullptr);
}

Front2D::Insert Front2D::insert(const Point2& v, std::uint32_t tag, std::vector<std::uint32_t>& evicted) {
    const std::size_t n = size();
    const std::size_t i = kernels::active_kernels().first_comparable(f1_.data(), f2_.data(), n, v[0], v[1]);
    Insert result = Insert::Entered;
    if (i < n) {
        if (f1_[i] == v[0] && f2_[i] == v[1]) {
            result = Insert::Tied;
        } else if (f1_[i] <= v[0] && f2_[i] <= v[1]) {
            return Insert::Dominated;
        } else {
            // Earlier members are incomparable with v, so only [i, n) can be dominated.
            erase_dominated_from(i, v, &evicted);
        }
    }
    f1_.push_back(v[0]);
    f2_.push_back(v[1]);
    tags_.push_back(tag);
    return result;
}

FinSet<Point2> Front2D::images() const {
    std::vector<Point2> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(image(i));
    return FinSet<Point2>(std::move(out));
}

FinSet<Point2> pareto_opt_2d(const FinSet<Point2>& xs) {
    Front2D front;
    for (std::size_t i = xs.size(); i-- > 0;) front.bump(xs[i], static_cast<std::uint32_t>(i));
    return front.images();
}

// ---------------------------------------------------------------------------
// FrontState

FinSet<Point2> FrontState::pys() const {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < controls.size(); ++i)
        if (in_front[i] != 0) out.push_back(controls[i]);
    return FinSet<Point2>(std::move(out));
}

FinSet<Point2> FrontState::npys() const {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < controls.size(); ++i)
        if (in_front[i] == 0) out.push_back(controls[i]);
    return FinSet<Point2>(std::move(out));
}

Front2D::Insert FrontState::add(const Point2& control, const Point2& image) {
    const auto tag = static_cast<std::uint32_t>(controls.size());
    controls.push_back(control);
    images.push_back(image);
    in_front.push_back(0);
    std::vector<std::uint32_t> evicted;
    const auto r = front.insert(image, tag, evicted);
    for (std::uint32_t t : evicted) in_front[t] = 0;
    if (r != Front2D::Insert::Dominated) in_front[tag] = 1;
    return r;
}

FrontState seed_front(const Objectives& fs, const FinSet<Point2>& ys) {
    FrontState s;
    s.controls.reserve(ys.size());
    for (const Point2& y : ys) s.add(y, fs(y));
    return s;
}

void evolve_step(FrontState& state, const Objectives& fs, const Rect2& rect, Rng& rng, const EvolveParams& params) {
    Point2 y;
    const bool explore = state.front.empty() || rng.bernoulli(params.epsilon);
    if (explore) {
        y[0] = rng.uniform(rect.x_lo, rect.x_hi);
        y[1] = rng.uniform(rect.y_lo, rect.y_hi);
    } else {
        const auto tags = state.front.tags();
        const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(tags.size()) - 1));
        const Point2& parent = state.controls[tags[k]];
        const double sx = params.sigma * (rect.x_hi - rect.x_lo);
        const double sy = params.sigma * (rect.y_hi - rect.y_lo);
        y[0] = std::clamp(parent[0] + rng.normal(0.0, sx), rect.x_lo, rect.x_hi);
        y[1] = std::clamp(parent[1] + rng.normal(0.0, sy), rect.y_lo, rect.y_hi);
    }
    state.add(y, fs(y));
}

bool invariant_holds(const FrontState& state, const Objectives& fs) {
    const auto pys = state.pys();
    const auto npys = state.npys();
    for (const Point2& p : pys)
        if (npys.contains(p)) return false;
    return set_equal(pys, argpareto_min(fs, set_concat(npys, pys)));
}

// ---------------------------------------------------------------------------
// Runs

namespace {

std::vector<LabeledPoint> label(const std::vector<Point2>& controls, const std::vector<Point2>& images,
                                const std::vector<std::uint8_t>& in_front, double threshold) {
    std::vector<LabeledPoint> out(controls.size());
    for (std::size_t i = 0; i < controls.size(); ++i)
        out[i] = {controls[i], images[i], images[i][1] <= threshold, in_front[i] != 0};
    return out;
}

}  // namespace

std::vector<LabeledPoint> classify(const FinSet<Point2>& controls, const Objectives& fs, double threshold) {
    const FrontState s = seed_front(fs, controls);
    return label(s.controls, s.images, s.in_front, threshold);
}

Metrics compute_metrics(std::span<const LabeledPoint> points) {
    Metrics m;
    m.evaluations = points.size();
    if (points.empty()) return m;
    std::vector<double> a(points.size()), b(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        a[i] = points[i].objectives[0];
        b[i] = points[i].objectives[1];
        if (points[i].safe) ++m.safe_count;
        if (points[i].pareto) ++m.front_size;
    }
    m.unsafe_count = points.size() - m.safe_count;
    const auto& k = kernels::active_kernels();
    const std::size_t i1 = k.argmin_first(a.data(), a.size());
    const std::size_t i2 = k.argmin_first(b.data(), b.size());
    m.f1min = a[i1];
    m.f2min = b[i2];
    m.argmin_f1 = points[i1].control;
    m.argmin_f2 = points[i2].control;
    return m;
}

RunResult run_sampling(const BenchConfig& config) {
    Rng rng(config.seed);
    const auto controls = random_grid_2d(config.sample_size, config.domain, rng);
    const std::size_t n = controls.size();
    std::vector<double> xs(n), ys(n), v1(n), v2(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = controls[i][0];
        ys[i] = controls[i][1];
        v1[i] = f1(xs[i], ys[i]);
    }
    kernels::active_kernels().eval_f2(xs.data(), ys.data(), v2.data(), n);

    FrontState s;
    s.controls.reserve(n);
    s.images.reserve(n);
    s.in_front.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.add(controls[i], c2(v1[i], v2[i]));

    RunResult r;
    r.points = label(s.controls, s.images, s.in_front, config.threshold);
    r.metrics = compute_metrics(r.points);
    return r;
}

EvolutionResult run_evolution(const BenchConfig& config) {
    const Objectives fs = objectives;
    Rng rng(config.seed);
    EvolutionResult out;
    out.state = seed_front(fs, regular_grid_2d(config.grid_side, config.domain));
    for (std::size_t i = 0; i < config.iterations; ++i) {
        evolve_step(out.state, fs, config.domain, rng, config.evolve);
        if (config.check_every > 0 && (i + 1) % config.check_every == 0 && !invariant_holds(out.state, fs)) {
            out.invariant_ok = false;
            out.violated_after = i + 1;
            break;
        }
    }
    if (out.invariant_ok && config.verify_final && !invariant_holds(out.state, fs)) {
        out.invariant_ok = false;
        out.violated_after = config.iterations;
    }
    out.run.points = label(out.state.controls, out.state.images, out.state.in_front, config.threshold);
    out.run.metrics = compute_metrics(out.run.points);
    return out;
}

}  // namespace uopt::bench
