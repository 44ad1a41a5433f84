#include "uopt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "uopt/figure1.hpp"
#include "uopt/suites.hpp"

namespace uopt::cli {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string metrics_json(const bench::Metrics& m) {
    // Minima of an empty run are undefined and written as null.
    const bool any = m.evaluations > 0;
    const auto num = [any](double v) { return any ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
    const auto pt = [any](const bench::Point2& p) {
        return any ? nlohmann::ordered_json::array({p[0], p[1]}) : nlohmann::ordered_json(nullptr);
    };
    const nlohmann::ordered_json j{
        {"evaluations", m.evaluations},
        {"f1min", num(m.f1min)},
        {"f2min", num(m.f2min)},
        {"argmin_f1", pt(m.argmin_f1)},
        {"argmin_f2", pt(m.argmin_f2)},
        {"front_size", m.front_size},
        {"safe_count", m.safe_count},
        {"unsafe_count", m.unsafe_count},
    };
    return j.dump(2) + "\n";
}

namespace {

void write_atomically(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

void write_outputs(const std::filesystem::path& dir, std::span<const bench::LabeledPoint> points,
                   const bench::Metrics& metrics) {
    std::filesystem::create_directories(dir);
    std::string control = "x,y,safe,pareto\n";
    std::string operational = "f1,f2,safe,pareto\n";
    std::vector<bench::Point2> front;
    for (const auto& p : points) {
        const char* flags[2] = {p.safe ? "1" : "0", p.pareto ? "1" : "0"};
        control += format_number(p.control[0]) + "," + format_number(p.control[1]) + "," + flags[0] + "," + flags[1] + "\n";
        operational += format_number(p.objectives[0]) + "," + format_number(p.objectives[1]) + "," + flags[0] + "," + flags[1] + "\n";
        if (p.pareto) front.push_back(p.objectives);
    }
    std::sort(front.begin(), front.end(), [](const bench::Point2& a, const bench::Point2& b) { return a.coords < b.coords; });
    front.erase(std::unique(front.begin(), front.end()), front.end());
    std::string front_csv = "f1,f2\n";
    for (const auto& f : front) front_csv += format_number(f[0]) + "," + format_number(f[1]) + "\n";

    write_atomically(dir / "control.csv", control);
    write_atomically(dir / "operational.csv", operational);
    write_atomically(dir / "front.csv", front_csv);
    write_atomically(dir / "metrics.json", metrics_json(metrics));
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("UOPT_SEED");
    if (env == nullptr || *env == '\0') return 137;
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) throw UsageError("UOPT_SEED is not an unsigned integer: " + std::string(s));
    return v;
}

bench::Rect2 rect_or_throw(const std::string& text) {
    const auto r = bench::parse_rect(text);
    if (!r) throw UsageError("--rect expects x_lo,x_hi,y_lo,y_hi with lo <= hi, got \"" + text + "\"");
    return *r;
}

void print_metrics(std::ostream& out, const bench::Metrics& m) {
    out << "evaluations: " << m.evaluations << "\n";
    if (m.evaluations == 0) return;
    char buf[160];
    std::snprintf(buf, sizeof buf, "min f1: %.3f at (%.3f, %.3f)\n", m.f1min, m.argmin_f1[0], m.argmin_f1[1]);
    out << buf;
    std::snprintf(buf, sizeof buf, "min f2: %.3e at (%.3f, %.3f)\n", m.f2min, m.argmin_f2[0], m.argmin_f2[1]);
    out << buf;
    out << "front size: " << m.front_size << ", safe: " << m.safe_count << ", unsafe: " << m.unsafe_count << "\n";
}

int run_figure1(std::ostream& out) {
    using namespace figure1;
    out << "points:\n";
    for (const auto& n : kPoints) out << "  " << n.name << " " << n.point << "\n";
    const auto front = pareto_opt(all_points());
    out << "front:";
    for (const auto& n : kPoints)
        if (front.contains(n.point)) out << " " << n.name;
    out << "\n";
    bool all_hold = true;
    for (const Statement& s : kStatements) {
        const bool h = holds(s);
        all_hold = all_hold && h;
        out << s.lhs << (s.claim == Claim::Dominates ? " ≺ " : " ∥ ") << s.rhs << ": " << (h ? "true" : "false") << "\n";
    }
    return set_equal(front, expected_front()) && all_hold ? kOk : kFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pareto fronts, uncertain minimization and property suites"};
    app.require_subcommand(1);

    std::uint64_t seed = 137;
    std::string suite = "all";
    std::size_t props_n = 10000;
    auto* props = app.add_subcommand("props", "Run property suites");
    props->add_option("--suite", suite, "Suite name or 'all'");
    props->add_option("--n", props_n, "Cases per property")->check(CLI::PositiveNumber);
    props->add_option("--seed", seed, "Random seed");
    props->add_flag("--list", "List suite names and exit");

    bench::BenchConfig cfg;
    std::string rect_text = "-5,5,-5,5";
    std::string out_dir = ".";
    auto* sample = app.add_subcommand("sample", "Uniform random sampling of the benchmark");
    sample->add_option("--n", cfg.sample_size, "Number of samples");
    sample->add_option("--seed", seed, "Random seed");
    sample->add_option("--rect", rect_text, "Domain as x_lo,x_hi,y_lo,y_hi")->allow_extra_args(false);
    sample->add_option("--threshold", cfg.threshold, "Safety threshold on f2");
    sample->add_option("--out", out_dir, "Output directory");

    std::size_t check_every = 0;
    auto* evolve = app.add_subcommand("evolve", "Evolutionary front approximation");
    evolve->add_option("--grid", cfg.grid_side, "Side of the regular seed grid");
    evolve->add_option("--iters", cfg.iterations, "Evolution steps");
    evolve->add_option("--seed", seed, "Random seed");
    evolve->add_option("--epsilon", cfg.evolve.epsilon, "Exploration probability")->check(CLI::Range(0.0, 1.0));
    evolve->add_option("--sigma", cfg.evolve.sigma, "Mutation std-dev as a fraction of the domain width")
        ->check(CLI::NonNegativeNumber);
    evolve->add_option("--rect", rect_text, "Domain as x_lo,x_hi,y_lo,y_hi");
    evolve->add_option("--threshold", cfg.threshold, "Safety threshold on f2");
    evolve->add_option("--check-every", check_every, "Verify the front invariant every k steps (0: only at the end)");
    evolve->add_option("--out", out_dir, "Output directory");

    auto* fig = app.add_subcommand("figure1", "Seven-point dominance example");

    try {
        seed = default_seed();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (props->parsed()) {
            if (props->count("--list") > 0) {
                for (const auto& name : suites::names()) out << name << "\n";
                return kOk;
            }
            if (suite != "all" && !suites::exists(suite)) {
                err << "error: unknown suite '" << suite << "'; known suites:";
                for (const auto& name : suites::names()) err << " " << name;
                err << " all\n";
                return kUsage;
            }
            const auto reports = suites::run(suite, props_n, seed);
            std::size_t met = 0;
            for (const auto& r : reports) {
                out << r.line() << "\n";
                if (r.result.met()) ++met;
            }
            out << met << "/" << reports.size() << " properties met their expected verdict\n";
            return met == reports.size() ? kOk : kFailure;
        }
        if (fig->parsed()) return run_figure1(out);

        cfg.domain = rect_or_throw(rect_text);
        cfg.seed = seed;
        if (sample->parsed()) {
            const auto r = bench::run_sampling(cfg);
            print_metrics(out, r.metrics);
            write_outputs(out_dir, r.points, r.metrics);
            return kOk;
        }
        if (evolve->parsed()) {
            cfg.check_every = check_every;
            const auto r = bench::run_evolution(cfg);
            print_metrics(out, r.run.metrics);
            if (r.invariant_ok) {
                out << "front invariant: holds\n";
            } else {
                err << "error: front invariant violated after step " << *r.violated_after << "\n";
            }
            write_outputs(out_dir, r.run.points, r.run.metrics);
            return r.invariant_ok ? kOk : kFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace uopt::cli
