// cpcop command line: reproduces the correlation table, the zero-jump
// probabilities, the difference-mass table and the figure datasets, and
// exposes bulk copula / compound-Poisson sampling as CSV streams.
#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cpcop/copula.hpp"
#include "cpcop/cpp_sim.hpp"
#include "cpcop/csv.hpp"
#include "cpcop/empirical.hpp"
#include "cpcop/moments.hpp"
#include "cpcop/rho.hpp"
#include "cpcop/rng.hpp"

namespace fs = std::filesystem;
using namespace cpcop;

namespace {

constexpr std::size_t kChunk = 65536;

// Stream layout: | domain (16) | row (16) | chunk (32) |. Every batch gets a
// disjoint 2^32-wide chunk range, so no two pipeline stages share a stream.
enum StreamDomain : std::uint64_t {
    kDomSample = 1,
    kDomSimulate,
    kDomCppBatch,
    kDomTieBreak,
    kDomGaussRef,
    kDomFloorA,
    kDomFloorB,
    kDomDots,
    kDomFig1Clayton,
    kDomFig1Gauss,
    kDomFig2Cpp,
    kDomFig2Tie,
};

std::uint64_t make_stream(StreamDomain domain, std::uint64_t row = 0) {
    return (static_cast<std::uint64_t>(domain) << 48) | (row << 32);
}

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t n = 1000000;
    int m = 30;
    double alpha = 20.0;
    std::vector<double> lambdas = {3, 5, 7, 20};
    std::vector<double> thetas = {0, 1, 2, 5};
    std::string copula = "clayton";
    double tau = 0.75;
    double eps = 0.5;
    std::vector<double> shift;
    std::string out_dir = ".";
    std::string format = "csv";
    bool quick = false;

    char sep() const { return format == "tsv" ? '\t' : ','; }
    std::string ext() const { return format == "tsv" ? ".tsv" : ".csv"; }

    void apply_quick() {
        if (quick) {
            n = 10000;
            m = 10;  // keeps the truncated noise floor comparable to the full run
        }
    }
};

std::ofstream open_artifact(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    const fs::path path = fs::path(cfg.out_dir) / (name + cfg.ext());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    return os;
}

std::string num_tag(double x) { return format_sig6(x); }

CopulaSpec spec_from_flags(const RunConfig& cfg, double theta) {
    if (cfg.copula == "clayton") return CopulaSpec::clayton(theta);
    if (cfg.copula == "gaussian") return CopulaSpec::gaussian(cfg.tau);
    if (cfg.copula == "indep") return CopulaSpec::independence();
    if (cfg.copula == "lower") return CopulaSpec::lower_bound();
    if (cfg.copula == "upper") return CopulaSpec::upper_bound();
    if (cfg.copula == "band") return CopulaSpec::band(cfg.eps);
    throw std::invalid_argument("unknown copula family: " + cfg.copula);
}

// Correlation of the Gaussian limit copula for a Clayton-theta jump law.
double limit_tau(double theta) {
    static std::map<double, double> cache;
    auto it = cache.find(theta);
    if (it == cache.end()) it = cache.emplace(theta, clayton_rho(theta, 1e-7)).first;
    return it->second;
}

int cmd_rho_table(const RunConfig& cfg) {
    auto os = open_artifact(cfg, "rho_table");
    os << "theta" << cfg.sep() << "rho\n";
    int failures = 0;
    for (double theta : cfg.thetas) {
        try {
            const double rho = clayton_rho(theta, 1e-7);
            os << format_sig6(theta) << cfg.sep() << format_fixed(rho, 4) << '\n';
            os.flush();
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "rho-table: theta=" << theta << " failed: " << e.what() << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_sample(const RunConfig& cfg) {
    const CopulaSpec spec = spec_from_flags(cfg, cfg.thetas.empty() ? 0.0 : cfg.thetas.front());
    auto os = open_artifact(cfg, "samples");
    os << 'u' << cfg.sep() << "v\n";
    const std::uint64_t base = make_stream(kDomSample);
    for (std::size_t done = 0, chunk = 0; done < cfg.n; ++chunk) {
        const std::size_t count = std::min(kChunk, cfg.n - done);
        Rng rng(cfg.seed, base + chunk);
        for (std::size_t i = 0; i < count; ++i) {
            const UnitPoint p = sample_copula(spec, rng);
            os << format_sig6(p.u) << cfg.sep() << format_sig6(p.v) << '\n';
        }
        done += count;
    }
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    CppParams params;
    params.intensity = cfg.lambdas.empty() ? 1.0 : cfg.lambdas.front();
    params.jumps.copula = spec_from_flags(cfg, cfg.thetas.empty() ? 0.0 : cfg.thetas.front());
    if (!cfg.shift.empty()) {
        if (cfg.shift.size() != 2) throw std::invalid_argument("--shift expects c,d");
        params.jumps.shift_x = cfg.shift[0];
        params.jumps.shift_y = cfg.shift[1];
    }
    validate(params);

    auto os = open_artifact(cfg, "cpp_samples");
    os << 'x' << cfg.sep() << 'y' << cfg.sep() << "k\n";
    const std::uint64_t base = make_stream(kDomSimulate);
    for (std::size_t done = 0, chunk = 0; done < cfg.n; ++chunk) {
        const std::size_t count = std::min(kChunk, cfg.n - done);
        Rng rng(cfg.seed, base + chunk);
        for (std::size_t i = 0; i < count; ++i) {
            const CppSample s = sample_cpp(params, rng);
            os << format_sig6(s.x) << cfg.sep() << format_sig6(s.y) << cfg.sep()
               << s.jump_count << '\n';
        }
        done += count;
    }
    return 0;
}

struct PipelineResult {
    DiffGrid grid;
    double mass = 0.0;
};

// CPP batch -> rank transform -> fresh Gaussian reference batch -> cell-wise
// density difference. `row` keys the RNG streams.
PipelineResult diff_pipeline(const RunConfig& cfg, double lambda, double theta,
                             std::uint64_t row) {
    CppParams params;
    params.intensity = lambda;
    params.jumps.copula = CopulaSpec::clayton(theta);

    const auto cpp = cpp_sample_batch(params, cfg.n, {cfg.seed, make_stream(kDomCppBatch, row)});
    Rng tie_rng(cfg.seed, make_stream(kDomTieBreak, row));
    const PseudoSample ranks = pseudo_observations(cpp, tie_rng);

    const CopulaSpec reference = CopulaSpec::gaussian(limit_tau(theta));
    const auto ref =
        copula_sample_batch(reference, cfg.n, {cfg.seed, make_stream(kDomGaussRef, row)});

    PipelineResult res;
    res.grid = density_diff(ranks.points, ref, cfg.m);
    res.grid.meta = {lambda, params.jumps.copula.name(), cfg.seed};
    res.mass = dot_mass(res.grid, cfg.alpha);
    return res;
}

// Same-law run: two independent batches from the reference copula itself.
double measured_floor(const RunConfig& cfg, double tau, std::uint64_t row, double* raw = nullptr) {
    const CopulaSpec spec = CopulaSpec::gaussian(tau);
    const auto a = copula_sample_batch(spec, cfg.n, {cfg.seed, make_stream(kDomFloorA, row)});
    const auto b = copula_sample_batch(spec, cfg.n, {cfg.seed, make_stream(kDomFloorB, row)});
    const DiffGrid grid = density_diff(a, b, cfg.m);
    if (raw != nullptr) *raw = total_mass(grid);
    return dot_mass(grid, cfg.alpha);
}

int cmd_diff_mass(const RunConfig& cfg) {
    validate(GridConfig{cfg.m, cfg.n, cfg.alpha});
    auto os = open_artifact(cfg, "diff_mass");
    const char sep = cfg.sep();
    os << "lambda" << sep << "theta" << sep << "mass" << sep << "noise_floor\n";
    int failures = 0;
    std::uint64_t row = 0;
    for (std::size_t ti = 0; ti < cfg.thetas.size(); ++ti) {
        const double theta = cfg.thetas[ti];
        double floor_mass = 0.0;
        bool have_floor = false;
        for (double lambda : cfg.lambdas) {
            ++row;
            try {
                if (!have_floor) {
                    floor_mass = measured_floor(cfg, limit_tau(theta), ti);
                    have_floor = true;
                }
                const PipelineResult res = diff_pipeline(cfg, lambda, theta, row);
                os << format_sig6(lambda) << sep << format_sig6(theta) << sep
                   << format_sig6(res.mass) << sep << format_sig6(floor_mass) << '\n';
                os.flush();
                if (res.mass < 1.5 * floor_mass) {
                    std::cerr << "diff-mass: lambda=" << lambda << " theta=" << theta
                              << " is noise-dominated (mass " << format_sig6(res.mass)
                              << " < 1.5 x floor " << format_sig6(floor_mass) << ")\n";
                }
            } catch (const std::exception& e) {
                ++failures;
                std::cerr << "diff-mass: lambda=" << lambda << " theta=" << theta
                          << " failed: " << e.what() << '\n';
            }
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_noise_floor(const RunConfig& cfg) {
    validate(GridConfig{cfg.m, cfg.n, cfg.alpha});
    auto os = open_artifact(cfg, "noise_floor");
    const char sep = cfg.sep();
    os << "theta" << sep << "tau" << sep << "noise_floor" << sep << "raw_floor\n";
    int failures = 0;
    for (std::size_t ti = 0; ti < cfg.thetas.size(); ++ti) {
        try {
            const double tau = limit_tau(cfg.thetas[ti]);
            double raw = 0.0;
            const double floor_mass = measured_floor(cfg, tau, ti, &raw);
            os << format_sig6(cfg.thetas[ti]) << sep << format_sig6(tau) << sep
               << format_sig6(floor_mass) << sep << format_sig6(raw) << '\n';
            os.flush();
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "noise-floor: theta=" << cfg.thetas[ti] << " failed: " << e.what()
                      << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_figures(const RunConfig& cfg) {
    validate(GridConfig{cfg.m, cfg.n, cfg.alpha});
    constexpr std::size_t kPanelPoints = 500;
    int failures = 0;

    // Panel set 1: copula scatter plots next to their Gaussian limits.
    for (std::size_t ti = 0; ti < cfg.thetas.size(); ++ti) {
        const double theta = cfg.thetas[ti];
        try {
            const auto clayton = copula_sample_batch(
                CopulaSpec::clayton(theta), kPanelPoints,
                {cfg.seed, make_stream(kDomFig1Clayton, ti)});
            auto os = open_artifact(cfg, "fig1_clayton_theta" + num_tag(theta));
            write_points_csv(os, clayton, cfg.sep());

            const auto gauss = copula_sample_batch(
                CopulaSpec::gaussian(limit_tau(theta)), kPanelPoints,
                {cfg.seed, make_stream(kDomFig1Gauss, ti)});
            auto os2 = open_artifact(cfg, "fig1_gaussian_theta" + num_tag(theta));
            write_points_csv(os2, gauss, cfg.sep());
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "figures: fig1 theta=" << theta << " failed: " << e.what() << '\n';
        }
    }

    // Panel set 2: rank-transformed compound Poisson samples, theta = 5.
    for (std::size_t li = 0; li < cfg.lambdas.size(); ++li) {
        const double lambda = cfg.lambdas[li];
        try {
            CppParams params;
            params.intensity = lambda;
            params.jumps.copula = CopulaSpec::clayton(5.0);
            const auto cpp = cpp_sample_batch(params, kPanelPoints,
                                              {cfg.seed, make_stream(kDomFig2Cpp, li)});
            Rng tie_rng(cfg.seed, make_stream(kDomFig2Tie, li));
            const PseudoSample ranks = pseudo_observations(cpp, tie_rng);
            auto os = open_artifact(cfg, "fig2_lambda" + num_tag(lambda));
            write_points_csv(os, ranks.points, cfg.sep());
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "figures: fig2 lambda=" << lambda << " failed: " << e.what() << '\n';
        }
    }

    // Panel set 3: dot renderings of the density difference.
    std::uint64_t row = 0;
    for (double theta : cfg.thetas) {
        for (double lambda : cfg.lambdas) {
            ++row;
            try {
                const PipelineResult res = diff_pipeline(cfg, lambda, theta, row);
                Rng dot_rng(cfg.seed, make_stream(kDomDots, row));
                const auto dots = dot_render(res.grid, cfg.alpha, dot_rng);
                const std::string tag = "lambda" + num_tag(lambda) + "_theta" + num_tag(theta);
                auto os = open_artifact(cfg, "fig3_" + tag);
                write_points_csv(os, dots, cfg.sep());
                auto gs = open_artifact(cfg, "fig3_grid_" + tag);
                write_grid_csv(gs, res.grid, cfg.sep());
            } catch (const std::exception& e) {
                ++failures;
                std::cerr << "figures: fig3 lambda=" << lambda << " theta=" << theta
                          << " failed: " << e.what() << '\n';
            }
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"copula structure of bivariate compound Poisson processes"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed (default 1)");
        sub->add_option("--n", cfg.n, "sample size (default 1e6)");
        sub->add_option("--m", cfg.m, "grid resolution (default 30)");
        sub->add_option("--alpha", cfg.alpha, "dot-rendering scale (default 20)");
        sub->add_option("--lambda", cfg.lambdas, "intensity list (default 3 5 7 20)");
        sub->add_option("--theta", cfg.thetas, "Clayton parameter list (default 0 1 2 5)");
        sub->add_option("--out", cfg.out_dir, "output directory (default .)");
        sub->add_option("--format", cfg.format, "csv or tsv")
            ->check(CLI::IsMember({"csv", "tsv"}));
        sub->add_flag("--quick", cfg.quick, "CI scale: n=1e4, m=10");
    };
    auto add_copula_flags = [&cfg](CLI::App* sub) {
        sub->add_option("--copula", cfg.copula, "clayton|gaussian|indep|lower|upper|band")
            ->check(CLI::IsMember({"clayton", "gaussian", "indep", "lower", "upper", "band"}));
        sub->add_option("--tau", cfg.tau, "Gaussian copula correlation");
        sub->add_option("--eps", cfg.eps, "band half-width");
        sub->add_option("--shift", cfg.shift, "per-jump shift c,d")->delimiter(',');
    };

    auto* rho = app.add_subcommand("rho-table", "limit-copula correlations per theta");
    add_common(rho);
    auto* sample = app.add_subcommand("sample", "raw copula samples");
    add_common(sample);
    add_copula_flags(sample);
    auto* simulate = app.add_subcommand("simulate", "compound Poisson samples");
    add_common(simulate);
    add_copula_flags(simulate);
    auto* diff = app.add_subcommand("diff-mass", "difference-mass table with noise floor");
    add_common(diff);
    auto* figures = app.add_subcommand("figures", "scatter datasets for all figure panels");
    add_common(figures);
    auto* noise = app.add_subcommand("noise-floor", "same-law estimator floor per theta");
    add_common(noise);

    CLI11_PARSE(app, argc, argv);
    cfg.apply_quick();

    try {
        if (rho->parsed()) return cmd_rho_table(cfg);
        if (sample->parsed()) return cmd_sample(cfg);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (diff->parsed()) return cmd_diff_mass(cfg);
        if (figures->parsed()) return cmd_figures(cfg);
        if (noise->parsed()) return cmd_noise_floor(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
