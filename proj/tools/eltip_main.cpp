// Command line front end: spectrum listing, landscape transforms, annealing
// sweeps and difficulty ranking over instance files.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eltip/eltip.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kForceLongStepThreshold = 1'000'000'000ULL;

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageFailure("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageFailure("cannot write output file: " + path);
    out << text;
}

eltip::IsingProblem load_instance(const std::string& path) {
    return eltip::parse_instance(read_file(path));
}

// "A:B:K" produces K log-spaced times from A to B inclusive; a comma list
// is taken verbatim.
std::vector<double> parse_time_grid(const std::string& spec) {
    std::vector<double> times;
    const auto parse_num = [&](const std::string& token) {
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw UsageFailure("cannot parse time value '" + token + "' in --times");
        }
    };
    if (spec.find(':') != std::string::npos) {
        std::istringstream in(spec);
        std::string a, b, k;
        if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, k)) {
            throw UsageFailure("--times grid must look like '1e0:1e6:25'");
        }
        const double lo = parse_num(a), hi = parse_num(b);
        long count = 0;
        try {
            count = std::stol(k);
        } catch (const std::exception&) {
            throw UsageFailure("grid point count '" + k + "' is not an integer");
        }
        if (lo <= 0 || hi <= 0 || count < 1 || hi < lo || (count == 1 && hi != lo)) {
            throw UsageFailure("--times grid needs 0 < A <= B and K >= 1 (K = 1 only when A = B)");
        }
        for (long i = 0; i < count; ++i) {
            const double f = (count == 1) ? 0.0 : static_cast<double>(i) / (count - 1);
            times.push_back(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
        }
        times.front() = lo;
        times.back() = hi;
    } else {
        std::istringstream in(spec);
        std::string token;
        while (std::getline(in, token, ',')) {
            if (!token.empty()) times.push_back(parse_num(token));
        }
    }
    if (times.empty()) throw UsageFailure("--times produced no values");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] <= 0) throw UsageFailure("times must be positive");
        if (i > 0 && times[i] < times[i - 1]) throw UsageFailure("times must be ascending");
    }
    return times;
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const std::string& path, std::optional<int> levels, int max_spins) {
    const eltip::IsingProblem problem = load_instance(path);
    eltip::SpectrumOptions options;
    options.max_spins = max_spins;
    const eltip::Spectrum spectrum = eltip::full_spectrum(problem, options);
    std::size_t count = spectrum.size();
    if (levels) {
        if (*levels < 1) throw UsageFailure("--levels must be >= 1");
        count = std::min<std::size_t>(count, static_cast<std::size_t>(*levels));
    }
    for (std::size_t lvl = 0; lvl < count; ++lvl) {
        std::cout << (lvl + 1) << ' ' << eltip::format_double(spectrum.energy(lvl)) << ' '
                  << spectrum.config(lvl).to_string() << '\n';
    }
    return kExitOk;
}

int cmd_transform(const std::string& path, std::optional<int> k, bool all, bool verify,
                  const std::string& out, int max_spins) {
    const eltip::IsingProblem problem = load_instance(path);
    const int n = problem.spin_count();
    if (all == k.has_value()) throw UsageFailure("pass exactly one of --k or --all");
    if (k && (*k < 0 || *k >= n)) {
        throw UsageFailure("--k must be in [0, " + std::to_string(n - 1) + "]");
    }

    std::vector<int> ks;
    if (all) {
        std::cerr << "id: input instance (unchanged), " << n << " transforms follow\n";
        for (int i = 0; i < n; ++i) ks.push_back(i);
    } else {
        ks.push_back(*k);
    }

    for (int kk : ks) {
        const eltip::IsingProblem transformed = eltip::apply_transform(problem, kk);
        const std::string text = eltip::serialize_instance(transformed);
        if (!out.empty()) {
            std::string target = out;
            if (all) {
                const std::filesystem::path base(out);
                std::filesystem::path named = base;
                named.replace_extension();
                target = named.string() + ".T" + std::to_string(kk) +
                         (base.has_extension() ? base.extension().string() : ".json");
            }
            write_file(target, text);
        } else {
            if (ks.size() > 1) std::cout << "# T" << kk << "\n";
            std::cout << text;
        }
        if (verify) {
            eltip::SpectrumOptions options;
            options.max_spins = max_spins;
            const double dev = eltip::verify_spectrum_invariance(problem, transformed, options);
            std::ostream& vout = out.empty() ? std::cerr : std::cout;
            vout << "verify T" << kk << " max-deviation " << eltip::format_double(dev) << "\n";
        }
    }
    return kExitOk;
}

int cmd_sweep(const std::string& path, const std::string& times_spec, const std::string& schedule,
              const std::string& integrator, std::optional<double> dt, const std::string& out,
              const std::string& gnuplot, bool force_long) {
    const eltip::IsingProblem problem = load_instance(path);
    const std::vector<double> times = parse_time_grid(times_spec);

    eltip::IntegratorPolicy policy;
    if (integrator == "rk4") {
        policy.method = eltip::IntegratorPolicy::Method::rk4;
    } else if (integrator == "expm") {
        policy.method = eltip::IntegratorPolicy::Method::expm;
    } else {
        throw UsageFailure("--integrator must be rk4 or expm");
    }
    if (dt) {
        if (*dt <= 0) throw UsageFailure("--dt must be positive");
        policy.fixed_step = *dt;
    }

    std::uint64_t total_steps = 0;
    for (double t : times) total_steps += eltip::plan_step_count(problem, t, policy);
    if (total_steps > kForceLongStepThreshold && !force_long) {
        throw UsageFailure("sweep needs about " + std::to_string(total_steps) +
                           " integration steps; pass --force-long to run it anyway");
    }
    if (force_long) policy.state_update_limit = ~std::uint64_t{0};

    const eltip::SweepResult result =
        eltip::sweep(problem, times, eltip::schedule_by_name(schedule), policy);
    const std::string csv = eltip::write_sweep_csv(result);
    std::ostream& summary = out.empty() ? std::cerr : std::cout;
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        summary << "T " << eltip::format_double(result.times[i]) << " ground "
                << eltip::format_double(result.ground_probability[i], 9) << "\n";
    }
    if (out.empty()) {
        std::cout << csv;
    } else {
        write_file(out, csv);
    }
    if (!gnuplot.empty()) {
        if (out.empty()) throw UsageFailure("--gnuplot requires --out (the script reads the CSV)");
        write_file(gnuplot, eltip::write_gnuplot_script(out, result.spin_count));
    }
    return kExitOk;
}

int cmd_rank(const std::string& path, std::optional<int> levels, int max_spins,
             const std::string& out) {
    const eltip::IsingProblem problem = load_instance(path);
    const int level_count = levels ? *levels : eltip::default_level_count(problem.spin_count());
    eltip::AnalyzeOptions options;
    options.spectrum.max_spins = max_spins;
    const auto ranking = eltip::rank_landscapes(problem, level_count, options);
    const std::string text = eltip::write_report(ranking);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    std::cerr << "eltip " << eltip::version << "\n";

    CLI::App app{"Ising energy-landscape transformation toolkit"};
    app.require_subcommand(1);

    std::string instance, out, gnuplot;
    std::optional<int> levels, k;
    std::optional<double> dt;
    int max_spins = 24;
    bool all = false, verify = false, force_long = false;
    std::string times_spec, schedule = "linear", integrator = "rk4";

    auto* spectrum = app.add_subcommand("spectrum", "List all 2^n energy levels");
    spectrum->add_option("instance", instance, "instance file")->required();
    spectrum->add_option("--levels", levels, "print only the lowest L levels");
    spectrum->add_option("--max-spins", max_spins, "enumeration cap (default 24)");

    auto* transform = app.add_subcommand("transform", "Apply landscape transforms");
    transform->add_option("instance", instance, "instance file")->required();
    transform->add_option("--k", k, "generator index");
    transform->add_flag("--all", all, "emit every generator's transform");
    transform->add_flag("--verify", verify, "print max spectrum deviation per transform");
    transform->add_option("--out", out, "output file (suffix .Tk inserted with --all)");
    transform->add_option("--max-spins", max_spins, "enumeration cap for --verify");

    auto* sweep = app.add_subcommand("sweep", "Annealing-time sweep, CSV output");
    sweep->add_option("instance", instance, "instance file")->required();
    sweep->add_option("--times", times_spec, "grid 'A:B:K' (log-spaced) or comma list")->required();
    sweep->add_option("--schedule", schedule, "annealing schedule (linear, smoothstep)");
    sweep->add_option("--integrator", integrator, "rk4 or expm");
    sweep->add_option("--dt", dt, "fixed integrator step override");
    sweep->add_option("--out", out, "CSV output file (default: stdout)");
    sweep->add_option("--gnuplot", gnuplot, "also write a gnuplot script");
    sweep->add_flag("--force-long", force_long, "allow runs beyond 1e9 integration steps");

    auto* rank = app.add_subcommand("rank", "Rank the n+1 landscapes by difficulty");
    rank->add_option("instance", instance, "instance file")->required();
    rank->add_option("--levels", levels, "levels per report (default min(16, 2^n))");
    rank->add_option("--max-spins", max_spins, "enumeration cap (default 24)");
    rank->add_option("--out", out, "report output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(instance, levels, max_spins);
        if (transform->parsed()) return cmd_transform(instance, k, all, verify, out, max_spins);
        if (sweep->parsed()) {
            return cmd_sweep(instance, times_spec, schedule, integrator, dt, out, gnuplot,
                             force_long);
        }
        if (rank->parsed()) return cmd_rank(instance, levels, max_spins, out);
        return kExitUsage;
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eltip::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eltip::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eltip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
