#include "eltip/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "eltip/errors.hpp"
#include "detail/energy_kernel.hpp"
#include "detail/parallel.hpp"

namespace eltip {

namespace {

constexpr int kMaxDynamicsSpins = 24; // 2^24 amplitudes across six buffers

void check_state_size(int n) {
    if (n < 1) throw ArgumentError("spin count must be >= 1");
    if (n > kMaxDynamicsSpins) {
        throw ResourceError("state vector for " + std::to_string(n) +
                            " spins exceeds the in-memory limit of 2^" +
                            std::to_string(kMaxDynamicsSpins));
    }
}

std::vector<double> diagonal_energies(const IsingProblem& problem) {
    const int n = problem.spin_count();
    check_state_size(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const auto pairs = detail::pair_terms(problem);
    const auto& fields = problem.fields();
    std::vector<double> diag(dim);
    detail::parallel_chunks(dim, [&](std::size_t begin, std::size_t end) {
        for (std::size_t z = begin; z < end; ++z) {
            diag[z] = detail::config_energy(pairs, fields, z);
        }
    });
    return diag;
}

struct DiagStats {
    double min = 0.0;
    double max = 0.0;
    double mid() const { return 0.5 * (min + max); }
    double half_spread() const { return 0.5 * (max - min); }
    double max_abs() const { return std::max(std::abs(min), std::abs(max)); }
};

DiagStats diag_stats(const std::vector<double>& diag) {
    DiagStats s;
    auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

double step_size_from_stats(int n, const DiagStats& stats, double total_time,
                            const IntegratorPolicy& policy) {
    if (policy.fixed_step) {
        if (*policy.fixed_step <= 0.0) throw ArgumentError("fixed step must be positive");
        return std::min(*policy.fixed_step, total_time);
    }
    const double lambda_raw = static_cast<double>(n) + stats.max_abs();
    double dt = std::min(policy.max_step, policy.stability_fraction / std::max(lambda_raw, 1e-30));
    if (policy.method == IntegratorPolicy::Method::rk4) {
        // rk4 damps each eigencomponent by about (lambda*dt)^6/144 per step;
        // keep the accumulated worst case inside the drift budget. lambda is
        // taken after centering the diagonal, which costs only a global phase.
        const double lambda_eff = std::max(static_cast<double>(n), stats.half_spread());
        const double dt_budget =
            std::pow(144.0 * policy.drift_budget / (total_time * std::pow(lambda_eff, 6.0)), 0.2);
        dt = std::min(dt, dt_budget);
    }
    return std::min(dt, total_time);
}

std::uint64_t step_count_from_dt(double total_time, double dt) {
    return static_cast<std::uint64_t>(std::ceil(total_time / dt - 1e-12));
}

void validate_schedule(const Schedule& schedule) {
    if (!schedule.value) throw ValidationError("schedule has no function");
    const double s0 = schedule.value(0.0);
    const double s1 = schedule.value(1.0);
    if (std::abs(s0) > 1e-9 || std::abs(s1 - 1.0) > 1e-9) {
        throw ValidationError("schedule must satisfy s(0)=0 and s(1)=1");
    }
    double prev = s0;
    for (int i = 1; i <= 32; ++i) {
        const double s = schedule.value(static_cast<double>(i) / 32.0);
        if (s < prev - 1e-12) throw ValidationError("schedule must be nondecreasing");
        prev = s;
    }
}

// out = -i * [ a * sum_flips(in) + b * diag .* in ]
void schroedinger_rhs(const Amplitude* in, Amplitude* out, std::uint64_t dim, int n,
                      const double* diag, double a, double b) {
    for (std::uint64_t z = 0; z < dim; ++z) {
        double hr = 0.0, hi = 0.0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t nb = z ^ (std::uint64_t{1} << i);
            hr += in[nb].real();
            hi += in[nb].imag();
        }
        const double d = b * diag[z];
        hr = a * hr + d * in[z].real();
        hi = a * hi + d * in[z].imag();
        out[z] = Amplitude(hi, -hr);
    }
}

// ---------------------------------------------------------------------------
// Dense operators, assembled by Kronecker products (used by the expm path
// and the instantaneous gap; deliberately not sharing the bit-twiddling
// kernels above).

Eigen::MatrixXd site_operator(int n, int site, const Eigen::Matrix2d& m) {
    Eigen::MatrixXd op = Eigen::MatrixXd::Identity(1, 1);
    for (int spin = n - 1; spin >= 0; --spin) { // bit n-1 is the most significant
        const Eigen::Matrix2d factor =
            (spin == site) ? m : Eigen::Matrix2d(Eigen::Matrix2d::Identity());
        op = Eigen::kroneckerProduct(op, factor).eval();
    }
    return op;
}

Eigen::MatrixXd dense_driver(int n) {
    Eigen::Matrix2d x;
    x << 0, 1, 1, 0;
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(dim));
    for (int i = 0; i < n; ++i) hb += site_operator(n, i, x);
    return hb;
}

Eigen::MatrixXd dense_problem(const IsingProblem& problem) {
    const int n = problem.spin_count();
    Eigen::Matrix2d zmat;
    zmat << 1, 0, 0, -1;
    std::vector<Eigen::VectorXd> zdiag;
    zdiag.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) zdiag.push_back(site_operator(n, i, zmat).diagonal());

    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    for (const auto& [pair, value] : problem.couplings()) {
        diag += value * zdiag[static_cast<std::size_t>(pair.first)]
                            .cwiseProduct(zdiag[static_cast<std::size_t>(pair.second)]);
    }
    for (int i = 0; i < n; ++i) {
        diag += problem.fields()[static_cast<std::size_t>(i)] * zdiag[static_cast<std::size_t>(i)];
    }
    return diag.asDiagonal();
}

void check_dense_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                            " spins exceeds the dense-diagonalization cap of " +
                            std::to_string(cap));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// QuantumState

QuantumState::QuantumState(int n) : n_(n) {
    check_state_size(n);
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
}

double QuantumState::norm() const {
    double sum = 0.0;
    for (const Amplitude& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

std::vector<double> QuantumState::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t z = 0; z < amps_.size(); ++z) p[z] = std::norm(amps_[z]);
    return p;
}

QuantumState initial_state(int n) {
    QuantumState state(n);
    const double scale = std::pow(2.0, -0.5 * n);
    for (std::size_t z = 0; z < state.dimension(); ++z) {
        const bool odd = __builtin_parityll(z);
        state[z] = Amplitude(odd ? -scale : scale, 0.0);
    }
    return state;
}

QuantumState apply_hamiltonian(const IsingProblem& problem, double s, const QuantumState& state) {
    const int n = problem.spin_count();
    if (state.spin_count() != n) {
        throw DimensionError("apply_hamiltonian: state has " + std::to_string(state.spin_count()) +
                             " spins, problem has " + std::to_string(n));
    }
    const std::vector<double> diag = diagonal_energies(problem);
    QuantumState out(n);
    const Amplitude* in = state.amplitudes().data();
    const double a = 1.0 - s;
    for (std::uint64_t z = 0; z < state.dimension(); ++z) {
        Amplitude acc = s * diag[z] * in[z];
        for (int i = 0; i < n; ++i) {
            acc += a * in[z ^ (std::uint64_t{1} << i)];
        }
        out[z] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Schedules

Schedule linear_schedule() {
    return Schedule{"linear", [](double t) { return t; }};
}

Schedule smoothstep_schedule() {
    return Schedule{"smoothstep", [](double t) { return t * t * (3.0 - 2.0 * t); }};
}

Schedule schedule_by_name(const std::string& name) {
    if (name == "linear") return linear_schedule();
    if (name == "smoothstep") return smoothstep_schedule();
    throw ArgumentError("unknown schedule '" + name + "' (known: linear, smoothstep)");
}

// ---------------------------------------------------------------------------
// Step planning

double plan_step_size(const IsingProblem& problem, double total_time,
                      const IntegratorPolicy& policy) {
    if (total_time <= 0.0) throw ArgumentError("total time must be positive");
    const std::vector<double> diag = diagonal_energies(problem);
    return step_size_from_stats(problem.spin_count(), diag_stats(diag), total_time, policy);
}

std::uint64_t plan_step_count(const IsingProblem& problem, double total_time,
                              const IntegratorPolicy& policy) {
    return step_count_from_dt(total_time, plan_step_size(problem, total_time, policy));
}

// ---------------------------------------------------------------------------
// Evolution

namespace {

struct EvolutionSink {
    int samples = 0;
    std::vector<TrajectorySample>* out = nullptr;
};

QuantumState run_evolution(const AnnealSpec& spec, const EvolutionSink& sink) {
    const IsingProblem& problem = spec.problem;
    const int n = problem.spin_count();
    const double total_time = spec.total_time;
    if (total_time <= 0.0) throw ArgumentError("total time must be positive");
    validate_schedule(spec.schedule);

    const IntegratorPolicy& policy = spec.integrator;
    const std::vector<double> diag = diagonal_energies(problem);
    const DiagStats stats = diag_stats(diag);
    const double dt0 = step_size_from_stats(n, stats, total_time, policy);
    const std::uint64_t steps = step_count_from_dt(total_time, dt0);
    const double dt = total_time / static_cast<double>(steps);

    const std::uint64_t dim = std::uint64_t{1} << n;
    if (steps > policy.state_update_limit / dim) {
        throw ResourceError("evolve: " + std::to_string(steps) + " steps x 2^" +
                            std::to_string(n) + " amplitudes exceeds the update budget; " +
                            "raise IntegratorPolicy::state_update_limit to opt in");
    }

    const bool linear = (spec.schedule.name == "linear");
    const auto& schedule = spec.schedule.value;
    auto s_at = [&](double t) {
        const double tau = std::clamp(t / total_time, 0.0, 1.0);
        return linear ? tau : schedule(tau);
    };

    QuantumState state = initial_state(n);

    const std::uint64_t sample_every =
        (sink.samples > 0) ? std::max<std::uint64_t>(1, steps / static_cast<std::uint64_t>(sink.samples))
                           : 0;
    auto record = [&](double t) {
        if (!sink.out) return;
        sink.out->push_back({t, s_at(t), state.probabilities()});
    };
    record(0.0);

    if (policy.method == IntegratorPolicy::Method::expm) {
        check_dense_cap(n, policy.dense_cap, "evolve(expm)");
        const Eigen::MatrixXd hb = dense_driver(n);
        const Eigen::MatrixXd hp = dense_problem(problem);
        const Eigen::Index edim = static_cast<Eigen::Index>(dim);
        Eigen::VectorXd re(edim), im(edim);
        for (std::uint64_t z = 0; z < dim; ++z) {
            re[static_cast<Eigen::Index>(z)] = state[z].real();
            im[static_cast<Eigen::Index>(z)] = state[z].imag();
        }
        for (std::uint64_t step = 0; step < steps; ++step) {
            const double t = static_cast<double>(step) * dt;
            const double s = s_at(t + 0.5 * dt);
            const Eigen::MatrixXd h = (1.0 - s) * hb + s * hp;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
            const Eigen::MatrixXd& v = es.eigenvectors();
            Eigen::VectorXd a = v.transpose() * re;
            Eigen::VectorXd b = v.transpose() * im;
            for (Eigen::Index idx = 0; idx < edim; ++idx) {
                const double theta = es.eigenvalues()[idx] * dt;
                const double c = std::cos(theta), sn = std::sin(theta);
                const double na = a[idx] * c + b[idx] * sn; // e^{-i theta}
                const double nb = b[idx] * c - a[idx] * sn;
                a[idx] = na;
                b[idx] = nb;
            }
            re = v * a;
            im = v * b;
            if (sample_every && (step + 1) % sample_every == 0 && step + 1 < steps) {
                for (std::uint64_t z = 0; z < dim; ++z) {
                    state[z] = Amplitude(re[static_cast<Eigen::Index>(z)],
                                         im[static_cast<Eigen::Index>(z)]);
                }
                record(static_cast<double>(step + 1) * dt);
            }
        }
        for (std::uint64_t z = 0; z < dim; ++z) {
            state[z] = Amplitude(re[static_cast<Eigen::Index>(z)], im[static_cast<Eigen::Index>(z)]);
        }
    } else {
        // Center the diagonal: evolving under H - s*mid*I changes the state
        // by a global phase only and keeps the rk4 growth factors tight.
        const double mid = stats.mid();
        std::vector<double> shifted(diag);
        for (double& d : shifted) d -= mid;

        std::vector<Amplitude> k1(dim), k2(dim), k3(dim), k4(dim), yt(dim);
        Amplitude* psi = state.amplitudes().data();
        const double* dptr = shifted.data();

        for (std::uint64_t step = 0; step < steps; ++step) {
            const double t = static_cast<double>(step) * dt;
            const double s1 = s_at(t);
            const double s2 = s_at(t + 0.5 * dt);
            const double s3 = s_at(t + dt);

            schroedinger_rhs(psi, k1.data(), dim, n, dptr, 1.0 - s1, s1);
            const double half = 0.5 * dt;
            for (std::uint64_t z = 0; z < dim; ++z) yt[z] = psi[z] + half * k1[z];
            schroedinger_rhs(yt.data(), k2.data(), dim, n, dptr, 1.0 - s2, s2);
            for (std::uint64_t z = 0; z < dim; ++z) yt[z] = psi[z] + half * k2[z];
            schroedinger_rhs(yt.data(), k3.data(), dim, n, dptr, 1.0 - s2, s2);
            for (std::uint64_t z = 0; z < dim; ++z) yt[z] = psi[z] + dt * k3[z];
            schroedinger_rhs(yt.data(), k4.data(), dim, n, dptr, 1.0 - s3, s3);

            const double w = dt / 6.0;
            for (std::uint64_t z = 0; z < dim; ++z) {
                psi[z] += w * (k1[z] + 2.0 * (k2[z] + k3[z]) + k4[z]);
            }
            if (sample_every && (step + 1) % sample_every == 0 && step + 1 < steps) {
                record(static_cast<double>(step + 1) * dt);
            }
        }
    }

    const double nrm = state.norm();
    const double drift = std::abs(nrm - 1.0);
    if (!(drift < policy.norm_tolerance)) {
        throw IntegrationError("evolve: norm drift " + std::to_string(drift) +
                               " exceeds the tolerance " + std::to_string(policy.norm_tolerance));
    }
    const double inv = 1.0 / nrm;
    for (std::uint64_t z = 0; z < dim; ++z) state[z] *= inv;
    record(total_time);
    return state;
}

} // namespace

QuantumState evolve(const AnnealSpec& spec) { return run_evolution(spec, {}); }

std::vector<TrajectorySample> evolve_trajectory(const AnnealSpec& spec, int sample_count) {
    if (sample_count < 1) throw ArgumentError("sample count must be >= 1");
    std::vector<TrajectorySample> samples;
    EvolutionSink sink{sample_count, &samples};
    run_evolution(spec, sink);
    return samples;
}

// ---------------------------------------------------------------------------
// Sweep

SweepResult sweep(const IsingProblem& problem, const std::vector<double>& times,
                  const Schedule& schedule, const IntegratorPolicy& policy) {
    if (times.empty()) throw ArgumentError("sweep: need at least one time");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] <= 0.0) throw ArgumentError("sweep: times must be positive");
        if (i > 0 && times[i] < times[i - 1]) {
            throw ArgumentError("sweep: times must be sorted ascending");
        }
    }
    const std::vector<double> diag = diagonal_energies(problem);
    const double ground = *std::min_element(diag.begin(), diag.end());

    SweepResult result;
    result.spin_count = problem.spin_count();
    result.times = times;
    result.probabilities.resize(times.size());
    result.ground_probability.assign(times.size(), 0.0);

    detail::parallel_chunks(times.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            AnnealSpec spec{problem, times[idx], schedule, policy};
            result.probabilities[idx] = evolve(spec).probabilities();
        }
    });
    for (std::size_t idx = 0; idx < times.size(); ++idx) {
        double p = 0.0;
        for (std::size_t z = 0; z < diag.size(); ++z) {
            if (diag[z] == ground) p += result.probabilities[idx][z];
        }
        result.ground_probability[idx] = p;
    }
    return result;
}

// ---------------------------------------------------------------------------

double instantaneous_gap(const IsingProblem& problem, double s, int dense_cap) {
    const int n = problem.spin_count();
    check_dense_cap(n, dense_cap, "instantaneous_gap");
    const Eigen::MatrixXd h = (1.0 - s) * dense_driver(n) + s * dense_problem(problem);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[1] - es.eigenvalues()[0];
}

} // namespace eltip
