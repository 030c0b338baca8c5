#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eltip/ising.hpp"

namespace eltip {

using Amplitude = std::complex<double>;

/// State vector over the 2^n spin basis, indexed by the canonical bit order
/// (bit i of the index is 0 for s_i = +1).
class QuantumState {
public:
    explicit QuantumState(int n);

    int spin_count() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }

    Amplitude& operator[](std::size_t z) { return amps_[z]; }
    const Amplitude& operator[](std::size_t z) const { return amps_[z]; }

    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

    double norm() const;
    std::vector<double> probabilities() const;

private:
    int n_;
    std::vector<Amplitude> amps_;
};

/// Ground state of the driver sum_i X_i: every spin in the X = -1
/// eigenstate, amplitude (-1)^popcount(z) / 2^(n/2) at index z.
QuantumState initial_state(int n);

/// One application of H(s) = (1-s) * sum_i X_i + s * H_P, matrix-free:
/// the driver sums the n single-bit-flip neighbors of each amplitude and
/// the problem part scales by the diagonal classical energies.
QuantumState apply_hamiltonian(const IsingProblem& problem, double s, const QuantumState& state);

/// Annealing schedule: a pure function [0,1] -> [0,1] with s(0)=0, s(1)=1,
/// nondecreasing. Named so the CLI can select it.
struct Schedule {
    std::string name;
    std::function<double(double)> value;
};

Schedule linear_schedule();
Schedule smoothstep_schedule();

/// Looks up "linear" or "smoothstep"; throws ArgumentError otherwise.
Schedule schedule_by_name(const std::string& name);

struct IntegratorPolicy {
    enum class Method {
        rk4,  ///< fixed-step classical Runge-Kutta, matrix-free
        expm, ///< per-step exact exponential via dense diagonalization
    };

    Method method = Method::rk4;

    /// Hard ceiling on the step size.
    double max_step = 0.05;

    /// dt <= stability_fraction / (n + max |classical energy|).
    double stability_fraction = 0.5;

    /// Norm-loss budget for a whole rk4 run. The step size is shrunk until
    /// the worst-case damping bound steps * (lambda*dt)^6 / 144 stays under
    /// this, with lambda the spectral half-width after centering the
    /// diagonal. Keeps measured drift well below norm_tolerance even for
    /// total times of 1e6 and beyond.
    double drift_budget = 1e-7;

    /// evolve() fails with IntegrationError when |norm - 1| ends up above
    /// this; otherwise the final state is renormalized.
    double norm_tolerance = 1e-6;

    /// When set, overrides the step-size policy with an exact value.
    std::optional<double> fixed_step;

    /// Budget on steps * 2^n amplitude updates per run.
    std::uint64_t state_update_limit = 200'000'000'000ULL;

    /// Spin-count cap for the dense expm path.
    int dense_cap = 10;
};

struct AnnealSpec {
    IsingProblem problem;
    double total_time = 1.0;
    Schedule schedule = linear_schedule();
    IntegratorPolicy integrator{};
};

/// Step size the policy would choose for this problem and total time.
double plan_step_size(const IsingProblem& problem, double total_time,
                      const IntegratorPolicy& policy = {});
std::uint64_t plan_step_count(const IsingProblem& problem, double total_time,
                              const IntegratorPolicy& policy = {});

/// Integrates i dpsi/dt = H(s(t/T)) psi from the driver ground state to
/// t = T and returns the final state, renormalized. The integration removes
/// a constant diagonal offset (a global phase), so the returned state is
/// defined up to phase; probabilities are unaffected. Throws
/// IntegrationError when norm drift exceeds the policy bound, ResourceError
/// when the step budget would be exceeded.
QuantumState evolve(const AnnealSpec& spec);

/// Optional mid-anneal probability sampling (off the default path).
struct TrajectorySample {
    double time;
    double s;
    std::vector<double> probabilities;
};
std::vector<TrajectorySample> evolve_trajectory(const AnnealSpec& spec, int sample_count);

struct SweepResult {
    int spin_count = 0;
    std::vector<double> times;
    /// Row per time: final |amplitude|^2 per basis index, each row summing
    /// to 1 after renormalization.
    std::vector<std::vector<double>> probabilities;
    /// Row sums over the exact classical ground set.
    std::vector<double> ground_probability;
};

/// Independent evolve() per time. Times must be positive and ascending.
SweepResult sweep(const IsingProblem& problem, const std::vector<double>& times,
                  const Schedule& schedule = linear_schedule(),
                  const IntegratorPolicy& policy = {});

/// Gap between the two lowest eigenvalues of H(s), by dense Hermitian
/// diagonalization. Throws ResourceError above the cap.
double instantaneous_gap(const IsingProblem& problem, double s, int dense_cap = 10);

} // namespace eltip
