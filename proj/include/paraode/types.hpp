#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace paraode {

/// Dense real state y(t). Dimension is the vector length; components must be
/// finite on entry to any operation.
using StateVector = std::vector<double>;

bool all_finite(std::span<const double> v);

/// Componentwise infinity norm of y - y_bar (absolute tolerance formulation).
/// Throws std::invalid_argument on dimension mismatch.
double error_norm(std::span<const double> y, std::span<const double> y_bar);

/// Opt-in relative-scaled variant: max_i |y_i - ybar_i| / (1 + rtol*max(|y_i|,|ybar_i|)).
/// rtol = 0 reduces to error_norm.
double error_norm_scaled(std::span<const double> y, std::span<const double> y_bar,
                         double rtol);

/// Result of one step attempt: proposed state plus embedded local-error estimate.
struct StepOutcome {
    StateVector y_next;
    double epsilon = 0.0;  // local error estimate, >= 0; +inf on step failure
    long rhs_evals = 0;
    bool ok = true;  // false when a stage produced non-finite values

    bool accepted_at(double tol) const { return ok && epsilon <= tol; }
};

enum class RunStatus {
    Ok,
    StepUnderflow,
    MaxStepsExceeded,
};

struct IntegrationStats {
    long corrections = 0;     // controller invocations (accepted + rejected attempts)
    long accepted_steps = 0;
    long rejected_steps = 0;
    long rhs_evals = 0;
    double wall_ms = 0.0;
};

/// Trajectory of accepted points plus run statistics.
struct IntegrationResult {
    std::vector<double> times;         // accepted times, starting at t0
    std::vector<StateVector> states;   // matching states
    double final_time = 0.0;
    StateVector final_state;
    IntegrationStats stats;
    RunStatus status = RunStatus::Ok;
    std::string diagnostic;
};

}  // namespace paraode
