#pragma once

#include <functional>
#include <optional>
#include <string>

#include "paraode/types.hpp"

namespace paraode {

/// A named vector field dy/dt = f(t, y). RHS evaluation must be a pure
/// function of (t, y) so probes and stages may run concurrently.
struct OdeSystem {
    using Rhs = std::function<void(double t, std::span<const double> y,
                                   std::span<double> dydt)>;
    using Analytic = std::function<StateVector(double t)>;
    using Invariant = std::function<double(std::span<const double> y)>;

    std::string name;
    int dimension = 0;
    Rhs rhs;
    Analytic analytic_solution;     // empty when no closed form is known
    Invariant invariant_fn;         // conserved scalar, when the system has one
    long rhs_cost_padding = 0;      // artificial work units burned per evaluation
    StateVector initial_state;     // designated initial condition at t = 0

    bool has_analytic() const { return static_cast<bool>(analytic_solution); }
    bool has_invariant() const { return static_cast<bool>(invariant_fn); }

    /// Evaluates the field and burns `rhs_cost_padding` units of deterministic
    /// arithmetic work (emulates an expensive right-hand side).
    void eval(double t, std::span<const double> y, std::span<double> dydt) const;
};

/// Deterministic arithmetic spin; one unit is a fixed-length fma/sqrt loop.
void burn_padding_work(long units);

}  // namespace paraode
