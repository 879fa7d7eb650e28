#pragma once

#include <string>
#include <vector>

namespace paraode {

/// Runge-Kutta coefficients (A, b, c) with stage count s and classical order p0.
/// A is row-major s x s; strictly lower triangular for explicit methods.
struct ButcherTableau {
    int s = 0;
    std::vector<double> A;  // row-major, s*s
    std::vector<double> b;
    std::vector<double> c;
    int p0 = 0;
    bool is_explicit = true;

    double a(int i, int j) const { return A[static_cast<size_t>(i) * s + j]; }
    double& a(int i, int j) { return A[static_cast<size_t>(i) * s + j]; }
};

/// Report-style validation result; empty violation list means the tableau is
/// structurally consistent.
struct TableauReport {
    std::vector<std::string> violations;
    double max_residual = 0.0;

    bool valid() const { return violations.empty(); }
};

/// Checks row-sum consistency (c_i = sum_j a_ij), weight sum (sum b = 1), the
/// explicit-structure constraint, and the quadrature conditions
/// B(k): sum_i b_i c_i^(k-1) = 1/k for k = 1..p0. Tolerance 1e-12.
TableauReport validate_tableau(const ButcherTableau& t);

/// Classical fourth-order method.
ButcherTableau rk4_tableau();

/// 5-stage Gauss-Legendre collocation tableau of order 10, built from the
/// closed-form sqrt(70) coefficients.
ButcherTableau gauss10_tableau();

}  // namespace paraode
