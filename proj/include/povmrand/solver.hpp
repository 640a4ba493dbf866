#pragma once

#include <vector>

#include "povmrand/linalg.hpp"

namespace povmrand {

struct LpResult {
    bool feasible = false;
    double value = 0.0;
    std::vector<double> x;
};

/// maximize c.x subject to A x = b, x >= 0. Dense two-phase simplex with
/// Bland's rule; A is row-major m x n with small m.
LpResult simplex_maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                          const std::vector<double>& c);

/// Feasibility of A x = b, x >= 0 (phase one only).
bool lp_feasible(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                 std::vector<double>* x = nullptr);

struct SimplexMaxResult {
    std::vector<double> weights;  // q on the simplex
    double sqrt_trace = 0.0;      // h(q) = tr sqrt(sum_j q_j B_j)
    double value = 0.0;           // h(q)^2
    double upper_bound = 0.0;     // certified bound on max h^2 from the last linearization
    int iterations = 0;
    bool converged = false;
};

/// Frank-Wolfe maximization of (tr sqrt(sum_j q_j B_j))^2 over the
/// probability simplex. Concave objective; vertex oracle by directional
/// derivative, diminishing step 2/(k+2), stops when the linearization gap on
/// h^2 drops below tol or after max_iter iterations. Gradient eigenvalues are
/// clamped at 1e-12 on rank-deficient iterates.
SimplexMaxResult maximize_sqrt_trace(const std::vector<HermitianOperator>& b, double tol = 1e-9,
                                     int max_iter = 100000);

/// Deterministic near-uniform unit sphere grid.
std::vector<std::array<double, 3>> fibonacci_sphere(int n);

}  // namespace povmrand
