#include "povmrand/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "povmrand/errors.hpp"

namespace povmrand {

namespace {

constexpr double kPivotTol = 1e-11;

// Tableau rows: m constraint rows then the objective row (reduced costs,
// maximization). Columns: n structural + m artificial + rhs.
struct Tableau {
    int m, n;
    std::vector<std::vector<double>> t;  // (m+1) x (n+m+1)
    std::vector<int> basis;              // column index of basic variable per row

    Tableau(const std::vector<std::vector<double>>& a, const std::vector<double>& b)
        : m(static_cast<int>(a.size())), n(static_cast<int>(a[0].size())),
          t(m + 1, std::vector<double>(n + m + 1, 0.0)), basis(m) {
        for (int i = 0; i < m; ++i) {
            const double sign = b[i] >= 0.0 ? 1.0 : -1.0;
            for (int j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
            t[i][n + i] = 1.0;
            t[i][n + m] = sign * b[i];
            basis[i] = n + i;
        }
    }

    void pivot(int row, int col) {
        std::vector<double>& pr = t[row];
        const double piv = pr[col];
        for (double& v : pr) v /= piv;
        pr[col] = 1.0;
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            const double f = t[i][col];
            if (f == 0.0) continue;
            for (size_t j = 0; j < pr.size(); ++j) t[i][j] -= f * pr[j];
            t[i][col] = 0.0;
        }
        if (row < m) basis[row] = col;
    }

    // Bland's rule: entering = lowest-index column with positive reduced cost,
    // leaving = min ratio with lowest basic variable index on ties.
    bool iterate(int allowed_cols) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                if (t[m][j] > kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] > kPivotTol) {
                    const double ratio = t[i][n + m] / t[i][enter];
                    if (leave < 0 || ratio < best_ratio - 1e-15 ||
                        (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) throw InvalidInputError("simplex: unbounded linear program");
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult simplex_maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                          const std::vector<double>& c) {
    if (a.empty() || a.size() != b.size() || a[0].size() != c.size())
        throw DimensionError("simplex_maximize shape mismatch");
    Tableau tab(a, b);
    const int m = tab.m, n = tab.n;

    // phase one: maximize -(sum of artificials)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n + m; ++j) tab.t[m][j] += tab.t[i][j];
    for (int i = 0; i < m; ++i) tab.t[m][n + i] = 0.0;
    tab.iterate(n);
    LpResult out;
    if (tab.t[m][n + m] > 1e-8) return out;  // infeasible

    // drive any residual artificial out of the basis
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) {
            int col = -1;
            for (int j = 0; j < n; ++j)
                if (std::abs(tab.t[i][j]) > kPivotTol) {
                    col = j;
                    break;
                }
            if (col >= 0) tab.pivot(i, col);
            // else the row is redundant; its artificial stays basic at zero
        }
    }

    // phase two objective
    for (int j = 0; j <= n + m; ++j) tab.t[m][j] = 0.0;
    for (int j = 0; j < n; ++j) tab.t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) {
            const double f = tab.t[m][tab.basis[i]];
            if (f == 0.0) continue;
            for (int j = 0; j <= n + m; ++j) tab.t[m][j] -= f * tab.t[i][j];
        }
    }
    tab.iterate(n);

    out.feasible = true;
    out.value = -tab.t[m][n + m];
    out.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.t[i][n + m];
    // objective row stores -(value) after pivoting with maximization costs
    double val = 0.0;
    for (int j = 0; j < n; ++j) val += c[j] * out.x[j];
    out.value = val;
    return out;
}

bool lp_feasible(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                 std::vector<double>* x) {
    LpResult r = simplex_maximize(a, b, std::vector<double>(a[0].size(), 0.0));
    if (r.feasible && x) *x = r.x;
    return r.feasible;
}

SimplexMaxResult maximize_sqrt_trace(const std::vector<HermitianOperator>& b, double tol,
                                     int max_iter) {
    if (b.empty()) throw InvalidInputError("maximize_sqrt_trace: empty operator list");
    const int n = static_cast<int>(b.size());
    const int d = b[0].dim();
    for (const HermitianOperator& op : b)
        if (op.dim() != d) throw DimensionError("maximize_sqrt_trace dimension mismatch");

    std::vector<double> q(n, 1.0 / n);
    auto assemble = [&](const std::vector<double>& w) {
        HermitianOperator acc = HermitianOperator::zero(d);
        for (int j = 0; j < n; ++j)
            if (w[j] != 0.0) acc += w[j] * b[j];
        return acc;
    };

    SimplexMaxResult out;
    double h = 0.0, gap = 0.0;
    int k = 0;
    for (; k < max_iter; ++k) {
        const HermitianOperator acc = assemble(q);
        const EigenDecomposition eig = eig_hermitian(acc);
        h = 0.0;
        for (double lam : eig.eigenvalues) h += std::sqrt(std::max(lam, 0.0));
        // gradient of h: 0.5 * tr(A^{-1/2} B_j), eigenvalues clamped at 1e-12
        std::vector<double> inv_root(eig.eigenvalues.size());
        for (size_t i = 0; i < eig.eigenvalues.size(); ++i)
            inv_root[i] = 1.0 / std::sqrt(std::max(eig.eigenvalues[i], 1e-12));
        std::vector<double> grad(n, 0.0);
        for (int j = 0; j < n; ++j) {
            double g = 0.0;
            for (int col = 0; col < d; ++col) {
                // <v_col| B_j |v_col>
                Complex s = 0.0;
                for (int r = 0; r < d; ++r) {
                    Complex br = 0.0;
                    for (int c2 = 0; c2 < d; ++c2) br += b[j](r, c2) * eig.eigenvectors(c2, col);
                    s += std::conj(eig.eigenvectors(r, col)) * br;
                }
                g += inv_root[col] * s.real();
            }
            grad[j] = 0.5 * g;
        }
        int best = 0;
        for (int j = 1; j < n; ++j)
            if (grad[j] > grad[best]) best = j;
        double qdotg = 0.0;
        for (int j = 0; j < n; ++j) qdotg += q[j] * grad[j];
        gap = grad[best] - qdotg;  // linearization gap on h
        if (gap < 0.0) gap = 0.0;
        if (gap * (2.0 * h + gap) <= tol) {
            out.converged = true;
            break;
        }
        const double step = 2.0 / (k + 2.0);
        for (int j = 0; j < n; ++j) q[j] *= (1.0 - step);
        q[best] += step;
    }
    out.weights = std::move(q);
    out.sqrt_trace = h;
    out.value = h * h;
    out.upper_bound = (h + gap) * (h + gap);
    out.iterations = k;
    return out;
}

std::vector<std::array<double, 3>> fibonacci_sphere(int n) {
    std::vector<std::array<double, 3>> pts(n);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n; ++k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / n;
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * k;
        pts[k] = {s * std::cos(phi), s * std::sin(phi), z};
    }
    return pts;
}

}  // namespace povmrand
