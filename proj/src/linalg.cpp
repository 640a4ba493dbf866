#include "povmrand/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "povmrand/errors.hpp"

namespace povmrand {

HermitianOperator::HermitianOperator(Matrix m, double tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) throw DimensionError("Hermitian operator must be square");
    if (mat_.rows() < 1) throw DimensionError("Hermitian operator must have dim >= 1");
    if (!mat_.all_finite()) throw InvalidInputError("Hermitian operator has non-finite entries");
    if (!mat_.is_hermitian(tol)) throw InvalidInputError("matrix is not Hermitian within tolerance");
    // symmetrize exactly
    for (int i = 0; i < mat_.rows(); ++i) {
        mat_(i, i) = Complex(mat_(i, i).real(), 0.0);
        for (int j = i + 1; j < mat_.cols(); ++j) {
            const Complex avg = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
            mat_(i, j) = avg;
            mat_(j, i) = std::conj(avg);
        }
    }
}

HermitianOperator HermitianOperator::identity(int d) { return HermitianOperator(Matrix::identity(d)); }

HermitianOperator HermitianOperator::zero(int d) { return HermitianOperator(Matrix(d, d)); }

HermitianOperator HermitianOperator::projector(const std::vector<Complex>& amplitudes) {
    double n2 = 0.0;
    for (const Complex& a : amplitudes) n2 += std::norm(a);
    if (n2 <= 0.0) throw InvalidInputError("projector from zero vector");
    Matrix m = outer(amplitudes);
    m *= Complex(1.0 / n2, 0.0);
    return HermitianOperator(std::move(m));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
    mat_ += other.mat_;
    return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
    mat_ -= other.mat_;
    return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
    mat_ *= Complex(s, 0.0);
    return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

double real_inner(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw DimensionError("real_inner dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += (a(i, j) * b(j, i)).real();
    return s;
}

HermitianOperator anticommutator(const HermitianOperator& a, const HermitianOperator& b) {
    return hermitian_part(a.mat() * b.mat() + b.mat() * a.mat());
}

HermitianOperator conjugate_by(const Matrix& u, const HermitianOperator& h) {
    return hermitian_part(u * h.mat() * u.adjoint());
}

HermitianOperator hermitian_part(const Matrix& m) {
    Matrix sym = m;
    sym += m.adjoint();
    sym *= Complex(0.5, 0.0);
    return HermitianOperator(std::move(sym), 1e30);
}

namespace {

constexpr int kMaxJacobiSweeps = 80;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianOperator& h) {
    const int d = h.dim();
    Matrix a = h.mat();
    Matrix v = Matrix::identity(d);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double target = 1e-15 * scale;

    int sweep = 0;
    for (; sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) break;
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const Complex phase = apq / r;
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double tau = (beta - alpha) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns: col_p' = c*col_p - conj(s*phase)*col_q ;  col_q' = s*phase*col_p + c*col_q
                const Complex sp = s * phase;
                for (int i = 0; i < d; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(sp) * aiq;
                    a(i, q) = sp * aip + c * aiq;
                }
                for (int j = 0; j < d; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - sp * aqj;
                    a(q, j) = std::conj(sp) * apj + c * aqj;
                }
                for (int i = 0; i < d; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(sp) * viq;
                    v(i, q) = sp * vip + c * viq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    const double residual = off_diagonal_norm(a);
    if (residual > 1e-12 * scale)
        throw ConvergenceError("Jacobi eigensolver did not converge, off-diagonal residual " +
                                   std::to_string(residual),
                               residual);

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(d);
    out.eigenvectors = Matrix(d, d);
    for (int col = 0; col < d; ++col) {
        const int src = order[col];
        out.eigenvalues[col] = a(src, src).real();
        double colmax = 0.0;
        for (int i = 0; i < d; ++i) colmax = std::max(colmax, std::abs(v(i, src)));
        // phase convention: first significant component real positive
        Complex phase = 1.0;
        for (int i = 0; i < d; ++i) {
            const Complex vi = v(i, src);
            if (std::abs(vi) > 1e-12 * colmax) {
                phase = std::conj(vi) / std::abs(vi);
                break;
            }
        }
        for (int i = 0; i < d; ++i) out.eigenvectors(i, col) = v(i, src) * phase;
    }
    return out;
}

PsdResult psd_check(const HermitianOperator& h, double tol) {
    if (tol < 0.0) throw InvalidInputError("psd_check tolerance must be nonnegative");
    const EigenDecomposition eig = eig_hermitian(h);
    const double min_eig = eig.eigenvalues.front();
    return {min_eig >= -tol, min_eig};
}

namespace {

HermitianOperator reconstruct(const EigenDecomposition& eig, const std::vector<double>& values) {
    const int d = eig.eigenvectors.rows();
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < d; ++k)
                s += values[k] * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
            m(i, j) = s;
        }
    return hermitian_part(m);
}

}  // namespace

HermitianOperator sqrt_psd(const HermitianOperator& h) {
    const EigenDecomposition eig = eig_hermitian(h);
    std::vector<double> roots(eig.eigenvalues.size());
    for (size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < -1e-10)
            throw NotPsdError("sqrt_psd input has eigenvalue " + std::to_string(lam));
        roots[k] = std::sqrt(std::max(lam, 0.0));
    }
    return reconstruct(eig, roots);
}

HermitianOperator psd_power(const HermitianOperator& h, double p, double support_tol) {
    const EigenDecomposition eig = eig_hermitian(h);
    std::vector<double> powered(eig.eigenvalues.size());
    for (size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < -1e-10)
            throw NotPsdError("psd_power input has eigenvalue " + std::to_string(lam));
        powered[k] = (lam > support_tol) ? std::pow(lam, p) : 0.0;
    }
    return reconstruct(eig, powered);
}

int psd_rank(const HermitianOperator& h, double rel_tol) {
    const EigenDecomposition eig = eig_hermitian(h);
    double largest = 0.0;
    for (double lam : eig.eigenvalues) largest = std::max(largest, std::abs(lam));
    if (largest == 0.0) return 0;
    int rank = 0;
    for (double lam : eig.eigenvalues)
        if (std::abs(lam) > rel_tol * largest) ++rank;
    return rank;
}

double fidelity(const HermitianOperator& rho, const HermitianOperator& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionError("fidelity dimension mismatch");
    if (!psd_check(rho, 1e-10).is_psd) throw NotPsdError("fidelity: rho not PSD");
    if (!psd_check(sigma, 1e-10).is_psd) throw NotPsdError("fidelity: sigma not PSD");
    if (rho.trace() > 1.0 + 1e-9 || sigma.trace() > 1.0 + 1e-9)
        throw InvalidInputError("fidelity: inputs must have trace <= 1");
    const HermitianOperator root = sqrt_psd(rho);
    const HermitianOperator inner = hermitian_part(root.mat() * sigma.mat() * root.mat());
    const EigenDecomposition eig = eig_hermitian(inner);
    double s = 0.0;
    for (double lam : eig.eigenvalues) s += std::sqrt(std::max(lam, 0.0));
    return s * s;
}

const Matrix& pauli_x() {
    static const Matrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const Matrix& pauli_y() {
    static const Matrix m(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
    return m;
}

const Matrix& pauli_z() {
    static const Matrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

}  // namespace povmrand
