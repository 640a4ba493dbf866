#pragma once

#include <vector>

#include "povmrand/matrix.hpp"

namespace povmrand {

inline constexpr double kHermitianTol = 1e-12;

/// Dense complex Hermitian operator. Hermiticity is checked at construction
/// (tolerance 1e-12) and the stored matrix is exactly symmetrized so that
/// downstream arithmetic never drifts.
class HermitianOperator {
  public:
    explicit HermitianOperator(Matrix m, double tol = kHermitianTol);

    static HermitianOperator identity(int d);
    static HermitianOperator zero(int d);
    /// Projector |v><v| / <v|v> from unnormalized amplitudes.
    static HermitianOperator projector(const std::vector<Complex>& amplitudes);

    int dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }
    Complex operator()(int i, int j) const { return mat_(i, j); }
    double trace() const { return mat_.trace().real(); }
    double frobenius_norm() const { return mat_.frobenius_norm(); }

    HermitianOperator& operator+=(const HermitianOperator& other);
    HermitianOperator& operator-=(const HermitianOperator& other);
    HermitianOperator& operator*=(double s);

  private:
    Matrix mat_;
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double s, HermitianOperator a);

/// tr(a b), real by hermiticity.
double real_inner(const HermitianOperator& a, const HermitianOperator& b);
/// a b + b a, Hermitian for Hermitian inputs.
HermitianOperator anticommutator(const HermitianOperator& a, const HermitianOperator& b);
/// u h u^dagger for square u.
HermitianOperator conjugate_by(const Matrix& u, const HermitianOperator& h);
/// (m + m^dagger)/2 without a hermiticity check, for products known Hermitian
/// up to rounding.
HermitianOperator hermitian_part(const Matrix& m);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // columns, orthonormal
};

/// Cyclic complex Jacobi. Deterministic sweep order, eigenvalues sorted
/// ascending, eigenvector phases fixed so the first significant component of
/// each column is real positive.
EigenDecomposition eig_hermitian(const HermitianOperator& h);

struct PsdResult {
    bool is_psd;
    double min_eigenvalue;
};

PsdResult psd_check(const HermitianOperator& h, double tol);

/// PSD square root via eigendecomposition; eigenvalues in (-1e-10, 0) are
/// clamped to zero, anything below throws NotPsdError.
HermitianOperator sqrt_psd(const HermitianOperator& h);

/// h^p on the support: eigenvalues below support_tol are treated as zero
/// (mapped to zero even for negative p). Negative eigenvalues beyond
/// -support_tol throw.
HermitianOperator psd_power(const HermitianOperator& h, double p, double support_tol = 1e-12);

int psd_rank(const HermitianOperator& h, double rel_tol = 1e-8);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Accepts
/// subnormalized PSD inputs with trace <= 1 + 1e-9.
double fidelity(const HermitianOperator& rho, const HermitianOperator& sigma);

/// Pauli matrices for d=2 paths.
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();

}  // namespace povmrand
