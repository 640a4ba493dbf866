#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace povmrand {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Sized for d <= 16 problems; no view
/// machinery, plain value semantics throughout.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::initializer_list<Complex> entries);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix adjoint() const;
    Matrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(Complex s);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(Matrix a, Complex s);

/// Column ket as a d x 1 matrix helper.
Matrix ket(const std::vector<Complex>& amplitudes);
/// |v><v| from unnormalized amplitudes (not normalized here).
Matrix outer(const std::vector<Complex>& v);

}  // namespace povmrand
