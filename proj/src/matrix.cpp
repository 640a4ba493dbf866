#include "povmrand/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "povmrand/errors.hpp"

namespace povmrand {

Matrix::Matrix(int rows, int cols, std::initializer_list<Complex> entries) : Matrix(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw DimensionError("matrix initializer size mismatch");
    size_t k = 0;
    for (const Complex& e : entries) data_[k++] = e;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& e : data_) s += std::norm(e);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const Complex& e : data_) m = std::max(m, std::abs(e));
    return m;
}

bool Matrix::all_finite() const {
    for (const Complex& e : data_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

bool Matrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool Matrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    Matrix p = adjoint() * (*this);
    p -= identity(rows_);
    return p.max_abs() <= tol;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix add shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sub shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (Complex& e : data_) e *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix multiply shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, Complex s) { return a *= s; }

Matrix ket(const std::vector<Complex>& amplitudes) {
    Matrix m(static_cast<int>(amplitudes.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = amplitudes[i];
    return m;
}

Matrix outer(const std::vector<Complex>& v) {
    const int d = static_cast<int>(v.size());
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

}  // namespace povmrand
