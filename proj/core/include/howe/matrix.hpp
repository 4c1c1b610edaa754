#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace howe {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws on garbage.
Rational parse_rational(const std::string& text);

/// Always renders as "p/q" (q >= 1).
std::string format_rational(const Rational& value);

/// Dense matrix over Q. Row-major; all arithmetic exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix diagonal(const std::vector<Rational>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& scalar);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Rational& s) { return lhs *= s; }
    friend Matrix operator*(const Rational& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs);
    Matrix operator-() const;

    Matrix transpose() const;
    bool is_zero() const;
    Matrix power(unsigned k) const;

    /// Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const;
    /// Submatrix picking the given rows and columns.
    Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    /// Row-major flattening into an (rows*cols) x 1 column.
    Matrix vectorize() const;
    static Matrix unvectorize(const Matrix& column, std::size_t rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix commutator(const Matrix& a, const Matrix& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : A x = 0} as the columns of the result (cols may be 0).
Matrix null_space(const Matrix& a);

/// One solution of A x = b (b may have several columns), free variables set to 0.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& a);

/// Column space basis (a subset of the columns of `a`).
Matrix column_basis(const Matrix& a);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix via congruence diagonalization.
Inertia inertia(const Matrix& symmetric);

std::string to_string(const Matrix& m);

} // namespace howe
