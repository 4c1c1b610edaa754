#include "howe/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace howe {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: " + text);
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
    for (auto& x : data_)
        x *= scalar;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw std::invalid_argument("matrix shape mismatch in *");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (sgn(rhs(k, j)) != 0)
                    out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_)
        x = -x;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::power(unsigned k) const {
    if (!square())
        throw std::invalid_argument("power of non-square matrix");
    Matrix out = identity(rows_);
    for (unsigned i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j)
            out(i, j) = (*this)(i, first + j);
    return out;
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

Matrix Matrix::vectorize() const {
    Matrix out(rows_ * cols_, 1);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out(k, 0) = data_[k];
    return out;
}

Matrix Matrix::unvectorize(const Matrix& column, std::size_t rows, std::size_t cols) {
    if (column.rows() != rows * cols || column.cols() != 1)
        throw std::invalid_argument("unvectorize shape mismatch");
    Matrix out(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k)
        out.data_[k] = column(k, 0);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix out(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty())
        return {};
    const std::size_t r = blocks.front().rows();
    std::size_t c = 0;
    for (const auto& b : blocks) {
        if (b.rows() != r)
            throw std::invalid_argument("hstack row mismatch");
        c += b.cols();
    }
    Matrix out(r, c);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, c0 + j) = b(i, j);
        c0 += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty())
        return {};
    const std::size_t c = blocks.front().cols();
    std::size_t r = 0;
    for (const auto& b : blocks) {
        if (b.cols() != c)
            throw std::invalid_argument("vstack column mismatch");
        r += b.rows();
    }
    Matrix out(r, c);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < c; ++j)
                out(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0)
                continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (sgn(m(row, j)) != 0)
                    m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix null_space(const Matrix& a) {
    Matrix r = a;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix basis(a.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], k) = -r(i, free[k]);
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve shape mismatch");
    Matrix aug = hstack({a, b});
    const auto pivots = rref(aug);
    for (auto p : pivots)
        if (p >= a.cols())
            return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[i], j) = aug(i, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& a) {
    if (!a.square())
        throw std::domain_error("inverse of non-square matrix");
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x || rank(a) != a.rows())
        throw std::domain_error("singular matrix");
    return *x;
}

Matrix column_basis(const Matrix& a) {
    Matrix r = a;
    const auto pivots = rref(r);
    Matrix out(a.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i)
            out(i, k) = a(i, pivots[k]);
    return out;
}

Inertia inertia(const Matrix& symmetric) {
    if (!symmetric.square() || !(symmetric == symmetric.transpose()))
        throw std::invalid_argument("inertia needs a symmetric matrix");
    Matrix a = symmetric;
    const std::size_t n = a.rows();
    Inertia out;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && sgn(a(i, i)) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // zero diagonal on the remaining block: use e_i + e_j for an off-diagonal entry
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && sgn(a(i, j)) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n)
                break;
            for (std::size_t k = 0; k < n; ++k)
                a(pi, k) += a(pj, k);
            for (std::size_t k = 0; k < n; ++k)
                a(k, pi) += a(k, pj);
            p = pi;
        }
        const Rational pivot = a(p, p);
        (sgn(pivot) > 0 ? out.positive : out.negative)++;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || sgn(a(i, p)) == 0)
                continue;
            const Rational f = a(i, p) / pivot;
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j])
                    a(i, j) -= f * a(p, j);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i])
                a(p, i) = a(i, p) = 0;
    }
    out.zero = static_cast<int>(n) - out.positive - out.negative;
    return out;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j).get_str();
    }
    os << ']';
    return os.str();
}

} // namespace howe
