#include "extlim/int_matrix.hpp"

#include <stdexcept>

namespace extlim {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row literal");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, const std::vector<Int>& d) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
    return m;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& which) const {
    IntMatrix m(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, which[k]);
    return m;
}

IntMatrix IntMatrix::first_rows(std::size_t k) const {
    IntMatrix m(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Int& bkj = b(k, j);
                if (bkj != 0) m(i, j) += aik * bkj;
            }
        }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] = a.entries_[i] - b.entries_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] = -a.entries_[i];
    return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Int& v = a(i1, j1);
            if (v == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    if (b(i2, j2) != 0)
                        m(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * b(i2, j2);
        }
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

}  // namespace extlim
