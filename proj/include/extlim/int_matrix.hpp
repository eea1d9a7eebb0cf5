#pragma once
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "extlim/numeric.hpp"

namespace extlim {

/// Dense arbitrary-precision integer matrix, row-major. Matrices act on
/// column vectors; lattices are column spans.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    /// Row-major literal, mainly for tests and fixtures.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix column(const std::vector<Int>& v);
    static IntMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    IntMatrix columns(const std::vector<std::size_t>& which) const;
    IntMatrix first_rows(std::size_t k) const;
    IntMatrix transpose() const;

    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    /// col_i += c * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    std::vector<Int> apply(const std::vector<Int>& x) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace extlim
