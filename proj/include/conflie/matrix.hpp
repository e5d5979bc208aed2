#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "conflie/rational.hpp"

namespace conflie {

// Dense rational matrix, row major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(std::size_t n);
    static Mat diagonal(const Vec& d);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    bool operator==(const Mat& o) const = default;
    bool is_zero() const;

    // Rows of o appended below.
    Mat vstack(const Mat& o) const;

    // Flattened row-major entries, e.g. to treat operators as vectors.
    Vec flatten() const { return a_; }
    static Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

private:
    std::size_t rows_, cols_;
    Vec a_;
};

Mat bracket(const Mat& a, const Mat& b);  // ab - ba
Scalar trace(const Mat& m);

struct RrefResult {
    Mat mat;                         // zero rows removed
    std::vector<std::size_t> pivots; // pivot column per row, strictly increasing
};

// Reduced row echelon form with positional pivoting: leftmost nonzero
// column, first eligible row.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of {x : m x = 0}, rows of the result, in RREF.
Mat kernel_basis(const Mat& m);

// Particular solution of m x = b with free variables set to zero, picking
// pivot columns left to right. Empty optional if inconsistent.
bool solve(const Mat& m, const Vec& b, Vec& out);

}  // namespace conflie
