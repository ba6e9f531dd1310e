#pragma once

// Dense exact linear algebra over the Gaussian rationals: rank, reduced row
// echelon form, kernel bases, solving, inversion. Elimination pivots on the
// first nonzero entry in column order; with exact arithmetic the pivot choice
// only affects speed, never the result.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "apolab/scalars.hpp"

namespace apolab {

class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::vector<GaussianRational> row(std::size_t r) const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::size_t rank() const;

    /// Reduced row echelon form together with the pivot column list.
    std::pair<ExactMatrix, std::vector<std::size_t>> rref() const;

    /// Basis of the right kernel {v : Mv = 0}; vectors are exact and
    /// linearly independent, one per free column.
    std::vector<std::vector<GaussianRational>> kernel_basis() const;

    /// One exact solution of Mx = b (free variables set to zero), or nullopt
    /// if the system is inconsistent.
    std::optional<std::vector<GaussianRational>> solve(const std::vector<GaussianRational>& b) const;

    std::optional<ExactMatrix> inverse() const;

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

/// Incrementally maintained row space in echelon form. insert() reduces the
/// candidate against the current basis and reports whether the rank grew;
/// contains() tests membership without modifying the space.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }

    bool insert(std::vector<GaussianRational> row);
    bool contains(std::vector<GaussianRational> row) const;

private:
    std::size_t cols_;
    std::map<std::size_t, std::vector<GaussianRational>> rows_;  // lead column -> monic row
};

}  // namespace apolab
