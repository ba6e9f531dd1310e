#include "apolab/matrix.hpp"

#include <stdexcept>

namespace apolab {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: need at least one row");
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<GaussianRational> ExactMatrix::row(std::size_t r) const {
    std::vector<GaussianRational> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& x = at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += x * o.at(k, c);
        }
    return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    ExactMatrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    ExactMatrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix s = *this;
    for (auto& x : s.a_) x = -x;
    return s;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<GaussianRational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

std::size_t ExactMatrix::rank() const {
    RowSpace space(cols_);
    for (std::size_t r = 0; r < rows_ && !space.full(); ++r) space.insert(row(r));
    return space.rank();
}

std::pair<ExactMatrix, std::vector<std::size_t>> ExactMatrix::rref() const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t sel = pr;
        while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != pr)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(m.at(sel, k), m.at(pr, k));
        GaussianRational inv = m.at(pr, c).inverse();
        for (std::size_t k = c; k < cols_; ++k) m.at(pr, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || m.at(r, c).is_zero()) continue;
            GaussianRational f = m.at(r, c);
            for (std::size_t k = c; k < cols_; ++k) m.at(r, k) -= f * m.at(pr, k);
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<std::vector<GaussianRational>> ExactMatrix::kernel_basis() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<GaussianRational> v(cols_);
        v[fc] = GaussianRational(1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m.at(pi, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<GaussianRational>> ExactMatrix::solve(
    const std::vector<GaussianRational>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    auto [m, pivots] = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    std::vector<GaussianRational> x(cols_);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = m.at(pi, cols_);
    return x;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    ExactMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = GaussianRational(1);
    }
    auto [m, pivots] = aug.rref();
    if (pivots.size() != cols_ || pivots.back() != cols_ - 1) return std::nullopt;
    ExactMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = m.at(r, cols_ + c);
    return inv;
}

bool RowSpace::insert(std::vector<GaussianRational> row) {
    if (row.size() != cols_) throw std::invalid_argument("row space arity mismatch");
    std::size_t c = 0;
    while (c < cols_) {
        if (row[c].is_zero()) {
            ++c;
            continue;
        }
        auto it = rows_.find(c);
        if (it == rows_.end()) break;
        const GaussianRational f = row[c];
        const auto& base = it->second;
        for (std::size_t k = c; k < cols_; ++k)
            if (!base[k].is_zero()) row[k] -= f * base[k];
        ++c;
    }
    if (c == cols_) return false;
    const GaussianRational inv = row[c].inverse();
    for (std::size_t k = c; k < cols_; ++k) row[k] *= inv;
    rows_.emplace(c, std::move(row));
    return true;
}

bool RowSpace::contains(std::vector<GaussianRational> row) const {
    if (row.size() != cols_) throw std::invalid_argument("row space arity mismatch");
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c].is_zero()) continue;
        auto it = rows_.find(c);
        if (it == rows_.end()) return false;
        const GaussianRational f = row[c];
        const auto& base = it->second;
        for (std::size_t k = c; k < cols_; ++k)
            if (!base[k].is_zero()) row[k] -= f * base[k];
    }
    return true;
}

}  // namespace apolab
