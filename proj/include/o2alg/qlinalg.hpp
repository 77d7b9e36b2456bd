// Dense exact linear algebra over Q: rref, rank, kernels, solving, inverses,
// subspace operations. Matrices are small (desk scale), so everything is
// straightforward Gaussian elimination with exact pivoting.
#pragma once

#include <o2alg/rational.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace o2alg {

class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMatrix from_rows(std::vector<std::vector<Rat>> rows) {
        QMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows[0].size();
        for (const auto& r : rows)
            if (r.size() != m.cols_)
                throw std::invalid_argument("ragged matrix");
        m.a_ = std::move(rows);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    bool is_zero() const {
        for (const auto& r : a_)
            for (const auto& x : r)
                if (sgn(x) != 0) return false;
        return true;
    }

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = a_[i][j];
        return t;
    }

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        QMatrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (sgn(x(i, k)) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend QMatrix operator+(const QMatrix& x, const QMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        QMatrix z(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) = x(i, j) + y(i, j);
        return z;
    }
    friend QMatrix operator-(const QMatrix& x, const QMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix difference shape mismatch");
        QMatrix z(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) = x(i, j) - y(i, j);
        return z;
    }
    QMatrix scaled(const Rat& s) const {
        QMatrix z(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) z(i, j) = a_[i][j] * s;
        return z;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("apply: size mismatch");
        std::vector<Rat> out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(a_[i][j]) != 0) out[i] += a_[i][j] * v[j];
        return out;
    }

    // [x | y] side by side.
    static QMatrix hstack(const QMatrix& x, const QMatrix& y) {
        if (x.rows_ != y.rows_)
            throw std::invalid_argument("hstack row mismatch");
        QMatrix z(x.rows_, x.cols_ + y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) = x(i, j);
            for (std::size_t j = 0; j < y.cols_; ++j) z(i, x.cols_ + j) = y(i, j);
        }
        return z;
    }
    static QMatrix vstack(const QMatrix& x, const QMatrix& y) {
        if (x.cols_ != y.cols_)
            throw std::invalid_argument("vstack col mismatch");
        QMatrix z(x.rows_ + y.rows_, x.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) z(x.rows_ + i, j) = y(i, j);
        return z;
    }

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && sgn(a_[p][c]) == 0) ++p;
            if (p == rows_) continue;
            std::swap(a_[p], a_[r]);
            Rat inv = 1 / a_[r][c];
            for (std::size_t j = c; j < cols_; ++j) a_[r][j] *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || sgn(a_[i][c]) == 0) continue;
                Rat f = a_[i][c];
                for (std::size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        QMatrix m = *this;
        return m.rref().size();
    }

    // Basis of {x : Ax = 0}, one column vector per basis element.
    std::vector<std::vector<Rat>> kernel_basis() const {
        QMatrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rat>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<Rat> v(cols_, Rat(0));
            v[fc] = 1;
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                v[pivots[pi]] = -m(pi, fc);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of Ax = b if consistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
        if (b.size() != rows_)
            throw std::invalid_argument("solve: rhs size mismatch");
        QMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = a_[i][j];
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Rat> x(cols_, Rat(0));
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            x[pivots[pi]] = aug(pi, cols_);
        return x;
    }

    std::optional<QMatrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        QMatrix aug = hstack(*this, identity(rows_));
        auto pivots = aug.rref();
        if (pivots.size() != rows_) return std::nullopt;
        QMatrix inv(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rat>> a_;
};

// Span made canonical: rref of row vectors, zero rows dropped.
inline QMatrix row_space(const QMatrix& m) {
    QMatrix r = m;
    auto pivots = r.rref();
    QMatrix out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
    return out;
}

// Intersection of two row spans, as rows. Standard kernel construction on the
// stacked generators.
inline QMatrix row_space_intersection(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("intersection: ambient mismatch");
    if (a.rows() == 0 || b.rows() == 0) return QMatrix(0, a.cols());
    // x = u^T a = v^T b  <=>  [a^T | -b^T] (u,v)^T = 0.
    QMatrix stacked = QMatrix::hstack(a.transpose(), b.transpose().scaled(Rat(-1)));
    auto ker = stacked.kernel_basis();
    QMatrix rows(ker.size(), a.cols());
    for (std::size_t i = 0; i < ker.size(); ++i) {
        std::vector<Rat> u(ker[i].begin(), ker[i].begin() + a.rows());
        auto x = a.transpose().apply(u);
        for (std::size_t j = 0; j < a.cols(); ++j) rows(i, j) = x[j];
    }
    return row_space(rows);
}

// The pullback of two linear maps f : A -> C, g : B -> C into a common
// target: P = {(a, b) : f(a) = g(b)} together with the two projections,
// returned as a basis of P inside A (+) B.
struct LinearPullback {
    QMatrix basis;   // each row is a vector (a | b) spanning P
    QMatrix proj_a;  // dim A columns picked out of the basis rows
    QMatrix proj_b;
};

inline LinearPullback linear_pullback(const QMatrix& f, const QMatrix& g) {
    if (f.rows() != g.rows())
        throw std::invalid_argument("pullback: mismatched codomains");
    QMatrix stacked = QMatrix::hstack(f, g.scaled(Rat(-1)));
    auto ker = stacked.kernel_basis();
    LinearPullback out;
    out.basis = QMatrix(ker.size(), f.cols() + g.cols());
    out.proj_a = QMatrix(f.cols(), ker.size());
    out.proj_b = QMatrix(g.cols(), ker.size());
    for (std::size_t i = 0; i < ker.size(); ++i) {
        for (std::size_t j = 0; j < f.cols() + g.cols(); ++j)
            out.basis(i, j) = ker[i][j];
        for (std::size_t j = 0; j < f.cols(); ++j) out.proj_a(j, i) = ker[i][j];
        for (std::size_t j = 0; j < g.cols(); ++j)
            out.proj_b(j, i) = ker[i][f.cols() + j];
    }
    return out;
}

}  // namespace o2alg
