// Graded matrices over Q[c] and Q[c,c^-1], c of degree -2, and their Smith
// normal form.
//
// A homogeneous element of either ring is a monomial q*c^e, so a graded matrix
// is determined by its rational coefficient grid together with assigned row
// and column degrees: the entry (i,j) of a degree-t map from (+)_j S^{s_j} R
// to (+)_i S^{r_i} R is forced to be the monomial with exponent
// (r_i - s_j - t)/2. Row and column operations act on coefficients alone with
// the exponents tracked through the degree vectors, which keeps the whole
// Smith computation in exact rational arithmetic.
#pragma once

#include <o2alg/rational.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace o2alg {

enum class PolyRing { Poly, Laurent };

// Homogeneous element of a free graded module: degree plus one rational
// coefficient per generator; the c-exponent of coordinate j is forced to be
// (gen_deg_j - degree)/2.
struct FreeElt {
    int degree = 0;
    std::vector<Rat> coords;
};

class MonoMat {
  public:
    MonoMat() = default;
    MonoMat(PolyRing ring, std::vector<int> row_degs, std::vector<int> col_degs,
            int shift = 0)
        : ring_(ring),
          row_degs_(std::move(row_degs)),
          col_degs_(std::move(col_degs)),
          shift_(shift),
          a_(row_degs_.size(), std::vector<Rat>(col_degs_.size(), Rat(0))) {}

    static MonoMat identity(PolyRing ring, std::vector<int> degs) {
        MonoMat m(ring, degs, degs);
        for (std::size_t i = 0; i < degs.size(); ++i) m.a_[i][i] = 1;
        return m;
    }

    PolyRing ring() const { return ring_; }
    std::size_t rows() const { return row_degs_.size(); }
    std::size_t cols() const { return col_degs_.size(); }
    int shift() const { return shift_; }
    const std::vector<int>& row_degs() const { return row_degs_; }
    const std::vector<int>& col_degs() const { return col_degs_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    // Twice the c-exponent of entry (i,j); integral exponents are even here.
    int exponent2(std::size_t i, std::size_t j) const {
        return row_degs_[i] - col_degs_[j] - shift_;
    }
    bool entry_allowed(std::size_t i, std::size_t j) const {
        int e2 = exponent2(i, j);
        if (e2 % 2 != 0) return false;
        return ring_ == PolyRing::Laurent || e2 >= 0;
    }

    // Degree-homogeneity validation; returns the offending entry if any.
    std::optional<std::pair<std::size_t, std::size_t>> invalid_entry() const {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (sgn(a_[i][j]) != 0 && !entry_allowed(i, j))
                    return std::make_pair(i, j);
        return std::nullopt;
    }
    void check_valid() const {
        if (auto bad = invalid_entry())
            throw std::invalid_argument("degree-inconsistent entry at (" +
                                        std::to_string(bad->first) + "," +
                                        std::to_string(bad->second) + ")");
    }

    bool is_zero() const {
        for (const auto& r : a_)
            for (const auto& x : r)
                if (sgn(x) != 0) return false;
        return true;
    }

    FreeElt apply(const FreeElt& x) const {
        if (x.coords.size() != cols())
            throw std::invalid_argument("apply: coordinate count mismatch");
        FreeElt y;
        y.degree = x.degree + shift_;
        y.coords.assign(rows(), Rat(0));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (sgn(a_[i][j]) != 0) y.coords[i] += a_[i][j] * x.coords[j];
        return y;
    }

    friend MonoMat operator*(const MonoMat& x, const MonoMat& y) {
        if (x.cols() != y.rows() || x.col_degs_ != y.row_degs_)
            throw std::invalid_argument("monomial product degree mismatch");
        MonoMat z(x.ring_, x.row_degs_, y.col_degs_, x.shift_ + y.shift_);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t k = 0; k < x.cols(); ++k) {
                if (sgn(x(i, k)) == 0) continue;
                for (std::size_t j = 0; j < y.cols(); ++j)
                    z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }

    friend bool operator==(const MonoMat& x, const MonoMat& y) {
        return x.row_degs_ == y.row_degs_ && x.col_degs_ == y.col_degs_ &&
               x.shift_ == y.shift_ && x.a_ == y.a_;
    }

    // Elementary operations; exponents of the implied monomial multiplier are
    // checked so Poly transforms stay inside Q[c].
    void swap_rows(std::size_t i, std::size_t k) {
        std::swap(a_[i], a_[k]);
        std::swap(row_degs_[i], row_degs_[k]);
    }
    void swap_cols(std::size_t j, std::size_t l) {
        for (auto& r : a_) std::swap(r[j], r[l]);
        std::swap(col_degs_[j], col_degs_[l]);
    }
    void scale_row(std::size_t i, const Rat& q) {
        for (auto& x : a_[i]) x *= q;
    }
    void scale_col(std::size_t j, const Rat& q) {
        for (auto& r : a_) r[j] *= q;
    }
    // row_i += q * c^{(r_i - r_k)/2} * row_k
    void row_axpy(std::size_t i, std::size_t k, const Rat& q) {
        int e2 = row_degs_[i] - row_degs_[k];
        if (e2 % 2 != 0 || (ring_ == PolyRing::Poly && e2 < 0))
            throw std::logic_error("illegal row operation");
        for (std::size_t j = 0; j < cols(); ++j) a_[i][j] += q * a_[k][j];
    }
    // col_j += q * c^{(s_l - s_j)/2} * col_l
    void col_axpy(std::size_t j, std::size_t l, const Rat& q) {
        int e2 = col_degs_[l] - col_degs_[j];
        if (e2 % 2 != 0 || (ring_ == PolyRing::Poly && e2 < 0))
            throw std::logic_error("illegal column operation");
        for (auto& r : a_) r[j] += q * r[l];
    }

    MonoMat submatrix_cols(const std::vector<std::size_t>& js) const {
        std::vector<int> degs;
        for (auto j : js) degs.push_back(col_degs_[j]);
        MonoMat m(ring_, row_degs_, degs, shift_);
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t jj = 0; jj < js.size(); ++jj)
                m(i, jj) = a_[i][js[jj]];
        return m;
    }

    static MonoMat hstack(const MonoMat& x, const MonoMat& y) {
        if (x.row_degs_ != y.row_degs_ || x.shift_ != y.shift_)
            throw std::invalid_argument("hstack degree mismatch");
        std::vector<int> cd = x.col_degs_;
        cd.insert(cd.end(), y.col_degs_.begin(), y.col_degs_.end());
        MonoMat z(x.ring_, x.row_degs_, cd, x.shift_);
        for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
            for (std::size_t j = 0; j < y.cols(); ++j) z(i, x.cols() + j) = y(i, j);
        }
        return z;
    }

  private:
    PolyRing ring_ = PolyRing::Poly;
    std::vector<int> row_degs_, col_degs_;
    int shift_ = 0;
    std::vector<std::vector<Rat>> a_;
};

// Smith normal form data: u * m * v == d with u, v invertible over the ring,
// d diagonal with monic monomial invariant factors in divisibility order.
struct SmithForm {
    MonoMat d;
    MonoMat u, u_inv;  // u : target -> canonical target, u_inv its inverse
    MonoMat v, v_inv;  // v : canonical source -> source
    std::size_t rank = 0;
    // Invariant-factor exponents e (factor c^e), ascending; size == rank.
    std::vector<int> factor_exponents;
};

inline SmithForm smith(const MonoMat& m_in) {
    MonoMat m = m_in;
    m.check_valid();
    const std::size_t nr = m.rows(), nc = m.cols();
    MonoMat u = MonoMat::identity(m.ring(), m.row_degs());
    MonoMat uinv = u, v = MonoMat::identity(m.ring(), m.col_degs()), vinv = v;

    auto exp_of = [&m](std::size_t i, std::size_t j) { return m.exponent2(i, j) / 2; };

    for (std::size_t s = 0; s < std::min(nr, nc); ++s) {
        // Pivot: nonzero entry of minimal exponent in the remaining block.
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        for (std::size_t i = s; i < nr; ++i)
            for (std::size_t j = s; j < nc; ++j)
                if (sgn(m(i, j)) != 0 &&
                    (!piv || exp_of(i, j) < exp_of(piv->first, piv->second)))
                    piv = {i, j};
        if (!piv) break;
        if (piv->first != s) {
            m.swap_rows(s, piv->first);
            u.swap_rows(s, piv->first);
            uinv.swap_cols(s, piv->first);
        }
        if (piv->second != s) {
            m.swap_cols(s, piv->second);
            v.swap_cols(s, piv->second);
            vinv.swap_rows(s, piv->second);
        }
        // Minimality of the pivot exponent makes every multiplier polynomial.
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == s || sgn(m(i, s)) == 0) continue;
            Rat f = -m(i, s) / m(s, s);
            m.row_axpy(i, s, f);
            u.row_axpy(i, s, f);
            uinv.col_axpy(s, i, -f);
        }
        for (std::size_t j = 0; j < nc; ++j) {
            if (j == s || sgn(m(s, j)) == 0) continue;
            Rat f = -m(s, j) / m(s, s);
            m.col_axpy(j, s, f);
            v.col_axpy(j, s, f);
            vinv.row_axpy(s, j, -f);
        }
        // Monic pivot.
        Rat inv = 1 / m(s, s);
        m.scale_row(s, inv);
        u.scale_row(s, inv);
        uinv.scale_col(s, 1 / inv);
    }

    SmithForm out;
    out.rank = 0;
    while (out.rank < std::min(nr, nc) && sgn(m(out.rank, out.rank)) != 0)
        ++out.rank;
    // Ascending exponents give the divisibility chain (c^a | c^b iff a <= b).
    for (std::size_t i = 0; i < out.rank; ++i) {
        std::size_t best = i;
        for (std::size_t k = i + 1; k < out.rank; ++k)
            if (m.exponent2(k, k) < m.exponent2(best, best)) best = k;
        if (best != i) {
            m.swap_rows(i, best);
            u.swap_rows(i, best);
            uinv.swap_cols(i, best);
            m.swap_cols(i, best);
            v.swap_cols(i, best);
            vinv.swap_rows(i, best);
        }
    }
    for (std::size_t i = 0; i < out.rank; ++i)
        out.factor_exponents.push_back(m.exponent2(i, i) / 2);
    out.d = std::move(m);
    out.u = std::move(u);
    out.u_inv = std::move(uinv);
    out.v = std::move(v);
    out.v_inv = std::move(vinv);
    return out;
}

// Kernel of a free-module map: the columns of v past the rank.
inline std::vector<FreeElt> syzygies(const MonoMat& m) {
    SmithForm s = smith(m);
    std::vector<FreeElt> out;
    for (std::size_t j = s.rank; j < m.cols(); ++j) {
        FreeElt e;
        e.degree = s.v.col_degs()[j];
        e.coords.reserve(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) e.coords.push_back(s.v(i, j));
        out.push_back(std::move(e));
    }
    return out;
}

// Column reduction by ring-invertible column operations only; preserves the
// column span inside the ambient free module. Nonzero result columns are a
// free basis of that span.
struct ColumnReduction {
    MonoMat reduced;
    MonoMat v, v_inv;  // reduced == m * v, m == reduced * v_inv
    std::vector<std::size_t> pivot_cols;
};

inline ColumnReduction column_reduce(const MonoMat& m_in) {
    MonoMat m = m_in;
    m.check_valid();
    MonoMat v = MonoMat::identity(m.ring(), m.col_degs()), vinv = v;
    std::vector<bool> used(m.cols(), false);
    ColumnReduction out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::optional<std::size_t> pcol;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (used[j] || sgn(m(r, j)) == 0) continue;
            if (!pcol || m.exponent2(r, j) < m.exponent2(r, *pcol)) pcol = j;
        }
        if (!pcol) continue;
        std::size_t p = *pcol;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j == p || used[j] || sgn(m(r, j)) == 0) continue;
            Rat f = -m(r, j) / m(r, p);
            m.col_axpy(j, p, f);
            v.col_axpy(j, p, f);
            vinv.row_axpy(p, j, -f);
        }
        used[p] = true;
        out.pivot_cols.push_back(p);
    }
    out.reduced = std::move(m);
    out.v = std::move(v);
    out.v_inv = std::move(vinv);
    return out;
}

}  // namespace o2alg
