// Graded rational vector spaces and their W-equivariant versions.
//
// W is the group of order two. Since Q[W] is semisimple with idempotents
// (1 +- w)/2, a W-module is stored as its two eigenspaces; w-fixed points and
// equivariant homs become projections instead of linear solves.
#pragma once

#include <o2alg/qlinalg.hpp>

#include <map>
#include <stdexcept>

namespace o2alg {

class GradedVec {
  public:
    GradedVec() = default;
    explicit GradedVec(std::map<int, int> dims) : dims_(std::move(dims)) {
        normalize();
    }
    static GradedVec line(int degree, int dim = 1) {
        GradedVec v;
        v.set(degree, dim);
        return v;
    }

    int dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }
    void set(int degree, int d) {
        if (d < 0) throw std::invalid_argument("negative dimension");
        if (d == 0)
            dims_.erase(degree);
        else
            dims_[degree] = d;
    }
    const std::map<int, int>& dims() const { return dims_; }
    int total() const {
        int t = 0;
        for (const auto& [_, d] : dims_) t += d;
        return t;
    }
    bool empty() const { return dims_.empty(); }

    GradedVec shifted(int t) const {
        GradedVec v;
        for (const auto& [q, d] : dims_) v.set(q + t, d);
        return v;
    }

    friend GradedVec operator+(const GradedVec& a, const GradedVec& b) {
        GradedVec v = a;
        for (const auto& [q, d] : b.dims_) v.set(q, v.dim(q) + d);
        return v;
    }
    friend GradedVec tensor(const GradedVec& a, const GradedVec& b) {
        GradedVec v;
        for (const auto& [qmain, d1] : a.dims_)
            for (const auto& [q2, d2] : b.dims_)
                v.set(qmain + q2, v.dim(qmain + q2) + d1 * d2);
        return v;
    }
    // dim hom(a, b)_t = sum_q dim a_q * dim b_{q+t}.
    friend GradedVec hom_dims(const GradedVec& a, const GradedVec& b) {
        GradedVec v;
        for (const auto& [qa, da] : a.dims_)
            for (const auto& [qb, db] : b.dims_)
                v.set(qb - qa, v.dim(qb - qa) + da * db);
        return v;
    }

    friend bool operator==(const GradedVec& a, const GradedVec& b) {
        return a.dims_ == b.dims_;
    }
    friend bool operator!=(const GradedVec& a, const GradedVec& b) {
        return !(a == b);
    }

  private:
    void normalize() {
        for (auto it = dims_.begin(); it != dims_.end();) {
            if (it->second < 0) throw std::invalid_argument("negative dimension");
            it = (it->second == 0) ? dims_.erase(it) : std::next(it);
        }
    }
    std::map<int, int> dims_;
};

// W-module as eigenspace pair: plus = fixed part, minus = sign part.
struct WVec {
    GradedVec plus;
    GradedVec minus;

    GradedVec underlying() const { return plus + minus; }
    int dim(int q) const { return plus.dim(q) + minus.dim(q); }
    int total() const { return plus.total() + minus.total(); }
    bool empty() const { return plus.empty() && minus.empty(); }

    static WVec trivial(GradedVec v) { return WVec{std::move(v), {}}; }
    static WVec sign(GradedVec v) { return WVec{{}, std::move(v)}; }
    // Q[W] itself in a given degree: one fixed and one sign line.
    static WVec group_ring(int degree) {
        return WVec{GradedVec::line(degree), GradedVec::line(degree)};
    }

    WVec shifted(int t) const { return WVec{plus.shifted(t), minus.shifted(t)}; }

    friend WVec operator+(const WVec& a, const WVec& b) {
        return WVec{a.plus + b.plus, a.minus + b.minus};
    }
    // Diagonal action: (+)(+) and (-)(-) land in (+), mixed lands in (-).
    friend WVec tensor(const WVec& a, const WVec& b) {
        return WVec{tensor(a.plus, b.plus) + tensor(a.minus, b.minus),
                    tensor(a.plus, b.minus) + tensor(a.minus, b.plus)};
    }
    // Conjugation action on hom: fixed part pairs like eigenspaces.
    friend WVec hom_w(const WVec& a, const WVec& b) {
        return WVec{hom_dims(a.plus, b.plus) + hom_dims(a.minus, b.minus),
                    hom_dims(a.plus, b.minus) + hom_dims(a.minus, b.plus)};
    }

    friend bool operator==(const WVec& a, const WVec& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
    friend bool operator!=(const WVec& a, const WVec& b) { return !(a == b); }
};

inline GradedVec w_fixed(const WVec& v) { return v.plus; }

// Builds the eigenspace decomposition of (Q^n, w) from an explicit involution
// matrix; the conversion promised alongside the eigenspace storage decision.
struct WBasis {
    QMatrix plus_basis;   // rows span the (+1)-eigenspace
    QMatrix minus_basis;  // rows span the (-1)-eigenspace
};

inline WBasis w_eigenbasis(const QMatrix& involution) {
    if (involution.rows() != involution.cols())
        throw std::invalid_argument("involution must be square");
    if (!(involution * involution == QMatrix::identity(involution.rows())))
        throw std::invalid_argument("matrix is not an involution");
    std::size_t n = involution.rows();
    QMatrix id = QMatrix::identity(n);
    // ker(w - 1) and ker(w + 1).
    auto kplus = (involution - id).kernel_basis();
    auto kminus = (involution + id).kernel_basis();
    WBasis out;
    out.plus_basis = QMatrix(kplus.size(), n);
    for (std::size_t i = 0; i < kplus.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out.plus_basis(i, j) = kplus[i][j];
    out.minus_basis = QMatrix(kminus.size(), n);
    for (std::size_t i = 0; i < kminus.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out.minus_basis(i, j) = kminus[i][j];
    return out;
}

}  // namespace o2alg
