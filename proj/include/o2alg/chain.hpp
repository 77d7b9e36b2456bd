// Rational chain complexes, plain and W-equivariant, with exact homology.
//
// A complex stores per-degree dimensions and differentials d_n : X_n -> X_{n-1}.
// The W-equivariant version is a pair of complexes, one per eigenspace, since
// the differential commutes with the W-action.
#pragma once

#include <o2alg/grading.hpp>
#include <o2alg/qlinalg.hpp>

#include <map>
#include <stdexcept>

namespace o2alg {

class ChainCx {
  public:
    ChainCx() = default;
    explicit ChainCx(GradedVec spaces) : spaces_(std::move(spaces)) {}
    ChainCx(GradedVec spaces, std::map<int, QMatrix> differentials)
        : spaces_(std::move(spaces)), d_(std::move(differentials)) {
        for (auto it = d_.begin(); it != d_.end();)
            it = it->second.is_zero() ? d_.erase(it) : std::next(it);
        check();
    }

    static ChainCx point(int degree, int dim = 1) {
        return ChainCx(GradedVec::line(degree, dim));
    }
    // The acyclic disk: identity Q -> Q in degrees (degree, degree-1).
    static ChainCx disk(int degree) {
        GradedVec v;
        v.set(degree, 1);
        v.set(degree - 1, 1);
        std::map<int, QMatrix> d;
        d[degree] = QMatrix::identity(1);
        return ChainCx(std::move(v), std::move(d));
    }

    const GradedVec& spaces() const { return spaces_; }
    int dim(int q) const { return spaces_.dim(q); }
    bool trivial_differential() const { return d_.empty(); }
    const std::map<int, QMatrix>& differentials() const { return d_; }

    QMatrix d(int n) const {
        auto it = d_.find(n);
        if (it != d_.end()) return it->second;
        return QMatrix(static_cast<std::size_t>(spaces_.dim(n - 1)),
                       static_cast<std::size_t>(spaces_.dim(n)));
    }

    GradedVec homology() const {
        GradedVec h;
        for (const auto& [q, _] : spaces_.dims()) {
            std::size_t dq = static_cast<std::size_t>(spaces_.dim(q));
            std::size_t rank_out = d(q).rank();
            std::size_t rank_in = d(q + 1).rank();
            h.set(q, static_cast<int>(dq - rank_out - rank_in));
        }
        return h;
    }

    ChainCx shifted(int t) const {
        std::map<int, QMatrix> d2;
        for (const auto& [n, m] : d_) d2[n + t] = m;
        return ChainCx(spaces_.shifted(t), std::move(d2));
    }

    friend ChainCx direct_sum(const ChainCx& a, const ChainCx& b) {
        GradedVec v = a.spaces_ + b.spaces_;
        std::map<int, QMatrix> d;
        for (const auto& [q, _] : v.dims()) {
            QMatrix da = a.d(q), db = b.d(q);
            if (da.is_zero() && db.is_zero()) continue;
            QMatrix m(da.rows() + db.rows(), da.cols() + db.cols());
            for (std::size_t i = 0; i < da.rows(); ++i)
                for (std::size_t j = 0; j < da.cols(); ++j) m(i, j) = da(i, j);
            for (std::size_t i = 0; i < db.rows(); ++i)
                for (std::size_t j = 0; j < db.cols(); ++j)
                    m(da.rows() + i, da.cols() + j) = db(i, j);
            d[q] = std::move(m);
        }
        return ChainCx(std::move(v), std::move(d));
    }

    friend bool operator==(const ChainCx& a, const ChainCx& b) {
        if (a.spaces_ != b.spaces_) return false;
        for (const auto& [q, _] : a.spaces_.dims())
            if (!(a.d(q) == b.d(q))) return false;
        return true;
    }

  private:
    void check() const {
        for (const auto& [n, m] : d_) {
            if (m.rows() != static_cast<std::size_t>(spaces_.dim(n - 1)) ||
                m.cols() != static_cast<std::size_t>(spaces_.dim(n)))
                throw std::invalid_argument("differential shape mismatch at degree " +
                                            std::to_string(n));
        }
        for (const auto& [n, m] : d_) {
            if (!(d(n - 1) * m).is_zero())
                throw std::invalid_argument("d*d != 0 at degree " + std::to_string(n));
        }
    }

    GradedVec spaces_;
    std::map<int, QMatrix> d_;
};

// W-equivariant complex: the differential respects the eigenspace splitting.
struct WChainCx {
    ChainCx plus;
    ChainCx minus;

    WChainCx() = default;
    WChainCx(ChainCx p, ChainCx m) : plus(std::move(p)), minus(std::move(m)) {}
    explicit WChainCx(const WVec& v) : plus(v.plus), minus(v.minus) {}

    static WChainCx trivial(ChainCx c) { return WChainCx{std::move(c), ChainCx()}; }
    static WChainCx group_ring(int degree) {
        return WChainCx{ChainCx::point(degree), ChainCx::point(degree)};
    }

    WVec spaces() const { return WVec{plus.spaces(), minus.spaces()}; }
    bool trivial_differential() const {
        return plus.trivial_differential() && minus.trivial_differential();
    }
    bool empty() const { return plus.spaces().empty() && minus.spaces().empty(); }

    WVec homology() const { return WVec{plus.homology(), minus.homology()}; }
    WChainCx shifted(int t) const { return WChainCx{plus.shifted(t), minus.shifted(t)}; }

    friend WChainCx direct_sum(const WChainCx& a, const WChainCx& b) {
        return WChainCx{direct_sum(a.plus, b.plus), direct_sum(a.minus, b.minus)};
    }
    friend bool operator==(const WChainCx& a, const WChainCx& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
    friend bool operator!=(const WChainCx& a, const WChainCx& b) { return !(a == b); }
};

// w-fixed points of a W-complex (the plus eigenspace).
inline ChainCx w_fixed(const WChainCx& c) { return c.plus; }

// Tensor over Q with diagonal W-action. Only needed for trivial-differential
// complexes in this library; general Koszul signs are out of scope here.
inline WChainCx tensor_trivial(const WChainCx& a, const WChainCx& b) {
    if (!a.trivial_differential() || !b.trivial_differential())
        throw std::invalid_argument("tensor_trivial: nonzero differentials");
    WVec t = tensor(a.spaces(), b.spaces());
    return WChainCx{ChainCx(t.plus), ChainCx(t.minus)};
}

}  // namespace o2alg
