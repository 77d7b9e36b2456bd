// The ring of operations O_F = prod_H Q[c_H], its Euler classes, and elements
// of O_F / E^{-1}O_F in germ form.
//
// An Euler class c^v is a finite-support exponent function; it is a graded
// operator rather than a ring element since its degree varies per component,
// and the types keep that distinction. An OFElement is a finite list of
// homogeneous pieces, each piece a degree with a germ of rational
// coefficients; the coefficient at index k multiplies c_k^{-degree/2}.
#pragma once

#include <o2alg/germ.hpp>
#include <o2alg/monomial.hpp>
#include <o2alg/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace o2alg {

class EulerClass {
  public:
    EulerClass() = default;
    explicit EulerClass(std::map<int, int> v) : v_(std::move(v)) {
        for (auto it = v_.begin(); it != v_.end();) {
            if (it->first < 1 || it->second < 0)
                throw std::invalid_argument("euler class: bad exponent entry");
            it = (it->second == 0) ? v_.erase(it) : std::next(it);
        }
    }

    int at(int k) const {
        auto it = v_.find(k);
        return it == v_.end() ? 0 : it->second;
    }
    const std::map<int, int>& support() const { return v_; }
    bool is_one() const { return v_.empty(); }
    int total() const {
        int t = 0;
        for (const auto& [_, e] : v_) t += e;
        return t;
    }

    // c^v c^w = c^{v+w}
    friend EulerClass operator*(const EulerClass& a, const EulerClass& b) {
        std::map<int, int> v = a.v_;
        for (const auto& [k, e] : b.v_) v[k] += e;
        return EulerClass(std::move(v));
    }
    // c^{v-w} when w <= v pointwise.
    friend EulerClass quotient(const EulerClass& a, const EulerClass& b) {
        std::map<int, int> v = a.v_;
        for (const auto& [k, e] : b.v_) {
            v[k] -= e;
            if (v[k] < 0)
                throw std::invalid_argument("euler quotient: not divisible");
        }
        return EulerClass(std::move(v));
    }
    friend bool operator==(const EulerClass& a, const EulerClass& b) {
        return a.v_ == b.v_;
    }
    bool divides(const EulerClass& b) const {
        for (const auto& [k, e] : v_)
            if (b.at(k) < e) return false;
        return true;
    }

  private:
    std::map<int, int> v_;
};

// A complex SO(2)-representation with no trivial summand: a multiset of
// characters z^{n_j}, n_j >= 1.
class AdmissibleRep {
  public:
    AdmissibleRep() = default;
    explicit AdmissibleRep(std::vector<int> chars) : chars_(std::move(chars)) {
        for (int n : chars_)
            if (n < 1)
                throw std::invalid_argument(
                    "admissible representation: characters must be >= 1");
        std::sort(chars_.begin(), chars_.end());
    }

    const std::vector<int>& chars() const { return chars_; }
    int complex_dim() const { return static_cast<int>(chars_.size()); }
    bool is_zero() const { return chars_.empty(); }

    friend AdmissibleRep direct_sum(const AdmissibleRep& a, const AdmissibleRep& b) {
        std::vector<int> c = a.chars_;
        c.insert(c.end(), b.chars_.begin(), b.chars_.end());
        return AdmissibleRep(std::move(c));
    }
    friend bool operator==(const AdmissibleRep& a, const AdmissibleRep& b) {
        return a.chars_ == b.chars_;
    }

  private:
    std::vector<int> chars_;
};

// dim_C V^{C_k} = #{j : k divides n_j}.
inline EulerClass dimension_function(const AdmissibleRep& v) {
    std::map<int, int> e;
    for (int n : v.chars())
        for (int k = 1; k <= n; ++k)
            if (n % k == 0) ++e[k];
    return EulerClass(std::move(e));
}

// Element of O_F or E^{-1}O_F.
class OFElement {
  public:
    OFElement() = default;
    explicit OFElement(std::map<int, Germ<Rat>> pieces) : pieces_(std::move(pieces)) {
        normalize();
    }
    // A single homogeneous piece.
    OFElement(int degree, Germ<Rat> coeffs) {
        pieces_.emplace(degree, std::move(coeffs));
        normalize();
    }
    static OFElement one() { return OFElement(0, Germ<Rat>(Rat(1))); }
    static OFElement zero() { return OFElement(); }

    const std::map<int, Germ<Rat>>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }
    bool homogeneous() const { return pieces_.size() <= 1; }

    // Laurent polynomial at component k, as degree -> coefficient.
    std::map<int, Rat> poly_at(int k) const {
        std::map<int, Rat> p;
        for (const auto& [d, g] : pieces_)
            if (sgn(g.at(k)) != 0) p[d] = g.at(k);
        return p;
    }
    std::map<int, Rat> poly_generic() const {
        std::map<int, Rat> p;
        for (const auto& [d, g] : pieces_)
            if (sgn(g.generic()) != 0) p[d] = g.generic();
        return p;
    }
    std::set<int> relevant_indices() const {
        std::set<int> out;
        for (const auto& [_, g] : pieces_)
            for (const auto& [k, __] : g.exceptional()) out.insert(k);
        return out;
    }

    // Ring membership: O_F needs all degrees <= 0; E^{-1}O_F permits positive
    // degrees only with finite support (the generic coefficient must vanish).
    bool valid_for(PolyRing ring) const {
        for (const auto& [d, g] : pieces_) {
            if (d % 2 != 0) return false;
            if (ring == PolyRing::Poly && d > 0) return false;
            if (ring == PolyRing::Laurent && d > 0 && sgn(g.generic()) != 0)
                return false;
        }
        return true;
    }

    friend OFElement operator+(const OFElement& a, const OFElement& b) {
        std::map<int, Germ<Rat>> p = a.pieces_;
        for (const auto& [d, g] : b.pieces_) {
            auto it = p.find(d);
            if (it == p.end())
                p.emplace(d, g);
            else
                it->second = Germ<Rat>::zip(
                    it->second, g,
                    [](const Rat& x, const Rat& y) { return Rat(x + y); });
        }
        return OFElement(std::move(p));
    }
    friend OFElement operator*(const OFElement& a, const OFElement& b) {
        std::map<int, Germ<Rat>> p;
        for (const auto& [d1, g1] : a.pieces_)
            for (const auto& [d2, g2] : b.pieces_) {
                auto prod = Germ<Rat>::zip(
                    g1, g2, [](const Rat& x, const Rat& y) { return Rat(x * y); });
                auto it = p.find(d1 + d2);
                if (it == p.end())
                    p.emplace(d1 + d2, prod);
                else
                    it->second = Germ<Rat>::zip(
                        it->second, prod,
                        [](const Rat& x, const Rat& y) { return Rat(x + y); });
            }
        return OFElement(std::move(p));
    }
    OFElement scaled(const Rat& q) const {
        std::map<int, Germ<Rat>> p;
        for (const auto& [d, g] : pieces_)
            p.emplace(d, g.map([&q](const Rat& x) { return Rat(x * q); }));
        return OFElement(std::move(p));
    }

    // Reassembles an element from component polynomials plus the generic one.
    static OFElement from_component_polys(
        const std::map<int, std::map<int, Rat>>& comp,
        const std::map<int, Rat>& generic) {
        std::set<int> degrees;
        for (const auto& [d, _] : generic) degrees.insert(d);
        for (const auto& [_, p] : comp)
            for (const auto& [d, __] : p) degrees.insert(d);
        std::map<int, Germ<Rat>> pieces;
        for (int d : degrees) {
            auto git = generic.find(d);
            Germ<Rat> g(git == generic.end() ? Rat(0) : git->second);
            for (const auto& [k, p] : comp) {
                auto it = p.find(d);
                g.set(k, it == p.end() ? Rat(0) : it->second);
            }
            pieces.emplace(d, std::move(g));
        }
        return OFElement(std::move(pieces));
    }

    // Componentwise multiplication by c^{sign * v}; shifts the degree of the
    // coefficient at index k by -2 * sign * v(k).
    OFElement euler_shift(const EulerClass& v, int sign) const {
        std::set<int> ks = relevant_indices();
        for (const auto& [k, _] : v.support()) ks.insert(k);
        std::map<int, std::map<int, Rat>> comp;
        for (int k : ks) {
            std::map<int, Rat> pk;
            for (const auto& [d, c] : poly_at(k)) pk[d - 2 * sign * v.at(k)] = c;
            comp[k] = std::move(pk);
        }
        return from_component_polys(comp, poly_generic());
    }

    friend bool operator==(const OFElement& a, const OFElement& b) {
        return a.pieces_ == b.pieces_;
    }

  private:
    void normalize() {
        for (auto it = pieces_.begin(); it != pieces_.end();) {
            bool zero = is_zero_germ(it->second);
            it = zero ? pieces_.erase(it) : std::next(it);
        }
    }
    static bool is_zero_germ(const Germ<Rat>& g) {
        if (sgn(g.generic()) != 0) return false;
        for (const auto& [_, v] : g.exceptional())
            if (sgn(v) != 0) return false;
        return true;
    }

    std::map<int, Germ<Rat>> pieces_;
};

}  // namespace o2alg
