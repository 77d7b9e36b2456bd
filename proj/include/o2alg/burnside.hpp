// The rational Burnside ring of O(2) as locally constant functions on the
// space of conjugacy classes of subgroups with finite Weyl group: the value
// at SO(2), the values at the dihedral classes D_{2k}, and the value at the
// limit point O(2) stored as the generic value of a germ.
//
// Also the rational Burnside rings of the finite dihedral subgroups in their
// idempotent basis, and the restriction maps along D_{2n} -> O(2).
#pragma once

#include <o2alg/germ.hpp>
#include <o2alg/rational.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace o2alg {

struct BurnsideElement {
    Rat so2;              // value at SO(2)
    Germ<Rat> dihedral;   // value at D_{2k}; generic = value at O(2)

    BurnsideElement() : so2(0), dihedral(Rat(0)) {}
    BurnsideElement(Rat s, Germ<Rat> d) : so2(std::move(s)), dihedral(std::move(d)) {}

    static BurnsideElement zero() { return BurnsideElement(); }
    static BurnsideElement one() {
        return BurnsideElement(Rat(1), Germ<Rat>(Rat(1)));
    }

    Rat at_dihedral(int k) const { return dihedral.at(k); }
    Rat at_o2() const { return dihedral.generic(); }

    friend BurnsideElement operator+(const BurnsideElement& a,
                                     const BurnsideElement& b) {
        return BurnsideElement(a.so2 + b.so2,
                               Germ<Rat>::zip(a.dihedral, b.dihedral,
                                              [](const Rat& x, const Rat& y) {
                                                  return Rat(x + y);
                                              }));
    }
    friend BurnsideElement operator-(const BurnsideElement& a,
                                     const BurnsideElement& b) {
        return BurnsideElement(a.so2 - b.so2,
                               Germ<Rat>::zip(a.dihedral, b.dihedral,
                                              [](const Rat& x, const Rat& y) {
                                                  return Rat(x - y);
                                              }));
    }
    friend BurnsideElement operator*(const BurnsideElement& a,
                                     const BurnsideElement& b) {
        return BurnsideElement(a.so2 * b.so2,
                               Germ<Rat>::zip(a.dihedral, b.dihedral,
                                              [](const Rat& x, const Rat& y) {
                                                  return Rat(x * y);
                                              }));
    }
    BurnsideElement scaled(const Rat& q) const {
        return BurnsideElement(so2 * q,
                               dihedral.map([&q](const Rat& x) { return Rat(x * q); }));
    }

    friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
        return a.so2 == b.so2 && a.dihedral == b.dihedral;
    }
    friend bool operator!=(const BurnsideElement& a, const BurnsideElement& b) {
        return !(a == b);
    }
};

// e_C: characteristic function of SO(2).
inline BurnsideElement e_cyclic() {
    return BurnsideElement(Rat(1), Germ<Rat>(Rat(0)));
}
// e_D = 1 - e_C. The lemma in the source misprints this as e_C - 1, which is
// not idempotent; every later use is consistent with 1 - e_C.
inline BurnsideElement e_dihedral() {
    return BurnsideElement(Rat(0), Germ<Rat>(Rat(1)));
}
// e_n: characteristic function of D_{2n}.
inline BurnsideElement e_n(int n) {
    if (n < 1) throw std::invalid_argument("e_n requires n >= 1");
    return BurnsideElement(Rat(0), Germ<Rat>({{n, Rat(1)}}, Rat(0)));
}
// f_n = e_D - sum_{k=1}^{n-1} e_k.
inline BurnsideElement f_n(int n) {
    if (n < 1) throw std::invalid_argument("f_n requires n >= 1");
    std::map<int, Rat> exc;
    for (int k = 1; k < n; ++k) exc.emplace(k, Rat(0));
    return BurnsideElement(Rat(0), Germ<Rat>(std::move(exc), Rat(1)));
}

// The Hasse square: an element is determined by its dihedral germ together
// with the corner (value at SO(2), value at O(2)); continuity makes the germ's
// limit equal the O(2) value.
struct HasseDecomposition {
    Germ<Rat> germ_part;          // (f(D_{2k}))_k
    std::pair<Rat, Rat> corner;   // (f(SO(2)), f(O(2)))

    bool compatible() const { return germ_part.generic() == corner.second; }
};

inline HasseDecomposition hasse_decompose(const BurnsideElement& f) {
    return HasseDecomposition{f.dihedral, {f.so2, f.dihedral.generic()}};
}

inline BurnsideElement hasse_assemble(const HasseDecomposition& h) {
    if (!h.compatible())
        throw std::invalid_argument(
            "hasse_assemble: germ limit disagrees with the O(2) corner value");
    return BurnsideElement(h.corner.first, h.germ_part);
}

// A(D_{2n}) (x) Q in the idempotent basis {e_{C_k}, e_{D_{2k}} : k | n}.
struct DihedralBurnside {
    int n = 1;
    // divisor k -> (coefficient of e_{C_k}, coefficient of e_{D_{2k}})
    std::map<int, std::pair<Rat, Rat>> coords;

    explicit DihedralBurnside(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("DihedralBurnside requires n >= 1");
        for (int k = 1; k <= n; ++k)
            if (n % k == 0) coords.emplace(k, std::make_pair(Rat(0), Rat(0)));
    }

    static DihedralBurnside one(int n) {
        DihedralBurnside x(n);
        for (auto& [k, c] : x.coords) c = {Rat(1), Rat(1)};
        return x;
    }
    static DihedralBurnside e_C(int n, int k) {
        DihedralBurnside x(n);
        x.coords.at(k).first = 1;
        return x;
    }
    static DihedralBurnside e_D(int n, int k) {
        DihedralBurnside x(n);
        x.coords.at(k).second = 1;
        return x;
    }

    friend DihedralBurnside operator+(const DihedralBurnside& a,
                                      const DihedralBurnside& b) {
        if (a.n != b.n) throw std::invalid_argument("mixed dihedral rings");
        DihedralBurnside x(a.n);
        for (auto& [k, c] : x.coords) {
            c.first = a.coords.at(k).first + b.coords.at(k).first;
            c.second = a.coords.at(k).second + b.coords.at(k).second;
        }
        return x;
    }
    friend DihedralBurnside operator*(const DihedralBurnside& a,
                                      const DihedralBurnside& b) {
        if (a.n != b.n) throw std::invalid_argument("mixed dihedral rings");
        DihedralBurnside x(a.n);
        for (auto& [k, c] : x.coords) {
            c.first = a.coords.at(k).first * b.coords.at(k).first;
            c.second = a.coords.at(k).second * b.coords.at(k).second;
        }
        return x;
    }
    friend bool operator==(const DihedralBurnside& a, const DihedralBurnside& b) {
        return a.n == b.n && a.coords == b.coords;
    }
    bool is_zero() const {
        for (const auto& [k, c] : coords)
            if (sgn(c.first) != 0 || sgn(c.second) != 0) return false;
        return true;
    }
};

// Restriction A(O(2)) -> A(D_{2n}^h) along the inclusion:
//   e_C |-> sum_{k|n} e_{C_k},  e_D |-> sum_{k|n} e_{D_{2k}},
//   e_k |-> e_{D_{2k}} if k | n, else 0.
// Pointwise: e_{C_k} reads the SO(2) value, e_{D_{2k}} reads the D_{2k} value.
inline DihedralBurnside restrict_to(const BurnsideElement& f, int n) {
    DihedralBurnside x(n);
    for (auto& [k, c] : x.coords) {
        c.first = f.so2;
        c.second = f.at_dihedral(k);
    }
    return x;
}

}  // namespace o2alg
