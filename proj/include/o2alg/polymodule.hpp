// Finitely presented graded modules over Q[c] or Q[c,c^-1] and the
// presentation calculus: canonical decomposition, graded pieces, normal
// forms, kernels, submodules, quotients, tensor and hom presentations.
//
// Everything reduces to Smith normal form of the monomial relation matrices;
// both rings are graded principal ideal domains, so every module splits as
// shifted frees plus c-power torsion.
#pragma once

#include <o2alg/grading.hpp>
#include <o2alg/monomial.hpp>
#include <o2alg/qlinalg.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace o2alg {

struct Presentation {
    PolyRing ring = PolyRing::Poly;
    std::vector<int> gen_degs;
    std::vector<int> rel_degs;
    MonoMat rel;  // rows indexed by gens, cols by rels, degree-0 map

    Presentation() : rel(PolyRing::Poly, {}, {}) {}
    Presentation(PolyRing r, std::vector<int> gens, std::vector<int> rels,
                 MonoMat m)
        : ring(r), gen_degs(std::move(gens)), rel_degs(std::move(rels)),
          rel(std::move(m)) {
        if (rel.rows() != gen_degs.size() || rel.cols() != rel_degs.size())
            throw std::invalid_argument("presentation shape mismatch");
        rel.check_valid();
    }

    static Presentation free_module(PolyRing r, std::vector<int> gens) {
        MonoMat m(r, gens, {});
        return Presentation(r, std::move(gens), {}, std::move(m));
    }

    std::size_t n_gens() const { return gen_degs.size(); }
    std::size_t n_rels() const { return rel_degs.size(); }
};

// M = (+) S^{deg} R  (tors == 0)  (+)  S^{deg} R/(c^tors)  (tors >= 1),
// via u * rel * v = d. Unit invariant factors kill their generator; those
// canonical rows are dropped from `summands` but tracked in `row_of`.
struct Decomp {
    std::vector<int> free_degs;
    std::vector<std::pair<int, int>> torsion;  // (degree, exponent >= 1)
    SmithForm snf;
    std::vector<std::size_t> free_rows;     // canonical row index per free summand
    std::vector<std::size_t> torsion_rows;  // canonical row index per torsion summand
};

inline Decomp decompose(const Presentation& p) {
    Decomp d;
    d.snf = smith(p.rel);
    for (std::size_t i = 0; i < p.n_gens(); ++i) {
        if (i < d.snf.rank) {
            int e = d.snf.factor_exponents[i];
            if (e == 0) continue;  // unit factor: generator dies
            if (p.ring == PolyRing::Laurent) continue;  // c is a unit
            d.torsion.emplace_back(d.snf.d.row_degs()[i], e);
            d.torsion_rows.push_back(i);
        } else {
            d.free_degs.push_back(d.snf.d.row_degs()[i]);
            d.free_rows.push_back(i);
        }
    }
    return d;
}

// Unique normal form: canonical coordinates with torsion reduced and dead
// rows zeroed. Index i refers to canonical rows of the decomposition's SNF.
inline std::vector<Rat> normal_form(const Presentation& p, const Decomp& d,
                                    const FreeElt& x) {
    if (x.coords.size() != p.n_gens())
        throw std::invalid_argument("normal_form: coordinate mismatch");
    FreeElt y = d.snf.u.apply(x);
    std::vector<Rat> out(p.n_gens(), Rat(0));
    for (std::size_t i = 0; i < p.n_gens(); ++i) {
        if (sgn(y.coords[i]) == 0) continue;
        if (i < d.snf.rank) {
            int e = d.snf.factor_exponents[i];
            if (p.ring == PolyRing::Laurent || e == 0) continue;  // killed
            // Coordinate exponent is forced by degrees.
            int ce2 = d.snf.d.row_degs()[i] - x.degree;
            if (ce2 % 2 != 0)
                throw std::logic_error("normal_form: parity violation");
            if (ce2 / 2 >= e) continue;  // inside c^e R
        }
        out[i] = y.coords[i];
    }
    return out;
}

inline bool is_zero_in(const Presentation& p, const Decomp& d, const FreeElt& x) {
    for (const auto& c : normal_form(p, d, x))
        if (sgn(c) != 0) return false;
    return true;
}

// Basis of the degree-q piece. Each element is given in original generator
// coordinates; `canonical_rows` records which canonical summand it spans.
struct GradedPieceBasis {
    int degree = 0;
    std::vector<FreeElt> elements;
    std::vector<std::size_t> canonical_rows;
};

inline bool summand_has_degree(PolyRing ring, int gen_deg, int tors, int q) {
    int e2 = gen_deg - q;  // twice the c-exponent
    if (e2 % 2 != 0) return false;
    if (ring == PolyRing::Laurent) return tors == 0;
    if (e2 < 0) return false;
    return tors == 0 || e2 / 2 < tors;
}

inline GradedPieceBasis graded_piece(const Presentation& p, const Decomp& d,
                                     int q) {
    GradedPieceBasis b;
    b.degree = q;
    auto push = [&](std::size_t row) {
        FreeElt unit;
        unit.degree = q;
        unit.coords.assign(p.n_gens(), Rat(0));
        unit.coords[row] = 1;
        b.elements.push_back(d.snf.u_inv.apply(unit));
        b.elements.back().degree = q;
        b.canonical_rows.push_back(row);
    };
    for (std::size_t s = 0; s < d.free_rows.size(); ++s)
        if (summand_has_degree(p.ring, d.free_degs[s], 0, q)) push(d.free_rows[s]);
    for (std::size_t s = 0; s < d.torsion_rows.size(); ++s)
        if (summand_has_degree(p.ring, d.torsion[s].first, d.torsion[s].second, q))
            push(d.torsion_rows[s]);
    return b;
}

inline int graded_dim(const Presentation& p, const Decomp& d, int q) {
    int n = 0;
    for (std::size_t s = 0; s < d.free_rows.size(); ++s)
        if (summand_has_degree(p.ring, d.free_degs[s], 0, q)) ++n;
    for (std::size_t s = 0; s < d.torsion_rows.size(); ++s)
        if (summand_has_degree(p.ring, d.torsion[s].first, d.torsion[s].second, q))
            ++n;
    return n;
}

// Coordinates of x in the graded-piece basis of its degree.
inline std::vector<Rat> piece_coords(const Presentation& p, const Decomp& d,
                                     const GradedPieceBasis& b, const FreeElt& x) {
    auto nf = normal_form(p, d, x);
    std::vector<Rat> out(b.elements.size(), Rat(0));
    std::vector<bool> seen(p.n_gens(), false);
    for (std::size_t i = 0; i < b.canonical_rows.size(); ++i) {
        out[i] = nf[b.canonical_rows[i]];
        seen[b.canonical_rows[i]] = true;
    }
    for (std::size_t i = 0; i < nf.size(); ++i)
        if (sgn(nf[i]) != 0 && !seen[i])
            throw std::logic_error("piece_coords: element outside the piece");
    return out;
}

// --- maps between presented modules -----------------------------------------

// A map is stored by generator images: a monomial matrix from source gens to
// target gens (entries read modulo target relations).
struct ModMap {
    MonoMat mat;  // row degs = target gen degs, col degs = source gen degs
};

inline bool well_defined(const ModMap& f, const Presentation& src,
                         const Presentation& tgt, const Decomp& tgt_dec) {
    for (std::size_t j = 0; j < src.n_rels(); ++j) {
        FreeElt rel;
        rel.degree = src.rel_degs[j];
        rel.coords.reserve(src.n_gens());
        for (std::size_t i = 0; i < src.n_gens(); ++i)
            rel.coords.push_back(src.rel(i, j));
        if (!is_zero_in(tgt, tgt_dec, f.mat.apply(rel))) return false;
    }
    return true;
}

// Matrix of the induced map on graded pieces, source degree q.
inline QMatrix piece_matrix(const ModMap& f, const Presentation& src,
                            const Decomp& src_dec, const Presentation& tgt,
                            const Decomp& tgt_dec, int q) {
    auto bs = graded_piece(src, src_dec, q);
    auto bt = graded_piece(tgt, tgt_dec, q + f.mat.shift());
    QMatrix m(bt.elements.size(), bs.elements.size());
    for (std::size_t j = 0; j < bs.elements.size(); ++j) {
        auto coords = piece_coords(tgt, tgt_dec, bt, f.mat.apply(bs.elements[j]));
        for (std::size_t i = 0; i < bt.elements.size(); ++i) m(i, j) = coords[i];
    }
    return m;
}

// --- submodules, kernels, quotients ------------------------------------------

// Presentation of the submodule generated by homogeneous elements of p,
// with the elements as generators (inclusion = the element matrix).
struct SubmodulePresentation {
    Presentation pres;
    MonoMat inclusion;  // generator images in the ambient generators
};

inline SubmodulePresentation submodule_presentation(
    const Presentation& p, const std::vector<FreeElt>& elements) {
    std::vector<int> degs;
    for (const auto& e : elements) {
        if (e.coords.size() != p.n_gens())
            throw std::invalid_argument("submodule: element coordinate mismatch");
        degs.push_back(e.degree);
    }
    MonoMat incl(p.ring, p.gen_degs, degs);
    for (std::size_t j = 0; j < elements.size(); ++j)
        for (std::size_t i = 0; i < p.n_gens(); ++i)
            incl(i, j) = elements[j].coords[i];
    incl.check_valid();
    // Relations: coefficient vectors x with  incl * x in im(rel), i.e. the
    // x-parts of syzygies of [incl | rel].
    auto syz = syzygies(MonoMat::hstack(incl, p.rel));
    std::vector<int> rel_degs;
    MonoMat relm(p.ring, degs, {});
    std::vector<FreeElt> cols;
    for (const auto& s : syz) {
        FreeElt x;
        x.degree = s.degree;
        x.coords.assign(s.coords.begin(), s.coords.begin() + elements.size());
        bool nonzero = false;
        for (const auto& c : x.coords) nonzero |= (sgn(c) != 0);
        if (!nonzero) continue;
        rel_degs.push_back(x.degree);
        cols.push_back(std::move(x));
    }
    MonoMat rm(p.ring, degs, rel_degs);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < elements.size(); ++i)
            rm(i, j) = cols[j].coords[i];
    SubmodulePresentation out{Presentation(p.ring, degs, rel_degs, std::move(rm)),
                              std::move(incl)};
    return out;
}

// Rewrites a degree-t map as a degree-0 matrix by shifting source degrees;
// entry exponents are unchanged.
inline MonoMat as_degree_zero(const MonoMat& m) {
    if (m.shift() == 0) return m;
    std::vector<int> cd = m.col_degs();
    for (auto& d : cd) d += m.shift();
    MonoMat out(m.ring(), m.row_degs(), cd, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

// Kernel of f : src -> tgt as a submodule of src.
inline SubmodulePresentation kernel_presentation(const ModMap& f,
                                                 const Presentation& src,
                                                 const Presentation& tgt) {
    auto syz = syzygies(MonoMat::hstack(as_degree_zero(f.mat), tgt.rel));
    std::vector<FreeElt> gens;
    for (const auto& s : syz) {
        FreeElt x;
        x.degree = s.degree - f.mat.shift();
        x.coords.assign(s.coords.begin(), s.coords.begin() + src.n_gens());
        bool nonzero = false;
        for (const auto& c : x.coords) nonzero |= (sgn(c) != 0);
        if (nonzero) gens.push_back(std::move(x));
    }
    return submodule_presentation(src, gens);
}

inline Presentation quotient_presentation(const Presentation& p,
                                          const std::vector<FreeElt>& elements) {
    std::vector<int> rel_degs = p.rel_degs;
    for (const auto& e : elements) rel_degs.push_back(e.degree);
    MonoMat rm(p.ring, p.gen_degs, rel_degs);
    for (std::size_t j = 0; j < p.n_rels(); ++j)
        for (std::size_t i = 0; i < p.n_gens(); ++i) rm(i, j) = p.rel(i, j);
    for (std::size_t j = 0; j < elements.size(); ++j)
        for (std::size_t i = 0; i < p.n_gens(); ++i)
            rm(i, p.n_rels() + j) = elements[j].coords[i];
    return Presentation(p.ring, p.gen_degs, std::move(rel_degs), std::move(rm));
}

// --- tensor and hom ----------------------------------------------------------

// Tensor over the base ring; generator (i,j) is g_i (x) h_j, indexed
// i * n_gens(q) + j.
inline Presentation tensor_presentation(const Presentation& p,
                                        const Presentation& q) {
    if (p.ring != q.ring)
        throw std::invalid_argument("tensor: ring mismatch");
    std::vector<int> gens;
    for (int a : p.gen_degs)
        for (int b : q.gen_degs) gens.push_back(a + b);
    std::vector<int> rels;
    // rel_P (x) gen_Q, then gen_P (x) rel_Q.
    for (int a : p.rel_degs)
        for (int b : q.gen_degs) rels.push_back(a + b);
    for (int a : p.gen_degs)
        for (int b : q.rel_degs) rels.push_back(a + b);
    MonoMat rm(p.ring, gens, rels);
    std::size_t col = 0;
    for (std::size_t r = 0; r < p.n_rels(); ++r)
        for (std::size_t j = 0; j < q.n_gens(); ++j, ++col)
            for (std::size_t i = 0; i < p.n_gens(); ++i)
                rm(i * q.n_gens() + j, col) = p.rel(i, r);
    for (std::size_t i = 0; i < p.n_gens(); ++i)
        for (std::size_t r = 0; r < q.n_rels(); ++r, ++col)
            for (std::size_t j = 0; j < q.n_gens(); ++j)
                rm(i * q.n_gens() + j, col) = q.rel(j, r);
    return Presentation(p.ring, std::move(gens), std::move(rels), std::move(rm));
}

// Hom_R(P, Q) as a presented module together with one witness map per
// generator. Computed as the kernel of precomposition with the relations:
// Hom(F0, Q) -> Hom(F1, Q).
struct HomPresentation {
    Presentation pres;
    // witness[g] : generator g of the hom module as an actual map P -> Q.
    std::vector<ModMap> witnesses;
};

inline HomPresentation hom_presentation(const Presentation& p,
                                        const Presentation& q) {
    if (p.ring != q.ring)
        throw std::invalid_argument("hom: ring mismatch");
    // W0 = (+)_i S^{-s_i} Q with gens (i, i') of degree q_{i'} - s_i.
    std::vector<int> w0_gens, w1_gens;
    for (std::size_t i = 0; i < p.n_gens(); ++i)
        for (int b : q.gen_degs) w0_gens.push_back(b - p.gen_degs[i]);
    std::vector<int> w0_rels;
    for (std::size_t i = 0; i < p.n_gens(); ++i)
        for (int b : q.rel_degs) w0_rels.push_back(b - p.gen_degs[i]);
    MonoMat w0_rel(p.ring, w0_gens, w0_rels);
    const std::size_t qg = q.n_gens();
    for (std::size_t i = 0; i < p.n_gens(); ++i)
        for (std::size_t r = 0; r < q.n_rels(); ++r)
            for (std::size_t j = 0; j < qg; ++j)
                w0_rel(i * qg + j, i * q.n_rels() + r) = q.rel(j, r);
    Presentation w0(p.ring, w0_gens, w0_rels, std::move(w0_rel));

    for (std::size_t r = 0; r < p.n_rels(); ++r)
        for (int b : q.gen_degs) w1_gens.push_back(b - p.rel_degs[r]);
    std::vector<int> w1_rels;
    for (std::size_t r = 0; r < p.n_rels(); ++r)
        for (int b : q.rel_degs) w1_rels.push_back(b - p.rel_degs[r]);
    MonoMat w1_rel(p.ring, w1_gens, w1_rels);
    for (std::size_t r = 0; r < p.n_rels(); ++r)
        for (std::size_t rr = 0; rr < q.n_rels(); ++rr)
            for (std::size_t j = 0; j < qg; ++j)
                w1_rel(r * qg + j, r * q.n_rels() + rr) = q.rel(j, rr);
    Presentation w1(p.ring, w1_gens, w1_rels, std::move(w1_rel));

    // rho(phi)_r = phi(rel_r): entry from W0 gen (i,j) to W1 gen (r,j).
    MonoMat rho(p.ring, w1_gens, w0_gens);
    for (std::size_t r = 0; r < p.n_rels(); ++r)
        for (std::size_t i = 0; i < p.n_gens(); ++i) {
            if (sgn(p.rel(i, r)) == 0) continue;
            for (std::size_t j = 0; j < qg; ++j)
                rho(r * qg + j, i * qg + j) = p.rel(i, r);
        }
    auto ker = kernel_presentation(ModMap{std::move(rho)}, w0, w1);

    HomPresentation out;
    out.pres = std::move(ker.pres);
    for (std::size_t g = 0; g < out.pres.n_gens(); ++g) {
        // W0 coordinates of this hom generator as a gen-image matrix; a hom
        // generator of degree h sends degree d to degree d + h.
        MonoMat mm(p.ring, q.gen_degs, p.gen_degs, out.pres.gen_degs[g]);
        for (std::size_t i = 0; i < p.n_gens(); ++i)
            for (std::size_t j = 0; j < qg; ++j)
                mm(j, i) = ker.inclusion(i * qg + j, g);
        out.witnesses.push_back(ModMap{std::move(mm)});
    }
    return out;
}

// One preimage of y under f : src -> tgt, solved in the graded piece.
inline std::optional<FreeElt> preimage(const ModMap& f, const Presentation& src,
                                       const Decomp& src_dec,
                                       const Presentation& tgt,
                                       const Decomp& tgt_dec, const FreeElt& y) {
    int q = y.degree - f.mat.shift();
    auto bs = graded_piece(src, src_dec, q);
    auto bt = graded_piece(tgt, tgt_dec, y.degree);
    QMatrix m(bt.elements.size(), bs.elements.size());
    for (std::size_t j = 0; j < bs.elements.size(); ++j) {
        auto coords = piece_coords(tgt, tgt_dec, bt, f.mat.apply(bs.elements[j]));
        for (std::size_t i = 0; i < bt.elements.size(); ++i) m(i, j) = coords[i];
    }
    auto yc = piece_coords(tgt, tgt_dec, bt, y);
    auto x = m.solve(yc);
    if (!x) return std::nullopt;
    FreeElt out;
    out.degree = q;
    out.coords.assign(src.n_gens(), Rat(0));
    for (std::size_t j = 0; j < bs.elements.size(); ++j)
        for (std::size_t i = 0; i < src.n_gens(); ++i)
            out.coords[i] += (*x)[j] * bs.elements[j].coords[i];
    return out;
}

inline Presentation direct_sum_presentation(const Presentation& p,
                                            const Presentation& q) {
    if (p.ring != q.ring)
        throw std::invalid_argument("direct sum: ring mismatch");
    std::vector<int> gens = p.gen_degs;
    gens.insert(gens.end(), q.gen_degs.begin(), q.gen_degs.end());
    std::vector<int> rels = p.rel_degs;
    rels.insert(rels.end(), q.rel_degs.begin(), q.rel_degs.end());
    MonoMat rm(p.ring, gens, rels);
    for (std::size_t i = 0; i < p.n_gens(); ++i)
        for (std::size_t j = 0; j < p.n_rels(); ++j) rm(i, j) = p.rel(i, j);
    for (std::size_t i = 0; i < q.n_gens(); ++i)
        for (std::size_t j = 0; j < q.n_rels(); ++j)
            rm(p.n_gens() + i, p.n_rels() + j) = q.rel(i, j);
    return Presentation(p.ring, std::move(gens), std::move(rels), std::move(rm));
}

// --- localization helpers ----------------------------------------------------

inline Presentation localized(const Presentation& p) {
    if (p.ring == PolyRing::Laurent) return p;
    MonoMat rm(PolyRing::Laurent, p.gen_degs, p.rel_degs);
    for (std::size_t i = 0; i < p.n_gens(); ++i)
        for (std::size_t j = 0; j < p.n_rels(); ++j) rm(i, j) = p.rel(i, j);
    return Presentation(PolyRing::Laurent, p.gen_degs, p.rel_degs, std::move(rm));
}

// Smallest m >= 0 with c^m x = 0 in p; nullopt if x is not Euler-torsion.
inline std::optional<int> annihilator_exponent(const Presentation& p,
                                               const Decomp& d, const FreeElt& x) {
    if (p.ring == PolyRing::Laurent)
        return is_zero_in(p, d, x) ? std::optional<int>(0) : std::nullopt;
    auto y = d.snf.u.apply(x);
    int m = 0;
    for (std::size_t i = 0; i < p.n_gens(); ++i) {
        if (sgn(y.coords[i]) == 0) continue;
        if (i >= d.snf.rank) return std::nullopt;  // free coordinate
        int e = d.snf.factor_exponents[i];
        if (e == 0) continue;
        int ce2 = d.snf.d.row_degs()[i] - x.degree;
        int need = e - ce2 / 2;
        m = std::max(m, need);
    }
    return m;
}

// Free part of the localization: basis rows of E^{-1}P and the forced degrees.
// An element of E^{-1}P is given by Laurent coordinates on the free canonical
// rows of the Poly decomposition.
inline std::vector<int> localized_free_degs(const Presentation& p, const Decomp& d) {
    if (p.ring == PolyRing::Laurent) {
        // decompose() already dropped unit factors; frees remain.
        return d.free_degs;
    }
    return d.free_degs;
}

}  // namespace o2alg
