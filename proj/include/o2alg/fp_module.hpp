// Finitely presented graded modules over O_F and E^{-1}O_F in germ form.
//
// Generator and relation degrees are germs of integers, relation entries are
// germs of rational coefficients with the c-power forced by the degree
// difference. Every computation runs once per exceptional index and once
// generically through the presentation calculus of polymodule.hpp. The
// optional W-twist records the sign of w on each generator under the action
// w c = -c w.
#pragma once

#include <o2alg/euler.hpp>
#include <o2alg/germ.hpp>
#include <o2alg/polymodule.hpp>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace o2alg {

struct WTwist {
    std::vector<int> gen_signs;  // +1 / -1
    std::vector<int> rel_signs;
};

class FpModule {
  public:
    PolyRing ring = PolyRing::Poly;
    std::vector<Germ<int>> gen_degs;
    std::vector<Germ<int>> rel_degs;
    std::vector<std::vector<Germ<Rat>>> rel;  // [gen][rel]
    std::optional<WTwist> w;

    FpModule() = default;
    FpModule(PolyRing r, std::vector<Germ<int>> gens, std::vector<Germ<int>> rels,
             std::vector<std::vector<Germ<Rat>>> entries)
        : ring(r), gen_degs(std::move(gens)), rel_degs(std::move(rels)),
          rel(std::move(entries)) {
        if (rel.size() != gen_degs.size())
            throw std::invalid_argument("fp module: row count mismatch");
        for (const auto& row : rel)
            if (row.size() != rel_degs.size())
                throw std::invalid_argument("fp module: column count mismatch");
    }

    std::size_t n_gens() const { return gen_degs.size(); }
    std::size_t n_rels() const { return rel_degs.size(); }

    static FpModule free_module(PolyRing r, std::vector<Germ<int>> gens) {
        std::vector<std::vector<Germ<Rat>>> e(gens.size());
        return FpModule(r, std::move(gens), {}, std::move(e));
    }
    // O_F itself.
    static FpModule o_f() {
        return free_module(PolyRing::Poly, {Germ<int>(0)});
    }
    static FpModule localized_o_f() {
        return free_module(PolyRing::Laurent, {Germ<int>(0)});
    }
    static FpModule zero(PolyRing r = PolyRing::Poly) { return FpModule(r, {}, {}, {}); }

    std::set<int> relevant_indices() const {
        std::set<int> out;
        for (const auto& g : gen_degs)
            for (const auto& [k, _] : g.exceptional()) out.insert(k);
        for (const auto& g : rel_degs)
            for (const auto& [k, _] : g.exceptional()) out.insert(k);
        for (const auto& row : rel)
            for (const auto& e : row)
                for (const auto& [k, _] : e.exceptional()) out.insert(k);
        return out;
    }

    // k == 0 means the generic component.
    Presentation component(int k) const {
        std::vector<int> gd, rd;
        for (const auto& g : gen_degs) gd.push_back(k == 0 ? g.generic() : g.at(k));
        for (const auto& g : rel_degs) rd.push_back(k == 0 ? g.generic() : g.at(k));
        MonoMat m(ring, gd, rd);
        for (std::size_t i = 0; i < n_gens(); ++i)
            for (std::size_t j = 0; j < n_rels(); ++j)
                m(i, j) = (k == 0 ? rel[i][j].generic() : rel[i][j].at(k));
        return Presentation(ring, std::move(gd), std::move(rd), std::move(m));
    }

    // Homogeneity at every relevant component plus generically; throws with
    // the offending component when violated.
    void validate() const {
        auto check_comp = [this](int k) {
            try {
                component(k);  // Presentation constructor validates entries
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(
                    "fp module invalid at component " +
                    (k == 0 ? std::string("generic") : std::to_string(k)) + ": " +
                    e.what());
            }
            if (w) {
                Presentation p = component(k);
                for (std::size_t i = 0; i < n_gens(); ++i)
                    for (std::size_t j = 0; j < n_rels(); ++j) {
                        if (sgn(p.rel(i, j)) == 0) continue;
                        int e = p.rel.exponent2(i, j) / 2;
                        int sign = (e % 2 == 0 ? 1 : -1) * w->gen_signs[i];
                        if (sign != w->rel_signs[j])
                            throw std::invalid_argument(
                                "fp module: relation breaks the W-structure");
                    }
            }
        };
        if (w && (w->gen_signs.size() != n_gens() || w->rel_signs.size() != n_rels()))
            throw std::invalid_argument("fp module: W sign count mismatch");
        check_comp(0);
        for (int k : relevant_indices()) check_comp(k);
    }

    friend FpModule direct_sum(const FpModule& a, const FpModule& b) {
        if (a.ring != b.ring) throw std::invalid_argument("direct sum ring mismatch");
        FpModule out;
        out.ring = a.ring;
        out.gen_degs = a.gen_degs;
        out.gen_degs.insert(out.gen_degs.end(), b.gen_degs.begin(), b.gen_degs.end());
        out.rel_degs = a.rel_degs;
        out.rel_degs.insert(out.rel_degs.end(), b.rel_degs.begin(), b.rel_degs.end());
        out.rel.assign(out.n_gens(),
                       std::vector<Germ<Rat>>(out.n_rels(), Germ<Rat>(Rat(0))));
        for (std::size_t i = 0; i < a.n_gens(); ++i)
            for (std::size_t j = 0; j < a.n_rels(); ++j) out.rel[i][j] = a.rel[i][j];
        for (std::size_t i = 0; i < b.n_gens(); ++i)
            for (std::size_t j = 0; j < b.n_rels(); ++j)
                out.rel[a.n_gens() + i][a.n_rels() + j] = b.rel[i][j];
        if (a.w && b.w) {
            WTwist t;
            t.gen_signs = a.w->gen_signs;
            t.gen_signs.insert(t.gen_signs.end(), b.w->gen_signs.begin(),
                               b.w->gen_signs.end());
            t.rel_signs = a.w->rel_signs;
            t.rel_signs.insert(t.rel_signs.end(), b.w->rel_signs.begin(),
                               b.w->rel_signs.end());
            out.w = std::move(t);
        }
        return out;
    }
};

// Suspension by an admissible representation: on part F_i of the family the
// generator degrees shift by sign * 2i, i = dim V^{C_k}; relation entries are
// untouched since both degrees shift together.
inline FpModule sigma(const FpModule& m, const EulerClass& v, int sign) {
    FpModule out = m;
    auto shift = [&](Germ<int>& g) {
        for (const auto& [k, e] : v.support()) g.set(k, g.at(k) + sign * 2 * e);
    };
    for (auto& g : out.gen_degs) shift(g);
    for (auto& g : out.rel_degs) shift(g);
    return out;
}
inline FpModule sigma(const FpModule& m, const AdmissibleRep& v, int sign) {
    return sigma(m, dimension_function(v), sign);
}

// Reads the same presentation over E^{-1}O_F. Smith simplification happens
// inside every per-component query, so the stored shape stays germ-uniform.
inline FpModule localize(const FpModule& m) {
    FpModule out = m;
    out.ring = PolyRing::Laurent;
    return out;
}

// O_F(V): free of rank one on a generator of degree 2 dim V^{C_k} at index k
// (the submodule of E^{-1}O_F generated componentwise by c_k^{-v(k)}).
inline FpModule rep_sphere_module(const AdmissibleRep& v) {
    EulerClass e = dimension_function(v);
    Germ<int> d(0);
    for (const auto& [k, ek] : e.support()) d.set(k, 2 * ek);
    return FpModule::free_module(PolyRing::Poly, {d});
}
// Signed variant: exponent function may be negative (used for S^{-V}).
inline FpModule rep_sphere_module_signed(const std::map<int, int>& v) {
    Germ<int> d(0);
    for (const auto& [k, ek] : v) d.set(k, 2 * ek);
    return FpModule::free_module(PolyRing::Poly, {d});
}

// Finitely generated projective test with a free-summand witness.
struct ProjectiveWitness {
    bool projective = false;
    // component k -> degrees of the free summands; k == 0 is the generic one.
    std::map<int, std::vector<int>> free_degrees;
};

inline ProjectiveWitness is_fg_projective(const FpModule& m) {
    ProjectiveWitness out;
    out.projective = true;
    auto probe = [&](int k) {
        auto d = decompose(m.component(k));
        if (!d.torsion.empty()) out.projective = false;
        auto degs = d.free_degs;
        std::sort(degs.begin(), degs.end());
        out.free_degrees[k] = std::move(degs);
    };
    probe(0);
    for (int k : m.relevant_indices()) probe(k);
    return out;
}

// Projection onto the factors in phi (finite set or cofinite complement):
// one kill relation per generator, active exactly off phi.
struct ComponentSet {
    bool cofinite = false;   // false: phi = indices; true: phi = complement
    std::set<int> indices;

    bool contains(int k) const {
        return cofinite ? indices.count(k) == 0 : indices.count(k) != 0;
    }
    bool contains_generic() const { return cofinite; }
};

inline FpModule e_phi(const FpModule& m, const ComponentSet& phi) {
    FpModule out = m;
    for (std::size_t i = 0; i < m.n_gens(); ++i) {
        out.rel_degs.push_back(m.gen_degs[i]);
        for (std::size_t r = 0; r < m.n_gens(); ++r) {
            Germ<Rat> entry(phi.contains_generic() ? Rat(0) : Rat(1));
            for (int k : phi.indices) entry.set(k, phi.cofinite ? Rat(1) : Rat(0));
            if (r != i) entry = Germ<Rat>(Rat(0));
            out.rel[r].push_back(std::move(entry));
        }
        if (out.w) out.w->rel_signs.push_back(out.w->gen_signs[i]);
    }
    return out;
}

// --- maps of germ modules ------------------------------------------------------

// Generator images with germ coefficients; the c-power of entry (i,j) at
// component k is forced by the degree germs and the map degree.
struct FpMap {
    int shift = 0;
    std::vector<std::vector<Germ<Rat>>> entries;  // [target gen][source gen]
};

inline ModMap component_map(const FpMap& f, const FpModule& src,
                            const FpModule& tgt, int k) {
    std::vector<int> rd, cd;
    for (const auto& g : tgt.gen_degs) rd.push_back(k == 0 ? g.generic() : g.at(k));
    for (const auto& g : src.gen_degs) cd.push_back(k == 0 ? g.generic() : g.at(k));
    MonoMat m(src.ring == PolyRing::Laurent || tgt.ring == PolyRing::Laurent
                  ? PolyRing::Laurent
                  : PolyRing::Poly,
              rd, cd, f.shift);
    for (std::size_t i = 0; i < tgt.n_gens(); ++i)
        for (std::size_t j = 0; j < src.n_gens(); ++j)
            m(i, j) = (k == 0 ? f.entries[i][j].generic() : f.entries[i][j].at(k));
    return ModMap{std::move(m)};
}

inline std::set<int> relevant_indices(const FpModule& a, const FpModule& b) {
    std::set<int> out = a.relevant_indices();
    for (int k : b.relevant_indices()) out.insert(k);
    return out;
}

inline std::set<int> map_relevant_indices(const FpMap& f) {
    std::set<int> out;
    for (const auto& row : f.entries)
        for (const auto& e : row)
            for (const auto& [k, _] : e.exceptional()) out.insert(k);
    return out;
}

// Tensor over the base ring; if either side is localized the result is.
inline FpModule tensor(const FpModule& a0, const FpModule& b0) {
    FpModule a = a0, b = b0;
    if (a.ring != b.ring) {
        a = localize(a);
        b = localize(b);
    }
    FpModule out;
    out.ring = a.ring;
    auto add_germ = [](const Germ<int>& x, const Germ<int>& y) {
        return Germ<int>::zip(x, y, [](int u, int v) { return u + v; });
    };
    for (const auto& ga : a.gen_degs)
        for (const auto& gb : b.gen_degs) out.gen_degs.push_back(add_germ(ga, gb));
    for (const auto& ra : a.rel_degs)
        for (const auto& gb : b.gen_degs) out.rel_degs.push_back(add_germ(ra, gb));
    for (const auto& ga : a.gen_degs)
        for (const auto& rb : b.rel_degs) out.rel_degs.push_back(add_germ(ga, rb));
    out.rel.assign(out.n_gens(),
                   std::vector<Germ<Rat>>(out.n_rels(), Germ<Rat>(Rat(0))));
    const std::size_t bg = b.n_gens();
    std::size_t col = 0;
    for (std::size_t r = 0; r < a.n_rels(); ++r)
        for (std::size_t j = 0; j < bg; ++j, ++col)
            for (std::size_t i = 0; i < a.n_gens(); ++i)
                out.rel[i * bg + j][col] = a.rel[i][r];
    for (std::size_t i = 0; i < a.n_gens(); ++i)
        for (std::size_t r = 0; r < b.n_rels(); ++r, ++col)
            for (std::size_t j = 0; j < bg; ++j)
                out.rel[i * bg + j][col] = b.rel[j][r];
    if (a.w && b.w) {
        WTwist t;
        for (std::size_t i = 0; i < a.n_gens(); ++i)
            for (std::size_t j = 0; j < bg; ++j)
                t.gen_signs.push_back(a.w->gen_signs[i] * b.w->gen_signs[j]);
        for (std::size_t r = 0; r < a.n_rels(); ++r)
            for (std::size_t j = 0; j < bg; ++j)
                t.rel_signs.push_back(a.w->rel_signs[r] * b.w->gen_signs[j]);
        for (std::size_t i = 0; i < a.n_gens(); ++i)
            for (std::size_t r = 0; r < b.n_rels(); ++r)
                t.rel_signs.push_back(a.w->gen_signs[i] * b.w->rel_signs[r]);
        out.w = std::move(t);
    }
    return out;
}

// Reassembles a germ module from per-component presentations of possibly
// different shapes: every component's generators are adjoined and killed by
// unit relations away from home.
inline FpModule assemble_from_components(
    PolyRing ring, const std::map<int, Presentation>& exceptional,
    const Presentation& generic) {
    FpModule out;
    out.ring = ring;
    struct GenHome {
        int home;  // 0 = generic
        std::size_t index;
    };
    std::vector<GenHome> homes;
    // Generic generators first.
    for (std::size_t i = 0; i < generic.n_gens(); ++i) {
        out.gen_degs.push_back(Germ<int>(generic.gen_degs[i]));
        homes.push_back({0, i});
    }
    for (const auto& [k, p] : exceptional)
        for (std::size_t i = 0; i < p.n_gens(); ++i) {
            Germ<int> d(p.gen_degs[i]);
            d.set(k, p.gen_degs[i]);
            out.gen_degs.push_back(std::move(d));
            homes.push_back({k, i});
        }
    auto gen_offset = [&](int home) {
        std::size_t off = 0;
        for (std::size_t g = 0; g < homes.size(); ++g)
            if (homes[g].home == home) return g - homes[g].index;
        (void)off;
        throw std::logic_error("assemble: missing home");
    };
    out.rel.assign(out.n_gens(), {});
    auto push_col = [&](const Germ<int>& deg, const std::vector<Germ<Rat>>& col) {
        out.rel_degs.push_back(deg);
        for (std::size_t g = 0; g < out.n_gens(); ++g) out.rel[g].push_back(col[g]);
    };
    // Home relations, active only at home.
    auto add_home_rels = [&](int home, const Presentation& p) {
        if (p.n_gens() == 0) return;
        std::size_t off = gen_offset(home);
        for (std::size_t j = 0; j < p.n_rels(); ++j) {
            std::vector<Germ<Rat>> col(out.n_gens(), Germ<Rat>(Rat(0)));
            for (std::size_t i = 0; i < p.n_gens(); ++i) {
                if (home == 0)
                    col[off + i] = Germ<Rat>(p.rel(i, j));
                else {
                    Germ<Rat> e(Rat(0));
                    e.set(home, p.rel(i, j));
                    col[off + i] = std::move(e);
                }
            }
            push_col(Germ<int>(p.rel_degs[j]), col);
        }
        // Kill the generators away from home.
        for (std::size_t i = 0; i < p.n_gens(); ++i) {
            std::vector<Germ<Rat>> col(out.n_gens(), Germ<Rat>(Rat(0)));
            if (home == 0) {
                // Kill generic generators at every exceptional component.
                for (const auto& [k, _] : exceptional) {
                    std::vector<Germ<Rat>> kcol(out.n_gens(), Germ<Rat>(Rat(0)));
                    Germ<Rat> e(Rat(0));
                    e.set(k, Rat(1));
                    kcol[off + i] = std::move(e);
                    push_col(out.gen_degs[off + i], kcol);
                }
            } else {
                Germ<Rat> e(Rat(1));
                e.set(home, Rat(0));
                col[off + i] = std::move(e);
                push_col(out.gen_degs[off + i], col);
            }
        }
    };
    add_home_rels(0, generic);
    for (const auto& [k, p] : exceptional) add_home_rels(k, p);
    return out;
}

}  // namespace o2alg
