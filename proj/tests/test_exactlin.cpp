#include <catch2/catch_amalgamated.hpp>

#include <o2alg/chain.hpp>
#include <o2alg/germ.hpp>
#include <o2alg/grading.hpp>
#include <o2alg/monomial.hpp>
#include <o2alg/polymodule.hpp>
#include <o2alg/qlinalg.hpp>
#include <o2alg/rational.hpp>

#include "test_util.hpp"

using namespace o2alg;
using o2test::rand_chain;
using o2test::rand_int;
using o2test::rand_monomat;

TEST_CASE("rational parse/print round trip") {
    CHECK(rat_str(rat_parse("3/6")) == "1/2");
    CHECK(rat_str(rat_parse("-4/2")) == "-2");
    CHECK(rat_parse("0/5") == 0);
    CHECK_THROWS(rat_parse("1/0"));
    CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("germ normal form and zip") {
    Germ<int> g({{2, 5}, {3, 0}}, 0);
    CHECK(g.exceptional().size() == 1);  // the 3 -> 0 entry is generic
    CHECK(g.at(2) == 5);
    CHECK(g.at(3) == 0);
    CHECK(g.at(100) == 0);
    CHECK(g.bound() == 3);
    auto h = Germ<int>::zip(g, Germ<int>({{2, -5}}, 7),
                            [](int a, int b) { return a + b; });
    CHECK(h.at(2) == 0);
    CHECK(h.generic() == 7);
}

TEST_CASE("homology of basic complexes") {
    // zero complex
    CHECK(ChainCx().homology() == GradedVec());
    // the acyclic disk Q ->id Q in degrees 1, 0
    CHECK(ChainCx::disk(1).homology() == GradedVec());
    // S^0: Q in degree 0, no differential
    CHECK(ChainCx::point(0).homology() == GradedVec::line(0));
}

TEST_CASE("d*d = 0 is enforced") {
    GradedVec v;
    v.set(2, 1);
    v.set(1, 1);
    v.set(0, 1);
    std::map<int, QMatrix> d;
    d[2] = QMatrix::identity(1);
    d[1] = QMatrix::identity(1);
    CHECK_THROWS(ChainCx(v, d));
}

TEST_CASE("homology is additive over direct sums") {
    for (int trial = 0; trial < 20; ++trial) {
        ChainCx x = rand_chain(), y = rand_chain();
        CHECK(direct_sum(x, y).homology() == x.homology() + y.homology());
    }
}

TEST_CASE("w_fixed on basic W-modules") {
    // (QW)^W = Q
    CHECK(w_fixed(WVec::group_ring(0)).total() == 1);
    // trivial representation is fixed
    WVec triv = WVec::trivial(GradedVec::line(0, 5));
    CHECK(w_fixed(triv).total() == 5);
}

// Brute-force oracle: w acts on QW^{(x)i} (basis = W^i) by simultaneous
// translation; build the 2^i x 2^i involution and split eigenspaces.
static int brute_force_fixed_dim(int i) {
    std::size_t n = std::size_t(1) << i;
    QMatrix w(n, n);
    for (std::size_t b = 0; b < n; ++b) w(b ^ (n - 1), b) = 1;
    return static_cast<int>(w_eigenbasis(w).plus_basis.rows());
}

TEST_CASE("w_fixed(QW^{(x)i}) has dimension 2^{i-1}") {
    WVec qw = WVec::group_ring(0);
    WVec t = qw;
    for (int i = 1; i <= 6; ++i) {
        CHECK(w_fixed(t).total() == (1 << (i - 1)));
        CHECK(brute_force_fixed_dim(i) == (1 << (i - 1)));
        t = tensor(t, qw);
    }
}

TEST_CASE("linear pullback") {
    // f = g = id: P isomorphic to A via the diagonal
    QMatrix id2 = QMatrix::identity(2);
    auto p = linear_pullback(id2, id2);
    CHECK(p.basis.rows() == 2);
    // g = 0 from the zero space: P = ker f
    QMatrix f(1, 2);
    f(0, 0) = 1;
    f(0, 1) = 1;
    auto p2 = linear_pullback(f, QMatrix(1, 0));
    CHECK(p2.basis.rows() == 1);  // ker(sum) is 1-dimensional
    // f : Q^2 -> Q the sum, g : Q -> Q the identity: P has dimension 2
    auto p3 = linear_pullback(f, QMatrix::identity(1));
    CHECK(p3.basis.rows() == 2);
    // universal property sanity: f(a) = g(b) on every basis vector
    for (std::size_t r = 0; r < p3.basis.rows(); ++r) {
        std::vector<Rat> a{p3.basis(r, 0), p3.basis(r, 1)};
        std::vector<Rat> b{p3.basis(r, 2)};
        CHECK(f.apply(a) == QMatrix::identity(1).apply(b));
    }
    CHECK_THROWS(linear_pullback(QMatrix(1, 2), QMatrix(2, 2)));
}

TEST_CASE("smith: identity and single entries") {
    // identity 2x2 -> invariant factors (1, 1)
    MonoMat id = MonoMat::identity(PolyRing::Poly, {0, 0});
    auto s = smith(id);
    REQUIRE(s.rank == 2);
    CHECK(s.factor_exponents == std::vector<int>{0, 0});

    // [[c]] over Q[c]: factor (c); over the Laurent ring: unit factor.
    // As a graded map the relation generator sits in degree -2.
    MonoMat c(PolyRing::Poly, {0}, {-2});
    c(0, 0) = 1;
    auto sc = smith(c);
    REQUIRE(sc.rank == 1);
    CHECK(sc.factor_exponents == std::vector<int>{1});
    MonoMat cl(PolyRing::Laurent, {0}, {-2});
    cl(0, 0) = 1;
    auto scl = smith(cl);
    REQUIRE(scl.rank == 1);
    CHECK(scl.factor_exponents == std::vector<int>{1});
    // over Laurent the factor c is a unit, so the cokernel vanishes:
    Presentation pl(PolyRing::Laurent, {0}, {-2}, cl);
    CHECK(decompose(pl).free_degs.empty());
    CHECK(decompose(pl).torsion.empty());
}

TEST_CASE("smith: [[c^2, c^3], [0, c]] over Q[c]") {
    // Hand row-reduction: pivot c at (2,2); clearing gives diag(c, c^2).
    // Degrees: rows (0, -4), cols (-4, -6) force exactly these exponents.
    MonoMat m(PolyRing::Poly, {0, -4}, {-4, -6});
    m(0, 0) = 1;  // c^2
    m(0, 1) = 1;  // c^3
    m(1, 1) = 1;  // c
    auto s = smith(m);
    REQUIRE(s.rank == 2);
    CHECK(s.factor_exponents == std::vector<int>{1, 2});
    CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("smith: degree-inconsistent input is rejected naming the entry") {
    MonoMat m(PolyRing::Poly, {0}, {1});  // odd degree difference
    m(0, 0) = 1;
    CHECK(m.invalid_entry().has_value());
    CHECK_THROWS_AS(smith(m), std::invalid_argument);
    MonoMat neg(PolyRing::Poly, {0}, {2});
    neg(0, 0) = 1;  // c^(-1)... exponent2 = -2, illegal over Q[c]
    // actually row 0 col 2: exponent2 = 0 - 2 = -2 < 0
    CHECK(neg.invalid_entry().has_value());
}

TEST_CASE("smith properties on random matrices") {
    for (int trial = 0; trial < 40; ++trial) {
        PolyRing ring = trial % 2 ? PolyRing::Poly : PolyRing::Laurent;
        MonoMat m = rand_monomat(ring, rand_int(1, 4), rand_int(1, 4));
        auto s = smith(m);
        CHECK(s.u * m * s.v == s.d);
        for (std::size_t i = 0; i + 1 < s.factor_exponents.size(); ++i)
            CHECK(s.factor_exponents[i] <= s.factor_exponents[i + 1]);
        // u, v invertible over the ring: the tracked inverses really invert.
        CHECK(s.u * s.u_inv == MonoMat::identity(ring, s.u.row_degs()));
        CHECK(s.v_inv * s.v ==
              MonoMat::identity(ring, s.v.col_degs()));
    }
}

TEST_CASE("syzygies and kernels of free maps") {
    for (int trial = 0; trial < 20; ++trial) {
        MonoMat m = rand_monomat(PolyRing::Poly, rand_int(1, 3), rand_int(1, 4));
        for (const auto& k : syzygies(m)) {
            FreeElt img = m.apply(k);
            for (const auto& cf : img.coords) CHECK(is_zero(cf));
        }
    }
}

TEST_CASE("presented module decomposition and graded pieces") {
    // Q[c] / (c^2) on a degree-0 generator: dims 1 in degrees 0, -2 only.
    MonoMat r(PolyRing::Poly, {0}, {-4});
    r(0, 0) = 1;
    Presentation p(PolyRing::Poly, {0}, {-4}, r);
    auto d = decompose(p);
    REQUIRE(d.torsion.size() == 1);
    CHECK(d.torsion[0] == std::make_pair(0, 2));
    CHECK(graded_dim(p, d, 0) == 1);
    CHECK(graded_dim(p, d, -2) == 1);
    CHECK(graded_dim(p, d, -4) == 0);
    CHECK(graded_dim(p, d, 1) == 0);

    // free module of rank 2, generators in degrees 0 and 3
    auto f = Presentation::free_module(PolyRing::Poly, {0, 3});
    auto fd = decompose(f);
    CHECK(graded_dim(f, fd, 0) == 1);
    CHECK(graded_dim(f, fd, -2) == 1);
    CHECK(graded_dim(f, fd, 3) == 1);
    CHECK(graded_dim(f, fd, 1) == 1);
    CHECK(graded_dim(f, fd, 4) == 0);
}

TEST_CASE("hom presentation computes witness maps") {
    // Hom(Q[c]/(c), Q[c]/(c^2)): generated by 1 -> c (degree -2 map).
    MonoMat r1(PolyRing::Poly, {0}, {-2});
    r1(0, 0) = 1;
    Presentation p(PolyRing::Poly, {0}, {-2}, r1);
    MonoMat r2(PolyRing::Poly, {0}, {-4});
    r2(0, 0) = 1;
    Presentation q(PolyRing::Poly, {0}, {-4}, r2);
    auto h = hom_presentation(p, q);
    auto hd = decompose(h.pres);
    // one torsion generator in degree -2, itself killed by c
    CHECK(graded_dim(h.pres, hd, -2) == 1);
    CHECK(graded_dim(h.pres, hd, 0) == 0);
    CHECK(graded_dim(h.pres, hd, -4) == 0);
    // the witness is well-defined as a map p -> q
    auto qd = decompose(q);
    for (const auto& w : h.witnesses) CHECK(well_defined(w, p, q, qd));
}

TEST_CASE("annihilator exponents") {
    MonoMat r(PolyRing::Poly, {0}, {-6});
    r(0, 0) = 1;  // c^3 kills the generator
    Presentation p(PolyRing::Poly, {0}, {-6}, r);
    auto d = decompose(p);
    FreeElt g{0, {Rat(1)}};
    CHECK(annihilator_exponent(p, d, g) == 3);
    FreeElt cg{-2, {Rat(1)}};
    CHECK(annihilator_exponent(p, d, cg) == 2);
    auto f = Presentation::free_module(PolyRing::Poly, {0});
    auto fd = decompose(f);
    CHECK(!annihilator_exponent(f, fd, g).has_value());
}
