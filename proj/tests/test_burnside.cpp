#include <catch2/catch_amalgamated.hpp>

#include <o2alg/burnside.hpp>

#include "test_util.hpp"

using namespace o2alg;
using o2test::rand_int;
using o2test::rand_rat;

static BurnsideElement rand_burnside(int max_exceptional = 8) {
    std::map<int, Rat> exc;
    int m = rand_int(0, max_exceptional);
    for (int i = 0; i < m; ++i) exc[rand_int(1, 20)] = rand_rat();
    return BurnsideElement(rand_rat(), Germ<Rat>(std::move(exc), rand_rat()));
}

TEST_CASE("idempotent identities") {
    auto eC = e_cyclic(), eD = e_dihedral();
    CHECK(eC * eC == eC);
    CHECK(eC * eD == BurnsideElement::zero());
    CHECK(eC + eD == BurnsideElement::one());
    CHECK(f_n(1) == eD);  // empty sum
    // e_n e_m = 0 for n != m (characteristic functions of distinct points)
    CHECK(e_n(2) * e_n(3) == BurnsideElement::zero());
    CHECK(e_n(5) * e_n(5) == e_n(5));
    // e_2 takes value 1 exactly at D_4
    auto e2 = e_n(2);
    CHECK(e2.so2 == 0);
    CHECK(e2.at_dihedral(2) == 1);
    CHECK(e2.at_dihedral(3) == 0);
    CHECK(e2.at_o2() == 0);
}

TEST_CASE("e_n * f_m") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m) {
            auto prod = e_n(n) * f_n(m);
            if (n >= m)
                CHECK(prod == e_n(n));
            else
                CHECK(prod == BurnsideElement::zero());
        }
}

TEST_CASE("hasse decomposition basics") {
    auto hc = hasse_decompose(e_cyclic());
    CHECK(hc.germ_part == Germ<Rat>(Rat(0)));
    CHECK(hc.corner == std::make_pair(Rat(1), Rat(0)));

    auto h1 = hasse_decompose(BurnsideElement::one());
    CHECK(h1.germ_part == Germ<Rat>(Rat(1)));
    CHECK(h1.corner == std::make_pair(Rat(1), Rat(1)));

    auto h3 = hasse_decompose(e_n(3));
    CHECK(h3.germ_part == Germ<Rat>({{3, Rat(1)}}, Rat(0)));
    CHECK(h3.corner == std::make_pair(Rat(0), Rat(0)));
}

TEST_CASE("hasse decompose/assemble is the identity") {
    for (int trial = 0; trial < 100; ++trial) {
        auto f = rand_burnside();
        auto h = hasse_decompose(f);
        CHECK(h.compatible());
        CHECK(hasse_assemble(h) == f);
    }
    // incompatible corners are rejected
    HasseDecomposition bad{Germ<Rat>(Rat(0)), {Rat(0), Rat(1)}};
    CHECK_THROWS(hasse_assemble(bad));
}

TEST_CASE("restriction on idempotents matches the lemma table") {
    // restrict(e_1, 2) = e_{D_2}
    CHECK(restrict_to(e_n(1), 2) == DihedralBurnside::e_D(2, 1));
    // restrict(e_3, 2) = 0
    CHECK(restrict_to(e_n(3), 2).is_zero());
    // restrict(e_C, 6) = e_{C_1} + e_{C_2} + e_{C_3} + e_{C_6}
    auto r = restrict_to(e_cyclic(), 6);
    DihedralBurnside expect(6);
    for (int k : {1, 2, 3, 6}) expect = expect + DihedralBurnside::e_C(6, k);
    CHECK(r == expect);
    // restrict(e_D, n) = sum of all e_{D_{2k}}
    auto rd = restrict_to(e_dihedral(), 4);
    DihedralBurnside expd(4);
    for (int k : {1, 2, 4}) expd = expd + DihedralBurnside::e_D(4, k);
    CHECK(rd == expd);
}

TEST_CASE("restriction is a unital ring homomorphism") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(restrict_to(BurnsideElement::one(), n) == DihedralBurnside::one(n));
        for (int trial = 0; trial < 25; ++trial) {
            auto f = rand_burnside(), g = rand_burnside();
            CHECK(restrict_to(f * g, n) == restrict_to(f, n) * restrict_to(g, n));
            CHECK(restrict_to(f + g, n) == restrict_to(f, n) + restrict_to(g, n));
        }
    }
}

TEST_CASE("dihedral idempotents: maximal orthogonal decomposition") {
    for (int n : {1, 2, 4, 6, 12}) {
        std::vector<DihedralBurnside> idems;
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0) continue;
            idems.push_back(DihedralBurnside::e_C(n, k));
            idems.push_back(DihedralBurnside::e_D(n, k));
        }
        DihedralBurnside sum(n);
        for (const auto& e : idems) {
            CHECK(e * e == e);
            sum = sum + e;
        }
        CHECK(sum == DihedralBurnside::one(n));
        for (std::size_t i = 0; i < idems.size(); ++i)
            for (std::size_t j = i + 1; j < idems.size(); ++j)
                CHECK((idems[i] * idems[j]).is_zero());
    }
}
