// Shared helpers for the test suites: a seeded RNG, random rationals,
// random valid chain complexes and random graded monomial matrices.
#pragma once

#include <o2alg/chain.hpp>
#include <o2alg/monomial.hpp>
#include <o2alg/qlinalg.hpp>
#include <o2alg/rational.hpp>

#include <random>
#include <vector>

namespace o2test {

using namespace o2alg;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

inline Rat rand_rat(int max_abs = 6) {
    int num = rand_int(-max_abs, max_abs);
    int den = rand_int(1, max_abs);
    return rat(num, den);
}

inline Rat rand_nonzero_rat(int max_abs = 6) {
    Rat r = rand_rat(max_abs);
    while (is_zero(r)) r = rand_rat(max_abs);
    return r;
}

inline QMatrix rand_qmatrix(std::size_t rows, std::size_t cols, int max_abs = 4) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_rat(max_abs);
    return m;
}

inline QMatrix rand_invertible(std::size_t n) {
    for (;;) {
        QMatrix m = rand_qmatrix(n, n, 3);
        if (m.inverse()) return m;
    }
}

// A random valid complex: conjugate a sum of disks and points by degreewise
// base changes, so d*d = 0 holds by construction but matrices look generic.
inline ChainCx rand_chain(int lo_deg = -2, int hi_deg = 3, int max_pieces = 4) {
    ChainCx x;
    int pieces = rand_int(0, max_pieces);
    for (int p = 0; p < pieces; ++p) {
        int q = rand_int(lo_deg, hi_deg);
        x = direct_sum(x, rand_int(0, 1) ? ChainCx::disk(q) : ChainCx::point(q));
    }
    std::map<int, QMatrix> base;
    for (const auto& [q, dim] : x.spaces().dims())
        base.emplace(q, rand_invertible(static_cast<std::size_t>(dim)));
    std::map<int, QMatrix> d;
    for (const auto& [q, dim] : x.spaces().dims()) {
        QMatrix dq = x.d(q);
        if (dq.rows() == 0 || dq.cols() == 0 || dq.is_zero()) continue;
        QMatrix left = base.at(q - 1);
        QMatrix right = *base.at(q).inverse();
        d[q] = left * dq * right;
    }
    return ChainCx(x.spaces(), std::move(d));
}

// Random graded monomial matrix with legal entries.
inline MonoMat rand_monomat(PolyRing ring, std::size_t rows, std::size_t cols) {
    std::vector<int> rd, cd;
    for (std::size_t i = 0; i < rows; ++i) rd.push_back(rand_int(-4, 4));
    for (std::size_t j = 0; j < cols; ++j) cd.push_back(rand_int(-4, 4));
    MonoMat m(ring, rd, cd);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m.entry_allowed(i, j) && rand_int(0, 2) != 0)
                m(i, j) = rand_rat(4);
    return m;
}

}  // namespace o2test
