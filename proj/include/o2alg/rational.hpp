// Exact rational scalars for the whole library.
//
// Everything downstream assumes Rat is always canonical: lowest terms,
// positive denominator. GMP's mpq_class maintains exactly that, so Rat is a
// thin alias plus parse/print helpers for the "p/q" wire format.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace o2alg {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
inline Rat rat_parse(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Prints canonical "p" or "p/q".
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace o2alg
