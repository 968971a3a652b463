#pragma once

#include <gmpxx.h>

#include <string>

namespace curvelab {

/// Exact rational. mpq_class keeps numerator/denominator reduced as long as
/// every value is built through arithmetic or make_rat().
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

/// |r| rounded up to an integer.
inline BigInt ceil_abs(const Rat& r) {
    BigInt q;
    BigInt n = abs(r.get_num());
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

} // namespace curvelab
