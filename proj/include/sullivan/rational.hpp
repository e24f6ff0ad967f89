#pragma once

#include <gmpxx.h>
#include <string>

namespace sullivan {

// Ground field is Q. GMP keeps mpq values canonical (reduced, positive
// denominator) as long as every constructed value is canonicalized once.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace sullivan
