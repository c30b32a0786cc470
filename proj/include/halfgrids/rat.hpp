#ifndef HALFGRIDS_RAT_HPP
#define HALFGRIDS_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace halfgrids {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0.
using Rat = mpq_class;

inline bool rat_is_integer(const Rat &r) { return r.get_den() == 1; }

// mpq_class(n, d) does not canonicalize on its own.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "p" or "p/q" form.
inline std::string rat_to_string(const Rat &r) {
    if (rat_is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string &s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

} // namespace halfgrids

#endif
