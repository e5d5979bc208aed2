#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "conflie/errors.hpp"

namespace conflie {

// Exact rational scalar. mpq_class keeps values in canonical reduced form
// (gcd 1, positive denominator) through arithmetic.
using Scalar = mpq_class;

inline Scalar scalar_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw precondition_error("cannot parse rational '" + s + "'");
    if (q.get_den() == 0) throw precondition_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical "p/q" form, "/1" omitted.
inline std::string scalar_to_string(const Scalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

using Vec = std::vector<Scalar>;

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace conflie
