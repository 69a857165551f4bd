#ifndef VISOBS_RATIONAL_HPP
#define VISOBS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace visobs {

/// Exact rational scalar. All geometry in this library is computed over Q;
/// there is no floating point anywhere in a predicate.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Parses "num", "num/den" or "-num/den".
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return r;
}

/// Canonical text form "num/den" (reduced, den > 0). Used by all file formats.
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Convert to double for rendering only; never feeds back into predicates.
inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace visobs

#endif
