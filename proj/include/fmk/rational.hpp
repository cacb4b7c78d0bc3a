#pragma once

#include <gmpxx.h>

#include <string>

#include "fmk/errors.hpp"

namespace fmk {

// All exact arithmetic in the library runs on arbitrary-precision rationals.
// mpq_class keeps results of arithmetic canonical as long as the operands
// are canonical, so the constructors below are the only places that need an
// explicit canonicalize().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q". This is the wire format used everywhere
// rationals appear in JSON or CSV.
inline Rational rat_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rat_abs(const Rational& q) { return abs(q); }

// True iff q is the square of a rational; on success *root is the
// non-negative square root. Used by the exact eigenbasis search, where a
// rational orthogonal matrix exists only if certain norms are squares.
bool rational_square_root(const Rational& q, Rational* root);

}  // namespace fmk
