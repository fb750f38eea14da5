#pragma once

/**
 * @file interval.hpp
 * @brief Rational intervals enclosing the few irrational quantities the
 *        library ever touches (square roots and base-2 logarithms), plus
 *        integer square-root ceilings and smallest-denominator selection.
 *
 * Nothing on the trust path takes a square root: comparisons are made on
 * squares, and where an enclosure is genuinely needed (root brackets,
 * reported logarithms) it is a pair of exact rationals.
 */

#include <vector>

#include "wsos/rational.hpp"

namespace wsos {

struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool is_point() const { return lo == hi; }
};

/// Smallest integer n with n >= sqrt(q).  Rejects q < 0.
Integer sqrt_ceil(const Rational& q);

/// Encloses sqrt(q): lo^2 <= q <= hi^2 and hi - lo <= 2^-bits.  Exact squares
/// come back as point intervals.  Rejects q < 0 and bits < 1.
RationalInterval sqrt_interval(const Rational& q, unsigned bits);

/// The rational of minimal denominator in [lo, hi]; among minimal-denominator
/// candidates (possible only at denominator 1) the largest is returned.
Rational min_denominator_rational(const RationalInterval& iv);

/// Encloses log2(q) for q > 0 with width <= 2^-frac_bits (short of a pathological
/// near-dyadic input, where the returned interval may be slightly wider).
RationalInterval log2_interval(const Rational& q, unsigned frac_bits);

}  // namespace wsos
