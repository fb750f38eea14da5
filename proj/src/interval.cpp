#include "wsos/interval.hpp"

namespace wsos {

Integer sqrt_ceil(const Rational& q) {
    if (q.is_negative()) throw std::domain_error("sqrt_ceil: negative input");
    if (q.is_zero()) return 0;
    // Start from isqrt(floor(q)) and adjust: n is minimal with n^2*den >= num.
    Integer n;
    mpz_sqrt(n.get_mpz_t(), q.floor().get_mpz_t());
    const Integer& num = q.numerator();
    const Integer& den = q.denominator();
    while (n * n * den < num) ++n;
    while (n > 0 && (n - 1) * (n - 1) * den >= num) --n;
    return n;
}

RationalInterval sqrt_interval(const Rational& q, unsigned bits) {
    if (q.is_negative()) throw std::domain_error("sqrt_interval: negative input");
    if (bits < 1) throw std::invalid_argument("sqrt_interval: bits >= 1 required");
    if (q.is_zero()) return {Rational(0), Rational(0)};
    // floor(sqrt(num * 4^bits / den)) / 2^bits brackets sqrt(q) from below.
    Integer scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * bits);
    Integer x = (q.numerator() * scale) / q.denominator();
    Integer n;
    mpz_sqrt(n.get_mpz_t(), x.get_mpz_t());
    Integer pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), bits);
    Rational lo(n, pow2);
    if (n * n == x && q.numerator() * scale == x * q.denominator()) return {lo, lo};
    return {lo, Rational(n + 1, pow2)};
}

namespace {

// Minimal-denominator rational in [lo, hi] with no integer inside, for the
// recursion below the top level: the smallest integer in the reciprocal
// interval minimizes the final denominator of the continued fraction.
Rational simplest_recurse(const Rational& lo, const Rational& hi) {
    const Integer fl = hi.floor();
    if (Rational(fl) >= lo) {
        const Integer cl = lo.ceil();
        return Rational(cl);
    }
    const Integer n = lo.floor();
    const Rational lof = lo - Rational(n);
    const Rational hif = hi - Rational(n);
    const Rational sub = simplest_recurse(hif.reciprocal(), lof.reciprocal());
    return Rational(n) + sub.reciprocal();
}

}  // namespace

Rational min_denominator_rational(const RationalInterval& iv) {
    const Integer fl = iv.hi.floor();
    if (Rational(fl) >= iv.lo) return Rational(fl);  // largest integer wins ties
    const Integer n = iv.lo.floor();
    const Rational lof = iv.lo - Rational(n);
    const Rational hif = iv.hi - Rational(n);
    const Rational sub = simplest_recurse(hif.reciprocal(), lof.reciprocal());
    return Rational(n) + sub.reciprocal();
}

namespace {

Rational dyadic_floor(const Rational& q, unsigned bits) {
    Integer pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), bits);
    return Rational((q * Rational(pow2)).floor(), pow2);
}

Rational dyadic_ceil(const Rational& q, unsigned bits) {
    Integer pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), bits);
    return Rational((q * Rational(pow2)).ceil(), pow2);
}

// Fractional part of log2(y) for y in [1, 2), by repeated squaring with
// directed dyadic truncation.  Returns [acc, acc + 2^(1-steps_done)].
RationalInterval log2_fraction(const Rational& y, unsigned frac_bits, unsigned prec) {
    Rational lo = dyadic_floor(y, prec);
    Rational hi = dyadic_ceil(y, prec);
    Rational acc(0);
    Rational bit(1, 2);
    const Rational two(2);
    unsigned steps = 0;
    for (unsigned i = 0; i < frac_bits + 2; ++i) {
        lo = dyadic_floor(lo * lo, prec);
        hi = dyadic_ceil(hi * hi, prec);
        if (lo >= two) {
            acc += bit;
            lo /= two;
            hi /= two;
        } else if (hi < two) {
            // bit is 0
        } else {
            break;  // truncation gap straddles 2; caller retries with more precision
        }
        bit /= two;
        ++steps;
    }
    Rational slack = Rational::pow(Rational(1, 2), steps == 0 ? 0 : static_cast<long>(steps) - 1);
    if (steps == 0) slack = Rational(2);
    return {acc, acc + slack};
}

}  // namespace

RationalInterval log2_interval(const Rational& q, unsigned frac_bits) {
    if (!q.is_positive()) throw std::domain_error("log2_interval: input must be positive");
    // Normalize q = 2^k * y with y in [1, 2).
    long k = 0;
    Rational y = q;
    const Rational two(2), one(1);
    while (y >= two) { y /= two; ++k; }
    while (y < one) { y *= two; --k; }
    if (y == one) return {Rational(k), Rational(k)};
    const Rational target = Rational::pow(Rational(1, 2), frac_bits);
    RationalInterval frac{Rational(0), Rational(2)};
    for (unsigned prec = frac_bits + 16; prec <= 16 * (frac_bits + 16); prec *= 2) {
        frac = log2_fraction(y, frac_bits, prec);
        if (frac.width() <= target) break;
    }
    return {Rational(k) + frac.lo, Rational(k) + frac.hi};
}

}  // namespace wsos
