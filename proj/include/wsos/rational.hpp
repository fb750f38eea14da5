#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Rational is the only scalar type used on the trust path of the library.
 * Values are always kept in lowest terms with a positive denominator; zero
 * is stored as 0/1.  Serialization is the ASCII form "num/den" ("num" when
 * the denominator is 1), with a leading '-' on the numerator only.
 */

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wsos {

using Integer = mpz_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    Rational(const Integer& num, const Integer& den) : q_(num, den) { canonicalize(); }

    static Rational parse(const std::string& text);

    const Integer numerator() const { return q_.get_num(); }
    const Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    /// Largest integer <= value.
    Integer floor() const;
    /// Smallest integer >= value.
    Integer ceil() const;

    /// max(bits(numerator), bits(denominator)); bit size of 0 is 1.
    size_t bit_size() const;

    std::string str() const;

    /// q^e for integer e (e may be negative when q != 0).
    static Rational pow(const Rational& base, long e);

    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    void canonicalize();

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wsos
