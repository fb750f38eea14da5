#include "wsos/rational.hpp"

#include <ostream>

namespace wsos {

void Rational::canonicalize() {
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("Rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("Rational: malformed '" + text + "'");
        if (den.find('-') != std::string::npos)
            throw ParseError("Rational: sign belongs on the numerator in '" + text + "'");
        Integer d(den);
        if (d == 0) throw ParseError("Rational: zero denominator in '" + text + "'");
        return Rational(Integer(num), d);
    } catch (const std::invalid_argument&) {
        throw ParseError("Rational: malformed '" + text + "'");
    }
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Integer Rational::ceil() const {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

size_t Rational::bit_size() const {
    const size_t nb = mpz_sizeinbase(q_.get_num_mpz_t(), 2);
    const size_t db = mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    return nb > db ? nb : db;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    const bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), k);
    Rational out(num, den);
    return inv ? out.reciprocal() : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wsos
