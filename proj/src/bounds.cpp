#include "wsos/bounds.hpp"

#include "wsos/linalg.hpp"

namespace wsos {

SymMatrix build_M(const BasisId& q_basis, const MSpec& spec) {
    const size_t u = q_basis.dim();
    if (spec.points.size() < u)
        throw NotUnisolventError("build_M: need at least U points");
    if (spec.alphas.size() != spec.points.size())
        throw DimensionError("build_M: alphas/points length mismatch");
    for (const auto& a : spec.alphas)
        if (!a.is_positive()) throw std::invalid_argument("build_M: alphas must be positive");
    SymMatrix m(u);
    for (size_t p = 0; p < spec.points.size(); ++p) {
        const Vec q = basis_eval_all(q_basis, spec.points[p]);
        for (size_t i = 0; i < u; ++i)
            for (size_t j = i; j < u; ++j) m.add_at(i, j, spec.alphas[p] * q[i] * q[j]);
    }
    if (!is_pd(m)) throw NotUnisolventError("build_M: point set is not unisolvent (M not PD)");
    return m;
}

Rational cond_upper(const SymMatrix& m) {
    if (!is_pd(m)) throw NotPdError("cond_upper: matrix not positive definite");
    const Rational lmax_ub = m.max_abs_row_sum();
    const Rational lmin_lb = lambda_min_lower(m);
    return lmax_ub / lmin_lb;
}

Rational hessian_norm_bound(const Rational& cond_m, const Vec& t) {
    if (cond_m < Rational(1)) throw std::invalid_argument("hessian_norm_bound: cond >= 1 required");
    Rational n2(0);
    for (const auto& c : t) n2 += c * c;
    return cond_m * n2;
}

Integer denominator_N_from_sq(size_t u, const Rational& cond_m, const Rational& t_norm2_sq) {
    // ceil( sqrt( (9/4) U cond(M) ||t||^2 ) )
    const Rational arg = Rational(9, 4) * Rational(static_cast<long>(u)) * cond_m * t_norm2_sq;
    return sqrt_ceil(arg);
}

Integer denominator_N(size_t u, const Rational& cond_m, const Vec& t) {
    Rational n2(0);
    for (const auto& c : t) n2 += c * c;
    return denominator_N_from_sq(u, cond_m, n2);
}

Rational k1_lower(K1Case c, const std::optional<Rational>& mu) {
    switch (c) {
        case K1Case::monomial_line:
        case K1Case::chebyshev_interval:
        case K1Case::monomial_interval:
            return Rational(1);
        case K1Case::lagrange:
            if (!mu || !mu->is_positive())
                throw std::invalid_argument("k1_lower: lagrange case needs mu > 0");
            return mu->reciprocal();
    }
    throw std::logic_error("k1_lower: unreachable");
}

Rational gradient_norm_bound(size_t nu, const Rational& k1, const Rational& eps) {
    if (!k1.is_positive() || !eps.is_positive())
        throw std::invalid_argument("gradient_norm_bound: k1, eps > 0 required");
    return Rational(static_cast<long>(nu)) / (k1 * eps);
}

Rational eps_lower_interval(unsigned d, unsigned tau) {
    if (d < 1 || tau < 1) throw std::invalid_argument("eps_lower_interval: d, tau >= 1 required");
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), 3, d / 2);
    Integer den1;
    mpz_ui_pow_ui(den1.get_mpz_t(), 2, static_cast<unsigned long>(2 * d - 1) * tau);
    Integer den2;
    mpz_ui_pow_ui(den2.get_mpz_t(), d + 1, 2 * d);
    return Rational(num, den1 * den2);
}

std::vector<Integer> integer_certificate(const Vec& y_n, const Integer& n) {
    if (n <= 0) throw std::invalid_argument("integer_certificate: N > 0 required");
    std::vector<Integer> out;
    out.reserve(y_n.size());
    for (const auto& c : y_n) {
        if (!mpz_divisible_p(n.get_mpz_t(), c.denominator().get_mpz_t()))
            throw std::invalid_argument("integer_certificate: component denominator does not divide N");
        out.push_back(c.numerator() * (n / c.denominator()));
    }
    return out;
}

BoundReport bitsize_bound(size_t u, const Rational& cond_m, const Rational& t_norm2_sq,
                          size_t nu, const Rational& k1, const Rational& eps) {
    if (!cond_m.is_positive() || !k1.is_positive() || !eps.is_positive() || t_norm2_sq.is_negative())
        throw std::invalid_argument("bitsize_bound: positive inputs required");
    BoundReport rep;
    rep.U = u;
    rep.nu = nu;
    rep.cond_m_upper = cond_m;
    rep.k1_lower = k1;
    rep.t_norm2_sq = t_norm2_sq;
    rep.n = denominator_N_from_sq(u, cond_m, t_norm2_sq);
    rep.inf_norm_bound = Rational(1, 2) + Rational(rep.n) * gradient_norm_bound(nu, k1, eps);
    rep.bitsize_bound = log2_interval(rep.inf_norm_bound, 20).hi;
    return rep;
}

SymMatrix chebyshev_node_matrix(unsigned d) {
    if (d < 1) throw std::invalid_argument("chebyshev_node_matrix: d >= 1 required");
    const size_t u = 2 * d + 1;
    SymMatrix m(u);
    for (size_t i = 0; i < u; ++i) {
        for (size_t j = i; j < u; ++j) {
            if (i == j) {
                m.set(i, j, Rational((i == 0 || i == u - 1) ? long(2 * d + 1) : long(d + 1)));
            } else if ((i + j) % 2 == 0) {
                m.set(i, j, Rational(1));
            }
        }
    }
    return m;
}

SymMatrix hilbert_matrix(size_t order) {
    SymMatrix m(order);
    for (size_t i = 0; i < order; ++i)
        for (size_t j = i; j < order; ++j) m.set(i, j, Rational(1, static_cast<long>(i + j + 1)));
    return m;
}

}  // namespace wsos
