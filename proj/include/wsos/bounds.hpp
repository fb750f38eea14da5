#pragma once

/**
 * @file bounds.hpp
 * @brief Conditioning matrices, rounding denominators, and bit-size bound
 *        evaluation for integer dual certificates.
 *
 * The chain is: a unisolvent moment-type matrix M bounds ||H(y)|| by
 * cond(M) ||t||^2; the rounding denominator N = ceil(3/2 sqrt(U cond(M)) ||t||)
 * makes the componentwise rounding of the gradient certificate a certificate
 * again; k_1 and epsilon bound its sup norm; N * y_N is the integer
 * certificate whose sup norm the report bounds.
 */

#include "wsos/basis.hpp"
#include "wsos/interval.hpp"

namespace wsos {

struct MSpec {
    std::vector<Vec> points;  // in S_w, at least U of them
    Vec alphas;               // positive weights, same length
};

enum class K1Case { monomial_line, chebyshev_interval, monomial_interval, lagrange };

struct BoundReport {
    size_t U = 0;
    size_t nu = 0;
    Rational cond_m_upper;
    Rational k1_lower;
    Rational t_norm2_sq;
    std::optional<Rational> epsilon_lower;
    Integer n;                 // rounding denominator
    Rational inf_norm_bound;   // 1/2 + N nu / (k1 eps)
    Rational bitsize_bound;    // upper end of a log2 enclosure of inf_norm_bound
};

/// M = sum_i alpha_i q(z_i) q(z_i)^T; throws NotUnisolventError unless PD.
SymMatrix build_M(const BasisId& q_basis, const MSpec& spec);

/// Rational upper bound on cond(M) = lmax/lmin: lmax by the largest absolute
/// row sum, lmin by exact definiteness bisection.  Throws NotPdError.
Rational cond_upper(const SymMatrix& m);

/// cond(M) * ||t||_2^2, the Hessian norm bound of the gradient certificate.
Rational hessian_norm_bound(const Rational& cond_m, const Vec& t);

/// N = ceil((3/2) sqrt(U cond(M)) ||t||_2), computed exactly on squares.
Integer denominator_N(size_t u, const Rational& cond_m, const Vec& t);
Integer denominator_N_from_sq(size_t u, const Rational& cond_m, const Rational& t_norm2_sq);

/// Closed-form k_1 lower bounds of the studied bases; lagrange needs mu > 0.
Rational k1_lower(K1Case c, const std::optional<Rational>& mu = std::nullopt);

/// ||y||_inf <= nu / (k1 eps).
Rational gradient_norm_bound(size_t nu, const Rational& k1, const Rational& eps);

/// Safe integer-exponent weakening 3^floor(d/2) / (2^((2d-1)tau) (d+1)^(2d))
/// of the minimum-value lower bound for degree-d positive polynomials on
/// [-1,1] with integer coefficients of bit size <= tau.
Rational eps_lower_interval(unsigned d, unsigned tau);

/// ybar = N * y_N; every component of y_N must have denominator dividing N.
std::vector<Integer> integer_certificate(const Vec& y_n, const Integer& n);

/// Evaluates the integer-certificate sup-norm bound and packages the report.
BoundReport bitsize_bound(size_t u, const Rational& cond_m, const Rational& t_norm2_sq,
                          size_t nu, const Rational& k1, const Rational& eps);

/// The explicit Chebyshev-node matrix of order 2d+1 (closed form; the
/// second-kind nodes themselves are irrational for d >= 2).
SymMatrix chebyshev_node_matrix(unsigned d);

/// Hilbert matrix of the given order (moment matrix of the uniform measure
/// on [0,1]), the conditioning witness for the monomial interval case.
SymMatrix hilbert_matrix(size_t order);

}  // namespace wsos
