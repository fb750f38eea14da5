#pragma once

/**
 * @file basis.hpp
 * @brief Polynomial bases (monomial, Chebyshev-T, Lagrange) and exact
 *        coefficient arithmetic between them.
 *
 * Multivariate monomials are ordered by graded lexicographic order (total
 * degree ascending, then exponent vectors lexicographically descending with
 * the first variable largest); this fixes the meaning of every coefficient
 * vector in files and of the Lambda operator below.  Chebyshev bases are
 * univariate.  A Lagrange basis is defined by dim-many pairwise distinct
 * unisolvent nodes; its coefficients are function values at the nodes.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "wsos/linalg.hpp"
#include "wsos/matrix.hpp"

namespace wsos {

enum class BasisKind : uint8_t { monomial, chebyshev, lagrange };

std::string to_string(BasisKind k);
BasisKind basis_kind_from_string(const std::string& s);

struct NotUnisolventError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasisId {
    BasisKind kind = BasisKind::monomial;
    unsigned n = 1;        // variable count
    unsigned degree = 0;   // max degree spanned
    std::vector<Vec> nodes;  // lagrange only: dim-many points in R^n

    bool operator==(const BasisId& o) const = default;

    /// Dimension of the spanned polynomial space = C(n+degree, n).
    size_t dim() const;

    void validate() const;
};

struct PolyVec {
    BasisId basis;
    Vec coeffs;

    bool operator==(const PolyVec& o) const = default;
};

/// Exponent tuples of the monomial basis of V_{n,d} in graded-lex order.
const std::vector<std::vector<unsigned>>& monomial_exponents(unsigned n, unsigned degree);

/// Index of an exponent tuple in the graded-lex list; throws if out of range.
size_t monomial_index(unsigned n, unsigned degree, const std::vector<unsigned>& expo);

/// The unit coefficient vector of the i-th basis polynomial.
PolyVec basis_unit(const BasisId& basis, size_t i);

/// Coefficient vector of the constant one polynomial in the given basis.
Vec one_vector(const BasisId& basis);

/// Evaluates every basis polynomial at a point; the building block of the
/// moment-type matrices M = sum_i alpha_i q(z_i) q(z_i)^T.
Vec basis_eval_all(const BasisId& basis, const Vec& point);

/// Evaluates a polynomial at a rational point, exactly.
Rational evaluate(const PolyVec& p, const Vec& point);

/// Coefficients of p in the monomial basis of the same degree.
Vec to_monomial(const PolyVec& p);

/// Converts monomial coefficients (degree <= target.degree) into the target basis.
PolyVec from_monomial(const BasisId& target, unsigned n, const Vec& mono_coeffs, unsigned mono_degree);

/// Exact product expansion: coefficients of p*q in the target basis.
/// Chebyshev factors use T_a T_b = (T_{a+b} + T_{|a-b|})/2; a Lagrange
/// target multiplies values at its own nodes.
PolyVec basis_product_expand(const PolyVec& p, const PolyVec& q, const BasisId& target);

/// Degree of the polynomial (largest index with nonzero coefficient for
/// monomial/chebyshev; exact degree after interpolation for lagrange).
unsigned poly_degree(const PolyVec& p);

}  // namespace wsos
