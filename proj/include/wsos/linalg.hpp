#pragma once

/**
 * @file linalg.hpp
 * @brief Exact symmetric factorization, definiteness tests and solves.
 *
 * Everything here decides definiteness exactly: is_pd via LDL^T pivots,
 * is_psd via symmetric elimination with largest-diagonal pivoting (a zero
 * pivot is accepted only when its entire residual row vanishes).  Eigenvalue
 * brackets are rational and obtained by bisection on definiteness tests.
 */

#include <optional>

#include "wsos/interval.hpp"
#include "wsos/matrix.hpp"

namespace wsos {

struct NotPdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unit-lower-triangular factor and pivot list of A = L diag(D) L^T.
struct LdlFactorization {
    std::vector<Vec> lower;  // row i holds L(i,0..i-1)
    Vec pivots;

    size_t order() const { return pivots.size(); }
    bool all_pivots_positive() const;
    /// Solves L diag(D) L^T x = b; requires nonzero pivots.
    Vec solve(const Vec& b) const;
    SymMatrix reconstruct() const;
};

/// LDL^T without pivoting.  Fails (nullopt) when a zero pivot has a nonzero
/// residual below it, i.e. the matrix is indefinite or needs pivoting;
/// callers fall back to is_psd for semidefinite questions.
std::optional<LdlFactorization> ldl_factor(const SymMatrix& a);

/// Exact: all LDL^T pivots strictly positive.
bool is_pd(const SymMatrix& a);

/// Exact PSD test by symmetric elimination with diagonal pivoting.
bool is_psd(const SymMatrix& a);

/// Exact solve of A x = b for positive definite A; throws NotPdError.
Vec solve_spd(const SymMatrix& a, const Vec& b);

/// A^{-1} for positive definite A.
SymMatrix inverse_spd(const SymMatrix& a);

/// Exact solve of a general square system via LU with partial pivoting.
Vec solve_general(std::vector<Vec> a, Vec b);

/// Rational lower bound on the smallest eigenvalue of a PD matrix, tightened
/// by definiteness bisection to relative width <= 1/16; exact when the
/// bisection lands on the eigenvalue (the PSD catch).
Rational lambda_min_lower(const SymMatrix& m);

/// Bracket (lo, hi] for the largest eigenvalue, by bisecting on lam*I - M
/// definiteness until hi - lo <= tol or the exact value is caught.
RationalInterval lambda_max_bracket(const SymMatrix& m, const Rational& tol);

/// True iff lambda_max(M) <= lam, decided exactly.
bool lambda_max_at_most(const SymMatrix& m, const Rational& lam);

}  // namespace wsos
