#pragma once

/**
 * @file cone.hpp
 * @brief WSOS cone data and the exact Lambda / Lambda* operators.
 *
 * A cone is described by weights w_1..w_m (coefficient vectors in the q
 * basis), degree vector d, the q basis of the spanned space, and a p basis
 * for each weight.  build_lambda produces the unique linear maps
 * Lambda_i : R^U -> S^{L_i} with Lambda_i(q) = w_i p_i p_i^T, stored as exact
 * rational coefficient slices G_i[u] so that Lambda_i(x) = sum_u x_u G_i[u]
 * and (Lambda_i^*(S))_u = <G_i[u], S>.
 */

#include <string>
#include <vector>

#include "wsos/basis.hpp"

namespace wsos {

struct ConeSpec {
    unsigned n = 1;                    // variable count
    BasisId q_basis;                   // basis of the spanned space, dim U
    std::vector<Vec> weights;          // each of length U, in the q basis
    std::vector<unsigned> degrees;     // d_i, half-degrees of the SOS factors
    std::vector<BasisId> p_bases;      // basis of V_{n,d_i} for each i
    std::vector<Vec> interior_points;  // optional: unisolvent sample points in S_w

    size_t weight_count() const { return weights.size(); }
    size_t ambient_dim() const { return q_basis.dim(); }

    void validate() const;
};

struct LambdaOp {
    size_t U = 0;
    std::vector<size_t> L;                         // block orders L_1..L_m
    std::vector<std::vector<SymMatrix>> slices;    // slices[i][u] = Lambda_i(e_u)
    Vec one;                                       // coefficients of the constant 1

    size_t nu() const {
        size_t s = 0;
        for (size_t li : L) s += li;
        return s;
    }
};

/// Builds the Lambda operator; throws NotUnisolventError for bad Lagrange
/// nodes and DimensionError when a weight/degree pair overflows the q span.
LambdaOp build_lambda(const ConeSpec& spec);

/// Exact block evaluation Lambda(x).
BlockDiagMatrix lambda_apply(const LambdaOp& op, const Vec& x);

/// Exact adjoint: <Lambda(x), S> = <x, lambda_adjoint(S)> for all x.
Vec lambda_adjoint(const LambdaOp& op, const BlockDiagMatrix& s);

/// Content hash of the canonical cone serialization, binding certificates to
/// the cone they were computed for.
std::string cone_digest(const ConeSpec& spec);

}  // namespace wsos
