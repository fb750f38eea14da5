#pragma once

/**
 * @file barrier.hpp
 * @brief The log-det barrier of the dual WSOS cone: exact gradient, Hessian,
 *        and the local / dual-local norms it induces.
 *
 * f(x) = -ln det Lambda(x) on {x | Lambda(x) > 0}.  The solver only ever
 * needs g(x) = -Lambda*(Lambda(x)^{-1}) and H(x) with
 * H(x) e_k = Lambda*(Lambda(x)^{-1} Lambda(e_k) Lambda(x)^{-1}); f itself is
 * never evaluated on the trust path, so no transcendental values appear.
 */

#include "wsos/cone.hpp"

namespace wsos {

struct NotInteriorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BarrierContext {
    LambdaOp op;
    size_t nu = 0;

    explicit BarrierContext(LambdaOp o) : op(std::move(o)), nu(op.nu()) {}
};

/// Hessian (and the factorizations behind it) at a fixed interior point.
struct HessianAt {
    Vec x;
    SymMatrix h;                            // U x U, PD
    BlockDiagMatrix lambda_x;               // Lambda(x)
    BlockDiagMatrix lambda_inv;             // Lambda(x)^{-1}, block-wise
    std::vector<LdlFactorization> lambda_factors;
    LdlFactorization h_factor;

    Vec solve(const Vec& rhs) const { return h_factor.solve(rhs); }
};

bool in_dual_interior(const BarrierContext& ctx, const Vec& x);

/// -g(x) = Lambda*(Lambda(x)^{-1}); throws NotInteriorError.
Vec neg_gradient(const BarrierContext& ctx, const Vec& x);

/// Assembles H(x) densely, column by column, reusing the factored Lambda(x).
HessianAt hessian(const BarrierContext& ctx, const Vec& x);

/// v^T H(x) v, exact.
Rational local_norm_sq(const HessianAt& h, const Vec& v);

/// s^T H(x)^{-1} s, exact.
Rational dual_local_norm_sq(const HessianAt& h, const Vec& s);

}  // namespace wsos
