#include "wsos/barrier.hpp"

namespace wsos {

namespace {

// W * G * W for symmetric W, G (dense triple product, result symmetric).
SymMatrix sym_sandwich(const SymMatrix& w, const SymMatrix& g) {
    const size_t n = w.order();
    // P = G * W
    std::vector<Vec> p(n, Vec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational s(0);
            for (size_t k = 0; k < n; ++k) s += g.at(i, k) * w.at(k, j);
            p[i][j] = std::move(s);
        }
    SymMatrix out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Rational s(0);
            for (size_t k = 0; k < n; ++k) s += w.at(i, k) * p[k][j];
            out.set(i, j, std::move(s));
        }
    return out;
}

struct FactoredLambda {
    BlockDiagMatrix lambda_x;
    BlockDiagMatrix lambda_inv;
    std::vector<LdlFactorization> factors;
};

FactoredLambda factor_lambda(const BarrierContext& ctx, const Vec& x) {
    FactoredLambda out;
    out.lambda_x = lambda_apply(ctx.op, x);
    std::vector<SymMatrix> invs;
    for (const auto& block : out.lambda_x.blocks()) {
        auto f = ldl_factor(block);
        if (!f || !f->all_pivots_positive())
            throw NotInteriorError("barrier: Lambda(x) is not positive definite");
        const size_t li = block.order();
        SymMatrix w(li);
        for (size_t j = 0; j < li; ++j) {
            Vec e(li, Rational(0));
            e[j] = Rational(1);
            Vec col = f->solve(e);
            for (size_t i = 0; i <= j; ++i) w.set(i, j, col[i]);
        }
        invs.push_back(std::move(w));
        out.factors.push_back(std::move(*f));
    }
    out.lambda_inv = BlockDiagMatrix(std::move(invs));
    return out;
}

}  // namespace

bool in_dual_interior(const BarrierContext& ctx, const Vec& x) {
    if (x.size() != ctx.op.U) throw DimensionError("in_dual_interior: vector length != U");
    const BlockDiagMatrix lx = lambda_apply(ctx.op, x);
    for (const auto& b : lx.blocks())
        if (!is_pd(b)) return false;
    return true;
}

Vec neg_gradient(const BarrierContext& ctx, const Vec& x) {
    if (x.size() != ctx.op.U) throw DimensionError("neg_gradient: vector length != U");
    const FactoredLambda f = factor_lambda(ctx, x);
    return lambda_adjoint(ctx.op, f.lambda_inv);
}

HessianAt hessian(const BarrierContext& ctx, const Vec& x) {
    if (x.size() != ctx.op.U) throw DimensionError("hessian: vector length != U");
    FactoredLambda f = factor_lambda(ctx, x);
    const size_t u = ctx.op.U;
    const size_t m = ctx.op.L.size();
    SymMatrix h(u);
    for (size_t col = 0; col < u; ++col) {
        // column col of H is Lambda*( W Lambda(e_col) W ) per block
        std::vector<SymMatrix> mids;
        mids.reserve(m);
        for (size_t i = 0; i < m; ++i)
            mids.push_back(sym_sandwich(f.lambda_inv.blocks()[i], ctx.op.slices[i][col]));
        for (size_t row = 0; row <= col; ++row) {
            Rational s(0);
            for (size_t i = 0; i < m; ++i) s += ctx.op.slices[i][row].inner(mids[i]);
            h.set(row, col, std::move(s));
        }
    }
    auto hf = ldl_factor(h);
    if (!hf || !hf->all_pivots_positive())
        throw NotInteriorError("hessian: H(x) not positive definite");
    HessianAt out;
    out.x = x;
    out.h = std::move(h);
    out.lambda_x = std::move(f.lambda_x);
    out.lambda_inv = std::move(f.lambda_inv);
    out.lambda_factors = std::move(f.factors);
    out.h_factor = std::move(*hf);
    return out;
}

Rational local_norm_sq(const HessianAt& h, const Vec& v) {
    if (v.size() != h.h.order()) throw DimensionError("local_norm_sq: length mismatch");
    const Vec hv = h.h.apply(v);
    Rational s(0);
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * hv[i];
    return s;
}

Rational dual_local_norm_sq(const HessianAt& h, const Vec& s) {
    if (s.size() != h.h.order()) throw DimensionError("dual_local_norm_sq: length mismatch");
    const Vec hs = h.solve(s);
    Rational out(0);
    for (size_t i = 0; i < s.size(); ++i) out += s[i] * hs[i];
    return out;
}

}  // namespace wsos
