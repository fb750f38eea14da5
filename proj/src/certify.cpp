#include "wsos/certify.hpp"

namespace wsos {

namespace {

SymMatrix sandwich(const SymMatrix& w, const SymMatrix& g) {
    const size_t n = w.order();
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

}  // namespace

bool is_dual_certificate(const HessianAt& at, const BarrierContext& ctx, const Vec& s) {
    if (s.size() != ctx.op.U) throw DimensionError("is_dual_certificate: length mismatch");
    const Vec v = at.solve(s);
    const BlockDiagMatrix lv = lambda_apply(ctx.op, v);
    for (const auto& b : lv.blocks())
        if (!is_psd(b)) return false;
    return true;
}

bool is_dual_certificate(const BarrierContext& ctx, const Vec& x, const Vec& s) {
    const HessianAt at = hessian(ctx, x);  // throws NotInteriorError for bad x
    return is_dual_certificate(at, ctx, s);
}

WsosDecomposition gram_recover(const HessianAt& at, const BarrierContext& ctx, const Vec& s) {
    if (s.size() != ctx.op.U) throw DimensionError("gram_recover: length mismatch");
    const Vec v = at.solve(s);
    const BlockDiagMatrix lv = lambda_apply(ctx.op, v);
    WsosDecomposition dec;
    dec.verified = true;
    for (size_t i = 0; i < lv.block_count(); ++i) {
        SymMatrix si = sandwich(at.lambda_inv.blocks()[i], lv.blocks()[i]);
        const bool psd = is_psd(si);
        dec.gram_blocks.push_back(std::move(si));
        dec.block_psd.push_back(psd);
        dec.verified = dec.verified && psd;
    }
    return dec;
}

WsosDecomposition gram_recover(const BarrierContext& ctx, const Vec& x, const Vec& s) {
    const HessianAt at = hessian(ctx, x);
    return gram_recover(at, ctx, s);
}

bool verify_decomposition(const BarrierContext& ctx, const WsosDecomposition& dec, const Vec& s) {
    if (dec.gram_blocks.size() != ctx.op.L.size()) return false;
    for (size_t i = 0; i < dec.gram_blocks.size(); ++i) {
        if (dec.gram_blocks[i].order() != ctx.op.L[i]) return false;
        if (!is_psd(dec.gram_blocks[i])) return false;
    }
    return lambda_adjoint(ctx.op, dec.as_block_diag()) == s;
}

}  // namespace wsos
