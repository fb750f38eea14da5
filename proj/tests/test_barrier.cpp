#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cones_common.hpp"

using namespace wsos;
using namespace wsos::testing;

namespace {

// enclosure of ln(2), frozen to 18 decimal digits
const Rational kLn2Lo(Integer("693147180559945309"), Integer("1000000000000000000"));
const Rational kLn2Hi(Integer("693147180559945310"), Integer("1000000000000000000"));

Rational block_det(const BlockDiagMatrix& m) {
    Rational det(1);
    for (const auto& b : m.blocks()) {
        auto f = ldl_factor(b);
        REQUIRE(f.has_value());
        for (const auto& p : f->pivots) det *= p;
    }
    return det;
}

// encloses ln(q) for q > 0 via log2
RationalInterval ln_interval(const Rational& q, unsigned bits) {
    const RationalInterval l2 = log2_interval(q, bits);
    // multiply [lo,hi] by [ln2lo, ln2hi], signs arbitrary
    Vec cands{l2.lo * kLn2Lo, l2.lo * kLn2Hi, l2.hi * kLn2Lo, l2.hi * kLn2Hi};
    Rational lo = cands[0], hi = cands[0];
    for (const auto& c : cands) {
        if (c < lo) lo = c;
        if (c > hi) hi = c;
    }
    return {lo, hi};
}

Vec scaled(const Vec& v, const Rational& a) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * a;
    return out;
}

}  // namespace

TEST_CASE("interior membership on the disk") {
    BarrierContext ctx(build_lambda(disk_cone()));
    CHECK(in_dual_interior(ctx, disk_x1()));
    CHECK_FALSE(in_dual_interior(ctx, Vec(6, Rational(0))));
    CHECK_FALSE(in_dual_interior(ctx, scaled(disk_x1(), Rational(-1))));
}

TEST_CASE("disk gradient certificate of the constant one polynomial") {
    BarrierContext ctx(build_lambda(disk_cone()));
    const Vec ng = neg_gradient(ctx, disk_x1());
    CHECK(ng == coeffs({1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(neg_gradient(ctx, Vec(6, Rational(0))), NotInteriorError);
    CHECK_THROWS_AS(hessian(ctx, Vec(6, Rational(0))), NotInteriorError);
}

TEST_CASE("line degree-2 gradient at the identity point") {
    BarrierContext ctx(build_lambda(line_cone(1)));
    // x = (1,0,1) gives Lambda(x) = I_2, so -g = Lambda*(I) = (1,0,1)
    const Vec x = coeffs({1, 0, 1});
    CHECK(neg_gradient(ctx, x) == coeffs({1, 0, 1}));
}

TEST_CASE("disk Hessian identities") {
    BarrierContext ctx(build_lambda(disk_cone()));
    const Vec x1 = disk_x1();
    const HessianAt at = hessian(ctx, x1);
    const Vec ng = neg_gradient(ctx, x1);
    CHECK(at.h.apply(x1) == ng);
    Rational ip(0);
    for (size_t i = 0; i < 6; ++i) ip += ng[i] * x1[i];
    CHECK(ip == Rational(4));  // nu = L1 + L2 = 3 + 1
    CHECK(local_norm_sq(at, x1) == Rational(4));
    CHECK(dual_local_norm_sq(at, ng) == Rational(4));
    CHECK(local_norm_sq(at, Vec(6, Rational(0))) == Rational(0));

    // homogeneity H(2x) = H(x)/4
    const HessianAt at2 = hessian(ctx, scaled(x1, Rational(2)));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i; j < 6; ++j) CHECK(at2.h.at(i, j) * Rational(4) == at.h.at(i, j));
}

TEST_CASE("exact identities on random interior points of small cones") {
    std::mt19937_64 rng(101);
    struct Case {
        ConeSpec spec;
        Domain dom;
    };
    const std::vector<Case> cases{{line_cone(2), Domain::line},
                                  {line_cone(4), Domain::line},
                                  {interval_cone_even(3), Domain::interval},
                                  {interval_cone_odd(3), Domain::interval},
                                  {disk_cone(), Domain::disk}};
    int checked = 0;
    for (const auto& c : cases) {
        BarrierContext ctx(build_lambda(c.spec));
        const Rational nu(static_cast<long>(ctx.nu));
        for (int trial = 0; trial < 5; ++trial) {
            const Vec x = random_interior_point(c.spec, ctx.op, c.dom, rng);
            const HessianAt at = hessian(ctx, x);
            const Vec ng = neg_gradient(ctx, x);
            CHECK(at.h.apply(x) == ng);                 // H(x) x = -g(x)
            CHECK(local_norm_sq(at, x) == nu);          // x^T H x = nu
            CHECK(dual_local_norm_sq(at, ng) == nu);    // ||g||*^2 = nu
            // scaling: g(a x) = g(x)/a and H(a x) = H(x)/a^2 for a = 3/2
            const Rational a(3, 2);
            const Vec ng_scaled = neg_gradient(ctx, scaled(x, a));
            CHECK(scaled(ng_scaled, a) == ng);
            const HessianAt at_scaled = hessian(ctx, scaled(x, Rational(2)));
            for (size_t i = 0; i < ctx.op.U; ++i)
                for (size_t j = i; j < ctx.op.U; ++j)
                    CHECK(at_scaled.h.at(i, j) * Rational(4) == at.h.at(i, j));
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("Hessian is symmetric between both assembly routes") {
    BarrierContext ctx(build_lambda(interval_cone_even(2)));
    std::mt19937_64 rng(7);
    const Vec x = random_interior_point(interval_cone_even(2), ctx.op, Domain::interval, rng);
    const HessianAt at = hessian(ctx, x);
    // H_{jk} = <G_j, W G_k W> must agree with <G_k, W G_j W>; the stored upper
    // triangle was produced by the first route, recompute the transpose route
    const size_t u = ctx.op.U;
    for (size_t j = 0; j < u; ++j) {
        Vec col_j(u, Rational(0));
        for (size_t b = 0; b < ctx.op.L.size(); ++b) {
            const SymMatrix& w = at.lambda_inv.blocks()[b];
            const size_t li = ctx.op.L[b];
            // W G_j W
            SymMatrix mid(li);
            std::vector<Vec> tmp(li, Vec(li, Rational(0)));
            for (size_t r = 0; r < li; ++r)
                for (size_t s = 0; s < li; ++s) {
                    Rational acc(0);
                    for (size_t k2 = 0; k2 < li; ++k2)
                        acc += ctx.op.slices[b][j].at(r, k2) * w.at(k2, s);
                    tmp[r][s] = acc;
                }
            for (size_t r = 0; r < li; ++r)
                for (size_t s = r; s < li; ++s) {
                    Rational acc(0);
                    for (size_t k2 = 0; k2 < li; ++k2) acc += w.at(r, k2) * tmp[k2][s];
                    mid.set(r, s, acc);
                }
            for (size_t k = 0; k < u; ++k) col_j[k] += ctx.op.slices[b][k].inner(mid);
        }
        for (size_t k = 0; k < u; ++k) CHECK(col_j[k] == at.h.at(j, k));
    }
}

TEST_CASE("self-concordance spot check") {
    std::mt19937_64 rng(211);
    BarrierContext ctx(build_lambda(disk_cone()));
    const ConeSpec spec = disk_cone();
    int done = 0;
    std::uniform_int_distribution<long> num(-5, 5);
    while (done < 8) {
        const Vec x = random_interior_point(spec, ctx.op, Domain::disk, rng);
        const HessianAt at = hessian(ctx, x);
        Vec step(ctx.op.U);
        for (auto& v : step) v = Rational(num(rng), 40);
        // scale the step so that ||u - x||_x^2 <= 1/16
        Rational s2 = local_norm_sq(at, step);
        if (s2.is_zero()) continue;
        while (s2 > Rational(1, 16)) {
            step = scaled(step, Rational(1, 2));
            s2 = local_norm_sq(at, step);
        }
        Vec u(ctx.op.U);
        for (size_t i = 0; i < u.size(); ++i) u[i] = x[i] + step[i];
        if (!in_dual_interior(ctx, u)) continue;
        const HessianAt at_u = hessian(ctx, u);
        const Rational delta_hi = sqrt_interval(s2, 32).hi;  // >= ||u-x||_x
        const Rational shrink = (Rational(1) - delta_hi) * (Rational(1) - delta_hi);
        for (int vtrial = 0; vtrial < 4; ++vtrial) {
            Vec v(ctx.op.U);
            for (auto& c : v) c = Rational(num(rng), 3);
            const Rational nx = local_norm_sq(at, v);
            const Rational nu_ = local_norm_sq(at_u, v);
            CHECK(shrink * nx <= nu_);
            CHECK(nu_ * shrink <= nx);
        }
        ++done;
    }
}

TEST_CASE("secant of f brackets the gradient pairing") {
    // f(x) = -ln det Lambda(x); the difference quotient along v must approach
    // <g(x), v> from above (convexity), within the self-concordant remainder.
    std::mt19937_64 rng(401);
    BarrierContext ctx(build_lambda(disk_cone()));
    const ConeSpec spec = disk_cone();
    const Vec x = random_interior_point(spec, ctx.op, Domain::disk, rng);
    const HessianAt at = hessian(ctx, x);
    Vec v(ctx.op.U);
    std::uniform_int_distribution<long> num(-4, 4);
    for (auto& c : v) c = Rational(num(rng), 8);
    // keep ||v||_x modest so the remainder bound below stays small
    while (local_norm_sq(at, v) > Rational(1, 4)) v = scaled(v, Rational(1, 2));
    const Vec ng = neg_gradient(ctx, x);
    Rational gv(0);
    for (size_t i = 0; i < v.size(); ++i) gv -= ng[i] * v[i];  // <g, v>

    const Rational det0 = block_det(lambda_apply(ctx.op, x));
    Rational prev_width(1000000L);
    for (unsigned k = 4; k <= 8; ++k) {
        const Rational h = Rational::pow(Rational(1, 2), k);
        Vec xh(x.size());
        for (size_t i = 0; i < x.size(); ++i) xh[i] = x[i] + h * v[i];
        REQUIRE(in_dual_interior(ctx, xh));
        const Rational deth = block_det(lambda_apply(ctx.op, xh));
        // f(x+hv) - f(x) = ln(det0 / deth)
        const RationalInterval diff = ln_interval(det0 / deth, 48);
        const Rational sec_lo = diff.lo / h;
        const Rational sec_hi = diff.hi / h;
        // convexity: <g,v> <= secant; self-concordance: secant - <g,v> <= 2h||v||_x^2
        CHECK(gv <= sec_hi);
        const Rational slack = Rational(2) * h * local_norm_sq(at, v) + (sec_hi - sec_lo);
        CHECK(sec_lo - gv <= slack + Rational::pow(Rational(1, 2), k));
        const Rational width = sec_hi - gv;
        CHECK(width <= prev_width + Rational::pow(Rational(1, 2), k));
        prev_width = width;
    }
}
