#include "wsos/solver.hpp"

namespace wsos {

void SolverParams::validate() const {
    if (!r.is_positive() || r > Rational(1, 4))
        throw std::invalid_argument("SolverParams: r must lie in (0, 1/4]");
    const Rational lo = rounding_inner();                     // r^2/(1-2r)
    const Rational hi = r / (Rational(1) + Rational(2) * r);  // r/(1+2r)
    if (!(lo < r_n && r_n < hi))
        throw std::invalid_argument("SolverParams: r_N must lie in (r^2/(1-2r), r/(1+2r))");
    if (!tolerance.is_positive()) throw std::invalid_argument("SolverParams: tolerance > 0");
    if (max_iters == 0) throw std::invalid_argument("SolverParams: max_iters >= 1");
    if (stop_mode == StopMode::rho_c && !rho_c_constant.is_positive())
        throw std::invalid_argument("SolverParams: rho_C mode needs a positive C");
    if (sqrt_bits < 8) throw std::invalid_argument("SolverParams: sqrt_bits >= 8");
}

Vec newton_step(const BarrierContext& ctx, const Vec& x, const Vec& t, const Rational& c) {
    const HessianAt at = hessian(ctx, x);
    Vec rhs(t);
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] -= c * ctx.op.one[i];
    const Vec d = at.solve(rhs);
    Vec out(x.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = Rational(2) * x[i] - d[i];
    return out;
}

namespace {

// smallest integer N with N^4 >= s
Integer ceil_fourth_root(const Rational& s) {
    Integer n;
    mpz_sqrt(n.get_mpz_t(), s.floor().get_mpz_t());
    mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
    const Integer num = s.numerator();
    const Integer den = s.denominator();
    auto fourth = [](const Integer& v) -> Integer { return Integer(v * v) * Integer(v * v); };
    while (fourth(n) * den < num) ++n;
    while (n > 0 && fourth(Integer(n - 1)) * den >= num) --n;
    return n;
}

Integer norm_scaled_denominator(const SymMatrix& h, size_t u, const Rational& kappa,
                                NormBoundMode mode) {
    // N = ceil( (sqrt(U)/2) kappa * bound ), bound >= ||H^{1/2}|| = sqrt(lmax(H))
    const Rational scale_sq = Rational(static_cast<long>(u)) * kappa * kappa / Rational(4);
    switch (mode) {
        case NormBoundMode::frobenius:
            // bound^2 = ||H||_F: N^4 >= scale_sq^2 ||H||_F^2
            return ceil_fourth_root(scale_sq * scale_sq * h.frobenius_sq());
        case NormBoundMode::trace: {
            const Rational h_up(sqrt_ceil(h.trace()));
            return sqrt_ceil(scale_sq * h_up * h_up);
        }
        case NormBoundMode::tight: {
            // exact N = ceil(sqrt(scale_sq * lmax)); narrow a bracket until the
            // ceiling is determined, deciding a straddled integer boundary by
            // one exact definiteness test.
            Rational tol(1, 1024);
            while (true) {
                const RationalInterval br = lambda_max_bracket(h, tol);
                if (br.is_point()) return sqrt_ceil(scale_sq * br.lo);
                const Integer nlo = sqrt_ceil(scale_sq * br.lo);
                const Integer nhi = sqrt_ceil(scale_sq * br.hi);
                if (nlo == nhi) return nlo;
                if (nhi == nlo + 1) {
                    const Rational boundary = Rational(Integer(nlo * nlo)) / scale_sq;
                    return lambda_max_at_most(h, boundary) ? nlo : nhi;
                }
                tol /= Rational(1024);
            }
        }
    }
    throw std::logic_error("norm_scaled_denominator: unreachable");
}

Vec round_to_grid(const Vec& v, const Integer& n) {
    Vec out(v.size());
    const Rational half(1, 2);
    for (size_t i = 0; i < v.size(); ++i) {
        const Rational scaled = v[i] * Rational(n) + half;
        out[i] = Rational(scaled.floor(), n);  // ties go toward +infinity
    }
    return out;
}

size_t max_bits(const Vec& v) {
    size_t b = 0;
    for (const auto& c : v) b = std::max(b, c.bit_size());
    return b;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Quadratic for the bound update along u(c) = base + dir_sign * c * 1:
// A + B c + C c^2 = 0 expands nu - 2 x.u + u^T H^{-1} u - (r/(r+1))^2.
CUpdate c_update_directed(const BarrierContext& ctx, const HessianAt& at_xn, const Vec& base,
                          const Rational& dir_sign, const SolverParams& params) {
    Vec dir(ctx.op.one);
    for (auto& v : dir) v *= dir_sign;
    const Vec hinv_base = at_xn.solve(base);
    const Vec hinv_dir = at_xn.solve(dir);
    const Rational nu(static_cast<long>(ctx.nu));
    const Rational rr = params.radius_ratio();
    const Rational a = nu - rr * rr - Rational(2) * dot(at_xn.x, base) + dot(base, hinv_base);
    const Rational b = Rational(2) * (dot(dir, hinv_base) - dot(at_xn.x, dir));
    const Rational cq = dot(dir, hinv_dir);
    const Rational disc = b * b - Rational(4) * a * cq;
    if (disc.is_negative())
        throw NoRealRootError("c_update: negative discriminant (loop invariant violated)");
    unsigned bits = std::max(params.sqrt_bits, 33u);
    const Rational two_c = Rational(2) * cq;
    RationalInterval s = sqrt_interval(disc, bits);
    Rational lo = (-b + s.lo) / two_c;
    Rational hi = (-b + s.hi) / two_c;
    const Rational width_cap = Rational::pow(Rational(1, 2), 32);
    while (hi - lo > width_cap) {
        bits *= 2;
        s = sqrt_interval(disc, bits);
        lo = (-b + s.lo) / two_c;
        hi = (-b + s.hi) / two_c;
    }
    return {RationalInterval{lo, hi}, {a, b, cq}};
}

}  // namespace

RoundedCertificate round_certificate(const BarrierContext& ctx, const Vec& x_plus,
                                     const SolverParams& params) {
    const HessianAt at = hessian(ctx, x_plus);  // proves interiority of x_plus
    const Rational kappa = (Rational(1) + params.r_n) / (params.r_n - params.rounding_inner());
    const Integer n = norm_scaled_denominator(at.h, ctx.op.U, kappa, params.norm_mode);
    Vec x_n = round_to_grid(x_plus, n);
    if (!in_dual_interior(ctx, x_n))
        throw std::logic_error("round_certificate: rounded point left the interior");
    return {std::move(x_n), n};
}

CUpdate c_update(const BarrierContext& ctx, const HessianAt& at_xn, const Vec& t,
                 const Rational& c, const SolverParams& params) {
    (void)c;
    return c_update_directed(ctx, at_xn, t, Rational(-1), params);
}

Rational round_c(const Rational& c, const CUpdate& upd, RoundCMode mode) {
    const Rational& cp_lo = upd.root.lo;
    const Rational& cp_hi = upd.root.hi;
    Rational lo, hi;
    if (mode == RoundCMode::alg1) {
        // target [c + dc/2, c_plus], shrunk inward through the enclosure
        lo = (c + cp_hi) / Rational(2);
        hi = cp_lo;
    } else {
        // target [c + dc/2, c + (2/3) dc]
        lo = c + (cp_hi - c) / Rational(2);
        hi = c + Rational(2, 3) * (cp_lo - c);
    }
    if (lo > hi) throw EmptyIntervalError("round_c: enclosure too wide for the target interval");
    const Rational out = min_denominator_rational(RationalInterval{lo, hi});
    // the quadratic must be <= 0 at the chosen point (inside the root pair),
    // which proves the defining norm inequality
    const Rational q = upd.quad[0] + upd.quad[1] * out + upd.quad[2] * out * out;
    if (q.is_positive()) throw EmptyIntervalError("round_c: chosen point fails the quadratic sign check");
    return out;
}

bool init_precondition_holds(const BarrierContext& ctx, const Vec& x, const SolverParams& params) {
    const HessianAt at = hessian(ctx, x);
    Vec v = lambda_adjoint(ctx.op, at.lambda_inv);  // -g(x)
    for (size_t i = 0; i < v.size(); ++i) v[i] -= ctx.op.one[i];
    const Rational rr = params.radius_ratio();
    return dual_local_norm_sq(at, v) <= rr * rr;
}

namespace {

struct LoopOutcome {
    SolveStatus status;
    Rational c;
    Vec x;
    Integer last_n;
    IterationTrace trace;
};

// Shared main loop.  Algorithm 1: u(c) = t - c 1 (dir_sign -1), stop on delta c.
// Algorithm 2: u(c) = s + c 1 (dir_sign +1), stop once c x certifies 1.
// The Hessian at the rounded iterate is carried into the next iteration, so
// each iteration factors exactly two points: x_plus and x_N.
LoopOutcome main_loop(const BarrierContext& ctx, const Vec& base, const Rational& dir_sign,
                      Rational c0, Vec x0, const SolverParams& params, RoundCMode cmode) {
    LoopOutcome out{SolveStatus::max_iters, std::move(c0), std::move(x0), Integer(0), {}};
    const Vec& one = ctx.op.one;
    const Rational kappa = (Rational(1) + params.r_n) / (params.r_n - params.rounding_inner());
    HessianAt at = hessian(ctx, out.x);
    for (unsigned it = 1; it <= params.max_iters; ++it) {
        // Line 1
        Vec rhs(base);
        for (size_t i = 0; i < rhs.size(); ++i) rhs[i] += dir_sign * out.c * one[i];
        const Vec d = at.solve(rhs);
        Vec x_plus(out.x.size());
        for (size_t i = 0; i < x_plus.size(); ++i) x_plus[i] = Rational(2) * out.x[i] - d[i];

        // Line 2
        const HessianAt at_plus = hessian(ctx, x_plus);  // proves x_plus interior
        const Integer n = norm_scaled_denominator(at_plus.h, ctx.op.U, kappa, params.norm_mode);
        Vec x_n = round_to_grid(x_plus, n);
        try {
            at = hessian(ctx, x_n);
        } catch (const NotInteriorError&) {
            throw std::logic_error("solver: rounded point left the interior");
        }

        // Lines 3 and 4
        unsigned bits = params.sqrt_bits;
        Rational c_next;
        while (true) {
            SolverParams attempt = params;
            attempt.sqrt_bits = bits;
            const CUpdate upd = c_update_directed(ctx, at, base, dir_sign, attempt);
            try {
                c_next = round_c(out.c, upd, cmode);
                break;
            } catch (const EmptyIntervalError&) {
                bits *= 4;
                if (bits > 1u << 20)
                    throw std::logic_error("solver: root enclosure failed to separate");
            }
        }

        const Rational delta = c_next - out.c;
        if (!delta.is_positive())
            throw std::logic_error("solver: bound failed to improve (invariant violated)");

        out.c = c_next;
        out.x = std::move(x_n);
        out.last_n = n;
        out.trace.records.push_back({it, out.c, delta, out.last_n, max_bits(out.x)});

        if (params.re_verify_each_iter) {
            Vec s(base);
            for (size_t i = 0; i < s.size(); ++i) s[i] += dir_sign * out.c * one[i];
            if (!is_dual_certificate(at, ctx, s))
                throw std::logic_error("solver: iterate failed exact re-verification");
        }

        if (cmode == RoundCMode::alg1) {
            const Rational stop_at =
                params.stop_mode == StopMode::delta_c
                    ? params.tolerance
                    : params.rho() * params.rho_c_constant * params.tolerance / Rational(2);
            if (delta <= stop_at) {
                out.status = SolveStatus::converged;
                return out;
            }
        } else if (out.c.is_positive()) {
            // || -g(c x) - 1 ||*_{c x} <= r/(r+1), compared on squares
            const Vec ng = lambda_adjoint(ctx.op, at.lambda_inv);  // -g(x_N)
            Vec v(ng.size());
            for (size_t i = 0; i < v.size(); ++i) v[i] = ng[i] / out.c - one[i];
            const Vec hv = at.solve(v);
            const Rational norm_sq = out.c * out.c * dot(v, hv);
            const Rational rr = params.radius_ratio();
            if (norm_sq <= rr * rr) {
                out.status = SolveStatus::converged;
                return out;
            }
        }
    }
    return out;
}

}  // namespace

SolveResult algorithm1(const BarrierContext& ctx, const Vec& t, const SolverParams& params,
                       const Vec& x_init, const std::string& digest) {
    params.validate();
    if (t.size() != ctx.op.U) throw DimensionError("algorithm1: polynomial length != U");
    const Vec& one = ctx.op.one;

    // precondition and c0, from exact squared norms and directed enclosures
    const HessianAt at0 = hessian(ctx, x_init);
    Vec gap = lambda_adjoint(ctx.op, at0.lambda_inv);
    for (size_t i = 0; i < gap.size(); ++i) gap[i] -= one[i];
    const Rational rr = params.radius_ratio();
    const Rational gap_sq = dual_local_norm_sq(at0, gap);
    if (gap_sq > rr * rr)
        throw InitNotValidError("algorithm1: ||-g(x) - 1||*_x exceeds r/(r+1)");
    const Rational tnorm_sq = dual_local_norm_sq(at0, t);

    // c0 = -||t||*_x / (r/(r+1) - ||-g(x)-1||*_x), floored so the enclosure
    // slack only makes the initial bound safer
    unsigned bits = params.sqrt_bits;
    Rational c0;
    while (true) {
        const Rational num_hi = sqrt_interval(tnorm_sq, bits).hi;
        const Rational den_lo = rr - sqrt_interval(gap_sq, bits).hi;
        if (den_lo.is_positive()) {
            c0 = Rational((-(num_hi / den_lo)).floor());
            break;
        }
        if (bits > 64 * std::max(params.sqrt_bits, 64u))
            throw InitNotValidError("algorithm1: init certificate sits on the precondition boundary");
        bits *= 2;
    }
    if (c0 > Rational(-1)) c0 = Rational(-1);  // keeps the -x/c0 scaling well-defined

    Vec x(x_init.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = -x_init[i] / c0;

    LoopOutcome loop = main_loop(ctx, t, Rational(-1), c0, std::move(x), params, RoundCMode::alg1);

    // exact re-verification of the returned pair
    Vec s(t);
    for (size_t i = 0; i < s.size(); ++i) s[i] -= loop.c * one[i];
    if (!is_dual_certificate(ctx, loop.x, s))
        throw std::logic_error("algorithm1: final certificate failed exact verification");

    SolveResult res;
    res.status = loop.status;
    res.c = loop.c;
    res.c0 = c0;
    res.trace = std::move(loop.trace);
    res.certificate = Certificate{std::move(loop.x), loop.c, loop.last_n, digest, true};
    return res;
}

SolveResult algorithm2(const BarrierContext& ctx, const Vec& x0, const SolverParams& params,
                       const std::string& digest) {
    params.validate();
    const Vec s = neg_gradient(ctx, x0);  // throws NotInteriorError for bad x0
    LoopOutcome loop = main_loop(ctx, s, Rational(1), Rational(0), x0, params, RoundCMode::alg2);

    SolveResult res;
    res.status = loop.status;
    res.c = loop.c;
    res.c0 = Rational(0);
    res.trace = std::move(loop.trace);
    Vec scaled(loop.x.size());
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = loop.c * loop.x[i];
    const bool ok =
        loop.status == SolveStatus::converged && init_precondition_holds(ctx, scaled, params);
    res.certificate = Certificate{std::move(scaled), std::nullopt, loop.last_n, digest, ok};
    return res;
}

Vec default_interior_point(const ConeSpec& spec, const LambdaOp& op) {
    std::vector<Vec> pts = spec.interior_points;
    if (pts.empty()) {
        if (spec.n != 1)
            throw NotUnisolventError(
                "default_interior_point: multivariate cones need explicit interior points");
        // equispaced rational points in the open interval (-1, 1); any
        // dim-many distinct points are unisolvent in the univariate case
        const long u = static_cast<long>(spec.ambient_dim());
        for (long j = 1; j <= u; ++j) pts.push_back({Rational(2 * j - (u + 1), u + 1)});
    }
    Vec x(op.U, Rational(0));
    for (const auto& z : pts) {
        const Vec q = basis_eval_all(spec.q_basis, z);
        for (size_t i = 0; i < x.size(); ++i) x[i] += q[i];
    }
    const BlockDiagMatrix lx = lambda_apply(op, x);
    for (const auto& b : lx.blocks())
        if (!is_pd(b))
            throw NotUnisolventError("default_interior_point: Lambda(x) is not PD for these points");
    return x;
}

}  // namespace wsos
