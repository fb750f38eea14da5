// wsos: certified WSOS lower bounds, certificates, and bit-size bound
// calculators in exact rational arithmetic.
//
// Exit codes: 0 success; 2 parse/validation error; 3 initialization
// precondition failed; 4 iteration limit reached; 5 cone digest mismatch;
// 6 non-PSD Gram block (input is not a certificate for the polynomial).

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "wsos/bounds.hpp"
#include "wsos/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInit = 3;
constexpr int kExitMaxIters = 4;
constexpr int kExitDigest = 5;
constexpr int kExitNotPsd = 6;

unsigned default_sqrt_bits() {
    if (const char* env = std::getenv("WSOS_SQRT_BITS")) {
        const long v = std::atol(env);
        if (v >= 8 && v <= 1 << 20) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring WSOS_SQRT_BITS=" << env << "\n";
    }
    return 64;
}

struct SolveArgs {
    std::string cone_path, poly_path, out_path, trace_path, init_cert_path;
    std::string tol = "1/1000000000", r = "1/4", rn = "1/7";
    unsigned max_iters = 1000;
    bool tight_norm = false;
    std::string norm_mode = "frobenius";
    std::string rho_c;  // when set, stop once delta c <= rho*C*tol/2 instead
};

wsos::SolverParams make_params(const SolveArgs& a) {
    wsos::SolverParams p;
    p.r = wsos::Rational::parse(a.r);
    p.r_n = wsos::Rational::parse(a.rn);
    p.tolerance = wsos::Rational::parse(a.tol);
    p.max_iters = a.max_iters;
    p.sqrt_bits = default_sqrt_bits();
    if (a.tight_norm || a.norm_mode == "tight") {
        p.norm_mode = wsos::NormBoundMode::tight;
    } else if (a.norm_mode == "trace") {
        p.norm_mode = wsos::NormBoundMode::trace;
    } else if (a.norm_mode == "frobenius") {
        p.norm_mode = wsos::NormBoundMode::frobenius;
    } else {
        throw wsos::ParseError("unknown norm bound mode '" + a.norm_mode + "'");
    }
    if (!a.rho_c.empty()) {
        p.stop_mode = wsos::StopMode::rho_c;
        p.rho_c_constant = wsos::Rational::parse(a.rho_c);
    }
    p.validate();
    return p;
}

int cmd_solve(const SolveArgs& args) {
    const wsos::ConeSpec spec = wsos::read_cone_file(args.cone_path);
    const std::string digest = wsos::cone_digest(spec);
    wsos::BarrierContext ctx(wsos::build_lambda(spec));
    const wsos::Vec t = wsos::read_poly_file(args.poly_path, ctx.op.U);
    const wsos::SolverParams params = make_params(args);

    wsos::Vec x_init;
    if (!args.init_cert_path.empty()) {
        const wsos::Certificate init = wsos::read_certificate_file(args.init_cert_path);
        if (init.cone_digest != digest) {
            std::cerr << "error: init certificate was computed for a different cone\n";
            return kExitDigest;
        }
        x_init = init.x;
    } else {
        const wsos::Vec x0 = wsos::default_interior_point(spec, ctx.op);
        wsos::SolverParams init_params = params;  // --max-iters governs the solve only
        init_params.max_iters = std::max(params.max_iters, 1000u);
        const wsos::SolveResult init = wsos::algorithm2(ctx, x0, init_params, digest);
        if (init.status != wsos::SolveStatus::converged || !init.certificate.verified) {
            std::cerr << "error: initialization did not reach the precondition\n";
            return kExitInit;
        }
        x_init = init.certificate.x;
    }

    wsos::SolveResult res;
    try {
        res = wsos::algorithm1(ctx, t, params, x_init, digest);
    } catch (const wsos::InitNotValidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInit;
    }

    wsos::write_certificate_file(args.out_path, res.certificate);
    if (!args.trace_path.empty()) wsos::write_trace_file(args.trace_path, res.trace);
    std::cout << "c0 " << res.c0 << "\n";
    std::cout << "iterations " << res.trace.records.size() << "\n";
    std::cout << "c " << res.c << " (~" << res.c.to_double() << ")\n";
    std::cout << "verified exactly: yes\n";
    if (res.status == wsos::SolveStatus::max_iters) {
        std::cerr << "stopped at the iteration limit before reaching the tolerance\n";
        return kExitMaxIters;
    }
    return kExitOk;
}

// shared by verify/gram: load everything and check the digest binding
struct VerifySetup {
    wsos::ConeSpec spec;
    std::string digest;
    wsos::Certificate cert;
    wsos::Vec s;  // t - c 1
};

int load_verify_setup(const std::string& cone_path, const std::string& cert_path,
                      const std::string& poly_path, VerifySetup& out) {
    out.spec = wsos::read_cone_file(cone_path);
    out.digest = wsos::cone_digest(out.spec);
    out.cert = wsos::read_certificate_file(cert_path);
    if (out.cert.cone_digest != out.digest) {
        std::cerr << "error: certificate cone_digest " << out.cert.cone_digest
                  << " does not match cone " << out.digest << "\n";
        return kExitDigest;
    }
    out.s = wsos::read_poly_file(poly_path, out.spec.ambient_dim());
    if (out.cert.c) {
        const wsos::Vec one = wsos::one_vector(out.spec.q_basis);
        for (size_t i = 0; i < out.s.size(); ++i) out.s[i] -= *out.cert.c * one[i];
    }
    return kExitOk;
}

int cmd_verify(const std::string& cone_path, const std::string& cert_path,
               const std::string& poly_path) {
    VerifySetup v;
    if (int rc = load_verify_setup(cone_path, cert_path, poly_path, v); rc != kExitOk) return rc;
    wsos::BarrierContext ctx(wsos::build_lambda(v.spec));
    wsos::WsosDecomposition dec;
    try {
        dec = wsos::gram_recover(ctx, v.cert.x, v.s);
    } catch (const wsos::NotInteriorError&) {
        std::cout << "x is not in the dual interior: not a certificate\n";
        return kExitNotPsd;
    }
    for (size_t i = 0; i < dec.block_psd.size(); ++i)
        std::cout << "block " << i + 1 << ": " << (dec.block_psd[i] ? "PSD" : "not PSD") << "\n";
    if (v.cert.c)
        std::cout << "certifies lower bound c = " << *v.cert.c << ": "
                  << (dec.verified ? "yes" : "no") << "\n";
    return dec.verified ? kExitOk : kExitNotPsd;
}

int cmd_gram(const std::string& cone_path, const std::string& cert_path,
             const std::string& poly_path, const std::string& out_path) {
    VerifySetup v;
    if (int rc = load_verify_setup(cone_path, cert_path, poly_path, v); rc != kExitOk) return rc;
    wsos::BarrierContext ctx(wsos::build_lambda(v.spec));
    wsos::WsosDecomposition dec;
    try {
        dec = wsos::gram_recover(ctx, v.cert.x, v.s);
    } catch (const wsos::NotInteriorError&) {
        std::cout << "x is not in the dual interior: not a certificate\n";
        return kExitNotPsd;
    }
    if (!out_path.empty()) wsos::write_decomposition_file(out_path, dec, v.digest);
    // the reconstruction residual Lambda*(S) - s is zero by the recovery
    // identity; print it as computed so the claim is checkable from the output
    const wsos::Vec back = wsos::lambda_adjoint(ctx.op, dec.as_block_diag());
    wsos::Rational residual(0);
    for (size_t i = 0; i < back.size(); ++i) {
        const wsos::Rational d = back[i] - v.s[i];
        residual += d * d;
    }
    std::cout << "reconstruction residual ||Lambda*(S) - s||^2 = " << residual << "\n";
    for (size_t i = 0; i < dec.block_psd.size(); ++i)
        std::cout << "block " << i + 1 << ": " << (dec.block_psd[i] ? "PSD" : "not PSD") << "\n";
    if (!residual.is_zero()) return kExitParse;
    return dec.verified ? kExitOk : kExitNotPsd;
}

int cmd_init(const std::string& cone_path, const std::string& out_path, const SolveArgs& args) {
    const wsos::ConeSpec spec = wsos::read_cone_file(cone_path);
    const std::string digest = wsos::cone_digest(spec);
    wsos::BarrierContext ctx(wsos::build_lambda(spec));
    const wsos::SolverParams params = make_params(args);
    const wsos::Vec x0 = wsos::default_interior_point(spec, ctx.op);
    const wsos::SolveResult res = wsos::algorithm2(ctx, x0, params, digest);
    if (res.status != wsos::SolveStatus::converged || !res.certificate.verified) {
        std::cerr << "error: initialization did not reach the precondition\n";
        return kExitMaxIters;
    }
    wsos::write_certificate_file(out_path, res.certificate);
    std::cout << "iterations " << res.trace.records.size() << "\n";
    std::cout << "precondition check: pass\n";
    return kExitOk;
}

struct BoundArgs {
    std::string kase;
    unsigned d = 1;
    unsigned tau = 0;
    std::string mu, eps, t_norm2_sq;
};

int cmd_bound(const BoundArgs& a) {
    using wsos::Rational;
    const Rational tn2 = Rational::parse(a.t_norm2_sq);
    size_t u = 0, nu = 0;
    Rational cond_m, k1;
    std::optional<Rational> eps;
    if (!a.eps.empty()) eps = Rational::parse(a.eps);

    if (a.kase == "monomial-line") {
        u = 2 * a.d + 1;
        nu = a.d + 1;
        cond_m = Rational::pow(Rational(321, 100), 2 * static_cast<long>(a.d) + 1) / Rational(2);
        k1 = wsos::k1_lower(wsos::K1Case::monomial_line);
        if (!eps) {
            std::cerr << "error: monomial-line needs --eps (no closed-form bound in scope)\n";
            return kExitParse;
        }
    } else if (a.kase == "chebyshev") {
        u = nu = 2 * a.d + 2;
        cond_m = Rational(4);
        k1 = wsos::k1_lower(wsos::K1Case::chebyshev_interval);
        if (!eps && a.tau > 0) {
            // Chebyshev coefficients of bit size tau have monomial bit size
            // at most deg + ... conservatively 2*deg + tau for the degree-D case
            const unsigned deg = 2 * a.d + 1;
            eps = wsos::eps_lower_interval(deg, 2 * deg + a.tau);
        }
    } else if (a.kase == "monomial-interval") {
        u = nu = 2 * a.d + 2;
        cond_m = wsos::cond_upper(wsos::hilbert_matrix(2 * a.d + 2));
        k1 = wsos::k1_lower(wsos::K1Case::monomial_interval);
        if (!eps && a.tau > 0) eps = wsos::eps_lower_interval(2 * a.d + 1, a.tau);
    } else if (a.kase == "lagrange") {
        if (a.mu.empty()) {
            std::cerr << "error: lagrange case needs --mu\n";
            return kExitParse;
        }
        u = nu = 2 * a.d + 2;
        cond_m = Rational(1);
        k1 = wsos::k1_lower(wsos::K1Case::lagrange, Rational::parse(a.mu));
        if (!eps && a.tau > 0) eps = wsos::eps_lower_interval(2 * a.d + 1, a.tau);
    } else {
        std::cerr << "error: unknown case '" << a.kase << "'\n";
        return kExitParse;
    }
    if (!eps) {
        std::cerr << "error: provide --eps or --tau\n";
        return kExitParse;
    }

    wsos::BoundReport rep = wsos::bitsize_bound(u, cond_m, tn2, nu, k1, *eps);
    if (a.tau > 0) rep.epsilon_lower = *eps;
    std::cout << "case " << a.kase << "\n";
    std::cout << "U " << rep.U << "\n";
    std::cout << "nu " << rep.nu << "\n";
    std::cout << "cond_M_upper " << rep.cond_m_upper << "\n";
    std::cout << "k1_lower " << rep.k1_lower << "\n";
    std::cout << "t_norm2_sq " << rep.t_norm2_sq << "\n";
    if (rep.epsilon_lower) std::cout << "epsilon_lower " << *rep.epsilon_lower << "\n";
    std::cout << "N " << rep.n.get_str() << "\n";
    std::cout << "inf_norm_bound " << rep.inf_norm_bound << "\n";
    std::cout << "bitsize_bound " << rep.bitsize_bound << " (~" << rep.bitsize_bound.to_double()
              << " bits)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified WSOS lower bounds in exact rational arithmetic"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "compute a certified lower bound for a polynomial");
    solve->add_option("--cone", solve_args.cone_path, "cone file")->required();
    solve->add_option("--poly", solve_args.poly_path, "polynomial file")->required();
    solve->add_option("--out", solve_args.out_path, "certificate output file")->required();
    solve->add_option("--trace", solve_args.trace_path, "iteration trace output (JSON lines)");
    solve->add_option("--init-cert", solve_args.init_cert_path, "certificate of 1 to start from");
    solve->add_option("--tol", solve_args.tol, "stop once delta c <= tol (rational)");
    solve->add_option("--r", solve_args.r, "radius r in (0, 1/4]");
    solve->add_option("--rn", solve_args.rn, "rounding radius r_N");
    solve->add_option("--max-iters", solve_args.max_iters, "iteration limit");
    solve->add_flag("--tight-norm", solve_args.tight_norm,
                    "use the exact lambda_max bound for the rounding denominator");
    solve->add_option("--norm-bound", solve_args.norm_mode, "frobenius|trace|tight");
    solve->add_option("--rho-c", solve_args.rho_c,
                      "convergence constant C; stops once delta c <= rho*C*tol/2");

    std::string v_cone, v_cert, v_poly;
    auto* verify = app.add_subcommand("verify", "exactly verify a certificate file");
    verify->add_option("--cone", v_cone)->required();
    verify->add_option("--cert", v_cert)->required();
    verify->add_option("--poly", v_poly)->required();

    std::string g_cone, g_cert, g_poly, g_out;
    auto* gram = app.add_subcommand("gram", "recover the explicit WSOS Gram decomposition");
    gram->add_option("--cone", g_cone)->required();
    gram->add_option("--cert", g_cert)->required();
    gram->add_option("--poly", g_poly)->required();
    gram->add_option("--out", g_out, "decomposition output file");

    SolveArgs init_args;
    std::string i_cone, i_out;
    auto* init = app.add_subcommand("init", "compute a certificate of the constant one polynomial");
    init->add_option("--cone", i_cone)->required();
    init->add_option("--out", i_out)->required();
    init->add_option("--r", init_args.r);
    init->add_option("--rn", init_args.rn);
    init->add_option("--max-iters", init_args.max_iters);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "evaluate the integer-certificate bit-size bound");
    bound->add_option("--case", bound_args.kase, "monomial-line|chebyshev|monomial-interval|lagrange")
        ->required();
    bound->add_option("--d", bound_args.d, "half-degree parameter d")->required();
    bound->add_option("--tau", bound_args.tau, "coefficient bit size (derives epsilon)");
    bound->add_option("--mu", bound_args.mu, "interpolant sup-norm constant (lagrange)");
    bound->add_option("--eps", bound_args.eps, "distance to the boundary (rational)");
    bound->add_option("--t-norm2-sq", bound_args.t_norm2_sq, "||t||_2^2 as a rational")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (verify->parsed()) return cmd_verify(v_cone, v_cert, v_poly);
        if (gram->parsed()) return cmd_gram(g_cone, g_cert, g_poly, g_out);
        if (init->parsed()) return cmd_init(i_cone, i_out, init_args);
        if (bound->parsed()) return cmd_bound(bound_args);
    } catch (const wsos::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const wsos::InitNotValidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
