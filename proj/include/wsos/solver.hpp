#pragma once

/**
 * @file solver.hpp
 * @brief Rational-arithmetic computation of certified WSOS lower bounds.
 *
 * Each iteration takes one Newton step toward the gradient certificate of
 * t - c*1, rounds the iterate componentwise to denominator N (chosen so the
 * rounded point is still a certificate), improves the bound by solving a
 * scalar quadratic for the largest certified c, and rounds that bound to the
 * rational of smallest denominator in a safe sub-interval.  All comparisons
 * against norms are made on squares; irrational square roots only ever enter
 * through directed rational enclosures.
 */

#include "wsos/certify.hpp"

namespace wsos {

struct InitNotValidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoRealRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyIntervalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NormBoundMode {
    frobenius,  // ||H^{1/2}|| <= ||H||_F^{1/2}; matches the golden disk run
    trace,      // ||H^{1/2}|| <= sqrt_ceil(trace H)
    tight,      // exact ceil from a lambda_max bracket
};

enum class StopMode { delta_c, rho_c };

struct SolverParams {
    Rational r{1, 4};
    Rational r_n{1, 7};
    Rational tolerance{1, 1000000000L};
    unsigned max_iters = 1000;
    StopMode stop_mode = StopMode::delta_c;
    Rational rho_c_constant{0};  // the C of the rho-C stop rule, user supplied
    NormBoundMode norm_mode = NormBoundMode::frobenius;
    unsigned sqrt_bits = 64;     // enclosure precision for c0 and root brackets
    bool re_verify_each_iter = false;

    void validate() const;
    Rational radius_ratio() const { return r / (r + Rational(1)); }      // r/(r+1)
    Rational rounding_inner() const { return r * r / (Rational(1) - Rational(2) * r); }
    Rational rho() const { return radius_ratio() - r_n / (Rational(1) - r_n); }
};

struct IterationRecord {
    unsigned iter = 0;
    Rational c;
    Rational delta_c;
    Integer n;
    size_t max_bits_x = 0;
};

struct IterationTrace {
    std::vector<IterationRecord> records;
};

enum class SolveStatus { converged, max_iters };

struct SolveResult {
    SolveStatus status = SolveStatus::converged;
    Rational c;
    Certificate certificate;
    IterationTrace trace;
    Rational c0;  // the rounded initial bound
};

/// One Newton step toward the gradient certificate of t - c*1: 2x - H(x)^{-1}(t - c 1).
Vec newton_step(const BarrierContext& ctx, const Vec& x, const Vec& t, const Rational& c);

struct RoundedCertificate {
    Vec x_n;
    Integer n;
};

/// Line 2: N from the configured upper bound on ||H(x_plus)^{1/2}||, then the
/// componentwise nearest point of (1/N)Z^U (ties toward +infinity).
RoundedCertificate round_certificate(const BarrierContext& ctx, const Vec& x_plus,
                                     const SolverParams& params);

struct CUpdate {
    RationalInterval root;          // encloses the larger quadratic root
    std::array<Rational, 3> quad;   // A + B c + C c^2 = 0, exact
};

/// Line 3: the scalar quadratic ||x_N - H(x_N)^{-1}(t - c 1)||_{x_N} = r/(r+1),
/// squared; the enclosure of the larger root has width <= 2^-32.
CUpdate c_update(const BarrierContext& ctx, const HessianAt& at_xn, const Vec& t,
                 const Rational& c, const SolverParams& params);

enum class RoundCMode { alg1, alg2 };

/// Line 4: smallest-denominator rational in the safe target sub-interval;
/// re-validated by the sign of the quadratic at the chosen point.
Rational round_c(const Rational& c, const CUpdate& upd, RoundCMode mode);

/// Algorithm 1.  x_init must satisfy ||-g(x) - 1||*_x <= r/(r+1) (checked on
/// squares, exactly); throws InitNotValidError otherwise.
SolveResult algorithm1(const BarrierContext& ctx, const Vec& t, const SolverParams& params,
                       const Vec& x_init, const std::string& digest = "");

/// Algorithm 2: turns any dual-interior x0 into a certificate of the constant
/// one polynomial satisfying the Algorithm 1 precondition.
SolveResult algorithm2(const BarrierContext& ctx, const Vec& x0, const SolverParams& params,
                       const std::string& digest = "");

/// Moment vector x = sum_i q(z_i) of a discrete measure on the given points;
/// throws NotUnisolventError when Lambda(x) fails to be PD.
Vec default_interior_point(const ConeSpec& spec, const LambdaOp& op);

/// Exact check of the Algorithm 1 precondition (squared-norm comparison).
bool init_precondition_holds(const BarrierContext& ctx, const Vec& x, const SolverParams& params);

}  // namespace wsos
