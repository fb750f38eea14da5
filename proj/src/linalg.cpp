#include "wsos/linalg.hpp"

namespace wsos {

namespace {

std::vector<Vec> to_dense(const SymMatrix& a) {
    const size_t n = a.order();
    std::vector<Vec> d(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d[i][j] = a.at(i, j);
    return d;
}

}  // namespace

bool LdlFactorization::all_pivots_positive() const {
    for (const auto& p : pivots)
        if (!p.is_positive()) return false;
    return true;
}

Vec LdlFactorization::solve(const Vec& b) const {
    const size_t n = order();
    if (b.size() != n) throw DimensionError("LdlFactorization: rhs length mismatch");
    Vec z(b);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j) z[i] -= lower[i][j] * z[j];
    for (size_t i = 0; i < n; ++i) {
        if (pivots[i].is_zero()) throw NotPdError("LdlFactorization: zero pivot in solve");
        z[i] /= pivots[i];
    }
    for (size_t i = n; i-- > 0;)
        for (size_t j = i + 1; j < n; ++j) z[i] -= lower[j][i] * z[j];
    return z;
}

SymMatrix LdlFactorization::reconstruct() const {
    const size_t n = order();
    SymMatrix out(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            Rational s(0);
            for (size_t k = 0; k <= i; ++k) {
                const Rational li = (k == i) ? Rational(1) : lower[i][k];
                const Rational lj = (k == j) ? Rational(1) : lower[j][k];
                s += li * pivots[k] * lj;
            }
            out.set(i, j, s);
        }
    }
    return out;
}

std::optional<LdlFactorization> ldl_factor(const SymMatrix& a) {
    const size_t n = a.order();
    auto w = to_dense(a);
    LdlFactorization f;
    f.lower.assign(n, Vec());
    for (size_t i = 0; i < n; ++i) f.lower[i].assign(i, Rational(0));
    f.pivots.assign(n, Rational(0));
    for (size_t k = 0; k < n; ++k) {
        const Rational piv = w[k][k];
        f.pivots[k] = piv;
        if (piv.is_zero()) {
            for (size_t i = k + 1; i < n; ++i)
                if (!w[i][k].is_zero()) return std::nullopt;
            continue;  // zero pivot on a zero row: L column stays e_k
        }
        for (size_t i = k + 1; i < n; ++i) f.lower[i][k] = w[i][k] / piv;
        // symmetric Schur update of the full trailing block
        for (size_t i = k + 1; i < n; ++i) {
            if (f.lower[i][k].is_zero()) continue;
            const Rational& m = f.lower[i][k];
            for (size_t j = k + 1; j < n; ++j) w[i][j] -= m * w[k][j];
        }
    }
    return f;
}

bool is_pd(const SymMatrix& a) {
    const size_t n = a.order();
    auto w = to_dense(a);
    for (size_t k = 0; k < n; ++k) {
        if (!w[k][k].is_positive()) return false;
        for (size_t i = k + 1; i < n; ++i) {
            if (w[k][i].is_zero()) continue;
            const Rational m = w[k][i] / w[k][k];
            for (size_t j = i; j < n; ++j) w[i][j] -= m * w[k][j];
        }
    }
    return true;
}

bool is_psd(const SymMatrix& a) {
    const size_t n = a.order();
    auto w = to_dense(a);
    std::vector<size_t> act(n);
    for (size_t i = 0; i < n; ++i) act[i] = i;
    for (size_t k = 0; k < n; ++k) {
        // diagonal pivoting: bring the largest remaining diagonal entry up front
        size_t best = k;
        for (size_t i = k + 1; i < n; ++i)
            if (w[act[i]][act[i]] > w[act[best]][act[best]]) best = i;
        std::swap(act[k], act[best]);
        const size_t p = act[k];
        const Rational piv = w[p][p];
        if (piv.is_negative()) return false;
        if (piv.is_zero()) {
            for (size_t i = k + 1; i < n; ++i)
                if (!w[p][act[i]].is_zero()) return false;
            continue;
        }
        for (size_t i = k + 1; i < n; ++i) {
            const size_t r = act[i];
            if (w[p][r].is_zero()) continue;
            const Rational m = w[p][r] / piv;
            for (size_t j = i; j < n; ++j) {
                const size_t c = act[j];
                w[r][c] -= m * w[p][c];
                w[c][r] = w[r][c];
            }
        }
    }
    return true;
}

Vec solve_spd(const SymMatrix& a, const Vec& b) {
    auto f = ldl_factor(a);
    if (!f || !f->all_pivots_positive()) throw NotPdError("solve_spd: matrix not positive definite");
    return f->solve(b);
}

SymMatrix inverse_spd(const SymMatrix& a) {
    auto f = ldl_factor(a);
    if (!f || !f->all_pivots_positive()) throw NotPdError("inverse_spd: matrix not positive definite");
    const size_t n = a.order();
    SymMatrix out(n);
    for (size_t j = 0; j < n; ++j) {
        Vec e(n, Rational(0));
        e[j] = Rational(1);
        Vec col = f->solve(e);
        for (size_t i = 0; i <= j; ++i) out.set(i, j, col[i]);
    }
    return out;
}

Vec solve_general(std::vector<Vec> a, Vec b) {
    const size_t n = a.size();
    if (b.size() != n) throw DimensionError("solve_general: rhs length mismatch");
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw SingularError("solve_general: singular system");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const Rational m = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
            b[r] -= m * b[c];
        }
    }
    Vec x(n, Rational(0));
    for (size_t r = n; r-- > 0;) {
        Rational s = b[r];
        for (size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

namespace {

SymMatrix shift_diag(const SymMatrix& m, const Rational& lam, bool negate) {
    // negate=false: M - lam I ; negate=true: lam I - M
    SymMatrix out(m.order());
    for (size_t i = 0; i < m.order(); ++i) {
        for (size_t j = i; j < m.order(); ++j) {
            Rational v = m.at(i, j);
            if (i == j) v -= lam;
            out.set(i, j, negate ? -v : v);
        }
    }
    return out;
}

}  // namespace

Rational lambda_min_lower(const SymMatrix& m) {
    if (!is_pd(m)) throw NotPdError("lambda_min_lower: matrix not positive definite");
    Rational hi = m.max_abs_row_sum();
    {
        const SymMatrix s = shift_diag(m, hi, false);
        if (is_psd(s)) return hi;  // M = hi*I exactly (e.g. scaled identity)
    }
    Rational lo(0);
    const Rational half(1, 2);
    while (true) {
        const Rational mid = (lo + hi) * half;
        const SymMatrix s = shift_diag(m, mid, false);
        if (is_pd(s)) {
            lo = mid;
        } else if (is_psd(s)) {
            return mid;  // mid is exactly lambda_min
        } else {
            hi = mid;
        }
        if (!lo.is_zero() && (hi - lo) * Rational(16) <= lo) return lo;
    }
}

bool lambda_max_at_most(const SymMatrix& m, const Rational& lam) {
    return is_psd(shift_diag(m, lam, true));
}

RationalInterval lambda_max_bracket(const SymMatrix& m, const Rational& tol) {
    if (!tol.is_positive()) throw std::invalid_argument("lambda_max_bracket: tol > 0 required");
    Rational hi = m.max_abs_row_sum();
    if (lambda_max_at_most(m, hi) && !is_pd(shift_diag(m, hi, true)))
        return {hi, hi};  // row-sum bound is attained exactly
    Rational lo = -hi;
    hi += Rational(1);
    const Rational half(1, 2);
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) * half;
        const SymMatrix s = shift_diag(m, mid, true);  // mid*I - M
        if (is_pd(s)) {
            hi = mid;
        } else if (is_psd(s)) {
            return {mid, mid};  // mid is exactly lambda_max
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

}  // namespace wsos
