#include "wsos/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace wsos {

std::string to_string(BasisKind k) {
    switch (k) {
        case BasisKind::monomial: return "monomial";
        case BasisKind::chebyshev: return "chebyshev";
        case BasisKind::lagrange: return "lagrange";
    }
    return "?";
}

BasisKind basis_kind_from_string(const std::string& s) {
    if (s == "monomial") return BasisKind::monomial;
    if (s == "chebyshev") return BasisKind::chebyshev;
    if (s == "lagrange") return BasisKind::lagrange;
    throw ParseError("unknown basis kind '" + s + "'");
}

namespace {

size_t binom(unsigned a, unsigned b) {
    if (b > a) return 0;
    size_t r = 1;
    for (unsigned i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

void gen_exponents(unsigned nvars, unsigned total, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
    if (cur.size() + 1 == nvars) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    // first variable largest: descending exponent gives lex-descending order
    for (unsigned e = total + 1; e-- > 0;) {
        cur.push_back(e);
        gen_exponents(nvars, total - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<std::vector<unsigned>>& monomial_exponents(unsigned n, unsigned degree) {
    static std::map<std::pair<unsigned, unsigned>, std::vector<std::vector<unsigned>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<unsigned>> list;
    for (unsigned d = 0; d <= degree; ++d) {
        std::vector<unsigned> cur;
        gen_exponents(n, d, cur, list);
    }
    return cache.emplace(key, std::move(list)).first->second;
}

size_t monomial_index(unsigned n, unsigned degree, const std::vector<unsigned>& expo) {
    const auto& list = monomial_exponents(n, degree);
    auto it = std::find(list.begin(), list.end(), expo);
    if (it == list.end()) throw DimensionError("monomial_index: exponent out of range");
    return static_cast<size_t>(it - list.begin());
}

size_t BasisId::dim() const {
    if (kind == BasisKind::lagrange) return nodes.size();
    return binom(n + degree, n);
}

void BasisId::validate() const {
    if (n < 1) throw std::invalid_argument("BasisId: n >= 1 required");
    if (kind == BasisKind::chebyshev && n != 1)
        throw std::invalid_argument("BasisId: chebyshev basis is univariate");
    if (kind == BasisKind::lagrange) {
        if (nodes.size() != binom(n + degree, n))
            throw NotUnisolventError("BasisId: lagrange needs exactly dim-many nodes");
        for (const auto& z : nodes)
            if (z.size() != n) throw DimensionError("BasisId: node arity mismatch");
        for (size_t i = 0; i < nodes.size(); ++i)
            for (size_t j = i + 1; j < nodes.size(); ++j)
                if (nodes[i] == nodes[j])
                    throw NotUnisolventError("BasisId: duplicate lagrange nodes");
    } else if (!nodes.empty()) {
        throw std::invalid_argument("BasisId: nodes only apply to lagrange bases");
    }
}

PolyVec basis_unit(const BasisId& basis, size_t i) {
    const size_t u = basis.dim();
    if (i >= u) throw DimensionError("basis_unit: index out of range");
    Vec c(u, Rational(0));
    c[i] = Rational(1);
    return {basis, std::move(c)};
}

Vec one_vector(const BasisId& basis) {
    const size_t u = basis.dim();
    Vec c(u, Rational(0));
    if (basis.kind == BasisKind::lagrange) {
        c.assign(u, Rational(1));  // values at the nodes
    } else {
        c[0] = Rational(1);  // first basis polynomial is the constant 1
    }
    return c;
}

namespace {

Rational eval_monomial(const std::vector<unsigned>& expo, const Vec& point) {
    Rational r(1);
    for (size_t v = 0; v < expo.size(); ++v)
        for (unsigned e = 0; e < expo[v]; ++e) r *= point[v];
    return r;
}

Vec chebyshev_values(unsigned degree, const Rational& z) {
    Vec t(degree + 1);
    t[0] = Rational(1);
    if (degree >= 1) t[1] = z;
    for (unsigned k = 2; k <= degree; ++k) t[k] = Rational(2) * z * t[k - 1] - t[k - 2];
    return t;
}

// Node evaluation matrix Q with Q[l][u] = mono_u(z_l); its LU solve converts
// Lagrange coefficients (= node values) to monomial coefficients and conversely.
std::vector<Vec> node_matrix(const BasisId& basis) {
    const auto& expos = monomial_exponents(basis.n, basis.degree);
    std::vector<Vec> q(basis.nodes.size(), Vec(expos.size()));
    for (size_t l = 0; l < basis.nodes.size(); ++l)
        for (size_t u = 0; u < expos.size(); ++u) q[l][u] = eval_monomial(expos[u], basis.nodes[l]);
    return q;
}

Vec cheb_to_monomial(const Vec& coeffs) {
    // accumulate T_k recurrence: T_{k} = 2 z T_{k-1} - T_{k-2}
    const size_t u = coeffs.size();
    Vec out(u, Rational(0));
    Vec tm2(u, Rational(0)), tm1(u, Rational(0));
    for (size_t k = 0; k < u; ++k) {
        Vec tk(u, Rational(0));
        if (k == 0) {
            tk[0] = Rational(1);
        } else if (k == 1) {
            tk[1] = Rational(1);
        } else {
            for (size_t j = 0; j + 1 < u; ++j) tk[j + 1] = Rational(2) * tm1[j];
            for (size_t j = 0; j < u; ++j) tk[j] -= tm2[j];
        }
        if (!coeffs[k].is_zero())
            for (size_t j = 0; j < u; ++j) out[j] += coeffs[k] * tk[j];
        tm2 = std::move(tm1);
        tm1 = std::move(tk);
    }
    return out;
}

Vec monomial_to_cheb(const Vec& mono) {
    // z^k in the T basis via repeated multiplication by z:
    // z*T_0 = T_1, z*T_j = (T_{j+1} + T_{j-1})/2 for j >= 1.
    const size_t u = mono.size();
    Vec out(u, Rational(0));
    Vec zk(u, Rational(0));
    zk[0] = Rational(1);  // z^0 = T_0
    for (size_t k = 0; k < u; ++k) {
        if (!mono[k].is_zero())
            for (size_t j = 0; j < u; ++j) out[j] += mono[k] * zk[j];
        if (k + 1 < u) {
            Vec nxt(u, Rational(0));
            const Rational half(1, 2);
            for (size_t j = 0; j < u; ++j) {
                if (zk[j].is_zero()) continue;
                if (j == 0) {
                    nxt[1] += zk[0];
                } else {
                    nxt[j + 1] += half * zk[j];
                    nxt[j - 1] += half * zk[j];
                }
            }
            zk = std::move(nxt);
        }
    }
    return out;
}

}  // namespace

Vec basis_eval_all(const BasisId& basis, const Vec& point) {
    if (point.size() != basis.n) throw DimensionError("basis_eval_all: point arity mismatch");
    switch (basis.kind) {
        case BasisKind::monomial: {
            const auto& expos = monomial_exponents(basis.n, basis.degree);
            Vec out(expos.size());
            for (size_t u = 0; u < expos.size(); ++u) out[u] = eval_monomial(expos[u], point);
            return out;
        }
        case BasisKind::chebyshev:
            return chebyshev_values(basis.degree, point[0]);
        case BasisKind::lagrange: {
            // cardinal values q_l(z): solve Q^T y = m(z)
            auto q = node_matrix(basis);
            const size_t u = q.size();
            std::vector<Vec> qt(u, Vec(u));
            for (size_t i = 0; i < u; ++i)
                for (size_t j = 0; j < u; ++j) qt[i][j] = q[j][i];
            BasisId mono{BasisKind::monomial, basis.n, basis.degree, {}};
            Vec m = basis_eval_all(mono, point);
            try {
                return solve_general(std::move(qt), std::move(m));
            } catch (const SingularError&) {
                throw NotUnisolventError("basis_eval_all: lagrange nodes not unisolvent");
            }
        }
    }
    throw std::logic_error("basis_eval_all: unreachable");
}

Rational evaluate(const PolyVec& p, const Vec& point) {
    if (p.coeffs.size() != p.basis.dim()) throw DimensionError("evaluate: coefficient length mismatch");
    const Vec vals = basis_eval_all(p.basis, point);
    Rational s(0);
    for (size_t i = 0; i < vals.size(); ++i) s += p.coeffs[i] * vals[i];
    return s;
}

Vec to_monomial(const PolyVec& p) {
    switch (p.basis.kind) {
        case BasisKind::monomial:
            return p.coeffs;
        case BasisKind::chebyshev:
            return cheb_to_monomial(p.coeffs);
        case BasisKind::lagrange: {
            auto q = node_matrix(p.basis);
            try {
                return solve_general(std::move(q), p.coeffs);
            } catch (const SingularError&) {
                throw NotUnisolventError("to_monomial: lagrange nodes not unisolvent");
            }
        }
    }
    throw std::logic_error("to_monomial: unreachable");
}

PolyVec from_monomial(const BasisId& target, unsigned n, const Vec& mono_coeffs, unsigned mono_degree) {
    if (n != target.n) throw DimensionError("from_monomial: variable count mismatch");
    if (mono_degree > target.degree) throw DimensionError("from_monomial: degree overflow");
    const auto& src = monomial_exponents(n, mono_degree);
    switch (target.kind) {
        case BasisKind::monomial: {
            const auto& dst = monomial_exponents(n, target.degree);
            Vec out(dst.size(), Rational(0));
            for (size_t i = 0; i < src.size(); ++i)
                if (!mono_coeffs[i].is_zero()) out[monomial_index(n, target.degree, src[i])] = mono_coeffs[i];
            return {target, std::move(out)};
        }
        case BasisKind::chebyshev: {
            Vec padded(target.degree + 1, Rational(0));
            for (size_t i = 0; i < mono_coeffs.size(); ++i) padded[i] = mono_coeffs[i];
            return {target, monomial_to_cheb(padded)};
        }
        case BasisKind::lagrange: {
            Vec out(target.nodes.size());
            PolyVec p{BasisId{BasisKind::monomial, n, mono_degree, {}}, mono_coeffs};
            for (size_t l = 0; l < target.nodes.size(); ++l) out[l] = evaluate(p, target.nodes[l]);
            return {target, std::move(out)};
        }
    }
    throw std::logic_error("from_monomial: unreachable");
}

unsigned poly_degree(const PolyVec& p) {
    Vec mono = to_monomial(p);
    const auto& expos = monomial_exponents(p.basis.n, p.basis.degree);
    unsigned out = 0;
    for (size_t i = 0; i < mono.size(); ++i) {
        if (mono[i].is_zero()) continue;
        unsigned d = 0;
        for (unsigned e : expos[i]) d += e;
        out = std::max(out, d);
    }
    return out;
}

PolyVec basis_product_expand(const PolyVec& p, const PolyVec& q, const BasisId& target) {
    if (p.basis.n != q.basis.n || p.basis.n != target.n)
        throw DimensionError("basis_product_expand: variable count mismatch");
    if (p.coeffs.size() != p.basis.dim() || q.coeffs.size() != q.basis.dim())
        throw DimensionError("basis_product_expand: coefficient length mismatch");

    if (target.kind == BasisKind::lagrange) {
        Vec out(target.nodes.size());
        for (size_t l = 0; l < target.nodes.size(); ++l)
            out[l] = evaluate(p, target.nodes[l]) * evaluate(q, target.nodes[l]);
        // degree contract still applies even though values always exist
        if (poly_degree(p) + poly_degree(q) > target.degree)
            throw DimensionError("basis_product_expand: degree overflow");
        return {target, std::move(out)};
    }

    if (p.basis.kind == BasisKind::chebyshev && q.basis.kind == BasisKind::chebyshev &&
        target.kind == BasisKind::chebyshev) {
        // T_a T_b = (T_{a+b} + T_{|a-b|}) / 2
        Vec out(target.degree + 1, Rational(0));
        const Rational half(1, 2);
        for (size_t a = 0; a < p.coeffs.size(); ++a) {
            if (p.coeffs[a].is_zero()) continue;
            for (size_t b = 0; b < q.coeffs.size(); ++b) {
                if (q.coeffs[b].is_zero()) continue;
                const Rational c = p.coeffs[a] * q.coeffs[b] * half;
                const size_t sum = a + b;
                const size_t dif = a > b ? a - b : b - a;
                if (sum >= out.size())
                    throw DimensionError("basis_product_expand: degree overflow");
                out[sum] += c;
                out[dif] += c;
            }
        }
        return {target, std::move(out)};
    }

    // general route: multiply exactly in the monomial basis
    const unsigned dp = poly_degree(p), dq = poly_degree(q);
    if (dp + dq > target.degree) throw DimensionError("basis_product_expand: degree overflow");
    const Vec mp = to_monomial(p);
    const Vec mq = to_monomial(q);
    const unsigned n = p.basis.n;
    const auto& ep = monomial_exponents(n, p.basis.degree);
    const auto& eq = monomial_exponents(n, q.basis.degree);
    const unsigned dprod = dp + dq;
    const auto& eout = monomial_exponents(n, dprod);
    Vec prod(eout.size(), Rational(0));
    for (size_t i = 0; i < mp.size(); ++i) {
        if (mp[i].is_zero()) continue;
        for (size_t j = 0; j < mq.size(); ++j) {
            if (mq[j].is_zero()) continue;
            std::vector<unsigned> e(n);
            for (unsigned v = 0; v < n; ++v) e[v] = ep[i][v] + eq[j][v];
            prod[monomial_index(n, dprod, e)] += mp[i] * mq[j];
        }
    }
    return from_monomial(target, n, prod, dprod);
}

}  // namespace wsos
