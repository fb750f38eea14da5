#include "wsos/cone.hpp"

#include <sstream>

namespace wsos {

void ConeSpec::validate() const {
    if (weights.empty()) throw std::invalid_argument("ConeSpec: m >= 1 weights required");
    if (degrees.size() != weights.size() || p_bases.size() != weights.size())
        throw std::invalid_argument("ConeSpec: weights/degrees/p_bases lengths differ");
    q_basis.validate();
    if (q_basis.n != n) throw DimensionError("ConeSpec: q basis variable count mismatch");
    const size_t u = q_basis.dim();
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].size() != u) throw DimensionError("ConeSpec: weight length != U");
        p_bases[i].validate();
        if (p_bases[i].n != n) throw DimensionError("ConeSpec: p basis variable count mismatch");
        if (p_bases[i].degree != degrees[i])
            throw std::invalid_argument("ConeSpec: p basis degree != d_i");
        PolyVec w{q_basis, weights[i]};
        bool zero = true;
        for (const auto& c : weights[i]) zero = zero && c.is_zero();
        if (zero) throw std::invalid_argument("ConeSpec: zero weight polynomial");
        if (poly_degree(w) + 2 * degrees[i] > q_basis.degree)
            throw DimensionError("ConeSpec: deg(w_i) + 2 d_i exceeds the q span");
    }
    for (const auto& z : interior_points)
        if (z.size() != n) throw DimensionError("ConeSpec: interior point arity mismatch");
}

LambdaOp build_lambda(const ConeSpec& spec) {
    spec.validate();
    LambdaOp op;
    op.U = spec.ambient_dim();
    const size_t m = spec.weight_count();
    op.L.resize(m);
    op.slices.resize(m);
    op.one = one_vector(spec.q_basis);
    for (size_t i = 0; i < m; ++i) {
        const BasisId& pb = spec.p_bases[i];
        const size_t li = pb.dim();
        op.L[i] = li;
        op.slices[i].assign(op.U, SymMatrix(li));
        const PolyVec w{spec.q_basis, spec.weights[i]};
        for (size_t j = 0; j < li; ++j) {
            for (size_t k = j; k < li; ++k) {
                // coefficients of w_i * p_{i,j} * p_{i,k} in the q basis
                PolyVec pj = basis_unit(pb, j);
                PolyVec pk = basis_unit(pb, k);
                BasisId mid{BasisKind::monomial, spec.n, 2 * pb.degree, {}};
                PolyVec pjk = basis_product_expand(pj, pk, spec.q_basis.kind == BasisKind::lagrange
                                                               ? spec.q_basis
                                                               : mid);
                PolyVec full = basis_product_expand(pjk, w, spec.q_basis);
                for (size_t u = 0; u < op.U; ++u)
                    if (!full.coeffs[u].is_zero()) op.slices[i][u].set(j, k, full.coeffs[u]);
            }
        }
    }
    return op;
}

BlockDiagMatrix lambda_apply(const LambdaOp& op, const Vec& x) {
    if (x.size() != op.U) throw DimensionError("lambda_apply: vector length != U");
    std::vector<SymMatrix> blocks;
    blocks.reserve(op.L.size());
    for (size_t i = 0; i < op.L.size(); ++i) {
        SymMatrix b(op.L[i]);
        for (size_t u = 0; u < op.U; ++u) {
            if (x[u].is_zero()) continue;
            const SymMatrix& g = op.slices[i][u];
            for (size_t j = 0; j < op.L[i]; ++j)
                for (size_t k = j; k < op.L[i]; ++k)
                    if (!g.at(j, k).is_zero()) b.add_at(j, k, x[u] * g.at(j, k));
        }
        blocks.push_back(std::move(b));
    }
    return BlockDiagMatrix(std::move(blocks));
}

Vec lambda_adjoint(const LambdaOp& op, const BlockDiagMatrix& s) {
    if (s.block_count() != op.L.size()) throw DimensionError("lambda_adjoint: block count mismatch");
    for (size_t i = 0; i < op.L.size(); ++i)
        if (s.blocks()[i].order() != op.L[i])
            throw DimensionError("lambda_adjoint: block order mismatch");
    Vec out(op.U, Rational(0));
    for (size_t i = 0; i < op.L.size(); ++i)
        for (size_t u = 0; u < op.U; ++u) out[u] += op.slices[i][u].inner(s.blocks()[i]);
    return out;
}

namespace {

void digest_feed(uint64_t& h, const std::string& s) {
    // FNV-1a, 64-bit
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
}

std::string basis_repr(const BasisId& b) {
    std::ostringstream os;
    os << to_string(b.kind) << ";" << b.n << ";" << b.degree << ";";
    for (const auto& z : b.nodes) {
        os << "(";
        for (const auto& c : z) os << c.str() << ",";
        os << ")";
    }
    return os.str();
}

}  // namespace

std::string cone_digest(const ConeSpec& spec) {
    uint64_t h = 1469598103934665603ull;
    digest_feed(h, "n=" + std::to_string(spec.n));
    digest_feed(h, "|q=" + basis_repr(spec.q_basis));
    for (size_t i = 0; i < spec.weight_count(); ++i) {
        digest_feed(h, "|w=");
        for (const auto& c : spec.weights[i]) digest_feed(h, c.str() + ",");
        digest_feed(h, "|d=" + std::to_string(spec.degrees[i]));
        digest_feed(h, "|p=" + basis_repr(spec.p_bases[i]));
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
    return os.str();
}

}  // namespace wsos
