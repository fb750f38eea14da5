#pragma once

/**
 * @file certify.hpp
 * @brief Exact dual-certificate verification and WSOS Gram recovery.
 *
 * x in the dual interior certifies s iff H(x)^{-1} s lies in the dual cone,
 * i.e. Lambda(H(x)^{-1}s) is PSD blockwise.  The closed form
 * S(x,s) = Lambda(x)^{-1} Lambda(H(x)^{-1}s) Lambda(x)^{-1} always satisfies
 * Lambda*(S) = s, and is blockwise PSD exactly when x certifies s.
 */

#include <optional>

#include "wsos/barrier.hpp"

namespace wsos {

struct Certificate {
    Vec x;
    std::optional<Rational> c;   // certified lower bound, when applicable
    std::optional<Integer> n;    // rounding denominator, when applicable
    std::string cone_digest;
    bool verified = false;
};

struct WsosDecomposition {
    std::vector<SymMatrix> gram_blocks;
    std::vector<bool> block_psd;
    bool verified = false;  // all blocks PSD and Lambda*(S) = s

    BlockDiagMatrix as_block_diag() const { return BlockDiagMatrix(gram_blocks); }
};

/// Exact test: Lambda(H(x)^{-1} s) PSD on every block.
bool is_dual_certificate(const BarrierContext& ctx, const Vec& x, const Vec& s);
bool is_dual_certificate(const HessianAt& at, const BarrierContext& ctx, const Vec& s);

/// Recovers S(x,s) per block, with per-block PSD verdicts; Lambda*(S) = s holds
/// for every interior x whether or not x certifies s.
WsosDecomposition gram_recover(const BarrierContext& ctx, const Vec& x, const Vec& s);
WsosDecomposition gram_recover(const HessianAt& at, const BarrierContext& ctx, const Vec& s);

/// True iff Lambda*(dec) = s exactly and every block is PSD.
bool verify_decomposition(const BarrierContext& ctx, const WsosDecomposition& dec, const Vec& s);

}  // namespace wsos
