#pragma once

/**
 * @file matrix.hpp
 * @brief Dense symmetric rational matrices and block-diagonal aggregates.
 *
 * SymMatrix stores the upper triangle only, so symmetry holds by
 * construction.  All values are immutable-friendly plain data; operations
 * are pure functions.
 */

#include <cstddef>
#include <vector>

#include "wsos/rational.hpp"

namespace wsos {

using Vec = std::vector<Rational>;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SymMatrix {
public:
    SymMatrix() : order_(0) {}
    explicit SymMatrix(size_t order) : order_(order), upper_(order * (order + 1) / 2) {
        if (order == 0) throw std::invalid_argument("SymMatrix: order >= 1 required");
    }

    static SymMatrix identity(size_t order) {
        SymMatrix m(order);
        for (size_t i = 0; i < order; ++i) m.set(i, i, Rational(1));
        return m;
    }

    size_t order() const { return order_; }

    const Rational& at(size_t i, size_t j) const { return upper_[index(i, j)]; }
    void set(size_t i, size_t j, Rational v) { upper_[index(i, j)] = std::move(v); }
    void add_at(size_t i, size_t j, const Rational& v) { upper_[index(i, j)] += v; }

    bool operator==(const SymMatrix& o) const = default;

    SymMatrix operator+(const SymMatrix& o) const;
    SymMatrix operator-() const;
    SymMatrix scaled(const Rational& a) const;

    Rational trace() const;
    /// Frobenius inner product <A, B>.
    Rational inner(const SymMatrix& o) const;
    /// sum of squares of all entries (||A||_F^2).
    Rational frobenius_sq() const { return inner(*this); }
    /// max_i sum_j |A_ij|, an upper bound for the spectral radius.
    Rational max_abs_row_sum() const;

    Vec apply(const Vec& v) const;

private:
    size_t index(size_t i, size_t j) const {
        if (i > j) std::swap(i, j);
        if (j >= order_) throw DimensionError("SymMatrix: index out of range");
        // row-major upper triangle
        return i * order_ - i * (i - 1) / 2 + (j - i);
    }

    size_t order_;
    std::vector<Rational> upper_;
};

class BlockDiagMatrix {
public:
    BlockDiagMatrix() = default;
    explicit BlockDiagMatrix(std::vector<SymMatrix> blocks) : blocks_(std::move(blocks)) {}

    const std::vector<SymMatrix>& blocks() const { return blocks_; }
    std::vector<SymMatrix>& blocks() { return blocks_; }
    size_t block_count() const { return blocks_.size(); }

    size_t total_order() const {
        size_t n = 0;
        for (const auto& b : blocks_) n += b.order();
        return n;
    }

    bool operator==(const BlockDiagMatrix& o) const = default;

private:
    std::vector<SymMatrix> blocks_;
};

}  // namespace wsos
