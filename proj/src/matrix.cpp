#include "wsos/matrix.hpp"

namespace wsos {

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
    if (order_ != o.order_) throw DimensionError("SymMatrix: order mismatch");
    SymMatrix out(order_);
    for (size_t k = 0; k < upper_.size(); ++k) out.upper_[k] = upper_[k] + o.upper_[k];
    return out;
}

SymMatrix SymMatrix::operator-() const {
    SymMatrix out(order_);
    for (size_t k = 0; k < upper_.size(); ++k) out.upper_[k] = -upper_[k];
    return out;
}

SymMatrix SymMatrix::scaled(const Rational& a) const {
    SymMatrix out(order_);
    for (size_t k = 0; k < upper_.size(); ++k) out.upper_[k] = upper_[k] * a;
    return out;
}

Rational SymMatrix::trace() const {
    Rational t(0);
    for (size_t i = 0; i < order_; ++i) t += at(i, i);
    return t;
}

Rational SymMatrix::inner(const SymMatrix& o) const {
    if (order_ != o.order_) throw DimensionError("SymMatrix: order mismatch");
    Rational s(0);
    for (size_t i = 0; i < order_; ++i) {
        s += at(i, i) * o.at(i, i);
        for (size_t j = i + 1; j < order_; ++j) {
            const Rational p = at(i, j) * o.at(i, j);
            s += p + p;
        }
    }
    return s;
}

Rational SymMatrix::max_abs_row_sum() const {
    Rational best(0);
    for (size_t i = 0; i < order_; ++i) {
        Rational row(0);
        for (size_t j = 0; j < order_; ++j) row += at(i, j).abs();
        if (row > best) best = row;
    }
    return best;
}

Vec SymMatrix::apply(const Vec& v) const {
    if (v.size() != order_) throw DimensionError("SymMatrix: vector length mismatch");
    Vec out(order_, Rational(0));
    for (size_t i = 0; i < order_; ++i)
        for (size_t j = 0; j < order_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

}  // namespace wsos
