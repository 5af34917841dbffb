#pragma once

#include <vector>

#include "flatrank/polynomial.hpp"

namespace flatrank {

// Matrix whose entries are polynomials over one common variable set.
template <class K>
class SymbolicMatrix {
public:
    SymbolicMatrix(int rows, int cols, int vars)
        : rows_(rows), cols_(cols), vars_(vars),
          entries_(static_cast<std::size_t>(rows) * cols, Poly<K>::zero(vars)) {
        if (rows < 1 || cols < 1) throw PreconditionViolation("empty symbolic matrix");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vars() const { return vars_; }

    const Poly<K>& at(int i, int j) const { return entries_[idx(i, j)]; }
    void set(int i, int j, Poly<K> p) {
        if (p.vars() != vars_) throw ArityMismatch("arity mismatch in symbolic matrix entry");
        entries_[idx(i, j)] = std::move(p);
    }

    friend SymbolicMatrix operator*(const SymbolicMatrix& a, const SymbolicMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("nonconformable symbolic matrices");
        if (a.vars_ != b.vars_) throw ArityMismatch("arity mismatch between symbolic matrices");
        SymbolicMatrix r(a.rows_, b.cols_, a.vars_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                Poly<K> s = Poly<K>::zero(a.vars_);
                for (int k = 0; k < a.cols_; ++k) {
                    if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                    s += a.at(i, k) * b.at(k, j);
                }
                r.set(i, j, std::move(s));
            }
        return r;
    }

    SymbolicMatrix pow(int e) const {
        if (rows_ != cols_) throw DimensionMismatch("power of a non-square symbolic matrix");
        if (e < 1) throw PreconditionViolation("symbolic matrix power needs e >= 1");
        SymbolicMatrix r = *this;
        for (int i = 1; i < e; ++i) r = r * *this;
        return r;
    }

    Poly<K> trace() const {
        if (rows_ != cols_) throw DimensionMismatch("trace of a non-square symbolic matrix");
        Poly<K> s = Poly<K>::zero(vars_);
        for (int i = 0; i < rows_; ++i) s += at(i, i);
        return s;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_, cols_, vars_;
    std::vector<Poly<K>> entries_;
};

}  // namespace flatrank
