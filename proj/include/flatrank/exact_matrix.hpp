#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flatrank/errors.hpp"
#include "flatrank/numeric.hpp"

namespace flatrank {

// One sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Sparse row-major matrix over the rationals; the carrier of every map here.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;

    Rational entry(int i, int j) const;
    void set_entry(int i, int j, Rational v);
    // Replaces row i wholesale; caller guarantees sorted columns and nonzero values.
    void set_row(int i, SparseRow row);
    const SparseRow& row(int i) const { return data_[static_cast<std::size_t>(i)]; }

    ExactMatrix transpose() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_symmetric() const;
    // M == -M^T (requires square).
    bool is_skew_symmetric() const;

private:
    int rows_, cols_;
    std::vector<SparseRow> data_;
};

// Entries reduced modulo a word-sized prime.
using ModRow = std::vector<std::pair<int, std::uint64_t>>;

struct ModMatrix {
    std::uint64_t p = 0;
    int rows = 0, cols = 0;
    std::vector<ModRow> data;
};

// nullopt when p divides some stored denominator.
std::optional<ModMatrix> reduce_mod(const ExactMatrix& m, std::uint64_t p);

std::size_t hash_sparse_row(const SparseRow& row);

}  // namespace flatrank
