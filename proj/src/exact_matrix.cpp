#include "flatrank/exact_matrix.hpp"

#include <algorithm>

#include "flatrank/modarith.hpp"

namespace flatrank {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)] = {{i, Rational(1)}};
    return m;
}

std::size_t ExactMatrix::nnz() const {
    std::size_t t = 0;
    for (const auto& r : data_) t += r.size();
    return t;
}

Rational ExactMatrix::entry(int i, int j) const {
    const auto& r = data_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) return it->second;
    return Rational(0);
}

void ExactMatrix::set_entry(int i, int j, Rational v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionMismatch("matrix index out of range");
    auto& r = data_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
        if (v == 0)
            r.erase(it);
        else
            it->second = std::move(v);
    } else if (v != 0) {
        r.insert(it, {j, std::move(v)});
    }
}

void ExactMatrix::set_row(int i, SparseRow row) {
    if (!row.empty() && row.back().first >= cols_)
        throw DimensionMismatch("row entry beyond column count");
    data_[static_cast<std::size_t>(i)] = std::move(row);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[static_cast<std::size_t>(i)])
            t.data_[static_cast<std::size_t>(j)].push_back({i, v});
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("nonconformable matrices");
    ExactMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        std::vector<Rational> acc(static_cast<std::size_t>(b.cols_), Rational(0));
        for (const auto& [k, av] : a.data_[static_cast<std::size_t>(i)])
            for (const auto& [j, bv] : b.data_[static_cast<std::size_t>(k)])
                acc[static_cast<std::size_t>(j)] += av * bv;
        SparseRow row;
        for (int j = 0; j < b.cols_; ++j)
            if (acc[static_cast<std::size_t>(j)] != 0)
                row.push_back({j, std::move(acc[static_cast<std::size_t>(j)])});
        r.data_[static_cast<std::size_t>(i)] = std::move(row);
    }
    return r;
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    return *this == transpose();
}

bool ExactMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    // Every stored entry is visited, so a nonzero opposite a structural zero fails.
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[static_cast<std::size_t>(i)])
            if (entry(j, i) != -v) return false;
    return true;
}

std::optional<ModMatrix> reduce_mod(const ExactMatrix& m, std::uint64_t p) {
    ModMatrix out;
    out.p = p;
    out.rows = m.rows();
    out.cols = m.cols();
    out.data.resize(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        ModRow row;
        row.reserve(m.row(i).size());
        for (const auto& [j, v] : m.row(i)) {
            std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
            if (den == 0) return std::nullopt;
            std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
            std::uint64_t r = mulmod(num, inv_mod(den, p), p);
            if (r != 0) row.push_back({j, r});
        }
        out.data[static_cast<std::size_t>(i)] = std::move(row);
    }
    return out;
}

std::size_t hash_sparse_row(const SparseRow& row) {
    std::size_t h = 0x9e3779b97f4a7c15UL;
    for (const auto& [j, v] : row) {
        h ^= static_cast<std::size_t>(j) + 0x517cc1b727220a95UL + (h << 6) + (h >> 2);
        h ^= hash_rational(v) + (h << 5);
        h *= 0x100000001b3UL;
    }
    return h;
}

}  // namespace flatrank
