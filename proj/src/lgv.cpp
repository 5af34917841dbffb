#include "flatrank/lgv.hpp"

#include <set>

#include "flatrank/families.hpp"
#include "flatrank/flattening.hpp"

namespace flatrank {

GVMatrix gv_matrix(const std::vector<std::vector<long>>& tuples) {
    if (tuples.empty()) throw PreconditionViolation("need at least one tuple");
    std::size_t m = tuples[0].size();
    if (m < 1) throw PreconditionViolation("tuples must have length >= 1");
    for (const auto& t : tuples) {
        if (t.size() != m) throw PreconditionViolation("length mismatch among tuples");
        for (long v : t)
            if (v < 0) throw PreconditionViolation("tuple entries must be >= 0");
    }
    int n = static_cast<int>(tuples.size());
    ExactMatrix mat(n, n);
    for (int i = 0; i < n; ++i) {
        SparseRow row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            Int e(1);
            for (std::size_t t = 0; t < m; ++t) {
                long ai = tuples[static_cast<std::size_t>(i)][t];
                long aj = tuples[static_cast<std::size_t>(j)][t];
                e *= binomial(ai + aj, ai);
            }
            row.push_back({j, Rational(e)});
        }
        mat.set_row(i, std::move(row));
    }
    return GVMatrix{tuples, std::move(mat)};
}

std::size_t distinct_tuple_count(const std::vector<std::vector<long>>& tuples) {
    return std::set<std::vector<long>>(tuples.begin(), tuples.end()).size();
}

RankReport gv_rank(const std::vector<std::vector<long>>& tuples) {
    return rank_exact_rational(gv_matrix(tuples).mat);
}

namespace {

std::vector<std::vector<Rational>> dense_copy(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> a(
        static_cast<std::size_t>(m.rows()),
        std::vector<Rational>(static_cast<std::size_t>(m.cols()), Rational(0)));
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    return a;
}

}  // namespace

bool is_positive_definite(const ExactMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionViolation("non-symmetric input");
    int n = m.rows();
    if (n == 0) return true;
    // Fraction-free elimination without pivoting: the k-th pivot is the k-th
    // leading principal minor (scaled by the positive row lcms), so a zero or
    // negative pivot settles the answer.
    auto a = dense_copy(m);
    std::vector<Int> b(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto at = [&](int i, int j) -> Int& {
        return b[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    std::vector<Rational> scale(static_cast<std::size_t>(n), Rational(1));
    for (int i = 0; i < n; ++i) {
        Int lcm(1);
        for (int j = 0; j < n; ++j) {
            Int g;
            mpz_lcm(g.get_mpz_t(), lcm.get_mpz_t(),
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_den().get_mpz_t());
            lcm = g;
        }
        for (int j = 0; j < n; ++j) {
            const Rational& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            at(i, j) = v.get_num() * (lcm / v.get_den());
        }
    }
    Int prev(1);
    for (int k = 0; k < n; ++k) {
        if (at(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return true;
}

bool is_positive_semidefinite(const ExactMatrix& m) {
    if (!m.is_symmetric()) throw PreconditionViolation("non-symmetric input");
    int n = m.rows();
    auto a = dense_copy(m);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        // Diagonal pivot with the smallest index; psd matrices always offer one
        // unless the remaining block is zero.
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (!done[static_cast<std::size_t>(i)] &&
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
                piv = i;
        if (piv < 0) {
            for (int i = 0; i < n; ++i) {
                if (done[static_cast<std::size_t>(i)]) continue;
                for (int j = 0; j < n; ++j)
                    if (!done[static_cast<std::size_t>(j)] &&
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                        return false;  // zero diagonal, nonzero block: indefinite
            }
            return true;
        }
        const Rational d = a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(piv)];
        if (d < 0) return false;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)] || i == piv) continue;
            const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv)] / d;
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (done[static_cast<std::size_t>(j)] || j == piv) continue;
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(j)];
            }
        }
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv)] = 0;
            a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(i)] = 0;
        }
        done[static_cast<std::size_t>(piv)] = 1;
    }
    return true;
}

ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("dimension mismatch in Hadamard product");
    ExactMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        SparseRow row;
        const auto& ra = a.row(i);
        const auto& rb = b.row(i);
        std::size_t x = 0, y = 0;
        while (x < ra.size() && y < rb.size()) {
            if (ra[x].first < rb[y].first) {
                ++x;
            } else if (rb[y].first < ra[x].first) {
                ++y;
            } else {
                row.push_back({ra[x].first, ra[x].second * rb[y].second});
                ++x;
                ++y;
            }
        }
        r.set_row(i, std::move(row));
    }
    return r;
}

bool principal_submatrix_rank_check(const ExactMatrix& a, const std::vector<int>& idx) {
    if (!is_positive_semidefinite(a))
        throw PreconditionViolation("matrix is not positive semidefinite");
    for (int i : idx)
        if (i < 0 || i >= a.cols()) throw PreconditionViolation("index out of range");
    // Column independence check.
    ExactMatrix colsub(a.rows(), static_cast<int>(idx.size()));
    for (int i = 0; i < a.rows(); ++i) {
        SparseRow row;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            Rational v = a.entry(i, idx[t]);
            if (v != 0) row.push_back({static_cast<int>(t), std::move(v)});
        }
        colsub.set_row(i, std::move(row));
    }
    if (rank_exact_rational(colsub).rank != static_cast<int>(idx.size()))
        throw PreconditionViolation("selected columns are not linearly independent");

    ExactMatrix sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < idx.size(); ++c) {
            Rational v = a.entry(idx[r], idx[c]);
            if (v != 0) row.push_back({static_cast<int>(c), std::move(v)});
        }
        sub.set_row(static_cast<int>(r), std::move(row));
    }
    return rank_exact_rational(sub).rank == static_cast<int>(idx.size());
}

bool hnd_gv_crosscheck(int n, int k) {
    if (n < 1 || k < 1) throw PreconditionViolation("need n >= 1, k >= 1");
    CatalecticantMatrix cat = catalecticant(complete_symmetric(n, 2 * k), k);
    std::vector<std::vector<long>> tuples;
    tuples.reserve(cat.row_basis.size());
    for (const auto& beta : cat.row_basis.elements()) {
        std::vector<long> t(beta.exps().begin(), beta.exps().end());
        tuples.push_back(std::move(t));
    }
    GVMatrix gv = gv_matrix(tuples);
    for (std::size_t r = 0; r < cat.row_basis.size(); ++r) {
        const auto& beta = cat.row_basis.at(r);
        Int bfact(1);
        for (int i = 0; i < n; ++i) bfact *= factorial(beta[i]);
        for (std::size_t c = 0; c < cat.col_basis.size(); ++c) {
            Rational expected = Rational(bfact) * gv.mat.entry(static_cast<int>(r),
                                                               static_cast<int>(c));
            if (cat.mat.entry(static_cast<int>(r), static_cast<int>(c)) != expected)
                return false;
        }
    }
    return rank_exact_rational(gv.mat).rank == static_cast<int>(gv.mat.rows());
}

}  // namespace flatrank
