#include "flatrank/koszul.hpp"

#include <algorithm>

namespace flatrank {

WedgeBasis::WedgeBasis(int n, int q) : n_(n), q_(q) {
    if (n < 1 || q < 0 || q > n) throw PreconditionViolation("wedge basis needs 0 <= q <= n");
    std::vector<int> w(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) w[static_cast<std::size_t>(i)] = i;
    if (q == 0) {
        elems_.push_back({});
    } else {
        while (true) {
            elems_.push_back(w);
            int i = q - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == n - q + i) --i;
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < q; ++j)
                w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    pos_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) pos_.emplace(pack(elems_[i]), i);
}

std::size_t WedgeBasis::pack(const std::vector<int>& w) {
    std::size_t h = 1;
    for (int v : w) h = h * 131 + static_cast<std::size_t>(v) + 1;
    return h;
}

std::size_t WedgeBasis::index(const std::vector<int>& w) const {
    auto it = pos_.find(pack(w));
    if (it == pos_.end()) throw PreconditionViolation("wedge index not in basis");
    return it->second;
}

int wedge_insert(const std::vector<int>& I, int k, std::vector<int>& out) {
    int below = 0;
    for (int v : I) {
        if (v == k) return 0;
        if (v < k) ++below;
    }
    out.clear();
    out.reserve(I.size() + 1);
    bool placed = false;
    for (int v : I) {
        if (!placed && k < v) {
            out.push_back(k);
            placed = true;
        }
        out.push_back(v);
    }
    if (!placed) out.push_back(k);
    return (below % 2 == 0) ? 1 : -1;
}

KoszulMatrix koszul_matrix(const RatPoly& p, int s, int q, const FlatteningOptions& opts) {
    if (p.is_zero()) throw PreconditionViolation("koszul flattening of the zero polynomial");
    if (!p.is_homogeneous()) throw NotHomogeneous("not homogeneous");
    int d = p.degree();
    int n = p.vars();
    if (s < 0 || s > d - 1) throw PreconditionViolation("need 0 <= s <= d-1");
    if (q < 0 || q > n - 1) throw PreconditionViolation("need 0 <= q <= n-1");

    WedgeBasis rw(n, q), cw(n, q + 1);
    MonomialBasis rm(n, s, opts.dim_cap), cm(n, d - s - 1, opts.dim_cap);
    std::size_t nrows = rw.size() * rm.size();
    std::size_t ncols = cw.size() * cm.size();
    if (nrows > opts.dim_cap || ncols > opts.dim_cap)
        throw CapExceeded("koszul dimension cap exceeded");

    // Coefficient rows of all order-(s+1) derivatives, indexed by their basis slot.
    MonomialBasis order_up(n, s + 1, opts.dim_cap);
    std::vector<SparseRow> deriv(order_up.size());
    for (std::size_t b = 0; b < order_up.size(); ++b) {
        RatPoly dp = p.diff(order_up.at(b));
        SparseRow row;
        row.reserve(dp.term_count());
        for (const auto& [a, c] : dp.terms())
            row.push_back({static_cast<int>(cm.index(a)), c});
        deriv[b] = std::move(row);
    }

    ExactMatrix m(static_cast<int>(nrows), static_cast<int>(ncols));
    std::vector<int> target;
    for (std::size_t wi = 0; wi < rw.size(); ++wi) {
        const auto& I = rw.at(wi);
        for (std::size_t mi = 0; mi < rm.size(); ++mi) {
            const MultiIndex& J = rm.at(mi);
            SparseRow row;
            for (int k = 0; k < n; ++k) {
                int sign = wedge_insert(I, k, target);
                if (sign == 0) continue;
                const SparseRow& base = deriv[order_up.index(J.plus(MultiIndex::unit(n, k)))];
                if (base.empty()) continue;
                std::size_t block = cw.index(target) * cm.size();
                for (const auto& [j, v] : base)
                    row.push_back({static_cast<int>(block) + j, sign > 0 ? v : -v});
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            m.set_row(static_cast<int>(wi * rm.size() + mi), std::move(row));
        }
    }
    return KoszulMatrix{n, d, s, q, std::move(rw), std::move(cw),
                        std::move(rm), std::move(cm), std::move(m)};
}

RankReport koszul_rank(const RatPoly& p, int s, int q, const FlatteningOptions& opts) {
    return compute_rank(koszul_matrix(p, s, q, opts).mat, opts.rank);
}

Int apriori_bound(int N, int k, int q) {
    if (N < 0 || k < 0 || q < 0) throw PreconditionViolation("arguments must be >= 0");
    Int total(0);
    for (int j = 0; j <= k; ++j) {
        Int term = binomial(N, q - j) * monomial_count(N, k - j);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

KoszulBorderRankLB koszul_border_rank_lb(const RatPoly& p, int s, int q,
                                         const FlatteningOptions& opts) {
    KoszulBorderRankLB out{koszul_rank(p, s, q, opts), binomial(p.vars() - 1, q), Rational(0),
                           Int(0)};
    if (out.denominator == 0) throw PreconditionViolation("denominator binom(N-1,q) is zero");
    out.ratio = Rational(Int(out.rank_report.rank), out.denominator);
    out.ratio.canonicalize();
    mpz_cdiv_q(out.ceiling.get_mpz_t(), Int(out.rank_report.rank).get_mpz_t(),
               out.denominator.get_mpz_t());
    return out;
}

Int fknkosz_bound(int n, int k, int q) {
    if (n <= 2 || 2 * q >= n) throw PreconditionViolation("need n > 2 and q < n/2");
    if (k < 0) throw PreconditionViolation("need k >= 0");
    return binomial(n - 1, q) * (binomial(n + k - 1, k) + q - 1);
}

bool skew_symmetry_check(const RatPoly& p, int q, const FlatteningOptions& opts) {
    int n = p.vars();
    if (n != 2 * q + 1 || q % 2 == 0)
        throw PreconditionViolation("need N = 2q+1 with q odd");
    if (p.is_zero() || !p.is_homogeneous() || p.degree() % 2 == 0)
        throw PreconditionViolation("need homogeneous p of odd degree");
    int k = (p.degree() - 1) / 2;
    KoszulMatrix km = koszul_matrix(p, k, q, opts);

    // Contract each column wedge (size q+1) against the volume form: x_{I'}
    // corresponds to +-1 times the dual of its complement (size q = N-q-1).
    std::size_t cmsize = km.col_monos.size();
    ExactMatrix ident(km.mat.rows(), km.mat.rows());
    if (km.mat.rows() != km.mat.cols())
        throw PreconditionViolation("koszul matrix is not square under this identification");
    for (int r = 0; r < km.mat.rows(); ++r) {
        SparseRow out;
        for (const auto& [j, v] : km.mat.row(r)) {
            std::size_t wi = static_cast<std::size_t>(j) / cmsize;
            std::size_t mi = static_cast<std::size_t>(j) % cmsize;
            const auto& W = km.col_wedges.at(wi);
            std::vector<int> comp;
            comp.reserve(static_cast<std::size_t>(q));
            std::size_t t = 0;
            long shift = 0;
            for (int v2 = 0; v2 < n; ++v2) {
                if (t < W.size() && W[t] == v2) {
                    shift += W[t] - static_cast<long>(t);
                    ++t;
                } else {
                    comp.push_back(v2);
                }
            }
            int sign = (shift % 2 == 0) ? 1 : -1;
            std::size_t col = km.row_wedges.index(comp) * cmsize + mi;
            out.push_back({static_cast<int>(col), sign > 0 ? v : -v});
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ident.set_row(r, std::move(out));
    }
    return ident.is_skew_symmetric();
}

ExactMatrix exterior_derivative_matrix(int n, int q, int t, const FlatteningOptions& opts) {
    if (t < 1) throw PreconditionViolation("exterior derivative step needs t >= 1");
    WedgeBasis rw(n, q), cw(n, q + 1);
    MonomialBasis rm(n, t, opts.dim_cap), cm(n, t - 1, opts.dim_cap);
    ExactMatrix m(static_cast<int>(rw.size() * rm.size()),
                  static_cast<int>(cw.size() * cm.size()));
    std::vector<int> target;
    for (std::size_t wi = 0; wi < rw.size(); ++wi) {
        const auto& I = rw.at(wi);
        for (std::size_t mi = 0; mi < rm.size(); ++mi) {
            const MultiIndex& g = rm.at(mi);
            SparseRow row;
            for (int k = 0; k < n; ++k) {
                if (g[k] == 0) continue;
                int sign = wedge_insert(I, k, target);
                if (sign == 0) continue;
                std::size_t block = cw.index(target) * cm.size();
                std::size_t col = block + cm.index(*g.minus(MultiIndex::unit(n, k)));
                row.push_back({static_cast<int>(col), Rational(sign * g[k])});
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            m.set_row(static_cast<int>(wi * rm.size() + mi), std::move(row));
        }
    }
    return m;
}

}  // namespace flatrank
