#pragma once

#include "flatrank/flattening.hpp"
#include "flatrank/polynomial.hpp"
#include "flatrank/rank_engine.hpp"

namespace flatrank {

// Basis of the q-th exterior power: strictly increasing index tuples,
// enumerated in lexicographic order.
class WedgeBasis {
public:
    WedgeBasis(int n, int q);

    int vars() const { return n_; }
    int size_q() const { return q_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<int>& at(std::size_t pos) const { return elems_[pos]; }
    std::size_t index(const std::vector<int>& w) const;

private:
    int n_, q_;
    std::vector<std::vector<int>> elems_;
    std::unordered_map<std::size_t, std::size_t> pos_;  // packed key -> position

    static std::size_t pack(const std::vector<int>& w);
};

// Sign and target of x_k ^ x_I: (-1)^{#\{i in I : i < k\}} x_{sort(I u k)};
// sign 0 when k already lies in I.
int wedge_insert(const std::vector<int>& I, int k, std::vector<int>& out);

// Matrix of the composition (exterior derivative) o (id tensor s-th flattening):
// rows (I, J) with |I| = q, |J| = s; columns (I', J') with |I'| = q+1,
// |J'| = d-s-1; row pairs are wedge-major, monomial-minor.
struct KoszulMatrix {
    int n = 0, d = 0, s = 0, q = 0;
    WedgeBasis row_wedges, col_wedges;
    MonomialBasis row_monos, col_monos;
    ExactMatrix mat;
};

KoszulMatrix koszul_matrix(const RatPoly& p, int s, int q, const FlatteningOptions& opts = {});

RankReport koszul_rank(const RatPoly& p, int s, int q, const FlatteningOptions& opts = {});

// Alternating upper bound for the rank at s = k for degree 2k+1:
// sum_{j=0..k} (-1)^j binom(N, q-j) binom(N+k-j-1, k-j).
Int apriori_bound(int N, int k, int q);

struct KoszulBorderRankLB {
    RankReport rank_report;
    Int denominator;  // binom(N-1, q)
    Rational ratio;   // rank / denominator
    Int ceiling;
};

KoszulBorderRankLB koszul_border_rank_lb(const RatPoly& p, int s, int q,
                                         const FlatteningOptions& opts = {});

// binom(n-1,q) * (binom(n+k-1,k) + q - 1); requires n > 2 and q < n/2.
Int fknkosz_bound(int n, int k, int q);

// For N = 2q+1 with q odd, degree 2k+1 and s = k: identify the column space
// with the row space by contraction with the volume form and report whether
// the resulting square matrix is skew-symmetric.
bool skew_symmetry_check(const RatPoly& p, int q, const FlatteningOptions& opts = {});

// Pure exterior-derivative step on Lambda^q tensor S^t (for the delta^2 = 0 test).
ExactMatrix exterior_derivative_matrix(int n, int q, int t,
                                       const FlatteningOptions& opts = {});

}  // namespace flatrank
