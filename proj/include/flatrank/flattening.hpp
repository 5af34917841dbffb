#pragma once

#include "flatrank/polynomial.hpp"
#include "flatrank/rank_engine.hpp"

namespace flatrank {

// Matrix of the e-th partial derivative map of a homogeneous p in the fixed
// monomial bases: rows are operators d^beta (|beta| = e), columns are target
// monomials of degree d-e, entry(beta, gamma) = coefficient of x^gamma in
// diff(p, beta).
struct CatalecticantMatrix {
    int n = 0, d = 0, e = 0;
    MonomialBasis row_basis, col_basis;
    ExactMatrix mat;
};

struct FlatteningOptions {
    // Largest admissible target-space dimension.
    std::size_t dim_cap = 200'000;
    RankOptions rank;
};

CatalecticantMatrix catalecticant(const RatPoly& p, int e, const FlatteningOptions& opts = {});

RankReport catalecticant_rank(const RatPoly& p, int e, const FlatteningOptions& opts = {});

// min(dim S^e, dim S^{d-e}) for p's parameters: the rank of a full flattening.
Int full_flattening_rank(int n, int d, int e);

// max_e rank(p_{e,d-e}); the border rank lower bound the flattenings give.
Int flattening_border_rank_lb(const RatPoly& p, const FlatteningOptions& opts = {});

// Span of first derivatives of (monomial of degree d) * q_n fills S^{d+1}.
bool first_derivative_span_check(int n, int d, const FlatteningOptions& opts = {});

struct ShiftedPartialSpace {
    int e = 0, tau = 0;
    long long dim = 0;
    unsigned long long generator_count = 0;  // spanning vectors fed to elimination
    unsigned long long duplicates_skipped = 0;
    Certainty certainty = Certainty::Exact;
    std::string method;
};

struct ShiftedOptions {
    std::size_t dim_cap = 200'000;
    // Streaming elimination runs over Q up to this many target monomials,
    // modularly above it.
    std::size_t exact_threshold = 5'000;
    std::uint64_t seed = 42;
    enum class Method { Auto, ExactRational, Modular } method = Method::Auto;
};

// dim span{x^gamma * diff(p, beta) : |gamma| = tau, |beta| = e}, by streaming
// the product rows into a row-echelon accumulator (duplicate rows skipped).
ShiftedPartialSpace shifted_partials_dim(const RatPoly& p, int e, int tau,
                                         const ShiftedOptions& opts = {});

// binom(n+s+tau-1, s+tau): minimal ideal growth from a full space of s-th partials.
Int macaulay_lower_bound(int n, int s, int tau);

// binom(m,s)^2 * binom(n+tau-1, tau): syzygy-blind upper bound for the permanent.
Int perm_crude_upper_bound(int m, int s, int n, int tau);

// Exact comparison macaulay_lower_bound(n,s,tau) > perm_crude_upper_bound(m,s,n,tau).
bool nestimate_holds(int n, int m, int s, int tau);

// The simpler sufficient condition (n+tau)/(tau+s) > m^2, evaluated exactly.
bool nestimate_sufficient_condition(int n, int m, int s, int tau);

}  // namespace flatrank
