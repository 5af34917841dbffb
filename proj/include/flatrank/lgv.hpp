#pragma once

#include <vector>

#include "flatrank/exact_matrix.hpp"
#include "flatrank/rank_engine.hpp"

namespace flatrank {

// Symmetric binomial matrix: entry(i,j) = prod_t binom(a_i[t]+a_j[t], a_i[t]),
// the Hadamard product of the one-coordinate matrices.
struct GVMatrix {
    std::vector<std::vector<long>> tuples;
    ExactMatrix mat;
};

GVMatrix gv_matrix(const std::vector<std::vector<long>>& tuples);

std::size_t distinct_tuple_count(const std::vector<std::vector<long>>& tuples);

// Exact rank; equals the number of distinct tuples.
RankReport gv_rank(const std::vector<std::vector<long>>& tuples);

// Leading-principal-minor criterion, evaluated exactly; symmetric input required.
bool is_positive_definite(const ExactMatrix& m);

// Exact symmetric congruence reduction with diagonal pivoting.
bool is_positive_semidefinite(const ExactMatrix& m);

ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b);

// Preconditions (A symmetric psd, columns I independent) are verified and
// violations throw; returns whether the principal submatrix A^I_I is nonsingular.
bool principal_submatrix_rank_check(const ExactMatrix& a, const std::vector<int>& idx);

// Middle catalecticant of h_{n,2k}, rows divided by beta!, equals the GV matrix
// of the degree-k exponent tuples and is nonsingular.
bool hnd_gv_crosscheck(int n, int k);

}  // namespace flatrank
