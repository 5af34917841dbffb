#pragma once

#include <cstdint>

#include "flatrank/polynomial.hpp"
#include "flatrank/symbolic_matrix.hpp"

namespace flatrank {

struct FamilyOptions {
    // Guardrail against accidental exponential blowup of generated polynomials.
    std::size_t term_cap = 500'000;
};

// x_1^d + ... + x_n^d
RatPoly power_sum(int n, int d);

// h_{n,d}: sum of all degree-d monomials, coefficient 1 each.
RatPoly complete_symmetric(int n, int d, const FamilyOptions& opts = {});

// e_{n,d}: sum of all squarefree degree-d monomials; zero when d > n.
RatPoly elementary_symmetric(int n, int d, const FamilyOptions& opts = {});

// (x_1^2 + ... + x_n^2)^k, degree 2k.
RatPoly f_family(int n, int k, const FamilyOptions& opts = {});

// (x_1 + ... + x_n) * f_family(n, k), degree 2k+1.
RatPoly ftilde_family(int n, int k, const FamilyOptions& opts = {});

// Sum over all |alpha| = d of (alpha_1 x_1 + ... + alpha_n x_n)^d.
RatPoly bierman(int n, int d, const FamilyOptions& opts = {});

// Permanent / determinant of an m x m matrix of distinct variables x_{ij},
// variable index i*m + j (row-major).
RatPoly permanent(int m, const FamilyOptions& opts = {});
RatPoly determinant(int m, const FamilyOptions& opts = {});

// trace(X_1 ... X_d) in d*n^2 variables; slot-major, row-major within a slot:
// entry (i,j) of X_alpha is variable alpha*n^2 + i*n + j.
RatPoly imm(int n, int d, const FamilyOptions& opts = {});

// trace(X^d) in n^2 variables, entry (i,j) at index i*n + j.
RatPoly pow_trace(int n, int d, const FamilyOptions& opts = {});

// Random dense homogeneous polynomial of degree d in n variables with integer
// coefficients uniform in [-bound, bound], none zero; deterministic per seed.
RatPoly random_poly(int n, int d, std::uint64_t seed, int bound = 100,
                    const FamilyOptions& opts = {});

// The complex specialization matrix whose even matrix powers trace to 2*q_n^k.
// For n = 2m+1 it is (m+2) x (m+2) with first row (0, y_1^+, ..., y_m^+, x_n),
// first column (0, y_1^-, ..., y_m^-, x_n), zeros elsewhere, y_j^± = x_{2j-1} ± i x_{2j};
// for n = 2m the last row and column are removed.
SymbolicMatrix<GaussianRational> qm_matrix(int n);

// trace(Q^{2k}) == 2 * f_family(n, k), exactly.
bool verify_pow_specialization(int n, int k, const FamilyOptions& opts = {});

// Substituting the diagonal matrix diag(y_1..y_{m^2}, 0, ..) for every slot of
// imm(n, m) yields power_sum(m^2, m); requires m^2 <= n.
bool verify_imm_diagonal_specialization(int m, int n, const FamilyOptions& opts = {});

}  // namespace flatrank
