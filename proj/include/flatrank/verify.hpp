#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatrank/flattening.hpp"

namespace flatrank {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;  // per-case cap exceeded, reported but not failed
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int prime_count = 2;
    std::size_t term_cap = 500'000;
    std::size_t dim_cap = 200'000;
};

// Full-rank flattening theorems: h_{n,d} (n<=5, d<=6), f_{n,k} (n<=5, k<=3)
// with image divisibility by q_n^{k-e}, ftilde (n<=4, k<=3), bierman (n<=3,
// d<=4), plus the h border-rank corollary values.
std::vector<CheckResult> verify_flattenings(const VerifyOptions& opts = {});

// Matrix-power and diagonal-IMM specializations.
std::vector<CheckResult> verify_specializations(const VerifyOptions& opts = {});

// Gessel-Viennot rank = distinct tuples (seeded), Hadamard definiteness
// (seeded), and the complete-symmetric crosschecks.
std::vector<CheckResult> verify_lgv(const VerifyOptions& opts = {});

// Koszul experiment table (generic / h / ftilde at q=1, s=k) and the ftilde
// Koszul lower bound.
std::vector<CheckResult> verify_koszul(const VerifyOptions& opts = {});

// Shifted-partial dimensions of the permanent at tau = 0.
std::vector<CheckResult> verify_shifted(const VerifyOptions& opts = {});

// The binomial-growth comparison in its stated regime, and the implication
// sufficient-condition => exact inequality on seeded random tuples.
std::vector<CheckResult> verify_nestimate(const VerifyOptions& opts = {});

// Sign convention (delta^2 = 0), Leibniz/commutation, rank semi-continuity
// under the implemented specializations, transpose rank symmetry, and
// modular <= rational rank.
std::vector<CheckResult> verify_structural(const VerifyOptions& opts = {});

std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace flatrank
