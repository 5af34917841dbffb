#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "flatrank/exact_matrix.hpp"
#include "flatrank/modarith.hpp"

namespace flatrank {

enum class Certainty {
    Exact,                // rational elimination, full-rank witness, or empty matrix
    ProbabilisticExact,   // all configured primes agree on a non-maximal rank
    CertifiedLowerBound,  // modular rank; always <= the rational rank
};

std::string to_string(Certainty c);

struct RankReport {
    int rows = 0, cols = 0;
    int rank = 0;
    Certainty certainty = Certainty::Exact;
    std::vector<std::uint64_t> primes;
    std::string method;
    std::chrono::duration<double> elapsed{0};
};

struct RankOptions {
    int prime_count = 2;
    std::uint64_t seed = 42;
    // Above this many entries the dense exact path refuses to run.
    std::size_t dense_cap = 4'000'000;
    // When the modular rank is not a full-rank witness, confirm it by rational
    // elimination if the matrix fits under dense_cap.
    bool confirm_exact = true;
};

// Seeded stream of distinct 62-bit primes.
std::vector<std::uint64_t> random_primes(int count, std::uint64_t seed);

// Fraction-free (Bareiss) elimination on a denominator-cleared integer copy,
// with smallest-entry pivoting. Throws CapExceeded ("use modular path") when
// rows*cols exceeds opts.dense_cap.
RankReport rank_exact_rational(const ExactMatrix& m, const RankOptions& opts = {});

// Rank of M mod p; throws BadPrime when p divides a stored denominator.
int rank_mod_p(const ExactMatrix& m, std::uint64_t p);

// Max modular rank across primes. Full-rank witness => exact; agreement of two
// or more valid primes => probabilistic-exact; otherwise certified lower bound.
RankReport rank_certified(const ExactMatrix& m, const std::vector<std::uint64_t>& primes);

// Policy driver: modular first, exact confirmation per opts.
RankReport compute_rank(const ExactMatrix& m, const RankOptions& opts = {});

// Streaming row-echelon accumulators: feed rows one at a time, rank is
// available at any point. Rows are reduced against stored pivots only.
class ModEchelon {
public:
    explicit ModEchelon(std::uint64_t p) : p_(p) {}
    // Returns true when the row was independent of the rows seen so far.
    bool insert_row(ModRow row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::uint64_t p_;
    std::vector<ModRow> rows_;                    // pivot-normalized
    std::unordered_map<int, std::size_t> pivot_;  // leading column -> row index
};

class RationalEchelon {
public:
    bool insert_row(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<SparseRow> rows_;
    std::unordered_map<int, std::size_t> pivot_;
};

}  // namespace flatrank
