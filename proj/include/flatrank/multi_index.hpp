#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "flatrank/errors.hpp"
#include "flatrank/numeric.hpp"

namespace flatrank {

// Exponent vector of fixed length; doubles as a monomial and as a differential operator.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> exps);
    static MultiIndex zero(int n);
    static MultiIndex unit(int n, int i);

    int size() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exps() const { return exps_; }

    MultiIndex plus(const MultiIndex& o) const;
    // Componentwise difference; nullopt when any entry would go negative.
    std::optional<MultiIndex> minus(const MultiIndex& o) const;
    bool divides(const MultiIndex& o) const;  // *this <= o componentwise

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

// Strict "greater" in graded reverse lexicographic order: higher degree first;
// within a degree, a > b iff the last nonzero entry of a - b is negative.
struct GrevlexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& a) const;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& a);

// All degree-d multi-indices in n variables, enumerated in descending grevlex
// order, with positional lookup in both directions.
class MonomialBasis {
public:
    // Throws CapExceeded when binom(n+d-1, d) exceeds size_cap.
    MonomialBasis(int n, int d, std::size_t size_cap = kDefaultSizeCap);

    static constexpr std::size_t kDefaultSizeCap = 5'000'000;

    int vars() const { return n_; }
    int degree() const { return d_; }
    std::size_t size() const { return elems_.size(); }
    const MultiIndex& at(std::size_t pos) const { return elems_[pos]; }
    const std::vector<MultiIndex>& elements() const { return elems_; }
    // Position of a degree-d multi-index; throws PreconditionViolation otherwise.
    std::size_t index(const MultiIndex& a) const;

private:
    int n_, d_;
    std::vector<MultiIndex> elems_;
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> pos_;
};

// binom(n+d-1, d) as a big integer, the dimension of the degree-d slice.
Int monomial_count(int n, int d);

}  // namespace flatrank
