#include "flatrank/flattening.hpp"

#include <unordered_set>

#include "flatrank/families.hpp"

namespace flatrank {

namespace {

int homogeneous_degree_or_throw(const RatPoly& p) {
    if (p.is_zero()) throw PreconditionViolation("flattening of the zero polynomial");
    if (!p.is_homogeneous()) throw NotHomogeneous("not homogeneous");
    return p.degree();
}

// Coefficient row of dp in the given target basis; dp's term order matches the
// basis order, so columns come out sorted.
SparseRow coefficient_row(const RatPoly& dp, const MonomialBasis& target) {
    SparseRow row;
    row.reserve(dp.term_count());
    for (const auto& [a, c] : dp.terms())
        row.push_back({static_cast<int>(target.index(a)), c});
    return row;
}

}  // namespace

CatalecticantMatrix catalecticant(const RatPoly& p, int e, const FlatteningOptions& opts) {
    int d = homogeneous_degree_or_throw(p);
    if (e < 0 || e > d) throw PreconditionViolation("derivative order must satisfy 0 <= e <= d");
    int n = p.vars();
    MonomialBasis rows(n, e, opts.dim_cap);
    MonomialBasis cols(n, d - e, opts.dim_cap);
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        RatPoly dp = p.diff(rows.at(r));
        if (dp.is_zero()) continue;
        m.set_row(static_cast<int>(r), coefficient_row(dp, cols));
    }
    return CatalecticantMatrix{n, d, e, std::move(rows), std::move(cols), std::move(m)};
}

RankReport catalecticant_rank(const RatPoly& p, int e, const FlatteningOptions& opts) {
    return compute_rank(catalecticant(p, e, opts).mat, opts.rank);
}

Int full_flattening_rank(int n, int d, int e) {
    Int a = monomial_count(n, e), b = monomial_count(n, d - e);
    return a < b ? a : b;
}

Int flattening_border_rank_lb(const RatPoly& p, const FlatteningOptions& opts) {
    int d = homogeneous_degree_or_throw(p);
    Int best(0);
    for (int e = 0; e <= d / 2; ++e) {
        Int r(catalecticant_rank(p, e, opts).rank);
        if (r > best) best = r;
    }
    return best;
}

bool first_derivative_span_check(int n, int d, const FlatteningOptions& opts) {
    if (n < 1 || d < 0) throw PreconditionViolation("need n >= 1, d >= 0");
    RatPoly q = power_sum(n, 2);
    MonomialBasis target(n, d + 1, opts.dim_cap);
    RationalEchelon ech;
    for (const auto& h : MonomialBasis(n, d, opts.dim_cap).elements()) {
        RatPoly hq = q.shifted_by(h);
        for (int i = 0; i < n; ++i) {
            RatPoly dp = hq.diff(MultiIndex::unit(n, i));
            if (!dp.is_zero()) ech.insert_row(coefficient_row(dp, target));
        }
    }
    return Int(ech.rank()) == monomial_count(n, d + 1);
}

ShiftedPartialSpace shifted_partials_dim(const RatPoly& p, int e, int tau,
                                         const ShiftedOptions& opts) {
    int d = homogeneous_degree_or_throw(p);
    if (e < 0 || e > d || tau < 0)
        throw PreconditionViolation("need 0 <= e <= deg p and tau >= 0");
    int n = p.vars();
    MonomialBasis target(n, d - e + tau, opts.dim_cap);

    ShiftedPartialSpace out;
    out.e = e;
    out.tau = tau;

    bool exact = opts.method == ShiftedOptions::Method::ExactRational ||
                 (opts.method == ShiftedOptions::Method::Auto &&
                  target.size() <= opts.exact_threshold);
    RationalEchelon rat;
    std::uint64_t prime = exact ? 0 : random_primes(1, opts.seed)[0];
    ModEchelon mod(prime ? prime : 2);

    MonomialBasis shifts(n, tau, opts.dim_cap);
    std::unordered_set<std::size_t> seen;
    for (const auto& beta : MonomialBasis(n, e, opts.dim_cap).elements()) {
        RatPoly dp = p.diff(beta);
        if (dp.is_zero()) continue;
        for (const auto& gamma : shifts.elements()) {
            SparseRow row;
            row.reserve(dp.term_count());
            for (const auto& [a, c] : dp.terms())
                row.push_back({static_cast<int>(target.index(a.plus(gamma))), c});
            ++out.generator_count;
            if (!seen.insert(hash_sparse_row(row)).second) {
                ++out.duplicates_skipped;
                continue;
            }
            if (exact) {
                rat.insert_row(std::move(row));
            } else {
                ModRow mrow;
                mrow.reserve(row.size());
                for (const auto& [j, v] : row) {
                    std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), prime);
                    if (den == 0) throw BadPrime("bad prime, retry");
                    std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), prime);
                    std::uint64_t r = mulmod(num, inv_mod(den, prime), prime);
                    if (r) mrow.push_back({j, r});
                }
                mod.insert_row(std::move(mrow));
            }
        }
    }

    if (exact) {
        out.dim = rat.rank();
        out.certainty = Certainty::Exact;
        out.method = "streaming-rational";
    } else {
        out.dim = mod.rank();
        out.method = "streaming-modular";
        // A modular dimension is a lower bound; hitting the target dimension
        // certifies exactness.
        out.certainty = out.dim == static_cast<long long>(target.size())
                            ? Certainty::Exact
                            : Certainty::CertifiedLowerBound;
    }
    return out;
}

Int macaulay_lower_bound(int n, int s, int tau) {
    if (n < 0 || s < 0 || tau < 0) throw PreconditionViolation("arguments must be >= 0");
    return binomial(n + s + tau - 1, s + tau);
}

Int perm_crude_upper_bound(int m, int s, int n, int tau) {
    if (m < 0 || s < 0 || n < 0 || tau < 0) throw PreconditionViolation("arguments must be >= 0");
    Int b = binomial(m, s);
    return b * b * binomial(n + tau - 1, tau);
}

bool nestimate_holds(int n, int m, int s, int tau) {
    if (s > m) throw PreconditionViolation("need s <= m");
    return macaulay_lower_bound(n, s, tau) > perm_crude_upper_bound(m, s, n, tau);
}

bool nestimate_sufficient_condition(int n, int m, int s, int tau) {
    if (s > m) throw PreconditionViolation("need s <= m");
    return Int(n) + Int(tau) > Int(m) * Int(m) * (Int(tau) + Int(s));
}

}  // namespace flatrank
