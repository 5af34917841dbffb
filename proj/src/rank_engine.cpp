#include "flatrank/rank_engine.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>

namespace flatrank {

std::string to_string(Certainty c) {
    switch (c) {
        case Certainty::Exact: return "exact";
        case Certainty::ProbabilisticExact: return "probabilistic-exact";
        case Certainty::CertifiedLowerBound: return "certified-lower-bound";
    }
    return "?";
}

std::vector<std::uint64_t> random_primes(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> out;
    while (static_cast<int>(out.size()) < count) {
        std::uint64_t c = (rng() | (1ULL << 61) | 1ULL) & ((1ULL << 62) - 1);
        if (is_prime_u64(c) && seen.insert(c).second) out.push_back(c);
    }
    return out;
}

namespace {

ModRow subtract_scaled(const ModRow& a, const ModRow& b, std::uint64_t factor, std::uint64_t p) {
    // a - factor * b, merged by column.
    ModRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            std::uint64_t v = submod(0, mulmod(factor, b[j].second, p), p);
            if (v) out.push_back({b[j].first, v});
            ++j;
        } else {
            std::uint64_t v = submod(a[i].second, mulmod(factor, b[j].second, p), p);
            if (v) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize_leading(ModRow& row, std::uint64_t p) {
    std::uint64_t inv = inv_mod(row.front().second, p);
    if (inv == 1) return;
    for (auto& [c, v] : row) v = mulmod(v, inv, p);
}

// Sparse elimination with Markowitz-flavored pivoting: repeatedly take the
// shortest remaining row and pivot on its least-populated column.
int mod_rank_markowitz(ModMatrix m) {
    const std::uint64_t p = m.p;
    std::vector<ModRow>& rows = m.data;
    std::vector<int> colcount(static_cast<std::size_t>(m.cols), 0);
    for (const auto& r : rows)
        for (const auto& [c, v] : r) ++colcount[static_cast<std::size_t>(c)];

    std::vector<char> alive(rows.size(), 1);
    int rank = 0;
    std::size_t remaining = 0;
    for (const auto& r : rows)
        if (!r.empty()) ++remaining;

    while (remaining > 0) {
        // Pivot row: fewest entries, lowest index on ties.
        std::size_t best = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i] || rows[i].empty()) continue;
            if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
        }
        if (best == rows.size()) break;
        ModRow& pivot = rows[best];
        int pcol = pivot.front().first;
        for (const auto& [c, v] : pivot)
            if (colcount[static_cast<std::size_t>(c)] < colcount[static_cast<std::size_t>(pcol)])
                pcol = c;
        // Move the pivot column to the front logically by value lookup.
        std::uint64_t pval = 0;
        for (const auto& [c, v] : pivot)
            if (c == pcol) pval = v;
        std::uint64_t pinv = inv_mod(pval, p);

        ++rank;
        alive[best] = 0;
        for (const auto& [c, v] : pivot) --colcount[static_cast<std::size_t>(c)];
        --remaining;

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i] || rows[i].empty()) continue;
            std::uint64_t val = 0;
            for (const auto& [c, v] : rows[i])
                if (c == pcol) {
                    val = v;
                    break;
                }
            if (val == 0) continue;
            for (const auto& [c, v] : rows[i]) --colcount[static_cast<std::size_t>(c)];
            rows[i] = subtract_scaled(rows[i], pivot, mulmod(val, pinv, p), p);
            for (const auto& [c, v] : rows[i]) ++colcount[static_cast<std::size_t>(c)];
            if (rows[i].empty()) {
                alive[i] = 0;
                --remaining;
            }
        }
    }
    return rank;
}

}  // namespace

int rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
    auto reduced = reduce_mod(m, p);
    if (!reduced) throw BadPrime("bad prime, retry: " + std::to_string(p) + " divides a denominator");
    return mod_rank_markowitz(std::move(*reduced));
}

RankReport rank_exact_rational(const ExactMatrix& m, const RankOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t cells = static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols());
    if (cells > opts.dense_cap)
        throw CapExceeded("use modular path: dense exact elimination capped at " +
                          std::to_string(opts.dense_cap) + " entries");

    // Clear denominators row by row (rank-invariant), then run Bareiss.
    int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(nr),
                                    std::vector<Int>(static_cast<std::size_t>(nc), Int(0)));
    for (int i = 0; i < nr; ++i) {
        Int lcm(1);
        for (const auto& [j, v] : m.row(i)) {
            Int g;
            mpz_lcm(g.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
            lcm = g;
        }
        for (const auto& [j, v] : m.row(i))
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                v.get_num() * (lcm / v.get_den());
    }

    int rank = 0;
    Int prev(1);
    int steps = std::min(nr, nc);
    for (int k = 0; k < steps; ++k) {
        // Pivot: smallest nonzero entry by bit size, for containment of growth.
        int pi = -1, pj = -1;
        std::size_t best_bits = 0;
        for (int i = k; i < nr; ++i)
            for (int j = k; j < nc; ++j) {
                const Int& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (v == 0) continue;
                std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
                if (pi < 0 || bits < best_bits) {
                    pi = i;
                    pj = j;
                    best_bits = bits;
                }
            }
        if (pi < 0) break;
        std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pi)]);
        if (pj != k)
            for (int i = 0; i < nr; ++i)
                std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
        ++rank;
        const Int piv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < nr; ++i) {
            for (int j = k + 1; j < nc; ++j) {
                Int& t = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                t = (t * piv - a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                   a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = piv;
    }

    RankReport rep;
    rep.rows = nr;
    rep.cols = nc;
    rep.rank = rank;
    rep.certainty = Certainty::Exact;
    rep.method = "bareiss";
    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

RankReport rank_certified(const ExactMatrix& m, const std::vector<std::uint64_t>& primes) {
    auto t0 = std::chrono::steady_clock::now();
    RankReport rep;
    rep.rows = m.rows();
    rep.cols = m.cols();
    int maxrank = std::min(m.rows(), m.cols());
    if (maxrank == 0 || m.nnz() == 0) {
        rep.rank = 0;
        rep.certainty = Certainty::Exact;
        rep.method = "empty";
        rep.elapsed = std::chrono::steady_clock::now() - t0;
        return rep;
    }
    if (primes.empty()) throw BadPrime("no primes supplied");

    std::vector<std::future<int>> jobs;
    for (std::uint64_t p : primes)
        jobs.push_back(std::async(std::launch::async, [&m, p] {
            try {
                return rank_mod_p(m, p);
            } catch (const BadPrime&) {
                return -1;
            }
        }));
    std::vector<int> ranks;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        int r = jobs[i].get();
        if (r >= 0) {
            ranks.push_back(r);
            rep.primes.push_back(primes[i]);
        }
    }
    if (ranks.empty())
        throw BadPrime("all primes divide stored denominators; retry with a different seed");

    rep.rank = *std::max_element(ranks.begin(), ranks.end());
    if (rep.rank == maxrank) {
        rep.certainty = Certainty::Exact;
        rep.method = "modular:full-rank-witness";
    } else if (ranks.size() >= 2 &&
               std::all_of(ranks.begin(), ranks.end(), [&](int r) { return r == rep.rank; })) {
        rep.certainty = Certainty::ProbabilisticExact;
        rep.method = "modular:agreement";
    } else {
        rep.certainty = Certainty::CertifiedLowerBound;
        rep.method = "modular";
    }
    rep.elapsed = std::chrono::steady_clock::now() - t0;
    return rep;
}

RankReport compute_rank(const ExactMatrix& m, const RankOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    int maxrank = std::min(m.rows(), m.cols());
    if (maxrank == 0 || m.nnz() == 0) {
        RankReport rep;
        rep.rows = m.rows();
        rep.cols = m.cols();
        rep.rank = 0;
        rep.certainty = Certainty::Exact;
        rep.method = "empty";
        rep.elapsed = std::chrono::steady_clock::now() - t0;
        return rep;
    }
    RankReport rep = rank_certified(m, random_primes(opts.prime_count, opts.seed));
    if (rep.certainty == Certainty::Exact) return rep;
    if (opts.confirm_exact) {
        std::size_t cells = static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols());
        if (cells <= opts.dense_cap) {
            auto primes = rep.primes;
            rep = rank_exact_rational(m, opts);
            rep.primes = std::move(primes);
            rep.method = "modular+bareiss";
            rep.elapsed = std::chrono::steady_clock::now() - t0;
            return rep;
        }
    }
    return rep;
}

bool ModEchelon::insert_row(ModRow row) {
    while (!row.empty()) {
        auto it = pivot_.find(row.front().first);
        if (it == pivot_.end()) {
            normalize_leading(row, p_);
            pivot_.emplace(row.front().first, rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        row = subtract_scaled(row, rows_[it->second], row.front().second, p_);
    }
    return false;
}

namespace {

SparseRow subtract_scaled_rat(const SparseRow& a, const SparseRow& b, const Rational& factor) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = -factor * b[j].second;
            if (v != 0) out.push_back({b[j].first, std::move(v)});
            ++j;
        } else {
            Rational v = a[i].second - factor * b[j].second;
            if (v != 0) out.push_back({a[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool RationalEchelon::insert_row(SparseRow row) {
    while (!row.empty()) {
        auto it = pivot_.find(row.front().first);
        if (it == pivot_.end()) {
            Rational inv = 1 / row.front().second;
            for (auto& [c, v] : row) v *= inv;
            pivot_.emplace(row.front().first, rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        row = subtract_scaled_rat(row, rows_[it->second], row.front().second);
    }
    return false;
}

}  // namespace flatrank
