#include "flatrank/verify.hpp"

#include <random>
#include <sstream>

#include "flatrank/families.hpp"
#include "flatrank/koszul.hpp"
#include "flatrank/lgv.hpp"

namespace flatrank {

namespace {

FlatteningOptions flat_opts(const VerifyOptions& o) {
    FlatteningOptions f;
    f.dim_cap = o.dim_cap;
    f.rank.prime_count = o.prime_count;
    f.rank.seed = o.seed;
    return f;
}

FamilyOptions fam_opts(const VerifyOptions& o) { return FamilyOptions{o.term_cap}; }

template <class... Ts>
std::string cat(Ts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

void add(std::vector<CheckResult>& out, std::string name, bool pass, std::string detail = "") {
    out.push_back({std::move(name), pass, false, std::move(detail)});
}

template <class Fn>
void guarded(std::vector<CheckResult>& out, std::string name, Fn&& body) {
    try {
        body();
    } catch (const CapExceeded& e) {
        out.push_back({std::move(name), false, true, e.what()});
    }
}

}  // namespace

std::vector<CheckResult> verify_flattenings(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto fo = flat_opts(opts);
    auto fam = fam_opts(opts);

    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 6; ++d)
            guarded(out, cat("h-full-rank n=", n, " d=", d), [&] {
                RatPoly h = complete_symmetric(n, d, fam);
                bool ok = true;
                std::string bad;
                for (int e = 0; e <= d && ok; ++e) {
                    Int expect = full_flattening_rank(n, d, e);
                    int r = catalecticant_rank(h, e, fo).rank;
                    if (Int(r) != expect)
                        ok = false, bad = cat("e=", e, " rank=", r, " expected=", expect);
                }
                add(out, cat("h-full-rank n=", n, " d=", d), ok, bad);
            });

    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            guarded(out, cat("f-full-rank n=", n, " k=", k), [&] {
                RatPoly f = f_family(n, k, fam);
                RatPoly q = power_sum(n, 2);
                bool ok = true;
                std::string bad;
                for (int e = 0; e <= 2 * k && ok; ++e) {
                    Int expect = full_flattening_rank(n, 2 * k, e);
                    int r = catalecticant_rank(f, e, fo).rank;
                    if (Int(r) != expect) {
                        ok = false, bad = cat("e=", e, " rank=", r, " expected=", expect);
                        break;
                    }
                    if (e <= k) {
                        RatPoly qpow = q.pow(k - e);
                        for (const auto& beta : MonomialBasis(n, e, opts.dim_cap).elements()) {
                            RatPoly row = f.diff(beta);
                            if (!divides(qpow, row)) {
                                ok = false;
                                bad = cat("row beta=", beta, " at e=", e,
                                          " not divisible by q^", k - e);
                                break;
                            }
                        }
                    }
                }
                add(out, cat("f-full-rank n=", n, " k=", k), ok, bad);
            });

    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            guarded(out, cat("ftilde-full-rank n=", n, " k=", k), [&] {
                RatPoly ft = ftilde_family(n, k, fam);
                bool ok = true;
                std::string bad;
                for (int e = 0; e <= 2 * k + 1 && ok; ++e) {
                    Int expect = full_flattening_rank(n, 2 * k + 1, e);
                    int r = catalecticant_rank(ft, e, fo).rank;
                    if (Int(r) != expect)
                        ok = false, bad = cat("e=", e, " rank=", r, " expected=", expect);
                }
                add(out, cat("ftilde-full-rank n=", n, " k=", k), ok, bad);
            });

    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            guarded(out, cat("bierman-full-rank n=", n, " d=", d), [&] {
                RatPoly b = bierman(n, d, fam);
                bool ok = true;
                std::string bad;
                for (int e = 0; e <= d && ok; ++e) {
                    Int expect = full_flattening_rank(n, d, e);
                    int r = catalecticant_rank(b, e, fo).rank;
                    if (Int(r) != expect)
                        ok = false, bad = cat("e=", e, " rank=", r, " expected=", expect);
                }
                add(out, cat("bierman-full-rank n=", n, " d=", d), ok, bad);
            });

    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 6; ++d)
            guarded(out, cat("h-border-rank-lb n=", n, " d=", d), [&] {
                Int lb = flattening_border_rank_lb(complete_symmetric(n, d, fam), fo);
                Int expect = monomial_count(n, d / 2);
                add(out, cat("h-border-rank-lb n=", n, " d=", d), lb == expect,
                    lb == expect ? "" : cat("got ", lb, " expected ", expect));
            });

    return out;
}

std::vector<CheckResult> verify_specializations(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto fam = fam_opts(opts);
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            guarded(out, cat("pow-specialization n=", n, " k=", k), [&] {
                add(out, cat("pow-specialization n=", n, " k=", k),
                    verify_pow_specialization(n, k, fam));
            });
    for (int m : {1, 2, 3})
        guarded(out, cat("imm-diagonal m=", m), [&] {
            add(out, cat("imm-diagonal m=", m),
                verify_imm_diagonal_specialization(m, m * m, fam));
        });
    return out;
}

std::vector<CheckResult> verify_lgv(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opts.seed);

    {
        bool ok = true;
        std::string bad;
        for (int c = 0; c < 100 && ok; ++c) {
            std::size_t m = 1 + rng() % 3;
            std::size_t count = 2 + rng() % 7;
            std::vector<std::vector<long>> tuples(count, std::vector<long>(m));
            for (auto& t : tuples)
                for (auto& v : t) v = static_cast<long>(rng() % 7);
            auto rep = gv_rank(tuples);
            auto distinct = distinct_tuple_count(tuples);
            if (rep.rank != static_cast<int>(distinct)) {
                ok = false;
                bad = cat("case ", c, ": rank ", rep.rank, " != distinct ", distinct);
            }
        }
        add(out, "gv-rank-equals-distinct (100 seeded)", ok, bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (int c = 0; c < 100 && ok; ++c) {
            int n = 2 + static_cast<int>(rng() % 5);
            // A = L L^T with positive diagonal L: positive definite.
            ExactMatrix L(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j) {
                    long v = (i == j) ? 1 + static_cast<long>(rng() % 5)
                                      : static_cast<long>(rng() % 9) - 4;
                    if (v != 0) L.set_entry(i, j, Rational(v));
                }
            ExactMatrix A = L * L.transpose();
            // B = C^T C with no zero column of C: psd with positive diagonal.
            int r = 1 + static_cast<int>(rng() % 3);
            ExactMatrix C(r, n);
            for (int j = 0; j < n; ++j) C.set_entry(0, j, Rational(1 + static_cast<long>(rng() % 3)));
            for (int i = 1; i < r; ++i)
                for (int j = 0; j < n; ++j) {
                    long v = static_cast<long>(rng() % 7) - 3;
                    if (v != 0) C.set_entry(i, j, Rational(v));
                }
            ExactMatrix B = C.transpose() * C;
            if (!is_positive_definite(hadamard(A, B))) {
                ok = false;
                bad = cat("case ", c, ": A (x) B not definite");
            }
        }
        add(out, "hadamard-definite (100 seeded)", ok, bad);
    }

    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}})
        guarded(out, cat("hnd-gv-crosscheck n=", n, " k=", k), [&, n = n, k = k] {
            add(out, cat("hnd-gv-crosscheck n=", n, " k=", k), hnd_gv_crosscheck(n, k));
        });

    return out;
}

std::vector<CheckResult> verify_koszul(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto fo = flat_opts(opts);
    auto fam = fam_opts(opts);

    for (int n : {3, 4})
        for (int k : {1, 2}) {
            Int bound = apriori_bound(n, k, 1);
            Int expect_gen = bound - ((n == 3 && k % 2 == 0) ? 1 : 0);
            guarded(out, cat("koszul-generic n=", n, " k=", k), [&] {
                bool pass = false;
                std::string det;
                for (int attempt = 0; attempt < 3 && !pass; ++attempt) {
                    std::uint64_t s = opts.seed + 1000 * static_cast<std::uint64_t>(attempt) +
                                      static_cast<std::uint64_t>(10 * n + k);
                    RatPoly p = random_poly(n, 2 * k + 1, s, 100, fam);
                    int r = koszul_rank(p, k, 1, fo).rank;
                    if (Int(r) == expect_gen) {
                        pass = true;
                        det = cat("rank ", r, " after ", attempt + 1, " seed(s)");
                    } else {
                        det = cat("attempt ", attempt, ": rank ", r, " expected ", expect_gen);
                        if (Int(r) > expect_gen) break;  // exceeds the proven bound
                    }
                }
                add(out, cat("koszul-generic n=", n, " k=", k), pass, det);
            });

            Int expect_named = bound - (k % 2 == 0 ? 1 : 0);
            guarded(out, cat("koszul-h n=", n, " k=", k), [&] {
                int r = koszul_rank(complete_symmetric(n, 2 * k + 1, fam), k, 1, fo).rank;
                add(out, cat("koszul-h n=", n, " k=", k), Int(r) == expect_named,
                    cat("rank ", r, " expected ", expect_named));
            });
            guarded(out, cat("koszul-ftilde n=", n, " k=", k), [&] {
                int r = koszul_rank(ftilde_family(n, k, fam), k, 1, fo).rank;
                add(out, cat("koszul-ftilde n=", n, " k=", k), Int(r) == expect_named,
                    cat("rank ", r, " expected ", expect_named));
            });
        }

    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {5, 2}})
        for (int k : {1, 2})
            guarded(out, cat("koszul-ftilde-lb n=", n, " q=", q, " k=", k), [&, n = n, q = q] {
                RatPoly ft = ftilde_family(n, k, fam);
                auto rep = rank_certified(koszul_matrix(ft, k, q, fo).mat,
                                          random_primes(opts.prime_count, opts.seed));
                Int bound = fknkosz_bound(n, k, q);
                add(out, cat("koszul-ftilde-lb n=", n, " q=", q, " k=", k),
                    Int(rep.rank) >= bound,
                    cat("rank >= ", rep.rank, " (", to_string(rep.certainty), "), bound ", bound));
            });

    return out;
}

std::vector<CheckResult> verify_shifted(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto fam = fam_opts(opts);
    ShiftedOptions so;
    so.dim_cap = opts.dim_cap;
    so.seed = opts.seed;
    for (int m = 1; m <= 3; ++m)
        guarded(out, cat("perm-shifted-dims m=", m), [&] {
            RatPoly pm = permanent(m, fam);
            bool ok = true;
            std::string bad;
            for (int s = 0; s <= m && ok; ++s) {
                auto sp = shifted_partials_dim(pm, s, 0, so);
                Int expect = binomial(m, s) * binomial(m, s);
                if (Int(static_cast<long>(sp.dim)) != expect)
                    ok = false, bad = cat("s=", s, " dim=", sp.dim, " expected=", expect);
            }
            add(out, cat("perm-shifted-dims m=", m), ok, bad);
        });
    return out;
}

std::vector<CheckResult> verify_nestimate(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    {
        bool all = true;
        int fails = 0;
        std::string detail;
        for (int s = 0; s <= 1; ++s)
            for (int tau = 0; tau <= 16; ++tau)
                if (!nestimate_holds(33, 2, s, tau)) {
                    all = false;
                    ++fails;
                    if (detail.size() < 160) detail += cat("(s=", s, ",tau=", tau, ") ");
                }
        add(out, "nestimate-regime m=2 n=33 s<=1 tau<=16", all,
            all ? "" : cat(fails, " failing tuples: ", detail));
    }
    {
        std::mt19937_64 rng(opts.seed + 6);
        bool ok = true;
        int hits = 0;
        std::string bad;
        for (int c = 0; c < 500 && ok; ++c) {
            int m = 1 + static_cast<int>(rng() % 4);
            int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
            int n = 1 + static_cast<int>(rng() % 200);
            int tau = static_cast<int>(rng() % 11);
            if (!nestimate_sufficient_condition(n, m, s, tau)) continue;
            ++hits;
            if (!nestimate_holds(n, m, s, tau)) {
                ok = false;
                bad = cat("counterexample n=", n, " m=", m, " s=", s, " tau=", tau);
            }
        }
        add(out, "nestimate-sufficient-implies-exact (500 seeded)", ok,
            ok ? cat(hits, " tuples satisfied the hypothesis") : bad);
    }
    return out;
}

std::vector<CheckResult> verify_structural(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto fo = flat_opts(opts);
    auto fam = fam_opts(opts);

    {
        bool ok = true;
        std::string bad;
        for (int n = 2; n <= 4 && ok; ++n)
            for (int q = 0; q <= n - 2 && ok; ++q)
                for (int t = 2; t <= 3 && ok; ++t) {
                    ExactMatrix d1 = exterior_derivative_matrix(n, q, t, fo);
                    ExactMatrix d2 = exterior_derivative_matrix(n, q + 1, t - 1, fo);
                    if ((d1 * d2).nnz() != 0) {
                        ok = false;
                        bad = cat("delta^2 != 0 at n=", n, " q=", q, " t=", t);
                    }
                }
        add(out, "exterior-derivative-squares-to-zero", ok, bad);
    }

    {
        std::mt19937_64 rng(opts.seed + 11);
        bool ok = true;
        std::string bad;
        for (int c = 0; c < 20 && ok; ++c) {
            int n = 2 + static_cast<int>(rng() % 3);
            int dp = 1 + static_cast<int>(rng() % 3);
            int dq = 1 + static_cast<int>(rng() % 3);
            RatPoly p = random_poly(n, dp, rng(), 9, fam);
            RatPoly q = random_poly(n, dq, rng(), 9, fam);
            for (int i = 0; i < n && ok; ++i) {
                MultiIndex ei = MultiIndex::unit(n, i);
                if ((p * q).diff(ei) != p.diff(ei) * q + p * q.diff(ei)) {
                    ok = false;
                    bad = cat("leibniz failed, case ", c, " var ", i);
                }
            }
            std::vector<int> be(static_cast<std::size_t>(n), 0), ge(static_cast<std::size_t>(n), 0);
            be[rng() % static_cast<unsigned>(n)] = 1 + static_cast<int>(rng() % 2);
            ge[rng() % static_cast<unsigned>(n)] = 1 + static_cast<int>(rng() % 2);
            MultiIndex beta(be), gamma(ge);
            if (ok && p.diff(beta).diff(gamma) != p.diff(beta.plus(gamma))) {
                ok = false;
                bad = cat("diff commutation failed, case ", c);
            }
        }
        add(out, "leibniz-and-commutation (seeded)", ok, bad);
    }

    {
        // Specialization pairs: matrix powering over f, and diagonal IMM over
        // the power sum; ranks may only drop under specialization.
        bool ok = true;
        std::string bad;
        ShiftedOptions so;
        so.dim_cap = opts.dim_cap;
        so.seed = opts.seed;
        for (int n : {2, 3})
            for (int k : {1, 2}) {
                int sz = (n % 2 == 0) ? n / 2 + 1 : n / 2 + 2;
                RatPoly big = pow_trace(sz, 2 * k, fam);
                RatPoly small = embed_vars(f_family(n, k, fam).scaled(Rational(2)), sz * sz);
                for (auto [e, tau] :
                     std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}}) {
                    auto dp = shifted_partials_dim(small, e, tau, so);
                    auto dq = shifted_partials_dim(big, e, tau, so);
                    if (dp.dim > dq.dim) {
                        ok = false;
                        bad = cat("pow pair n=", n, " k=", k, " e=", e, " tau=", tau, ": ",
                                  dp.dim, " > ", dq.dim);
                    }
                }
            }
        {
            RatPoly big = imm(4, 2, fam);
            RatPoly small = embed_vars(power_sum(4, 2), 32);
            for (auto [e, tau] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
                auto dp = shifted_partials_dim(small, e, tau, so);
                auto dq = shifted_partials_dim(big, e, tau, so);
                if (dp.dim > dq.dim) {
                    ok = false;
                    bad = cat("imm pair e=", e, " tau=", tau, ": ", dp.dim, " > ", dq.dim);
                }
            }
        }
        add(out, "rank-semicontinuity-specializations", ok, bad);
    }

    {
        std::mt19937_64 rng(opts.seed + 13);
        bool ok = true;
        std::string bad;
        for (int c = 0; c < 10 && ok; ++c) {
            int n = 2 + static_cast<int>(rng() % 2);
            int d = 3 + static_cast<int>(rng() % 3);
            RatPoly p = random_poly(n, d, rng(), 20, fam);
            for (int e = 0; e <= d && ok; ++e) {
                int a = catalecticant_rank(p, e, fo).rank;
                int b = catalecticant_rank(p, d - e, fo).rank;
                if (a != b) {
                    ok = false;
                    bad = cat("transpose symmetry failed: case ", c, " e=", e, " (", a, " vs ", b, ")");
                }
            }
        }
        add(out, "transpose-rank-symmetry (seeded)", ok, bad);
    }

    {
        std::mt19937_64 rng(opts.seed + 17);
        auto primes = random_primes(8, opts.seed + 19);
        bool ok = true;
        std::string bad;
        for (int c = 0; c < 200 && ok; ++c) {
            ExactMatrix m(5, 7);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 7; ++j) {
                    if (rng() % 2) continue;
                    long num = static_cast<long>(rng() % 19) - 9;
                    long den = 1 + static_cast<long>(rng() % 4);
                    if (num != 0) m.set_entry(i, j, Rational(num, den));
                }
            int exact = rank_exact_rational(m).rank;
            int modular = rank_mod_p(m, primes[c % primes.size()]);
            if (modular > exact) {
                ok = false;
                bad = cat("case ", c, ": modular ", modular, " > exact ", exact);
            }
        }
        add(out, "modular-rank-below-rational (200 seeded)", ok, bad);
    }

    return out;
}

std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "flattenings") return verify_flattenings(opts);
    if (suite == "specializations") return verify_specializations(opts);
    if (suite == "lgv") return verify_lgv(opts);
    if (suite == "koszul") return verify_koszul(opts);
    if (suite == "shifted") return verify_shifted(opts);
    if (suite == "nestimate") return verify_nestimate(opts);
    if (suite == "structural") return verify_structural(opts);
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"flattenings", "specializations", "lgv", "koszul", "shifted",
                              "nestimate", "structural"}) {
            auto part = verify_suite(s, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw PreconditionViolation("unknown suite: " + suite);
}

}  // namespace flatrank
