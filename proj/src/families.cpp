#include "flatrank/families.hpp"

#include <algorithm>
#include <random>

namespace flatrank {

namespace {

void check_term_cap(const Int& count, const FamilyOptions& opts) {
    if (count > Int(static_cast<unsigned long>(opts.term_cap)))
        throw CapExceeded("too large: " + count.get_str() + " terms");
}

}  // namespace

RatPoly power_sum(int n, int d) {
    if (n < 1 || d < 1) throw PreconditionViolation("power sum needs n >= 1, d >= 1");
    RatPoly p(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = d;
        p.add_term(MultiIndex(std::move(e)), Rational(1));
    }
    return p;
}

RatPoly complete_symmetric(int n, int d, const FamilyOptions& opts) {
    if (n < 1 || d < 0) throw PreconditionViolation("h_{n,d} needs n >= 1, d >= 0");
    check_term_cap(monomial_count(n, d), opts);
    RatPoly p(n);
    for (const auto& a : MonomialBasis(n, d, opts.term_cap).elements())
        p.add_term(a, Rational(1));
    return p;
}

RatPoly elementary_symmetric(int n, int d, const FamilyOptions& opts) {
    if (n < 1 || d < 0) throw PreconditionViolation("e_{n,d} needs n >= 1, d >= 0");
    RatPoly p(n);
    if (d > n) return p;  // no squarefree monomials of that degree
    check_term_cap(binomial(n, d), opts);
    std::vector<int> pick(static_cast<std::size_t>(d));
    // Enumerate d-subsets of {0..n-1} in lexicographic order.
    for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v : pick) e[static_cast<std::size_t>(v)] = 1;
        p.add_term(MultiIndex(std::move(e)), Rational(1));
        int i = d - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return p;
}

RatPoly f_family(int n, int k, const FamilyOptions& opts) {
    if (n < 1 || k < 1) throw PreconditionViolation("f_{n,k} needs n >= 1, k >= 1");
    check_term_cap(monomial_count(n, 2 * k), opts);
    return power_sum(n, 2).pow(k);
}

RatPoly ftilde_family(int n, int k, const FamilyOptions& opts) {
    if (n < 1 || k < 1) throw PreconditionViolation("ftilde_{n,k} needs n >= 1, k >= 1");
    check_term_cap(monomial_count(n, 2 * k + 1), opts);
    return power_sum(n, 1) * f_family(n, k, opts);
}

RatPoly bierman(int n, int d, const FamilyOptions& opts) {
    if (n < 1 || d < 1) throw PreconditionViolation("bierman needs n >= 1, d >= 1");
    check_term_cap(monomial_count(n, d), opts);
    MonomialBasis basis(n, d, opts.term_cap);
    // Coefficient of x^gamma in (alpha . x)^d is (d! / gamma!) * prod alpha_i^{gamma_i}.
    std::vector<Int> multinom(basis.size());
    Int dfact = factorial(d);
    for (std::size_t g = 0; g < basis.size(); ++g) {
        Int denom(1);
        for (int i = 0; i < n; ++i) denom *= factorial(basis.at(g)[i]);
        multinom[g] = dfact / denom;
    }
    RatPoly p(n);
    for (const auto& alpha : basis.elements()) {
        for (std::size_t g = 0; g < basis.size(); ++g) {
            const auto& gamma = basis.at(g);
            Int c = multinom[g];
            for (int i = 0; i < n && c != 0; ++i) {
                for (int t = 0; t < gamma[i]; ++t) c *= alpha[i];
            }
            if (c != 0) p.add_term(gamma, Rational(c));
        }
    }
    return p;
}

namespace {

RatPoly perm_or_det(int m, bool with_sign, const FamilyOptions& opts) {
    if (m < 1) throw PreconditionViolation("matrix size must be >= 1");
    check_term_cap(factorial(m), opts);
    int n = m * m;
    RatPoly p(n);
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < m; ++i)
            e[static_cast<std::size_t>(i * m + perm[static_cast<std::size_t>(i)])] = 1;
        int sign = 1;
        if (with_sign) {
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                        sign = -sign;
        }
        p.add_term(MultiIndex(std::move(e)), Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

}  // namespace

RatPoly permanent(int m, const FamilyOptions& opts) { return perm_or_det(m, false, opts); }
RatPoly determinant(int m, const FamilyOptions& opts) { return perm_or_det(m, true, opts); }

RatPoly imm(int n, int d, const FamilyOptions& opts) {
    if (n < 1 || d < 1) throw PreconditionViolation("imm needs n >= 1, d >= 1");
    Int terms(1);
    for (int i = 0; i < d; ++i) terms *= n;
    check_term_cap(terms, opts);
    int vars = d * n * n;
    RatPoly p(vars);
    // One term per cyclic index path i_0 -> i_1 -> ... -> i_{d-1} -> i_0.
    std::vector<int> path(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        for (int slot = 0; slot < d; ++slot) {
            int from = path[static_cast<std::size_t>(slot)];
            int to = path[static_cast<std::size_t>((slot + 1) % d)];
            e[static_cast<std::size_t>(slot * n * n + from * n + to)] += 1;
        }
        p.add_term(MultiIndex(std::move(e)), Rational(1));
        int i = d - 1;
        while (i >= 0 && path[static_cast<std::size_t>(i)] == n - 1) {
            path[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++path[static_cast<std::size_t>(i)];
    }
    return p;
}

RatPoly pow_trace(int n, int d, const FamilyOptions& opts) {
    if (n < 1 || d < 1) throw PreconditionViolation("pow_trace needs n >= 1, d >= 1");
    Int terms(1);
    for (int i = 0; i < d; ++i) terms *= n;
    check_term_cap(terms, opts);
    int vars = n * n;
    RatPoly p(vars);
    std::vector<int> path(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        for (int slot = 0; slot < d; ++slot) {
            int from = path[static_cast<std::size_t>(slot)];
            int to = path[static_cast<std::size_t>((slot + 1) % d)];
            e[static_cast<std::size_t>(from * n + to)] += 1;
        }
        p.add_term(MultiIndex(std::move(e)), Rational(1));
        int i = d - 1;
        while (i >= 0 && path[static_cast<std::size_t>(i)] == n - 1) {
            path[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++path[static_cast<std::size_t>(i)];
    }
    return p;
}

RatPoly random_poly(int n, int d, std::uint64_t seed, int bound, const FamilyOptions& opts) {
    if (n < 1 || d < 0 || bound < 1)
        throw PreconditionViolation("random_poly needs n >= 1, d >= 0, bound >= 1");
    check_term_cap(monomial_count(n, d), opts);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mag(1, bound);
    std::uniform_int_distribution<int> flip(0, 1);
    RatPoly p(n);
    for (const auto& a : MonomialBasis(n, d, opts.term_cap).elements()) {
        int c = mag(rng) * (flip(rng) ? 1 : -1);
        p.add_term(a, Rational(c));
    }
    return p;
}

SymbolicMatrix<GaussianRational> qm_matrix(int n) {
    if (n < 2) throw PreconditionViolation("qm_matrix needs n >= 2");
    int m = n / 2;                  // pairs (x_{2j-1}, x_{2j})
    bool odd = (n % 2) != 0;
    int size = odd ? m + 2 : m + 1;
    SymbolicMatrix<GaussianRational> Q(size, size, n);
    for (int j = 1; j <= m; ++j) {
        GaussPoly plus(n), minus(n);
        plus.add_term(MultiIndex::unit(n, 2 * j - 2), GaussianRational(1));
        plus.add_term(MultiIndex::unit(n, 2 * j - 1), GaussianRational::i());
        minus.add_term(MultiIndex::unit(n, 2 * j - 2), GaussianRational(1));
        minus.add_term(MultiIndex::unit(n, 2 * j - 1), -GaussianRational::i());
        Q.set(0, j, std::move(plus));
        Q.set(j, 0, std::move(minus));
    }
    if (odd) {
        GaussPoly last = GaussPoly::variable(n, n - 1);
        Q.set(0, size - 1, last);
        Q.set(size - 1, 0, last);
    }
    return Q;
}

bool verify_pow_specialization(int n, int k, const FamilyOptions& opts) {
    if (n < 2 || k < 1) throw PreconditionViolation("needs n >= 2, k >= 1");
    auto tr = qm_matrix(n).pow(2 * k).trace();
    GaussPoly expected = embed_gaussian(f_family(n, k, opts).scaled(Rational(2)));
    return tr == expected;
}

bool verify_imm_diagonal_specialization(int m, int n, const FamilyOptions& opts) {
    if (m < 1 || m * m > n) throw PreconditionViolation("needs 1 <= m and m^2 <= n");
    RatPoly immp = imm(n, m, opts);
    int vars = n * n;
    int target = m * m;
    std::vector<RatPoly> images;
    images.reserve(static_cast<std::size_t>(m) * vars);
    for (int slot = 0; slot < m; ++slot) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j && i < target)
                    images.push_back(RatPoly::variable(target, i));
                else
                    images.push_back(RatPoly::zero(target));
            }
    }
    return immp.substitute(images) == power_sum(target, m);
}

}  // namespace flatrank
