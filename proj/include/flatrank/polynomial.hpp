#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "flatrank/errors.hpp"
#include "flatrank/multi_index.hpp"
#include "flatrank/numeric.hpp"

namespace flatrank {

// Sparse multivariate polynomial over an exact coefficient ring K.
// Terms are kept in descending grevlex order, so iteration order (and hence
// every derived matrix layout and serialization) is deterministic.
template <class K>
class Poly {
public:
    using TermMap = std::map<MultiIndex, K, GrevlexGreater>;

    explicit Poly(int n) : n_(n) {
        if (n < 1) throw PreconditionViolation("polynomial needs at least one variable");
    }

    static Poly zero(int n) { return Poly(n); }

    static Poly constant(int n, K c) {
        Poly p(n);
        p.add_term(MultiIndex::zero(n), std::move(c));
        return p;
    }

    static Poly monomial(MultiIndex a, K c) {
        Poly p(a.size());
        p.add_term(std::move(a), std::move(c));
        return p;
    }

    static Poly variable(int n, int i) {
        return monomial(MultiIndex::unit(n, i), K(1));
    }

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Max total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    // The zero polynomial is homogeneous of every degree.
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        return std::prev(terms_.end())->first.degree() == d;
    }

    K coeff(const MultiIndex& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const MultiIndex& a, K c) {
        if (a.size() != n_) throw ArityMismatch("arity mismatch: term has wrong length");
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, std::move(c));
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    // Multiply by the monomial x^s (no coefficient change).
    Poly shifted_by(const MultiIndex& s) const {
        Poly r(n_);
        for (const auto& [a, c] : terms_) r.terms_.emplace(a.plus(s), c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(n_);
        for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
        return r;
    }

    friend Poly operator*(const Poly& p, const Poly& q) {
        p.check_arity(q);
        Poly r(p.n_);
        for (const auto& [a, ca] : p.terms_)
            for (const auto& [b, cb] : q.terms_) r.add_term(a.plus(b), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(n_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [a, v] : terms_) r.terms_.emplace(a, v * c);
        return r;
    }

    Poly pow(int k) const {
        if (k < 0) throw PreconditionViolation("negative polynomial power");
        Poly r = constant(n_, K(1));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // True iterated partial derivative d^|beta| / dx^beta, factorials included.
    Poly diff(const MultiIndex& beta) const {
        if (beta.size() != n_) throw ArityMismatch("arity mismatch in differentiation");
        Poly r(n_);
        for (const auto& [a, c] : terms_) {
            auto rest = a.minus(beta);
            if (!rest) continue;
            Int f(1);
            for (int i = 0; i < n_; ++i) f *= falling_factorial(a[i], beta[i]);
            r.add_term(*rest, coeff_scale(c, f));
        }
        return r;
    }

    // Substitute images[i] for x_i; all images must share one arity.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != n_)
            throw ArityMismatch("arity mismatch: need one image per variable");
        int m = images.empty() ? 1 : images[0].vars();
        for (const auto& g : images)
            if (g.vars() != m) throw ArityMismatch("arity mismatch among substitution images");
        // Cache powers of each image; term exponents repeat heavily.
        std::vector<std::vector<Poly>> powers(images.size());
        auto power_of = [&](int i, int e) -> const Poly& {
            auto& ladder = powers[static_cast<std::size_t>(i)];
            if (ladder.empty()) ladder.push_back(constant(m, K(1)));
            while (static_cast<int>(ladder.size()) <= e)
                ladder.push_back(ladder.back() * images[static_cast<std::size_t>(i)]);
            return ladder[static_cast<std::size_t>(e)];
        };
        Poly r(m);
        for (const auto& [a, c] : terms_) {
            Poly t = constant(m, c);
            for (int i = 0; i < n_ && !t.is_zero(); ++i)
                if (a[i] > 0) t *= power_of(i, a[i]);
            r += t;
        }
        return r;
    }

    const std::pair<const MultiIndex, K>& leading_term() const {
        if (terms_.empty()) throw PreconditionViolation("zero polynomial has no leading term");
        return *terms_.begin();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_arity(const Poly& o) const {
        if (n_ != o.n_) throw ArityMismatch("arity mismatch between polynomials");
    }

    int n_;
    TermMap terms_;
};

using RatPoly = Poly<Rational>;
using GaussPoly = Poly<GaussianRational>;

// Remainder of p under division by g (g a single divisor, K a field).
// Zero remainder is exactly divisibility by g.
template <class K>
Poly<K> division_remainder(const Poly<K>& p, const Poly<K>& g) {
    if (g.is_zero()) throw PreconditionViolation("division by the zero polynomial");
    if (p.vars() != g.vars()) throw ArityMismatch("arity mismatch in division");
    const MultiIndex lt = g.leading_term().first;
    const K lc = g.leading_term().second;
    Poly<K> rem(p.vars());
    Poly<K> work = p;
    while (!work.is_zero()) {
        MultiIndex m = work.leading_term().first;
        K c = work.leading_term().second;
        if (lt.divides(m)) {
            work -= g.scaled(c / lc).shifted_by(*m.minus(lt));
        } else {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return rem;
}

template <class K>
bool divides(const Poly<K>& g, const Poly<K>& p) {
    return division_remainder(p, g).is_zero();
}

// View p inside a larger variable set (pads exponent vectors with zeros).
template <class K>
Poly<K> embed_vars(const Poly<K>& p, int big_n) {
    if (big_n < p.vars()) throw ArityMismatch("cannot embed into fewer variables");
    Poly<K> r(big_n);
    for (const auto& [a, c] : p.terms()) {
        std::vector<int> e = a.exps();
        e.resize(static_cast<std::size_t>(big_n), 0);
        r.add_term(MultiIndex(std::move(e)), c);
    }
    return r;
}

inline GaussPoly embed_gaussian(const RatPoly& p) {
    GaussPoly r(p.vars());
    for (const auto& [a, c] : p.terms()) r.add_term(a, GaussianRational(c));
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < a.size(); ++i)
            if (a[i] > 0) {
                os << "*x" << (i + 1);
                if (a[i] > 1) os << '^' << a[i];
            }
    }
    return os;
}

}  // namespace flatrank
