#include "flatrank/multi_index.hpp"

#include <numeric>

namespace flatrank {

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw PreconditionViolation("multi-index entries must be nonnegative");
        degree_ += e;
    }
}

MultiIndex MultiIndex::zero(int n) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    if (size() != o.size()) throw ArityMismatch("arity mismatch in multi-index sum");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
    if (size() != o.size()) throw ArityMismatch("arity mismatch in multi-index difference");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= o.exps_[i];
        if (e[i] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& o) const {
    if (size() != o.size()) throw ArityMismatch("arity mismatch in divisibility check");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

bool GrevlexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (int i = a.size() - 1; i >= 0; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0;
    }
    return false;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const {
    std::size_t h = 0xcbf29ce484222325UL;
    for (int i = 0; i < a.size(); ++i) {
        h ^= static_cast<std::size_t>(a[i]) + 0x9e3779b97f4a7c15UL + (h << 6) + (h >> 2);
        h *= 0x100000001b3UL;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
    os << '(';
    for (int i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os << ')';
}

Int monomial_count(int n, int d) { return binomial(n + d - 1, d); }

namespace {

// Descending grevlex enumeration: group by the last exponent, ascending.
void enumerate(int n, int d, std::vector<MultiIndex>& out) {
    if (n == 1) {
        out.emplace_back(std::vector<int>{d});
        return;
    }
    for (int t = 0; t <= d; ++t) {
        std::vector<MultiIndex> sub;
        enumerate(n - 1, d - t, sub);
        for (auto& m : sub) {
            std::vector<int> e = m.exps();
            e.push_back(t);
            out.emplace_back(std::move(e));
        }
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d, std::size_t size_cap) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw PreconditionViolation("monomial basis needs n >= 1, d >= 0");
    Int count = monomial_count(n, d);
    if (count > Int(static_cast<unsigned long>(size_cap)))
        throw CapExceeded("basis too large: " + count.get_str() + " monomials");
    elems_.reserve(count.get_ui());
    enumerate(n, d, elems_);
    pos_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) pos_.emplace(elems_[i], i);
}

std::size_t MonomialBasis::index(const MultiIndex& a) const {
    auto it = pos_.find(a);
    if (it == pos_.end())
        throw PreconditionViolation("multi-index not in basis (wrong degree or arity)");
    return it->second;
}

}  // namespace flatrank
