#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "genus/monomial.hpp"
#include "genus/order.hpp"
#include "genus/rational.hpp"

namespace genus {

// Fixed storage order of the term map (ascending grevlex); independent of
// whatever monomial order a computation runs under.
struct MonomialStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, MonomialOrder::grevlex()) < 0;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ambient x_0..x_n. No zero coefficients are stored; the zero
/// polynomial has an empty term map. Values are immutable in spirit: no
/// operation mutates its arguments.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigRational, MonomialStorageLess>;

    explicit Polynomial(int ambient_vars) : vars_(ambient_vars) {
        if (ambient_vars <= 0) throw PreconditionError("ambient must have at least one variable");
    }

    static Polynomial zero(int vars) { return Polynomial(vars); }

    static Polynomial constant(int vars, BigRational c) {
        Polynomial p(vars);
        p.add_term(Monomial::one(vars), c);
        return p;
    }

    static Polynomial term(Monomial m, BigRational c) {
        Polynomial p(m.vars());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    static Polynomial variable(int vars, int i) {
        return term(Monomial::variable(vars, i), BigRational(1));
    }

    int ambient_vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ambient(b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator*(const BigRational& c, const Polynomial& p) {
        Polynomial r(p.vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    void add_term(const Monomial& m, const BigRational& c) {
        if (c.is_zero()) return;
        if (m.vars() != vars_) throw PreconditionError("term ambient mismatch");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_ambient(const Polynomial& o) const {
        if (vars_ != o.vars_) throw PreconditionError("polynomial ambient mismatch");
    }

    int vars_;
    TermMap terms_;
};

struct Homogeneity {
    bool homogeneous = true;
    std::optional<int> degree; // unset for the zero polynomial
};

inline Homogeneity is_homogeneous(const Polynomial& p) {
    Homogeneity h;
    for (const auto& [m, c] : p.terms()) {
        if (!h.degree) {
            h.degree = m.degree();
        } else if (*h.degree != m.degree()) {
            return {false, std::nullopt};
        }
    }
    return h;
}

// Maximum term degree; unset for the zero polynomial.
inline std::optional<int> total_degree(const Polynomial& p) {
    std::optional<int> d;
    for (const auto& [m, c] : p.terms())
        if (!d || m.degree() > *d) d = m.degree();
    return d;
}

inline std::pair<Monomial, BigRational> leading_term(const Polynomial& p,
                                                     const MonomialOrder& order) {
    if (p.is_zero()) throw PreconditionError("leading term of the zero polynomial");
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (compare(it->first, best->first, order) > 0) best = it;
    return {best->first, best->second};
}

inline Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    return leading_term(p, order).first;
}

// p with x_i replaced by the linear form sum_j a[i][j) x_j.
inline Polynomial substitute_linear(const Polynomial& p,
                                    const std::vector<std::vector<int>>& a) {
    const int n = p.ambient_vars();
    if (static_cast<int>(a.size()) != n)
        throw PreconditionError("substitution matrix must be square of ambient size");
    std::vector<Polynomial> rows;
    rows.reserve(n);
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n)
            throw PreconditionError("substitution matrix must be square of ambient size");
        Polynomial f(n);
        for (int j = 0; j < n; ++j) f.add_term(Monomial::variable(n, j), BigRational(row[j]));
        rows.push_back(std::move(f));
    }
    // cache row powers up to the largest exponent that actually occurs
    std::vector<std::vector<Polynomial>> powers(n, {Polynomial::constant(n, BigRational(1))});
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * rows[i]);
        return cache[e];
    };
    Polynomial result(n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (m.exp(i) > 0) t = t * power(i, m.exp(i));
        result += t;
    }
    return result;
}

} // namespace genus
