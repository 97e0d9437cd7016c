#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "genus/errors.hpp"

namespace genus {

/// Exponent vector of a monomial in a fixed ambient x_0..x_n.
/// Immutable once built; the total degree is cached.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents)
        : e_(std::move(exponents)), deg_(std::accumulate(e_.begin(), e_.end(), 0)) {
        for (int x : e_)
            if (x < 0) throw PreconditionError("negative exponent in monomial");
    }

    static Monomial one(int vars) { return Monomial(std::vector<int>(vars, 0)); }

    static Monomial variable(int vars, int i, int power = 1) {
        std::vector<int> e(vars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    int vars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exp(int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& m) const {
        if (vars() != m.vars()) throw PreconditionError("monomial ambient mismatch");
        for (int i = 0; i < vars(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        if (vars() != m.vars()) throw PreconditionError("monomial ambient mismatch");
        for (int i = 0; i < vars(); ++i)
            if (e_[i] > 0 && m.e_[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        if (vars() != m.vars()) throw PreconditionError("monomial ambient mismatch");
        std::vector<int> e(e_);
        for (int i = 0; i < vars(); ++i) e[i] += m.e_[i];
        return Monomial(std::move(e));
    }

    // this / m; throws unless m divides this
    Monomial div_exact(const Monomial& m) const {
        if (!m.divides(*this)) throw PreconditionError("monomial division is not exact");
        std::vector<int> e(e_);
        for (int i = 0; i < vars(); ++i) e[i] -= m.e_[i];
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        if (a.vars() != b.vars()) throw PreconditionError("monomial ambient mismatch");
        std::vector<int> e(a.e_);
        for (int i = 0; i < a.vars(); ++i) e[i] = std::max(e[i], b.e_[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<int> e_;
    int deg_;
};

// Visits every exponent vector of total degree `degree` in `vars` variables,
// in lexicographic order (largest x_0 exponent first).
template <typename Fn>
void for_each_monomial(int vars, int degree, Fn&& fn) {
    std::vector<int> e(vars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == vars - 1) {
            e[pos] = remaining;
            fn(const_cast<const std::vector<int>&>(e));
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
        e[pos] = 0;
    };
    if (vars == 0) return;
    rec(rec, 0, degree);
}

} // namespace genus
