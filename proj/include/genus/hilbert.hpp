#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "genus/monomial_ideal.hpp"
#include "genus/rational.hpp"

namespace genus {

namespace detail {

// dense integer polynomials in t, index = power
inline void trim(std::vector<BigInt>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<BigInt> poly_add_shifted(const std::vector<BigInt>& a,
                                            const std::vector<BigInt>& b, int shift) {
    std::vector<BigInt> r(std::max(a.size(), b.size() + shift), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
    trim(r);
    return r;
}

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline BigInt poly_eval_at_one(const std::vector<BigInt>& p) {
    BigInt s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// exact division by (1 - t); caller guarantees p(1) == 0
inline std::vector<BigInt> poly_div_one_minus_t(const std::vector<BigInt>& p) {
    // (q_0 + q_1 t + ...)(1 - t) = p  =>  q_i = p_i + q_{i-1}
    std::vector<BigInt> q(p.size() > 0 ? p.size() - 1 : 0, BigInt(0));
    BigInt carry = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        carry += p[i];
        q[i] = carry;
    }
    trim(q);
    return q;
}

inline std::vector<BigInt> numerator_rec(const MonomialIdeal& m) {
    const auto& gens = m.minimal_generators();
    if (m.is_whole_ring()) return {}; // zero series
    bool all_pure = true;
    for (const auto& g : gens) {
        int support = 0;
        for (int i = 0; i < g.vars(); ++i)
            if (g.exp(i) > 0) ++support;
        if (support > 1) {
            all_pure = false;
            break;
        }
    }
    if (all_pure) {
        // pairwise non-dividing pure powers have distinct variables:
        // numerator is the product of (1 - t^deg)
        std::vector<BigInt> r{BigInt(1)};
        for (const auto& g : gens) {
            std::vector<BigInt> f(g.degree() + 1, BigInt(0));
            f[0] = 1;
            f[g.degree()] = -1;
            r = poly_mul(r, f);
        }
        return r;
    }
    // pivot: variable occurring in the most minimal generators, lowest index
    // wins; candidates are limited to variables of non-pure-power generators
    // so each branch strictly shrinks (a pivot that is itself a generator
    // would leave M + (x) = M)
    std::vector<bool> candidate(m.vars(), false);
    for (const auto& g : gens) {
        int support = 0;
        for (int i = 0; i < g.vars(); ++i)
            if (g.exp(i) > 0) ++support;
        if (support > 1)
            for (int i = 0; i < g.vars(); ++i)
                if (g.exp(i) > 0) candidate[i] = true;
    }
    int pivot = 0, best = -1;
    for (int v = 0; v < m.vars(); ++v) {
        if (!candidate[v]) continue;
        int count = 0;
        for (const auto& g : gens)
            if (g.exp(v) > 0) ++count;
        if (count > best) {
            best = count;
            pivot = v;
        }
    }
    // from 0 -> R/(M:x) --x--> R/M -> R/(M+(x)) -> 0:
    // num(M) = num(M + (x)) + t * num(M : x)
    auto plus = numerator_rec(m.plus_variable(pivot));
    auto colon = numerator_rec(m.colon_variable(pivot));
    return poly_add_shifted(plus, colon, 1);
}

} // namespace detail

/// Numerator h(t) of the Hilbert series h(t)/(1-t)^vars of the quotient by
/// a monomial ideal, stored raw and with all (1-t) factors cancelled. The
/// pole order of the series is the Krull dimension of the quotient; the
/// cancelled numerator evaluated at 1 is the degree.
struct HilbertSeriesNumerator {
    std::vector<BigInt> raw;
    std::vector<BigInt> reduced;
    int vars = 0;
    int pole_order = 0;

    BigInt degree() const { return detail::poly_eval_at_one(reduced); }
    bool is_zero_series() const { return reduced.empty(); }
};

inline HilbertSeriesNumerator hilbert_numerator(const MonomialIdeal& m, int vars) {
    if (m.vars() != vars) throw PreconditionError("monomial ideal ambient mismatch");
    HilbertSeriesNumerator h;
    h.vars = vars;
    h.raw = detail::numerator_rec(m);
    h.reduced = h.raw;
    int cancelled = 0;
    while (!h.reduced.empty() && detail::poly_eval_at_one(h.reduced) == 0) {
        h.reduced = detail::poly_div_one_minus_t(h.reduced);
        ++cancelled;
    }
    h.pole_order = h.reduced.empty() ? 0 : vars - cancelled;
    return h;
}

/// Brute-force Hilbert function: the number of degree-t monomials in `vars`
/// variables divisible by no generator of m. Independent oracle for the
/// series route.
inline BigInt hilbert_function(const MonomialIdeal& m, int vars, int t) {
    if (t < 0) throw PreconditionError("hilbert_function needs t >= 0");
    if (m.vars() != vars) throw PreconditionError("monomial ideal ambient mismatch");
    BigInt count = 0;
    for_each_monomial(vars, t, [&](const std::vector<int>& e) {
        if (!m.contains(Monomial(e))) ++count;
    });
    return count;
}

/// Univariate polynomial in t with rational coefficients, in the power
/// basis. The zero polynomial has no coefficients and no degree.
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    bool is_zero() const { return c_.empty(); }
    // polynomial degree = variety dimension r; unset for the zero polynomial
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    const std::vector<BigRational>& coefficients() const { return c_; }

    BigRational eval(const BigInt& t) const {
        BigRational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * BigRational(t) + *it;
        return r;
    }

    // value at an integer point, which must itself be an integer
    BigInt eval_integer(const BigInt& t) const { return eval(t).to_integer(); }

    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

private:
    std::vector<BigRational> c_;
};

struct HilbertPolynomialResult {
    HilbertPolynomial poly;
    // smallest t from which agreement with the Hilbert function was verified
    int stability_threshold = 0;
};

namespace detail {

// coefficient of t^m in h(t)/(1-t)^vars, i.e. the Hilbert function value
inline BigInt series_coefficient(const std::vector<BigInt>& h, int vars, int m) {
    BigInt s = 0;
    for (int i = 0; i <= m && i < static_cast<int>(h.size()); ++i)
        s += h[i] * binomial(BigInt(m - i + vars - 1), vars - 1);
    return s;
}

// binom(t + c, k) expanded in the power basis: prod_{j=0..k-1} (t + c - j) / k!
inline std::vector<BigRational> binomial_in_t(int c, int k) {
    std::vector<BigRational> p{BigRational(1)};
    for (int j = 0; j < k; ++j) {
        std::vector<BigRational> next(p.size() + 1, BigRational(0));
        BigRational a(c - j);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i] * a;
            next[i + 1] += p[i];
        }
        p = std::move(next);
    }
    BigRational inv_fact(BigInt(1), factorial(k));
    for (auto& x : p) x *= inv_fact;
    return p;
}

} // namespace detail

/// The polynomial agreeing with the Hilbert function for all t past the
/// returned threshold, from the cancelled series numerator:
/// P(t) = sum_i q_i * binom(t - i + D - 1, D - 1) with D the pole order.
/// Agreement on [t0, t0+5] is checked against the raw series before
/// returning. An empty variety (pole order 0) yields the zero polynomial.
inline HilbertPolynomialResult hilbert_polynomial(const HilbertSeriesNumerator& h) {
    HilbertPolynomialResult out;
    const int d = h.pole_order;
    const auto& q = h.reduced;
    if (h.is_zero_series()) {
        out.stability_threshold = 0;
        return out;
    }
    if (d == 0) {
        // finite-length quotient: the series is a polynomial, P = 0
        out.stability_threshold = static_cast<int>(q.size());
    } else {
        std::vector<BigRational> coeffs(d, BigRational(0));
        for (int i = 0; i < static_cast<int>(q.size()); ++i) {
            if (q[i] == 0) continue;
            auto b = detail::binomial_in_t(d - 1 - i, d - 1);
            for (std::size_t k = 0; k < b.size(); ++k) coeffs[k] += BigRational(q[i]) * b[k];
        }
        out.poly = HilbertPolynomial(std::move(coeffs));
        out.stability_threshold = std::max(0, static_cast<int>(q.size()) - d);
    }

    // verify the stated agreement window and integer-valuedness
    for (int t = out.stability_threshold; t <= out.stability_threshold + 5; ++t) {
        if (out.poly.eval_integer(BigInt(t)) != detail::series_coefficient(h.raw, h.vars, t))
            throw std::logic_error("hilbert polynomial disagrees with its series");
    }
    int r = out.poly.degree().value_or(0);
    for (int t = -r; t <= r + 3; ++t)
        (void)out.poly.eval_integer(BigInt(t)); // throws if non-integral
    return out;
}

struct DimensionDegree {
    int dimension = 0; // r = deg P
    BigInt degree;     // r! times the leading coefficient
};

inline DimensionDegree dimension_and_degree(const HilbertPolynomial& p) {
    if (p.is_zero())
        throw PreconditionError("dimension of the zero Hilbert polynomial (empty variety)");
    DimensionDegree dd;
    dd.dimension = *p.degree();
    dd.degree = (p.coefficients().back() * BigRational(factorial(dd.dimension))).to_integer();
    if (dd.degree <= 0) throw std::logic_error("variety degree must be positive");
    return dd;
}

} // namespace genus
