#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "genus/ideal.hpp"
#include "genus/monomial_ideal.hpp"
#include "genus/polynomial.hpp"

namespace genus {
namespace detail {

struct OrdTerm {
    Monomial mono;
    BigRational coef;
};

// Terms sorted strictly descending under the active order. Monomial
// multiplication preserves the sort, so all arithmetic is merging.
struct OrdPoly {
    std::vector<OrdTerm> terms;
    bool empty() const { return terms.empty(); }
    const OrdTerm& lead() const { return terms.front(); }
};

inline OrdPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
    OrdPoly q;
    q.terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) q.terms.push_back({m, c});
    std::sort(q.terms.begin(), q.terms.end(), [&](const OrdTerm& a, const OrdTerm& b) {
        return compare(a.mono, b.mono, order) > 0;
    });
    return q;
}

inline Polynomial from_ordered(const OrdPoly& q, int vars) {
    Polynomial p(vars);
    for (const auto& t : q.terms) p.add_term(t.mono, t.coef);
    return p;
}

// merge a (from index a_from) with scale * mu * b (from index b_from)
inline OrdPoly merge_scaled(const OrdPoly& a, std::size_t a_from, const BigRational& scale,
                            const Monomial& mu, const OrdPoly& b, std::size_t b_from,
                            const MonomialOrder& order) {
    OrdPoly out;
    out.terms.reserve((a.terms.size() - a_from) + (b.terms.size() - b_from));
    std::size_t i = a_from, j = b_from;
    while (i < a.terms.size() && j < b.terms.size()) {
        Monomial bm = mu * b.terms[j].mono;
        auto cmp = compare(a.terms[i].mono, bm, order);
        if (cmp > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            out.terms.push_back({std::move(bm), scale * b.terms[j].coef});
            ++j;
        } else {
            BigRational c = a.terms[i].coef + scale * b.terms[j].coef;
            if (!c.is_zero()) out.terms.push_back({a.terms[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    while (i < a.terms.size()) out.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) {
        out.terms.push_back({mu * b.terms[j].mono, scale * b.terms[j].coef});
        ++j;
    }
    return out;
}

// Full normal form of `work` against `basis`: no monomial of the result is
// divisible by any basis leading monomial.
inline OrdPoly reduce_ordered(OrdPoly work, const std::vector<OrdPoly>& basis,
                              const MonomialOrder& order) {
    OrdPoly rem;
    std::size_t cursor = 0;
    while (cursor < work.terms.size()) {
        const OrdTerm& lt = work.terms[cursor];
        const OrdPoly* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g.lead().mono.divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            rem.terms.push_back(lt);
            ++cursor;
            continue;
        }
        // cancel lt against divisor's lead; merge in the scaled tail
        BigRational scale = -(lt.coef / divisor->lead().coef);
        Monomial mu = lt.mono.div_exact(divisor->lead().mono);
        work = merge_scaled(work, cursor + 1, scale, mu, *divisor, 1, order);
        cursor = 0;
    }
    return rem;
}

inline OrdPoly s_polynomial_ordered(const OrdPoly& f, const OrdPoly& g,
                                    const MonomialOrder& order) {
    Monomial l = lcm(f.lead().mono, g.lead().mono);
    OrdPoly lhs; // (1/lc_f) * (l / lm_f) * f
    Monomial mf = l.div_exact(f.lead().mono);
    BigRational inv_f = BigRational(1) / f.lead().coef;
    lhs.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) lhs.terms.push_back({mf * t.mono, inv_f * t.coef});
    Monomial mg = l.div_exact(g.lead().mono);
    BigRational neg_inv_g = BigRational(-1) / g.lead().coef;
    return merge_scaled(lhs, 0, neg_inv_g, mg, g, 0, order);
}

inline void make_monic(OrdPoly& p) {
    if (p.empty()) return;
    BigRational inv = BigRational(1) / p.lead().coef;
    for (auto& t : p.terms) t.coef = inv * t.coef;
}

} // namespace detail

/// Remainder of multivariate division of p by `basis` under `order`:
/// p minus the result lies in the ideal generated by basis, and no
/// monomial of the result is divisible by any basis leading monomial.
inline Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                         const MonomialOrder& order) {
    std::vector<detail::OrdPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue; // callers must pass nonzero elements; be forgiving
        b.push_back(detail::to_ordered(g, order));
    }
    auto r = detail::reduce_ordered(detail::to_ordered(p, order), b, order);
    return detail::from_ordered(r, p.ambient_vars());
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw PreconditionError("s-polynomial of a zero polynomial");
    auto s = detail::s_polynomial_ordered(detail::to_ordered(f, order),
                                          detail::to_ordered(g, order), order);
    return detail::from_ordered(s, f.ambient_vars());
}

/// Buchberger's algorithm with the coprime and chain criteria. Pairs are
/// processed lowest lcm degree first, ties broken by generator index pair,
/// so runs are reproducible. Returns the reduced Groebner basis, monic,
/// sorted by ascending leading monomial; the reduced basis is unique for
/// (ideal, order), so permuting the input generators cannot change it.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                          const MonomialOrder& order) {
    using detail::OrdPoly;
    int vars = 0;
    std::vector<OrdPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        vars = g.ambient_vars();
        auto og = detail::to_ordered(g, order);
        detail::make_monic(og);
        basis.push_back(std::move(og));
    }
    if (basis.empty()) return {};

    // (lcm degree, i, j) with i < j; pending tracks queue membership so the
    // chain criterion only trusts pairs that were already popped
    std::set<std::tuple<int, int, int>> queue;
    std::set<std::pair<int, int>> pending;
    auto push_pair = [&](int i, int j) {
        Monomial l = lcm(basis[i].lead().mono, basis[j].lead().mono);
        queue.emplace(l.degree(), i, j);
        pending.emplace(i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(static_cast<int>(i), static_cast<int>(j));

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        const Monomial& lmi = basis[i].lead().mono;
        const Monomial& lmj = basis[j].lead().mono;
        if (lmi.coprime_with(lmj)) continue; // Buchberger's first criterion

        // chain criterion: some lm_k divides lcm(lm_i, lm_j) and both
        // (i,k) and (j,k) were already handled
        Monomial l = lcm(lmi, lmj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].lead().mono.divides(l)) continue;
            auto pa = std::minmax(i, k);
            auto pb = std::minmax(j, k);
            if (!pending.contains({pa.first, pa.second}) &&
                !pending.contains({pb.first, pb.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        auto s = detail::s_polynomial_ordered(basis[i], basis[j], order);
        auto r = detail::reduce_ordered(std::move(s), basis, order);
        if (r.empty()) continue;
        detail::make_monic(r);
        basis.push_back(std::move(r));
        int m = static_cast<int>(basis.size()) - 1;
        for (int k = 0; k < m; ++k) push_pair(k, m);
    }

    // minimize: drop elements whose leading monomial another one divides
    std::vector<int> kept;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        bool drop = false;
        for (int j = 0; j < static_cast<int>(basis.size()) && !drop; ++j) {
            if (i == j) continue;
            const Monomial& lmj = basis[j].lead().mono;
            if (lmj.divides(basis[i].lead().mono))
                drop = lmj == basis[i].lead().mono ? j < i : true;
        }
        if (!drop) kept.push_back(i);
    }

    // inter-reduce tails; leading monomials are pairwise non-dividing, so a
    // single full-reduction pass of each element against the others suffices
    std::vector<OrdPoly> minimal;
    minimal.reserve(kept.size());
    for (int i : kept) minimal.push_back(basis[i]);
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrdPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = detail::reduce_ordered(minimal[i], others, order);
        detail::make_monic(r);
        out.push_back(detail::from_ordered(r, vars));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(leading_monomial(a, order), leading_monomial(b, order), order) < 0;
    });
    return out;
}

/// Reduced Groebner basis of I under `order`, computed once and cached.
inline const std::vector<Polynomial>& groebner_basis(const Ideal& I,
                                                     const MonomialOrder& order) {
    if (const auto* hit = I.cached_basis(order)) return *hit;
    return I.store_basis(order, buchberger(I.generators(), order));
}

/// Ideal of leading monomials of the reduced basis, by minimal generators.
inline MonomialIdeal leading_ideal(const Ideal& I, const MonomialOrder& order) {
    const auto& gb = groebner_basis(I, order);
    std::vector<Monomial> lms;
    lms.reserve(gb.size());
    for (const auto& g : gb) lms.push_back(leading_monomial(g, order));
    return MonomialIdeal(I.ambient_vars(), std::move(lms));
}

/// I ∩ k[x_k, .., x_n] as an ideal in the last n+1−k variables, from the
/// reduced basis under elimination-block(k). The surviving elements form
/// the reduced grevlex basis of the result, so it is cached on the way out.
inline Ideal elimination_ideal(const Ideal& I, int drop_first_k) {
    const int vars = I.ambient_vars();
    if (drop_first_k < 0 || drop_first_k >= vars)
        throw PreconditionError("elimination must keep at least one variable");
    const auto& gb = groebner_basis(I, MonomialOrder::elimination_block(drop_first_k));
    const int rest = vars - drop_first_k;
    std::vector<Polynomial> survivors;
    for (const auto& g : gb) {
        // for an elimination order, a block-free leading monomial means the
        // whole polynomial is block-free
        const Monomial lm = leading_monomial(g, MonomialOrder::elimination_block(drop_first_k));
        bool uses_block = false;
        for (int i = 0; i < drop_first_k && !uses_block; ++i) uses_block = lm.exp(i) > 0;
        if (uses_block) continue;
        Polynomial stripped(rest);
        for (const auto& [m, c] : g.terms()) {
            std::vector<int> e(m.exponents().begin() + drop_first_k, m.exponents().end());
            stripped.add_term(Monomial(std::move(e)), c);
        }
        survivors.push_back(std::move(stripped));
    }
    Ideal result(rest, survivors);
    result.store_basis(MonomialOrder::grevlex(), std::move(survivors));
    return result;
}

} // namespace genus
