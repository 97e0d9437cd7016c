#pragma once

#include <compare>
#include <string>

#include "genus/errors.hpp"
#include "genus/monomial.hpp"

namespace genus {

/// Monomial orders: grevlex, lex, and the elimination block order, which
/// compares the first k exponents lexicographically and falls back to
/// grevlex on the remaining variables. Each is a multiplicative well-order;
/// the block order makes any monomial involving one of the first k
/// variables larger than every monomial in the remaining variables alone.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, EliminationBlock };

    Kind kind = Kind::Grevlex;
    int block = 0; // EliminationBlock only: number of leading variables

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elimination_block(int k) {
        if (k < 0) throw PreconditionError("elimination block must be non-negative");
        return {Kind::EliminationBlock, k};
    }

    std::string name() const {
        switch (kind) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::EliminationBlock: return "elimination-block(" + std::to_string(block) + ")";
        }
        return "?";
    }

    friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering lex_range(const std::vector<int>& u, const std::vector<int>& v,
                                      int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (u[i] != v[i]) return u[i] <=> v[i];
    return std::strong_ordering::equal;
}

inline std::strong_ordering grevlex_range(const std::vector<int>& u, const std::vector<int>& v,
                                          int lo, int hi) {
    int du = 0, dv = 0;
    for (int i = lo; i < hi; ++i) {
        du += u[i];
        dv += v[i];
    }
    if (du != dv) return du <=> dv;
    // equal degree: the monomial with the smaller last differing exponent wins
    for (int i = hi - 1; i >= lo; --i)
        if (u[i] != v[i]) return v[i] <=> u[i];
    return std::strong_ordering::equal;
}

} // namespace detail

inline std::strong_ordering compare(const Monomial& u, const Monomial& v,
                                    const MonomialOrder& order) {
    if (u.vars() != v.vars()) throw PreconditionError("monomial ambient mismatch in compare");
    const auto& a = u.exponents();
    const auto& b = v.exponents();
    const int n = u.vars();
    switch (order.kind) {
    case MonomialOrder::Kind::Grevlex: return detail::grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::Lex: return detail::lex_range(a, b, 0, n);
    case MonomialOrder::Kind::EliminationBlock: {
        int k = std::min(order.block, n);
        auto head = detail::lex_range(a, b, 0, k);
        if (head != std::strong_ordering::equal) return head;
        return detail::grevlex_range(a, b, k, n);
    }
    }
    return std::strong_ordering::equal;
}

} // namespace genus
