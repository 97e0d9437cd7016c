#pragma once

#include <utility>

#include "genus/groebner.hpp"
#include "genus/hilbert.hpp"
#include "genus/ideal.hpp"

namespace genus {

/// binom(a, b) with the convention binom(a, b) = 0 whenever a < b,
/// including every a < 0 case.
inline BigInt paper_binomial(const BigInt& a, int b) {
    if (b < 0) throw PreconditionError("paper_binomial needs b >= 0");
    if (a < b) return 0;
    return binomial(a, b);
}

/// Arithmetic genus of a degree-d hypersurface in P^N: binom(d-1, N).
/// Zero whenever d - 1 < N, and never negative.
inline BigInt hypersurface_genus(int d, int N) {
    if (d < 1 || N < 1) throw PreconditionError("hypersurface_genus needs d >= 1, N >= 1");
    return paper_binomial(BigInt(d - 1), N);
}

/// Genus of a product: p_a(Y)p_a(Z) + (-1)^s p_a(Y) + (-1)^r p_a(Z)
/// for factors of dimensions r and s.
inline BigInt product_genus(const BigInt& pa_y, int r, const BigInt& pa_z, int s) {
    if (r < 0 || s < 0) throw PreconditionError("product_genus needs r, s >= 0");
    const int sign_s = (s % 2 == 0) ? 1 : -1;
    const int sign_r = (r % 2 == 0) ? 1 : -1;
    return pa_y * pa_z + sign_s * pa_y + sign_r * pa_z;
}

/// Genus of H_d x H_l for H_d in P^{2n} with d - 1 < n and H_l in P^m:
/// -binom(l-1, m), strictly negative exactly when l - 1 >= m.
inline BigInt theorem_prod_genus(int d, int n, int l, int m) {
    if (d < 1 || n < 1 || l < 1 || m < 1)
        throw PreconditionError("theorem_prod_genus needs d, n, l, m >= 1");
    if (d - 1 >= n)
        throw PreconditionError("theorem hypothesis violated: requires d - 1 < n");
    return -paper_binomial(BigInt(l - 1), m);
}

/// chi(O_Y) from the genus: chi = 1 + (-1)^r p_a.
inline BigInt euler_characteristic(const BigInt& p_a, int r) {
    if (r < 0) throw PreconditionError("euler_characteristic needs r >= 0");
    return (r % 2 == 0) ? BigInt(1 + p_a) : BigInt(1 - p_a);
}

/// Invariants of one projective variety (scheme): computed from the Hilbert
/// polynomial of its homogeneous coordinate ring, so any homogeneous ideal
/// is accepted, prime or not.
struct VarietyReport {
    int ambient_index = 0; // the variety is embedded in P^ambient_index
    int dimension = 0;     // r
    BigInt degree;
    HilbertPolynomial hilbert;
    int stability_threshold = 0;
    BigInt p_a;
    BigInt chi;
};

/// Full pipeline: reduced Groebner basis -> leading-term ideal -> Hilbert
/// series -> Hilbert polynomial -> (r, degree, p_a, chi), everything exact.
inline VarietyReport analyze(const Ideal& I) {
    for (const auto& g : I.generators())
        if (!is_homogeneous(g).homogeneous)
            throw PreconditionError("analyze requires homogeneous generators");
    const int vars = I.ambient_vars();
    MonomialIdeal lead = leading_ideal(I, MonomialOrder::grevlex());
    if (lead.is_whole_ring())
        throw PreconditionError("zero quotient ring: the ideal contains a unit");
    auto series = hilbert_numerator(lead, vars);
    auto hp = hilbert_polynomial(series);
    if (hp.poly.is_zero())
        throw PreconditionError("empty variety: the Hilbert polynomial is zero");
    auto dd = dimension_and_degree(hp.poly);

    VarietyReport rep;
    rep.ambient_index = vars - 1;
    rep.dimension = dd.dimension;
    rep.degree = dd.degree;
    rep.hilbert = hp.poly;
    rep.stability_threshold = hp.stability_threshold;
    BigInt at_zero = hp.poly.eval_integer(BigInt(0));
    rep.p_a = (dd.dimension % 2 == 0) ? BigInt(at_zero - 1) : BigInt(1 - at_zero);
    rep.chi = euler_characteristic(rep.p_a, dd.dimension);
    return rep;
}

} // namespace genus
