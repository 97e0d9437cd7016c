#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genus/groebner.hpp"
#include "genus/invariants.hpp"
#include "genus/random.hpp"

namespace genus {

/// One hypersurface H_d in P^N: a nonzero homogeneous form of degree d in
/// N+1 variables.
struct HypersurfaceSpec {
    int degree = 0;        // d
    int ambient_index = 0; // N
    Polynomial form;

    Ideal ideal() const { return Ideal(ambient_index + 1, {form}); }
};

/// Random dense form: every degree-d monomial gets a coefficient drawn
/// uniformly from the nonzero integers in [-9, 9], in lexicographic
/// exponent order, from the given seed.
inline HypersurfaceSpec make_hypersurface(int d, int N, std::uint64_t seed) {
    if (d < 1 || N < 1) throw PreconditionError("make_hypersurface needs d >= 1, N >= 1");
    SeededRng rng(seed);
    Polynomial form(N + 1);
    for_each_monomial(N + 1, d, [&](const std::vector<int>& e) {
        form.add_term(Monomial(e), BigRational(rng.nonzero_int_in(-9, 9)));
    });
    return {d, N, std::move(form)};
}

/// Z(fg): the composite hypersurface of the paper's arbitrary-genus family.
inline HypersurfaceSpec composite_hypersurface(const HypersurfaceSpec& f,
                                               const HypersurfaceSpec& g) {
    if (f.ambient_index != g.ambient_index)
        throw PreconditionError("composite hypersurface needs a common ambient");
    if (f.form.is_zero() || g.form.is_zero())
        throw PreconditionError("composite hypersurface needs nonzero forms");
    return {f.degree + g.degree, f.ambient_index, f.form * g.form};
}

/// Ideal of the image of Y x Z under the Segre map z_ij = x_i y_j, computed
/// by eliminating all x and y variables from {z_ij - x_i y_j} + I(Y) + I(Z).
/// Variables of the result are z_ij in row-major order (i from Y, j from Z).
inline Ideal segre_product_ideal(const Ideal& iy, const Ideal& iz) {
    if (!iy.is_homogeneous() || !iz.is_homogeneous())
        throw PreconditionError("segre product needs homogeneous factor ideals");
    const int my = iy.ambient_vars();
    const int mz = iz.ambient_vars();
    const int zvars = my * mz;
    const int total = my + mz + zvars;

    std::vector<Polynomial> gens;
    auto lift = [&](const Polynomial& p, int offset) {
        Polynomial lifted(total);
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e(total, 0);
            for (int i = 0; i < m.vars(); ++i) e[offset + i] = m.exp(i);
            lifted.add_term(Monomial(std::move(e)), c);
        }
        return lifted;
    };
    for (const auto& g : iy.generators()) gens.push_back(lift(g, 0));
    for (const auto& g : iz.generators()) gens.push_back(lift(g, my));
    for (int i = 0; i < my; ++i)
        for (int j = 0; j < mz; ++j) {
            Polynomial rel(total);
            rel.add_term(Monomial::variable(total, my + mz + i * mz + j), BigRational(1));
            rel.add_term(Monomial::variable(total, i) * Monomial::variable(total, my + j),
                         BigRational(-1));
            gens.push_back(std::move(rel));
        }

    Ideal image = elimination_ideal(Ideal(total, std::move(gens)), my + mz);
    if (image.is_zero_ideal())
        throw std::logic_error("segre elimination produced the zero ideal");
    return image;
}

/// Image of a generic linear projection to P^{r+1}. `birational_certified`
/// is always false: the postcondition checked here is only that the image
/// is a hypersurface of the right dimension, not that the map is birational.
struct ProjectionResult {
    Ideal image_ideal;
    bool is_principal = false;
    int image_degree = 0;
    int attempts = 0;
    std::uint64_t seed = 0;
    bool birational_certified = false;
    std::vector<std::string> attempt_log;
};

namespace detail {

// Bareiss fraction-free elimination; exact over BigInt.
inline BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
    const int n = static_cast<int>(a.size());
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<int>> random_invertible_matrix(int n, SeededRng& rng) {
    for (;;) {
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
        std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[i][j] = rng.int_in(-5, 5);
                b[i][j] = a[i][j];
            }
        if (integer_determinant(std::move(b)) != 0) return a;
    }
}

} // namespace detail

/// Hartshorne I.4.9 made computational: apply a seeded random invertible
/// linear change of coordinates, then eliminate all but the last r+2
/// variables. On success the image ideal is principal and its zero scheme
/// is an r-dimensional hypersurface in P^{r+1}; failed attempts retry with
/// fresh coordinates, up to max_attempts.
inline ProjectionResult project_to_hypersurface(const Ideal& I, std::uint64_t seed,
                                                int max_attempts) {
    if (max_attempts < 1) throw PreconditionError("max_attempts must be at least 1");
    VarietyReport source = analyze(I);
    const int vars = I.ambient_vars();
    const int target = source.dimension + 2;
    if (target > vars)
        throw PreconditionError("projection target P^{r+1} needs r + 2 <= ambient variables");

    SeededRng rng(seed);
    std::vector<std::string> log;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        auto a = detail::random_invertible_matrix(vars, rng);
        std::vector<Polynomial> moved;
        moved.reserve(I.generators().size());
        for (const auto& g : I.generators()) moved.push_back(substitute_linear(g, a));
        Ideal image = elimination_ideal(Ideal(vars, std::move(moved)), vars - target);
        if (image.generators().size() != 1) {
            log.push_back("attempt " + std::to_string(attempt) + ": image has " +
                          std::to_string(image.generators().size()) +
                          " minimal generators, not principal");
            continue;
        }
        const Polynomial& hyp = image.generators()[0];
        auto hom = is_homogeneous(hyp);
        if (!hom.homogeneous) {
            log.push_back("attempt " + std::to_string(attempt) +
                          ": image generator is not homogeneous");
            continue;
        }
        VarietyReport check = analyze(image);
        if (check.dimension != source.dimension) {
            log.push_back("attempt " + std::to_string(attempt) + ": image dimension " +
                          std::to_string(check.dimension) + " != " +
                          std::to_string(source.dimension));
            continue;
        }
        ProjectionResult res{std::move(image), true, *hom.degree, attempt, seed, false,
                             std::move(log)};
        return res;
    }
    throw ProjectionError("projection failed after " + std::to_string(max_attempts) +
                              " attempts",
                          std::move(log));
}

} // namespace genus
