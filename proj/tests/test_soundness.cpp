// Pipeline-wide soundness properties over a shared matrix of test ideals:
// S-polynomial reduction, Hilbert function/polynomial agreement on the
// verified window, and order independence of the Hilbert polynomial.
#include <catch2/catch_amalgamated.hpp>

#include <genus/constructions.hpp>
#include <genus/invariants.hpp>

#include "oracles.hpp"

using namespace genus;
using oracle::P;

namespace {

struct MatrixEntry {
    std::string name;
    Ideal ideal;
};

const std::vector<MatrixEntry>& test_matrix() {
    static const std::vector<MatrixEntry> matrix = [] {
        std::vector<MatrixEntry> m;
        m.push_back({"P^1", Ideal::zero(2)});
        m.push_back({"P^2", Ideal::zero(3)});
        m.push_back({"P^3", Ideal::zero(4)});
        m.push_back({"fermat plane cubic", Ideal(3, {P("x0^3 + x1^3 + x2^3", 3)})});
        m.push_back({"random quartic in P^3", make_hypersurface(4, 3, 3).ideal()});
        m.push_back({"random quadric in P^3", make_hypersurface(2, 3, 1).ideal()});
        m.push_back({"twisted cubic",
                     Ideal(4, {P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4),
                               P("x0*x3 - x1*x2", 4)})});
        m.push_back({"two linear forms", Ideal(2, {P("x0 + x1", 2), P("x0 - x1", 2)})});
        m.push_back({"segre image of P^1 x P^1",
                     segre_product_ideal(Ideal::zero(2), Ideal::zero(2))});
        m.push_back({"segre image of P^1 x conic",
                     segre_product_ideal(Ideal::zero(2), make_hypersurface(2, 2, 12).ideal())});
        m.push_back({"segre image of line x cubic",
                     segre_product_ideal(make_hypersurface(1, 2, 11).ideal(),
                                         make_hypersurface(3, 2, 13).ideal())});
        return m;
    }();
    return matrix;
}

void check_reduced_basis(const std::vector<Polynomial>& gb, const MonomialOrder& order) {
    for (const auto& g : gb) REQUIRE(leading_term(g, order).second == BigRational(1));
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j) continue;
            Monomial lm = leading_monomial(gb[j], order);
            for (const auto& [m, c] : gb[i].terms()) REQUIRE_FALSE(lm.divides(m));
        }
}

} // namespace

TEST_CASE("every S-polynomial of every reduced basis reduces to zero") {
    for (const auto& entry : test_matrix()) {
        for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
            INFO(entry.name << " under " << order.name());
            const auto& gb = groebner_basis(entry.ideal, order);
            check_reduced_basis(gb, order);
            for (std::size_t i = 0; i < gb.size(); ++i)
                for (std::size_t j = i + 1; j < gb.size(); ++j)
                    REQUIRE(reduce(s_polynomial(gb[i], gb[j], order), gb, order).is_zero());
            // and the original generators lie in the ideal of the basis
            for (const auto& g : entry.ideal.generators())
                REQUIRE(reduce(g, gb, order).is_zero());
        }
    }
}

TEST_CASE("hilbert function equals the polynomial on the verified window") {
    for (const auto& entry : test_matrix()) {
        INFO(entry.name);
        const int vars = entry.ideal.ambient_vars();
        MonomialIdeal lead = leading_ideal(entry.ideal, MonomialOrder::grevlex());
        auto hp = hilbert_polynomial(hilbert_numerator(lead, vars));
        const int t0 = hp.stability_threshold;
        for (int t = t0; t <= t0 + 5; ++t)
            REQUIRE(hp.poly.eval_integer(BigInt(t)) == hilbert_function(lead, vars, t));
    }
}

TEST_CASE("grevlex and lex leading ideals give the same Hilbert polynomial") {
    for (const auto& entry : test_matrix()) {
        INFO(entry.name);
        const int vars = entry.ideal.ambient_vars();
        auto via_grevlex = hilbert_polynomial(
            hilbert_numerator(leading_ideal(entry.ideal, MonomialOrder::grevlex()), vars));
        auto via_lex = hilbert_polynomial(
            hilbert_numerator(leading_ideal(entry.ideal, MonomialOrder::lex()), vars));
        REQUIRE(via_grevlex.poly == via_lex.poly);
    }
}

TEST_CASE("standard monomial counts match brute-force quotient dimensions") {
    for (const auto& entry : test_matrix()) {
        const int vars = entry.ideal.ambient_vars();
        if (vars > 4) continue; // the linear-algebra oracle is for desk-size ambients
        INFO(entry.name);
        MonomialIdeal lead = leading_ideal(entry.ideal, MonomialOrder::grevlex());
        for (int t = 0; t <= 6; ++t)
            REQUIRE(hilbert_function(lead, vars, t) ==
                    oracle::quotient_dimension(entry.ideal.generators(), vars, t));
    }
}

TEST_CASE("degree and dimension sanity across the matrix") {
    for (const auto& entry : test_matrix()) {
        INFO(entry.name);
        if (entry.name == "two linear forms") {
            // cuts out the empty subscheme of P^1; analyze must refuse it
            REQUIRE_THROWS_AS(analyze(entry.ideal), PreconditionError);
            continue;
        }
        VarietyReport rep = analyze(entry.ideal);
        REQUIRE(rep.degree >= 1);
        REQUIRE(rep.dimension >= 0);
        REQUIRE(rep.chi == euler_characteristic(rep.p_a, rep.dimension));
    }
}
