#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "genus/monomial.hpp"
#include "genus/order.hpp"

namespace genus {

/// A monomial ideal by its minimal generators: pairwise non-dividing and
/// sorted by (degree, exponent vector) for reproducible output.
class MonomialIdeal {
public:
    MonomialIdeal(int vars, std::vector<Monomial> generators) : vars_(vars) {
        for (const auto& m : generators)
            if (m.vars() != vars_) throw PreconditionError("monomial ambient mismatch");
        gens_ = minimalize(std::move(generators));
    }

    static MonomialIdeal zero(int vars) { return MonomialIdeal(vars, {}); }

    int vars() const { return vars_; }
    const std::vector<Monomial>& minimal_generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // generated by 1, i.e. the ideal is the whole ring
    bool is_whole_ring() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    MonomialIdeal plus_variable(int i) const {
        std::vector<Monomial> out;
        out.push_back(Monomial::variable(vars_, i));
        for (const auto& g : gens_)
            if (g.exp(i) == 0) out.push_back(g);
        return MonomialIdeal(vars_, std::move(out));
    }

    // colon ideal (this : x_i)
    MonomialIdeal colon_variable(int i) const {
        std::vector<Monomial> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) {
            if (g.exp(i) > 0) {
                auto e = g.exponents();
                e[i] -= 1;
                out.emplace_back(std::move(e));
            } else {
                out.push_back(g);
            }
        }
        return MonomialIdeal(vars_, std::move(out));
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.vars_ == b.vars_ && a.gens_ == b.gens_;
    }

private:
    static std::vector<Monomial> minimalize(std::vector<Monomial> in) {
        std::sort(in.begin(), in.end(), canonical_less);
        in.erase(std::unique(in.begin(), in.end()), in.end());
        std::vector<Monomial> out;
        for (const auto& m : in) {
            bool redundant = false;
            for (const auto& kept : out)
                if (kept.divides(m)) { // sorted by degree, so kept has degree <= m
                    redundant = true;
                    break;
                }
            if (!redundant) out.push_back(m);
        }
        return out;
    }

    static bool canonical_less(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    }

    int vars_;
    std::vector<Monomial> gens_;
};

} // namespace genus
