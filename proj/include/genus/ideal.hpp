#pragma once

#include <map>
#include <utility>
#include <vector>

#include "genus/polynomial.hpp"

namespace genus {

/// Generators of an ideal in a fixed ambient ring. Zero generators are
/// dropped at construction. Reduced Groebner bases are cached per order;
/// once a cache entry exists the value is immutable and shareable.
/// Homogeneity is not enforced here — operations that need it check it.
class Ideal {
public:
    Ideal(int ambient_vars, std::vector<Polynomial> generators) : vars_(ambient_vars) {
        if (ambient_vars <= 0) throw PreconditionError("ambient must have at least one variable");
        gens_.reserve(generators.size());
        for (auto& g : generators) {
            if (g.is_zero()) continue;
            if (g.ambient_vars() != vars_)
                throw PreconditionError("generator ambient mismatch");
            gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(int ambient_vars) { return Ideal(ambient_vars, {}); }

    int ambient_vars() const { return vars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!genus::is_homogeneous(g).homogeneous) return false;
        return true;
    }

    const std::vector<Polynomial>* cached_basis(const MonomialOrder& order) const {
        auto it = cache_.find(order);
        return it == cache_.end() ? nullptr : &it->second;
    }

    const std::vector<Polynomial>& store_basis(const MonomialOrder& order,
                                               std::vector<Polynomial> basis) const {
        return cache_.insert_or_assign(order, std::move(basis)).first->second;
    }

private:
    int vars_;
    std::vector<Polynomial> gens_;
    mutable std::map<MonomialOrder, std::vector<Polynomial>> cache_;
};

} // namespace genus
