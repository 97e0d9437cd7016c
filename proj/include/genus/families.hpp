#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genus/constructions.hpp"
#include "genus/invariants.hpp"

namespace genus {

/// One birational pair (Y, Y') with Y = P^1 x H_l of dimension n >= 4 and
/// Y' = H_e any hypersurface model of Y in P^{n+1}. Y's invariants are
/// closed-form; for Y' the record carries the bound p_a >= 0, which already
/// separates the pair whenever gap_witness holds. A computed model is only
/// attached when desk-scale elimination succeeded (never for n >= 4).
struct CounterexampleRecord {
    int n = 0;    // ambient index of H_l; also dim Y
    int l = 0;    // degree of H_l
    int dim_y = 0;
    BigInt pa_y;  // -binom(l-1, n)
    BigInt chi_y;
    BigInt pa_he_lower_bound; // always 0
    bool gap_witness = false; // pa_y < 0, i.e. l - 1 >= n
    std::optional<ProjectionResult> model;
    std::optional<BigInt> pa_he;
    std::optional<BigInt> chi_he;
};

inline CounterexampleRecord maincorr_record(int n, int l) {
    if (n < 4) throw PreconditionError("corollary requires n >= 4");
    if (l - 1 < n) throw PreconditionError("corollary requires l - 1 >= n");
    CounterexampleRecord rec;
    rec.n = n;
    rec.l = l;
    rec.dim_y = n;
    rec.pa_y = -paper_binomial(BigInt(l - 1), n);
    rec.chi_y = euler_characteristic(rec.pa_y, n);
    rec.pa_he_lower_bound = 0;
    rec.gap_witness = rec.pa_y < 0;
    return rec;
}

/// The corollary's family over a parameter box: for each n in
/// [n_min, n_max], l runs from n+1 (or l_min if larger) to l_max.
/// Passing n_min < 4, or an explicit l_min below n+1 for some n in range,
/// violates the corollary's hypotheses and is an error.
inline std::vector<CounterexampleRecord> maincorr_family(int n_min, int n_max, int l_max,
                                                         std::optional<int> l_min = {}) {
    if (n_min < 4) throw PreconditionError("corollary requires n >= 4");
    if (n_min > n_max) throw PreconditionError("empty n range");
    if (l_min && *l_min < n_min + 1)
        throw PreconditionError("corollary requires l - 1 >= n");
    std::vector<CounterexampleRecord> out;
    for (int n = n_min; n <= n_max; ++n) {
        int lo = std::max(l_min.value_or(n + 1), n + 1);
        for (int l = lo; l <= l_max; ++l) out.push_back(maincorr_record(n, l));
    }
    return out;
}

/// One step of the arbitrary-genus family H_{e+d} = Z(fg).
struct GapRecord {
    int extra_degree = 0;  // d
    int total_degree = 0;  // e + d
    int ambient_index = 0; // H_{e+d} lives in P^{ambient_index}
    BigInt pa_composite;   // binom(e+d-1, ambient_index)
    BigInt base_pa;        // p_a of the base Y (after any P^1 x wrap)
    int base_dim = 0;
    bool wrapped = false;  // base had positive genus and was replaced by P^1 x X
    BigInt gap;            // base_pa - pa_composite
};

/// Genus column of the paper's arbitrary-genus example for explicit base
/// invariants: the base (p_a, r) with p_a != 0, a degree-e hypersurface
/// model in P^{r+1} (after wrapping positive-genus bases as P^1 x X), and
/// one record per extra degree d with p_a(H_{e+d}) = binom(e+d-1, r+1).
inline std::vector<GapRecord> genus_gap_family(const BigInt& base_pa, int base_dim,
                                               int model_degree_e,
                                               const std::vector<int>& extra_degrees) {
    if (base_pa == 0)
        throw PreconditionError("gap family requires a base with nonzero arithmetic genus");
    if (base_dim < 1) throw PreconditionError("gap family requires positive-dimensional base");
    if (model_degree_e < 1) throw PreconditionError("model degree must be at least 1");
    BigInt pa = base_pa;
    int dim = base_dim;
    bool wrapped = false;
    if (pa > 0) {
        // replace the base by Y = P^1 x X, which has genus -p_a(X) < 0
        pa = product_genus(BigInt(0), 1, pa, dim);
        dim += 1;
        wrapped = true;
    }
    const int ambient = dim + 1;
    std::vector<GapRecord> out;
    for (int d : extra_degrees) {
        if (d < 0) throw PreconditionError("extra degrees must be non-negative");
        GapRecord rec;
        rec.extra_degree = d;
        rec.total_degree = model_degree_e + d;
        rec.ambient_index = ambient;
        rec.pa_composite = paper_binomial(BigInt(rec.total_degree - 1), ambient);
        rec.base_pa = pa;
        rec.base_dim = dim;
        rec.wrapped = wrapped;
        rec.gap = pa - rec.pa_composite;
        out.push_back(std::move(rec));
    }
    return out;
}

/// As above, with the base invariants taken from an ideal. The model degree
/// defaults to the generator degree when the base is principal; otherwise
/// it must be supplied.
inline std::vector<GapRecord> genus_gap_family(const Ideal& base,
                                               const std::vector<int>& extra_degrees,
                                               std::optional<int> model_degree_e = {}) {
    VarietyReport rep = analyze(base);
    int e;
    if (model_degree_e) {
        e = *model_degree_e;
    } else if (base.generators().size() == 1) {
        e = is_homogeneous(base.generators()[0]).degree.value();
    } else {
        throw PreconditionError("model degree required for a non-principal base ideal");
    }
    return genus_gap_family(rep.p_a, rep.dimension, e, extra_degrees);
}

struct ProdGridEntry {
    int d = 0, n = 0, l = 0, m = 0;
    friend auto operator<=>(const ProdGridEntry&, const ProdGridEntry&) = default;
};

struct PipelineBudget {
    int max_segre_ambient_vars = 9; // variables of the Segre target space
    int max_factor_degree = 4;
};

/// One verified tuple: the closed form always, the Segre pipeline value
/// when the tuple fits the budget.
struct ProdVerificationRow {
    ProdGridEntry tuple;
    BigInt closed_form;
    bool pipeline_run = false;
    std::optional<BigInt> pipeline_value;
    std::optional<bool> match;
    std::string skip_reason;
    std::uint64_t seed_d = 0, seed_l = 0;
};

struct ProdVerification {
    std::vector<ProdVerificationRow> rows;
    int mismatches = 0;
    int pipeline_checked = 0;
    int skipped = 0;
};

/// Every hypotheses-satisfying tuple with n <= 3, l <= 7, m <= 5.
inline std::vector<ProdGridEntry> default_prod_grid() {
    std::vector<ProdGridEntry> grid;
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= n; ++d) // d - 1 < n
            for (int l = 1; l <= 7; ++l)
                for (int m = 1; m <= 5; ++m) grid.push_back({d, n, l, m});
    return grid;
}

/// Checks p_a(H_d x H_l) = -binom(l-1, m) on a grid: closed form for every
/// tuple, and for tuples within the budget also the full Segre pipeline on
/// seeded random hypersurfaces, with an exact-match flag. Infeasible tuples
/// are marked skipped, never dropped. Rows come out sorted by tuple.
inline ProdVerification verify_theorem_prod(std::vector<ProdGridEntry> grid,
                                            const PipelineBudget& budget = {},
                                            std::uint64_t seed = 1) {
    std::sort(grid.begin(), grid.end());
    ProdVerification report;
    std::uint64_t counter = 0;
    for (const auto& t : grid) {
        ProdVerificationRow row;
        row.tuple = t;
        row.closed_form = theorem_prod_genus(t.d, t.n, t.l, t.m); // validates hypotheses
        const int segre_vars = (2 * t.n + 1) * (t.m + 1);
        if (segre_vars > budget.max_segre_ambient_vars) {
            row.skip_reason = "segre ambient needs " + std::to_string(segre_vars) +
                              " variables, budget is " +
                              std::to_string(budget.max_segre_ambient_vars);
        } else if (t.d > budget.max_factor_degree || t.l > budget.max_factor_degree) {
            row.skip_reason = "factor degree exceeds budget " +
                              std::to_string(budget.max_factor_degree);
        } else {
            row.seed_d = seed + 2 * counter;
            row.seed_l = seed + 2 * counter + 1;
            HypersurfaceSpec hd = make_hypersurface(t.d, 2 * t.n, row.seed_d);
            HypersurfaceSpec hl = make_hypersurface(t.l, t.m, row.seed_l);
            VarietyReport product = analyze(segre_product_ideal(hd.ideal(), hl.ideal()));
            row.pipeline_run = true;
            row.pipeline_value = product.p_a;
            row.match = (product.p_a == row.closed_form);
            ++report.pipeline_checked;
            if (!*row.match) ++report.mismatches;
        }
        if (!row.pipeline_run) ++report.skipped;
        report.rows.push_back(std::move(row));
        ++counter;
    }
    return report;
}

} // namespace genus
