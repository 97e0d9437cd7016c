#pragma once

#include <json.hpp>

#include <string>

#include "genus/constructions.hpp"
#include "genus/families.hpp"
#include "genus/invariants.hpp"
#include "genus/parse.hpp"

namespace genus {

using Json = nlohmann::ordered_json;

// All arbitrary-precision integers serialize as decimal strings, rationals
// as "p" or "p/q", so no consumer can lose precision.
inline Json to_json(const BigInt& v) { return v.str(); }
inline Json to_json(const BigRational& v) { return v.str(); }

inline std::string hilbert_polynomial_text(const HilbertPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (c[k].is_zero()) continue;
        BigRational mag = c[k].sign() < 0 ? -c[k] : c[k];
        if (out.empty()) {
            if (c[k].sign() < 0) out += "-";
        } else {
            out += c[k].sign() < 0 ? " - " : " + ";
        }
        std::string body = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (body.empty())
            out += mag.str();
        else if (mag == BigRational(1))
            out += body;
        else
            out += mag.str() + "*" + body;
    }
    return out;
}

inline Json to_json(const HilbertPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
    return Json{{"coefficients", coeffs}, {"text", hilbert_polynomial_text(p)}};
}

inline Json to_json(const VarietyReport& r) {
    return Json{{"ambient", r.ambient_index},
                {"dimension", r.dimension},
                {"degree", to_json(r.degree)},
                {"hilbert_polynomial", to_json(r.hilbert)},
                {"stability_threshold", r.stability_threshold},
                {"p_a", to_json(r.p_a)},
                {"chi", to_json(r.chi)}};
}

inline Json to_json(const Ideal& I, const std::vector<std::string>* names = nullptr) {
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(print_polynomial(g, names));
    return Json{{"ambient", I.ambient_vars() - 1}, {"generators", gens}};
}

inline Json to_json(const ProjectionResult& r) {
    Json j{{"is_principal", r.is_principal},
           {"image_degree", r.image_degree},
           {"attempts", r.attempts},
           {"seed", std::to_string(r.seed)},
           {"birational_certified", r.birational_certified},
           {"image_ideal", to_json(r.image_ideal)}};
    Json log = Json::array();
    for (const auto& line : r.attempt_log) log.push_back(line);
    j["attempt_log"] = log;
    return j;
}

inline Json to_json(const CounterexampleRecord& r) {
    Json j{{"n", r.n},
           {"l", r.l},
           {"dim_y", r.dim_y},
           {"pa_y", to_json(r.pa_y)},
           {"chi_y", to_json(r.chi_y)},
           {"pa_model_lower_bound", to_json(r.pa_he_lower_bound)},
           {"gap_witness", r.gap_witness}};
    if (r.model) {
        j["model"] = to_json(*r.model);
        j["pa_model"] = r.pa_he ? to_json(*r.pa_he) : Json(nullptr);
        j["chi_model"] = r.chi_he ? to_json(*r.chi_he) : Json(nullptr);
    } else {
        j["model"] = nullptr;
    }
    return j;
}

inline Json to_json(const GapRecord& r) {
    return Json{{"extra_degree", r.extra_degree},
                {"total_degree", r.total_degree},
                {"ambient", r.ambient_index},
                {"pa_composite", to_json(r.pa_composite)},
                {"base_pa", to_json(r.base_pa)},
                {"base_dim", r.base_dim},
                {"wrapped", r.wrapped},
                {"gap", to_json(r.gap)}};
}

inline Json to_json(const ProdVerificationRow& r) {
    Json j{{"d", r.tuple.d},
           {"n", r.tuple.n},
           {"l", r.tuple.l},
           {"m", r.tuple.m},
           {"closed_form", to_json(r.closed_form)}};
    if (r.pipeline_run) {
        j["pipeline"] = Json{{"run", true},
                             {"value", to_json(*r.pipeline_value)},
                             {"match", *r.match},
                             {"seed_d", std::to_string(r.seed_d)},
                             {"seed_l", std::to_string(r.seed_l)}};
    } else {
        j["pipeline"] = Json{{"run", false}, {"reason", r.skip_reason}};
    }
    return j;
}

inline Json to_json(const ProdVerification& v) {
    Json rows = Json::array();
    for (const auto& r : v.rows) rows.push_back(to_json(r));
    return Json{{"rows", rows},
                {"pipeline_checked", v.pipeline_checked},
                {"skipped", v.skipped},
                {"mismatches", v.mismatches}};
}

/// The single structured document a CLI invocation emits on stdout. The
/// command echo carries every parameter including seeds, so identical
/// invocations are byte-identical apart from the trailing timing field.
inline Json make_report_document(const std::string& command, Json parameters, Json result,
                                 double seconds) {
    return Json{{"schema_version", 1},
                {"command", Json{{"name", command}, {"parameters", std::move(parameters)}}},
                {"result", std::move(result)},
                {"timing_seconds", seconds}};
}

} // namespace genus
