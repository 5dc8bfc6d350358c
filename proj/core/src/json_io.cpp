#include "goldman/json_io.hpp"

#include <json.hpp>

namespace goldman {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered sum_to_json(const FormalSum& sum) {
    ordered arr = ordered::array();
    for (const auto& [word, coeff] : sum.terms()) {
        ordered term;
        term["coeff"] = rational_to_string(coeff);
        term["word"] = word.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered point_to_json(const TransversePoint& p) {
    ordered o;
    o["g"] = p.coset_rep.letters();
    o["sign"] = p.sign;
    o["angle"] = p.angle;
    o["product"] = p.product.str();
    o["lift"] = {p.lift.real(), p.lift.imag()};
    o["len_x"] = p.len_x;
    o["len_y"] = p.len_y;
    return o;
}

}  // namespace

std::string to_json(const FormalSum& sum) { return sum_to_json(sum).dump(); }

std::string to_json(const BracketResult& result) {
    ordered o;
    o["terms"] = sum_to_json(result.sum);
    ordered pts = ordered::array();
    for (const TransversePoint& p : result.points) pts.push_back(point_to_json(p));
    o["points"] = std::move(pts);
    o["radius"] = result.radius_used;
    o["converged"] = result.converged;
    return o.dump();
}

std::string to_json(const SeparabilityVerdict& verdict) {
    ordered o;
    o["separable"] = verdict.separable;
    o["intersection_count"] = verdict.intersection_count;
    o["method"] = to_string(verdict.method);
    ordered pts = ordered::array();
    for (const TransversePoint& p : verdict.witness_points) pts.push_back(point_to_json(p));
    o["witness_points"] = std::move(pts);
    return o.dump();
}

std::string to_json(const WscVerdict& verdict) {
    ordered o;
    o["bracket_zero"] = verdict.bracket_zero;
    o["i_zero"] = verdict.i_zero;
    o["y_eq_xm"] = verdict.y_eq_xm;
    o["consistent"] = verdict.consistent;
    return o.dump();
}

std::string to_json(const SscConditions& conditions) {
    ordered o;
    o["cond1"] = conditions.cond1;
    o["cond2"] = conditions.cond2;
    o["cond3"] = conditions.cond3;
    o["cond4"] = conditions.cond4;
    o["all_agree"] = conditions.all_agree();
    return o.dump();
}

std::string to_json(const CenterVerdict& verdict) {
    ordered o;
    o["central_candidate"] = verdict.central_candidate;
    if (verdict.witness) {
        ordered w;
        w["m"] = verdict.witness->m;
        w["bracket"] = sum_to_json(verdict.witness->bracket);
        w["against"] = verdict.witness->against.str();
        o["witness"] = std::move(w);
    } else {
        o["witness"] = nullptr;
    }
    return o.dump();
}

std::string to_json(const DirectedGeodesic& geodesic) {
    auto endpoint = [](const BoundaryPoint& b) -> ordered {
        if (b.is_infinite()) return "inf";
        return b.value();
    };
    ordered o;
    o["source"] = endpoint(geodesic.source);
    o["target"] = endpoint(geodesic.target);
    return o.dump();
}

}  // namespace goldman
