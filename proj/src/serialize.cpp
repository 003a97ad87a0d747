#include "stringcubes/serialize.hpp"

namespace stringcubes {

Json json_vector(const VectorXr& x)
{
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i)
        arr.push_back(to_fraction_string(x(i)));
    return arr;
}

Json json_vertex_set(const VertexSet& V)
{
    Json arr = Json::array();
    for (const auto& p : V.points)
        arr.push_back(json_vector(p));
    return arr;
}

Json json_halfspaces(const HPolytope& P)
{
    Json arr = Json::array();
    for (const auto& h : P.halfspaces()) {
        Json obj;
        Json normal = Json::array();
        for (Eigen::Index i = 0; i < h.normal.size(); ++i)
            normal.push_back(static_cast<long long>(h.normal(i)));
        obj["normal"] = std::move(normal);
        obj["bound"] = to_fraction_string(h.bound);
        arr.push_back(std::move(obj));
    }
    return arr;
}

Json json_cartier(const CartierTable& table)
{
    Json obj = Json::object();
    for (const auto& [sigma, r] : table.entries)
        obj[sigma] = r;
    return obj;
}

Json json_certificate(const ConditionPCertificate& cert)
{
    Json obj;
    obj["pass"] = cert.holds;
    if (cert.holds) {
        obj["witness"] = nullptr;
    } else {
        Json w;
        w["k"] = cert.violating_index;
        w["sigma"] = cert.sigma;
        w["x"] = cert.witness;
        w["value"] = cert.value;
        w["text"] = cert.witness_text();
        obj["witness"] = std::move(w);
    }
    return obj;
}

Json json_check(const CheckResult& check)
{
    Json obj;
    obj["pass"] = check.pass;
    obj["witness"] = check.witness.empty() ? Json(nullptr) : Json(check.witness);
    return obj;
}

Json json_membership(const StringMembership& memb)
{
    Json obj;
    obj["inside"] = memb.inside;
    obj["violation"] = memb.inside ? Json(nullptr) : Json(memb.describe());
    return obj;
}

Json json_containment(const ContainmentReport& report)
{
    Json obj;
    obj["componentwise_le"] = report.componentwise_le;
    Json arr = Json::array();
    for (const auto& e : report.dilates) {
        Json entry;
        entry["dilate"] = e.dilate;
        entry["points"] = e.small_points;
        entry["missing"] = e.missing;
        arr.push_back(std::move(entry));
    }
    obj["dilates"] = std::move(arr);
    obj["pass"] = report.all_contained();
    return obj;
}

Json json_resolution(const ResolutionReport& report)
{
    Json checks;
    checks["M1"] = json_check(report.m1);
    checks["M2"] = json_check(report.m2);
    checks["M3"] = json_check(report.m3);
    checks["M4"] = json_check(report.m4);
    checks["conditionP"] = json_check(report.condition_p);
    checks["lattice"] = json_check(report.lattice);
    checks["simple"] = json_check(report.simple);
    checks["smooth"] = json_check(report.smooth);
    checks["delta_equals_P"] = json_check(report.delta_equals_p);
    checks["containment"] = json_check(report.containment);

    Json obj;
    obj["m_lambda"] = report.m_lambda;
    obj["m"] = report.m;
    obj["checks"] = std::move(checks);
    Json cont = Json::array();
    for (const auto& e : report.containment_dilates) {
        Json entry;
        entry["dilate"] = e.dilate;
        entry["points"] = e.small_points;
        entry["missing"] = e.missing;
        cont.push_back(std::move(entry));
    }
    obj["containment_dilates"] = std::move(cont);
    obj["all_pass"] = report.all_pass();
    return obj;
}

}  // namespace stringcubes
