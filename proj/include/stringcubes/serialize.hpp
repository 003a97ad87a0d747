/**
 * JSON builders for the report surfaces. Rationals are serialized as exact
 * "p/q" strings, field order is fixed, so identical inputs give
 * byte-identical documents.
 */

#pragma once

#include <json.hpp>

#include "stringcubes/resolve.hpp"

namespace stringcubes {

using Json = nlohmann::ordered_json;

Json json_vector(const VectorXr& x);
Json json_vertex_set(const VertexSet& V);
Json json_halfspaces(const HPolytope& P);
Json json_cartier(const CartierTable& table);
Json json_certificate(const ConditionPCertificate& cert);
Json json_check(const CheckResult& check);
Json json_membership(const StringMembership& memb);
Json json_containment(const ContainmentReport& report);
Json json_resolution(const ResolutionReport& report);

}  // namespace stringcubes
