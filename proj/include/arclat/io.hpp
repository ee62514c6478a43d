#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "arclat/catalog.hpp"
#include "arclat/forcing.hpp"
#include "arclat/lattice.hpp"

namespace arclat {

using Json = nlohmann::json;

// Parses text as JSON; throws ParseError on malformed input.
Json parse_json(const std::string& text);

Json to_json(const Permutation& p);
Json to_json(const SignedPermutation& p);
// Array of positive integers forming a permutation of 1..n.
Permutation permutation_from_json(const Json& j);
// Array of nonzero integers whose absolute values are 1..n.
SignedPermutation signed_permutation_from_json(const Json& j);

Json to_json(const ArcA& a);
ArcA arc_a_from_json(const Json& j, const std::vector<int>& ground);
// "ground" is written only when it is not 1..n.
Json to_json(const DiagramA& D);
DiagramA diagram_a_from_json(const Json& j);

Json to_json(const TypeBArc& a);
TypeBArc arc_b_from_json(const Json& j, int n);
Json to_json(const DiagramB& D);
DiagramB diagram_b_from_json(const Json& j);

Json to_json(const ArcCongruence& theta);
// Rejects contracted sets that are not closed under taking superarcs.
ArcCongruence congruence_from_json(const Json& j);

Json to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const Json& j);

Json to_json(const Designation& d);
// Keys "1".."n-1"; n is taken from the keys unless given.
Designation designation_from_json(const Json& j, std::optional<int> n = std::nullopt);
// Also accepts the compact string form, e.g. "RLR".
Designation designation_from_string(const std::string& s);

Json to_json(const NCPartitionB& P);
NCPartitionB ncp_from_json(const Json& j);

Json to_json(const ArrowEdge& e);

// Congruence named on the command line: identity, full, parabolic:s0,s2, cambrian:RL,
// hom:simion (or a bare variant name), bicambrian:bipartite, bicambrian:linear. Text starting
// with '{' is read as JSON, either {"n","contracted"} or {"n","generators"}. Throws Error for
// unknown names.
ArcCongruence congruence_by_name(const std::string& spec, int n);

}  // namespace arclat
