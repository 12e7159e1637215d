#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ospchar/branching.hpp"
#include "ospchar/invariants.hpp"
#include "ospchar/oracle.hpp"

namespace ospchar {

// Insertion-ordered documents so identical requests render byte-identically.
using Json = nlohmann::ordered_json;

// All rationals are rendered as reduced "p/q" strings with positive q.
Json signature_json(const Signature& sig);
Json weight_json(const Weight& w);
Json roots_json(const CharRoots& r);
Json degeneracy_json(const std::vector<std::pair<Gi, Gi>>& pairs);

// One branching constituent with its odd index partition.
Json branch_child_json(const BranchContext& ctx);

Json invariant_table_json(const InvariantTable& t);
Json rat_matrix_json(const RatMat& m);
Json ext_matrix_json(const ExtMat& m);
Json check_report_json(const CheckReport& r);
Json suite_json(const std::vector<SuiteCheck>& checks);

// Two-space indent plus trailing newline.
std::string dump_json(const Json& j);

} // namespace ospchar
