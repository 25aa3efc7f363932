#pragma once

#include "kindep/covering.hpp"
#include "kindep/loop_multigraph.hpp"
#include "kindep/max_algorithm.hpp"
#include "kindep/multigraph.hpp"
#include "kindep/omega.hpp"

#include "json.hpp"

#include <string_view>

namespace kindep {

using nlohmann::json;

/// Accepts the comma form "1,2,2,4" or a JSON array "[1,2,2,4]". The empty
/// string and "[]" give the empty multiset.
DegreeSequence parse_degree_sequence(std::string_view text);
DegreeSequence degree_sequence_from_json(const json & j);

json to_json(const DegreeSequence & d);
json to_json(const DecrementTrace & t);
json to_json(const BoundTrace & t);
json to_json(const Multigraph & g);
json to_json(const LoopMultigraph & g);
json to_json(const MaxRun & run);
json to_json(const CoveringBoundReport & r);
json to_json(const ScanRow & r);
json script_to_json(std::span<const Vertex> script);

/// {"n": int, "edges": [[u, v, mult], ...]} with u < v.
Multigraph multigraph_from_json(const json & j);
/// Same shape as a multigraph, but u == v (a loop) is allowed.
LoopMultigraph loop_multigraph_from_json(const json & j);
/// {"deletions": [int, ...]}
std::vector<Vertex> script_from_json(const json & j);

json read_json_file(const std::string & path);

}
