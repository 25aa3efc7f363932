#pragma once

#include "kindep/multigraph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace kindep {

/// Picks one vertex out of the current maximum-degree vertices (original
/// labels, ascending).
using Chooser = std::function<Vertex(std::span<const Vertex> candidates)>;

Chooser lowest_index_chooser();
/// Follows `script` in order; throws InvalidInput if a scripted vertex is not
/// a maximum-degree vertex or the script runs out early.
Chooser scripted_chooser(std::vector<Vertex> script);

struct Deletion {
    Vertex vertex;
    Count degree;
};

struct MaxRun {
    std::vector<Vertex> independent_set;
    std::vector<Deletion> log;
};

/// The MAX algorithm: delete a maximum-degree vertex until Delta < k.
MaxRun max_run(const Multigraph & g, Degree k, const Chooser & chooser);

/// max_run driven by a deletion script that must be consumed exactly.
MaxRun replay(const Multigraph & g, Degree k, std::span<const Vertex> script);

struct WorstCase {
    Count min_size = 0;
    std::vector<Vertex> script;
    std::size_t states = 0;
};

/// Smallest k-independent set over every possible sequence of MAX choices,
/// with one deletion script attaining it. Exhaustive, memoized on a
/// canonical form of the residual graph.
WorstCase max_worst_case(const Multigraph & g, Degree k, Vertex max_order = 14);

struct Witness {
    Multigraph graph;
    std::vector<Vertex> script;
};

/// A multigraph with degree sequence D and a legal MAX deletion script that
/// leaves exactly b_k(D) vertices.
Witness construct_worst_case(const DegreeSequence & d, Degree k);

}
