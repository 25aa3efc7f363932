#pragma once

#include "kindep/degree_sequence.hpp"
#include "kindep/multigraph.hpp"

#include <functional>
#include <vector>

namespace kindep {

/// Multigraph with loops allowed; a loop adds 2 to the degree of its vertex.
class LoopMultigraph {
public:
    explicit LoopMultigraph(Vertex n = 0);

    Vertex order() const { return n_; }
    /// For u == v this is the number of loops at u.
    Count multiplicity(Vertex u, Vertex v) const;
    Count degree(Vertex v) const;

    void add_edges(Vertex u, Vertex v, Count multiplicity = 1);
    void set_multiplicity(Vertex u, Vertex v, Count multiplicity);

    /// Edges with u <= v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const LoopMultigraph &, const LoopMultigraph &) = default;

private:
    Vertex n_;
    std::vector<Count> adj_;

    void check_vertex(Vertex v) const;
};

DegreeSequence degree_sequence_of(const LoopMultigraph & g);

/// Minimum of alpha_k over all loop multigraphs with degree sequence D.
/// With s = #{0 < x < k}, c = #{x = k} and z zeros: s + z for even k,
/// max(s, ceil((s+c)/2)) + z for odd k.
Count alpha_k_min_loops(const DegreeSequence & d, Degree k);

/// A loop multigraph attaining alpha_k_min_loops. Vertices are numbered in
/// nondecreasing degree order. D must be positive with an even sum.
LoopMultigraph construct_extremal_loop_multigraph(const DegreeSequence & d, Degree k);

/// Exact k-independence number by subset enumeration.
Count alpha_k_bruteforce(const LoopMultigraph & g, Degree k);

struct LoopEnumerationLimits {
    Count max_order = 6;
    Count max_sum = 30;
};

/// Calls `visit` once for every labeled loop multigraph in which vertex i has
/// the i-th smallest element of D as its degree. Stops early if `visit`
/// returns false. Returns the number of graphs visited.
std::size_t enumerate_loop_realizations(const DegreeSequence & d,
    const std::function<bool(const LoopMultigraph &)> & visit, const LoopEnumerationLimits & limits = {});

}
