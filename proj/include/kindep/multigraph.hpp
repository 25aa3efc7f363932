#pragma once

#include "kindep/degree_sequence.hpp"

#include <random>
#include <vector>

namespace kindep {

using Vertex = std::int32_t;

struct Edge {
    Vertex u;
    Vertex v;
    Count multiplicity;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Loopless multigraph on vertices 0..n-1, stored as a symmetric
/// multiplicity matrix.
class Multigraph {
public:
    explicit Multigraph(Vertex n = 0);

    Vertex order() const { return n_; }
    Count multiplicity(Vertex u, Vertex v) const;
    Count degree(Vertex v) const;
    Count max_degree() const;

    void add_edges(Vertex u, Vertex v, Count multiplicity = 1);
    void remove_edges(Vertex u, Vertex v, Count multiplicity = 1);
    Vertex add_vertex();

    /// Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Multigraph &, const Multigraph &) = default;

private:
    Vertex n_;
    std::vector<Count> adj_;

    void check_vertex(Vertex v) const;
    Count & at(Vertex u, Vertex v) { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
};

DegreeSequence degree_sequence_of(const Multigraph & g);

/// Deterministic realization: vertex i gets the i-th smallest element of D,
/// then the two vertices of largest residual degree are joined until all
/// residual degrees are zero (ties broken by lowest index).
Multigraph realize(const DegreeSequence & d);

/// G - v; vertices above v are renumbered down by one.
Multigraph delete_vertex(const Multigraph & g, Vertex v);

/// Degree-preserving perturbation: `swaps` attempts of replacing edges
/// {u,v},{x,y} by {u,x},{v,y}, rejecting any attempt that would make a loop.
Multigraph rewire(const Multigraph & g, std::mt19937_64 & rng, int swaps);

}
