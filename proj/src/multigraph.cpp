#include "kindep/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace kindep {

Multigraph::Multigraph(Vertex n) : n_(n)
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Multigraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

Count Multigraph::multiplicity(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v];
}

Count Multigraph::degree(Vertex v) const
{
    check_vertex(v);
    auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v) * n_;
    return std::accumulate(row, row + n_, Count{0});
}

Count Multigraph::max_degree() const
{
    Count best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

void Multigraph::add_edges(Vertex u, Vertex v, Count multiplicity)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InvalidInput("loops are not allowed (vertex " + std::to_string(u) + ")");
    if (multiplicity < 0)
        throw InvalidInput("negative edge multiplicity");
    at(u, v) = checked_add(at(u, v), multiplicity);
    at(v, u) = at(u, v);
}

void Multigraph::remove_edges(Vertex u, Vertex v, Count multiplicity)
{
    check_vertex(u);
    check_vertex(v);
    if (at(u, v) < multiplicity)
        throw InvalidInput("removing more parallel edges than present");
    at(u, v) -= multiplicity;
    at(v, u) = at(u, v);
}

Vertex Multigraph::add_vertex()
{
    Multigraph bigger(n_ + 1);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            bigger.at(u, v) = at(u, v);
    *this = std::move(bigger);
    return n_ - 1;
}

std::vector<Edge> Multigraph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (auto m = adj_[static_cast<std::size_t>(u) * n_ + v]; m > 0)
                out.push_back({u, v, m});
    return out;
}

DegreeSequence degree_sequence_of(const Multigraph & g)
{
    std::vector<Degree> degrees;
    for (Vertex v = 0; v < g.order(); ++v)
        degrees.push_back(g.degree(v));
    return DegreeSequence(degrees);
}

Multigraph realize(const DegreeSequence & d)
{
    if (! is_graphical(d))
        throw InvalidInput("degree sequence " + d.str() + " is not graphical");
    auto residual = d.values();
    Multigraph g(static_cast<Vertex>(residual.size()));
    std::vector<Vertex> order(residual.size());
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        // two largest residual degrees, lowest index first among ties
        std::partial_sort(order.begin(), order.begin() + std::min<std::size_t>(2, order.size()), order.end(),
            [&](Vertex a, Vertex b) { return residual[a] != residual[b] ? residual[a] > residual[b] : a < b; });
        if (order.size() < 2 || residual[order[0]] == 0)
            break;
        g.add_edges(order[0], order[1]);
        --residual[order[0]];
        --residual[order[1]];
    }
    return g;
}

Multigraph delete_vertex(const Multigraph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
    Multigraph out(g.order() - 1);
    auto relabel = [v](Vertex u) { return u < v ? u : u - 1; };
    for (auto e : g.edges())
        if (e.u != v && e.v != v)
            out.add_edges(relabel(e.u), relabel(e.v), e.multiplicity);
    return out;
}

Multigraph rewire(const Multigraph & g, std::mt19937_64 & rng, int swaps)
{
    Multigraph out = g;
    for (int i = 0; i < swaps; ++i) {
        // expand edges by multiplicity so parallel edges are sampled fairly
        std::vector<std::pair<Vertex, Vertex>> flat;
        for (auto e : out.edges())
            for (Count c = 0; c < e.multiplicity; ++c)
                flat.emplace_back(e.u, e.v);
        if (flat.size() < 2)
            return out;
        std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
        auto a = flat[pick(rng)], b = flat[pick(rng)];
        if (a == b && out.multiplicity(a.first, a.second) < 2)
            continue;
        // orient both edges at random
        if (rng() & 1)
            std::swap(a.first, a.second);
        if (rng() & 1)
            std::swap(b.first, b.second);
        auto [u, v] = a;
        auto [x, y] = b;
        if (u == x || v == y)
            continue;
        out.remove_edges(u, v);
        out.remove_edges(x, y);
        out.add_edges(u, x);
        out.add_edges(v, y);
    }
    return out;
}

}
