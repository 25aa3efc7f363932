#include "kindep/loop_multigraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace kindep {

LoopMultigraph::LoopMultigraph(Vertex n) : n_(n)
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void LoopMultigraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

Count LoopMultigraph::multiplicity(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v];
}

Count LoopMultigraph::degree(Vertex v) const
{
    check_vertex(v);
    Count total = 0;
    for (Vertex u = 0; u < n_; ++u)
        total += (u == v ? 2 : 1) * adj_[static_cast<std::size_t>(v) * n_ + u];
    return total;
}

void LoopMultigraph::add_edges(Vertex u, Vertex v, Count multiplicity)
{
    check_vertex(u);
    check_vertex(v);
    if (multiplicity < 0)
        throw InvalidInput("negative edge multiplicity");
    auto & forward = adj_[static_cast<std::size_t>(u) * n_ + v];
    forward = checked_add(forward, multiplicity);
    adj_[static_cast<std::size_t>(v) * n_ + u] = forward;
}

void LoopMultigraph::set_multiplicity(Vertex u, Vertex v, Count multiplicity)
{
    check_vertex(u);
    check_vertex(v);
    if (multiplicity < 0)
        throw InvalidInput("negative edge multiplicity");
    adj_[static_cast<std::size_t>(u) * n_ + v] = multiplicity;
    adj_[static_cast<std::size_t>(v) * n_ + u] = multiplicity;
}

std::vector<Edge> LoopMultigraph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u; v < n_; ++v)
            if (auto m = adj_[static_cast<std::size_t>(u) * n_ + v]; m > 0)
                out.push_back({u, v, m});
    return out;
}

DegreeSequence degree_sequence_of(const LoopMultigraph & g)
{
    std::vector<Degree> degrees;
    for (Vertex v = 0; v < g.order(); ++v)
        degrees.push_back(g.degree(v));
    return DegreeSequence(degrees);
}

namespace {

void require_even_sum(const DegreeSequence & d)
{
    if (d.sum() % 2 != 0)
        throw InvalidInput("degree sum of " + d.str() + " is odd; no loop multigraph realizes it");
}

}

Count alpha_k_min_loops(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    require_even_sum(d);
    Count zeros = d.mu(0);
    Count below = d.sigma(1) - d.sigma(k);
    Count at_k = d.mu(k);
    if (k % 2 == 0)
        return below + zeros;
    return std::max(below, (below + at_k + 1) / 2) + zeros;
}

LoopMultigraph construct_extremal_loop_multigraph(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    require_even_sum(d);
    if (d.mu(0) > 0)
        throw InvalidInput("extremal construction needs every degree to be positive");

    const auto degrees = d.values();
    const auto n = static_cast<Vertex>(degrees.size());
    LoopMultigraph g(n);
    std::vector<Count> non_loop(degrees.size(), 0);
    auto join = [&](Vertex a, Vertex b) {
        g.add_edges(a, b);
        ++non_loop[a];
        ++non_loop[b];
    };
    auto pair_up = [&](const std::vector<Vertex> & vs) {
        for (std::size_t i = 0; i + 1 < vs.size(); i += 2)
            join(vs[i], vs[i + 1]);
    };

    if (k % 2 == 0) {
        std::vector<Vertex> odd;
        for (Vertex i = 0; i < n; ++i)
            if (degrees[i] % 2 != 0)
                odd.push_back(i);
        pair_up(odd);
    }
    else {
        // 0-based: [0, s) below k, [s, s+c) equal to k, the rest above k
        auto s = static_cast<Vertex>(d.sigma(1) - d.sigma(k));
        auto c = static_cast<Vertex>(d.mu(k));
        std::vector<bool> in_first(degrees.size(), false);
        auto match = [&](Vertex a, Vertex b) {
            join(a, b);
            in_first[a] = in_first[b] = true;
        };
        if (c <= s) {
            for (Vertex i = 0; i < c; ++i)
                match(i, s + i);
        }
        else {
            for (Vertex i = 0; i < s; ++i)
                match(i, s + i);
            for (Vertex i = 0; i < (c - s) / 2; ++i)
                match(2 * s + 2 * i, 2 * s + 2 * i + 1);
        }
        // second matching fixes parity so that the rest can be loops
        std::vector<Vertex> second;
        for (Vertex i = 0; i < n; ++i)
            if (in_first[i] == (degrees[i] % 2 == 0))
                second.push_back(i);
        pair_up(second);
    }

    for (Vertex i = 0; i < n; ++i) {
        Count rest = degrees[i] - non_loop[i];
        if (rest < 0 || rest % 2 != 0)
            throw InvalidInput("internal: loop assignment failed for vertex " + std::to_string(i));
        g.add_edges(i, i, rest / 2);
    }
    return g;
}

Count alpha_k_bruteforce(const LoopMultigraph & g, Degree k)
{
    require_positive_k(k);
    const Vertex n = g.order();
    if (n > 20)
        throw ResourceLimit("alpha_k_bruteforce: order " + std::to_string(n) + " exceeds 20");
    std::vector<Count> m(static_cast<std::size_t>(n) * n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            m[static_cast<std::size_t>(u) * n + v] = (u == v ? 2 : 1) * g.multiplicity(u, v);

    int best = 0;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        int size = std::popcount(mask);
        if (size <= best)
            continue;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            if (! (mask >> v & 1))
                continue;
            Count induced = 0;
            for (Vertex u = 0; u < n; ++u)
                if (mask >> u & 1)
                    induced += m[static_cast<std::size_t>(v) * n + u];
            ok = induced < k;
        }
        if (ok)
            best = size;
    }
    return best;
}

namespace {

class LoopEnumerator {
public:
    LoopEnumerator(std::vector<Count> residual, const std::function<bool(const LoopMultigraph &)> & visit) :
        residual_(std::move(residual)),
        n_(static_cast<Vertex>(residual_.size())),
        graph_(n_),
        visit_(visit)
    {
    }

    std::size_t run()
    {
        vertex(0);
        return visited_;
    }

private:
    std::vector<Count> residual_;
    Vertex n_;
    LoopMultigraph graph_;
    const std::function<bool(const LoopMultigraph &)> & visit_;
    std::size_t visited_ = 0;
    bool stopped_ = false;

    void vertex(Vertex i)
    {
        if (stopped_)
            return;
        if (i == n_) {
            ++visited_;
            if (! visit_(graph_))
                stopped_ = true;
            return;
        }
        edge(i, i + 1);
    }

    // Chooses the multiplicity of {i, j}; once j passes the last vertex the
    // remaining degree of i must be even and becomes loops.
    void edge(Vertex i, Vertex j)
    {
        if (stopped_)
            return;
        Count rem = residual_[i];
        if (j == n_) {
            if (rem % 2 != 0)
                return;
            graph_.set_multiplicity(i, i, rem / 2);
            residual_[i] = 0;
            vertex(i + 1);
            residual_[i] = rem;
            graph_.set_multiplicity(i, i, 0);
            return;
        }
        Count hi = std::min(rem, residual_[j]);
        for (Count mult = 0; mult <= hi; ++mult) {
            residual_[i] = rem - mult;
            residual_[j] -= mult;
            graph_.set_multiplicity(i, j, mult);
            edge(i, j + 1);
            graph_.set_multiplicity(i, j, 0);
            residual_[j] += mult;
        }
        residual_[i] = rem;
    }
};

}

std::size_t enumerate_loop_realizations(const DegreeSequence & d,
    const std::function<bool(const LoopMultigraph &)> & visit, const LoopEnumerationLimits & limits)
{
    if (d.order() > limits.max_order || d.sum() > limits.max_sum)
        throw ResourceLimit("enumerate_loop_realizations: order <= " + std::to_string(limits.max_order) +
            " and sum <= " + std::to_string(limits.max_sum) + " required");
    if (d.sum() % 2 != 0)
        return 0;
    LoopEnumerator e(d.values(), visit);
    return e.run();
}

}
