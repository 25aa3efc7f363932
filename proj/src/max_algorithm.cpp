#include "kindep/max_algorithm.hpp"
#include "kindep/omega.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <memory>
#include <unordered_map>

namespace kindep {

Chooser lowest_index_chooser()
{
    return [](std::span<const Vertex> candidates) { return candidates.front(); };
}

Chooser scripted_chooser(std::vector<Vertex> script)
{
    auto position = std::make_shared<std::size_t>(0);
    return [script = std::move(script), position](std::span<const Vertex> candidates) {
        if (*position >= script.size())
            throw InvalidInput("deletion script ended while the maximum degree is still >= k");
        Vertex v = script[(*position)++];
        if (std::find(candidates.begin(), candidates.end(), v) == candidates.end())
            throw InvalidInput("scripted vertex " + std::to_string(v) + " is not a maximum-degree vertex at step " +
                std::to_string(*position - 1));
        return v;
    };
}

MaxRun max_run(const Multigraph & g, Degree k, const Chooser & chooser)
{
    require_positive_k(k);
    const Vertex n = g.order();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<Count> degree(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        degree[v] = g.degree(v);

    MaxRun run;
    std::vector<Vertex> candidates;
    while (true) {
        Count top = -1;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v])
                top = std::max(top, degree[v]);
        if (top < k)
            break;
        candidates.clear();
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && degree[v] == top)
                candidates.push_back(v);
        Vertex chosen = chooser(candidates);
        if (std::find(candidates.begin(), candidates.end(), chosen) == candidates.end())
            throw InvalidInput("chooser returned vertex " + std::to_string(chosen) + " which is not of maximum degree");
        run.log.push_back({chosen, top});
        alive[chosen] = false;
        for (Vertex u = 0; u < n; ++u)
            if (alive[u])
                degree[u] -= g.multiplicity(chosen, u);
    }
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            run.independent_set.push_back(v);
    return run;
}

MaxRun replay(const Multigraph & g, Degree k, std::span<const Vertex> script)
{
    auto run = max_run(g, k, scripted_chooser({script.begin(), script.end()}));
    if (run.log.size() != script.size())
        throw InvalidInput("deletion script has " + std::to_string(script.size()) + " entries but MAX stopped after " +
            std::to_string(run.log.size()));
    return run;
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<Count> & key) const
    {
        std::size_t h = key.size();
        for (auto x : key)
            h ^= std::hash<Count>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class WorstCaseSearch {
public:
    WorstCaseSearch(const Multigraph & g, Degree k) : g_(g), k_(k), n_(g.order()) {}

    Count solve(std::uint32_t mask)
    {
        auto degrees = residual_degrees(mask);
        Count top = -1;
        for (Vertex v = 0; v < n_; ++v)
            if (mask >> v & 1)
                top = std::max(top, degrees[v]);
        if (top < k_)
            return std::popcount(mask);

        auto key = canonical_key(mask, degrees);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        Count best = std::popcount(mask);
        for (Vertex v = 0; v < n_; ++v)
            if ((mask >> v & 1) && degrees[v] == top)
                best = std::min(best, solve(mask & ~(std::uint32_t{1} << v)));
        memo_.emplace(std::move(key), best);
        return best;
    }

    std::vector<Vertex> witness(std::uint32_t mask)
    {
        std::vector<Vertex> script;
        Count target = solve(mask);
        while (true) {
            auto degrees = residual_degrees(mask);
            Count top = -1;
            for (Vertex v = 0; v < n_; ++v)
                if (mask >> v & 1)
                    top = std::max(top, degrees[v]);
            if (top < k_)
                return script;
            for (Vertex v = 0; v < n_; ++v) {
                auto next = mask & ~(std::uint32_t{1} << v);
                if ((mask >> v & 1) && degrees[v] == top && solve(next) == target) {
                    script.push_back(v);
                    mask = next;
                    break;
                }
            }
        }
    }

    std::size_t states() const { return memo_.size(); }

private:
    const Multigraph & g_;
    Degree k_;
    Vertex n_;
    std::unordered_map<std::vector<Count>, Count, KeyHash> memo_;

    std::vector<Count> residual_degrees(std::uint32_t mask) const
    {
        std::vector<Count> degrees(static_cast<std::size_t>(n_), 0);
        for (Vertex u = 0; u < n_; ++u)
            if (mask >> u & 1)
                for (Vertex v = 0; v < n_; ++v)
                    if (mask >> v & 1)
                        degrees[u] += g_.multiplicity(u, v);
        return degrees;
    }

    // Vertex order from two rounds of colour refinement seeded by degree;
    // ties fall back to the original index. The key stores the whole
    // reordered multiplicity matrix, so equal keys mean isomorphic residual
    // graphs even when the ordering is not a true canonical labelling.
    std::vector<Count> canonical_key(std::uint32_t mask, const std::vector<Count> & degrees) const
    {
        std::vector<Vertex> active;
        for (Vertex v = 0; v < n_; ++v)
            if (mask >> v & 1)
                active.push_back(v);

        std::vector<Count> colour(static_cast<std::size_t>(n_), 0);
        for (auto v : active)
            colour[v] = degrees[v];

        for (int round = 0; round < 2; ++round) {
            std::vector<std::vector<Count>> signature(static_cast<std::size_t>(n_));
            for (auto v : active) {
                std::vector<std::pair<Count, Count>> nbrs;
                for (auto u : active)
                    if (u != v && g_.multiplicity(u, v) > 0)
                        nbrs.emplace_back(colour[u], g_.multiplicity(u, v));
                std::sort(nbrs.begin(), nbrs.end());
                auto & sig = signature[v];
                sig.push_back(colour[v]);
                for (auto [c, m] : nbrs) {
                    sig.push_back(c);
                    sig.push_back(m);
                }
            }
            std::vector<std::vector<Count>> distinct;
            for (auto v : active)
                distinct.push_back(signature[v]);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (auto v : active)
                colour[v] = std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin();
        }

        std::stable_sort(active.begin(), active.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });

        std::vector<Count> key{static_cast<Count>(active.size())};
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = i + 1; j < active.size(); ++j)
                key.push_back(g_.multiplicity(active[i], active[j]));
        return key;
    }
};

}

WorstCase max_worst_case(const Multigraph & g, Degree k, Vertex max_order)
{
    require_positive_k(k);
    if (g.order() > max_order || g.order() > 31)
        throw ResourceLimit("max_worst_case: order " + std::to_string(g.order()) + " exceeds the limit of " +
            std::to_string(std::min<Vertex>(max_order, 31)));
    WorstCaseSearch search(g, k);
    std::uint32_t all = g.order() == 0 ? 0 : (std::uint32_t{1} << g.order()) - 1;
    WorstCase out;
    out.min_size = search.solve(all);
    out.script = search.witness(all);
    out.states = search.states();
    return out;
}

Witness construct_worst_case(const DegreeSequence & d, Degree k)
{
    auto trace = bound(d, k);
    if (trace.p == 0)
        return {realize(d), {}};

    const auto last = static_cast<std::size_t>(trace.p - 1);
    assert(trace.steps[last].degenerate);

    // Innermost level: every reduction is trivial, so deleting any
    // maximum-degree vertex of any realization finishes MAX.
    Witness w{realize(trace.chain[last]), {}};
    Vertex final_deletion = 0;
    for (Vertex v = 0; v < w.graph.order(); ++v)
        if (w.graph.degree(v) == w.graph.max_degree()) {
            final_deletion = v;
            break;
        }

    std::vector<Vertex> outer;
    for (std::size_t level = last; level-- > 0;) {
        const auto & step = trace.steps[level];
        assert(! step.degenerate);
        std::vector<Count> degree;
        for (Vertex v = 0; v < w.graph.order(); ++v)
            degree.push_back(w.graph.degree(v));
        Vertex u = w.graph.add_vertex();
        // walk the first max(D) decrements backwards, re-attaching each unit
        for (auto j = static_cast<std::size_t>(step.max_degree); j-- > 0;) {
            Count target = step.decrements[j] - 1;
            auto it = std::find(degree.begin(), degree.end(), target);
            assert(it != degree.end());
            auto partner = static_cast<Vertex>(it - degree.begin());
            w.graph.add_edges(u, partner);
            ++*it;
        }
        outer.push_back(u);
    }
    std::reverse(outer.begin(), outer.end());
    w.script = std::move(outer);
    w.script.push_back(final_deletion);
    return w;
}

}
