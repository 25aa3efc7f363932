#include "kindep/json_io.hpp"

#include <charconv>
#include <fstream>

namespace kindep {

namespace {

std::string_view trim(std::string_view s)
{
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Count integer_field(const json & j, const char * what)
{
    if (! j.is_number_integer())
        throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<Count>();
}

template <typename Graph>
Graph graph_from_json(const json & j, bool loops)
{
    if (! j.is_object() || ! j.contains("n") || ! j.contains("edges"))
        throw InvalidInput("graph JSON needs \"n\" and \"edges\"");
    Count n = integer_field(j.at("n"), "n");
    if (n < 0 || n > 100000)
        throw InvalidInput("graph order out of range");
    if (! j.at("edges").is_array())
        throw InvalidInput("\"edges\" must be an array");
    Graph g(static_cast<Vertex>(n));
    for (const auto & e : j.at("edges")) {
        if (! e.is_array() || e.size() != 3)
            throw InvalidInput("each edge must be [u, v, multiplicity]");
        Count u = integer_field(e[0], "edge endpoint"), v = integer_field(e[1], "edge endpoint");
        Count m = integer_field(e[2], "edge multiplicity");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range");
        if (loops ? u > v : u >= v)
            throw InvalidInput(loops ? "edges must have u <= v" : "edges must have u < v (no loops)");
        if (m < 1)
            throw InvalidInput("edge multiplicity must be at least 1");
        g.add_edges(static_cast<Vertex>(u), static_cast<Vertex>(v), m);
    }
    return g;
}

template <typename Graph>
json graph_to_json(const Graph & g)
{
    json edges = json::array();
    for (auto e : g.edges())
        edges.push_back({e.u, e.v, e.multiplicity});
    return {{"n", g.order()}, {"edges", edges}};
}

}

DegreeSequence parse_degree_sequence(std::string_view text)
{
    text = trim(text);
    if (! text.empty() && text.front() == '[') {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw InvalidInput(std::string("malformed JSON degree list: ") + e.what());
        }
        return degree_sequence_from_json(j);
    }
    std::vector<Degree> values;
    while (! text.empty()) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        Degree value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw InvalidInput("'" + std::string(item) + "' is not an integer degree");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
        if (trim(text).empty())
            throw InvalidInput("trailing comma in degree list");
    }
    return DegreeSequence(values);
}

DegreeSequence degree_sequence_from_json(const json & j)
{
    if (! j.is_array())
        throw InvalidInput("degree sequence JSON must be an array of integers");
    std::vector<Degree> values;
    for (const auto & x : j)
        values.push_back(integer_field(x, "degree"));
    return DegreeSequence(values);
}

json to_json(const DegreeSequence & d)
{
    return d.values();
}

json to_json(const DecrementTrace & t)
{
    return {
        {"k", t.k},
        {"input", to_json(t.input)},
        {"max", t.max_degree},
        {"a0", to_json(t.a0)},
        {"s", t.a0_sum},
        {"a", t.decrements},
        {"omega", to_json(t.omega)},
        {"degenerate", t.degenerate},
    };
}

json to_json(const BoundTrace & t)
{
    json chain = json::array();
    for (const auto & d : t.chain)
        chain.push_back(to_json(d));
    return {{"k", t.k}, {"b", t.b}, {"p", t.p}, {"chain", chain}};
}

json to_json(const Multigraph & g)
{
    return graph_to_json(g);
}

json to_json(const LoopMultigraph & g)
{
    return graph_to_json(g);
}

json to_json(const MaxRun & run)
{
    json log = json::array();
    for (auto d : run.log)
        log.push_back({{"vertex", d.vertex}, {"degree", d.degree}});
    return {{"independent_set", run.independent_set}, {"size", run.independent_set.size()}, {"log", log}};
}

json to_json(const CoveringBoundReport & r)
{
    json out = {
        {"v", r.params.v},
        {"kappa", r.params.kappa},
        {"lambda", r.params.lambda},
        {"z", r.z},
        {"r", r.r},
        {"d", r.d},
        {"s", r.s},
        {"ell", r.ell},
        {"D", to_json(r.excess)},
        {"k", r.k},
        {"contradiction", r.contradiction},
    };
    out["b"] = r.b ? json(*r.b) : json(nullptr);
    return out;
}

json to_json(const ScanRow & r)
{
    return {{"kappa", r.kappa}, {"v", r.v}, {"d", r.d}, {"r", r.r}, {"ell", r.ell}, {"previous", r.previous},
        {"source", r.source}, {"new", r.improved}};
}

json script_to_json(std::span<const Vertex> script)
{
    return {{"deletions", std::vector<Vertex>(script.begin(), script.end())}};
}

Multigraph multigraph_from_json(const json & j)
{
    return graph_from_json<Multigraph>(j, false);
}

LoopMultigraph loop_multigraph_from_json(const json & j)
{
    return graph_from_json<LoopMultigraph>(j, true);
}

std::vector<Vertex> script_from_json(const json & j)
{
    if (! j.is_object() || ! j.contains("deletions") || ! j.at("deletions").is_array())
        throw InvalidInput("script JSON needs a \"deletions\" array");
    std::vector<Vertex> out;
    for (const auto & x : j.at("deletions"))
        out.push_back(static_cast<Vertex>(integer_field(x, "deletion")));
    return out;
}

json read_json_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    }
    catch (const json::parse_error & e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

}
