// Command-line front end for the k-independence MAX bound toolkit.
//
// Exit codes: 0 success, 2 input error, 3 resource guard exceeded.

#include "kindep/covering.hpp"
#include "kindep/json_io.hpp"
#include "kindep/loop_multigraph.hpp"
#include "kindep/max_algorithm.hpp"
#include "kindep/omega.hpp"
#include "kindep/order_lab.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <random>

using namespace kindep;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Common {
    Degree k = 0;
    std::string degrees;
    std::string format = "text";
};

void add_k(CLI::App * cmd, Common & c)
{
    cmd->add_option("--k", c.k, "positive integer k")->required()->check(CLI::PositiveNumber);
}

void add_degrees(CLI::App * cmd, std::string & target, const std::string & name = "--degrees")
{
    cmd->add_option(name, target, "degree sequence, \"1,2,2\" or \"[1,2,2]\"")->required();
}

void add_format(CLI::App * cmd, Common & c)
{
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void emit(const json & j)
{
    std::cout << j.dump(2) << '\n';
}

void write_file(const std::string & path, const json & j)
{
    std::ofstream out(path);
    if (! out)
        throw InvalidInput("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::string chain_text(const BoundTrace & t)
{
    std::ostringstream os;
    os << "b = " << t.b << "  (n = " << t.chain.front().order() << ", p = " << t.p << ", k = " << t.k << ")\n";
    for (std::size_t i = 0; i < t.chain.size(); ++i)
        os << "  Omega^" << i << " = {" << t.chain[i].str() << "}" << (i + 1 == t.chain.size() ? "  trivial" : "")
           << '\n';
    return os.str();
}

// verify accepts either a bare graph or the object printed by `construct`
Multigraph graph_argument(const std::string & path)
{
    auto j = read_json_file(path);
    if (j.is_object() && j.contains("graph"))
        return multigraph_from_json(j.at("graph"));
    return multigraph_from_json(j);
}

std::vector<Vertex> script_argument(const std::string & path)
{
    auto j = read_json_file(path);
    if (j.is_object() && j.contains("script"))
        return script_from_json(j.at("script"));
    return script_from_json(j);
}

std::string list_text(const std::vector<Vertex> & vs)
{
    std::string out;
    for (auto v : vs)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Worst-case analysis of the MAX algorithm for k-independent sets in multigraphs"};
    app.require_subcommand(1);

    Common c;

    auto * bound_cmd = app.add_subcommand("bound", "b_k(D) and the Omega chain");
    add_k(bound_cmd, c);
    add_degrees(bound_cmd, c.degrees);
    add_format(bound_cmd, c);

    auto * omega_cmd = app.add_subcommand("omega", "Omega(D), with Ferrers diagrams in text mode");
    add_k(omega_cmd, c);
    add_degrees(omega_cmd, c.degrees);
    add_format(omega_cmd, c);

    auto * trace_cmd = app.add_subcommand("trace", "full decrement sequence of a nontrivial D");
    add_k(trace_cmd, c);
    add_degrees(trace_cmd, c.degrees);
    add_format(trace_cmd, c);

    std::string graph_out, script_out;
    auto * construct_cmd = app.add_subcommand("construct", "worst-case witness multigraph and MAX deletion script");
    add_k(construct_cmd, c);
    add_degrees(construct_cmd, c.degrees);
    add_format(construct_cmd, c);
    construct_cmd->add_option("--graph-out", graph_out, "also write the graph JSON here");
    construct_cmd->add_option("--script-out", script_out, "also write the script JSON here");

    std::string graph_path, script_path;
    bool exhaustive = false;
    int perturb = 0;
    std::uint64_t seed = 0;
    int max_order = 14;
    auto * verify_cmd = app.add_subcommand("verify", "run MAX on a graph file");
    add_k(verify_cmd, c);
    add_format(verify_cmd, c);
    verify_cmd->add_option("--graph", graph_path, "multigraph JSON file")->required();
    verify_cmd->add_option("--script", script_path, "deletion script JSON to replay");
    verify_cmd->add_flag("--exhaustive", exhaustive, "minimum over every MAX application");
    verify_cmd->add_option("--perturb", perturb, "also search this many degree-preserving rewirings")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed, "seed for --perturb");
    verify_cmd->add_option("--max-order", max_order, "size guard for --exhaustive")->check(CLI::Range(1, 31));

    auto * lab_cmd = app.add_subcommand("lab", "elementary steps, precedence and pseudo-reductions");
    lab_cmd->require_subcommand(1);
    std::string lower_text, upper_text;
    auto * precedes_cmd = lab_cmd->add_subcommand("precedes", "is D reachable from E by elementary steps");
    add_k(precedes_cmd, c);
    add_format(precedes_cmd, c);
    add_degrees(precedes_cmd, lower_text, "--d");
    add_degrees(precedes_cmd, upper_text, "--e");
    auto * pseudo_cmd = lab_cmd->add_subcommand("pseudo", "pseudo-reductions of E");
    add_k(pseudo_cmd, c);
    add_degrees(pseudo_cmd, c.degrees);
    add_format(pseudo_cmd, c);
    auto * steps_cmd = lab_cmd->add_subcommand("steps", "every single elementary step from E");
    add_k(steps_cmd, c);
    add_degrees(steps_cmd, c.degrees);
    add_format(steps_cmd, c);

    CoveringParams params{0, 0, 1};
    Count start = 0;
    auto * covering_cmd = app.add_subcommand("covering", "lower bound on a pair-covering number");
    covering_cmd->add_option("--v", params.v, "number of points")->required();
    covering_cmd->add_option("--kappa", params.kappa, "block size")->required();
    covering_cmd->add_option("--lambda", params.lambda, "pair multiplicity");
    covering_cmd->add_option("--start", start, "starting bound (default: Schonheim)");
    add_format(covering_cmd, c);

    Count kappa_min = 0, kappa_max = 0, scan_lambda = 1;
    std::string priors_path;
    unsigned threads = 0;
    std::string scan_format = "text";
    auto * scan_cmd = app.add_subcommand("covering-scan", "scan (kappa, v) for improved covering bounds");
    scan_cmd->add_option("--kappa-min", kappa_min)->required();
    scan_cmd->add_option("--kappa-max", kappa_max)->required();
    scan_cmd->add_option("--lambda", scan_lambda);
    scan_cmd->add_option("--priors", priors_path, "CSV kappa,v,lambda,bound,source of known bounds");
    scan_cmd->add_option("--threads", threads, "worker threads (0: hardware concurrency)");
    scan_cmd->add_option("--format", scan_format)->check(CLI::IsMember({"text", "csv", "json"}));

    bool loops_construct = false, loops_brute = false;
    auto * loops_cmd = app.add_subcommand("loops", "minimum alpha_k over loop multigraphs with degree sequence D");
    add_k(loops_cmd, c);
    add_degrees(loops_cmd, c.degrees);
    add_format(loops_cmd, c);
    loops_cmd->add_flag("--construct", loops_construct, "print an extremal loop multigraph");
    loops_cmd->add_flag("--exhaustive", loops_brute, "check against every labeled realization");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    const bool as_json = c.format == "json";
    try {
        if (*bound_cmd) {
            auto t = bound(parse_degree_sequence(c.degrees), c.k);
            if (as_json)
                emit(to_json(t));
            else
                std::cout << chain_text(t);
        }
        else if (*omega_cmd) {
            auto d = parse_degree_sequence(c.degrees);
            auto o = omega(d, c.k);
            if (as_json)
                emit({{"k", c.k}, {"input", to_json(d)}, {"omega", to_json(o)}});
            else
                std::cout << "D = {" << d.str() << "}\n"
                          << render_ferrers(d, c.k) << "\nOmega(D) = {" << o.str() << "}\n"
                          << render_ferrers(o, c.k);
        }
        else if (*trace_cmd) {
            auto t = decrement_sequence(parse_degree_sequence(c.degrees), c.k);
            if (as_json)
                emit(to_json(t));
            else {
                std::cout << "A0 = {" << t.a0.str() << "}, s = " << t.a0_sum << ", max(D) = " << t.max_degree << '\n';
                if (t.degenerate)
                    std::cout << "degenerate: every reduction is trivial\n";
                else {
                    std::cout << "decrement sequence:";
                    for (auto a : t.decrements)
                        std::cout << ' ' << a;
                    std::cout << '\n';
                }
                std::cout << "Omega(D) = {" << t.omega.str() << "}\n";
            }
        }
        else if (*construct_cmd) {
            auto d = parse_degree_sequence(c.degrees);
            auto w = construct_worst_case(d, c.k);
            auto b = bound_value(d, c.k);
            if (! graph_out.empty())
                write_file(graph_out, to_json(w.graph));
            if (! script_out.empty())
                write_file(script_out, script_to_json(w.script));
            if (as_json)
                emit({{"k", c.k}, {"b", b}, {"graph", to_json(w.graph)}, {"script", script_to_json(w.script)}});
            else {
                std::cout << "b = " << b << ", order " << w.graph.order() << '\n';
                for (auto e : w.graph.edges())
                    std::cout << "  " << e.u << " -- " << e.v << "  x" << e.multiplicity << '\n';
                std::cout << "deletions: " << list_text(w.script) << '\n';
            }
        }
        else if (*verify_cmd) {
            auto g = graph_argument(graph_path);
            json out = {{"k", c.k}, {"n", g.order()}, {"degrees", to_json(degree_sequence_of(g))}};
            std::ostringstream text;
            if (! script_path.empty()) {
                auto run = replay(g, c.k, script_argument(script_path));
                out["run"] = to_json(run);
                text << "scripted run leaves " << run.independent_set.size() << " vertices: {"
                     << list_text(run.independent_set) << "}\n";
            }
            else if (! exhaustive) {
                auto run = max_run(g, c.k, lowest_index_chooser());
                out["run"] = to_json(run);
                text << "MAX (lowest-index choices) leaves " << run.independent_set.size() << " vertices: {"
                     << list_text(run.independent_set) << "}\n";
            }
            if (exhaustive) {
                auto wc = max_worst_case(g, c.k, max_order);
                out["worst_case"] = {{"min_size", wc.min_size}, {"script", script_to_json(wc.script)}};
                text << "worst case over all MAX applications: " << wc.min_size << " (deletions "
                     << list_text(wc.script) << ")\n";
            }
            if (perturb > 0) {
                std::mt19937_64 rng(seed);
                json sizes = json::array();
                for (int i = 0; i < perturb; ++i) {
                    auto h = rewire(g, rng, 2 * static_cast<int>(g.edges().size()) + 4);
                    sizes.push_back(max_worst_case(h, c.k, max_order).min_size);
                }
                out["perturbed_worst_cases"] = sizes;
                text << "worst cases on " << perturb << " rewirings (seed " << seed << "): " << sizes.dump() << '\n';
            }
            out["b"] = bound_value(degree_sequence_of(g), c.k);
            text << "b_k(D) = " << out["b"].get<Count>() << '\n';
            if (as_json)
                emit(out);
            else
                std::cout << text.str();
        }
        else if (*precedes_cmd) {
            auto d = parse_degree_sequence(lower_text), e = parse_degree_sequence(upper_text);
            bool result = precedes(d, e, c.k);
            if (as_json)
                emit({{"k", c.k}, {"d", to_json(d)}, {"e", to_json(e)}, {"precedes", result}});
            else
                std::cout << "{" << d.str() << "} " << (result ? "precedes" : "does not precede") << " {" << e.str()
                          << "}\n";
        }
        else if (*pseudo_cmd) {
            auto e = parse_degree_sequence(c.degrees);
            auto list = pseudo_reductions(e, c.k);
            auto om = omega(e, c.k);
            if (as_json) {
                json arr = json::array();
                for (const auto & p : list)
                    arr.push_back(to_json(p));
                emit({{"k", c.k}, {"e", to_json(e)}, {"omega", to_json(om)}, {"pseudo_reductions", arr}});
            }
            else {
                for (const auto & p : list)
                    std::cout << "{" << p.str() << "}" << (p == om ? "  = Omega(E)" : "")
                              << (is_trivial(p, c.k) ? "  trivial" : "") << '\n';
            }
        }
        else if (*steps_cmd) {
            auto e = parse_degree_sequence(c.degrees);
            auto list = elementary_successors(e, c.k);
            if (as_json) {
                json arr = json::array();
                for (const auto & [step, d] : list)
                    arr.push_back({{"kind", step.kind == StepKind::Addition ? "addition" : "transfer"},
                        {"x", step.x}, {"y", step.y}, {"result", to_json(d)}});
                emit({{"k", c.k}, {"e", to_json(e)}, {"steps", arr}});
            }
            else {
                for (const auto & [step, d] : list)
                    std::cout << to_string(step) << " -> {" << d.str() << "}\n";
            }
        }
        else if (*covering_cmd) {
            Count z0 = start > 0 ? start : schonheim(params);
            auto result = covering_lower_bound(params, z0);
            if (as_json) {
                json reports = json::array();
                for (const auto & r : result.reports)
                    reports.push_back(to_json(r));
                emit({{"schonheim", schonheim(params)}, {"start", z0}, {"bound", result.bound}, {"reports", reports}});
            }
            else {
                std::cout << "Schonheim bound " << schonheim(params) << ", start " << z0 << '\n';
                for (const auto & r : result.reports)
                    std::cout << "  z = " << r.z << ": r = " << r.r << ", d = " << r.d << ", s = " << r.s
                              << ", ell = " << r.ell << ", k = " << r.k
                              << (r.b ? ", b = " + std::to_string(*r.b) : ", D not graphical")
                              << (r.contradiction ? "  > z, no covering" : "") << '\n';
                std::cout << "C_" << params.lambda << "(" << params.v << "," << params.kappa << ") >= " << result.bound
                          << '\n';
            }
        }
        else if (*scan_cmd) {
            PriorBounds priors;
            if (! priors_path.empty())
                priors = load_prior_bounds(priors_path);
            auto rows = scan_table(kappa_min, kappa_max, scan_lambda, priors, threads);
            if (scan_format == "csv")
                std::cout << scan_rows_csv(rows);
            else if (scan_format == "json") {
                json arr = json::array();
                for (const auto & r : rows)
                    arr.push_back(to_json(r));
                emit(arr);
            }
            else
                std::cout << scan_rows_text(rows);
        }
        else if (*loops_cmd) {
            auto d = parse_degree_sequence(c.degrees);
            auto value = alpha_k_min_loops(d, c.k);
            json out = {{"k", c.k}, {"degrees", to_json(d)}, {"alpha_min", value}};
            std::ostringstream text;
            text << "minimum alpha_" << c.k << " over loop multigraphs with D = {" << d.str() << "}: " << value
                 << '\n';
            if (loops_construct) {
                auto g = construct_extremal_loop_multigraph(d, c.k);
                out["graph"] = to_json(g);
                out["graph_alpha"] = alpha_k_bruteforce(g, c.k);
                text << "extremal construction (alpha_k = " << out["graph_alpha"].get<Count>() << "):\n";
                for (auto e : g.edges())
                    text << "  " << e.u << (e.u == e.v ? " loop" : " -- " + std::to_string(e.v)) << "  x"
                         << e.multiplicity << '\n';
            }
            if (loops_brute) {
                Count best = -1;
                auto count = enumerate_loop_realizations(d, [&](const LoopMultigraph & g) {
                    Count a = alpha_k_bruteforce(g, c.k);
                    if (best < 0 || a < best)
                        best = a;
                    return true;
                });
                out["realizations"] = count;
                out["exhaustive_min"] = best;
                text << "exhaustive minimum over " << count << " labeled realizations: " << best << '\n';
            }
            if (as_json)
                emit(out);
            else
                std::cout << text.str();
        }
    }
    catch (const InvalidInput & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const ResourceLimit & e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    }
    return 0;
}
