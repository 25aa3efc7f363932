#include "kindep/covering.hpp"
#include "kindep/omega.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace kindep {

namespace {

Count ceil_div(Count a, Count b)
{
    return (a + b - 1) / b;
}

Count replication(const CoveringParams & p)
{
    return ceil_div(checked_mul(p.lambda, p.v - 1), p.kappa - 1);
}

}

void CoveringParams::validate() const
{
    if (kappa < 3)
        throw InvalidInput("block size kappa must be at least 3");
    if (kappa >= v)
        throw InvalidInput("block size kappa must be less than v");
    if (lambda < 1)
        throw InvalidInput("lambda must be positive");
}

Count schonheim(const CoveringParams & p)
{
    p.validate();
    return ceil_div(checked_mul(p.v, replication(p)), p.kappa);
}

CoveringBoundReport excess_profile(const CoveringParams & p, Count z)
{
    p.validate();
    CoveringBoundReport rep;
    rep.params = p;
    rep.z = z;
    rep.r = replication(p);
    rep.d = rep.r * (p.kappa - 1) - p.lambda * (p.v - 1);
    Count surplus = checked_mul(p.kappa, z) - checked_mul(rep.r, p.v);
    if (surplus < 0)
        throw InvalidInput("z = " + std::to_string(z) + " is below the replication bound: kappa z < r v");
    rep.s = surplus / p.v;
    rep.ell = surplus % p.v;
    rep.excess = DegreeSequence::from_counts({
        {rep.d + (rep.s + 1) * (p.kappa - 1), rep.ell},
        {rep.d + rep.s * (p.kappa - 1), p.v - rep.ell},
    });
    rep.k = rep.r - p.lambda;
    return rep;
}

CoveringBoundReport test_block_count(const CoveringParams & p, Count z)
{
    auto rep = excess_profile(p, z);
    // b is only defined for degree sequences; the test says nothing here
    if (! is_graphical(rep.excess))
        return rep;
    rep.b = bound_value(rep.excess, rep.k);
    rep.contradiction = *rep.b > z;
    return rep;
}

CoveringBound covering_lower_bound(const CoveringParams & p, Count z0)
{
    CoveringBound out;
    Count z = z0;
    while (true) {
        out.reports.push_back(test_block_count(p, z));
        if (! out.reports.back().contradiction)
            break;
        ++z;
    }
    out.bound = z;
    return out;
}

PriorBounds parse_prior_bounds(std::istream & in)
{
    PriorBounds out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("kappa,", 0) == 0)
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int i = 0; i < 4; ++i) {
            auto comma = line.find(',', start);
            if (comma == std::string::npos)
                throw InvalidInput("priors line " + std::to_string(lineno) + ": expected kappa,v,lambda,bound,source");
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));
        Count values[4];
        for (int i = 0; i < 4; ++i) {
            std::size_t used = 0;
            try {
                values[i] = std::stoll(fields[i], &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != fields[i].size())
                throw InvalidInput("priors line " + std::to_string(lineno) + ": '" + fields[i] + "' is not an integer");
        }
        CoveringParams{values[1], values[0], values[2]}.validate();
        out[{values[0], values[1], values[2]}] = {values[3], fields[4]};
    }
    return out;
}

PriorBounds load_prior_bounds(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw InvalidInput("cannot open priors file " + path);
    return parse_prior_bounds(in);
}

std::vector<ScanRow> scan_table(Count kappa_min, Count kappa_max, Count lambda, const PriorBounds & priors,
    unsigned threads)
{
    if (kappa_min < 5 || kappa_max < kappa_min)
        throw InvalidInput("scan needs 5 <= kappa-min <= kappa-max");
    if (lambda < 1)
        throw InvalidInput("lambda must be positive");

    std::vector<CoveringParams> cells;
    for (Count kappa = kappa_min; kappa <= kappa_max; ++kappa)
        for (Count v = 13 * kappa / 4 + 1; lambda * (v - 1) <= (kappa - 1) * (kappa - 1); ++v)
            cells.push_back({v, kappa, lambda});

    std::vector<std::optional<ScanRow>> results(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) try {
            const auto & p = cells[i];
            Count previous = schonheim(p);
            std::string source = kSchonheimSource;
            if (auto it = priors.find({p.kappa, p.v, p.lambda}); it != priors.end() && it->second.bound > previous) {
                previous = it->second.bound;
                source = it->second.source;
            }
            auto result = covering_lower_bound(p, previous);
            if (result.bound > previous) {
                const auto & first = result.reports.front();
                results[i] = ScanRow{p.kappa, p.v, first.d, first.r, first.ell, previous, source, result.bound};
            }
        }
        catch (...) {
            std::lock_guard lock(failure_mutex);
            if (! failure)
                failure = std::current_exception();
            next = cells.size();
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    std::vector<ScanRow> rows;
    for (auto & r : results)
        if (r)
            rows.push_back(std::move(*r));
    return rows;
}

std::string scan_rows_csv(const std::vector<ScanRow> & rows)
{
    std::ostringstream os;
    os << "kappa,v,d,r,ell,previous,source,new\n";
    for (const auto & r : rows)
        os << r.kappa << ',' << r.v << ',' << r.d << ',' << r.r << ',' << r.ell << ',' << r.previous << ','
           << r.source << ',' << r.improved << '\n';
    return os.str();
}

std::string scan_rows_text(const std::vector<ScanRow> & rows)
{
    std::size_t source_width = 6;
    for (const auto & r : rows)
        source_width = std::max(source_width, r.source.size());
    std::ostringstream os;
    auto num = [&](auto value, int width) -> std::ostream & { return os << std::setw(width) << value; };
    num("kappa", 5) << ' ';
    num("v", 5) << ' ';
    num("d", 4) << ' ';
    num("r", 4) << ' ';
    num("ell", 5) << ' ';
    num("previous", 8) << "  " << std::left << std::setw(static_cast<int>(source_width)) << "source" << std::right << ' ';
    num("new", 5) << '\n';
    for (const auto & r : rows) {
        num(r.kappa, 5) << ' ';
        num(r.v, 5) << ' ';
        num(r.d, 4) << ' ';
        num(r.r, 4) << ' ';
        num(r.ell, 5) << ' ';
        num(r.previous, 8) << "  " << std::left << std::setw(static_cast<int>(source_width)) << r.source << std::right
                           << ' ';
        num(r.improved, 5) << '\n';
    }
    return os.str();
}

}
