#pragma once

#include "kindep/degree_sequence.hpp"

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kindep {

/// Parameters of a (v, kappa, lambda) pair covering; 3 <= kappa < v, lambda >= 1.
struct CoveringParams {
    Count v;
    Count kappa;
    Count lambda;

    void validate() const;
};

/// One application of the excess-degree test at block count z.
///
/// r, d solve lambda(v-1) = r(kappa-1) - d with 0 <= d < kappa-1;
/// s, ell solve kappa z = (r+s)v + ell with 0 <= ell < v. The excess
/// sequence has ell elements d+(s+1)(kappa-1) and v-ell elements d+s(kappa-1),
/// and k = r - lambda.
struct CoveringBoundReport {
    CoveringParams params;
    Count z = 0;
    Count r = 0;
    Count d = 0;
    Count s = 0;
    Count ell = 0;
    DegreeSequence excess;
    Degree k = 0;
    std::optional<Count> b;
    bool contradiction = false;
};

Count schonheim(const CoveringParams & p);

/// Report with `b` unset. Throws InvalidInput when kappa z < r v.
CoveringBoundReport excess_profile(const CoveringParams & p, Count z);

/// excess_profile plus b_k of the excess sequence; contradiction iff b > z.
/// For a non-graphical excess sequence b is left unset and there is no
/// contradiction.
CoveringBoundReport test_block_count(const CoveringParams & p, Count z);

struct CoveringBound {
    Count bound = 0;
    std::vector<CoveringBoundReport> reports;
};

/// Smallest z >= z0 that the excess test does not rule out.
CoveringBound covering_lower_bound(const CoveringParams & p, Count z0);

struct PriorBound {
    Count bound;
    std::string source;
};

/// Keyed by (kappa, v, lambda).
using PriorBounds = std::map<std::tuple<Count, Count, Count>, PriorBound>;

/// CSV with header "kappa,v,lambda,bound,source".
PriorBounds parse_prior_bounds(std::istream & in);
PriorBounds load_prior_bounds(const std::string & path);

inline const std::string kSchonheimSource = "Schonheim bound";

struct ScanRow {
    Count kappa;
    Count v;
    Count d;
    Count r;
    Count ell;
    Count previous;
    std::string source;
    Count improved;

    friend bool operator==(const ScanRow &, const ScanRow &) = default;
};

/// Rows (in (kappa, v) order) for every kappa in [kappa_min, kappa_max] and
/// 13 kappa / 4 < v <= (kappa-1)^2 / lambda + 1 where the excess test beats
/// the baseline max(Schonheim, prior).
std::vector<ScanRow> scan_table(Count kappa_min, Count kappa_max, Count lambda, const PriorBounds & priors,
    unsigned threads = 0);

std::string scan_rows_csv(const std::vector<ScanRow> & rows);
std::string scan_rows_text(const std::vector<ScanRow> & rows);

}
