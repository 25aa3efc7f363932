#pragma once

#include "kindep/degree_sequence.hpp"

#include <vector>

namespace kindep {

/// One application of Omega to a degree sequence.
///
/// `decrements` holds the decrement sequence (a_1, ..., a_s). When the trace
/// comes from decrement_sequence() it is complete (length s = sum(A_0));
/// inside a BoundTrace only the first max(D) entries are kept, since those are
/// the ones that determine Omega(D). It is empty in the degenerate branch.
struct DecrementTrace {
    Degree k = 1;
    DegreeSequence input;
    Degree max_degree = 0;
    DegreeSequence a0;
    Count a0_sum = 0;
    std::vector<Degree> decrements;
    DegreeSequence omega;
    bool degenerate = false;
};

/// The Omega chain [D, Omega(D), ..., Omega^p(D)] stopping at the first
/// trivial term, with b = |Omega^p(D)| = n - p.
struct BoundTrace {
    Degree k = 1;
    std::vector<DegreeSequence> chain;
    Count p = 0;
    Count b = 0;
    std::vector<DecrementTrace> steps;
};

/// Full decrement sequence of a graphical nontrivial D.
DecrementTrace decrement_sequence(const DegreeSequence & d, Degree k);

/// Omega(D) for graphical nonempty D. A trivial D maps to the all-zero
/// sequence of order n-1.
DegreeSequence omega(const DegreeSequence & d, Degree k);

BoundTrace bound(const DegreeSequence & d, Degree k);

/// b_k(D) without recording the chain; O(sum(D) + n) time.
Count bound_value(const DegreeSequence & d, Degree k);

}
