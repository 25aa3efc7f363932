#pragma once

#include "kindep/degree_sequence.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kindep {

enum class StepKind { Addition, Transfer };

/// (x,y)-addition: an (x-1)-increment followed by a (y-1)-increment, with
/// x <= y <= max(E)+1.
/// (x,y)-transfer: an x-decrement followed by a (y-1)-increment, with
/// x > max(k,y) or x < y <= k.
struct ElementaryStep {
    StepKind kind;
    Degree x;
    Degree y;

    friend bool operator==(const ElementaryStep &, const ElementaryStep &) = default;
};

std::string to_string(const ElementaryStep & step);

DegreeSequence apply_decrement(const DegreeSequence & e, Degree x);
DegreeSequence apply_increment(const DegreeSequence & e, Degree x);

DegreeSequence addition_step(const DegreeSequence & e, Degree x, Degree y);
DegreeSequence transfer_step(const DegreeSequence & e, Degree x, Degree y, Degree k);
DegreeSequence apply_step(const DegreeSequence & e, const ElementaryStep & step, Degree k);

/// Every elementary step applicable to E, with its result.
std::vector<std::pair<ElementaryStep, DegreeSequence>> elementary_successors(const DegreeSequence & e, Degree k);

/// True iff D is obtained from E by exactly one elementary step.
bool one_step_below(const DegreeSequence & d, const DegreeSequence & e, Degree k);

/// Caps for the exhaustive reachability search in precedes(). The state
/// space grows exponentially in the order and the sum.
struct PrecedenceLimits {
    Count max_order = 10;
    Count max_sum = 48;
    std::size_t max_states = 2'000'000;
};

/// D is reachable from E by a (possibly empty) sequence of elementary steps.
/// Breadth-first search; a verification oracle for small inputs only.
bool precedes(const DegreeSequence & d, const DegreeSequence & e, Degree k, const PrecedenceLimits & limits = {});

/// Graphical E' with sum(E') = sum(A_0) - max(E) and sigma_E'(z) <= sigma_A0(z)
/// for z >= 1, where A_0 = E minus one copy of max(E). Contains every
/// reduction of E. Output is sorted.
std::vector<DegreeSequence> pseudo_reductions(const DegreeSequence & e, Degree k);

}
