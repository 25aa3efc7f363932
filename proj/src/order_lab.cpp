#include "kindep/order_lab.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace kindep {

std::string to_string(const ElementaryStep & step)
{
    return "(" + std::to_string(step.x) + "," + std::to_string(step.y) + ")-" +
        (step.kind == StepKind::Addition ? "addition" : "transfer");
}

DegreeSequence apply_decrement(const DegreeSequence & e, Degree x)
{
    if (x <= 0)
        throw InvalidInput("decrement needs a positive element, got " + std::to_string(x));
    if (! e.contains(x))
        throw InvalidInput(std::to_string(x) + "-decrement: " + std::to_string(x) + " is not an element of {" + e.str() + "}");
    auto counts = e.counts();
    if (--counts[x] == 0)
        counts.erase(x);
    ++counts[x - 1];
    return DegreeSequence::from_counts(counts);
}

DegreeSequence apply_increment(const DegreeSequence & e, Degree x)
{
    if (! e.contains(x))
        throw InvalidInput(std::to_string(x) + "-increment: " + std::to_string(x) + " is not an element of {" + e.str() + "}");
    auto counts = e.counts();
    if (--counts[x] == 0)
        counts.erase(x);
    ++counts[x + 1];
    return DegreeSequence::from_counts(counts);
}

DegreeSequence addition_step(const DegreeSequence & e, Degree x, Degree y)
{
    if (e.empty())
        throw InvalidInput("addition step on the empty multiset");
    if (x < 1 || y < 1)
        throw InvalidInput("addition step needs positive x and y");
    if (x > y)
        throw InvalidInput("addition step needs x <= y");
    if (y > e.max() + 1)
        throw InvalidInput("addition step needs y <= max(E)+1");
    if (! e.contains(x - 1))
        throw InvalidInput("addition step: x-1 = " + std::to_string(x - 1) + " is not an element of E");
    auto first = apply_increment(e, x - 1);
    if (! first.contains(y - 1))
        throw InvalidInput("addition step: y-1 = " + std::to_string(y - 1) + " is not an element after the first increment");
    return apply_increment(first, y - 1);
}

namespace {

bool transfer_allowed(Degree x, Degree y, Degree k)
{
    return x > std::max(k, y) || (x < y && y <= k);
}

}

DegreeSequence transfer_step(const DegreeSequence & e, Degree x, Degree y, Degree k)
{
    require_positive_k(k);
    if (x < 1 || y < 1)
        throw InvalidInput("transfer step needs positive x and y");
    if (! transfer_allowed(x, y, k))
        throw InvalidInput("transfer step needs x > max(k,y) or x < y <= k");
    if (! e.contains(x))
        throw InvalidInput("transfer step: x = " + std::to_string(x) + " is not an element of E");
    auto first = apply_decrement(e, x);
    if (! first.contains(y - 1))
        throw InvalidInput("transfer step: y-1 = " + std::to_string(y - 1) + " is not an element after the decrement");
    return apply_increment(first, y - 1);
}

DegreeSequence apply_step(const DegreeSequence & e, const ElementaryStep & step, Degree k)
{
    if (step.kind == StepKind::Addition)
        return addition_step(e, step.x, step.y);
    return transfer_step(e, step.x, step.y, k);
}

std::vector<std::pair<ElementaryStep, DegreeSequence>> elementary_successors(const DegreeSequence & e, Degree k)
{
    require_positive_k(k);
    std::vector<std::pair<ElementaryStep, DegreeSequence>> out;
    if (e.empty())
        return out;
    Degree top = e.max();

    for (auto [xm1, mult] : e.counts()) {
        Degree x = xm1 + 1;
        auto first = apply_increment(e, xm1);
        for (Degree y = x; y <= top + 1; ++y)
            if (first.contains(y - 1))
                out.emplace_back(ElementaryStep{StepKind::Addition, x, y}, apply_increment(first, y - 1));
    }

    for (auto [x, mult] : e.counts()) {
        if (x == 0)
            continue;
        auto first = apply_decrement(e, x);
        for (auto [ym1, m2] : first.counts()) {
            Degree y = ym1 + 1;
            if (transfer_allowed(x, y, k))
                out.emplace_back(ElementaryStep{StepKind::Transfer, x, y}, apply_increment(first, ym1));
        }
    }
    return out;
}

bool one_step_below(const DegreeSequence & d, const DegreeSequence & e, Degree k)
{
    if (d.order() != e.order())
        return false;
    for (const auto & [step, next] : elementary_successors(e, k))
        if (next == d)
            return true;
    return false;
}

bool precedes(const DegreeSequence & d, const DegreeSequence & e, Degree k, const PrecedenceLimits & limits)
{
    require_positive_k(k);
    if (d.order() != e.order())
        throw InvalidInput("precedes: orders differ (" + std::to_string(d.order()) + " vs " + std::to_string(e.order()) + ")");
    if (d == e)
        return true;
    if (d.order() > limits.max_order || d.sum() > limits.max_sum || e.sum() > limits.max_sum)
        throw ResourceLimit("precedes: order/sum exceed the exhaustive-search limits (order <= " +
            std::to_string(limits.max_order) + ", sum <= " + std::to_string(limits.max_sum) + ")");

    // additions add 2 to the sum, transfers preserve it
    if (d.sum() < e.sum() || (d.sum() - e.sum()) % 2 != 0)
        return false;
    Degree max_cap = e.max() + (d.sum() - e.sum()) / 2;
    if (! d.empty() && d.max() > max_cap)
        return false;

    std::set<DegreeSequence> seen{e};
    std::deque<DegreeSequence> queue{e};
    while (! queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (auto & [step, next] : elementary_successors(cur, k)) {
            if (next.sum() > d.sum() || next.max() > max_cap)
                continue;
            if (next == d)
                return true;
            if (seen.insert(next).second) {
                if (seen.size() > limits.max_states)
                    throw ResourceLimit("precedes: visited more than " + std::to_string(limits.max_states) + " states");
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

namespace {

// Enumerates nonincreasing column heights col[1..] with col[z] <= cap[z]
// summing to `remaining`.
void enumerate_columns(const std::vector<Count> & cap, const std::vector<Count> & cap_suffix, std::size_t z,
    Count prev, Count remaining, std::vector<Count> & cols, std::vector<std::vector<Count>> & out)
{
    if (remaining == 0) {
        out.push_back(cols);
        return;
    }
    if (z >= cap.size())
        return;
    Count hi = std::min({prev, cap[z], remaining});
    for (Count c = hi; c >= 1; --c) {
        // later columns are bounded by min(c, cap[j]) <= cap_suffix
        if (c + std::min(cap_suffix[z + 1], c * static_cast<Count>(cap.size() - z - 1)) < remaining)
            break;
        cols.push_back(c);
        enumerate_columns(cap, cap_suffix, z + 1, c, remaining - c, cols, out);
        cols.pop_back();
    }
}

}

std::vector<DegreeSequence> pseudo_reductions(const DegreeSequence & e, Degree k)
{
    require_positive_k(k);
    if (! is_graphical(e))
        throw InvalidInput("pseudo_reductions: " + e.str() + " is not graphical");
    if (is_trivial(e, k))
        throw InvalidInput("pseudo_reductions: " + e.str() + " is trivial");

    Degree top = e.max();
    auto a0 = multiset_difference(e, DegreeSequence{top});
    Count target = a0.sum() - top;
    Count order = a0.order();

    auto s = sigma(a0);
    // cap[z] = sigma_A0(z) for z >= 1; index 0 unused
    std::vector<Count> cap(s.values().size(), 0);
    for (std::size_t z = 1; z < cap.size(); ++z)
        cap[z] = s.values()[z];
    std::vector<Count> cap_suffix(cap.size() + 1, 0);
    for (std::size_t z = cap.size(); z-- > 1;)
        cap_suffix[z] = cap_suffix[z + 1] + cap[z];

    std::vector<std::vector<Count>> columns;
    std::vector<Count> scratch;
    enumerate_columns(cap, cap_suffix, 1, order, target, scratch, columns);

    std::vector<DegreeSequence> out;
    for (const auto & cols : columns) {
        std::vector<Count> profile{order};
        profile.insert(profile.end(), cols.begin(), cols.end());
        auto candidate = from_sigma(SigmaProfile(std::move(profile)));
        if (is_graphical(candidate))
            out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}
