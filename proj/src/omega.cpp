#include "kindep/omega.hpp"

#include <cassert>

namespace kindep {

namespace {

// Dense count array indexed by value. Both the max pointer and the
// smallest-positive pointer move monotonically apart from O(1) resets, so a
// run of t decrements costs O(t + max).
class DenseMultiset {
public:
    explicit DenseMultiset(const DegreeSequence & d) :
        order_(d.order()), sum_(d.sum())
    {
        if (d.empty())
            return;
        counts_.assign(static_cast<std::size_t>(d.max()) + 1, 0);
        for (auto [value, mult] : d.counts())
            counts_[static_cast<std::size_t>(value)] = mult;
        top_ = d.max();
        low_ = 1;
    }

    Count order() const { return order_; }
    Count sum() const { return sum_; }

    Degree max()
    {
        settle_top();
        return top_;
    }

    void remove_one(Degree x)
    {
        assert(count(x) > 0);
        --count(x);
        --order_;
        sum_ -= x;
        settle_top();
    }

    // One step of the decrement schedule: the maximum while it exceeds k,
    // otherwise the smallest positive element.
    Degree step(Degree k)
    {
        settle_top();
        Degree x = top_ > k ? top_ : smallest_positive();
        --count(x);
        ++count(x - 1);
        --sum_;
        if (x - 1 >= 1 && x - 1 < low_)
            low_ = x - 1;
        return x;
    }

    DegreeSequence to_sequence() const
    {
        std::map<Degree, Count> counts;
        for (std::size_t v = 0; v < counts_.size(); ++v)
            if (counts_[v] > 0)
                counts.emplace(static_cast<Degree>(v), counts_[v]);
        return DegreeSequence::from_counts(counts);
    }

private:
    std::vector<Count> counts_;
    Count order_ = 0;
    Count sum_ = 0;
    Degree top_ = -1;
    Degree low_ = 1;

    Count & count(Degree v) { return counts_[static_cast<std::size_t>(v)]; }

    void settle_top()
    {
        if (order_ == 0) {
            top_ = -1;
            return;
        }
        while (top_ > 0 && count(top_) == 0)
            --top_;
    }

    Degree smallest_positive()
    {
        assert(sum_ > 0);
        while (count(low_) == 0)
            ++low_;
        return low_;
    }
};

void require_graphical(const DegreeSequence & d)
{
    if (! is_graphical(d))
        throw InvalidInput("degree sequence " + d.str() + " is not graphical");
}

// Turns `cur` from D into A_0 and reports whether Omega takes the
// all-zero branch. Returns max(D).
Degree start_omega(DenseMultiset & cur, Degree k, bool & degenerate)
{
    Degree m = cur.max();
    cur.remove_one(m);
    degenerate = cur.order() == 0 || cur.sum() < m + 2 * k || cur.max() < k;
    return m;
}

DecrementTrace omega_step(const DegreeSequence & d, Degree k, bool full)
{
    DecrementTrace t;
    t.k = k;
    t.input = d;
    DenseMultiset cur(d);
    t.max_degree = start_omega(cur, k, t.degenerate);
    t.a0 = cur.to_sequence();
    t.a0_sum = cur.sum();
    if (t.degenerate) {
        t.omega = DegreeSequence::zeros(d.order() - 1);
        return t;
    }
    Count steps = full ? t.a0_sum : t.max_degree;
    t.decrements.reserve(static_cast<std::size_t>(steps));
    for (Count i = 0; i < steps; ++i) {
        t.decrements.push_back(cur.step(k));
        if (i + 1 == t.max_degree)
            t.omega = cur.to_sequence();
    }
    return t;
}

}

DecrementTrace decrement_sequence(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    require_graphical(d);
    if (is_trivial(d, k))
        throw InvalidInput("decrement sequence needs a nontrivial degree sequence, got " + d.str());
    return omega_step(d, k, true);
}

DegreeSequence omega(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    if (d.empty())
        throw InvalidInput("Omega is undefined on the empty multiset");
    require_graphical(d);
    return omega_step(d, k, false).omega;
}

BoundTrace bound(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    require_graphical(d);
    BoundTrace t;
    t.k = k;
    t.chain.push_back(d);
    while (! is_trivial(t.chain.back(), k)) {
        t.steps.push_back(omega_step(t.chain.back(), k, false));
        t.chain.push_back(t.steps.back().omega);
    }
    t.p = static_cast<Count>(t.chain.size()) - 1;
    t.b = d.order() - t.p;
    return t;
}

Count bound_value(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    require_graphical(d);
    DenseMultiset cur(d);
    Count p = 0;
    while (cur.order() > 0 && cur.max() >= k) {
        bool degenerate = false;
        Degree m = start_omega(cur, k, degenerate);
        ++p;
        if (degenerate)
            break;
        for (Degree i = 0; i < m; ++i)
            cur.step(k);
    }
    return d.order() - p;
}

}
