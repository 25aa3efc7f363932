#include "kindep/degree_sequence.hpp"

#include <algorithm>
#include <sstream>

namespace kindep {

void require_positive_k(Degree k)
{
    if (k < 1)
        throw InvalidInput("k must be a positive integer, got " + std::to_string(k));
}

Count checked_add(Count a, Count b)
{
    Count out;
    if (__builtin_add_overflow(a, b, &out))
        throw InvalidInput("integer overflow in degree sum");
    return out;
}

Count checked_mul(Count a, Count b)
{
    Count out;
    if (__builtin_mul_overflow(a, b, &out))
        throw InvalidInput("integer overflow in degree sum");
    return out;
}

DegreeSequence::DegreeSequence(std::initializer_list<Degree> values) :
    DegreeSequence(std::span<const Degree>(values.begin(), values.size()))
{
}

DegreeSequence::DegreeSequence(std::span<const Degree> values)
{
    for (auto v : values)
        add(v, 1);
}

void DegreeSequence::add(Degree value, Count multiplicity)
{
    if (value < 0)
        throw InvalidInput("negative degree " + std::to_string(value));
    if (value > kMaxDegree)
        throw InvalidInput("degree " + std::to_string(value) + " exceeds 2^31-1");
    if (multiplicity < 0)
        throw InvalidInput("negative multiplicity");
    if (multiplicity == 0)
        return;
    counts_[value] = checked_add(counts_[value], multiplicity);
    order_ = checked_add(order_, multiplicity);
    sum_ = checked_add(sum_, checked_mul(value, multiplicity));
}

DegreeSequence DegreeSequence::from_counts(const std::map<Degree, Count> & counts)
{
    DegreeSequence out;
    for (auto [value, mult] : counts)
        out.add(value, mult);
    return out;
}

DegreeSequence DegreeSequence::zeros(Count n)
{
    DegreeSequence out;
    out.add(0, n);
    return out;
}

Degree DegreeSequence::max() const
{
    if (counts_.empty())
        throw InvalidInput("max of the empty multiset is undefined");
    return counts_.rbegin()->first;
}

std::optional<Degree> DegreeSequence::smallest_positive() const
{
    auto it = counts_.upper_bound(0);
    if (it == counts_.end())
        return std::nullopt;
    return it->first;
}

Count DegreeSequence::mu(Degree z) const
{
    auto it = counts_.find(z);
    return it == counts_.end() ? 0 : it->second;
}

Count DegreeSequence::sigma(Degree z) const
{
    Count total = 0;
    for (auto it = counts_.lower_bound(z); it != counts_.end(); ++it)
        total += it->second;
    return total;
}

std::vector<Degree> DegreeSequence::values() const
{
    std::vector<Degree> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (auto [value, mult] : counts_)
        out.insert(out.end(), static_cast<std::size_t>(mult), value);
    return out;
}

std::vector<Degree> DegreeSequence::values_descending() const
{
    auto out = values();
    std::reverse(out.begin(), out.end());
    return out;
}

std::string DegreeSequence::str() const
{
    std::ostringstream os;
    bool first = true;
    for (auto [value, mult] : counts_)
        for (Count i = 0; i < mult; ++i) {
            if (! first)
                os << ',';
            os << value;
            first = false;
        }
    return os.str();
}

std::strong_ordering operator<=>(const DegreeSequence & a, const DegreeSequence & b)
{
    auto x = a.values(), y = b.values();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

DegreeSequence make_degree_sequence(std::span<const Degree> values)
{
    return DegreeSequence(values);
}

DegreeSequence multiset_union(const DegreeSequence & a, const DegreeSequence & b)
{
    auto counts = a.counts();
    for (auto [value, mult] : b.counts())
        counts[value] = checked_add(counts[value], mult);
    return DegreeSequence::from_counts(counts);
}

DegreeSequence multiset_difference(const DegreeSequence & a, const DegreeSequence & b)
{
    std::map<Degree, Count> counts;
    for (auto [value, mult] : a.counts())
        counts[value] = std::max<Count>(0, mult - b.mu(value));
    return DegreeSequence::from_counts(counts);
}

bool is_graphical(const DegreeSequence & d)
{
    if (d.empty())
        return true;
    return d.sum() % 2 == 0 && d.sum() >= 2 * d.max();
}

bool is_trivial(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    return d.empty() || d.max() < k;
}

SigmaProfile::SigmaProfile(std::vector<Count> values) : values_(std::move(values))
{
    if (values_.empty())
        values_.push_back(0);
    for (std::size_t z = 0; z < values_.size(); ++z) {
        if (values_[z] < 0)
            throw InvalidInput("sigma profile has a negative entry at z=" + std::to_string(z));
        if (z > 0 && values_[z] > values_[z - 1])
            throw InvalidInput("sigma profile is not nonincreasing at z=" + std::to_string(z));
    }
    while (values_.size() > 1 && values_.back() == 0)
        values_.pop_back();
}

Count SigmaProfile::at(Degree z) const
{
    if (z < 0 || static_cast<std::size_t>(z) >= values_.size())
        return 0;
    return values_[static_cast<std::size_t>(z)];
}

SigmaProfile sigma(const DegreeSequence & d)
{
    if (d.empty())
        return SigmaProfile({0});
    std::vector<Count> values(static_cast<std::size_t>(d.max()) + 1, 0);
    // suffix sums of the multiplicities
    for (auto [value, mult] : d.counts())
        values[static_cast<std::size_t>(value)] = mult;
    for (std::size_t z = values.size() - 1; z > 0; --z)
        values[z - 1] += values[z];
    return SigmaProfile(std::move(values));
}

DegreeSequence from_sigma(const SigmaProfile & p)
{
    std::map<Degree, Count> counts;
    const auto & values = p.values();
    for (std::size_t z = 0; z < values.size(); ++z) {
        Count next = z + 1 < values.size() ? values[z + 1] : 0;
        if (values[z] - next > 0)
            counts[static_cast<Degree>(z)] = values[z] - next;
    }
    return DegreeSequence::from_counts(counts);
}

Count mu(const DegreeSequence & d, Degree z)
{
    return d.mu(z);
}

std::string render_ferrers(const DegreeSequence & d, Degree k)
{
    require_positive_k(k);
    std::ostringstream os;
    for (auto value : d.values_descending()) {
        for (Degree c = 0; c < std::max(value, k); ++c) {
            if (c == k)
                os << '|';
            os << (c < value ? "■" : " ");
        }
        if (value <= k)
            os << '|';
        os << '\n';
    }
    return os.str();
}

}
