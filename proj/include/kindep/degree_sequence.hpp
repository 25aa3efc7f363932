#pragma once

#include "kindep/errors.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kindep {

/// Finite multiset of nonnegative integers, stored as value -> multiplicity.
/// Equality is multiset equality; the canonical text form is the
/// nondecreasing value list.
class DegreeSequence {
public:
    DegreeSequence() = default;
    DegreeSequence(std::initializer_list<Degree> values);
    explicit DegreeSequence(std::span<const Degree> values);

    static DegreeSequence from_counts(const std::map<Degree, Count> & counts);
    static DegreeSequence zeros(Count n);

    Count order() const { return order_; }
    Count sum() const { return sum_; }
    bool empty() const { return order_ == 0; }
    bool all_zero() const { return counts_.empty() || (counts_.size() == 1 && counts_.begin()->first == 0); }

    /// Largest element. Throws on the empty multiset.
    Degree max() const;
    std::optional<Degree> smallest_positive() const;

    Count mu(Degree z) const;
    Count sigma(Degree z) const;
    bool contains(Degree x) const { return mu(x) > 0; }

    const std::map<Degree, Count> & counts() const { return counts_; }
    std::vector<Degree> values() const;
    std::vector<Degree> values_descending() const;
    std::string str() const;

    friend bool operator==(const DegreeSequence &, const DegreeSequence &) = default;
    /// Lexicographic on the nondecreasing value list; only used for ordered containers.
    friend std::strong_ordering operator<=>(const DegreeSequence & a, const DegreeSequence & b);

private:
    std::map<Degree, Count> counts_;
    Count order_ = 0;
    Count sum_ = 0;

    void add(Degree value, Count multiplicity);
};

DegreeSequence make_degree_sequence(std::span<const Degree> values);

DegreeSequence multiset_union(const DegreeSequence & a, const DegreeSequence & b);
DegreeSequence multiset_difference(const DegreeSequence & a, const DegreeSequence & b);

/// Degree sequence of some loopless multigraph: even sum and sum >= 2 max.
bool is_graphical(const DegreeSequence & d);
/// max(D) < k. The empty multiset is trivial.
bool is_trivial(const DegreeSequence & d, Degree k);

/// Conjugate profile [sigma(0), ..., sigma(M)] with sigma(z) = #{x in D : x >= z}.
/// Trailing zeros are dropped, except that the profile of the empty multiset is [0].
class SigmaProfile {
public:
    explicit SigmaProfile(std::vector<Count> values);

    Count at(Degree z) const;
    const std::vector<Count> & values() const { return values_; }

    friend bool operator==(const SigmaProfile &, const SigmaProfile &) = default;

private:
    std::vector<Count> values_;
};

SigmaProfile sigma(const DegreeSequence & d);
DegreeSequence from_sigma(const SigmaProfile & p);
Count mu(const DegreeSequence & d, Degree z);

/// Ferrers diagram, one row per element in nonincreasing order, with a
/// '|' rule drawn after column k.
std::string render_ferrers(const DegreeSequence & d, Degree k);

}
