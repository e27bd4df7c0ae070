#pragma once

#include <vector>

#include "nsgap/common.hpp"

namespace nsgap {

/**
 * Apery set of a numerical semigroup relative to a nonzero element a:
 * the a least members of the semigroup, one per residue class mod a.
 * elements[r] is the least member congruent to r, so elements[0] == 0
 * and elements[r] - a is never a member.
 */
struct AperySet {
    Int relative_to = 1;
    std::vector<Int> elements; // size == relative_to, elements[r] % relative_to == r

    std::vector<Int> sorted() const; // the same elements in ascending order
};

// Largest gap of the underlying semigroup: max(elements) - relative_to.
// Equals -1 exactly when the semigroup is all of N0.
Int frobenius_from_apery(const AperySet& ap);

/**
 * A numerical semigroup: an additive submonoid of the non-negative integers
 * with finite complement. Canonical value built by from_generators(); caches
 * the minimal generating set, the gap set (ascending) and the Frobenius
 * number. Immutable after construction, so values can be shared freely.
 */
class NumericalSemigroup {
public:
    // Canonicalizes an arbitrary generating set: drops generators that are
    // non-negative combinations of the others, then computes the gap set
    // exactly. Throws EmptyInputError, GcdNotOneError (complement would be
    // infinite), or BadParametersError for non-positive entries.
    static NumericalSemigroup from_generators(const std::vector<Int>& gens);

    const std::vector<Int>& minimal_generators() const { return minimal_generators_; }
    Int multiplicity() const { return minimal_generators_.front(); }
    Int embedding_dimension() const { return static_cast<Int>(minimal_generators_.size()); }
    Int frobenius() const { return frobenius_; } // -1 when there are no gaps
    const std::vector<Int>& gaps() const { return gaps_; }
    Int genus() const { return static_cast<Int>(gaps_.size()); }

    // Membership query; negative n is allowed and never a member.
    bool contains(Int n) const;

    // Apery set relative to a. Throws NotAMemberError when a <= 0 or a is
    // not a member.
    AperySet apery_set(Int a) const;

    bool is_maximal_embedding_dimension() const {
        return embedding_dimension() == multiplicity();
    }

private:
    NumericalSemigroup() = default;

    std::vector<Int> minimal_generators_; // strictly increasing
    std::vector<Int> gaps_;               // strictly increasing
    Int frobenius_ = -1;
};

} // namespace nsgap
