#pragma once

#include <cstdint>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean {

// A verified two-sided ideal, stored as an ascending set of element indices.
// Invariants: contains zero, closed under addition and negation, closed under
// left and right multiplication by every ring element.
struct Ideal {
    RingPtr ring;
    std::vector<std::uint32_t> members;  // ascending

    std::size_t size() const { return members.size(); }
    bool contains(std::uint32_t index) const;
};

// True iff members is a two-sided ideal of ring (the Ideal invariants).
bool is_ideal_set(const RingPtr& ring, const std::vector<std::uint32_t>& members);

// Smallest two-sided ideal containing the generators: worklist closure under
// addition, negation, and left/right multiplication by all ring elements.
Ideal ideal_closure(const RingPtr& ring, const std::vector<Elem>& generators);

// True iff every member is nilpotent.
bool is_nil_ideal(const Ideal& ideal);

// Upper nilradical Nil*(R) = {x : the principal two-sided ideal of x is nil},
// the largest nil ideal. The result is verified against the Ideal invariants.
Ideal upper_nilradical(const RingPtr& ring);

// Jacobson radical J(R) = {x : 1 - r*x is a unit for every r}, computed by
// the definition-level scan. For finite rings J(R) = Nil*(R); this is the
// independent cross-check for upper_nilradical.
Ideal jacobson_radical(const RingPtr& ring);

// Ring of cosets R/I with canonical indexing by ascending minimal coset
// member. Throws NotAnIdeal if the member set fails the Ideal invariants.
RingPtr quotient_by_ideal(const RingPtr& ring, const Ideal& ideal);

// True iff the ring has exactly 3 elements and 1 != 0. Any unital ring of
// order 3 has additive group generated by 1, which forces the Z_3 tables, so
// cardinality plus unitality decides the isomorphism class.
bool is_z3(const Ring& ring);

}  // namespace nilclean
