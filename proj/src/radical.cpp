#include "nilclean/radical.hpp"

#include <algorithm>
#include <string>

#include "ring_impl.hpp"

namespace nilclean {

bool Ideal::contains(std::uint32_t index) const {
    return std::binary_search(members.begin(), members.end(), index);
}

bool is_ideal_set(const RingPtr& ring, const std::vector<std::uint32_t>& members) {
    const Ring& r = *ring;
    std::vector<std::uint8_t> in(r.order(), 0);
    for (std::uint32_t m : members) {
        if (m >= r.order()) return false;
        in[m] = 1;
    }
    if (!in[r.zero()]) return false;
    for (std::uint32_t m : members) {
        if (!in[r.neg(m)]) return false;
    }
    for (std::uint32_t m1 : members) {
        for (std::uint32_t m2 : members) {
            if (!in[r.add(m1, m2)]) return false;
        }
    }
    for (std::uint32_t m : members) {
        for (std::uint32_t x = 0; x < r.order(); ++x) {
            if (!in[r.mul(x, m)] || !in[r.mul(m, x)]) return false;
        }
    }
    return true;
}

namespace {

// Worklist closure under negation, pairwise addition, and left/right
// multiplication by all ring elements. When only_within is given, returns
// nullopt as soon as a member outside that mask appears (the closure only
// grows, so such an ideal can never satisfy the mask).
std::optional<std::vector<std::uint32_t>> closure_members(
    const Ring& r, const std::vector<std::uint32_t>& generators,
    const std::vector<std::uint8_t>* only_within) {
    std::vector<std::uint8_t> in(r.order(), 0);
    std::vector<std::uint32_t> members;
    bool aborted = false;

    auto insert = [&](std::uint32_t v) {
        if (in[v]) return;
        if (only_within != nullptr && !(*only_within)[v]) {
            aborted = true;
            return;
        }
        in[v] = 1;
        members.push_back(v);
    };

    insert(r.zero());
    for (std::uint32_t g : generators) {
        insert(g);
        if (aborted) return std::nullopt;
    }

    for (std::size_t qi = 0; qi < members.size() && !aborted; ++qi) {
        const std::uint32_t z = members[qi];
        insert(r.neg(z));
        for (std::size_t j = 0; j < members.size() && !aborted; ++j)
            insert(r.add(z, members[j]));
        for (std::uint32_t x = 0; x < r.order() && !aborted; ++x) {
            insert(r.mul(x, z));
            insert(r.mul(z, x));
        }
    }
    if (aborted) return std::nullopt;
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

Ideal ideal_closure(const RingPtr& ring, const std::vector<Elem>& generators) {
    std::vector<std::uint32_t> indices;
    indices.reserve(generators.size());
    for (Elem g : generators) {
        if (g.ring_token() != ring.get())
            throw RingMismatch("ideal_closure: generator from a different ring");
        indices.push_back(g.index());
    }
    auto members = closure_members(*ring, indices, nullptr);
    return Ideal{ring, std::move(*members)};
}

bool is_nil_ideal(const Ideal& ideal) {
    for (std::uint32_t m : ideal.members) {
        if (!nilpotency_index(Elem(ideal.ring.get(), m))) return false;
    }
    return true;
}

Ideal upper_nilradical(const RingPtr& ring) {
    const Ring& r = *ring;
    const auto nil = nilpotent_mask(r);
    std::vector<std::uint8_t> in_radical(r.order(), 0);

    for (std::uint32_t x = 0; x < r.order(); ++x) {
        // x is in Nil* iff its principal two-sided ideal is nil; any member of
        // a verified nil ideal generates a nil sub-ideal, so mark them all.
        if (!nil[x] || in_radical[x]) continue;
        auto closed = closure_members(r, {x}, &nil);
        if (closed) {
            for (std::uint32_t m : *closed) in_radical[m] = 1;
        }
    }

    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < r.order(); ++x)
        if (in_radical[x]) members.push_back(x);

    Ideal result{ring, std::move(members)};
    if (!is_ideal_set(ring, result.members))
        throw RingError("internal: upper nilradical of " + r.name() +
                        " failed the ideal invariants");
    return result;
}

Ideal jacobson_radical(const RingPtr& ring) {
    const Ring& r = *ring;
    const auto units = unit_mask(r);
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < r.order(); ++x) {
        bool quasi_regular = true;
        for (std::uint32_t y = 0; y < r.order() && quasi_regular; ++y) {
            if (!units[r.sub(r.one(), r.mul(y, x))]) quasi_regular = false;
        }
        if (quasi_regular) members.push_back(x);
    }
    Ideal result{ring, std::move(members)};
    if (!is_ideal_set(ring, result.members))
        throw RingError("internal: Jacobson radical of " + r.name() +
                        " failed the ideal invariants");
    return result;
}

RingPtr quotient_by_ideal(const RingPtr& ring, const Ideal& ideal) {
    if (ideal.ring.get() != ring.get())
        throw RingMismatch("quotient_by_ideal: ideal belongs to a different ring");
    if (!is_ideal_set(ring, ideal.members))
        throw NotAnIdeal("quotient_by_ideal: member set is not a two-sided ideal of " +
                         ring->name());
    std::string name =
        ring->name() + "/I(" + std::to_string(ideal.members.size()) + ")";
    return std::make_shared<detail::QuotientRing>(ring, ideal.members, std::nullopt,
                                                  std::move(name));
}

bool is_z3(const Ring& ring) { return ring.order() == 3 && ring.one() != ring.zero(); }

}  // namespace nilclean
