#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilclean/errors.hpp"
#include "nilclean/ring_spec.hpp"

namespace nilclean {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Default order cap for ring construction; the CLI exposes it as --max-order.
inline constexpr std::uint64_t kDefaultOrderCap = 65536;

// Hard engine ceiling: element indices are 32-bit and several passes hold
// order-sized scratch, so orders above 2^24 are rejected regardless of cap.
inline constexpr std::uint64_t kMaxSupportedOrder = std::uint64_t(1) << 24;

// Operation tables are memoized eagerly for rings up to this order
// (2 * 256^2 table entries at most); larger rings evaluate structurally.
inline constexpr std::uint32_t kEagerTableLimit = 256;

class Elem;

// A finite unital ring with canonical element indexing.
//
// Elements are the indices 0..order()-1. The indexing is part of the public
// contract (the CLI and all reports refer to elements by index):
//
//   Zn           index = residue
//   Product      index = i_left * |right| + i_right
//   Matrix       row-major big-endian mixed radix over base-element indices,
//                entry (0,0) most significant
//   quotient     cosets indexed by ascending minimal member
//   corner eR    members of eR indexed by ascending ambient index
//
// Rings are immutable after construction and safe to share across threads.
class Ring {
public:
    virtual ~Ring() = default;
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    std::uint32_t order() const { return order_; }
    std::uint32_t zero() const { return zero_; }
    std::uint32_t one() const { return one_; }
    bool is_zero_ring() const { return order_ == 1; }

    // Additive order of 1 (equals 1 exactly in the zero ring).
    std::uint64_t characteristic() const { return characteristic_; }

    // The structural description this ring was built from; empty for rings
    // derived at runtime (quotients by explicit ideals, corner rings).
    const std::optional<RingSpec>& spec() const { return spec_; }
    const std::string& name() const { return name_; }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
        return add_table_.empty() ? add_impl(x, y)
                                  : add_table_[std::size_t(x) * order_ + y];
    }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return mul_table_.empty() ? mul_impl(x, y)
                                  : mul_table_[std::size_t(x) * order_ + y];
    }
    std::uint32_t neg(std::uint32_t x) const {
        return neg_table_.empty() ? neg_impl(x) : neg_table_[x];
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }

    // Image of an integer under the unique unital map Z -> R.
    std::uint32_t from_int(long long m) const;

    // x^k by square-and-multiply; x^0 = 1.
    std::uint32_t pow(std::uint32_t x, std::uint64_t k) const;

    Elem elem(std::uint32_t index) const;

protected:
    Ring(std::uint64_t order, std::optional<RingSpec> spec, std::string name);

    virtual std::uint32_t add_impl(std::uint32_t x, std::uint32_t y) const = 0;
    virtual std::uint32_t neg_impl(std::uint32_t x) const = 0;
    virtual std::uint32_t mul_impl(std::uint32_t x, std::uint32_t y) const = 0;

    // Concrete (final) constructors call this last: records zero/one, checks
    // the unitality invariants, computes the characteristic and memo tables.
    void finalize(std::uint32_t zero, std::uint32_t one);

private:
    std::uint32_t order_;
    std::uint32_t zero_ = 0;
    std::uint32_t one_ = 0;
    std::uint64_t characteristic_ = 1;
    std::optional<RingSpec> spec_;
    std::string name_;
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
};

// An element of a specific ring: a ring identity token plus a canonical
// index. Elements of different rings never compare equal and refuse to
// combine arithmetically. An Elem must not outlive its ring.
class Elem {
public:
    Elem() = default;
    Elem(const Ring* ring, std::uint32_t index) : ring_(ring), index_(index) {}

    const Ring& ring() const { return *ring_; }
    const Ring* ring_token() const { return ring_; }
    std::uint32_t index() const { return index_; }

    friend bool operator==(Elem a, Elem b) {
        return a.ring_ == b.ring_ && a.index_ == b.index_;
    }
    friend bool operator!=(Elem a, Elem b) { return !(a == b); }

private:
    const Ring* ring_ = nullptr;
    std::uint32_t index_ = 0;
};

// ---- element-level operations (throw RingMismatch on token disagreement) ----

Elem add(Elem x, Elem y);
Elem neg(Elem x);
Elem sub(Elem x, Elem y);
Elem mul(Elem x, Elem y);

inline Elem operator+(Elem x, Elem y) { return add(x, y); }
inline Elem operator-(Elem x, Elem y) { return sub(x, y); }
inline Elem operator-(Elem x) { return neg(x); }
inline Elem operator*(Elem x, Elem y) { return mul(x, y); }

Elem of_int(const Ring& ring, long long m);
Elem pow(Elem x, std::uint64_t k);

bool is_idempotent(Elem x);

// Smallest n >= 1 with x^n = 0, or nullopt if x is not nilpotent.
// Power iteration with seen-set cycle detection.
std::optional<std::uint32_t> nilpotency_index(Elem x);

// Two-sided inverse by exhaustive search, or nullopt.
std::optional<Elem> try_inverse(Elem x);

// (1 + q)^-1 for nilpotent q via the alternating geometric series
// sum_{i<n} (-q)^i. Throws PreconditionViolated if q is not nilpotent.
Elem unipotent_inverse(Elem q);

bool is_central(Elem x);

enum class SubsetKind { Idempotents, Nilpotents, Units, Involutions, CentralIdempotents };

// All elements satisfying the predicate, in ascending index order.
std::vector<Elem> special_subset(const Ring& ring, SubsetKind kind);

// Per-index membership masks (order-sized); cheaper than element lists in
// inner loops.
std::vector<std::uint8_t> nilpotent_mask(const Ring& ring);
std::vector<std::uint8_t> unit_mask(const Ring& ring);

// ---- sampled ring-axiom check ----

struct AxiomFailure {
    std::string law;  // which identity failed
    std::uint32_t x, y, z;
};

// Checks associativity/commutativity of +, associativity of *, both
// distributive laws and the identity laws on random triples. Returns the
// first failing triple, or nullopt if all samples pass.
std::optional<AxiomFailure> check_ring_axioms(const Ring& ring,
                                              std::size_t triples,
                                              std::uint64_t seed);

// ---- construction ----

// Builds the ring described by spec. Every node of the spec tree must have
// order <= order_cap (and <= kMaxSupportedOrder). Deterministic: the same
// spec always yields identical indexing and tables.
RingPtr construct_ring(const RingSpec& spec, std::uint64_t order_cap = kDefaultOrderCap);

// The corner ring eR for a central idempotent e: the subset {e*x : x in R}
// under ambient operations, with identity e. Throws PreconditionViolated if
// e is not a central idempotent.
RingPtr corner_ring(const RingPtr& ambient, std::uint32_t central_idempotent);

}  // namespace nilclean
