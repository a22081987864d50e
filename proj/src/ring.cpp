#include "nilclean/ring.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "ring_impl.hpp"

namespace nilclean {

namespace {

// neg tables stay order-sized, so they are affordable far beyond the
// quadratic memo limit.
constexpr std::uint32_t kNegTableLimit = 65536;

}  // namespace

// ---------------------------------------------------------------------------
// Ring base
// ---------------------------------------------------------------------------

Ring::Ring(std::uint64_t order, std::optional<RingSpec> spec, std::string name)
    : order_(static_cast<std::uint32_t>(order)),
      spec_(std::move(spec)),
      name_(std::move(name)) {
    if (order == 0) throw RingError("ring order must be positive");
    if (order > kMaxSupportedOrder)
        throw OrderCapExceeded("ring order " + std::to_string(order) +
                               " exceeds the supported element-index range");
}

void Ring::finalize(std::uint32_t zero, std::uint32_t one) {
    if (zero >= order_ || one >= order_)
        throw RingError("zero/one index out of range in " + name_);
    zero_ = zero;
    one_ = one;
    if ((one_ == zero_) != (order_ == 1))
        throw RingError("one == zero must hold exactly in the zero ring: " + name_);

    if (order_ <= kNegTableLimit) {
        neg_table_.resize(order_);
        for (std::uint32_t x = 0; x < order_; ++x) neg_table_[x] = neg_impl(x);
    }
    if (order_ <= kEagerTableLimit) {
        const std::size_t n = order_;
        add_table_.resize(n * n);
        mul_table_.resize(n * n);
        for (std::uint32_t x = 0; x < order_; ++x) {
            for (std::uint32_t y = 0; y < order_; ++y) {
                add_table_[std::size_t(x) * n + y] = add_impl(x, y);
                mul_table_[std::size_t(x) * n + y] = mul_impl(x, y);
            }
        }
    }

    // additive order of 1; equals 1 exactly in the zero ring
    std::uint64_t c = 1;
    std::uint32_t acc = one_;
    while (acc != zero_) {
        acc = add(acc, one_);
        ++c;
    }
    characteristic_ = c;
}

std::uint32_t Ring::from_int(long long m) const {
    const long long c = static_cast<long long>(characteristic_);
    long long r = m % c;
    if (r < 0) r += c;
    std::uint64_t k = static_cast<std::uint64_t>(r);
    std::uint32_t result = zero_;
    std::uint32_t addend = one_;
    while (k != 0) {
        if (k & 1) result = add(result, addend);
        addend = add(addend, addend);
        k >>= 1;
    }
    return result;
}

std::uint32_t Ring::pow(std::uint32_t x, std::uint64_t k) const {
    std::uint32_t result = one_;
    std::uint32_t base = x;
    while (k != 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

Elem Ring::elem(std::uint32_t index) const {
    if (index >= order_)
        throw RingError("element index " + std::to_string(index) + " out of range in " +
                        name_ + " (order " + std::to_string(order_) + ")");
    return Elem(this, index);
}

// ---------------------------------------------------------------------------
// element-level operations
// ---------------------------------------------------------------------------

namespace {

const Ring& same_ring(Elem x, Elem y) {
    if (x.ring_token() == nullptr || x.ring_token() != y.ring_token())
        throw RingMismatch("elements belong to different rings");
    return x.ring();
}

}  // namespace

Elem add(Elem x, Elem y) {
    const Ring& r = same_ring(x, y);
    return Elem(&r, r.add(x.index(), y.index()));
}

Elem neg(Elem x) {
    const Ring& r = x.ring();
    return Elem(&r, r.neg(x.index()));
}

Elem sub(Elem x, Elem y) {
    const Ring& r = same_ring(x, y);
    return Elem(&r, r.sub(x.index(), y.index()));
}

Elem mul(Elem x, Elem y) {
    const Ring& r = same_ring(x, y);
    return Elem(&r, r.mul(x.index(), y.index()));
}

Elem of_int(const Ring& ring, long long m) { return Elem(&ring, ring.from_int(m)); }

Elem pow(Elem x, std::uint64_t k) {
    const Ring& r = x.ring();
    return Elem(&r, r.pow(x.index(), k));
}

bool is_idempotent(Elem x) {
    const Ring& r = x.ring();
    return r.mul(x.index(), x.index()) == x.index();
}

std::optional<std::uint32_t> nilpotency_index(Elem x) {
    const Ring& r = x.ring();
    std::unordered_set<std::uint32_t> seen;
    std::uint32_t p = x.index();
    std::uint32_t n = 1;
    for (;;) {
        if (p == r.zero()) return n;
        if (!seen.insert(p).second) return std::nullopt;  // cycle without 0
        p = r.mul(p, x.index());
        ++n;
    }
}

std::optional<Elem> try_inverse(Elem x) {
    const Ring& r = x.ring();
    for (std::uint32_t y = 0; y < r.order(); ++y) {
        if (r.mul(x.index(), y) == r.one() && r.mul(y, x.index()) == r.one())
            return Elem(&r, y);
    }
    return std::nullopt;
}

Elem unipotent_inverse(Elem q) {
    const Ring& r = q.ring();
    auto n = nilpotency_index(q);
    if (!n) throw PreconditionViolated("unipotent_inverse requires a nilpotent argument");
    // (1+q)^-1 = sum_{i<n} (-q)^i
    const std::uint32_t minus_q = r.neg(q.index());
    std::uint32_t acc = r.one();
    std::uint32_t term = r.one();
    for (std::uint32_t i = 1; i < *n; ++i) {
        term = r.mul(term, minus_q);
        acc = r.add(acc, term);
    }
    return Elem(&r, acc);
}

bool is_central(Elem x) {
    const Ring& r = x.ring();
    for (std::uint32_t y = 0; y < r.order(); ++y) {
        if (r.mul(x.index(), y) != r.mul(y, x.index())) return false;
    }
    return true;
}

std::vector<std::uint8_t> nilpotent_mask(const Ring& ring) {
    std::vector<std::uint8_t> mask(ring.order(), 0);
    for (std::uint32_t x = 0; x < ring.order(); ++x) {
        if (nilpotency_index(Elem(&ring, x))) mask[x] = 1;
    }
    return mask;
}

std::vector<std::uint8_t> unit_mask(const Ring& ring) {
    // x*y = 1 marks x right-invertible and y left-invertible; in a finite
    // ring an element with both one-sided inverses is a two-sided unit.
    const std::uint32_t n = ring.order();
    std::vector<std::uint8_t> has_right(n, 0), has_left(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
            if (ring.mul(x, y) == ring.one()) {
                has_right[x] = 1;
                has_left[y] = 1;
            }
        }
    }
    std::vector<std::uint8_t> mask(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) mask[x] = has_right[x] & has_left[x];
    return mask;
}

std::vector<Elem> special_subset(const Ring& ring, SubsetKind kind) {
    std::vector<Elem> out;
    switch (kind) {
        case SubsetKind::Idempotents:
            for (std::uint32_t x = 0; x < ring.order(); ++x)
                if (ring.mul(x, x) == x) out.emplace_back(&ring, x);
            break;
        case SubsetKind::Nilpotents: {
            auto mask = nilpotent_mask(ring);
            for (std::uint32_t x = 0; x < ring.order(); ++x)
                if (mask[x]) out.emplace_back(&ring, x);
            break;
        }
        case SubsetKind::Units: {
            auto mask = unit_mask(ring);
            for (std::uint32_t x = 0; x < ring.order(); ++x)
                if (mask[x]) out.emplace_back(&ring, x);
            break;
        }
        case SubsetKind::Involutions:
            for (std::uint32_t x = 0; x < ring.order(); ++x)
                if (ring.mul(x, x) == ring.one()) out.emplace_back(&ring, x);
            break;
        case SubsetKind::CentralIdempotents:
            for (std::uint32_t x = 0; x < ring.order(); ++x)
                if (ring.mul(x, x) == x && is_central(Elem(&ring, x)))
                    out.emplace_back(&ring, x);
            break;
    }
    return out;
}

std::optional<AxiomFailure> check_ring_axioms(const Ring& ring,
                                              std::size_t triples,
                                              std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, ring.order() - 1);
    for (std::size_t i = 0; i < triples; ++i) {
        const std::uint32_t x = dist(gen), y = dist(gen), z = dist(gen);
        if (ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z)))
            return AxiomFailure{"additive associativity", x, y, z};
        if (ring.add(x, y) != ring.add(y, x))
            return AxiomFailure{"additive commutativity", x, y, z};
        if (ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z)))
            return AxiomFailure{"multiplicative associativity", x, y, z};
        if (ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y), ring.mul(x, z)))
            return AxiomFailure{"left distributivity", x, y, z};
        if (ring.mul(ring.add(y, z), x) != ring.add(ring.mul(y, x), ring.mul(z, x)))
            return AxiomFailure{"right distributivity", x, y, z};
        if (ring.mul(ring.one(), x) != x || ring.mul(x, ring.one()) != x)
            return AxiomFailure{"identity law", x, y, z};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// concrete representations
// ---------------------------------------------------------------------------

namespace detail {

ZnRing::ZnRing(std::uint64_t n, std::optional<RingSpec> spec, std::string name)
    : Ring(n, std::move(spec), std::move(name)), n_(n) {
    finalize(0, n == 1 ? 0 : 1);
}

std::uint32_t ZnRing::add_impl(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>((std::uint64_t(x) + y) % n_);
}

std::uint32_t ZnRing::neg_impl(std::uint32_t x) const {
    return x == 0 ? 0 : static_cast<std::uint32_t>(n_ - x);
}

std::uint32_t ZnRing::mul_impl(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>((std::uint64_t(x) * y) % n_);
}

ProductRing::ProductRing(RingPtr left, RingPtr right, std::optional<RingSpec> spec,
                         std::string name)
    : Ring(std::uint64_t(left->order()) * right->order(), std::move(spec), std::move(name)),
      left_(std::move(left)),
      right_(std::move(right)),
      right_order_(right_->order()) {
    finalize(left_->zero() * right_order_ + right_->zero(),
             left_->one() * right_order_ + right_->one());
}

std::uint32_t ProductRing::add_impl(std::uint32_t x, std::uint32_t y) const {
    return left_->add(x / right_order_, y / right_order_) * right_order_ +
           right_->add(x % right_order_, y % right_order_);
}

std::uint32_t ProductRing::neg_impl(std::uint32_t x) const {
    return left_->neg(x / right_order_) * right_order_ + right_->neg(x % right_order_);
}

std::uint32_t ProductRing::mul_impl(std::uint32_t x, std::uint32_t y) const {
    return left_->mul(x / right_order_, y / right_order_) * right_order_ +
           right_->mul(x % right_order_, y % right_order_);
}

MatrixRing::MatrixRing(std::uint32_t k, RingPtr base, std::uint64_t order,
                       std::optional<RingSpec> spec, std::string name)
    : Ring(order, std::move(spec), std::move(name)),
      k_(k),
      digit_count_(k * k),
      base_(std::move(base)),
      base_order_(base_->order()) {
    if (digit_count_ > kMaxDigits)
        throw RingError("matrix dimension too large for the index encoding");
    Digits zero_digits{};
    for (std::uint32_t t = 0; t < digit_count_; ++t) zero_digits[t] = base_->zero();
    finalize(encode(zero_digits), identity_index());
}

void MatrixRing::decode(std::uint32_t index, Digits& out) const {
    std::uint32_t x = index;
    for (std::uint32_t t = digit_count_; t-- > 0;) {
        out[t] = x % base_order_;
        x /= base_order_;
    }
}

std::uint32_t MatrixRing::encode(const Digits& digits) const {
    std::uint64_t acc = 0;
    for (std::uint32_t t = 0; t < digit_count_; ++t) acc = acc * base_order_ + digits[t];
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t MatrixRing::identity_index() const {
    Digits d{};
    for (std::uint32_t r = 0; r < k_; ++r)
        for (std::uint32_t c = 0; c < k_; ++c)
            d[r * k_ + c] = (r == c) ? base_->one() : base_->zero();
    return encode(d);
}

std::uint32_t MatrixRing::add_impl(std::uint32_t x, std::uint32_t y) const {
    Digits a, b;
    decode(x, a);
    decode(y, b);
    for (std::uint32_t t = 0; t < digit_count_; ++t) a[t] = base_->add(a[t], b[t]);
    return encode(a);
}

std::uint32_t MatrixRing::neg_impl(std::uint32_t x) const {
    Digits a;
    decode(x, a);
    for (std::uint32_t t = 0; t < digit_count_; ++t) a[t] = base_->neg(a[t]);
    return encode(a);
}

std::uint32_t MatrixRing::mul_impl(std::uint32_t x, std::uint32_t y) const {
    Digits a, b, out{};
    decode(x, a);
    decode(y, b);
    for (std::uint32_t r = 0; r < k_; ++r) {
        for (std::uint32_t c = 0; c < k_; ++c) {
            std::uint32_t acc = base_->zero();
            for (std::uint32_t l = 0; l < k_; ++l)
                acc = base_->add(acc, base_->mul(a[r * k_ + l], b[l * k_ + c]));
            out[r * k_ + c] = acc;
        }
    }
    return encode(out);
}

namespace {

struct CosetLayout {
    std::vector<std::uint32_t> reps;
    std::vector<std::uint32_t> elem_to_coset;
};

// Scanning base elements in ascending order guarantees each coset is first
// reached through its minimal member, so coset indices come out sorted by
// minimal representative.
CosetLayout build_cosets(const Ring& base, const std::vector<std::uint32_t>& ideal_members) {
    constexpr std::uint32_t kUnassigned = UINT32_MAX;
    CosetLayout layout;
    layout.elem_to_coset.assign(base.order(), kUnassigned);
    for (std::uint32_t x = 0; x < base.order(); ++x) {
        if (layout.elem_to_coset[x] != kUnassigned) continue;
        const auto coset = static_cast<std::uint32_t>(layout.reps.size());
        layout.reps.push_back(x);
        for (std::uint32_t i : ideal_members)
            layout.elem_to_coset[base.add(x, i)] = coset;
    }
    return layout;
}

}  // namespace

QuotientRing::QuotientRing(RingPtr base, const std::vector<std::uint32_t>& ideal_members,
                           std::optional<RingSpec> spec, std::string name)
    : Ring(
          [&] {
              auto layout = build_cosets(*base, ideal_members);
              return static_cast<std::uint64_t>(layout.reps.size());
          }(),
          std::move(spec), std::move(name)),
      base_(std::move(base)) {
    auto layout = build_cosets(*base_, ideal_members);
    reps_ = std::move(layout.reps);
    elem_to_coset_ = std::move(layout.elem_to_coset);
    finalize(elem_to_coset_[base_->zero()], elem_to_coset_[base_->one()]);
}

std::uint32_t QuotientRing::add_impl(std::uint32_t x, std::uint32_t y) const {
    return elem_to_coset_[base_->add(reps_[x], reps_[y])];
}

std::uint32_t QuotientRing::neg_impl(std::uint32_t x) const {
    return elem_to_coset_[base_->neg(reps_[x])];
}

std::uint32_t QuotientRing::mul_impl(std::uint32_t x, std::uint32_t y) const {
    return elem_to_coset_[base_->mul(reps_[x], reps_[y])];
}

std::vector<std::uint32_t> CornerRing::collect_members(const Ring& ambient,
                                                       std::uint32_t idempotent) {
    std::vector<std::uint8_t> seen(ambient.order(), 0);
    for (std::uint32_t x = 0; x < ambient.order(); ++x) seen[ambient.mul(idempotent, x)] = 1;
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < ambient.order(); ++x)
        if (seen[x]) members.push_back(x);
    return members;  // ascending ambient index
}

CornerRing::CornerRing(RingPtr ambient, std::uint32_t idempotent, std::string name)
    : Ring(collect_members(*ambient, idempotent).size(), std::nullopt, std::move(name)),
      ambient_(std::move(ambient)),
      members_(collect_members(*ambient_, idempotent)) {
    ambient_to_local_.assign(ambient_->order(), UINT32_MAX);
    for (std::uint32_t i = 0; i < members_.size(); ++i) ambient_to_local_[members_[i]] = i;
    finalize(ambient_to_local_[ambient_->zero()], ambient_to_local_[idempotent]);
}

std::uint32_t CornerRing::add_impl(std::uint32_t x, std::uint32_t y) const {
    return ambient_to_local_[ambient_->add(members_[x], members_[y])];
}

std::uint32_t CornerRing::neg_impl(std::uint32_t x) const {
    return ambient_to_local_[ambient_->neg(members_[x])];
}

std::uint32_t CornerRing::mul_impl(std::uint32_t x, std::uint32_t y) const {
    return ambient_to_local_[ambient_->mul(members_[x], members_[y])];
}

}  // namespace detail

RingPtr corner_ring(const RingPtr& ambient, std::uint32_t central_idempotent) {
    if (!ambient) throw RingError("corner_ring: null ambient ring");
    if (central_idempotent >= ambient->order())
        throw PreconditionViolated("corner_ring: index out of range");
    Elem e(ambient.get(), central_idempotent);
    if (!is_idempotent(e) || !is_central(e))
        throw PreconditionViolated("corner_ring requires a central idempotent");
    std::string name =
        ambient->name() + "[e=" + std::to_string(central_idempotent) + "]";
    return std::make_shared<detail::CornerRing>(ambient, central_idempotent,
                                                std::move(name));
}

}  // namespace nilclean
