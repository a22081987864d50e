#pragma once

// Concrete ring representations. Internal to the library; everything public
// goes through the Ring interface and the factory functions in ring.hpp.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilclean/ring.hpp"

namespace nilclean::detail {

// Z_n with index = residue.
class ZnRing final : public Ring {
public:
    ZnRing(std::uint64_t n, std::optional<RingSpec> spec, std::string name);

protected:
    std::uint32_t add_impl(std::uint32_t x, std::uint32_t y) const override;
    std::uint32_t neg_impl(std::uint32_t x) const override;
    std::uint32_t mul_impl(std::uint32_t x, std::uint32_t y) const override;

private:
    std::uint64_t n_;
};

// L x R with index = i_left * |R| + i_right and componentwise operations.
class ProductRing final : public Ring {
public:
    ProductRing(RingPtr left, RingPtr right, std::optional<RingSpec> spec, std::string name);

protected:
    std::uint32_t add_impl(std::uint32_t x, std::uint32_t y) const override;
    std::uint32_t neg_impl(std::uint32_t x) const override;
    std::uint32_t mul_impl(std::uint32_t x, std::uint32_t y) const override;

private:
    RingPtr left_, right_;
    std::uint32_t right_order_;
};

// k x k matrices over a base ring. Index is the row-major big-endian
// mixed-radix encoding of the entry indices, entry (0,0) most significant.
// Only reachable for k*k <= kMaxDigits: with base order >= 2 the order
// b^(k^2) passes the cap check only for small k, and a base of order 1
// collapses the whole matrix ring to the zero ring before this class is used.
class MatrixRing final : public Ring {
public:
    static constexpr std::uint32_t kMaxDigits = 64;

    MatrixRing(std::uint32_t k, RingPtr base, std::uint64_t order,
               std::optional<RingSpec> spec, std::string name);

protected:
    std::uint32_t add_impl(std::uint32_t x, std::uint32_t y) const override;
    std::uint32_t neg_impl(std::uint32_t x) const override;
    std::uint32_t mul_impl(std::uint32_t x, std::uint32_t y) const override;

private:
    using Digits = std::array<std::uint32_t, kMaxDigits>;

    void decode(std::uint32_t index, Digits& out) const;
    std::uint32_t encode(const Digits& digits) const;
    std::uint32_t identity_index() const;

    std::uint32_t k_;
    std::uint32_t digit_count_;
    RingPtr base_;
    std::uint32_t base_order_;
};

// R/I for a verified two-sided ideal I. Cosets are indexed by ascending
// minimal member; arithmetic goes through coset representatives.
class QuotientRing final : public Ring {
public:
    QuotientRing(RingPtr base, const std::vector<std::uint32_t>& ideal_members,
                 std::optional<RingSpec> spec, std::string name);

protected:
    std::uint32_t add_impl(std::uint32_t x, std::uint32_t y) const override;
    std::uint32_t neg_impl(std::uint32_t x) const override;
    std::uint32_t mul_impl(std::uint32_t x, std::uint32_t y) const override;

private:
    RingPtr base_;
    std::vector<std::uint32_t> reps_;           // coset index -> minimal member
    std::vector<std::uint32_t> elem_to_coset_;  // base index -> coset index
};

// eR for a central idempotent e, under ambient operations with identity e.
// Members are indexed by ascending ambient index.
class CornerRing final : public Ring {
public:
    CornerRing(RingPtr ambient, std::uint32_t idempotent, std::string name);

protected:
    std::uint32_t add_impl(std::uint32_t x, std::uint32_t y) const override;
    std::uint32_t neg_impl(std::uint32_t x) const override;
    std::uint32_t mul_impl(std::uint32_t x, std::uint32_t y) const override;

private:
    static std::vector<std::uint32_t> collect_members(const Ring& ambient,
                                                      std::uint32_t idempotent);

    RingPtr ambient_;
    std::vector<std::uint32_t> members_;           // local index -> ambient index
    std::vector<std::uint32_t> ambient_to_local_;  // ambient index -> local or UINT32_MAX
};

}  // namespace nilclean::detail
