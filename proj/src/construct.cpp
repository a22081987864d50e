#include <algorithm>
#include <string>

#include "nilclean/expr.hpp"
#include "nilclean/radical.hpp"
#include "nilclean/ring.hpp"
#include "ring_impl.hpp"

namespace nilclean {

namespace {

std::uint64_t capped_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap,
                         const std::string& what) {
    if (b != 0 && a > cap / b)
        throw OrderCapExceeded(what + " exceeds the order cap " + std::to_string(cap));
    return a * b;
}

RingPtr construct_impl(const RingSpec& spec, std::uint64_t cap) {
    switch (spec.kind()) {
        case RingSpec::Kind::Zn: {
            const std::uint64_t n = spec.modulus();
            if (n > cap)
                throw OrderCapExceeded("Z" + std::to_string(n) +
                                       " exceeds the order cap " + std::to_string(cap));
            return std::make_shared<detail::ZnRing>(n, spec, format_ring_spec(spec));
        }
        case RingSpec::Kind::Product: {
            RingPtr left = construct_impl(spec.left(), cap);
            RingPtr right = construct_impl(spec.right(), cap);
            capped_mul(left->order(), right->order(), cap, "product ring");
            return std::make_shared<detail::ProductRing>(std::move(left), std::move(right),
                                                         spec, format_ring_spec(spec));
        }
        case RingSpec::Kind::Matrix: {
            RingPtr base = construct_impl(spec.base(), cap);
            const std::uint32_t k = spec.dim();
            if (base->order() == 1) {
                // matrices over the zero ring collapse to the zero ring
                return std::make_shared<detail::ZnRing>(1, spec, format_ring_spec(spec));
            }
            const std::uint64_t digits = std::uint64_t(k) * k;
            std::uint64_t order = 1;
            for (std::uint64_t t = 0; t < digits; ++t)
                order = capped_mul(order, base->order(), cap, "matrix ring");
            return std::make_shared<detail::MatrixRing>(k, std::move(base), order, spec,
                                                        format_ring_spec(spec));
        }
        case RingSpec::Kind::NilQuotient: {
            RingPtr base = construct_impl(spec.base(), cap);
            Ideal radical = upper_nilradical(base);
            return std::make_shared<detail::QuotientRing>(std::move(base), radical.members,
                                                          spec, format_ring_spec(spec));
        }
    }
    throw RingError("unreachable ring spec kind");
}

}  // namespace

RingPtr construct_ring(const RingSpec& spec, std::uint64_t order_cap) {
    const std::uint64_t cap = std::min<std::uint64_t>(order_cap, kMaxSupportedOrder);
    if (cap == 0) throw OrderCapExceeded("order cap must be positive");
    return construct_impl(spec, cap);
}

}  // namespace nilclean
