#pragma once

// Shared test helpers: an independent naive matrix oracle (plain int
// matrices, no engine code), a naive ideal-closure fixpoint, and a random
// spec-tree generator for parser round trips.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "nilclean/ring_spec.hpp"

namespace testsupport {

// ---- naive k x k matrices over Z_m (k <= 3), independent of the engine ----

struct NaiveMat {
    int k = 2;
    int m = 2;
    std::array<int, 9> v{};  // row-major

    friend bool operator==(const NaiveMat& a, const NaiveMat& b) {
        return a.k == b.k && a.m == b.m && a.v == b.v;
    }
    friend bool operator<(const NaiveMat& a, const NaiveMat& b) { return a.v < b.v; }
};

inline NaiveMat naive_zero(int k, int m) { return NaiveMat{k, m, {}}; }

inline NaiveMat naive_identity(int k, int m) {
    NaiveMat r{k, m, {}};
    for (int i = 0; i < k; ++i) r.v[i * k + i] = 1 % m;
    return r;
}

inline NaiveMat naive_add(const NaiveMat& a, const NaiveMat& b) {
    NaiveMat r{a.k, a.m, {}};
    for (int t = 0; t < a.k * a.k; ++t) r.v[t] = (a.v[t] + b.v[t]) % a.m;
    return r;
}

inline NaiveMat naive_mul(const NaiveMat& a, const NaiveMat& b) {
    NaiveMat r{a.k, a.m, {}};
    for (int i = 0; i < a.k; ++i)
        for (int j = 0; j < a.k; ++j) {
            int acc = 0;
            for (int l = 0; l < a.k; ++l) acc += a.v[i * a.k + l] * b.v[l * a.k + j];
            r.v[i * a.k + j] = acc % a.m;
        }
    return r;
}

// big-endian mixed radix, entry (0,0) most significant: the engine's
// canonical matrix index
inline std::uint32_t naive_encode(const NaiveMat& a) {
    std::uint64_t acc = 0;
    for (int t = 0; t < a.k * a.k; ++t) acc = acc * a.m + a.v[t];
    return static_cast<std::uint32_t>(acc);
}

inline NaiveMat naive_decode(std::uint32_t index, int k, int m) {
    NaiveMat r{k, m, {}};
    for (int t = k * k; t-- > 0;) {
        r.v[t] = static_cast<int>(index % m);
        index /= static_cast<std::uint32_t>(m);
    }
    return r;
}

inline bool naive_is_nilpotent(const NaiveMat& a) {
    std::set<NaiveMat> seen;
    NaiveMat p = a;
    const NaiveMat zero = naive_zero(a.k, a.m);
    for (;;) {
        if (p == zero) return true;
        if (!seen.insert(p).second) return false;
        p = naive_mul(p, a);
    }
}

// ---- naive two-sided ideal closure by fixpoint over the whole ring ----

template <typename AddFn, typename NegFn, typename MulFn>
std::vector<std::uint32_t> naive_ideal_closure(std::uint32_t order,
                                               std::vector<std::uint32_t> gens,
                                               AddFn add, NegFn neg, MulFn mul) {
    std::vector<std::uint8_t> in(order, 0);
    in[0] = 0;
    std::set<std::uint32_t> s(gens.begin(), gens.end());
    s.insert(0u);
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::uint32_t> next = s;
        for (std::uint32_t a : s) {
            next.insert(neg(a));
            for (std::uint32_t b : s) next.insert(add(a, b));
            for (std::uint32_t x = 0; x < order; ++x) {
                next.insert(mul(x, a));
                next.insert(mul(a, x));
            }
        }
        if (next != s) {
            s = std::move(next);
            changed = true;
        }
    }
    return std::vector<std::uint32_t>(s.begin(), s.end());
}

// ---- random spec trees for parser round trips ----

inline nilclean::RingSpec random_spec(std::mt19937_64& gen, int max_depth) {
    std::uniform_int_distribution<int> kind(0, max_depth <= 1 ? 0 : 3);
    std::uniform_int_distribution<std::uint64_t> modulus(1, 40);
    std::uniform_int_distribution<std::uint32_t> dim(1, 3);
    switch (kind(gen)) {
        case 1:
            return nilclean::RingSpec::product(random_spec(gen, max_depth - 1),
                                               random_spec(gen, max_depth - 1));
        case 2:
            return nilclean::RingSpec::matrix(dim(gen), random_spec(gen, max_depth - 1));
        case 3:
            return nilclean::RingSpec::nil_quotient(random_spec(gen, max_depth - 1));
        default:
            return nilclean::RingSpec::zn(modulus(gen));
    }
}

}  // namespace testsupport
