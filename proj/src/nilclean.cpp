#include "nilclean/nilclean.hpp"

#include <algorithm>
#include <string>

namespace nilclean {

namespace {

std::vector<std::uint32_t> idempotent_indices(const Ring& r) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < r.order(); ++x)
        if (r.mul(x, x) == x) out.push_back(x);
    return out;
}

// Least-index element with no decomposition under the allowed signs, if any.
OracleResult decomposition_oracle(const Ring& r, DecompSigns signs) {
    const auto idem = idempotent_indices(r);
    const auto nil = nilpotent_mask(r);
    for (std::uint32_t a = 0; a < r.order(); ++a) {
        bool found = false;
        for (std::uint32_t e : idem) {
            if (nil[r.sub(a, e)] ||
                (signs == DecompSigns::Both && nil[r.add(a, e)])) {
                found = true;
                break;
            }
        }
        if (!found) return OracleResult{false, a};
    }
    return OracleResult{true, std::nullopt};
}

}  // namespace

std::vector<NilCleanDecomp> decompositions(Elem a, DecompSigns signs) {
    const Ring& r = a.ring();
    const auto idem = idempotent_indices(r);
    std::vector<NilCleanDecomp> out;
    // sign +1 first, then -1, ascending e index within each sign
    for (std::uint32_t e : idem) {
        const std::uint32_t q = r.sub(a.index(), e);
        if (nilpotency_index(Elem(&r, q)))
            out.push_back({a, Elem(&r, e), Elem(&r, q), Sign::Plus});
    }
    if (signs == DecompSigns::Both) {
        for (std::uint32_t e : idem) {
            const std::uint32_t q = r.add(a.index(), e);
            if (nilpotency_index(Elem(&r, q)))
                out.push_back({a, Elem(&r, e), Elem(&r, q), Sign::Minus});
        }
    }
    return out;
}

OracleResult is_nil_clean_ring(const RingPtr& ring) {
    return decomposition_oracle(*ring, DecompSigns::PlusOnly);
}

OracleResult is_weakly_nil_clean_ring(const RingPtr& ring) {
    return decomposition_oracle(*ring, DecompSigns::Both);
}

const char* verdict_tag(Classification::Verdict verdict) {
    switch (verdict) {
        case Classification::Verdict::NilClean: return "nil_clean";
        case Classification::Verdict::WeaklyNilCleanOnly: return "weakly_nil_clean_only";
        case Classification::Verdict::NotWeaklyNilClean: return "not_weakly_nil_clean";
    }
    return "unknown";
}

Classification classify_structural(const RingPtr& ring) {
    if (is_nil_clean_ring(ring).holds)
        return Classification{Classification::Verdict::NilClean, {}, {}, {}};

    // Try every central idempotent e as the nil-clean corner identity; e may
    // be zero, in which case the nil-clean factor is the zero ring.
    const Ring& r = *ring;
    for (std::uint32_t e : idempotent_indices(r)) {
        if (!is_central(Elem(&r, e))) continue;
        const std::uint32_t e_complement = r.sub(r.one(), e);
        RingPtr nil_corner = corner_ring(ring, e);
        if (!is_nil_clean_ring(nil_corner).holds) continue;
        RingPtr z3_corner = corner_ring(ring, e_complement);
        RingPtr quotient = quotient_by_ideal(z3_corner, upper_nilradical(z3_corner));
        if (is_z3(*quotient))
            return Classification{Classification::Verdict::WeaklyNilCleanOnly, e,
                                  e_complement, {}};
    }

    auto oracle = is_weakly_nil_clean_ring(ring);
    return Classification{Classification::Verdict::NotWeaklyNilClean, {}, {},
                          oracle.witness};
}

TheoremReport verify_theorem(const RingPtr& ring) {
    TheoremReport report;
    report.oracle = is_weakly_nil_clean_ring(ring);
    report.structural = classify_structural(ring);
    const bool structurally_weak =
        report.structural.verdict != Classification::Verdict::NotWeaklyNilClean;
    report.agree = (report.oracle.holds == structurally_weak);
    return report;
}

Prop1Report verify_prop1(const RingPtr& ring) {
    const Ring& r = *ring;
    const auto idem = idempotent_indices(r);
    const auto nil = nilpotent_mask(r);
    Prop1Report report;
    for (std::uint32_t a = 0; a < r.order(); ++a) {
        if (r.mul(a, a) != r.one()) continue;  // involutions only
        std::uint32_t count = 0;
        for (std::uint32_t e : idem) {
            const std::uint32_t q = r.sub(a, e);
            if (!nil[q]) continue;
            ++count;
            if (e != r.one()) report.violations.push_back({a, e, q});
        }
        report.involutions.push_back({a, count});
        report.decomposition_count += count;
    }
    return report;
}

ProofTrace proof_trace(Elem a, Elem e, Elem q) {
    const Ring& r = a.ring();
    if (e.ring_token() != a.ring_token() || q.ring_token() != a.ring_token())
        throw RingMismatch("proof_trace: elements from different rings");
    if (!is_idempotent(e)) throw PreconditionViolated("proof_trace: e is not idempotent");
    if (!nilpotency_index(q)) throw PreconditionViolated("proof_trace: q is not nilpotent");
    if (r.add(e.index(), q.index()) != a.index())
        throw PreconditionViolated("proof_trace: a != e + q");

    ProofTrace t;
    t.a = a;
    t.e = e;
    t.q = q;
    const std::uint32_t f = r.sub(r.one(), e.index());
    const std::uint32_t rr = r.mul(q.index(), r.add(r.one(), q.index()));
    t.f = Elem(&r, f);
    t.r = Elem(&r, rr);

    const std::uint32_t a2 = r.mul(a.index(), a.index());
    t.a_is_involution = (a2 == r.one());

    const std::uint32_t fa = r.mul(f, a.index());
    const std::uint32_t faf = r.mul(fa, f);
    const std::uint32_t fr = r.mul(f, rr);
    const std::uint32_t rf = r.mul(rr, f);

    t.fq_eq_fa = (r.mul(f, q.index()) == fa);
    t.fr_formula = (fr == r.add(faf, r.mul(f, a2)));
    t.rf_formula = (rf == r.add(faf, r.mul(a2, f)));

    t.fr_eq_rf = (fr == rf);
    t.r_commutes_e = (r.mul(rr, e.index()) == r.mul(e.index(), rr));
    t.r_commutes_f = (fr == rf);
    t.r_commutes_q = (r.mul(rr, q.index()) == r.mul(q.index(), rr));
    t.r_commutes_a = (r.mul(rr, a.index()) == r.mul(a.index(), rr));

    // 1 + q is a unit for nilpotent q, so the inverse always exists
    const Elem inv = *try_inverse(Elem(&r, r.add(r.one(), q.index())));
    t.f_final_identity =
        (f == r.mul(r.mul(r.mul(f, inv.index()), a.index()), rr));

    t.f_nilpotency_index = nilpotency_index(t.f);
    t.f_is_zero = (f == r.zero());
    return t;
}

std::optional<std::string> lemma2_precondition_failure(const RingPtr& ring) {
    if (ring->is_zero_ring()) return "the zero ring is excluded";
    if (!try_inverse(of_int(*ring, 2))) return "2 is not a unit";
    if (!is_weakly_nil_clean_ring(ring).holds) return "ring is not weakly nil clean";
    return std::nullopt;
}

Lemma2Report verify_lemma2(const RingPtr& ring) {
    if (auto reason = lemma2_precondition_failure(ring))
        throw PreconditionViolated("verify_lemma2: " + *reason);

    const Ring& r = *ring;
    Lemma2Report report;

    const auto idem = idempotent_indices(r);
    std::vector<std::uint32_t> trivial = {r.zero(), r.one()};
    std::sort(trivial.begin(), trivial.end());
    report.trivial_idempotents = (idem == trivial);

    const auto nil = nilpotent_mask(r);
    report.nil_shift_cover = true;
    for (std::uint32_t x = 0; x < r.order(); ++x) {
        // x = q or x = 1 + q or x = -1 + q for some nilpotent q
        if (!nil[x] && !nil[r.sub(x, r.one())] && !nil[r.add(x, r.one())]) {
            report.nil_shift_cover = false;
            break;
        }
    }

    std::vector<std::uint32_t> nil_members;
    for (std::uint32_t x = 0; x < r.order(); ++x)
        if (nil[x]) nil_members.push_back(x);
    report.nil_is_ideal = is_ideal_set(ring, nil_members);

    RingPtr quotient = quotient_by_ideal(ring, upper_nilradical(ring));
    report.quotient_order = quotient->order();
    report.quotient_is_z3 = is_z3(*quotient);
    return report;
}

RemarkReport verify_remark(Elem a, Elem e, Elem q,
                           long long alpha, long long beta, long long gamma) {
    const Ring& r = a.ring();
    if (e.ring_token() != a.ring_token() || q.ring_token() != a.ring_token())
        throw RingMismatch("verify_remark: elements from different rings");

    const std::uint32_t a2 = r.mul(a.index(), a.index());
    const std::uint32_t quad = r.add(
        r.add(r.mul(r.from_int(alpha), a2), r.mul(r.from_int(beta), a.index())),
        r.from_int(gamma));
    if (quad != r.zero())
        throw PreconditionViolated("verify_remark: alpha*a^2 + beta*a + gamma != 0");
    if (!is_idempotent(e))
        throw PreconditionViolated("verify_remark: e is not idempotent");
    const auto n = nilpotency_index(q);
    if (!n) throw PreconditionViolated("verify_remark: q is not nilpotent");
    if (r.add(e.index(), q.index()) != a.index())
        throw PreconditionViolated("verify_remark: a != e + q");

    RemarkReport report;
    report.instance.alpha = alpha;
    report.instance.beta = beta;
    report.instance.gamma = gamma;
    report.instance.a = a.index();
    report.instance.e = e.index();
    report.instance.q = q.index();
    report.instance.n = *n;

    // r = q(alpha*q + alpha + beta)
    const std::uint32_t rr = r.mul(
        q.index(), r.add(r.mul(r.from_int(alpha), q.index()), r.from_int(alpha + beta)));
    report.instance.r = rr;

    // (alpha+beta)^n e + (alpha+beta)^(n-1) gamma
    const std::uint32_t s = r.from_int(alpha + beta);
    const std::uint32_t conclusion =
        r.add(r.mul(r.pow(s, *n), e.index()),
              r.mul(r.pow(s, *n - 1), r.from_int(gamma)));
    report.instance.conclusion = conclusion;

    report.r_nilpotent = nilpotency_index(Elem(&r, rr)).has_value();
    report.r_commutes_e = (r.mul(rr, e.index()) == r.mul(e.index(), rr));
    report.conclusion_nilpotent = nilpotency_index(Elem(&r, conclusion)).has_value();
    return report;
}

RemarkScanReport remark_scan(const RingPtr& ring, long long scalar_bound) {
    const Ring& r = *ring;
    const auto idem = idempotent_indices(r);
    const auto nil = nilpotent_mask(r);
    RemarkScanReport report;

    for (std::uint32_t a = 0; a < r.order(); ++a) {
        // sign +1 decompositions of a
        std::vector<std::pair<std::uint32_t, std::uint32_t>> decomps;
        for (std::uint32_t e : idem) {
            const std::uint32_t q = r.sub(a, e);
            if (nil[q]) decomps.emplace_back(e, q);
        }
        if (decomps.empty()) continue;
        const std::uint32_t a2 = r.mul(a, a);
        const bool involution = (a2 == r.one());

        for (auto [e, q] : decomps) {
            for (long long alpha = -scalar_bound; alpha <= scalar_bound; ++alpha) {
                for (long long beta = -scalar_bound; beta <= scalar_bound; ++beta) {
                    const std::uint32_t partial =
                        r.add(r.mul(r.from_int(alpha), a2), r.mul(r.from_int(beta), a));
                    for (long long gamma = -scalar_bound; gamma <= scalar_bound; ++gamma) {
                        if (r.add(partial, r.from_int(gamma)) != r.zero()) continue;
                        auto rep = verify_remark(Elem(&r, a), Elem(&r, e), Elem(&r, q),
                                                 alpha, beta, gamma);
                        ++report.instances;
                        if (!rep.all_passed()) report.violations.push_back(rep.instance);
                        if (alpha == 1 && beta == 0 && gamma == -1 && involution) {
                            ++report.reduction_instances;
                            if (e != r.one())
                                report.reduction_violations.push_back(rep.instance);
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace nilclean
