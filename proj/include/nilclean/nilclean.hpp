#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilclean/radical.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

// An element a is nil clean when a = e + q with e idempotent and q nilpotent.
// A ring is nil clean when every element is. A ring is weakly nil clean when
// every element is a nilpotent plus or minus an idempotent.

enum class Sign : int { Plus = +1, Minus = -1 };

enum class DecompSigns { PlusOnly, Both };

// A decomposition witness: a = q + sign * e, e idempotent, q nilpotent.
struct NilCleanDecomp {
    Elem a, e, q;
    Sign sign;
};

// All decompositions of a, enumerated sign +1 first, then ascending e index.
std::vector<NilCleanDecomp> decompositions(Elem a, DecompSigns signs);

// Brute-force oracle result: on failure, witness is the least-index element
// with no decomposition.
struct OracleResult {
    bool holds = false;
    std::optional<std::uint32_t> witness;
};

OracleResult is_nil_clean_ring(const RingPtr& ring);
OracleResult is_weakly_nil_clean_ring(const RingPtr& ring);

// Structural verdict: a ring is either nil clean, or splits as R1 x R2 along
// a central idempotent pair with R1 nil clean and R2/Nil*(R2) of order 3, or
// it is not weakly nil clean at all.
struct Classification {
    enum class Verdict { NilClean, WeaklyNilCleanOnly, NotWeaklyNilClean };

    Verdict verdict;
    // WeaklyNilCleanOnly: central idempotents with e_nil + e_z3 = 1 and
    // e_nil * e_z3 = 0; e_nil may be zero (zero-ring factor).
    std::optional<std::uint32_t> e_nil, e_z3;
    // NotWeaklyNilClean: least-index element with no decomposition.
    std::optional<std::uint32_t> witness;
};

const char* verdict_tag(Classification::Verdict verdict);  // stable CLI tag

// Tries central idempotents e_nil in ascending index order and returns the
// first pair (e_nil, 1 - e_nil) such that e_nil*R is nil clean and
// (1-e_nil)*R modulo its upper nilradical has order 3.
Classification classify_structural(const RingPtr& ring);

// Checks that the brute-force weakly-nil-clean oracle and the structural
// classifier agree. A mismatch is a report outcome, not an error.
struct TheoremReport {
    OracleResult oracle;
    Classification structural;
    bool agree = false;
};

TheoremReport verify_theorem(const RingPtr& ring);

// For every involution a (a^2 = 1) and every sign-+1 decomposition a = e + q,
// checks e = 1.
struct Prop1Report {
    struct Violation {
        std::uint32_t a, e, q;
    };
    struct InvolutionStat {
        std::uint32_t a;
        std::uint32_t decomposition_count;
    };

    std::vector<InvolutionStat> involutions;
    std::uint64_t decomposition_count = 0;
    std::vector<Violation> violations;  // expected empty
};

Prop1Report verify_prop1(const RingPtr& ring);

// Evaluates the identity chain behind the involution result on one valid
// triple a = e + q. With f = 1 - e and r = q(1 + q):
//
//   general:     fq = fa,   fr = faf + f*a^2,   rf = faf + a^2*f
//   involution:  fr = rf, r commutes with e, f, q, a,
//                f = f(1+q)^{-1} a r, and f is nilpotent, hence f = 0
//
// The general identities hold for every valid triple; the involution block
// is additionally expected exactly when a^2 = 1.
struct ProofTrace {
    Elem a, e, q, f, r;
    bool a_is_involution = false;

    bool fq_eq_fa = false;
    bool fr_formula = false;
    bool rf_formula = false;

    bool fr_eq_rf = false;
    bool r_commutes_e = false, r_commutes_f = false;
    bool r_commutes_q = false, r_commutes_a = false;
    bool f_final_identity = false;
    bool f_is_zero = false;
    std::optional<std::uint32_t> f_nilpotency_index;

    bool general_identities() const { return fq_eq_fa && fr_formula && rf_formula; }
    bool involution_identities() const {
        return fr_eq_rf && r_commutes_e && r_commutes_f && r_commutes_q &&
               r_commutes_a && f_final_identity && f_nilpotency_index.has_value() &&
               f_is_zero;
    }
};

// Throws PreconditionViolated unless e is idempotent, q is nilpotent and
// a = e + q. a need not be an involution.
ProofTrace proof_trace(Elem a, Elem e, Elem q);

// Weakly nil clean + 2 a unit: only trivial idempotents, every element in
// Nil or 1 + Nil or -1 + Nil, Nil(R) a two-sided ideal, and R/Nil*(R) of
// order 3.
struct Lemma2Report {
    bool trivial_idempotents = false;
    bool nil_shift_cover = false;
    bool nil_is_ideal = false;
    bool quotient_is_z3 = false;
    std::uint32_t quotient_order = 0;

    bool all_passed() const {
        return trivial_idempotents && nil_shift_cover && nil_is_ideal && quotient_is_z3;
    }
};

// Reason verify_lemma2 would refuse this ring, or nullopt if it applies.
std::optional<std::string> lemma2_precondition_failure(const RingPtr& ring);

// Throws PreconditionViolated when lemma2_precondition_failure is non-empty.
Lemma2Report verify_lemma2(const RingPtr& ring);

// One instance of the generalized identity: a satisfies the quadratic
// alpha*a^2 + beta*a + gamma = 0 (integer scalars acting through of_int),
// a = e + q with q^n = 0 minimal. Then r = q(alpha*q + alpha + beta) is
// nilpotent and commutes with e, and
// (alpha+beta)^n * e + (alpha+beta)^(n-1) * gamma is nilpotent.
struct RemarkInstance {
    long long alpha = 0, beta = 0, gamma = 0;
    std::uint32_t a = 0, e = 0, q = 0, r = 0;
    std::uint32_t n = 0;  // nilpotency index of q
    std::uint32_t conclusion = 0;
};

struct RemarkReport {
    RemarkInstance instance;
    bool r_nilpotent = false;
    bool r_commutes_e = false;
    bool conclusion_nilpotent = false;

    bool all_passed() const { return r_nilpotent && r_commutes_e && conclusion_nilpotent; }
};

// Throws PreconditionViolated unless the quadratic holds, e is idempotent,
// q is nilpotent and a = e + q.
RemarkReport verify_remark(Elem a, Elem e, Elem q,
                           long long alpha, long long beta, long long gamma);

// Runs verify_remark for every element, every sign-+1 decomposition, and
// every scalar triple with |alpha|,|beta|,|gamma| <= scalar_bound satisfying
// the quadratic. Also checks the (1,0,-1) reduction: on involution instances
// the conclusion forces e = 1.
struct RemarkScanReport {
    std::uint64_t instances = 0;
    std::uint64_t reduction_instances = 0;  // (1,0,-1) on an involution
    std::vector<RemarkInstance> violations;
    std::vector<RemarkInstance> reduction_violations;  // e != 1 under the reduction

    bool clean() const { return violations.empty() && reduction_violations.empty(); }
};

RemarkScanReport remark_scan(const RingPtr& ring, long long scalar_bound);

}  // namespace nilclean
