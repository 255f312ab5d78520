// cohomology.hpp -- exact rational-cohomology dimensions for the induced
// modules H^0(lambda) (x) H^0(lambda*)^{(1)} over a simple algebraic group
// in characteristic p > h, plus the combinatorial apparatus built on them:
// block decomposition lambda = p*mu + w.0, candidate-weight enumeration,
// degree lower bounds, least-nonvanishing scans, nonvanishing certificates,
// and the curated sharp-bound table for the finite-group vanishing ranges.
//
// The dimension formula evaluated everywhere is the alternating Weyl sum
//   dim H^i = sum_u (-1)^{l(u)} P_{(i - l(w))/2}(u.lambda - mu)
// for lambda = p*mu + w.0 dominant; the value is 0 unless i >= l(w) and
// i == l(w) (mod 2).  All arithmetic is exact.
#ifndef WEYLCOH_COHOMOLOGY_HPP
#define WEYLCOH_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/kostant.hpp"
#include "weylcoh/rootsystem.hpp"
#include "weylcoh/weyl.hpp"

namespace weylcoh {

// lambda = p*mu + w.0 with lambda and mu dominant; unique when p > h.
struct Decomposition {
  Weight lambda;
  Weight mu;
  WeylElement w;
  std::int64_t p = 0;
};

// One evaluated cohomology group.
struct CohomRecord {
  Decomposition dec;
  std::int64_t degree = 0;  // i
  std::int64_t parts = 0;   // k = (i - l(w)) / 2
  BigInt dim = 0;
};

// Lower bounds for the least i with H^i(G, H^0(lambda) (x) H^0(lambda*)^(r))
// nonzero, all exact integers.  Every bound is valid; report the max.
struct DegreeBoundReport {
  // Best per-positive-root pairing bound over sigma in Phi+ (long roots only
  // in type G2):  p<mu,sigma^vee> - <mu,sigma^vee> + l(w) + <w.0,sigma^vee>.
  std::int64_t bound_a = 0;
  // Highest-root pairing bound: p<mu,at^vee> - <mu,at^vee> + l(w) - l(w) - 1
  // with at the highest root (written out: (p-1)<mu,at^vee> - 1 for the
  // self-paired pairing w1 = w2 = w).
  std::int64_t bound_b = 0;
  // Self-paired bound (p-1)<mu,at^vee> - 1.
  std::int64_t bound_c = 0;
  // Simple-root counting bound: for each simple root s, any expression of
  // (i - l(w))/2 positive roots summing to lambda - mu needs at least
  // ceil(c_s(lambda - mu) / m_s) parts, where c_s is the alpha_s-coordinate
  // and m_s the largest alpha_s-coordinate of a positive root; hence
  // i >= 2*ceil(c_s / m_s) + l(w).  Max over s (long s only in type G2).
  std::int64_t bound_count = 0;
  // r-fold untwisting bound: r * ((p-1)<mu,at^vee> - 1).
  std::int64_t bound_r = 0;

  std::int64_t best() const {
    std::int64_t b = bound_a;
    if (bound_b > b) b = bound_b;
    if (bound_c > b) b = bound_c;
    if (bound_count > b) b = bound_count;
    return b;
  }
};

// Outcome of a nonvanishing certificate check at (lambda, m).
enum class CertStatus {
  Certified,        // every dominant nu < lambda linked to lambda of block
                    // form has H^{m+1}(nu) = 0, so H^m(G(F_p), k) != 0
  CertifiedUnique,  // additionally lambda is the only dominant weight with
                    // H^m != 0, so H^m(G(F_p), k) has exactly that dimension
  Blocked           // some smaller linked weight has H^{m+1} != 0; the
                    // certificate criterion does not apply
};

std::string to_string(CertStatus s);

struct Certificate {
  CertStatus status = CertStatus::Blocked;
  Weight lambda;
  std::int64_t degree = 0;  // m
  BigInt dim_at_degree = 0; // dim H^m(lambda)
  // Smaller linked weights with H^{m+1} != 0 (empty unless Blocked).
  std::vector<CohomRecord> blockers;
  // For CertifiedUnique: the pairing cap (m+1)/(p-1) that makes the
  // uniqueness scan complete, and the number of candidates checked.
  std::int64_t uniqueness_cap = 0;
  std::int64_t candidates_checked = 0;
};

enum class Sharpness { Sharp, NotSharp, Unknown };

std::string to_string(Sharpness s);

enum class BoundVariant { Universal, Adjoint, TwistedAdjoint };

BoundVariant bound_variant_from_string(const std::string& s);
std::string to_string(BoundVariant v);

// Result of theorem_bound: H^i(G(F_q), k) = 0 for 0 < i < bound, with the
// sharpness status of the bound and, when known, the least degree where a
// nonzero class exists (equal to bound when Sharp).
struct TheoremBound {
  std::int64_t bound = 0;
  Sharpness sharpness = Sharpness::Unknown;
  std::optional<std::int64_t> first_nonzero;  // engaged iff a nonzero degree
                                              // is proved
  std::string note;
};

// --- block decomposition ---------------------------------------------------
// Writes a dominant lambda as p*mu + w.0 with mu dominant, or nullopt if no
// such pair exists.  Unique for p > h; throws PrimeTooSmall when p <= h.
std::optional<Decomposition> decompose(const RootSystem& rs, std::int64_t p,
                                       const Weight& lambda);

// --- the dimension formula ---------------------------------------------------
// dim H^i(G, H^0(lambda) (x) H^0(lambda*)^{(1)}); 0 when i < l(w) or when
// i and l(w) have different parity.  The result is asserted nonnegative.
BigInt cohom_dim(const RootSystem& rs, const Decomposition& dec,
                 std::int64_t degree,
                 std::size_t memo_budget = kDefaultMemoBudget);

// Several degrees of the same decomposition in one Weyl-group pass.
std::vector<BigInt> cohom_dim_multi(const RootSystem& rs,
                                    const Decomposition& dec,
                                    const std::vector<std::int64_t>& degrees,
                                    std::size_t memo_budget = kDefaultMemoBudget);

// --- candidate enumeration ---------------------------------------------------
// All decompositions (mu, w) with mu dominant, <mu, at^vee> <= pairing_cap,
// lambda = p*mu + w.0 dominant and lambda - mu a nonnegative integer sum of
// simple roots (the support condition without which every degree vanishes).
// With root_lattice_only, mu is further required to lie in the root lattice.
// Sorted by lambda (lexicographic); lambda values are pairwise distinct.
// Throws PrimeTooSmall when p <= h.
std::vector<Decomposition> candidates(const RootSystem& rs, std::int64_t p,
                                      std::int64_t pairing_cap,
                                      bool root_lattice_only = false);

// --- degree bounds -----------------------------------------------------------
// Exact lower bounds for nonvanishing against the r-th Frobenius twist;
// throws ZeroMu when dec.mu = 0 (the bounds are vacuous there).
DegreeBoundReport degree_bounds(const RootSystem& rs, const Decomposition& dec,
                                std::int64_t r = 1);

// --- least nonvanishing ------------------------------------------------------
// Scans every candidate with pairing cap 1 -- plus, in the simply-laced
// types, the least root-lattice candidate (p - h + 1) * at -- through
// degrees 0 < i <= degree_cutoff and returns all records at the least
// degree with a nonzero dimension (empty when everything vanishes through
// the cutoff).  Records are sorted by lambda.
std::vector<CohomRecord> least_nonvanishing(
    const RootSystem& rs, std::int64_t p, std::int64_t degree_cutoff,
    bool root_lattice_only = false,
    std::size_t memo_budget = kDefaultMemoBudget);

// --- nonvanishing certificate ------------------------------------------------
// Checks the hypotheses under which dim H^m(G, H^0(lambda) (x)
// H^0(lambda*)^{(1)}) != 0 forces H^m(G(F_p), k) != 0: every dominant
// nu < lambda linked to lambda and of block form p*mu' + w'.0 must have
// H^{m+1}(nu) = 0.  Returns Blocked with the offending records otherwise.
// When certified, additionally scans every candidate with pairing cap
// floor((m+1)/(p-1)) -- a complete list of the dominant weights that could
// have H^m != 0 -- and upgrades to CertifiedUnique if lambda is alone.
// Throws Error when dim H^m(lambda) = 0 (nothing to certify).
Certificate nonvanishing_certificate(const RootSystem& rs, std::int64_t p,
                                     std::int64_t m, const Weight& lambda,
                                     std::size_t memo_budget = kDefaultMemoBudget);

// --- curated vanishing-range table -------------------------------------------
// The proved vanishing bound D = D(type, p, r) with H^i(G(F_q), k) = 0 for
// 0 < i < D, q = p^r, for the finite groups of Lie type covered by the
// sharp-bound theorems; variant selects the isogeny class (universal,
// adjoint, or the twisted forms of the adjoint groups).  Throws
// OutOfTheoremScope outside every covered hypothesis.
TheoremBound theorem_bound(const RootSystem& rs, std::int64_t p,
                           std::int64_t r, BoundVariant variant);

}  // namespace weylcoh

#endif  // WEYLCOH_COHOMOLOGY_HPP
