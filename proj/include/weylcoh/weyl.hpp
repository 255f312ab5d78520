// weyl.hpp -- Weyl group elements as integer matrices on the weight lattice:
// enumeration with cached lengths, the dot action, inversion sets,
// distinguished coset representatives, and p-linkage.
//
// Element convention: a WeylElement stores the rank x rank integer matrix A
// with row i = omega-coordinates of w(omega_i), so applying w to a weight x
// is the row-vector product x * A.  Composition (u after v) therefore has
// matrix A_v * A_u; helpers below keep that straight so callers never
// multiply matrices by hand.
//
// Enumeration runs over a tower of parabolic quotients: with J_k =
// {alpha_1..alpha_k}, every w factors uniquely as x_n ∘ ... ∘ x_1 where x_k
// is a minimal-length representative of a coset of W_{J_{k-1}} in W_{J_k},
// and lengths add.  Level representatives are found once by a breadth-first
// orbit search from omega_k; the full group is then streamed with an
// odometer over the tower, so even E8 (696729600 elements) never needs a
// dedupe table.
#ifndef WEYLCOH_WEYL_HPP
#define WEYLCOH_WEYL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "weylcoh/rootsystem.hpp"

namespace weylcoh {

struct WeylElement {
  // action[i][j] = j-th omega-coordinate of w(omega_i).
  std::vector<IntVec> action;
  // Number of positive roots made negative; always kept in sync.
  std::int64_t length = 0;

  int sign() const { return (length & 1) ? -1 : +1; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.action == b.action;
  }
};

// --- constructors ----------------------------------------------------------
WeylElement weyl_identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based
// Reflection in an arbitrary root beta: x -> x - <x, beta^vee> beta.
WeylElement root_reflection(const RootSystem& rs, const Root& beta);
// Longest element w0 (length = |Phi+|).
WeylElement longest_element(const RootSystem& rs);

// --- the group action ------------------------------------------------------
// w(lambda); exact integer arithmetic.
Weight apply(const WeylElement& w, const Weight& lambda);
// u after v: (compose(rs,u,v))(x) = u(v(x)); length recomputed exactly.
WeylElement compose(const RootSystem& rs, const WeylElement& u,
                    const WeylElement& v);
// Dot action w.lambda = w(lambda + rho) - rho.
Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
// Inversion count of the matrix (number of positive roots mapped negative);
// used to (re)derive lengths for elements built by composition.
std::int64_t inversion_count(const RootSystem& rs, const WeylElement& w);

// w^{-1}; exact (the action matrix is invertible over the weight lattice).
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// The set {beta in Phi+ : w^{-1}(beta) < 0}; |set| = l(w) and the sum of the
// set equals -(w.0).  Returned as indices into rs.positive_roots().
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);

// Minimal-length representative of the coset W_I w (W_I acting on the
// left); I is a list of 1-based simple-root indices.  For w = w0 the result
// is the distinguished element whose inversion set is exactly Phi+ \ Phi+_I,
// so the inversion sum is supported on the fundamental weights outside I --
// the form in which distinguished representatives enter the vanishing-range
// computations.
WeylElement coset_min_rep(const RootSystem& rs, const WeylElement& w,
                          const std::vector<int>& I);

// --- enumeration -----------------------------------------------------------
// Streams every element exactly once (odometer over the parabolic tower) in
// a fixed deterministic order starting from the identity.  The callback
// returns true to continue, false to stop early.
void for_each_element(const RootSystem& rs,
                      const std::function<bool(const WeylElement&)>& fn);

// Fast path for Weyl sums: streams the pair (w(x), l(w)) for a fixed weight
// x over every w, one rank^2 vector apply per element (matrices are never
// formed).  Same order and early-stop contract as for_each_element.
void for_each_image(
    const RootSystem& rs, const Weight& x,
    const std::function<bool(const IntVec& image, std::int64_t length)>& fn);

// Materialized enumeration; throws BudgetExceeded when |W| > max_elements.
std::vector<WeylElement> enumerate(const RootSystem& rs,
                                   std::size_t max_elements = 1000000);

// --- p-linkage -------------------------------------------------------------
// True iff u(lambda+rho) - (nu+rho) lies in p Z-Phi for some u in W.
// Requires p > h (PrimeTooSmall otherwise).
bool linked(const RootSystem& rs, std::int64_t p, const Weight& lambda,
            const Weight& nu);

// Canonical label of the p-linkage class of lambda: two weights get equal
// ids iff linked.  The id is the lexicographically least vector of
// det-scaled simple-root coordinates of u(lambda+rho) reduced mod p*det,
// stored together with a Weight realization of that residue.
struct LinkageClassId {
  IntVec scaled_coords;  // det * (alpha-coords) reduced into [0, det*p)
  Weight canonical;      // the same residue written in omega-coordinates

  friend bool operator==(const LinkageClassId& a, const LinkageClassId& b) {
    return a.scaled_coords == b.scaled_coords;
  }
  friend bool operator<(const LinkageClassId& a, const LinkageClassId& b) {
    return a.scaled_coords < b.scaled_coords;
  }
};
LinkageClassId linkage_class_id(const RootSystem& rs, std::int64_t p,
                                const Weight& lambda);

}  // namespace weylcoh

#endif  // WEYLCOH_WEYL_HPP
