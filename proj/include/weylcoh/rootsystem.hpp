// rootsystem.hpp -- finite irreducible root systems with exact coordinate
// algebra: simple-root, fundamental-weight and epsilon-basis views, pairings
// against coroots, and the distinguished roots (highest root, highest short
// root) that drive every degree bound downstream.
//
// Conventions (fixed once, used everywhere):
//   * cartan[i][j] = <alpha_i, alpha_j^vee>, so row i of the Cartan matrix is
//     the fundamental-weight coordinate vector of the simple root alpha_i.
//   * Weights are integer vectors in the basis {omega_1, ..., omega_n}
//     (Bourbaki numbering of the simple roots).
//   * Positive roots are listed in a fixed deterministic order: by height,
//     ties broken lexicographically on simple-root coordinates.  The
//     partition-function DP and all reports depend on this order.
#ifndef WEYLCOH_ROOTSYSTEM_HPP
#define WEYLCOH_ROOTSYSTEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/errors.hpp"
#include "weylcoh/numeric.hpp"

namespace weylcoh {

enum class TypeLabel { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(TypeLabel t);
// Parses "A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2" (also lowercase,
// and bare "E"/"F"/"G" which take their rank from the rank argument).
TypeLabel type_from_string(const std::string& s);

enum class LengthClass { Long, Short };

// Integral weight in fundamental-weight coordinates.
struct Weight {
  IntVec coords;

  Weight() = default;
  explicit Weight(IntVec c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  bool dominant() const {
    for (auto c : coords)
      if (c < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const Weight& a, const Weight& b) {
    return !(a == b);
  }
  // Lexicographic order on coordinates; used only as a deterministic tie-break.
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.coords < b.coords;
  }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(std::int64_t s, const Weight& a);

std::string to_string(const Weight& w);

// A root, stored by its integer coefficients on the simple roots.
struct Root {
  IntVec simple_coords;
  LengthClass length_class = LengthClass::Long;
  // Cached derived data (filled by RootSystem::build).
  IntVec omega_coords;
  std::int64_t height = 0;

  friend bool operator==(const Root& a, const Root& b) {
    return a.simple_coords == b.simple_coords;
  }
};

std::string to_string(const Root& r);

class RootSystem {
 public:
  // Constructs the root system, or throws InvalidRank.
  // Legal ranks: A: >=1, B: >=1 (B1 = the rank-1 short-root system, the base
  // case of the type-B recursions), C: >=2, D: >=3, E6/E7/E8: 6/7/8 exactly,
  // F4: 4, G2: 2.  Ranks above 24 are rejected (nothing in scope needs them
  // and factorial growth makes them foot-guns).
  static RootSystem build(TypeLabel type, int rank);

  TypeLabel type_label() const { return type_; }
  int rank() const { return rank_; }
  bool simply_laced() const { return simply_laced_; }

  // cartan()[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<IntVec>& cartan() const { return cartan_; }

  // Positive roots in the fixed (height, lex) order.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  const Weight& rho() const { return rho_; }
  const Root& highest_root() const { return positive_roots_[highest_idx_]; }
  const Root& highest_short_root() const {
    return positive_roots_[highest_short_idx_];
  }
  int coxeter_number() const { return coxeter_number_; }
  const BigInt& weyl_order() const { return weyl_order_; }

  // <lambda, beta^vee>, exact (the rational intermediate always clears).
  std::int64_t pair(const Weight& lambda, const Root& beta) const;

  // Exact simple-root coordinates of a weight; denominators divide the index
  // of connection.
  RatVec root_coords(const Weight& lambda) const;

  // True iff lambda = sum of simple roots with nonnegative *integer*
  // coefficients (the necessary condition for any Kostant count to be > 0).
  bool in_nonneg_root_lattice(const Weight& lambda) const;

  // Integer simple-root coordinates if they exist (fast path used by hot
  // loops): returns false when some coordinate is fractional.
  bool root_coords_int(const Weight& lambda, IntVec& out) const;

  // Weight from integer simple-root coordinates (always a weight).
  Weight weight_from_root_coords(const IntVec& alpha_coords) const;

  // Epsilon-basis views, defined for types B and D only (throws
  // UnsupportedType otherwise).  In type B: alpha_i = eps_i - eps_{i+1} for
  // i < n and alpha_n = eps_n.  In type D: alpha_n = eps_{n-1} + eps_n.
  RatVec epsilon_view(const Weight& lambda) const;
  Weight weight_from_epsilon(const RatVec& eps) const;

  // Convenience builders.
  Weight zero_weight() const;
  Weight fundamental_weight(int i) const;  // 1-based (omega_i)
  Weight root_as_weight(const Root& r) const;

  // The simple root alpha_i (1-based).  Note: this is NOT positive_roots()[i-1]
  // because the fixed (height, lex) order lists height-1 roots by lex on
  // simple coordinates, i.e. alpha_n first.
  const Root& simple_root(int i) const;

  // --- internals shared with the weyl module ------------------------------
  // Height functional: ht(x) = (hvec . omega_coords(x)) / det for any x in
  // the root lattice; hvec is integral and det > 0, so sign(ht) =
  // sign(hvec . coords).
  const IntVec& height_functional() const { return height_functional_; }
  // det(cartan) = index of connection.
  std::int64_t cartan_det() const { return det_; }
  // Adjugate of cartan^T: root_coords(x) * det = adjugate * omega_coords(x).
  const std::vector<IntVec>& inv_cartan_t_scaled() const { return adj_t_; }

  // Signed root lookup from omega coordinates: +k (k = index+1) for the k-th
  // positive root, -k for its negative, 0 if not a root.
  int signed_root_index(const IntVec& omega_coords) const;

 private:
  RootSystem() = default;

  TypeLabel type_ = TypeLabel::A;
  int rank_ = 0;
  bool simply_laced_ = true;
  std::vector<IntVec> cartan_;
  IntVec symmetrizer_;  // s_i = (alpha_i, alpha_i) in the normalization with
                        // long roots of squared length 2 (scaled integral).
  std::vector<Root> positive_roots_;
  std::vector<std::size_t> simple_idx_;  // simple_idx_[i] = index of alpha_{i+1}
  std::size_t highest_idx_ = 0;
  std::size_t highest_short_idx_ = 0;
  Weight rho_;
  int coxeter_number_ = 0;
  BigInt weyl_order_ = 0;
  std::int64_t det_ = 1;
  std::vector<IntVec> adj_t_;      // adjugate of cartan^T
  IntVec height_functional_;
  std::map<IntVec, int> root_lookup_;  // omega coords -> signed index
};

}  // namespace weylcoh

#endif  // WEYLCOH_ROOTSYSTEM_HPP
