// kostant.hpp -- exact Kostant partition counting: the number of multisets
// of exactly n positive roots summing to a target vector, with optional
// excluded roots and forced minimal multiplicities, plus a brute-force
// oracle and the alternating Weyl sums built from these counts.
//
// Counting convention: P_0(0) = 1; any target with a negative or fractional
// simple-root coordinate has count 0.
#ifndef WEYLCOH_KOSTANT_HPP
#define WEYLCOH_KOSTANT_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "weylcoh/rootsystem.hpp"
#include "weylcoh/weyl.hpp"

namespace weylcoh {

// A counting query.  `target` reuses the Weight container but its coords are
// read as simple-root coordinates (the basis in which partition counting
// lives); use query_from_weight to convert a genuine omega-basis weight.
struct PartitionQuery {
  Weight target;                                     // alpha-coordinates
  std::int64_t parts = 0;                            // exact multiset size
  std::vector<Root> excluded_roots;                  // multisets avoid these
  std::vector<std::pair<Root, std::int64_t>> forced_min;  // >= multiplicity
};

struct CountResult {
  BigInt value;
};

inline constexpr std::size_t kDefaultMemoBudget = 100000000;

// Reusable counter: one instance per (root system, excluded set).  The memo
// is keyed on (root index, parts, residual) over the fixed positive-root
// order, so it is shared across every term of a Weyl sum.
class KostantCounter {
 public:
  explicit KostantCounter(const RootSystem& rs,
                          const std::vector<Root>& excluded = {},
                          std::size_t memo_budget = kDefaultMemoBudget);

  // Number of multisets of exactly `parts` allowed positive roots summing
  // to `alpha_target` (simple-root coordinates).  Throws MemoBudgetExceeded
  // when the memo would outgrow the configured state budget.
  BigInt count(const IntVec& alpha_target, std::int64_t parts);

  std::size_t memo_states() const { return memo_.size(); }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (auto x : v) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  BigInt rec(int idx, IntVec& residual, std::int64_t parts,
             std::int64_t height);

  const RootSystem* rs_;
  std::vector<IntVec> roots_;           // allowed roots, alpha-coords, fixed order
  std::vector<std::int64_t> heights_;   // heights_[i] = height of roots_[i]
  std::vector<IntVec> prefix_max_;      // prefix_max_[i][j] = max coord j so far
  std::size_t budget_;
  std::unordered_map<std::vector<std::int32_t>, BigInt, VecHash> memo_;
};

// One-shot counting with the full query semantics (excluded + forced_min).
CountResult count(const RootSystem& rs, const PartitionQuery& q,
                  std::size_t memo_budget = kDefaultMemoBudget);

// Independent brute-force enumeration of all multisets (no code shared with
// the DP).  Guarded: parts <= 6 and |Phi+| <= 24, else OracleTooLarge.
CountResult count_oracle(const RootSystem& rs, const PartitionQuery& q);

// Builds a query for a weight given in omega-coordinates; a weight outside
// the integral root lattice yields a query whose count is 0.
PartitionQuery query_from_weight(const RootSystem& rs, const Weight& lambda,
                                 std::int64_t parts);

// Least number of positive roots any multiset summing to `lambda` must
// have, by coefficient counting: max over simple roots s of
// ceil(c_s / m_s), where c_s is the alpha_s-coordinate of lambda and m_s
// the largest alpha_s-coordinate of a positive root.  Every k with
// P_k(lambda) != 0 satisfies k >= this value.  Zero when lambda is outside
// the nonnegative rational cone.
std::int64_t counting_parts_min(const RootSystem& rs, const Weight& lambda);

// Sum over the full Weyl group: sum_u (-1)^{l(u)} P_parts(u.lambda - shift),
// where P counts multisets of positive roots outside `excluded`.  Exact; may
// be negative as a bare integer.  Terms with u.lambda - shift outside the
// nonnegative root lattice are skipped before any counting.
BigInt alternating_sum(const RootSystem& rs, const Weight& lambda,
                       const Weight& shift, std::int64_t parts,
                       const std::vector<Root>& excluded = {},
                       std::size_t memo_budget = kDefaultMemoBudget);

// Same sum evaluated for several part counts in one pass over the Weyl
// group; result[i] corresponds to parts_list[i].  The group is streamed
// once and the DP memo is shared across all entries, so scanning a degree
// ladder costs barely more than its largest single degree.
std::vector<BigInt> alternating_sum_multi(
    const RootSystem& rs, const Weight& lambda, const Weight& shift,
    const std::vector<std::int64_t>& parts_list,
    const std::vector<Root>& excluded = {},
    std::size_t memo_budget = kDefaultMemoBudget);

}  // namespace weylcoh

#endif  // WEYLCOH_KOSTANT_HPP
