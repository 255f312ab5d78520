// tables.hpp -- named, runnable verification suites: the type-B/D family
// counts with their recursion and threshold identities, the G2 and F4
// alternating-sum identities, and reproduction of the embedded expected
// tables from data files.  Every check recomputes both sides exactly and
// reports per-row agreement.
#ifndef WEYLCOH_TABLES_HPP
#define WEYLCOH_TABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylcoh/kostant.hpp"
#include "weylcoh/rootsystem.hpp"

namespace weylcoh {

// --- family counts -----------------------------------------------------------
// Type-D count (n >= 4):
//   P(m,k,n) = sum_u (-1)^{l(u)} P_k(u . m*eps_1)   for m >= 1, k >= 0;
//              1 for (m,k) = (0,0);  0 otherwise.
// Values are cached internally (single-threaded use only).
BigInt dn_p(std::int64_t m, std::int64_t k, int n);

// Type-B count (n >= 1):
//   P(m,k,j,n) = sum_u (-1)^{l(u)} P_k(u . (m*eps_1 + (eps_1+...+eps_j)))
//     for m >= 0, k >= 0, 1 <= j <= n;
//   1 for m = -1, k = 0, j = 1;  0 otherwise.
BigInt bn_p(std::int64_t m, std::int64_t k, std::int64_t j, int n);

// Type-B count T(m,k,j,n), assembled from P by the recursion
//   T(m,k,j,n) = sum_{i=1}^{2n} P(m-1,k-i+1,j,n)
//              + sum_{i=1}^{2n} P(m,k-i+1,j-1,n-1) + P(m,k-n,j,n)
// for m >= 0, k >= 0, 1 <= j <= n; 0 otherwise.
BigInt bn_t(std::int64_t m, std::int64_t k, std::int64_t j, int n);

// The vanishing threshold t(m,j,n): P(m,k,j,n) = 0 whenever k < t(m,j,n).
//   m + (j+1)/2        j odd,  m odd
//   m + j/2            j even, m even
//   m + 1 + (2n-j)/2   j even, m odd
//   m + 1 + (2n-j-1)/2 j odd,  m even
std::int64_t bn_threshold(std::int64_t m, std::int64_t j, int n);

// --- reports -------------------------------------------------------------------
struct TableRow {
  std::string inputs;    // what was checked
  std::string expected;  // exact expected value ("-" when report-only)
  std::string computed;  // value produced by the live pipeline
  bool match = true;
};

struct TableReport {
  std::string table_id;
  std::vector<TableRow> rows;
  std::int64_t runtime_ms = 0;

  bool all_match() const;
  std::size_t mismatches() const;
};

// --- verification suites ---------------------------------------------------------
// Type-D recursion identities on the grid n in 4..n_max, m in 0..m_max,
// k in 0..k_max:
//   (a) P(m,k,n) = 0 for k < m
//   (b) sum_u (-1)^{l(u)} P_k(u . m*eps_1 - eps_1) = P(m-1,k,n)
//   (c) sum_u (-1)^{l(u)} P_k(u . m*eps_1 + eps_1)
//         = P(m+1,k,n) - P(m+1,k,n-1)        (n >= 5)
//   (d) the same left side = P(m-1,k-2n+2,n)
//   (e) P(m,k,n) = P(m,k,n-1) + P(m-2,k-2n+2,n)   (n >= 5)
//   (f) P(m,m,n) = 1 for even m
// Both sides of every identity are computed independently.  One summary row
// per (identity, n).  Throws UsageError when n_max is outside 4..8.
TableReport verify_d_recursions(int n_max, std::int64_t m_max,
                                std::int64_t k_max);

// Type-B vanishing thresholds on the grid n in 1..n_max, j in 1..n,
// m in 0..m_max: asserts P(m,k,j,n) = 0 for all k < t(m,j,n) with
// k <= k_max, and reports the first nonzero k (if any <= k_max).
// Throws UsageError when n_max is outside 1..5.
TableReport verify_b_thresholds(int n_max, std::int64_t m_max,
                                std::int64_t k_max);

// G2 identities for 1 <= a <= a_max, 0 <= b <= 2, lambda = a*w1 + b*w2:
//   sum_u (-1)^{l(u)} P_k(u . lambda - w1) = 0 for k <= a+b-2, and
//   = ceil(a/3) at k = a+b-1;
// plus the restricted-count identity for 0 <= c <= a_max:
//   P_{c,excl at}(2c*a1 + c*a2) - P_{c,excl at}((c-2)*a1 + c*a2)
//     = ceil((c+1)/3).
// Throws UsageError when a_max is outside 1..40.
TableReport verify_g2(std::int64_t a_max);

// F4 alternating-sum identities for each m in m_list (1 <= m <= 9):
//   (a) sum_u (-1)^{l(u)} P_{m+1}(u . (m*w4 + w2) - w4) = 0
//   (b) sum_u (-1)^{l(u)} P_{m-1}(u . (m*w4) - w4) = m mod 2
//   (c) sum_u (-1)^{l(u)} P_{m+1}(u . (m*w4 + w3) - w4) = 1
// Throws UsageError when some m is outside 1..9.
TableReport verify_f4_conjectures(const std::vector<std::int64_t>& m_list);

// Recomputes an embedded expected table row by row: dominance of lambda,
// the length of w in lambda = p*mu + w.0, the k column (counting minimum or
// first nonzero degree, per table), the degree bookkeeping, and the stated
// dimensions.  Ids: e6-p19, e7-p23, b3, b4, b5-p11, b5-p13, b5-p19, b6-p13,
// g2, f4-candidates.  Throws UnknownTable for anything else; data_dir
// overrides the compiled-in data directory.
TableReport reproduce_table(const std::string& table_id);
TableReport reproduce_table(const std::string& table_id,
                            const std::string& data_dir);

// The valid reproduce_table ids, in a stable order.
std::vector<std::string> table_ids();

}  // namespace weylcoh

#endif  // WEYLCOH_TABLES_HPP
