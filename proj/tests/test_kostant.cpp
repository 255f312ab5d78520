// Tests for exact partition counting: DP vs brute-force oracle, restricted
// counts, and the alternating Weyl sums with their lemma-scale identities.
#include "doctest.h"

#include <random>

#include "weylcoh/kostant.hpp"

using namespace weylcoh;

namespace {

PartitionQuery make_query(const RootSystem& rs, IntVec alpha,
                          std::int64_t parts) {
  PartitionQuery q;
  q.target = Weight(std::move(alpha));
  q.parts = parts;
  (void)rs;
  return q;
}

// Weight from epsilon-coordinates given as integers (types B and D).
Weight from_eps(const RootSystem& rs, IntVec eps) {
  RatVec e;
  for (auto x : eps) e.push_back(Rat(x));
  return rs.weight_from_epsilon(e);
}

// Type-D family count P(m,k,n) (defined for n >= 4):
//   sum_u (-1)^l(u) P_k(u . m*eps_1)  for m >= 1, k >= 0;
//   1 for m = 0, k = 0; 0 otherwise.
BigInt dnp(std::int64_t m, std::int64_t k, int n) {
  if (m == 0 && k == 0) return 1;
  if (m < 1 || k < 0) return 0;
  auto rs = RootSystem::build(TypeLabel::D, n);
  IntVec eps(n, 0);
  eps[0] = m;
  return alternating_sum(rs, from_eps(rs, eps), rs.zero_weight(), k);
}

// Type-B family count P(m,k,j,n):
//   sum_u (-1)^l(u) P_k(u . (m*eps_1 + (eps_1+...+eps_j)))
//     for m >= 0, k >= 0, 1 <= j <= n;
//   1 for m = -1, k = 0, j = 1; 0 otherwise.
BigInt bnp(std::int64_t m, std::int64_t k, std::int64_t j, int n) {
  if (m == -1 && k == 0 && j == 1) return 1;
  if (m < 0 || k < 0 || j < 1 || n < 1 || j > n) return 0;
  auto rs = RootSystem::build(TypeLabel::B, n);
  IntVec eps(n, 0);
  eps[0] = m + 1;
  for (int t = 1; t < j; ++t) eps[t] = 1;
  return alternating_sum(rs, from_eps(rs, eps), rs.zero_weight(), k);
}

}  // namespace

TEST_CASE("P_0(0) = 1 and negative coordinates give 0") {
  for (auto rs : {RootSystem::build(TypeLabel::G2, 2),
                  RootSystem::build(TypeLabel::B, 3),
                  RootSystem::build(TypeLabel::E6, 6)}) {
    CAPTURE(to_string(rs.type_label()));
    CHECK(count(rs, make_query(rs, IntVec(rs.rank(), 0), 0)).value == 1);
    if (rs.positive_roots().size() <= 24)
      CHECK(count_oracle(rs, make_query(rs, IntVec(rs.rank(), 0), 0)).value ==
            1);
    CHECK(count(rs, make_query(rs, IntVec(rs.rank(), 0), 3)).value == 0);
    IntVec neg(rs.rank(), 1);
    neg[0] = -1;
    for (std::int64_t parts : {0, 1, 4})
      CHECK(count(rs, make_query(rs, neg, parts)).value == 0);
  }
}

TEST_CASE("G2: P_2(2a1 + 2a2) = 2") {
  auto g2 = RootSystem::build(TypeLabel::G2, 2);
  // {a1+a2, a1+a2} and {a2, 2a1+a2}.
  CHECK(count(g2, make_query(g2, IntVec{2, 2}, 2)).value == 2);
  CHECK(count_oracle(g2, make_query(g2, IntVec{2, 2}, 2)).value == 2);
}

TEST_CASE("G2 restricted: P_{1, not highest root}(2a1 + a2) = 1") {
  auto g2 = RootSystem::build(TypeLabel::G2, 2);
  PartitionQuery q = make_query(g2, IntVec{2, 1}, 1);
  q.excluded_roots.push_back(g2.highest_root());
  CHECK(count(g2, q).value == 1);
  CHECK(count_oracle(g2, q).value == 1);
  // But the highest root itself cannot be formed once excluded.
  PartitionQuery q2 = make_query(g2, IntVec{3, 2}, 1);
  CHECK(count(g2, q2).value == 1);
  q2.excluded_roots.push_back(g2.highest_root());
  CHECK(count(g2, q2).value == 0);
}

TEST_CASE("oracle guard") {
  auto e6 = RootSystem::build(TypeLabel::E6, 6);
  CHECK_THROWS_AS(count_oracle(e6, make_query(e6, IntVec(6, 1), 2)),
                  OracleTooLarge);
  auto g2 = RootSystem::build(TypeLabel::G2, 2);
  CHECK_THROWS_AS(count_oracle(g2, make_query(g2, IntVec{2, 1}, 7)),
                  OracleTooLarge);
}

TEST_CASE("oracle equivalence: exhaustive on G2 and B3 up to 2rho") {
  for (auto rs : {RootSystem::build(TypeLabel::G2, 2),
                  RootSystem::build(TypeLabel::B, 3)}) {
    CAPTURE(to_string(rs.type_label()));
    IntVec two_rho;
    REQUIRE(rs.root_coords_int(2 * rs.rho(), two_rho));
    // Iterate over the whole coordinate box [0, 2rho].
    IntVec nu(rs.rank(), 0);
    bool done = false;
    while (!done) {
      for (std::int64_t parts = 0; parts <= 4; ++parts) {
        PartitionQuery q = make_query(rs, nu, parts);
        CHECK(count(rs, q).value == count_oracle(rs, q).value);
        // Restricted variant: exclude the highest root.
        PartitionQuery qe = q;
        qe.excluded_roots.push_back(rs.highest_root());
        CHECK(count(rs, qe).value == count_oracle(rs, qe).value);
        // Forced variant: at least one copy of alpha_1.
        PartitionQuery qf = q;
        qf.forced_min.emplace_back(rs.simple_root(1), 1);
        CHECK(count(rs, qf).value == count_oracle(rs, qf).value);
      }
      // Odometer over the box.
      int j = 0;
      for (; j < rs.rank(); ++j) {
        if (nu[j] < two_rho[j]) {
          ++nu[j];
          break;
        }
        nu[j] = 0;
      }
      done = (j == rs.rank());
    }
  }
}

TEST_CASE("oracle equivalence: randomized on B4, F4, D4") {
  std::mt19937 rng(5150);
  for (auto rs : {RootSystem::build(TypeLabel::B, 4),
                  RootSystem::build(TypeLabel::F4, 4),
                  RootSystem::build(TypeLabel::D, 4)}) {
    CAPTURE(to_string(rs.type_label()));
    std::uniform_int_distribution<std::int64_t> coord(0, 8);
    std::uniform_int_distribution<std::int64_t> parts_dist(0, 6);
    std::uniform_int_distribution<std::size_t> root_pick(
        0, rs.positive_roots().size() - 1);
    std::uniform_int_distribution<int> flavor(0, 3);
    for (int t = 0; t < 250; ++t) {
      IntVec nu(rs.rank(), 0);
      for (auto& x : nu) x = coord(rng);
      PartitionQuery q = make_query(rs, nu, parts_dist(rng));
      switch (flavor(rng)) {
        case 1:
          q.excluded_roots.push_back(rs.positive_roots()[root_pick(rng)]);
          break;
        case 2:
          q.forced_min.emplace_back(rs.positive_roots()[root_pick(rng)], 1);
          break;
        case 3:
          q.excluded_roots.push_back(rs.positive_roots()[root_pick(rng)]);
          q.forced_min.emplace_back(rs.positive_roots()[root_pick(rng)], 2);
          break;
        default:
          break;
      }
      CHECK(count(rs, q).value == count_oracle(rs, q).value);
    }
  }
}

TEST_CASE("decomposition identity: forced + excluded partitions the count") {
  std::mt19937 rng(77);
  for (auto rs : {RootSystem::build(TypeLabel::G2, 2),
                  RootSystem::build(TypeLabel::B, 3)}) {
    CAPTURE(to_string(rs.type_label()));
    std::uniform_int_distribution<std::int64_t> coord(0, 10);
    std::uniform_int_distribution<std::size_t> root_pick(
        0, rs.positive_roots().size() - 1);
    for (int t = 0; t < 60; ++t) {
      IntVec nu(rs.rank(), 0);
      for (auto& x : nu) x = coord(rng);
      std::int64_t parts = static_cast<std::int64_t>(t % 7);
      const Root& beta = rs.positive_roots()[root_pick(rng)];
      PartitionQuery plain = make_query(rs, nu, parts);
      PartitionQuery forced = plain;
      forced.forced_min.emplace_back(beta, 1);
      PartitionQuery excluded = plain;
      excluded.excluded_roots.push_back(beta);
      CHECK(count(rs, plain).value ==
            count(rs, forced).value + count(rs, excluded).value);
    }
  }
}

TEST_CASE("monotone support: counts vanish outside the height window") {
  auto b3 = RootSystem::build(TypeLabel::B, 3);
  const std::int64_t ht_max = b3.highest_root().height;  // 5
  // Height 1 target with 2 parts; height 12 target with 2 parts (12 > 2*5).
  CHECK(count(b3, make_query(b3, IntVec{1, 0, 0}, 2)).value == 0);
  CHECK(count(b3, make_query(b3, IntVec{4, 4, 4}, 2)).value == 0);
  CHECK(12 > 2 * ht_max);
  // Sweep: whenever the window test fails the count is 0.
  for (std::int64_t a = 0; a <= 5; ++a)
    for (std::int64_t b = 0; b <= 5; ++b)
      for (std::int64_t c = 0; c <= 5; ++c)
        for (std::int64_t n = 0; n <= 4; ++n) {
          std::int64_t ht = a + b + c;
          if (ht >= n && ht <= n * ht_max) continue;
          CHECK(count(b3, make_query(b3, IntVec{a, b, c}, n)).value == 0);
        }
}

TEST_CASE("alternating sums from the large-rank computations") {
  // E6, p = 19: lambda = 7 omega_1, shift = omega_1, parts 8 -> 0.
  auto e6 = RootSystem::build(TypeLabel::E6, 6);
  CHECK(alternating_sum(e6, 7 * e6.fundamental_weight(1),
                        e6.fundamental_weight(1), 8) == 0);
  // E7, p = 23: lambda = 5 omega_7, shift = omega_7, parts 6 -> 1.
  auto e7 = RootSystem::build(TypeLabel::E7, 7);
  CHECK(alternating_sum(e7, 5 * e7.fundamental_weight(7),
                        e7.fundamental_weight(7), 6) == 1);
}

TEST_CASE("B3: sum_u (-1)^l P_m(u.((m+1)w3) - w3) = 1 for even m <= 12") {
  auto b3 = RootSystem::build(TypeLabel::B, 3);
  for (std::int64_t m = 0; m <= 12; m += 2) {
    CAPTURE(m);
    CHECK(alternating_sum(b3, (m + 1) * b3.fundamental_weight(3),
                          b3.fundamental_weight(3), m) == 1);
  }
}

TEST_CASE("type B family: first relation of the P identities") {
  // sum_u (-1)^l P_k(u.(m eps1 + (eps1+...+epsj)) - eps1)
  //   = P(m-1,k,j,n) + P(m,k,j-1,n-1), for n <= 5, m <= 6, k <= 8.
  for (int n = 1; n <= 5; ++n) {
    auto rs = RootSystem::build(TypeLabel::B, n);
    Weight eps1 = from_eps(rs, [&] {
      IntVec e(n, 0);
      e[0] = 1;
      return e;
    }());
    for (std::int64_t m = 0; m <= 6; ++m) {
      for (std::int64_t k = 0; k <= 8; ++k) {
        for (int j = 1; j <= n; ++j) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(k);
          CAPTURE(j);
          IntVec eps(n, 0);
          eps[0] = m + 1;
          for (int t = 1; t < j; ++t) eps[t] = 1;
          BigInt lhs = alternating_sum(rs, from_eps(rs, eps), eps1, k);
          BigInt rhs = bnp(m - 1, k, j, n) + bnp(m, k, j - 1, n - 1);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("type B family: counts vanish for k < m+1") {
  for (int n = 2; n <= 4; ++n)
    for (std::int64_t m = 0; m <= 5; ++m)
      for (std::int64_t k = 0; k <= m; ++k)
        for (int j = 1; j <= n; ++j) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(k);
          CAPTURE(j);
          CHECK(bnp(m, k, j, n) == 0);
        }
}

TEST_CASE("type D family: deletion recursion") {
  // P(m,k,n) = P(m,k,n-1) + P(m-2,k-2n+2,n) for n = 5, 6; m <= 6, k <= 10.
  for (int n : {5, 6}) {
    for (std::int64_t m = 0; m <= 6; ++m) {
      for (std::int64_t k = 0; k <= 10; ++k) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(dnp(m, k, n) ==
              dnp(m, k, n - 1) + dnp(m - 2, k - 2 * n + 2, n));
      }
    }
  }
}

TEST_CASE("type D family: P(m,m,n) = 1 for even m") {
  for (int n : {4, 5}) {
    for (std::int64_t m = 0; m <= 6; m += 2) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(dnp(m, m, n) == 1);
    }
  }
}

TEST_CASE("memo budget produces a clean error, never a wrong count") {
  auto b3 = RootSystem::build(TypeLabel::B, 3);
  IntVec big;
  REQUIRE(b3.root_coords_int(4 * b3.rho(), big));  // alpha-coords (10,16,18)
  CHECK_THROWS_AS(count(b3, make_query(b3, big, 15), /*memo_budget=*/5),
                  MemoBudgetExceeded);
  // Same query with room succeeds and agrees with a second evaluation.
  BigInt a = count(b3, make_query(b3, big, 15)).value;
  BigInt b = count(b3, make_query(b3, big, 15)).value;
  CHECK(a == b);
  CHECK(a > 0);
}

TEST_CASE("query_from_weight: lattice membership is enforced") {
  auto e6 = RootSystem::build(TypeLabel::E6, 6);
  // omega_1 is not in the root lattice.
  PartitionQuery q = query_from_weight(e6, e6.fundamental_weight(1), 3);
  CHECK(count(e6, q).value == 0);
  // alpha-tilde is a root: P_1 = 1.
  PartitionQuery q2 = query_from_weight(
      e6, e6.root_as_weight(e6.highest_root()), 1);
  CHECK(count(e6, q2).value == 1);
}
