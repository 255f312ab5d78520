// kostant.cpp -- memoized partition counting, the brute-force oracle, and
// alternating Weyl sums.
#include "weylcoh/kostant.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace weylcoh {

namespace {

std::int64_t coord_sum(const IntVec& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

bool any_negative(const IntVec& v) {
  for (auto x : v)
    if (x < 0) return true;
  return false;
}

}  // namespace

KostantCounter::KostantCounter(const RootSystem& rs,
                               const std::vector<Root>& excluded,
                               std::size_t memo_budget)
    : rs_(&rs), budget_(memo_budget) {
  // Allowed roots in the fixed (height, lex) order, as alpha-coordinates.
  for (const Root& r : rs.positive_roots()) {
    bool skip = false;
    for (const Root& e : excluded)
      if (e.simple_coords == r.simple_coords) {
        skip = true;
        break;
      }
    if (skip) continue;
    roots_.push_back(r.simple_coords);
    heights_.push_back(r.height);
  }
  // Prefix maxima per coordinate for the per-coordinate feasibility prune.
  const int n = rs.rank();
  prefix_max_.assign(roots_.size(), IntVec(n, 0));
  IntVec running(n, 0);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (int j = 0; j < n; ++j)
      running[j] = std::max(running[j], roots_[i][j]);
    prefix_max_[i] = running;
  }
}

BigInt KostantCounter::count(const IntVec& alpha_target, std::int64_t parts) {
  assert(static_cast<int>(alpha_target.size()) == rs_->rank());
  if (parts < 0 || any_negative(alpha_target)) return 0;
  IntVec residual = alpha_target;
  return rec(static_cast<int>(roots_.size()) - 1, residual, parts,
             coord_sum(alpha_target));
}

BigInt KostantCounter::rec(int idx, IntVec& residual, std::int64_t parts,
                           std::int64_t height) {
  // Invariant: residual is coordinatewise nonnegative and height == its
  // coordinate sum.
  if (parts == 0) return height == 0 ? 1 : 0;
  if (idx < 0) return 0;
  // Height window: `parts` roots of height in [1, ht(roots_[idx])] (the list
  // is height-sorted, so roots_[idx] is the tallest still available).
  if (height < parts || height > parts * heights_[idx]) return 0;
  // Per-coordinate feasibility: no remaining root supplies more than the
  // prefix maximum of each simple-root coordinate.
  const IntVec& pm = prefix_max_[idx];
  for (std::size_t j = 0; j < residual.size(); ++j)
    if (residual[j] > parts * pm[j]) return 0;

  std::vector<std::int32_t> key(residual.size() + 2);
  key[0] = static_cast<std::int32_t>(idx);
  key[1] = static_cast<std::int32_t>(parts);
  for (std::size_t j = 0; j < residual.size(); ++j) {
    assert(residual[j] <= std::numeric_limits<std::int32_t>::max());
    key[j + 2] = static_cast<std::int32_t>(residual[j]);
  }
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Try multiplicity m of roots_[idx]; the residual stays nonnegative by
  // construction of m_max.
  const IntVec& root = roots_[idx];
  const std::int64_t ht = heights_[idx];
  std::int64_t m_max = parts;
  for (std::size_t j = 0; j < residual.size(); ++j)
    if (root[j] > 0) m_max = std::min(m_max, residual[j] / root[j]);
  BigInt total = 0;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    if (m > 0)
      for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= root[j];
    total += rec(idx - 1, residual, parts - m, height - m * ht);
  }
  // Undo the in-place subtraction.
  for (std::size_t j = 0; j < residual.size(); ++j)
    residual[j] += m_max * root[j];

  if (memo_.size() >= budget_)
    throw MemoBudgetExceeded(
        "partition memo exceeded " + std::to_string(budget_) +
        " states; raise the budget to continue");
  memo_.emplace(std::move(key), total);
  return total;
}

CountResult count(const RootSystem& rs, const PartitionQuery& q,
                  std::size_t memo_budget) {
  if (q.parts < 0) return {BigInt(0)};
  // Fold forced minimal multiplicities into the target: counting multisets
  // with at least m copies of beta is counting multisets of parts - m roots
  // summing to target - m*beta (beta itself stays allowed).
  IntVec target = q.target.coords;
  std::int64_t parts = q.parts;
  for (const auto& [root, mult] : q.forced_min) {
    if (mult < 0) return {BigInt(0)};
    // A forced root that is also excluded kills every multiset.
    if (mult > 0) {
      for (const Root& e : q.excluded_roots)
        if (e.simple_coords == root.simple_coords) return {BigInt(0)};
    }
    for (std::size_t j = 0; j < target.size(); ++j)
      target[j] -= mult * root.simple_coords[j];
    parts -= mult;
  }
  if (parts < 0 || any_negative(target)) return {BigInt(0)};
  KostantCounter counter(rs, q.excluded_roots, memo_budget);
  return {counter.count(target, parts)};
}

CountResult count_oracle(const RootSystem& rs, const PartitionQuery& q) {
  if (q.parts > 6)
    throw OracleTooLarge("count_oracle: parts > 6");
  if (rs.positive_roots().size() > 24)
    throw OracleTooLarge("count_oracle: more than 24 positive roots");
  if (q.parts < 0 || any_negative(q.target.coords)) return {BigInt(0)};

  // Allowed root indices.
  std::vector<int> allowed;
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    bool skip = false;
    for (const Root& e : q.excluded_roots)
      if (e.simple_coords == rs.positive_roots()[i].simple_coords) {
        skip = true;
        break;
      }
    if (!skip) allowed.push_back(static_cast<int>(i));
  }

  // Forced multiplicities by allowed-list position.
  std::vector<std::int64_t> need(allowed.size(), 0);
  for (const auto& [root, mult] : q.forced_min) {
    if (mult == 0) continue;
    bool found = false;
    for (std::size_t a = 0; a < allowed.size(); ++a) {
      if (rs.positive_roots()[allowed[a]].simple_coords == root.simple_coords) {
        need[a] += mult;
        found = true;
        break;
      }
    }
    if (!found) return {BigInt(0)};  // forced but excluded (or not a root)
  }

  // Enumerate all multisets i_1 <= ... <= i_parts of allowed roots;
  // count those summing to the target with the required multiplicities.
  BigInt hits = 0;
  IntVec residual = q.target.coords;
  std::vector<std::int64_t> used(allowed.size(), 0);
  // Recursive lambda over (allowed-list position, parts left).
  auto walk = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
    if (left == 0) {
      if (!any_negative(residual) && coord_sum(residual) == 0) {
        for (std::size_t a = 0; a < allowed.size(); ++a)
          if (used[a] < need[a]) return;
        ++hits;
      }
      return;
    }
    if (pos == allowed.size()) return;
    // Use 0..left copies of allowed[pos], then move on.
    const IntVec& rt = rs.positive_roots()[allowed[pos]].simple_coords;
    for (std::int64_t m = 0; m <= left; ++m) {
      if (m > 0) {
        for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= rt[j];
        used[pos] += 1;
      }
      if (!any_negative(residual)) self(self, pos + 1, left - m);
    }
    for (std::size_t j = 0; j < residual.size(); ++j)
      residual[j] += left * rt[j];
    used[pos] -= left;
  };
  walk(walk, 0, q.parts);
  return {hits};
}

PartitionQuery query_from_weight(const RootSystem& rs, const Weight& lambda,
                                 std::int64_t parts) {
  PartitionQuery q;
  q.parts = parts;
  IntVec alpha;
  if (rs.root_coords_int(lambda, alpha) && !any_negative(alpha)) {
    q.target = Weight(alpha);
  } else {
    // Not in the nonnegative integral root lattice: encode an impossible
    // target (count 0 for every parts except the empty sum of zero).
    IntVec bad(rs.rank(), 0);
    if (!bad.empty()) bad[0] = -1;
    q.target = Weight(bad);
  }
  return q;
}

std::int64_t counting_parts_min(const RootSystem& rs, const Weight& lambda) {
  const RatVec c = rs.root_coords(lambda);
  const int n = rs.rank();
  std::int64_t best = 0;
  for (int s = 0; s < n; ++s) {
    if (c[s] <= Rat(0)) continue;
    std::int64_t ms = 0;
    for (const Root& beta : rs.positive_roots())
      if (beta.simple_coords[s] > ms) ms = beta.simple_coords[s];
    const Rat q = c[s] / Rat(ms);
    // ceil of a positive rational.
    const std::int64_t k =
        (q.numerator() + q.denominator() - 1) / q.denominator();
    if (k > best) best = k;
  }
  return best;
}

BigInt alternating_sum(const RootSystem& rs, const Weight& lambda,
                       const Weight& shift, std::int64_t parts,
                       const std::vector<Root>& excluded,
                       std::size_t memo_budget) {
  return alternating_sum_multi(rs, lambda, shift, {parts}, excluded,
                               memo_budget)[0];
}

std::vector<BigInt> alternating_sum_multi(
    const RootSystem& rs, const Weight& lambda, const Weight& shift,
    const std::vector<std::int64_t>& parts_list,
    const std::vector<Root>& excluded, std::size_t memo_budget) {
  const int n = rs.rank();
  const auto& adj = rs.inv_cartan_t_scaled();
  const std::int64_t det = rs.cartan_det();
  KostantCounter counter(rs, excluded, memo_budget);

  Weight shifted = lambda + rs.rho();
  IntVec offset = shift.coords;  // u.lambda - shift = u(lambda+rho) - (shift+rho)
  for (auto& c : offset) c += 1;

  std::vector<BigInt> acc(parts_list.size(), BigInt(0));
  IntVec alpha(n, 0);
  for_each_image(rs, shifted, [&](const IntVec& img, std::int64_t len) {
    // Integer, nonnegative simple-root coordinates required; skip otherwise.
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int i = 0; i < n; ++i) s += adj[j][i] * (img[i] - offset[i]);
      if (s < 0 || s % det != 0) return true;
      alpha[j] = s / det;
    }
    for (std::size_t t = 0; t < parts_list.size(); ++t) {
      const BigInt c = counter.count(alpha, parts_list[t]);
      if ((len & 1) == 0)
        acc[t] += c;
      else
        acc[t] -= c;
    }
    return true;
  });
  return acc;
}

}  // namespace weylcoh
