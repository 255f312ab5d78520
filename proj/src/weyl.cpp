// weyl.cpp -- Weyl group elements, enumeration over a parabolic tower,
// inversion sets, coset representatives, and p-linkage.
#include "weylcoh/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace weylcoh {

namespace {

using Mat = std::vector<IntVec>;

Mat identity_matrix(int n) {
  Mat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Row-vector times matrix: (x * A)_c = sum_r x_r A[r][c].
IntVec vec_mul(const IntVec& x, const Mat& a) {
  const int n = static_cast<int>(x.size());
  IntVec y(n, 0);
  for (int r = 0; r < n; ++r) {
    const std::int64_t xr = x[r];
    if (xr == 0) continue;
    const IntVec& row = a[r];
    for (int c = 0; c < n; ++c) y[c] += xr * row[c];
  }
  return y;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out(n, IntVec(n, 0));
  for (int r = 0; r < n; ++r) out[r] = vec_mul(a[r], b);
  return out;
}

// In place: A <- A * S_i (apply the simple reflection s_i after A).  Column
// update using the Cartan row of alpha_i: A[r][c] -= A[r][i] * C[i][c].
void right_mul_simple(Mat& a, int i, const std::vector<IntVec>& cartan) {
  const int n = static_cast<int>(a.size());
  const IntVec& ci = cartan[i];
  for (int r = 0; r < n; ++r) {
    const std::int64_t pivot = a[r][i];
    if (pivot == 0) continue;
    for (int c = 0; c < n; ++c) a[r][c] -= pivot * ci[c];
  }
}

// s_i applied to a coordinate vector: x - x_i * (Cartan row i).
IntVec reflect_simple(const IntVec& x, int i, const std::vector<IntVec>& cartan) {
  IntVec y = x;
  const std::int64_t xi = x[i];
  if (xi != 0) {
    const IntVec& ci = cartan[i];
    for (std::size_t c = 0; c < y.size(); ++c) y[c] -= xi * ci[c];
  }
  return y;
}

// Sign of the height of a root-lattice vector given in omega-coordinates
// (positive root -> +1, negative root -> -1); hvec is det * height.
int height_sign(const RootSystem& rs, const IntVec& omega) {
  const IntVec& h = rs.height_functional();
  std::int64_t s = 0;
  for (std::size_t j = 0; j < omega.size(); ++j) s += h[j] * omega[j];
  return (s > 0) - (s < 0);
}

// --- the parabolic tower -----------------------------------------------
// Level k (0-based) holds the minimal-length representatives of the cosets
// of W_{J_k} in W_{J_{k+1}}, J_k = {alpha_1..alpha_k}: the orbit of
// omega_{k+1} under <s_1..s_{k+1}>, one matrix and length per orbit point,
// identity first.  Lengths are breadth-first depths, which for an orbit of
// a dominant weight equal the representative lengths.
struct TowerLevel {
  std::vector<Mat> mats;
  std::vector<std::int64_t> lens;
};

std::vector<TowerLevel> build_tower(const RootSystem& rs) {
  const int n = rs.rank();
  const auto& cartan = rs.cartan();
  std::vector<TowerLevel> tower(n);
  for (int k = 0; k < n; ++k) {
    TowerLevel& level = tower[k];
    IntVec start(n, 0);
    start[k] = 1;  // omega_{k+1}
    std::map<IntVec, int> seen;
    seen[start] = 0;
    level.mats.push_back(identity_matrix(n));
    level.lens.push_back(0);
    std::vector<IntVec> points{start};
    for (std::size_t head = 0; head < points.size(); ++head) {
      const IntVec point = points[head];
      const Mat mat = level.mats[head];
      const std::int64_t len = level.lens[head];
      for (int i = 0; i <= k; ++i) {
        IntVec img = reflect_simple(point, i, cartan);
        if (seen.emplace(img, static_cast<int>(points.size())).second) {
          // New orbit point: representative s_i ∘ x_parent, whose matrix is
          // A_parent * S_i (the image vector meets s_i last).
          Mat m = mat;
          right_mul_simple(m, i, cartan);
          points.push_back(std::move(img));
          level.mats.push_back(std::move(m));
          level.lens.push_back(len + 1);
        }
      }
    }
  }
  return tower;
}

// Odometer over the tower streaming full matrices.  prefix = A_{x_1}...A_{x_k}
// so the element matrix is prefix * A_{x_n}; the innermost level is the
// largest, hence varies fastest.
bool walk_elements(const std::vector<TowerLevel>& tower, std::size_t k,
                   const Mat& prefix, std::int64_t len,
                   const std::function<bool(const WeylElement&)>& fn) {
  if (k == tower.size()) {
    WeylElement w;
    w.action = prefix;
    w.length = len;
    return fn(w);
  }
  const TowerLevel& level = tower[k];
  for (std::size_t t = 0; t < level.mats.size(); ++t) {
    if (!walk_elements(tower, k + 1, mat_mul(prefix, level.mats[t]),
                       len + level.lens[t], fn))
      return false;
  }
  return true;
}

bool walk_images(
    const std::vector<TowerLevel>& tower, std::size_t k, const IntVec& y,
    std::int64_t len,
    const std::function<bool(const IntVec&, std::int64_t)>& fn) {
  if (k == tower.size()) return fn(y, len);
  const TowerLevel& level = tower[k];
  for (std::size_t t = 0; t < level.mats.size(); ++t) {
    if (!walk_images(tower, k + 1, vec_mul(y, level.mats[t]),
                     len + level.lens[t], fn))
      return false;
  }
  return true;
}

}  // namespace

WeylElement weyl_identity(const RootSystem& rs) {
  WeylElement w;
  w.action = identity_matrix(rs.rank());
  w.length = 0;
  return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  assert(i >= 1 && i <= rs.rank());
  WeylElement w = weyl_identity(rs);
  right_mul_simple(w.action, i - 1, rs.cartan());
  w.length = 1;
  return w;
}

WeylElement root_reflection(const RootSystem& rs, const Root& beta) {
  const int n = rs.rank();
  WeylElement w;
  w.action = identity_matrix(n);
  // Row i = omega_i - <omega_i, beta^vee> beta.
  for (int i = 0; i < n; ++i) {
    const std::int64_t c = rs.pair(rs.fundamental_weight(i + 1), beta);
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) w.action[i][j] -= c * beta.omega_coords[j];
  }
  w.length = inversion_count(rs, w);
  return w;
}

WeylElement longest_element(const RootSystem& rs) {
  // Drive rho antidominant with simple reflections; the accumulated element
  // sends rho to -rho and is therefore w0.
  const int n = rs.rank();
  WeylElement w = weyl_identity(rs);
  IntVec x = rs.rho().coords;
  for (;;) {
    int i = -1;
    for (int j = 0; j < n; ++j)
      if (x[j] > 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    x = reflect_simple(x, i, rs.cartan());
    // w <- s_i ∘ w: the new element applies w first, then s_i.
    w.action = mat_mul(w.action, [&] {
      Mat s = identity_matrix(n);
      right_mul_simple(s, i, rs.cartan());
      return s;
    }());
  }
  w.length = static_cast<std::int64_t>(rs.positive_roots().size());
  return w;
}

Weight apply(const WeylElement& w, const Weight& lambda) {
  return Weight(vec_mul(lambda.coords, w.action));
}

WeylElement compose(const RootSystem& rs, const WeylElement& u,
                    const WeylElement& v) {
  WeylElement w;
  w.action = mat_mul(v.action, u.action);  // apply v, then u
  w.length = inversion_count(rs, w);
  return w;
}

Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  (void)rs;  // kept for signature symmetry with the other actions
  IntVec shifted = lambda.coords;
  for (auto& c : shifted) c += 1;
  IntVec img = vec_mul(shifted, w.action);
  for (auto& c : img) c -= 1;
  return Weight(std::move(img));
}

std::int64_t inversion_count(const RootSystem& rs, const WeylElement& w) {
  std::int64_t count = 0;
  for (const Root& beta : rs.positive_roots())
    if (height_sign(rs, vec_mul(beta.omega_coords, w.action)) < 0) ++count;
  return count;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  // {beta > 0 : w^{-1} beta < 0} = {-w(gamma) : gamma > 0, w(gamma) < 0}.
  std::vector<int> out;
  for (const Root& gamma : rs.positive_roots()) {
    IntVec img = vec_mul(gamma.omega_coords, w.action);
    int signed_idx = rs.signed_root_index(img);
    assert(signed_idx != 0);  // W permutes the roots
    if (signed_idx < 0) out.push_back(-signed_idx - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  // Exact rational Gauss-Jordan; the result is integral because W preserves
  // the weight lattice.
  const int n = rs.rank();
  std::vector<RatVec> aug(n, RatVec(2 * n, Rat(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = Rat(w.action[r][c]);
    aug[r][n + r] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (aug[r][col] != Rat(0)) {
        pivot = r;
        break;
      }
    assert(pivot >= 0);
    std::swap(aug[col], aug[pivot]);
    const Rat pv = aug[col][col];
    for (auto& x : aug[col]) x /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == Rat(0)) continue;
      const Rat f = aug[r][col];
      for (int c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  WeylElement out;
  out.action.assign(n, IntVec(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      assert(aug[r][n + c].denominator() == 1);
      out.action[r][c] = aug[r][n + c].numerator();
    }
  out.length = w.length;  // l(w^{-1}) = l(w)
  return out;
}

namespace {

// Minimal-length representative of the right coset w W_I: strip right
// descents inside I (w(alpha_i) < 0 iff l(w s_i) < l(w)).
WeylElement right_coset_min_rep(const RootSystem& rs, const WeylElement& w,
                                const std::vector<int>& I) {
  WeylElement out = w;
  for (;;) {
    int descent = -1;
    for (int i : I) {
      assert(i >= 1 && i <= rs.rank());
      const IntVec img = vec_mul(rs.simple_root(i).omega_coords, out.action);
      if (height_sign(rs, img) < 0) {
        descent = i - 1;
        break;
      }
    }
    if (descent < 0) return out;
    // out <- out ∘ s_descent; as matrices that is S_i * A, which only
    // changes row i: row_i <- row_i - sum_m C[i][m] row_m.
    const IntVec& ci = rs.cartan()[descent];
    IntVec new_row(rs.rank(), 0);
    for (int c = 0; c < rs.rank(); ++c) {
      std::int64_t acc = 0;
      for (int m = 0; m < rs.rank(); ++m) acc += ci[m] * out.action[m][c];
      new_row[c] = out.action[descent][c] - acc;
    }
    out.action[descent] = new_row;
    out.length -= 1;
  }
}

}  // namespace

WeylElement coset_min_rep(const RootSystem& rs, const WeylElement& w,
                          const std::vector<int>& I) {
  // Inversion maps W_I w bijectively onto w^{-1} W_I preserving lengths, so
  // the left-coset minimum is the inverse of the right-coset minimum of the
  // inverse.
  return inverse(rs, right_coset_min_rep(rs, inverse(rs, w), I));
}

void for_each_element(const RootSystem& rs,
                      const std::function<bool(const WeylElement&)>& fn) {
  const auto tower = build_tower(rs);
  walk_elements(tower, 0, identity_matrix(rs.rank()), 0, fn);
}

void for_each_image(
    const RootSystem& rs, const Weight& x,
    const std::function<bool(const IntVec&, std::int64_t)>& fn) {
  const auto tower = build_tower(rs);
  walk_images(tower, 0, x.coords, 0, fn);
}

std::vector<WeylElement> enumerate(const RootSystem& rs,
                                   std::size_t max_elements) {
  if (rs.weyl_order() > BigInt(max_elements))
    throw BudgetExceeded("Weyl group of order " + rs.weyl_order().str() +
                         " exceeds the materialization budget of " +
                         std::to_string(max_elements) +
                         " elements; use the streaming interface");
  std::vector<WeylElement> out;
  out.reserve(static_cast<std::size_t>(rs.weyl_order()));
  for_each_element(rs, [&](const WeylElement& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool linked(const RootSystem& rs, std::int64_t p, const Weight& lambda,
            const Weight& nu) {
  const int n = rs.rank();
  const auto& adj = rs.inv_cartan_t_scaled();
  const std::int64_t mod = rs.cartan_det() * p;
  IntVec target = nu.coords;
  for (auto& c : target) c += 1;  // nu + rho
  Weight shifted(lambda.coords);
  for (auto& c : shifted.coords) c += 1;  // lambda + rho
  bool found = false;
  for_each_image(rs, shifted, [&](const IntVec& img, std::int64_t) {
    // u(lambda+rho) - (nu+rho) must lie in p ZPhi: every det-scaled
    // simple-root coordinate divisible by det*p.
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int i = 0; i < n; ++i) s += adj[j][i] * (img[i] - target[i]);
      if (s % mod != 0) return true;  // continue scanning
    }
    found = true;
    return false;  // stop
  });
  return found;
}

LinkageClassId linkage_class_id(const RootSystem& rs, std::int64_t p,
                                const Weight& lambda) {
  const int n = rs.rank();
  const auto& adj = rs.inv_cartan_t_scaled();
  const std::int64_t det = rs.cartan_det();
  const std::int64_t mod = det * p;
  Weight shifted(lambda.coords);
  for (auto& c : shifted.coords) c += 1;
  IntVec best;
  for_each_image(rs, shifted, [&](const IntVec& img, std::int64_t) {
    IntVec reduced(n, 0);
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int i = 0; i < n; ++i) s += adj[j][i] * img[i];
      reduced[j] = ((s % mod) + mod) % mod;
    }
    if (best.empty() || reduced < best) best = std::move(reduced);
    return true;
  });
  // Realize the least residue as a weight: omega-coords of (best/det) in the
  // simple-root basis; integrality is guaranteed because best differs from
  // an actual u(lambda+rho) by an element of p*det*Z^n.
  LinkageClassId id;
  id.scaled_coords = best;
  IntVec omega(n, 0);
  for (int c = 0; c < n; ++c) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += best[j] * rs.cartan()[j][c];
    assert(acc % det == 0);
    omega[c] = acc / det;
  }
  id.canonical = Weight(std::move(omega));
  return id;
}

}  // namespace weylcoh
