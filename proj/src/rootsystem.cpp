// rootsystem.cpp -- construction of the classical root data.
//
// Positive roots are generated from the simple roots by the standard
// root-string closure: for a root beta and simple root alpha_i, the alpha_i
// string through beta is beta - p*alpha_i, ..., beta + q*alpha_i with
// q = p - <beta, alpha_i^vee>; beta + alpha_i is a root exactly when q >= 1.
// Iterating by height visits every positive root once.

#include "weylcoh/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace weylcoh {

std::string to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::A: return "A";
    case TypeLabel::B: return "B";
    case TypeLabel::C: return "C";
    case TypeLabel::D: return "D";
    case TypeLabel::E6: return "E6";
    case TypeLabel::E7: return "E7";
    case TypeLabel::E8: return "E8";
    case TypeLabel::F4: return "F4";
    case TypeLabel::G2: return "G2";
  }
  return "?";
}

TypeLabel type_from_string(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "A") return TypeLabel::A;
  if (u == "B") return TypeLabel::B;
  if (u == "C") return TypeLabel::C;
  if (u == "D") return TypeLabel::D;
  if (u == "E" || u == "E6") return TypeLabel::E6;  // "E" resolved later by rank
  if (u == "E7") return TypeLabel::E7;
  if (u == "E8") return TypeLabel::E8;
  if (u == "F" || u == "F4") return TypeLabel::F4;
  if (u == "G" || u == "G2") return TypeLabel::G2;
  throw UsageError("unknown type label: " + s);
}

Weight operator+(const Weight& a, const Weight& b) {
  assert(a.rank() == b.rank());
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  assert(a.rank() == b.rank());
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator*(std::int64_t s, const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ",";
    os << w.coords[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r.simple_coords.size(); ++i) {
    if (i) os << ",";
    os << r.simple_coords[i];
  }
  os << "]";
  return os.str();
}

namespace {

// Fills the Cartan matrix (cartan[i][j] = <alpha_i, alpha_j^vee>) and the
// symmetrizer s_i = (alpha_i, alpha_i) for the given family, 0-indexed.
void make_cartan(TypeLabel type, int n, std::vector<IntVec>& cartan,
                 IntVec& symm, bool& simply_laced) {
  cartan.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  symm.assign(n, 2);
  simply_laced = true;

  auto single_edge = [&](int i, int j) {
    cartan[i][j] = -1;
    cartan[j][i] = -1;
  };

  switch (type) {
    case TypeLabel::A:
      for (int i = 0; i + 1 < n; ++i) single_edge(i, i + 1);
      break;
    case TypeLabel::B:
      for (int i = 0; i + 1 < n; ++i) single_edge(i, i + 1);
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.  (B1 has a single
      // short root and no edge to adjust.)
      if (n >= 2) {
        cartan[n - 2][n - 1] = -2;
        cartan[n - 1][n - 2] = -1;
        simply_laced = false;
      }
      symm[n - 1] = 1;
      break;
    case TypeLabel::C:
      for (int i = 0; i + 1 < n; ++i) single_edge(i, i + 1);
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      cartan[n - 2][n - 1] = -1;
      cartan[n - 1][n - 2] = -2;
      symm[n - 1] = 4;
      simply_laced = false;
      break;
    case TypeLabel::D:
      for (int i = 0; i + 1 < n - 1; ++i) single_edge(i, i + 1);
      single_edge(n - 3, n - 1);  // fork: alpha_{n-1} and alpha_n at alpha_{n-2}
      break;
    case TypeLabel::E6:
    case TypeLabel::E7:
    case TypeLabel::E8: {
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      single_edge(0, 2);
      single_edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) single_edge(i, i + 1);
      break;
    }
    case TypeLabel::F4:
      single_edge(0, 1);
      single_edge(2, 3);
      // alpha_2 long, alpha_3 short: <alpha_2, alpha_3^vee> = -2.
      cartan[1][2] = -2;
      cartan[2][1] = -1;
      symm[2] = 1;
      symm[3] = 1;
      simply_laced = false;
      break;
    case TypeLabel::G2:
      // alpha_1 short, alpha_2 long (Bourbaki).
      cartan[0][1] = -1;
      cartan[1][0] = -3;
      symm[0] = 2;
      symm[1] = 6;
      simply_laced = false;
      break;
  }
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt classical_weyl_order(TypeLabel type, int n) {
  switch (type) {
    case TypeLabel::A: return factorial(n + 1);
    case TypeLabel::B:
    case TypeLabel::C: return factorial(n) << n;
    case TypeLabel::D: return factorial(n) << (n - 1);
    case TypeLabel::E6: return 51840;
    case TypeLabel::E7: return 2903040;
    case TypeLabel::E8: return BigInt(696729600);
    case TypeLabel::F4: return 1152;
    case TypeLabel::G2: return 12;
  }
  return 0;
}

}  // namespace

RootSystem RootSystem::build(TypeLabel type, int rank) {
  auto bad = [&](const char* why) {
    throw InvalidRank("build(" + to_string(type) + ", " + std::to_string(rank) +
                      "): " + why);
  };
  constexpr int kMaxRank = 24;
  if (rank > kMaxRank) bad("rank above supported maximum (24)");
  switch (type) {
    case TypeLabel::A:
      if (rank < 1) bad("type A needs rank >= 1");
      break;
    case TypeLabel::B:
      // B1 is the rank-1 system on a single short root (epsilon_1); it is
      // needed as the base case of the type-B recursions.
      if (rank < 1) bad("type B needs rank >= 1");
      break;
    case TypeLabel::C:
      if (rank < 2) bad("type C needs rank >= 2");
      break;
    case TypeLabel::D:
      if (rank < 3) bad("type D needs rank >= 3");
      break;
    case TypeLabel::E6:
      if (rank != 6) bad("type E6 has rank 6");
      break;
    case TypeLabel::E7:
      if (rank != 7) bad("type E7 has rank 7");
      break;
    case TypeLabel::E8:
      if (rank != 8) bad("type E8 has rank 8");
      break;
    case TypeLabel::F4:
      if (rank != 4) bad("type F4 has rank 4");
      break;
    case TypeLabel::G2:
      if (rank != 2) bad("type G2 has rank 2");
      break;
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  make_cartan(type, rank, rs.cartan_, rs.symmetrizer_, rs.simply_laced_);
  const int n = rank;

  // --- positive roots by root-string closure, layered by height -----------
  std::set<IntVec> seen;
  std::vector<IntVec> layer;
  std::vector<IntVec> all;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
    all.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& b : layer) {
      for (int i = 0; i < n; ++i) {
        // <beta, alpha_i^vee>
        std::int64_t c = 0;
        for (int j = 0; j < n; ++j) c += b[j] * rs.cartan_[j][i];
        // steps down the alpha_i string
        std::int64_t down = 0;
        IntVec t = b;
        for (;;) {
          t[i] -= 1;
          if (t[i] < 0 || !seen.count(t)) break;
          ++down;
        }
        if (down - c >= 1) {
          IntVec up = b;
          up[i] += 1;
          if (seen.insert(up).second) {
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }

  // Deterministic order: height, then lexicographic coordinates.
  std::sort(all.begin(), all.end(), [](const IntVec& a, const IntVec& b) {
    std::int64_t ha = 0, hb = 0;
    for (auto v : a) ha += v;
    for (auto v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a < b;
  });

  // Norm scale N(beta) = 2 (beta, beta) = sum_{ij} b_i b_j cartan[i][j] s_j.
  auto norm2x2 = [&](const IntVec& b) {
    std::int64_t acc = 0;
    for (int i = 0; i < n; ++i) {
      if (!b[i]) continue;
      for (int j = 0; j < n; ++j)
        acc += b[i] * b[j] * rs.cartan_[i][j] * rs.symmetrizer_[j];
    }
    return acc;
  };
  std::int64_t max_norm = 0;
  std::vector<std::int64_t> norms;
  norms.reserve(all.size());
  for (const auto& b : all) {
    norms.push_back(norm2x2(b));
    max_norm = std::max(max_norm, norms.back());
  }

  rs.positive_roots_.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    Root r;
    r.simple_coords = all[k];
    r.length_class =
        norms[k] == max_norm ? LengthClass::Long : LengthClass::Short;
    r.height = 0;
    for (auto v : all[k]) r.height += v;
    r.omega_coords.assign(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        r.omega_coords[j] += all[k][i] * rs.cartan_[i][j];
    rs.positive_roots_.push_back(std::move(r));
  }

  // Index the simple roots: alpha_i is the unique root with simple_coords
  // equal to the i-th unit vector (all at height 1, but lex-reversed in the
  // sorted list).
  rs.simple_idx_.assign(n, 0);
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k) {
    const Root& r = rs.positive_roots_[k];
    if (r.height != 1) continue;
    for (int i = 0; i < n; ++i)
      if (r.simple_coords[i] == 1) rs.simple_idx_[i] = k;
  }

  // Distinguished roots.  The highest root is the unique root of maximal
  // height; the highest short root is the short root of maximal height
  // (equal to the highest root in the simply-laced case, where every root is
  // classified Long).
  std::int64_t best_h = -1, best_short_h = -1;
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k) {
    const Root& r = rs.positive_roots_[k];
    if (r.height > best_h) {
      best_h = r.height;
      rs.highest_idx_ = k;
    }
    bool short_ok = rs.simply_laced_ || r.length_class == LengthClass::Short;
    if (short_ok && r.height > best_short_h) {
      best_short_h = r.height;
      rs.highest_short_idx_ = k;
    }
  }
  rs.coxeter_number_ = static_cast<int>(best_h + 1);

  rs.rho_ = Weight(IntVec(n, 1));
  rs.weyl_order_ = classical_weyl_order(type, n);

  // --- exact inverse of cartan^T (adjugate + determinant) -----------------
  {
    std::vector<RatVec> m(n, RatVec(n, Rat(0)));
    std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      inv[i][i] = Rat(1);
      for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan_[j][i]);
    }
    Rat det(1);
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && m[piv][col] == Rat(0)) ++piv;
      assert(piv < n && "Cartan matrix is nonsingular");
      if (piv != col) {
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        det = -det;
      }
      det *= m[col][col];
      Rat scale = Rat(1) / m[col][col];
      for (int j = 0; j < n; ++j) {
        m[col][j] *= scale;
        inv[col][j] *= scale;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == Rat(0)) continue;
        Rat f = m[r][col];
        for (int j = 0; j < n; ++j) {
          m[r][j] -= f * m[col][j];
          inv[r][j] -= f * inv[col][j];
        }
      }
    }
    assert(is_integral(det) && det.numerator() > 0);
    rs.det_ = det.numerator();
    rs.adj_t_.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat a = inv[i][j] * det;
        assert(is_integral(a));
        rs.adj_t_[i][j] = a.numerator();
      }
  }

  // Height functional: ht(x) * det = sum_j (column sums of adj_t_) * coords.
  rs.height_functional_.assign(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rs.height_functional_[j] += rs.adj_t_[i][j];

  // Signed root lookup by omega coordinates.
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k) {
    const auto& oc = rs.positive_roots_[k].omega_coords;
    IntVec neg(oc.size());
    for (std::size_t j = 0; j < oc.size(); ++j) neg[j] = -oc[j];
    rs.root_lookup_[oc] = static_cast<int>(k) + 1;
    rs.root_lookup_[neg] = -(static_cast<int>(k) + 1);
  }

  return rs;
}

std::int64_t RootSystem::pair(const Weight& lambda, const Root& beta) const {
  // <lambda, beta^vee> = 2 * sum_i c_i b_i s_i / (2 (beta,beta)).
  std::int64_t num = 0;
  for (int i = 0; i < rank_; ++i)
    num += lambda.coords[i] * beta.simple_coords[i] * symmetrizer_[i];
  std::int64_t den = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!beta.simple_coords[i]) continue;
    for (int j = 0; j < rank_; ++j)
      den += beta.simple_coords[i] * beta.simple_coords[j] * cartan_[i][j] *
             symmetrizer_[j];
  }
  num *= 2;
  assert(den > 0 && num % den == 0);
  return num / den;
}

RatVec RootSystem::root_coords(const Weight& lambda) const {
  RatVec out(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank_; ++j) acc += adj_t_[i][j] * lambda.coords[j];
    out[i] = Rat(acc, det_);
  }
  return out;
}

bool RootSystem::in_nonneg_root_lattice(const Weight& lambda) const {
  for (int i = 0; i < rank_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank_; ++j) acc += adj_t_[i][j] * lambda.coords[j];
    if (acc < 0 || acc % det_ != 0) return false;
  }
  return true;
}

bool RootSystem::root_coords_int(const Weight& lambda, IntVec& out) const {
  out.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank_; ++j) acc += adj_t_[i][j] * lambda.coords[j];
    if (acc % det_ != 0) return false;
    out[i] = acc / det_;
  }
  return true;
}

Weight RootSystem::weight_from_root_coords(const IntVec& alpha_coords) const {
  Weight w(IntVec(rank_, 0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      w.coords[j] += alpha_coords[i] * cartan_[i][j];
  return w;
}

RatVec RootSystem::epsilon_view(const Weight& lambda) const {
  if (type_ != TypeLabel::B && type_ != TypeLabel::D)
    throw UnsupportedType("epsilon_view: defined for types B and D only");
  const int n = rank_;
  RatVec b = root_coords(lambda);
  RatVec e(n, Rat(0));
  if (type_ == TypeLabel::B) {
    // alpha_i = eps_i - eps_{i+1} (i < n), alpha_n = eps_n.
    for (int k = 0; k < n; ++k) e[k] = b[k] - (k > 0 ? b[k - 1] : Rat(0));
  } else {
    // alpha_i = eps_i - eps_{i+1} (i <= n-1), alpha_n = eps_{n-1} + eps_n.
    for (int k = 0; k + 2 < n; ++k) e[k] = b[k] - (k > 0 ? b[k - 1] : Rat(0));
    e[n - 2] = b[n - 2] + b[n - 1] - (n > 2 ? b[n - 3] : Rat(0));
    e[n - 1] = b[n - 1] - b[n - 2];
  }
  return e;
}

Weight RootSystem::weight_from_epsilon(const RatVec& eps) const {
  if (type_ != TypeLabel::B && type_ != TypeLabel::D)
    throw UnsupportedType("weight_from_epsilon: defined for types B and D only");
  const int n = rank_;
  if (static_cast<int>(eps.size()) != n)
    throw UsageError("weight_from_epsilon: wrong length");
  RatVec c(n, Rat(0));
  if (type_ == TypeLabel::B) {
    for (int j = 0; j + 1 < n; ++j) c[j] = eps[j] - eps[j + 1];
    c[n - 1] = Rat(2) * eps[n - 1];
  } else {
    for (int j = 0; j + 2 < n; ++j) c[j] = eps[j] - eps[j + 1];
    c[n - 2] = eps[n - 2] - eps[n - 1];
    c[n - 1] = eps[n - 2] + eps[n - 1];
  }
  Weight w(IntVec(n, 0));
  for (int j = 0; j < n; ++j) {
    if (!is_integral(c[j]))
      throw UsageError("weight_from_epsilon: not an integral weight");
    w.coords[j] = c[j].numerator();
  }
  return w;
}

Weight RootSystem::zero_weight() const { return Weight(IntVec(rank_, 0)); }

Weight RootSystem::fundamental_weight(int i) const {
  assert(i >= 1 && i <= rank_);
  Weight w(IntVec(rank_, 0));
  w.coords[i - 1] = 1;
  return w;
}

Weight RootSystem::root_as_weight(const Root& r) const {
  return Weight(r.omega_coords);
}

const Root& RootSystem::simple_root(int i) const {
  assert(i >= 1 && i <= rank_);
  return positive_roots_[simple_idx_[i - 1]];
}

int RootSystem::signed_root_index(const IntVec& omega_coords) const {
  auto it = root_lookup_.find(omega_coords);
  return it == root_lookup_.end() ? 0 : it->second;
}

}  // namespace weylcoh
