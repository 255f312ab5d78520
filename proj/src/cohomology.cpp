// cohomology.cpp -- block decomposition, the alternating-sum dimension
// formula, candidate enumeration, degree bounds, least-nonvanishing scans,
// nonvanishing certificates, and the curated vanishing-range table.
#include "weylcoh/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace weylcoh {

namespace {

// w.0 = w(rho) - rho.
Weight dot_zero(const RootSystem& rs, const WeylElement& w) {
  return apply(w, rs.rho()) - rs.rho();
}

std::string weight_str(const Weight& x) { return to_string(x); }

// ceil(a / b) for exact rationals.
std::int64_t ceil_rat(const Rat& q) {
  const std::int64_t num = q.numerator();
  const std::int64_t den = q.denominator();  // > 0 after normalization
  if (num >= 0) return (num + den - 1) / den;
  return -((-num) / den);
}

void require_prime(const RootSystem& rs, std::int64_t p) {
  if (p <= rs.coxeter_number()) {
    std::ostringstream os;
    os << "block decomposition requires p > h = " << rs.coxeter_number()
       << " for " << to_string(rs.type_label()) << rs.rank() << ", got p = "
       << p;
    throw PrimeTooSmall(os.str());
  }
}

// Dominant weights mu with <mu, at^vee> <= cap, enumerated by DFS on the
// fundamental-weight coordinates (each contributes pair(omega_i, at) >= 1).
std::vector<Weight> dominant_mu_box(const RootSystem& rs, std::int64_t cap) {
  const int n = rs.rank();
  IntVec unit(n, 0);
  std::vector<std::int64_t> a(n, 0);
  for (int i = 0; i < n; ++i) {
    Weight wi = rs.fundamental_weight(i + 1);
    a[i] = rs.pair(wi, rs.highest_root());
  }
  std::vector<Weight> out;
  IntVec coords(n, 0);
  const std::function<void(int, std::int64_t)> walk = [&](int i,
                                                          std::int64_t left) {
    if (i == n) {
      out.push_back(Weight(coords));
      return;
    }
    for (std::int64_t c = 0; c * a[i] <= left; ++c) {
      coords[i] = c;
      walk(i + 1, left - c * a[i]);
    }
    coords[i] = 0;
  };
  if (cap >= 0) walk(0, cap);
  return out;
}

bool in_root_lattice(const RootSystem& rs, const Weight& x) {
  IntVec tmp;
  return rs.root_coords_int(x, tmp);
}

}  // namespace

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified";
    case CertStatus::CertifiedUnique: return "certified-unique";
    case CertStatus::Blocked: return "blocked";
  }
  return "?";
}

std::string to_string(Sharpness s) {
  switch (s) {
    case Sharpness::Sharp: return "sharp";
    case Sharpness::NotSharp: return "not-sharp";
    case Sharpness::Unknown: return "unknown";
  }
  return "?";
}

BoundVariant bound_variant_from_string(const std::string& s) {
  if (s == "universal") return BoundVariant::Universal;
  if (s == "adjoint") return BoundVariant::Adjoint;
  if (s == "twisted-adjoint") return BoundVariant::TwistedAdjoint;
  throw UsageError("unknown bound variant: " + s +
                   " (expected universal | adjoint | twisted-adjoint)");
}

std::string to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::Universal: return "universal";
    case BoundVariant::Adjoint: return "adjoint";
    case BoundVariant::TwistedAdjoint: return "twisted-adjoint";
  }
  return "?";
}

std::optional<Decomposition> decompose(const RootSystem& rs, std::int64_t p,
                                       const Weight& lambda) {
  require_prime(rs, p);
  const int n = rs.rank();
  const Weight lr = lambda + rs.rho();

  // Pass 1 (image stream, no matrices): find w(rho) with
  // lambda + rho - w(rho) = p * mu, mu dominant.
  IntVec found;
  std::int64_t found_len = -1;
  for_each_image(rs, rs.rho(), [&](const IntVec& img, std::int64_t len) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t d = lr.coords[j] - img[j];
      if (d < 0 || d % p != 0) return true;
    }
    found = img;
    found_len = len;
    return false;  // unique for p > h; stop at the first hit
  });
  if (found_len < 0) return std::nullopt;

  // Pass 2: materialize the group element (same enumeration order, so this
  // stops at the same position as pass 1).
  Decomposition dec;
  dec.p = p;
  dec.lambda = lambda;
  IntVec mu(n, 0);
  for (int j = 0; j < n; ++j) mu[j] = (lr.coords[j] - found[j]) / p;
  dec.mu = Weight(mu);
  bool got = false;
  for_each_element(rs, [&](const WeylElement& w) {
    if (w.length != found_len) return true;
    if (apply(w, rs.rho()).coords != found) return true;
    dec.w = w;
    got = true;
    return false;
  });
  if (!got) throw Error("internal: image found but element pass missed it");
  return dec;
}

BigInt cohom_dim(const RootSystem& rs, const Decomposition& dec,
                 std::int64_t degree, std::size_t memo_budget) {
  return cohom_dim_multi(rs, dec, {degree}, memo_budget)[0];
}

std::vector<BigInt> cohom_dim_multi(const RootSystem& rs,
                                    const Decomposition& dec,
                                    const std::vector<std::int64_t>& degrees,
                                    std::size_t memo_budget) {
  const std::int64_t lw = dec.w.length;
  std::vector<std::int64_t> parts;
  std::vector<int> slot(degrees.size(), -1);
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    const std::int64_t i = degrees[t];
    if (i < lw || ((i - lw) & 1)) continue;  // parity / floor: dimension 0
    slot[t] = static_cast<int>(parts.size());
    parts.push_back((i - lw) / 2);
  }
  std::vector<BigInt> sums;
  if (!parts.empty())
    sums = alternating_sum_multi(rs, dec.lambda, dec.mu, parts, {},
                                 memo_budget);
  std::vector<BigInt> out(degrees.size(), BigInt(0));
  for (std::size_t t = 0; t < degrees.size(); ++t) {
    if (slot[t] < 0) continue;
    if (sums[slot[t]] < 0) {
      std::ostringstream os;
      os << "negative dimension " << sums[slot[t]] << " at degree "
         << degrees[t] << " for lambda = " << weight_str(dec.lambda)
         << ": the alternating sum is a dimension only for dominant "
            "lambda = p*mu + w.0 with p > h";
      throw Error(os.str());
    }
    out[t] = sums[slot[t]];
  }
  return out;
}

std::vector<Decomposition> candidates(const RootSystem& rs, std::int64_t p,
                                      std::int64_t pairing_cap,
                                      bool root_lattice_only) {
  require_prime(rs, p);
  std::vector<Weight> mus = dominant_mu_box(rs, pairing_cap);
  if (root_lattice_only) {
    std::vector<Weight> kept;
    for (auto& m : mus)
      if (in_root_lattice(rs, m)) kept.push_back(m);
    mus.swap(kept);
  }
  std::vector<Decomposition> out;
  for_each_element(rs, [&](const WeylElement& w) {
    const Weight wdot = dot_zero(rs, w);
    for (const Weight& mu : mus) {
      const Weight lambda = p * mu + wdot;
      if (!lambda.dominant()) continue;
      if (!rs.in_nonneg_root_lattice(lambda - mu)) continue;
      Decomposition dec;
      dec.lambda = lambda;
      dec.mu = mu;
      dec.w = w;
      dec.p = p;
      out.push_back(std::move(dec));
    }
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) {
              return a.lambda.coords < b.lambda.coords;
            });
  return out;
}

DegreeBoundReport degree_bounds(const RootSystem& rs, const Decomposition& dec,
                                std::int64_t r) {
  if (dec.mu.is_zero())
    throw ZeroMu("degree bounds require mu != 0 (for mu = 0 the only "
                 "candidate is lambda = 0)");
  const std::int64_t p = dec.p;
  const std::int64_t lw = dec.w.length;
  const Weight wdot = dot_zero(rs, dec.w);
  const bool g2 = rs.type_label() == TypeLabel::G2;

  DegreeBoundReport rep;
  const std::int64_t at_pairing = rs.pair(dec.mu, rs.highest_root());

  // (a): per positive root sigma (long only in G2).
  bool first = true;
  for (const Root& sigma : rs.positive_roots()) {
    if (g2 && sigma.length_class == LengthClass::Short) continue;
    const std::int64_t mp = rs.pair(dec.mu, sigma);
    const std::int64_t v = p * mp - mp + lw + rs.pair(wdot, sigma);
    if (first || v > rep.bound_a) rep.bound_a = v;
    first = false;
  }

  // (b)/(c): highest-root pairing, self-paired.
  rep.bound_c = (p - 1) * at_pairing - 1;
  rep.bound_b = rep.bound_c;

  // Counting bound: lambda - mu must be a sum of (i - l(w))/2 positive
  // roots, and each positive root contributes at most m_s to the
  // alpha_s-coordinate.
  {
    const RatVec c = rs.root_coords(dec.lambda - dec.mu);
    const int n = rs.rank();
    std::int64_t best = lw;  // k >= 0 always
    for (int s = 0; s < n; ++s) {
      std::int64_t ms = 0;
      for (const Root& beta : rs.positive_roots())
        if (beta.simple_coords[s] > ms) ms = beta.simple_coords[s];
      const std::int64_t v = 2 * ceil_rat(c[s] / Rat(ms)) + lw;
      if (v > best) best = v;
    }
    rep.bound_count = best;
  }

  rep.bound_r = r * ((p - 1) * at_pairing - 1);
  return rep;
}

std::vector<CohomRecord> least_nonvanishing(const RootSystem& rs,
                                            std::int64_t p,
                                            std::int64_t degree_cutoff,
                                            bool root_lattice_only,
                                            std::size_t memo_budget) {
  std::vector<Decomposition> cands = candidates(rs, p, 1, root_lattice_only);
  if (rs.simply_laced()) {
    // The least nonzero dominant weight of the root lattice's block family:
    // (p - h + 1) * at.  Its pairing with at^vee is 2, so the cap-1 sweep
    // misses it.
    const Weight extra =
        (p - rs.coxeter_number() + 1) * rs.root_as_weight(rs.highest_root());
    bool have = false;
    for (const auto& d : cands)
      if (d.lambda == extra) have = true;
    if (!have) {
      auto dec = decompose(rs, p, extra);
      if (dec) cands.push_back(*dec);
    }
  }

  std::int64_t best_degree = -1;
  std::vector<CohomRecord> best;
  for (const Decomposition& dec : cands) {
    const std::int64_t lw = dec.w.length;
    std::vector<std::int64_t> degrees;
    const std::int64_t limit =
        (best_degree < 0) ? degree_cutoff : best_degree;
    for (std::int64_t i = std::max<std::int64_t>(lw, lw == 0 ? 2 : lw);
         i <= limit; i += 2)
      degrees.push_back(i);
    if (degrees.empty()) continue;
    const std::vector<BigInt> dims =
        cohom_dim_multi(rs, dec, degrees, memo_budget);
    for (std::size_t t = 0; t < degrees.size(); ++t) {
      if (dims[t] == 0) continue;
      CohomRecord rec;
      rec.dec = dec;
      rec.degree = degrees[t];
      rec.parts = (degrees[t] - lw) / 2;
      rec.dim = dims[t];
      if (best_degree < 0 || rec.degree < best_degree) {
        best_degree = rec.degree;
        best.clear();
      }
      if (rec.degree == best_degree) best.push_back(std::move(rec));
      break;  // degrees are increasing; later ones cannot beat this one
    }
  }
  std::sort(best.begin(), best.end(),
            [](const CohomRecord& a, const CohomRecord& b) {
              return a.dec.lambda.coords < b.dec.lambda.coords;
            });
  return best;
}

Certificate nonvanishing_certificate(const RootSystem& rs, std::int64_t p,
                                     std::int64_t m, const Weight& lambda,
                                     std::size_t memo_budget) {
  require_prime(rs, p);
  auto dec = decompose(rs, p, lambda);
  if (!dec)
    throw Error("nothing to certify: " + weight_str(lambda) +
                " is not of the form p*mu + w.0 with mu dominant");
  Certificate cert;
  cert.lambda = lambda;
  cert.degree = m;
  cert.dim_at_degree = cohom_dim(rs, *dec, m, memo_budget);
  if (cert.dim_at_degree == 0)
    throw Error("nothing to certify: the dimension at degree " +
                std::to_string(m) + " is already 0");

  // Dominant nu < lambda, linked to lambda, of block form, with
  // H^{m+1}(nu) != 0 -- the obstructions to the certificate.
  const int n = rs.rank();
  const RatVec lc = rs.root_coords(lambda);
  IntVec box(n, 0);
  for (int s = 0; s < n; ++s)
    box[s] = lc[s].numerator() / lc[s].denominator();  // floor (coords >= 0)
  IntVec q(n, 0);
  std::vector<Weight> lower;
  const std::function<void(int)> walk = [&](int s) {
    if (s == n) {
      bool zero = true;
      for (auto v : q)
        if (v != 0) zero = false;
      if (zero) return;
      const Weight nu = lambda - rs.weight_from_root_coords(q);
      if (nu.dominant()) lower.push_back(nu);
      return;
    }
    for (q[s] = 0; q[s] <= box[s]; ++q[s]) walk(s + 1);
    q[s] = 0;
  };
  walk(0);

  for (const Weight& nu : lower) {
    if (!linked(rs, p, lambda, nu)) continue;
    auto ndec = decompose(rs, p, nu);
    if (!ndec) continue;  // not in any block: all its cohomology vanishes
    const BigInt d = cohom_dim(rs, *ndec, m + 1, memo_budget);
    if (d == 0) continue;
    CohomRecord rec;
    rec.dec = *ndec;
    rec.degree = m + 1;
    rec.parts = (m + 1 - ndec->w.length) / 2;
    rec.dim = d;
    cert.blockers.push_back(std::move(rec));
  }
  if (!cert.blockers.empty()) {
    cert.status = CertStatus::Blocked;
    return cert;
  }
  cert.status = CertStatus::Certified;

  // Uniqueness sweep: every dominant weight with a chance of nonzero
  // cohomology in degree m has pairing <mu', at^vee> <= (m+1)/(p-1), and
  // must be a candidate.  If lambda is the only one nonzero at m, the
  // finite-group cohomology is exactly this group.
  cert.uniqueness_cap = (m + 1) / (p - 1);
  bool unique = true;
  for (const Decomposition& other : candidates(rs, p, cert.uniqueness_cap)) {
    if (other.lambda == lambda) continue;
    ++cert.candidates_checked;
    if (cohom_dim(rs, other, m, memo_budget) != 0) {
      unique = false;
      break;
    }
  }
  if (unique) cert.status = CertStatus::CertifiedUnique;
  return cert;
}

TheoremBound theorem_bound(const RootSystem& rs, std::int64_t p,
                           std::int64_t r, BoundVariant variant) {
  const int n = rs.rank();
  const int h = rs.coxeter_number();
  const TypeLabel t = rs.type_label();
  if (r < 1) throw UsageError("r must be >= 1");

  const auto scope_error = [&](const std::string& msg) -> TheoremBound {
    throw OutOfTheoremScope(msg);
  };
  const auto sharp = [&](std::int64_t d, const std::string& note) {
    TheoremBound b;
    b.bound = d;
    b.sharpness = Sharpness::Sharp;
    b.first_nonzero = d;
    b.note = note;
    return b;
  };

  if (variant == BoundVariant::Adjoint) {
    if (!rs.simply_laced())
      scope_error("adjoint bound is only proved for the simply-laced types");
    if (p <= h) scope_error("adjoint bound needs p > h");
    return sharp(r * (2 * p - 3),
                 "simply-laced adjoint groups: least nonvanishing degree "
                 "r(2p-3), from the root-lattice weight (p-h+1) * highest "
                 "root");
  }
  if (variant == BoundVariant::TwistedAdjoint) {
    const bool has_graph_aut =
        (t == TypeLabel::A && n >= 2) || (t == TypeLabel::D && n >= 4) ||
        t == TypeLabel::E6;
    if (!has_graph_aut)
      scope_error("twisted adjoint bound needs a simply-laced type with a "
                  "graph automorphism (A_n n>=2, D_n n>=4, E6)");
    if (p <= h) scope_error("twisted adjoint bound needs p > h");
    return sharp(r * (2 * p - 3),
                 "twisted adjoint groups: same least nonvanishing degree "
                 "r(2p-3) as the split adjoint form");
  }

  // Universal (simply connected) groups.
  switch (t) {
    case TypeLabel::A:
    case TypeLabel::C:
      scope_error("universal types A and C are covered by earlier rank-one "
                  "and symplectic results, not by this collection");
      break;
    case TypeLabel::D: {
      if (n < 4) scope_error("type D bounds need rank >= 4");
      if (p <= 2 * n - 2) scope_error("type D bounds need p > 2n-2");
      std::ostringstream os;
      os << "least nonvanishing degree r(2p-2n); the group there is "
         << (n == 4 ? "three-dimensional (the triality orbit of (p-2n+2)w1)"
                    : "one-dimensional, from lambda = (p-2n+2)w1");
      return sharp(r * (2 * p - 2 * n), os.str());
    }
    case TypeLabel::E6: {
      if (p < 13) scope_error("type E6 bounds need p >= 13");
      if (p == 13)
        return sharp(16 * r, "p = 13: the small weight w1 + w6 is linked to "
                             "zero and first appears in degree 16r");
      if (p == 17 && r % 2 == 0) {
        TheoremBound b;
        b.bound = 27 * r;
        b.sharpness = Sharpness::NotSharp;
        b.first_nonzero = 31 * r;
        b.note = "p = 17, r even: vanishing proved below 27r, nonzero class "
                 "known in degree 31r; degrees between are open";
        return b;
      }
      if (p == 19 && r >= 2) {
        TheoremBound b;
        b.bound = 32 * r;
        b.sharpness = Sharpness::NotSharp;
        b.first_nonzero = 35 * r;
        b.note = "p = 19, r >= 2: vanishing proved below 32r, nonzero class "
                 "known in degree 35r; degrees between are open";
        return b;
      }
      return sharp(r * (2 * p - 3),
                   "least nonvanishing degree r(2p-3), from the root-lattice "
                   "weight (p-h+1) * highest root");
    }
    case TypeLabel::E7: {
      if (p < 19) scope_error("type E7 bounds need p >= 19");
      if (p == 19)
        return sharp(27 * r, "p = 19: a weight in the w7 family is linked "
                             "below the generic degree; first nonvanishing "
                             "at 27r");
      if (p == 23)
        return sharp(39 * r, "p = 23: first nonvanishing at 39r = (2p-7)r, "
                             "from the weight (p-18)w7");
      return sharp(r * (2 * p - 3),
                   "least nonvanishing degree r(2p-3), from the root-lattice "
                   "weight (p-h+1) * highest root");
    }
    case TypeLabel::E8: {
      if (p < 31) scope_error("type E8 bounds need p >= 31");
      return sharp(r * (2 * p - 3),
                   "least nonvanishing degree r(2p-3), from the root-lattice "
                   "weight (p-h+1) * highest root");
    }
    case TypeLabel::B: {
      if (n < 3) scope_error("type B bounds need rank >= 3");
      if (p <= 2 * n) scope_error("type B bounds need p > 2n");
      if (r != 1) {
        TheoremBound b;
        b.bound = 0;
        b.sharpness = Sharpness::Unknown;
        b.note = "type B is only settled over the prime field (r = 1); no "
                 "bound is proved for r > 1";
        return b;
      }
      if (n >= 7 || (n >= 5 && p > 13))
        return sharp(2 * p - 3, "least nonvanishing degree 2p-3 over the "
                                "prime field");
      if (n >= 5 && p == 13)
        return sharp(2 * p - 5, "p = 13, rank 5 or 6: first nonvanishing at "
                                "2p-5 = 21, a one-dimensional group");
      if (n == 5 && p == 11)
        return sharp(2 * p - 7, "p = 11, rank 5: first nonvanishing at "
                                "2p-7 = 15, a one-dimensional group");
      if (n <= 4)
        return sharp(2 * p - 8, "rank 3 or 4: first nonvanishing at 2p-8, "
                                "from lambda = (p-2n)w_n + w.0 families");
      // n in {5, 6}, p = 11 for n = 6 falls outside every proved case.
      scope_error("no proved bound for this (rank, p) combination in type B");
      break;
    }
    case TypeLabel::G2: {
      if (p < 7) scope_error("type G2 bounds need p >= 7");
      if (r != 1) {
        TheoremBound b;
        b.bound = 0;
        b.sharpness = Sharpness::Unknown;
        b.note = "type G2 is only settled over the prime field (r = 1); no "
                 "bound is proved for r > 1";
        return b;
      }
      TheoremBound b;
      b.bound = 2 * p - 8;
      b.sharpness = Sharpness::Unknown;
      b.note = "vanishing holds below 2p-8; whether degree 2p-8 or 2p-7 is "
               "actually nonzero is open (the candidate at 2p-7 is blocked "
               "by a smaller linked weight)";
      return b;
    }
    case TypeLabel::F4: {
      if (p < 13) scope_error("type F4 bounds need p >= 13");
      if (r != 1) {
        TheoremBound b;
        b.bound = 0;
        b.sharpness = Sharpness::Unknown;
        b.note = "type F4 is only settled over the prime field (r = 1); no "
                 "bound is proved for r > 1";
        return b;
      }
      TheoremBound b;
      b.bound = 2 * p - 9;
      b.sharpness = Sharpness::Unknown;
      b.note = "vanishing holds below 2p-9; sharpness is open pending the "
               "conjectured cancellations in the w4 family";
      return b;
    }
  }
  throw OutOfTheoremScope("unhandled type");  // unreachable
}

}  // namespace weylcoh
