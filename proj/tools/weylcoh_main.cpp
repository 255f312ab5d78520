// weylcoh_main.cpp -- command-line front end for the exact root-system
// combinatorics engine: build info, Kostant partition counts, cohomology
// dimensions, vanishing scans, nonvanishing certificates, curated bounds,
// the embedded expected tables, and the named verification suites.
//
// Conventions: weights passed with --lambda are omega-coordinates
// (coefficients on the fundamental weights); --nu and root arguments are
// simple-root coordinates.  Exit codes: 0 = all checks pass, 1 = some table
// or certificate check failed, 2 = usage or limit error.

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylcoh/cohomology.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/kostant.hpp"
#include "weylcoh/rootsystem.hpp"
#include "weylcoh/tables.hpp"
#include "weylcoh/weyl.hpp"

namespace {

using nlohmann::json;
using namespace weylcoh;

enum class OutMode { kText, kJson, kTsv };

struct GlobalOpts {
  bool as_json = false;
  bool as_tsv = false;
  int threads = 1;  // accepted for compatibility; evaluation is sequential
  std::size_t memo_budget = kDefaultMemoBudget;
  std::string data_dir;

  OutMode mode() const {
    if (as_json) return OutMode::kJson;
    if (as_tsv) return OutMode::kTsv;
    return OutMode::kText;
  }
};

IntVec parse_coords(const std::string& s, const char* what) {
  IntVec out;
  std::string cur;
  auto flush = [&] {
    bool bad = cur.empty();
    if (!bad) {
      try {
        std::size_t pos = 0;
        out.push_back(std::stoll(cur, &pos));
        bad = (pos != cur.size());
      } catch (const std::exception&) {
        bad = true;
      }
    }
    if (bad)
      throw UsageError(std::string(what) + ": bad coordinate list '" + s +
                       "' (expected comma-separated integers)");
    cur.clear();
  };
  for (const char c : s) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

RootSystem build_system(const std::string& type_s, int rank) {
  TypeLabel t = type_from_string(type_s);
  // A bare "E" resolves by rank (type_from_string defaults it to E6).
  if ((type_s == "E" || type_s == "e") && t == TypeLabel::E6) {
    if (rank == 7) t = TypeLabel::E7;
    if (rank == 8) t = TypeLabel::E8;
  }
  return RootSystem::build(t, rank);
}

Weight parse_weight(const RootSystem& rs, const std::string& s,
                    const char* what) {
  IntVec coords = parse_coords(s, what);
  if (static_cast<int>(coords.size()) != rs.rank())
    throw UsageError(std::string(what) + ": expected " +
                     std::to_string(rs.rank()) + " coordinates, got " +
                     std::to_string(coords.size()));
  return Weight(std::move(coords));
}

const Root& find_positive_root(const RootSystem& rs, const IntVec& alpha) {
  for (const Root& r : rs.positive_roots())
    if (r.simple_coords == alpha) return r;
  std::string msg = "not a positive root (simple-root coordinates):";
  for (const auto c : alpha) msg += " " + std::to_string(c);
  throw UsageError(msg);
}

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const json& j, OutMode mode) {
  if (mode == OutMode::kJson) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (mode == OutMode::kTsv) {
    if (j.contains("rows")) {
      std::cout << "inputs\texpected\tcomputed\tmatch\n";
      for (const auto& r : j.at("rows"))
        std::cout << r.at("inputs").get<std::string>() << '\t'
                  << r.at("expected").get<std::string>() << '\t'
                  << r.at("computed").get<std::string>() << '\t'
                  << (r.at("match").get<bool>() ? "true" : "false") << '\n';
    } else {
      for (const auto& [k, v] : j.items()) {
        if (k == "command") continue;
        std::cout << k << '\t' << scalar_str(v) << '\n';
      }
    }
    return;
  }
  if (j.contains("rows")) {
    for (const auto& r : j.at("rows"))
      std::cout << (r.at("match").get<bool>() ? "ok   " : "FAIL ")
                << r.at("inputs").get<std::string>()
                << " | expected: " << r.at("expected").get<std::string>()
                << " | computed: " << r.at("computed").get<std::string>()
                << "\n";
    std::cout << j.at("table_id").get<std::string>() << ": "
              << j.at("rows").size() << " rows, "
              << scalar_str(j.at("mismatches")) << " mismatches, "
              << scalar_str(j.at("runtime_ms")) << " ms\n";
  } else {
    for (const auto& [k, v] : j.items()) {
      if (k == "command") continue;
      std::cout << k << ": " << scalar_str(v) << "\n";
    }
  }
}

json report_json(const TableReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"inputs", r.inputs},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"match", r.match}});
  return json{{"table_id", rep.table_id},
              {"rows", std::move(rows)},
              {"runtime_ms", rep.runtime_ms},
              {"all_match", rep.all_match()},
              {"mismatches", rep.mismatches()}};
}

json record_json(const CohomRecord& rec) {
  return json{{"lambda", rec.dec.lambda.coords},
              {"mu", rec.dec.mu.coords},
              {"w_length", rec.dec.w.length},
              {"degree", rec.degree},
              {"parts", rec.parts},
              {"dim", rec.dim.str()}};
}

// --- subcommand runners ------------------------------------------------------

int run_build_info(const std::string& type_s, int rank, const GlobalOpts& g) {
  const RootSystem rs = build_system(type_s, rank);
  json j;
  j["command"] = "build-info";
  j["type"] = to_string(rs.type_label());
  j["rank"] = rs.rank();
  j["simply_laced"] = rs.simply_laced();
  j["coxeter_number"] = rs.coxeter_number();
  j["weyl_order"] = rs.weyl_order().str();
  j["positive_roots"] = rs.positive_roots().size();
  j["cartan_det"] = rs.cartan_det();
  j["highest_root"] = rs.highest_root().simple_coords;
  j["highest_short_root"] = rs.highest_short_root().simple_coords;
  j["rho"] = rs.rho().coords;
  emit(j, g.mode());
  return 0;
}

int run_kostant(const std::string& type_s, int rank, const std::string& nu_s,
                std::int64_t parts, const std::vector<std::string>& excludes,
                const std::vector<std::string>& forces, const GlobalOpts& g) {
  const RootSystem rs = build_system(type_s, rank);
  PartitionQuery q;
  IntVec nu = parse_coords(nu_s, "--nu");
  if (static_cast<int>(nu.size()) != rs.rank())
    throw UsageError("--nu: expected " + std::to_string(rs.rank()) +
                     " simple-root coordinates");
  q.target = Weight(nu);
  q.parts = parts;
  json jex = json::array();
  for (const auto& e : excludes) {
    const Root& r = find_positive_root(rs, parse_coords(e, "--exclude"));
    q.excluded_roots.push_back(r);
    jex.push_back(r.simple_coords);
  }
  json jfo = json::array();
  for (const auto& f : forces) {
    const auto pos = f.rfind(':');
    if (pos == std::string::npos)
      throw UsageError("--force expects ROOT:M, got '" + f + "'");
    const Root& r =
        find_positive_root(rs, parse_coords(f.substr(0, pos), "--force"));
    IntVec mv = parse_coords(f.substr(pos + 1), "--force multiplicity");
    if (mv.size() != 1)
      throw UsageError("--force expects a single multiplicity after ':'");
    q.forced_min.emplace_back(r, mv[0]);
    jfo.push_back({{"root", r.simple_coords}, {"min", mv[0]}});
  }
  const BigInt v = count(rs, q, g.memo_budget).value;
  json j;
  j["command"] = "kostant";
  j["type"] = to_string(rs.type_label());
  j["rank"] = rs.rank();
  j["nu"] = nu;
  j["parts"] = parts;
  j["excluded"] = std::move(jex);
  j["forced"] = std::move(jfo);
  j["value"] = v.str();
  emit(j, g.mode());
  return 0;
}

int run_dim(const std::string& type_s, int rank, std::int64_t p,
            const std::string& lambda_s, std::int64_t degree,
            const GlobalOpts& g) {
  const RootSystem rs = build_system(type_s, rank);
  const Weight lambda = parse_weight(rs, lambda_s, "--lambda");
  json j;
  j["command"] = "dim";
  j["type"] = to_string(rs.type_label());
  j["rank"] = rs.rank();
  j["p"] = p;
  j["lambda"] = lambda.coords;
  j["degree"] = degree;
  if (!lambda.dominant()) {
    j["dim"] = "0";
    j["note"] = "lambda is not dominant, so H^0(lambda) = 0";
    emit(j, g.mode());
    return 0;
  }
  const auto dec = decompose(rs, p, lambda);
  if (!dec) {
    j["dim"] = "0";
    j["note"] =
        "lambda has no expression p*mu + w.0 with mu dominant; "
        "every degree vanishes";
    emit(j, g.mode());
    return 0;
  }
  j["mu"] = dec->mu.coords;
  j["w_length"] = dec->w.length;
  const std::int64_t len = dec->w.length;
  if (degree >= len && (degree - len) % 2 == 0)
    j["parts"] = (degree - len) / 2;
  else
    j["parts"] = nullptr;
  j["dim"] = cohom_dim(rs, *dec, degree, g.memo_budget).str();
  emit(j, g.mode());
  return 0;
}

int run_vanish(const std::string& type_s, int rank, std::int64_t p,
               std::int64_t cutoff, std::int64_t cap, bool adjoint,
               const GlobalOpts& g) {
  const RootSystem rs = build_system(type_s, rank);
  if (cutoff < 0) cutoff = 2 * p;  // covers every curated record
  json j;
  j["command"] = "vanish";
  j["type"] = to_string(rs.type_label());
  j["rank"] = rs.rank();
  j["p"] = p;
  j["cutoff"] = cutoff;
  j["cap"] = cap;
  j["adjoint"] = adjoint;
  try {
    const TheoremBound tb = theorem_bound(
        rs, p, 1, adjoint ? BoundVariant::Adjoint : BoundVariant::Universal);
    json jt;
    jt["bound"] = tb.bound;
    jt["sharpness"] = to_string(tb.sharpness);
    jt["first_nonzero"] =
        tb.first_nonzero ? json(*tb.first_nonzero) : json(nullptr);
    jt["note"] = tb.note;
    j["theorem"] = std::move(jt);
  } catch (const OutOfTheoremScope& e) {
    j["theorem"] = nullptr;
    j["theorem_note"] = e.what();
  }
  const auto records =
      least_nonvanishing(rs, p, cutoff, adjoint, g.memo_budget);
  json jr = json::array();
  for (const auto& rec : records) jr.push_back(record_json(rec));
  j["records"] = std::move(jr);
  j["candidates_checked"] = candidates(rs, p, cap, adjoint).size();
  emit(j, g.mode());
  return 0;
}

int run_certify(const std::string& type_s, int rank, std::int64_t p,
                std::int64_t degree, const std::string& lambda_s,
                const GlobalOpts& g) {
  const RootSystem rs = build_system(type_s, rank);
  const Weight lambda = parse_weight(rs, lambda_s, "--lambda");
  const Certificate cert =
      nonvanishing_certificate(rs, p, degree, lambda, g.memo_budget);
  json j;
  j["command"] = "certify";
  j["type"] = to_string(rs.type_label());
  j["rank"] = rs.rank();
  j["p"] = p;
  j["degree"] = degree;
  j["lambda"] = cert.lambda.coords;
  j["status"] = to_string(cert.status);
  j["dim_at_degree"] = cert.dim_at_degree.str();
  json jb = json::array();
  for (const auto& rec : cert.blockers) jb.push_back(record_json(rec));
  j["blockers"] = std::move(jb);
  j["uniqueness_cap"] = cert.uniqueness_cap;
  j["candidates_checked"] = cert.candidates_checked;
  emit(j, g.mode());
  return cert.status == CertStatus::Blocked ? 1 : 0;
}

int run_table(const std::string& id, const GlobalOpts& g) {
  const TableReport rep =
      g.data_dir.empty() ? reproduce_table(id) : reproduce_table(id, g.data_dir);
  json j = report_json(rep);
  j["command"] = "table";
  emit(j, g.mode());
  return rep.all_match() ? 0 : 1;
}

int run_verify(const std::string& which,
               const std::vector<std::int64_t>& limits, const GlobalOpts& g) {
  auto lim = [&limits](std::size_t i, std::int64_t dflt) {
    return i < limits.size() ? limits[i] : dflt;
  };
  TableReport rep;
  if (which == "d") {
    if (limits.size() > 3) throw UsageError("verify d takes at most 3 limits");
    rep = verify_d_recursions(static_cast<int>(lim(0, 6)), lim(1, 8),
                              lim(2, 10));
  } else if (which == "b") {
    if (limits.size() > 3) throw UsageError("verify b takes at most 3 limits");
    rep = verify_b_thresholds(static_cast<int>(lim(0, 5)), lim(1, 6),
                              lim(2, 10));
  } else if (which == "g2") {
    if (limits.size() > 1) throw UsageError("verify g2 takes at most 1 limit");
    rep = verify_g2(lim(0, 40));
  } else if (which == "f4") {
    if (limits.size() > 1) throw UsageError("verify f4 takes at most 1 limit");
    const std::int64_t m_max = lim(0, 7);
    if (m_max < 1) throw UsageError("verify f4: limit must be >= 1");
    std::vector<std::int64_t> ms;
    for (std::int64_t m = 1; m <= m_max; ++m) ms.push_back(m);
    rep = verify_f4_conjectures(ms);
  } else {
    throw UsageError("verify: expected one of d, b, g2, f4; got '" + which +
                     "'");
  }
  json j = report_json(rep);
  j["command"] = "verify";
  emit(j, g.mode());
  return rep.all_match() ? 0 : 1;
}

int run_bounds(const std::string& type_s, int rank, std::int64_t p,
               std::int64_t r, const std::string& variant_s,
               const GlobalOpts& g) {
  const RootSystem rs = build_system(type_s, rank);
  const BoundVariant variant = bound_variant_from_string(variant_s);
  const TheoremBound tb = theorem_bound(rs, p, r, variant);
  json j;
  j["command"] = "bounds";
  j["type"] = to_string(rs.type_label());
  j["rank"] = rs.rank();
  j["p"] = p;
  j["r"] = r;
  j["variant"] = to_string(variant);
  j["bound"] = tb.bound;
  j["sharpness"] = to_string(tb.sharpness);
  j["first_nonzero"] =
      tb.first_nonzero ? json(*tb.first_nonzero) : json(nullptr);
  j["note"] = tb.note;
  emit(j, g.mode());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weylcoh: exact root-system combinatorics, Kostant partition counts, "
      "and rational-cohomology dimensions for induced modules"};
  app.require_subcommand(1);

  GlobalOpts g;
  auto* flag_json =
      app.add_flag("--json", g.as_json, "emit one JSON document on stdout");
  auto* flag_tsv = app.add_flag("--tsv", g.as_tsv, "emit tab-separated rows");
  flag_json->excludes(flag_tsv);
  flag_tsv->excludes(flag_json);
  app.add_option("--threads", g.threads,
                 "accepted for compatibility; evaluation is sequential")
      ->check(CLI::PositiveNumber);
  app.add_option("--memo-budget", g.memo_budget,
                 "partition-count memo state cap");
  app.add_option("--data-dir", g.data_dir,
                 "directory holding the expected-table TSV files");

  std::string type_s;
  int rank = 0;
  std::string nu_s, lambda_s, table_id, verify_which, variant_s = "universal";
  std::int64_t parts = 0, p = 0, degree = 0, cutoff = -1, cap = 1, rr = 1;
  bool adjoint = false;
  std::vector<std::string> excludes, forces;
  std::vector<std::int64_t> verify_limits;

  auto add_type_rank = [&type_s, &rank](CLI::App* sub) {
    sub->add_option("type", type_s, "type label: A, B, C, D, E, F, G")
        ->required();
    sub->add_option("rank", rank, "rank of the root system")->required();
    sub->fallthrough();
  };

  auto* c_info = app.add_subcommand(
      "build-info", "print the basic invariants of a root system");
  add_type_rank(c_info);

  auto* c_kostant = app.add_subcommand(
      "kostant",
      "count multisets of positive roots with a given sum and size");
  add_type_rank(c_kostant);
  c_kostant
      ->add_option("--nu", nu_s, "target in simple-root coordinates, e.g. 2,2")
      ->required();
  c_kostant->add_option("--parts", parts, "exact number of roots")->required();
  c_kostant->add_option("--exclude", excludes,
                        "positive root to exclude (simple-root coordinates); "
                        "repeatable");
  c_kostant->add_option("--force", forces,
                        "ROOT:M forces at least M copies of ROOT; repeatable");

  auto* c_dim = app.add_subcommand(
      "dim", "dimension of H^i(G, H^0(lambda) (x) H^0(lambda*)^{(1)})");
  add_type_rank(c_dim);
  c_dim->add_option("--p", p, "characteristic (requires p > h)")->required();
  c_dim->add_option("--lambda", lambda_s,
                    "dominant weight in omega-coordinates, e.g. 0,0,0,0,9")
      ->required();
  c_dim->add_option("--degree", degree, "cohomological degree i")->required();

  auto* c_vanish = app.add_subcommand(
      "vanish",
      "least nonvanishing degree scan plus the curated theorem bound");
  add_type_rank(c_vanish);
  c_vanish->add_option("--p", p, "characteristic (requires p > h)")
      ->required();
  c_vanish->add_option("--cutoff", cutoff,
                       "scan degrees 0 < i <= cutoff (default 2p)");
  c_vanish->add_option("--cap", cap,
                       "pairing cap for the reported candidate count");
  c_vanish->add_flag("--adjoint", adjoint,
                     "restrict to root-lattice weights (adjoint form)");

  auto* c_certify = app.add_subcommand(
      "certify",
      "check the hypotheses tying dim H^m(lambda) != 0 to H^m(G(F_p), k)");
  add_type_rank(c_certify);
  c_certify->add_option("--p", p, "characteristic (requires p > h)")
      ->required();
  c_certify->add_option("--degree", degree, "degree m to certify")->required();
  c_certify
      ->add_option("--lambda", lambda_s,
                   "dominant weight in omega-coordinates")
      ->required();

  auto* c_table = app.add_subcommand(
      "table", "recompute an embedded expected table row by row");
  c_table->add_option("id", table_id, "table id; see the data directory")
      ->required();
  c_table->fallthrough();

  auto* c_verify = app.add_subcommand(
      "verify", "run a named identity suite: d, b, g2, or f4");
  c_verify->add_option("which", verify_which, "d | b | g2 | f4")->required();
  c_verify->add_option("limits", verify_limits,
                       "suite limits (d/b: n_max m_max k_max; g2: a_max; "
                       "f4: m_max)");
  c_verify->fallthrough();

  auto* c_bounds = app.add_subcommand(
      "bounds", "curated vanishing bound for H^i(G(F_{p^r}), k)");
  add_type_rank(c_bounds);
  c_bounds->add_option("--p", p, "characteristic")->required();
  c_bounds->add_option("--r", rr, "q = p^r (default 1)");
  c_bounds->add_option("--variant", variant_s,
                       "universal | adjoint | twisted-adjoint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_info->parsed()) return run_build_info(type_s, rank, g);
    if (c_kostant->parsed())
      return run_kostant(type_s, rank, nu_s, parts, excludes, forces, g);
    if (c_dim->parsed()) return run_dim(type_s, rank, p, lambda_s, degree, g);
    if (c_vanish->parsed())
      return run_vanish(type_s, rank, p, cutoff, cap, adjoint, g);
    if (c_certify->parsed())
      return run_certify(type_s, rank, p, degree, lambda_s, g);
    if (c_table->parsed()) return run_table(table_id, g);
    if (c_verify->parsed()) return run_verify(verify_which, verify_limits, g);
    if (c_bounds->parsed())
      return run_bounds(type_s, rank, p, rr, variant_s, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
