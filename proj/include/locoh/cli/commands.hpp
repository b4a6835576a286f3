#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "locoh/cli/run_config.hpp"
#include "locoh/cohomology/bigraded.hpp"
#include "locoh/cohomology/inverse_polynomials.hpp"
#include "locoh/cohomology/witnesses.hpp"
#include "locoh/factor/growth.hpp"
#include "locoh/frobenius/frobenius.hpp"
#include "locoh/matrices/builders.hpp"
#include "locoh/matrices/linear_algebra.hpp"

namespace locoh::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct RunResult {
  Json report;
  bool all_pass = true;
  std::vector<std::string> warnings;

  int exit_code() const { return all_pass ? kExitOk : kExitCheckFailed; }
};

namespace detail {

inline std::string scalar_text(const Scalar& c) { return locoh::detail::scalar_to_string(c); }

inline Json factors_json(const FactorReport& fr) {
  Json out = Json::array();
  for (const auto& f : fr.factors()) out.push_back({{"poly", f.poly.to_string()}, {"multiplicity", f.multiplicity}});
  return out;
}

inline Json poly_vector_json(const std::vector<MultiPoly>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

inline Json matrix_json(const PolyMatrix& m) { return m.to_strings(); }

inline Json header(const RunConfig& cfg) {
  Json j;
  j["tool"] = "locoh";
  j["version"] = kToolVersion;
  j["command"] = to_string(cfg.command);
  j["field"] = cfg.field.spec();
  if (cfg.seed) j["seed"] = *cfg.seed;
  else j["seed"] = nullptr;
  return j;
}

}  // namespace detail

/// det B_i = tau_i for i = 1..max_i, plus the first-row expansion recurrence
/// and (for i <= 8) agreement with cofactor expansion.
inline RunResult cmd_verify_lemma1(const RunConfig& cfg) {
  const Field& k = cfg.field;
  RunResult res;
  Json j = detail::header(cfg);
  j["max_i"] = cfg.max_i;
  Json rows = Json::array();
  const MultiPoly minus_t_minus_s = -(MultiPoly::var(k, Var::t) + MultiPoly::var(k, Var::s));
  const MultiPoly st = MultiPoly::var(k, Var::s) * MultiPoly::var(k, Var::t);
  std::vector<MultiPoly> dets;
  for (int i = 1; i <= cfg.max_i; ++i) {
    const PolyMatrix b = build_B(i, k);
    dets.push_back(det(b));
    const MultiPoly& d = dets.back();
    const MultiPoly t = tau(i, k);
    Json row;
    row["i"] = i;
    row["det"] = d.to_string();
    row["tau"] = t.to_string();
    const bool eq = d == t;
    row["det_equals_tau"] = eq;
    res.all_pass = res.all_pass && eq;
    if (i >= 3) {
      const bool rec = d == minus_t_minus_s * dets[dets.size() - 2] - st * dets[dets.size() - 3];
      row["recurrence"] = rec;
      res.all_pass = res.all_pass && rec;
    } else {
      row["recurrence"] = nullptr;
    }
    if (static_cast<std::size_t>(i) <= kCofactorMaxSize) {
      const bool agree = det(b, DetMethod::Cofactor) == d;
      row["cofactor_agrees"] = agree;
      res.all_pass = res.all_pass && agree;
    } else {
      row["cofactor_agrees"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  j["results"] = std::move(rows);
  j["all_pass"] = res.all_pass;
  res.report = std::move(j);
  return res;
}

/// Distinct irreducible factors of tau_i over the index set.
inline RunResult cmd_factors(const RunConfig& cfg) {
  const Field& k = cfg.field;
  RunResult res;
  if (!k.is_rational()) {
    bool any = false;
    for (int i : cfg.index_set) any = any || is_frobenius_index(i, k.characteristic());
    if (!any)
      res.warnings.push_back("index set has no element of the form " + std::to_string(k.characteristic()) +
                             "^m-2; growth is not guaranteed");
  }
  GrowthReport g = accumulate_distinct(cfg.index_set, k, cfg.seed);
  Json j = detail::header(cfg);
  j["index_set"] = cfg.index_set;
  j["warnings"] = res.warnings;
  Json per = Json::array();
  for (std::size_t n = 0; n < g.index_set.size(); ++n) {
    const FactorReport& fr = g.per_index[n];
    per.push_back({{"i", g.index_set[n]},
                   {"tau", fr.input().to_string()},
                   {"unit", detail::scalar_text(fr.unit())},
                   {"factors", detail::factors_json(fr)},
                   {"new_factors", g.new_counts[n]},
                   {"cumulative", g.cumulative_distinct[n]}});
  }
  j["per_index"] = std::move(per);
  j["distinct_total"] = g.cumulative_distinct.back();
  j["strictly_increasing"] = g.strictly_increasing();
  j["all_pass"] = true;
  res.report = std::move(j);
  return res;
}

/// Per-d torsion certificates and prime witnesses for H^2_{R+}(R)_{-d}.
inline RunResult cmd_cohomology(const RunConfig& cfg) {
  const Field& k = cfg.field;
  RunResult res;
  Json j = detail::header(cfg);
  j["d_min"] = cfg.d_min;
  j["d_max"] = cfg.d_max;
  Json recs = Json::array();
  for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
    const PolyMatrix a = build_A(d - 1, k);
    const bool matrix_ok = matrix_of_f(d, k) == a;
    Json bidegrees = Json::array();
    bool bideg_ok = true;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      auto bd = column_bidegree(a, c);
      bideg_ok = bideg_ok && bd && bd->total == 2 && bd->weight == static_cast<int>(c) + 1;
      if (bd) bidegrees.push_back({bd->total, bd->weight});
      else bidegrees.push_back(nullptr);
    }
    const bool component_ok = component_dd(d, k).matrix == build_B(d - 1, k);
    TorsionWitness tw = torsion_witness(d, k);
    FactorReport fr = factor_tau(d - 1, k, cfg.seed);
    Json witnesses = Json::array();
    bool avoid_ok = true;
    for (const auto& w : prime_witnesses(d, k, cfg.seed)) {
      witnesses.push_back({{"generator", w.generator.to_string()}, {"source_d", w.source_d}, {"avoids_s", w.avoids_s}});
      avoid_ok = avoid_ok && w.avoids_s;
    }
    Json rec;
    rec["d"] = d;
    rec["tau"] = tw.annihilator.to_string();
    rec["factors"] = detail::factors_json(fr);
    rec["torsion_certificate"] = {{"annihilator", tw.annihilator.to_string()},
                                  {"solution", detail::poly_vector_json(tw.solution)},
                                  {"e1_in_image", tw.nonmembership.has_solution()},
                                  {"failing_index", tw.nonmembership.failing_index()},
                                  {"fiber_dimension", tw.fiber_dimension},
                                  {"verified", true}};
    rec["prime_witnesses"] = std::move(witnesses);
    rec["matrix_of_f_matches_A"] = matrix_ok;
    rec["column_bidegrees"] = std::move(bidegrees);
    rec["component_matches_B"] = component_ok;
    res.all_pass = res.all_pass && matrix_ok && bideg_ok && component_ok && avoid_ok;
    recs.push_back(std::move(rec));
  }
  j["records"] = std::move(recs);
  j["all_pass"] = res.all_pass;
  res.report = std::move(j);
  return res;
}

/// Collapse T_{n+1} = Coker B_{n-2} and witness growth over the n values.
inline RunResult cmd_frobenius(const RunConfig& cfg) {
  const Field& k = cfg.field;
  RunResult res;
  if (!k.is_rational()) {
    bool any = false;
    for (int n : cfg.index_set) any = any || is_power_of(n, k.characteristic());
    if (!any)
      res.warnings.push_back("n set has no power of " + std::to_string(k.characteristic()) +
                             "; growth is not guaranteed");
  }
  std::vector<FrobeniusRecord> records;
  std::vector<int> indices;
  for (int n : cfg.index_set) {
    records.push_back(frobenius_record(n, k));
    indices.push_back(n - 2);
  }
  GrowthReport g = accumulate_distinct(indices, k, cfg.seed);
  Json j = detail::header(cfg);
  j["n_set"] = cfg.index_set;
  j["warnings"] = res.warnings;
  Json recs = Json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    res.all_pass = res.all_pass && r.collapse_matches_B && r.det_equals_tau;
    recs.push_back({{"n", r.component.n},
                    {"d", r.component.d},
                    {"case", to_string(r.component.which)},
                    {"matrix", detail::matrix_json(r.component.presentation.matrix)},
                    {"det", r.determinant.to_string()},
                    {"collapse_matches_B", r.collapse_matches_B},
                    {"det_equals_tau", r.det_equals_tau},
                    {"factors", detail::factors_json(g.per_index[i])},
                    {"new_witnesses", g.new_counts[i]},
                    {"cumulative", g.cumulative_distinct[i]}});
  }
  j["records"] = std::move(recs);
  j["strictly_increasing"] = g.strictly_increasing();
  j["all_pass"] = res.all_pass;
  res.report = std::move(j);
  return res;
}

inline RunResult run(const RunConfig& cfg) {
  validate(cfg);
  switch (cfg.command) {
    case Command::VerifyLemma1: return cmd_verify_lemma1(cfg);
    case Command::Factors: return cmd_factors(cfg);
    case Command::Cohomology: return cmd_cohomology(cfg);
    case Command::Frobenius: return cmd_frobenius(cfg);
  }
  throw UsageError("unknown command");
}

namespace detail {

inline std::string pass(bool b) { return b ? "PASS" : "FAIL"; }

inline std::string factor_product(const Json& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += "(" + f["poly"].get<std::string>() + ")";
    if (f["multiplicity"].get<int>() > 1) out += "^" + std::to_string(f["multiplicity"].get<int>());
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

inline std::string render_csv(const RunConfig& cfg, const RunResult& res) {
  std::ostringstream os;
  const Json& j = res.report;
  auto b = [](const Json& v) -> std::string { return v.is_null() ? "" : (v.get<bool>() ? "true" : "false"); };
  switch (cfg.command) {
    case Command::VerifyLemma1:
      os << "i,det_equals_tau,recurrence,cofactor_agrees\n";
      for (const auto& r : j["results"])
        os << r["i"].get<int>() << ',' << b(r["det_equals_tau"]) << ',' << b(r["recurrence"]) << ','
           << b(r["cofactor_agrees"]) << '\n';
      break;
    case Command::Factors:
      os << "i,new_factors,cumulative\n";
      for (const auto& r : j["per_index"])
        os << r["i"].get<int>() << ',' << r["new_factors"].get<int>() << ',' << r["cumulative"].get<int>() << '\n';
      break;
    case Command::Cohomology:
      os << "d,tau,num_prime_witnesses,torsion_verified,fiber_dimension\n";
      for (const auto& r : j["records"])
        os << r["d"].get<int>() << ',' << r["tau"].get<std::string>() << ',' << r["prime_witnesses"].size() << ','
           << b(r["torsion_certificate"]["verified"]) << ','
           << r["torsion_certificate"]["fiber_dimension"].get<std::size_t>() << '\n';
      break;
    case Command::Frobenius:
      os << "n,new_witnesses,cumulative\n";
      for (const auto& r : j["records"])
        os << r["n"].get<int>() << ',' << r["new_witnesses"].get<int>() << ',' << r["cumulative"].get<int>() << '\n';
      break;
  }
  return os.str();
}

inline std::string render_text(const RunConfig& cfg, const RunResult& res) {
  std::ostringstream os;
  const Json& j = res.report;
  os << "locoh " << kToolVersion << " " << to_string(cfg.command) << " field=" << cfg.field.spec() << "\n";
  for (const auto& w : res.warnings) os << "warning: " << w << "\n";
  switch (cfg.command) {
    case Command::VerifyLemma1:
      for (const auto& r : j["results"]) {
        const int i = r["i"].get<int>();
        os << "det B_" << i << " = τ_" << i << " = " << r["tau"].get<std::string>() << "  "
           << detail::pass(r["det_equals_tau"].get<bool>());
        if (!r["recurrence"].is_null()) os << "  recurrence " << detail::pass(r["recurrence"].get<bool>());
        os << "\n";
      }
      break;
    case Command::Factors:
      for (const auto& r : j["per_index"])
        os << "τ_" << r["i"].get<int>() << " = " << r["unit"].get<std::string>() << " * "
           << detail::factor_product(r["factors"]) << "  new=" << r["new_factors"].get<int>()
           << " cumulative=" << r["cumulative"].get<int>() << "\n";
      break;
    case Command::Cohomology:
      for (const auto& r : j["records"]) {
        const int d = r["d"].get<int>();
        os << "d=" << d << ": (Coker A_" << d - 1 << ")_(" << d << "," << d << ") = Coker B_" << d - 1
           << "  " << detail::pass(r["component_matches_B"].get<bool>()) << "; τ_" << d - 1 << "-torsion, e_1 ∉ im B_"
           << d - 1 << "; witnesses:";
        for (const auto& w : r["prime_witnesses"]) os << " <" << w["generator"].get<std::string>() << ">";
        os << "\n";
      }
      break;
    case Command::Frobenius:
      for (const auto& r : j["records"]) {
        const int n = r["n"].get<int>();
        os << "n=" << n << ": T_" << n + 1 << " = Coker B_" << n - 2 << "  "
           << detail::pass(r["collapse_matches_B"].get<bool>()) << "; det = τ_" << n - 2 << "  "
           << detail::pass(r["det_equals_tau"].get<bool>()) << "; cumulative=" << r["cumulative"].get<int>() << "\n";
      }
      break;
  }
  os << (res.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

inline std::string render(const RunConfig& cfg, const RunResult& res) {
  switch (cfg.format) {
    case Format::Json: return res.report.dump(2) + "\n";
    case Format::Csv: return render_csv(cfg, res);
    case Format::Text: return render_text(cfg, res);
  }
  return {};
}

}  // namespace locoh::cli
