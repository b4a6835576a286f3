// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "locoh/cli/commands.hpp"
#include "locoh/cohomology/bigraded.hpp"
#include "locoh/cohomology/inverse_polynomials.hpp"
#include "locoh/cohomology/witnesses.hpp"
#include "locoh/factor/finite_field.hpp"
#include "locoh/factor/growth.hpp"
#include "locoh/frobenius/frobenius.hpp"
#include "locoh/matrices/builders.hpp"
#include "locoh/matrices/linear_algebra.hpp"
#include "oracles.hpp"

#ifndef LOCOH_GOLDEN_DIR
#error "LOCOH_GOLDEN_DIR must point at tests/golden"
#endif

using namespace locoh;

namespace {

const Field Q = Field::rationals();

struct Check {
  bool ok = true;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

void determinant_identity(Check& c) {
  std::vector<Field> fields{Q};
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) fields.push_back(Field::prime(p));
  for (const Field& k : fields)
    for (int i = 1; i <= 30; ++i) {
      const PolyMatrix b = build_B(i, k);
      const MultiPoly d = det(b);
      c.require(d == tau(i, k), "det B_" + std::to_string(i) + " != tau over " + k.spec());
      if (i <= 8) c.require(det(b, DetMethod::Cofactor) == d, "cofactor disagrees at i=" + std::to_string(i));
    }
}

void recurrence(Check& c) {
  const MultiPoly a = -(MultiPoly::var(Q, Var::t) + MultiPoly::var(Q, Var::s));
  const MultiPoly st = MultiPoly::var(Q, Var::s) * MultiPoly::var(Q, Var::t);
  std::vector<MultiPoly> d{MultiPoly(Q)};
  for (int i = 1; i <= 30; ++i) {
    d.push_back(det(build_B(i, Q)));
    if (i >= 3) c.require(d[i] == a * d[i - 1] - st * d[i - 2], "recurrence fails at i=" + std::to_string(i));
  }
}

void matrix_extraction(Check& c) {
  for (int d = 2; d <= 25; ++d) {
    const PolyMatrix m = matrix_of_f(d, Q);
    c.require(m == build_A(d - 1, Q), "matrix_of_f(" + std::to_string(d) + ") != A");
    c.require(inverse_basis(d + 2).size() == static_cast<std::size_t>(d + 1), "source rank");
    c.require(inverse_basis(d).size() == static_cast<std::size_t>(d - 1), "target rank");
    c.require(m.rows() == static_cast<std::size_t>(d - 1) && m.cols() == static_cast<std::size_t>(d + 1), "shape");
  }
}

void bigraded_collapse(Check& c) {
  for (int d = 2; d <= 15; ++d) {
    c.require(component_dd(d, Q).matrix == build_B(d - 1, Q), "component_dd(" + std::to_string(d) + ") != B");
    const PolyMatrix a = build_A(d - 1, Q);
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.require(column_bidegree(a, j) == Bidegree{2, static_cast<int>(j) + 1},
                "bidegree of column " + std::to_string(j + 1) + " at d=" + std::to_string(d));
  }
}

void torsion(Check& c) {
  for (int d = 2; d <= 10; ++d) {
    const PolyMatrix b = build_B(d - 1, Q);
    const auto n = b.rows();
    const auto adj_e1 = adjugate_apply(b, {unit_vector(n, 1, Q)}).front();
    std::vector<MultiPoly> target(n, MultiPoly(Q));
    target[0] = tau(d - 1, Q);
    c.require(b * adj_e1 == target, "B adj e1 != tau e1 at d=" + std::to_string(d));
    for (std::size_t j = 1; j <= n; ++j)
      c.require(!solve_square(b, unit_vector(n, j, Q)).has_solution(),
                "e_" + std::to_string(j) + " in image at d=" + std::to_string(d));
    c.require(b.substitute(Var::s, Scalar(0)).substitute(Var::t, Scalar(0)).is_zero(), "B mod (s,t) != 0");
    c.require(torsion_witness(d, Q).fiber_dimension == static_cast<std::size_t>(d - 1), "fiber dimension");
  }
}

void rational_growth(Check& c) {
  const GrowthReport g = accumulate_distinct(range(1, 20), Q);
  c.require(g.cumulative_distinct.back() == 20, "final count " + std::to_string(g.cumulative_distinct.back()));
  for (std::size_t a = 0; a < g.distinct.size(); ++a) {
    const MultiPoly& p = g.distinct[a];
    c.require(p.is_homogeneous_in({Var::s, Var::t}), "witness not homogeneous");
    c.require(is_normalized(p), "witness not normalized");
    for (std::size_t b = a + 1; b < g.distinct.size(); ++b) c.require(coprime(p, g.distinct[b]), "witnesses not coprime");
  }
  for (std::size_t n = 0; n < g.per_index.size(); ++n)
    c.require(g.per_index[n].reassemble() == tau(g.index_set[n], Q), "tau does not reassemble");
}

void characteristic_p(Check& c) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    long pm = p;
    for (int m = 1; pm - 2 <= 341; ++m, pm *= p) {
      if (pm - 2 < 1) continue;
      const auto cert = separability_check(p, m);
      c.require(cert.squarefree && cert.gcd_with_derivative.is_one(),
                "sigma not squarefree for p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  c.require(accumulate_distinct({1, 7, 25}, Field::prime(3)).strictly_increasing(), "F_3 growth not increasing");
  const Field f7 = Field::prime(7);
  const FactorReport fr = factor_over_prime_field(sigma(5, f7));
  std::vector<std::uint64_t> roots;
  bool linear = fr.factors().size() == 5;
  for (const auto& f : fr.factors()) {
    linear = linear && f.poly.total_degree() == 1 && f.multiplicity == 1 && f.poly.leading_term().coeff == 1;
    roots.push_back(f7.neg(f.poly.constant_term()).get_num().get_ui());
  }
  std::sort(roots.begin(), roots.end());
  c.require(linear, "sigma_5 over F_7 is not 5 distinct monic linear factors");
  c.require(roots == oracle::roots_by_enumeration({1, 1, 1, 1, 1, 1}, 7), "roots disagree with enumeration");
}

void frobenius_collapse(Check& c) {
  for (int n = 6; n <= 12; ++n) {
    const auto comp = component_T(n, n + 1, Q);
    c.require(comp.presentation.matrix == build_B(n - 2, Q), "T_{n+1} != B_{n-2} at n=" + std::to_string(n));
    c.require(det(comp.presentation.matrix) == tau(n - 2, Q), "det T_{n+1} != tau at n=" + std::to_string(n));
  }
  c.require(theorem2_growth({6, 8, 10, 12}, Q).growth.strictly_increasing(), "growth over Q not increasing");
  c.require(theorem2_growth({9, 27}, Field::prime(3)).growth.strictly_increasing(), "growth over F_3 not increasing");
}

void irrelevant_ideal(Check& c) {
  for (int i = 1; i <= 30; ++i) c.require(corollary_membership(i), "tau_" + std::to_string(i) + " not in m");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void reproducibility(Check& c) {
  using namespace locoh::cli;
  std::vector<RunConfig> configs(5);
  configs[0].command = Command::VerifyLemma1;
  configs[0].max_i = 12;
  configs[1].command = Command::Factors;
  configs[1].index_set = {1, 7, 25};
  configs[1].field = Field::prime(3);
  configs[1].seed = 17;
  configs[2].command = Command::Factors;
  configs[2].index_set = {1, 7, 25};
  configs[2].field = Field::prime(3);
  configs[3].command = Command::Cohomology;
  configs[3].d_min = 2;
  configs[3].d_max = 5;
  configs[4].command = Command::Frobenius;
  configs[4].index_set = {8};
  std::vector<std::string> outputs;
  for (const auto& cfg : configs) {
    const std::string a = render(cfg, run(cfg)), b = render(cfg, run(cfg));
    c.require(a == b, std::string("non-identical output for ") + to_string(cfg.command));
    outputs.push_back(a);
  }
  const std::string dir = LOCOH_GOLDEN_DIR;
  c.require(outputs[3] == read_file(dir + "/cohomology_q_d2-5.json"), "cohomology report differs from golden file");
  c.require(outputs[4] == read_file(dir + "/frobenius_q_n8.json"), "frobenius report differs from golden file");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no runtime bound
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "determinant identity over Q and F_p, Bareiss = cofactor", 60, determinant_identity},
      {2, "first-row recurrence for i = 3..30", 0, recurrence},
      {3, "matrix of f equals A_{d-1} for d = 2..25", 10, matrix_extraction},
      {4, "bigraded component (d,d) equals B_{d-1}, column bidegrees", 0, bigraded_collapse},
      {5, "torsion certificates for d = 2..10", 0, torsion},
      {6, "factor growth over Q reaches 20", 0, rational_growth},
      {7, "separability and growth in characteristic p", 0, characteristic_p},
      {8, "Frobenius collapse and witness growth", 30, frobenius_collapse},
      {9, "tau_i lies in the irrelevant ideal for i = 1..30", 0, irrelevant_ideal},
      {10, "byte-identical reports and golden files", 0, reproducibility},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0) check.require(secs < cr.budget_s, "exceeded " + std::to_string(cr.budget_s) + " s budget");
    std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name;
    std::cout << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)";
    if (!check.ok) std::cout << "  -- " << check.first_failure;
    std::cout << "\n";
    failures += !check.ok;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
