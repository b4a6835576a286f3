#include <gtest/gtest.h>

#include "locoh/arith/polynomials.hpp"
#include "locoh/matrices/builders.hpp"
#include "locoh/matrices/linear_algebra.hpp"
#include "oracles.hpp"

using namespace locoh;

namespace {

const Field Q = Field::rationals();

PolyMatrix M(const std::vector<std::vector<std::string>>& rows, const Field& k = Q) {
  return PolyMatrix::from_strings(k, rows);
}

MultiPoly P(const std::string& s, const Field& k = Q) { return MultiPoly::parse(k, s); }

std::vector<Field> test_fields() {
  return {Q, Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7), Field::prime(101)};
}

PolyMatrix random_matrix(oracle::PolyGen& gen, std::size_t n) {
  PolyMatrix m(n, n, gen.field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.uniform(0, 3) == 0 ? MultiPoly(gen.field) : gen();
  return m;
}

}  // namespace

TEST(Builders, ADisplayPattern) {
  EXPECT_EQ(build_A(2, Q), M({{"s*x^2", "-x*y*(t+s)", "t*y^2", "0"}, {"0", "s*x^2", "-x*y*(t+s)", "t*y^2"}}));
  EXPECT_EQ(build_A(1, Q), M({{"s*x^2", "-x*y*(t+s)", "t*y^2"}}));
  EXPECT_THROW(build_A(0, Q), Error);
}

TEST(Builders, AbarRows) {
  EXPECT_EQ(build_Abar(1, Q), M({{"s", "-(t+s)", "t"}}));
  const PolyMatrix a2 = build_Abar(2, Q);
  EXPECT_EQ(a2(1, 0), P("0"));
  EXPECT_EQ(a2(1, 1), P("s"));
  EXPECT_EQ(a2(1, 2), P("-t-s"));
  EXPECT_EQ(a2(1, 3), P("t"));
  EXPECT_EQ(build_A(5, Q).substitute(Var::x, Scalar(1)).substitute(Var::y, Scalar(1)), build_Abar(5, Q));
}

TEST(Builders, BExamples) {
  EXPECT_EQ(build_B(1, Q), M({{"-t-s"}}));
  EXPECT_EQ(build_B(2, Q), M({{"-t-s", "t"}, {"s", "-t-s"}}));
  EXPECT_EQ(build_B(3, Q), M({{"-t-s", "t", "0"}, {"s", "-t-s", "t"}, {"0", "s", "-t-s"}}));
  EXPECT_THROW(build_B(0, Q), Error);
}

TEST(Builders, MDisplay) {
  const PolyMatrix m5 = build_M(5, Q);
  EXPECT_EQ(m5.shape(), "6x2");
  EXPECT_EQ(m5.column_vector(0), (std::vector<MultiPoly>{P("0"), P("t"), P("-t-s"), P("s"), P("0"), P("0")}));
  const PolyMatrix m8 = build_M(8, Q);
  for (std::size_t j = 0; j < m8.cols(); ++j) {
    EXPECT_TRUE(m8(0, j).is_zero());
    EXPECT_TRUE(m8(8, j).is_zero());
  }
  for (int d = 5; d <= 14; ++d) {
    const auto last = static_cast<std::size_t>(d) + 1;
    EXPECT_EQ(build_M(d, Q).remove_rows({1, 2, last - 1, last}), build_B(d - 3, Q)) << d;
  }
  EXPECT_THROW(build_M(4, Q), Error);
}

TEST(Builders, MColumnsAreMultiplesOfF) {
  // column j of M_d lists the coefficients of x^{j-1} y^{d-3-j} F against y^d, x y^{d-1}, ..., x^d
  const MultiPoly F = P("s*x^3*y-(t+s)*x^2*y^2+t*x*y^3");
  const int d = 9;
  const PolyMatrix m = build_M(d, Q);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    MultiPoly expanded(Q);
    for (std::size_t r = 0; r < m.rows(); ++r)
      expanded += m(r, j) * MultiPoly::monomial(Q, Monomial{{Var::x, static_cast<std::uint32_t>(r)},
                                                            {Var::y, static_cast<std::uint32_t>(d - static_cast<int>(r))}});
    const MultiPoly shift = MultiPoly::monomial(
        Q, Monomial{{Var::x, static_cast<std::uint32_t>(j)}, {Var::y, static_cast<std::uint32_t>(d - 4 - static_cast<int>(j))}});
    EXPECT_EQ(expanded, shift * F) << j;
  }
}

TEST(Matrix, ShapesAndErrors) {
  const PolyMatrix a = build_A(3, Q);
  EXPECT_EQ(a.shape(), "3x5");
  EXPECT_THROW(det(a), Error);
  EXPECT_THROW(a * a, Error);
  EXPECT_THROW(a.remove_rows({4}), Error);
  EXPECT_THROW(a.remove_rows({0}), Error);
  EXPECT_THROW(build_B(2, Q) * build_B(2, Field::prime(3)), Error);
  EXPECT_EQ(a.transpose().shape(), "5x3");
  EXPECT_EQ(a.transpose().transpose(), a);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(det(build_B(2, Q)), P("t^2+s*t+s^2"));
  EXPECT_EQ(det(build_B(3, Q)), P("-(t^3+s*t^2+s^2*t+s^3)"));
  EXPECT_EQ(det(PolyMatrix::identity(3, Q)), P("1"));
  EXPECT_EQ(det(M({{"t", "s"}, {"t", "s"}})), P("0"));
  EXPECT_THROW(PolyMatrix(0, 0, Q), Error);
}

TEST(Determinant, IdentityOverEveryField) {
  for (const Field& k : test_fields())
    for (int i = 1; i <= 30; ++i) EXPECT_EQ(det(build_B(i, k)), tau(i, k)) << k.spec() << " i=" << i;
}

TEST(Determinant, ReducesFromRationals) {
  // det over F_p equals the Q determinant with coefficients reduced mod p
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    const Field k = Field::prime(p);
    for (int i = 1; i <= 12; ++i) EXPECT_EQ(det(build_B(i, Q)).change_field(k), det(build_B(i, k)));
  }
}

TEST(Determinant, FirstRowRecurrence) {
  const MultiPoly a = P("-t-s"), b = P("s*t");
  std::vector<MultiPoly> d{MultiPoly(Q), det(build_B(1, Q)), det(build_B(2, Q))};
  for (int i = 3; i <= 30; ++i) {
    d.push_back(det(build_B(i, Q)));
    EXPECT_EQ(d[i], a * d[i - 1] - b * d[i - 2]) << i;
  }
}

TEST(Determinant, AgreesWithModularEvaluation) {
  const std::uint64_t q = 1000003;
  std::mt19937_64 rng(31);
  for (int i = 1; i <= 30; ++i) {
    const PolyMatrix b = build_B(i, Q);
    const MultiPoly d = det(b);
    for (int trial = 0; trial < 3; ++trial) {
      oracle::Exps pt{};
      for (auto& c : pt) c = rng() % q;
      EXPECT_EQ(oracle::eval_mod(d, pt, q), oracle::det_mod(oracle::eval_matrix_mod(b, pt, q), q)) << i;
    }
  }
}

TEST(DeterminantProperty, BareissAgreesWithCofactorAndLeibniz) {
  for (const Field k : {Q, Field::prime(3)}) {
    oracle::PolyGen gen(32, k, {Var::s, Var::t, Var::x});
    gen.max_terms = 2;
    gen.max_exp = 2;
    for (int trial = 0; trial < 120; ++trial) {
      const auto n = static_cast<std::size_t>(gen.uniform(1, trial < 100 ? 5 : 8));
      const PolyMatrix m = random_matrix(gen, n);
      const MultiPoly bareiss = det(m, DetMethod::Bareiss);
      EXPECT_EQ(bareiss, det(m, DetMethod::Cofactor));
      if (n <= 5) {
        EXPECT_EQ(bareiss, oracle::leibniz_det(m));
      }
    }
  }
  EXPECT_THROW(det(PolyMatrix::identity(9, Q), DetMethod::Cofactor), Error);
}

TEST(DeterminantProperty, SingularMatrices) {
  oracle::PolyGen gen(33, Q, {Var::s, Var::t});
  for (int trial = 0; trial < 40; ++trial) {
    PolyMatrix m = random_matrix(gen, 4);
    const MultiPoly c = gen();
    for (std::size_t i = 0; i < 4; ++i) m(i, 3) = m(i, 0) * c + m(i, 1);  // dependent column
    EXPECT_TRUE(det(m).is_zero());
    const PolyMatrix adj = adjugate(m);
    EXPECT_TRUE((m * adj).is_zero());
  }
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(build_B(1, Q)), M({{"1"}}));
  EXPECT_EQ(adjugate(build_B(2, Q)), M({{"-t-s", "-t"}, {"-s", "-t-s"}}));
  EXPECT_EQ(adjugate(PolyMatrix::diagonal({P("s"), P("t^2")})), PolyMatrix::diagonal({P("t^2"), P("s")}));
}

TEST(Adjugate, MatchesCofactorTranspose) {
  for (int i = 2; i <= 6; ++i) {
    const PolyMatrix b = build_B(i, Q), adj = adjugate(b);
    const auto n = static_cast<std::size_t>(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const MultiPoly minor = oracle::leibniz_det(b.remove({c + 1}, {r + 1}));
        EXPECT_EQ(adj(r, c), (r + c) % 2 ? -minor : minor);
      }
  }
}

TEST(AdjugateProperty, TimesMatrixIsDeterminant) {
  for (const Field& k : test_fields())
    for (int i = 1; i <= 15; ++i) {
      const PolyMatrix b = build_B(i, k), adj = adjugate(b);
      const auto n = static_cast<std::size_t>(i);
      EXPECT_EQ(b * adj, PolyMatrix::identity(n, k).scale(tau(i, k)));
      EXPECT_EQ(adj * b, PolyMatrix::identity(n, k).scale(tau(i, k)));
    }
  oracle::PolyGen gen(34, Q, {Var::s, Var::t, Var::y});
  gen.max_terms = 3;
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 5));
    const PolyMatrix m = random_matrix(gen, n);
    EXPECT_EQ(m * adjugate(m), PolyMatrix::identity(n, Q).scale(det(m)));
  }
}

TEST(SolveSquare, Examples) {
  const PolyMatrix b2 = build_B(2, Q);
  std::vector<MultiPoly> rhs{tau(2, Q), P("0")};
  const MembershipCertificate sol = solve_square(b2, rhs);
  ASSERT_TRUE(sol.has_solution());
  EXPECT_EQ(sol.solution(), (std::vector<MultiPoly>{P("-t-s"), P("-s")}));
  EXPECT_FALSE(solve_square(b2, unit_vector(2, 1, Q)).has_solution());
  const std::vector<MultiPoly> v{P("s"), P("t^3"), P("1")};
  const MembershipCertificate id = solve_square(PolyMatrix::identity(3, Q), v);
  ASSERT_TRUE(id.has_solution());
  EXPECT_EQ(id.solution(), v);
  EXPECT_THROW(solve_square(M({{"t", "t"}, {"s", "s"}}), v), Error);
  EXPECT_THROW(solve_square(b2, v), Error);
}

TEST(SolveSquare, SolutionCertificateIsChecked) {
  const PolyMatrix b2 = build_B(2, Q);
  EXPECT_THROW(MembershipCertificate::solution(b2, unit_vector(2, 1, Q), {P("1"), P("0")}), Error);
}

TEST(SolveSquareProperty, UnitVectorsAreTorsionButNotInImage) {
  for (int d = 3; d <= 10; ++d) {
    const PolyMatrix b = build_B(d - 1, Q);
    const auto n = static_cast<std::size_t>(d - 1);
    for (std::size_t j = 1; j <= n; ++j) {
      const auto e = unit_vector(n, j, Q);
      const MembershipCertificate none = solve_square(b, e);
      EXPECT_FALSE(none.has_solution()) << d << "," << j;
      std::vector<MultiPoly> scaled = e;
      scaled[j - 1] = tau(d - 1, Q);
      const MembershipCertificate some = solve_square(b, scaled);
      ASSERT_TRUE(some.has_solution());
      EXPECT_EQ(b * some.solution(), scaled);
    }
  }
}

TEST(SolveSquareProperty, RandomImagesAreRecovered) {
  oracle::PolyGen gen(35, Q, {Var::s, Var::t});
  gen.max_terms = 3;
  for (int i = 2; i <= 7; ++i) {
    const PolyMatrix b = build_B(i, Q);
    std::vector<MultiPoly> w;
    for (int r = 0; r < i; ++r) w.push_back(gen());
    const MembershipCertificate c = solve_square(b, b * w);
    ASSERT_TRUE(c.has_solution());
    EXPECT_EQ(c.solution(), w);
  }
}

TEST(MatricesProperty, BVanishesAtOrigin) {
  for (const Field& k : test_fields())
    for (int i = 1; i <= 30; ++i)
      EXPECT_TRUE(build_B(i, k).substitute(Var::s, Scalar(0)).substitute(Var::t, Scalar(0)).is_zero());
}
