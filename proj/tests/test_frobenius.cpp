#include <gtest/gtest.h>

#include "locoh/frobenius/frobenius.hpp"
#include "oracles.hpp"

using namespace locoh;

namespace {

const Field Q = Field::rationals();

MultiPoly P(const std::string& s, const Field& k = Q) { return MultiPoly::parse(k, s); }

}  // namespace

TEST(FrobeniusF, ExpandedAndProductFormsAgree) {
  EXPECT_EQ(build_F(Q), P("s*x^3*y-(t+s)*x^2*y^2+t*x*y^3"));
  for (const Field k : {Q, Field::prime(2), Field::prime(3), Field::prime(101)})
    EXPECT_EQ(build_F(k), build_F_product_form(k));
  EXPECT_EQ(build_F(Field::prime(2)), P("s*x^3*y+(t+s)*x^2*y^2+t*x*y^3", Field::prime(2)));
}

TEST(ComponentT, CasesAndShapes) {
  const auto at_n = component_T(8, 8, Q);
  EXPECT_EQ(at_n.which, ComponentCase::AtN);
  EXPECT_EQ(at_n.presentation.matrix.shape(), "7x5");
  EXPECT_EQ(at_n.presentation.matrix, build_M(8, Q).remove_rows({1, 9}));
  const auto below = component_T(8, 6, Q);
  EXPECT_EQ(below.which, ComponentCase::Below);
  EXPECT_EQ(below.presentation.matrix, build_M(6, Q));
  const auto top = component_T(8, 9, Q);
  EXPECT_EQ(top.which, ComponentCase::AtNPlus1);
  EXPECT_EQ(top.presentation.matrix, build_B(6, Q));
  EXPECT_EQ(top.presentation.generators.front().monomial.to_string(), "x^2*y^7");
  EXPECT_EQ(std::string(to_string(ComponentCase::AtNPlus1)), "at_n_plus_1");
}

TEST(ComponentT, RejectsOutOfRange) {
  EXPECT_THROW(component_T(5, 6, Q), Error);
  EXPECT_THROW(component_T(8, 4, Q), Error);
  EXPECT_THROW(component_T(8, 10, Q), Error);
}

TEST(ComponentTProperty, ShapesByCase) {
  for (int n = 6; n <= 12; ++n)
    for (int d = 5; d <= n + 1; ++d) {
      const auto c = component_T(n, d, Q);
      const PolyMatrix& m = c.presentation.matrix;
      const auto N = static_cast<std::size_t>(n), D = static_cast<std::size_t>(d);
      if (d < n) {
        EXPECT_EQ(m.rows(), D + 1);
        EXPECT_EQ(m.cols(), D - 3);
        for (std::size_t j = 0; j < m.cols(); ++j) {
          EXPECT_TRUE(m(0, j).is_zero());
          EXPECT_TRUE(m(D, j).is_zero());
          EXPECT_EQ(m(j + 1, j), P("t"));
          EXPECT_EQ(m(j + 2, j), P("-t-s"));
          EXPECT_EQ(m(j + 3, j), P("s"));
        }
      } else if (d == n) {
        EXPECT_EQ(m.rows(), N - 1);
        EXPECT_EQ(m.cols(), N - 3);
      } else {
        EXPECT_EQ(m.rows(), N - 2);
        EXPECT_EQ(m.cols(), N - 2);
      }
    }
}

TEST(ComponentTProperty, DerivedGeneratorsSpanQuotient) {
  // generator count = number of degree-d monomials outside (x^n, y^n)
  for (int n = 6; n <= 10; ++n)
    for (int d = 5; d <= n + 1; ++d) {
      int expected = 0;
      for (int a = 0; a <= d; ++a) expected += a < n && d - a < n;
      EXPECT_EQ(component_T(n, d, Q).presentation.generators.size(), static_cast<std::size_t>(expected));
    }
}

TEST(FrobeniusRecordProperty, CollapseAndDeterminant) {
  for (const Field k : {Q, Field::prime(2), Field::prime(3), Field::prime(5)})
    for (int n = 6; n <= 12; ++n) {
      const FrobeniusRecord r = frobenius_record(n, k);
      EXPECT_TRUE(r.collapse_matches_B);
      EXPECT_TRUE(r.det_equals_tau);
      EXPECT_EQ(r.determinant, tau(n - 2, k));
    }
}

TEST(FrobeniusGrowth, Examples) {
  const auto q = theorem2_growth({6, 8, 10}, Q);
  EXPECT_TRUE(q.growth.strictly_increasing());
  const auto f3 = theorem2_growth({9, 27}, Field::prime(3), 11);
  EXPECT_EQ(f3.growth.cumulative_distinct, (std::vector<int>{4, 12}));
  const auto single = theorem2_growth({6}, Q);
  EXPECT_EQ(single.growth.cumulative_distinct.front(), static_cast<int>(factor_tau(4, Q).factors().size()));
  EXPECT_TRUE(is_power_of(27, 3));
  EXPECT_FALSE(is_power_of(12, 2));
  EXPECT_FALSE(is_power_of(1, 2));
}

TEST(FrobeniusGrowthProperty, AgreesWithFactorModule) {
  for (int k = 0; k <= 3; ++k) {
    std::vector<int> ns, idx;
    for (int j = 0; j <= k; ++j) {
      ns.push_back(6 + 2 * j);
      idx.push_back(4 + 2 * j);
    }
    const auto g = theorem2_growth(ns, Q);
    EXPECT_EQ(g.growth.cumulative_distinct, accumulate_distinct(idx, Q).cumulative_distinct);
    EXPECT_EQ(g.growth.cumulative_distinct.back(), oracle::expected_distinct(idx, 0));
  }
}
