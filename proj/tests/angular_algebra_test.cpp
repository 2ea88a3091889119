#include "oracles.hpp"
#include "tpss/angular_algebra.hpp"
#include "tpss/errors.hpp"
#include "tpss/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace tpss {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> theta_samples(int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(kPi * i / (n - 1));
  return out;
}

TEST(WignerSmallD, IdentityAtZeroAngle) {
  EXPECT_DOUBLE_EQ(wigner_small_d(2, 2, 2, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(wigner_small_d(2, 2, 0, 0.0), 0.0);
  for (int j = 0; j <= 8; ++j) {
    for (int a = -j; a <= j; ++a) {
      for (int b = -j; b <= j; ++b) EXPECT_EQ(wigner_small_d(j, a, b, 0.0), a == b ? 1.0 : 0.0);
    }
  }
}

TEST(WignerSmallD, J2CentralElementIsP2) {
  for (double theta : theta_samples(10)) {
    const double c = std::cos(theta);
    EXPECT_NEAR(wigner_small_d(2, 0, 0, theta), (3.0 * c * c - 1.0) / 2.0, 1e-12) << theta;
  }
}

TEST(WignerSmallD, FrozenValues) {
  // exp(-i theta J_y) in 40-digit arithmetic.
  struct Case {
    int j, m1, m2;
    double theta, expected;
  };
  const Case cases[] = {
      {2, 2, 1, 0.7, -0.5684712761159606},  {2, 1, -1, 1.3, 0.5621937909967674},
      {3, -2, 1, 2.2, -0.38861783389274884}, {4, 2, -3, 0.4, -0.0032256441593111903},
      {6, 0, 2, 1.9, -0.14934220896412234},  {8, 2, -2, 2.8, -0.19639231184294614},
      {8, -5, 3, 0.9, 0.16500169228008868},
  };
  for (const auto& c : cases) {
    EXPECT_NEAR(wigner_small_d(c.j, c.m1, c.m2, c.theta), c.expected, 1e-13)
        << c.j << " " << c.m1 << " " << c.m2;
  }
}

TEST(WignerSmallD, MatchesGeneratorExponential) {
  for (int j = 0; j <= 8; ++j) {
    for (double theta : {0.0, 0.3, 1.0, kPi / 2, 2.1, 2.9, kPi}) {
      const Eigen::MatrixXd reference = oracle::wigner_d_matrix(j, theta);
      for (int a = -j; a <= j; ++a) {
        for (int b = -j; b <= j; ++b) {
          EXPECT_NEAR(wigner_small_d(j, a, b, theta), reference(j - a, j - b), 1e-12)
              << "J=" << j << " m1=" << a << " m2=" << b << " theta=" << theta;
        }
      }
    }
  }
}

TEST(WignerSmallD, ReflectionSymmetry) {
  for (int j = 0; j <= 8; ++j) {
    for (double theta : theta_samples(20)) {
      for (int a = -j; a <= j; ++a) {
        for (int b = -j; b <= j; ++b) {
          const double sign = ((j - b) % 2 == 0) ? 1.0 : -1.0;
          EXPECT_NEAR(wigner_small_d(j, a, b, kPi - theta), sign * wigner_small_d(j, -a, b, theta), 1e-12);
        }
      }
    }
  }
}

TEST(WignerSmallD, Orthogonality) {
  const auto& rule = default_quadrature();
  for (int m1 = -2; m1 <= 2; ++m1) {
    for (int m2 = -2; m2 <= 2; ++m2) {
      for (int j = std::max(std::abs(m1), std::abs(m2)); j <= 8; ++j) {
        for (int k = j; k <= 8; ++k) {
          const SmallD a(j, m1, m2);
          const SmallD b(k, m1, m2);
          const double integral = integrate_polar(rule, [&](double t) { return a(t) * b(t); });
          const double expected = j == k ? 2.0 / (2 * j + 1) : 0.0;
          EXPECT_NEAR(integral, expected, 1e-9) << j << " " << k << " " << m1 << " " << m2;
        }
      }
    }
  }
}

TEST(WignerSmallD, ExtendedBranchAboveDoubleRange) {
  // J = 21 takes the extended-precision branch; check against the generator oracle.
  for (double theta : {0.4, 1.3, 2.5}) {
    const Eigen::MatrixXd reference = oracle::wigner_d_matrix(21, theta);
    for (int a : {-21, -4, 0, 2, 17}) {
      for (int b : {-2, 0, 2, 21}) {
        EXPECT_NEAR(wigner_small_d(21, a, b, theta), reference(21 - a, 21 - b), 1e-10);
      }
    }
  }
}

TEST(WignerSmallD, DomainErrors) {
  EXPECT_THROW((void)wigner_small_d(2, 3, 0, 0.1), DomainError);
  EXPECT_THROW((void)wigner_small_d(2, 0, -3, 0.1), DomainError);
  EXPECT_THROW((void)wigner_small_d(-1, 0, 0, 0.1), DomainError);
  EXPECT_THROW((void)wigner_small_d(2, 0, 0, -0.1), DomainError);
  EXPECT_THROW((void)wigner_small_d(2, 0, 0, 3.2), DomainError);
  EXPECT_THROW((void)wigner_small_d(2, 0, 0, std::nan("")), DomainError);
}

TEST(Wigner3j, SelectionRulesGiveExactZero) {
  EXPECT_TRUE(wigner_3j_exact(1, 1, 3, 0, 0, 0).is_zero());
  EXPECT_EQ(wigner_3j(1, 1, 3, 0, 0, 0), 0.0);
  EXPECT_TRUE(wigner_3j_exact(2, 2, 2, 1, 1, 1).is_zero());
  // Odd j1+j2+j3 with all m = 0 vanishes.
  EXPECT_TRUE(wigner_3j_exact(2, 2, 1, 0, 0, 0).is_zero());
}

TEST(Wigner3j, ZeroCouplingClosedForm) {
  for (int j = 0; j <= 6; ++j) {
    for (int m = -j; m <= j; ++m) {
      const ExactThreeJ v = wigner_3j_exact(j, j, 0, m, -m, 0);
      // value^2 = 1/(2j+1) exactly, with sign (-1)^(j-m).
      const Rational expected_sq(1, 2 * j + 1);
      const bool negative = (j - m) % 2 != 0;
      EXPECT_EQ(v.signed_square(), negative ? Rational(-expected_sq) : expected_sq) << j << " " << m;
    }
  }
}

TEST(Wigner3j, FrozenValues) {
  // Exact symbolic values.
  EXPECT_EQ(wigner_3j_exact(2, 2, 4, 2, 2, -4).signed_square(), Rational(1, 9));
  EXPECT_NEAR(wigner_3j(2, 2, 4, 2, 2, -4), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(wigner_3j(3, 3, 4, 2, -2, 0), 0.18802535827258873, 1e-16);
  EXPECT_NEAR(wigner_3j(4, 4, 6, 2, 2, -4), -0.13993005245628826, 1e-16);
  EXPECT_NEAR(wigner_3j(5, 5, 6, 3, -3, 0), 0.07593288368438508, 1e-16);
  EXPECT_NEAR(wigner_3j(8, 8, 10, 2, 2, -4), -0.06991857302518471, 1e-16);
  EXPECT_NEAR(wigner_3j(6, 4, 3, -2, 1, 1), 0.027874733666903025, 1e-16);
  // sqrt(154)/66 squared.
  EXPECT_EQ(wigner_3j_exact(3, 3, 4, 2, -2, 0).signed_square(), Rational(154, 66 * 66));
}

TEST(Wigner3j, OrthogonalityIsExact) {
  // sum_{m1,m2} (2 j3 + 1) (j1 j2 j3; m1 m2 m3)(j1 j2 j3'; m1 m2 m3) = delta_{j3 j3'}.
  for (int j1 = 0; j1 <= 3; ++j1) {
    for (int j2 = 0; j2 <= 3; ++j2) {
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3) {
        for (int m3 = -j3; m3 <= j3; ++m3) {
          Rational diagonal(0);
          for (int m1 = -j1; m1 <= j1; ++m1) {
            const int m2 = -m1 - m3;
            if (std::abs(m2) > j2) continue;
            const auto w = wigner_3j_exact(j1, j2, j3, m1, m2, m3);
            diagonal += (2 * j3 + 1) * w.sum * w.sum * w.radicand;
          }
          EXPECT_EQ(diagonal, Rational(1)) << j1 << j2 << j3 << m3;

          // Off-diagonal: the radicands share the (m1, m2) factorials, so the
          // sum vanishes iff sum_k S S' (j1+m1)!(j1-m1)!(j2+m2)!(j2-m2)! does.
          for (int k = j3 + 1; k <= j1 + j2; ++k) {
            if (std::abs(m3) > k) continue;
            Rational off(0);
            for (int m1 = -j1; m1 <= j1; ++m1) {
              const int m2 = -m1 - m3;
              if (std::abs(m2) > j2) continue;
              const auto a = wigner_3j_exact(j1, j2, j3, m1, m2, m3);
              const auto b = wigner_3j_exact(j1, j2, k, m1, m2, m3);
              off += a.sum * b.sum *
                     Rational(factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) * factorial(j2 - m2));
            }
            EXPECT_EQ(off, Rational(0)) << j1 << j2 << j3 << k << m3;
          }
        }
      }
    }
  }
}

TEST(Legendre, BasicValues) {
  for (double x : {-1.0, -0.3, 0.0, 0.5, 1.0}) EXPECT_EQ(legendre_p(0, x), 1.0);
  for (int n = 0; n <= 20; ++n) EXPECT_NEAR(legendre_p(n, 1.0), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(legendre_p(2, 0.0), -0.5);
  EXPECT_THROW((void)legendre_p(2, 1.5), DomainError);
  EXPECT_THROW((void)legendre_p(-1, 0.5), DomainError);
}

TEST(Legendre, MatchesRodrigues) {
  for (int n = 0; n <= 10; ++n) {
    for (int i = 0; i < 50; ++i) {
      const double x = -1.0 + 2.0 * i / 49.0;
      EXPECT_NEAR(legendre_p(n, x), oracle::legendre_rodrigues(n, x), 1e-12) << n << " " << x;
    }
  }
}

TEST(Legendre, AssociatedMatchesCentralDColumn) {
  // d^l_{m0}(theta) = sqrt((l-m)!/(l+m)!) P_l^m(cos theta)
  for (int l = 4; l <= 16; l += 2) {
    const Rational ratio(factorial(l - 4), factorial(l + 4));
    const double norm = std::sqrt(ratio.convert_to<double>());
    for (double theta : {0.2, 0.9, 1.6, 2.7}) {
      EXPECT_NEAR(norm * assoc_legendre_p(l, 4, std::cos(theta)), oracle::wigner_d(l, 4, 0, theta), 1e-12);
    }
  }
  EXPECT_THROW((void)assoc_legendre_p(3, 4, 0.2), DomainError);
}

TEST(Legendre, ExtendedPrecisionAgrees) {
  for (int n = 0; n <= 16; ++n) {
    for (double x : {-0.9, -0.2, 0.4, 0.99}) {
      EXPECT_NEAR(static_cast<double>(legendre_p(n, Extended(x))), legendre_p(n, x), 1e-14);
      if (n >= 4) EXPECT_NEAR(static_cast<double>(assoc_legendre_p(n, 4, Extended(x))) / assoc_legendre_p(n, 4, x), 1.0, 1e-12);
    }
  }
}

TEST(Quadrature, IntegratesPolynomialsExactly) {
  const auto rule = gauss_legendre(200);
  double weight_sum = 0.0;
  for (double w : rule.weights) weight_sum += w;
  EXPECT_NEAR(weight_sum, 2.0, 1e-13);
  // integral of x^398 over [-1, 1] = 2/399
  double moment = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) moment += rule.weights[i] * std::pow(rule.nodes[i], 398);
  EXPECT_NEAR(moment, 2.0 / 399.0, 1e-13);
  EXPECT_THROW((void)gauss_legendre(0), DomainError);
}

}  // namespace
}  // namespace tpss
