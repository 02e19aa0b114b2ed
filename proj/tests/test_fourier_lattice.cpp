#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qwalk/coins.hpp"
#include "qwalk/fourier_lattice.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk_operator.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = 3.14159265358979323846;

Momentum random_momentum(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<double> k(d);
  for (double& kj : k) kj = angle(rng);
  return Momentum(std::move(k));
}

}  // namespace

TEST_CASE("momentum validation") {
  CHECK_THROWS_AS(Momentum({-0.1}), std::domain_error);
  CHECK_THROWS_AS(Momentum({2.0 * kPi}), std::domain_error);
  CHECK_NOTHROW(Momentum({0.0, 3.1}));
}

TEST_CASE("momentum shift basics") {
  SUBCASE("k = 0 is the pair swap") {
    const Momentum k0({0.0, 0.0});
    const MatrixXcd s = fourier_shift(2, k0);
    const ShiftMatrix swap = flipflop_shift(bouquet_graph(2));
    CHECK((s - swap.matrix).norm() < 1e-15);
  }

  SUBCASE("d = 1 at k = pi") {
    const MatrixXcd s = fourier_shift(1, Momentum({kPi}));
    CHECK(std::abs(s(0, 1) + 1.0) < 1e-12);
    CHECK(std::abs(s(1, 0) + 1.0) < 1e-12);
  }

  SUBCASE("involution and twisted-shift equality") {
    std::mt19937_64 rng(3);
    for (int d : {1, 2, 3, 4}) {
      const Momentum k = random_momentum(d, rng);
      const MatrixXcd s = fourier_shift(d, k);
      CHECK((s * s - MatrixXcd::Identity(2 * d, 2 * d)).norm() < 1e-12);
      OneForm theta;
      theta.theta.resize(2 * d);
      for (int j = 0; j < d; ++j) {
        theta.theta[2 * j] = k[j];
        theta.theta[2 * j + 1] = -k[j];
      }
      CHECK((s - twisted_shift(bouquet_graph(d), theta).matrix).norm() <
            1e-12);
    }
  }
}

TEST_CASE("momentum evolution is unitary and degenerates at k = 0") {
  std::mt19937_64 rng(5);
  for (int d : {2, 3, 4}) {
    const MatrixXcd u0 = fourier_evolution(d, Momentum(std::vector<double>(d, 0.0)));
    CHECK((u0 - grover_matrix(2 * d)).cwiseAbs().maxCoeff() < 1e-14);
    const Momentum k = random_momentum(d, rng);
    const MatrixXcd u = fourier_evolution(d, k);
    CHECK((u.adjoint() * u - MatrixXcd::Identity(2 * d, 2 * d)).norm() < 1e-12);
  }
}

TEST_CASE("case-i discriminant") {
  std::mt19937_64 rng(7);

  SUBCASE("d = 2 scalar value") {
    const Momentum k = random_momentum(2, rng);
    const MatrixXcd t = discriminant_case_i(2, k);
    REQUIRE(t.rows() == 1);
    CHECK(std::abs(t(0, 0) - (std::cos(k[0]) + std::cos(k[1])) / 2.0) < 1e-12);
  }

  SUBCASE("d = 3 quadratic eigenvalues") {
    for (int trial = 0; trial < 50; ++trial) {
      const Momentum k = random_momentum(3, rng);
      const double g1 = std::cos(k[0]) + std::cos(k[1]) + std::cos(k[2]);
      const double g2 = std::cos(k[0]) * std::cos(k[1]) +
                        std::cos(k[1]) * std::cos(k[2]) +
                        std::cos(k[2]) * std::cos(k[0]);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> es(discriminant_case_i(3, k));
      for (int i = 0; i < 2; ++i) {
        const double mu = es.eigenvalues()(i);
        CHECK(std::abs(mu * mu - 2.0 / 3.0 * g1 * mu + g2 / 3.0) < 1e-10);
      }
    }
  }

  SUBCASE("k = 0 gives the identity (double eigenvalue 1)") {
    const MatrixXcd t = discriminant_case_i(3, Momentum({0.0, 0.0, 0.0}));
    CHECK((t - MatrixXcd::Identity(2, 2)).norm() < 1e-12);
  }

  SUBCASE("d = 1 rejected") {
    CHECK_THROWS_AS(discriminant_case_i(1, Momentum({1.0})),
                    std::invalid_argument);
  }
}

TEST_CASE("case-ii discriminant matches the printed d = 3 arrow matrix") {
  const double kx = 0.4, ky = 1.9, kz = 4.4;
  const MatrixXcd t = discriminant_case_ii(3, Momentum({kx, ky, kz}));
  CHECK(std::abs(t(0, 0) - (std::cos(kx) + std::cos(ky) + std::cos(kz)) / 3.0) <
        1e-14);
  CHECK(std::abs(t(0, 1) - (-kImag / std::sqrt(3.0) * std::sin(kx))) < 1e-14);
  CHECK(std::abs(t(2, 0) - (kImag / std::sqrt(3.0) * std::sin(ky))) < 1e-14);
  CHECK(std::abs(t(1, 1) + std::cos(kx)) < 1e-14);
  CHECK(std::abs(t(3, 3) + std::cos(kz)) < 1e-14);
  CHECK(std::abs(t(1, 2)) == 0.0);
}

TEST_CASE("case-ii closed-form spectrum (symmetric radical)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Momentum k = random_momentum(3, rng);
    const double c0 = std::cos(k[0]), c1 = std::cos(k[1]), c2 = std::cos(k[2]);
    const double mean = -(c0 + c1 + c2) / 3.0;
    const double radical = 3.0 + std::cos(2 * k[0]) + std::cos(2 * k[1]) +
                           std::cos(2 * k[2]) -
                           2.0 * (c0 * c1 + c1 * c2 + c2 * c0);
    const double spread = std::sqrt(2.0) / 6.0 * std::sqrt(radical);
    std::vector<double> expected{-1.0, mean - spread, mean + spread, 1.0};
    std::sort(expected.begin(), expected.end());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(discriminant_case_ii(3, k));
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(es.eigenvalues()(i) - expected[i]) < 1e-10);
    }
  }
}

TEST_CASE("eigenpolynomial coefficients") {
  std::mt19937_64 rng(13);

  SUBCASE("eta_1 is the first symmetric function of Gamma") {
    for (int d : {2, 3, 4}) {
      const Momentum k = random_momentum(d, rng);
      double sum = 0.0;
      for (int j = 0; j < d; ++j) sum += std::cos(k[j]);
      const EigenPolyCoeffs poly = eigenpoly_coeffs(d, k);
      CHECK(std::abs(poly.eta(0) - (sum - sum / d)) < 1e-12);
    }
  }

  SUBCASE("k = 0 factorizes as (x - 1)(x + 1)^d") {
    for (int d : {2, 3, 4}) {
      const EigenPolyCoeffs poly =
          eigenpoly_coeffs(d, Momentum(std::vector<double>(d, 0.0)));
      // coefficients of (x - 1)(x + 1)^d by direct convolution
      std::vector<double> ref{1.0};
      for (int i = 0; i < d; ++i) {
        ref.push_back(0.0);
        for (std::size_t j = ref.size() - 1; j >= 1; --j) ref[j] += ref[j - 1];
      }
      ref.push_back(0.0);
      for (std::size_t j = ref.size() - 1; j >= 1; --j) ref[j] -= ref[j - 1];
      const std::vector<double> mine = poly.monic_coeffs();
      REQUIRE(mine.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(std::abs(mine[i] - ref[i]) < 1e-12);
      }
    }
  }

  SUBCASE("coefficients match the arrow characteristic polynomial") {
    for (int d : {1, 2, 3, 4}) {
      for (int trial = 0; trial < 25; ++trial) {
        const Momentum k = random_momentum(d, rng);
        const EigenPolyCoeffs poly = eigenpoly_coeffs(d, k);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(discriminant_case_ii(d, k));
        std::vector<double> ref{1.0};
        for (int i = 0; i <= d; ++i) {
          ref.push_back(0.0);
          for (std::size_t j = ref.size() - 1; j >= 1; --j) {
            ref[j] -= es.eigenvalues()(i) * ref[j - 1];
          }
        }
        const std::vector<double> mine = poly.monic_coeffs();
        for (std::size_t i = 0; i < ref.size(); ++i) {
          CHECK(std::abs(mine[i] - ref[i]) < 1e-10);
        }
        CHECK(std::abs(poly.evaluate(1.0)) < 1e-10);
        CHECK(std::abs(poly.evaluate(-1.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("polynomial roots via the companion matrix") {
  // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
  const auto roots = polynomial_roots({1.0, -6.0, 11.0, -6.0});
  std::vector<double> re;
  for (const Complex& r : roots) {
    CHECK(std::abs(r.imag()) < 1e-10);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0] - 1.0) < 1e-10);
  CHECK(std::abs(re[1] - 2.0) < 1e-10);
  CHECK(std::abs(re[2] - 3.0) < 1e-10);
  CHECK_THROWS_AS(polynomial_roots({2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("roots of P equal the case-ii spectrum") {
  std::mt19937_64 rng(17);
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Momentum k = random_momentum(d, rng);
      auto roots = polynomial_roots(eigenpoly_coeffs(d, k).monic_coeffs());
      std::vector<double> re;
      for (const Complex& r : roots) re.push_back(r.real());
      std::sort(re.begin(), re.end());
      Eigen::SelfAdjointEigenSolver<MatrixXcd> es(discriminant_case_ii(d, k));
      for (int i = 0; i <= d; ++i) {
        CHECK(std::abs(re[i] - es.eigenvalues()(i)) < 1e-8);
      }
    }
  }
}

TEST_CASE("unit-root multiplicities") {
  SUBCASE("generic momentum is simple") {
    const Pm1Multiplicity m = pm1_multiplicity(3, Momentum({0.9, 1.7, 2.6}));
    CHECK(m.m_plus == 1);
    CHECK(m.m_minus == 1);
    CHECK_FALSE(m.exceptional);
  }

  SUBCASE("two zero components degenerate x = -1") {
    const Pm1Multiplicity m = pm1_multiplicity(3, Momentum({0.0, 0.0, 1.3}));
    CHECK(m.m_plus == 1);
    CHECK(m.m_minus >= 2);
    CHECK(m.exceptional);
  }

  SUBCASE("k = 0 gives m_minus = d") {
    for (int d : {2, 3, 4}) {
      const Pm1Multiplicity m =
          pm1_multiplicity(d, Momentum(std::vector<double>(d, 0.0)));
      CHECK(m.m_plus == 1);
      CHECK(m.m_minus == d);
      CHECK(m.exceptional);
    }
  }

  SUBCASE("two pi components degenerate x = +1") {
    const Pm1Multiplicity m = pm1_multiplicity(2, Momentum({kPi, kPi}));
    CHECK(m.m_plus >= 2);
    CHECK(m.exceptional);
  }
}

TEST_CASE("band scan rows verify and order deterministically") {
  const auto rows = band_scan(2, 4, CoinConvention::CaseII);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0].k == std::vector<double>{0.0, 0.0});
  CHECK(rows[1].k[1] == doctest::Approx(kPi / 2.0));
  // k = 0 row: Spec(U) = {1, -1 x3}; exceptional; m_minus = d = 2
  CHECK(rows[0].exceptional);
  CHECK(rows[0].m_plus == 1);
  CHECK(rows[0].m_minus == 2);
  for (const auto& row : rows) {
    CHECK(row.t_eigenvalues.size() == 3);
    CHECK(row.u_angles.size() == 4);
    CHECK(std::is_sorted(row.t_eigenvalues.begin(), row.t_eigenvalues.end()));
    CHECK(std::is_sorted(row.u_angles.begin(), row.u_angles.end()));
  }

  // case-i rows for d = 3: residual spectrum {+1, -1} at generic k
  const auto rows_i = band_scan(3, 2, CoinConvention::CaseI);
  REQUIRE(rows_i.size() == 8);
  for (const auto& row : rows_i) {
    CHECK(row.t_eigenvalues.size() == 2);
    CHECK(row.u_angles.size() == 6);
  }
}

TEST_CASE("quarter-grid scans for d = 3 and the fine d = 2 grid") {
  const auto rows = band_scan(3, 4, CoinConvention::CaseI);
  REQUIRE(rows.size() == 64);
  // k = 0 row: discriminant is the identity, so the walk spectrum is
  // {1 x1, -1 x5} and the angles are {0, pi x5}.
  CHECK(rows[0].t_eigenvalues == std::vector<double>{1.0, 1.0});
  CHECK(rows[0].u_angles[0] == doctest::Approx(0.0));
  for (int i = 1; i < 6; ++i) {
    CHECK(rows[0].u_angles[i] == doctest::Approx(kPi));
  }

  // d = 2 case-ii: no residual spectrum away from the exceptional set.
  const auto fine = band_scan(2, 8, CoinConvention::CaseII);
  REQUIRE(fine.size() == 64);
  for (const auto& row : fine) {
    if (!row.exceptional) {
      CHECK(row.residual_plus == 0);
      CHECK(row.residual_minus == 0);
    }
  }
}

TEST_CASE("band csv layout") {
  const auto rows = band_scan(2, 2, CoinConvention::CaseII);
  std::ostringstream out;
  write_band_csv(out, rows);
  const std::string csv = out.str();
  CHECK(csv.find("k_1,k_2,t_eig_1,t_eig_2,t_eig_3,u_angle_1") == 0);
  CHECK(csv.find("m_plus,m_minus,exceptional") != std::string::npos);
  // one header plus four rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
