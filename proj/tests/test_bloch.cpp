#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfwm/bloch.hpp"
#include "test_util.hpp"

using namespace sfwm;
using testutil::random_params;

namespace {

// Independent reconstruction of the drift through the density-matrix
// picture: <s_mn> = rho(n,m), d rho/dt = -i[h, rho] + relaxation applied as
// explicit matrix operations. A different code path from the index-loop
// construction under test.
Mat25 density_matrix_oracle(const SystemParams& p, double omega) {
  double E[6] = {0.0, 0.0, -omega, p.delta_c - omega, p.delta_p, p.delta_15};
  Mat5 h = Mat5::Zero();
  for (int m = 1; m <= 5; ++m) h(m - 1, m - 1) = E[m];
  h(3, 0) = -p.omega_p;
  h(0, 3) = -std::conj(p.omega_p);
  h(2, 1) = -p.omega_c;
  h(1, 2) = -std::conj(p.omega_c);
  h(4, 3) = -p.omega_d;
  h(3, 4) = -std::conj(p.omega_d);

  auto apply = [&](const Mat5& rho) {
    Mat5 d = C(0, 1) * (rho * h - h * rho);
    // the 5<->4 coherence rotates at the drive detuning
    C corr = C(0, 1) * (p.delta_d - (p.delta_15 - p.delta_p));
    d(3, 4) += corr * rho(3, 4);  // rho(4,5)-indexed as <s_54>
    d(4, 3) -= corr * rho(4, 3);
    Mat5 r = Mat5::Zero();
    r(0, 0) = p.Gamma41 * rho(3, 3) + p.Gamma31 * rho(2, 2);
    r(1, 1) = p.Gamma42 * rho(3, 3) + p.Gamma32 * rho(2, 2);
    r(2, 2) = -p.Gamma3() * rho(2, 2) + p.Gamma53 * rho(4, 4);
    r(3, 3) = -p.Gamma4() * rho(3, 3) + p.Gamma54 * rho(4, 4);
    r(4, 4) = -p.Gamma5() * rho(4, 4);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        if (a != b) r(a, b) = -p.dephasing(a + 1, b + 1) * rho(a, b);
    return Mat5(d + r);
  };

  // read off columns by feeding basis matrices; translate rho(n,m)=<s_mn>
  Mat25 L = Mat25::Zero();
  for (int pm = 1; pm <= 5; ++pm)
    for (int pn = 1; pn <= 5; ++pn) {
      Mat5 basis = Mat5::Zero();
      basis(pn - 1, pm - 1) = 1.0;  // <s_pm pn> = 1
      Mat5 d = apply(basis);
      for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
          L(vec_index(m, n), vec_index(pm, pn)) = d(n - 1, m - 1);
    }
  return L;
}

SystemParams fig_params() { return SystemParams{}; }

}  // namespace

TEST_CASE("drift: no driving leaves ground populations stationary") {
  SystemParams p;
  p.omega_p = p.omega_c = p.omega_d = 0.0;
  Mat25 L = build_drift_matrix(p);
  // rows of s11 and s22 only collect decay feeding
  for (int col = 0; col < 25; ++col) {
    if (col == vec_index(3, 3) || col == vec_index(4, 4)) continue;
    CHECK(std::abs(L(vec_index(1, 1), col)) == 0.0);
    CHECK(std::abs(L(vec_index(2, 2), col)) == 0.0);
  }
  CHECK(L(vec_index(1, 1), vec_index(3, 3)) == C(p.Gamma31));
  CHECK(L(vec_index(1, 1), vec_index(4, 4)) == C(p.Gamma41));
  CHECK(L(vec_index(3, 3), vec_index(3, 3)) == C(-p.Gamma3()));
  CHECK(L(vec_index(5, 5), vec_index(5, 5)) == C(-p.Gamma5()));
}

TEST_CASE("drift: 5-4 coherence row carries the drive detuning") {
  SystemParams p = fig_params();
  p.delta_d = 3.7;
  p.delta_15 = 11.0;  // deliberately not delta_p + delta_d
  Mat25 L = build_drift_matrix(p);
  C want = -p.dephasing(5, 4) + C(0, 1) * p.delta_d;
  CHECK(std::abs(L(vec_index(5, 4), vec_index(5, 4)) - want) < 1e-14);
  CHECK(std::abs(L(vec_index(4, 5), vec_index(4, 5)) - std::conj(want)) <
        1e-14);
}

TEST_CASE("drift matches the density-matrix oracle entry by entry") {
  std::mt19937 rng(421);
  for (int k = 0; k < 25; ++k) {
    SystemParams p = random_params(rng);
    double omega = (k % 3 == 0) ? 0.0 : (k * 0.17 - 2.0);
    Mat25 got = build_drift_matrix(p, omega);
    Mat25 want = density_matrix_oracle(p, omega);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("steady state: invariants at figure parameters") {
  Mat5 rho = solve_steady_state(fig_params());
  // hermiticity, trace, positivity
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(rho.trace() - C(1.0)) < 1e-10);
  for (int m = 0; m < 5; ++m) {
    CHECK(std::abs(rho(m, m).imag()) < 1e-10);
    CHECK(rho(m, m).real() > -1e-10);
  }
  // fixed point
  Mat25 L = build_drift_matrix(fig_params());
  Vec25 x;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) x(vec_index(m, n)) = rho(m - 1, n - 1);
  CHECK((L * x).cwiseAbs().maxCoeff() < 1e-10 * L.cwiseAbs().maxCoeff());
  // frozen reference populations (independently cross-checked by time
  // integration when first established)
  double want[5] = {9.92264153e-1, 2.75837494e-3, 2.48253807e-3,
                    2.48252566e-3, 1.24082262e-5};
  for (int m = 0; m < 5; ++m)
    CHECK(rho(m, m).real() == doctest::Approx(want[m]).epsilon(1e-6));
}

TEST_CASE("steady state: pump off pins everything into level 1") {
  SystemParams p = fig_params();
  p.omega_p = 0.0;
  Mat5 rho = solve_steady_state(p);
  CHECK(std::abs(rho(0, 0) - C(1.0)) < 1e-12);
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n)
      if (m || n) CHECK(std::abs(rho(m, n)) < 1e-12);
}

TEST_CASE("steady state: all fields off is degenerate") {
  SystemParams p;
  p.omega_p = p.omega_c = p.omega_d = 0.0;
  CHECK_THROWS_AS(solve_steady_state(p), SimError);
  try {
    solve_steady_state(p);
  } catch (const SimError& e) {
    CHECK(e.kind() == ErrKind::DegenerateSteadyState);
  }
}

TEST_CASE("integration: steady state is a fixed point") {
  SystemParams p = fig_params();
  Mat5 rho = solve_steady_state(p);
  Mat5 out = integrate_bloch(p, rho, 10.0, 0.01);
  CHECK((out - rho).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("integration: optical pumping out of level 2") {
  SystemParams p = fig_params();
  p.omega_p = 0.0;
  Mat5 rho0 = Mat5::Zero();
  rho0(1, 1) = 1.0;
  Mat5 out = integrate_bloch(p, rho0, 3000.0, 0.02);
  CHECK(std::abs(out(0, 0) - C(1.0)) < 1e-8);
}

TEST_CASE("integration: oversized steps are rejected") {
  SystemParams p = fig_params();
  Mat5 rho0 = Mat5::Zero();
  rho0(1, 1) = 1.0;
  CHECK_THROWS_AS(integrate_bloch(p, rho0, 500.0, 0.4), SimError);
}

TEST_CASE("solver cross-check on random parameter sets") {
  std::mt19937 rng(97);
  int done = 0;
  while (done < 20) {
    SystemParams p = random_params(rng);
    p.gamma21 = 0.05 + 0.05 * (done % 3);  // keep relaxation horizons short
    p.Gamma53 = 0.05;
    p.Gamma54 = 0.05;
    // large detunings suppress the optical-pumping rate ~ |Omega|^2/Delta^2
    // and push equilibration beyond any fixed-step budget; keep them modest
    p.delta_p *= 0.15;
    p.delta_c *= 0.15;
    p.delta_d *= 0.15;
    p.delta_15 = p.delta_p + p.delta_d;
    Mat5 direct = solve_steady_state(p);
    Mat5 rho0 = Mat5::Zero();
    rho0(0, 0) = 1.0;
    Mat5 integrated = integrate_bloch(p, rho0, 600.0, 0.01);
    CHECK((direct - integrated).cwiseAbs().maxCoeff() < 1e-8);
    for (int m = 0; m < 5; ++m) CHECK(direct(m, m).real() > -1e-10);
    ++done;
  }
}

TEST_CASE("solver cross-check at figure parameters") {
  SystemParams p = fig_params();
  Mat5 direct = solve_steady_state(p);
  Mat5 rho0 = Mat5::Zero();
  rho0(0, 0) = 1.0;
  Mat5 integrated = integrate_bloch(p, rho0, 6000.0, 0.02);
  CHECK((direct - integrated).cwiseAbs().maxCoeff() < 1e-8);
}
