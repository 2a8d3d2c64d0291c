#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfwm/response.hpp"
#include "test_util.hpp"

using namespace sfwm;
using testutil::rel_err;

namespace {

ResponseSet at(const SystemParams& p, double omega) {
  return propagation_coefficients(p, solve_steady_state(p), omega);
}

}  // namespace

TEST_CASE("detuning aggregates carry the expected frequency offsets") {
  SystemParams p;
  p.delta_d = 0.7;
  p.delta_15 = p.delta_p + p.delta_d;
  double w = 1.3;
  DetuningAggregates a = detuning_aggregates(p, w);
  CHECK(rel_err(a.g1, C(p.gamma21, w)) < 1e-14);
  CHECK(rel_err(a.g2, C(p.dephasing(2, 4), w + p.delta_p)) < 1e-14);
  CHECK(rel_err(a.g3, C(p.dephasing(2, 5), w + p.delta_15)) < 1e-14);
  CHECK(rel_err(a.g4, C(p.dephasing(3, 1), w - p.delta_c)) < 1e-14);
  CHECK(rel_err(a.g5, C(p.dephasing(3, 4), w + p.delta_p - p.delta_c)) <
        1e-14);
  CHECK(rel_err(a.g6, C(p.dephasing(3, 5), w + p.delta_15 - p.delta_c)) <
        1e-14);
}

TEST_CASE("first-order matrix: rows restate the drift at offset omega") {
  // Row alpha of M must equal  -(drift row of sigma_alpha at this omega)
  // restricted to the six coherence channels, because the first-order
  // system is (M x = b) <=> (drift couplings + sources) = 0.
  std::mt19937 rng(7);
  for (int k = 0; k < 10; ++k) {
    SystemParams p = testutil::random_params(rng);
    double w = 0.9 * k - 3.0;
    Mat6 M = first_order_matrix(p, w);
    Mat25 L = build_drift_matrix(p, w);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int ri = vec_index(kAlpha[i].first, kAlpha[i].second);
        int rj = vec_index(kAlpha[j].first, kAlpha[j].second);
        CHECK(std::abs(M(i, j) + L(ri, rj)) < 1e-12);
      }
  }
}

TEST_CASE("sources follow the steady-state populations and coherences") {
  SystemParams p;
  Mat5 rho = solve_steady_state(p);
  Vec6 bs = stokes_source(rho);
  CHECK(rel_err(bs(0), C(0, -1) * rho(3, 0)) < 1e-14);
  CHECK(bs(1) == C(0.0));
  CHECK(rel_err(bs(2), C(0, -1) * (rho(3, 3) - rho(1, 1))) < 1e-14);
  CHECK(rel_err(bs(3), C(0, 1) * rho(2, 1)) < 1e-14);
  CHECK(rel_err(bs(4), C(0, -1) * rho(3, 4)) < 1e-14);
  CHECK(bs(5) == C(0.0));
  Vec6 ba = antistokes_source(rho);
  CHECK(rel_err(ba(0), C(0, 1) * rho(1, 2)) < 1e-14);
  CHECK(rel_err(ba(1), C(0, -1) * (rho(0, 0) - rho(2, 2))) < 1e-14);
  CHECK(ba(2) == C(0.0));
  CHECK(rel_err(ba(3), C(0, -1) * rho(0, 3)) < 1e-14);
  CHECK(ba(4) == C(0.0));
  CHECK(rel_err(ba(5), C(0, -1) * rho(0, 4)) < 1e-14);
}

TEST_CASE("closed forms agree with the dense LU oracle") {
  std::mt19937 rng(1234);
  int checked = 0;
  while (checked < 40) {
    SystemParams p = testutil::random_params(rng);
    double w = (checked % 2) ? 0.0 : 1.7 * (checked % 7) - 5.0;
    Mat5 rho = solve_steady_state(p);
    ResponseSet a, b;
    try {
      a = propagation_coefficients(p, rho, w);
      b = first_order_oracle(p, rho, w);
    } catch (const SimError&) {
      continue;  // near-singular draws are exercised separately
    }
    CHECK(rel_err(a.gamma_as, b.gamma_as) < 1e-9);
    CHECK(rel_err(a.g_raman, b.g_raman) < 1e-9);
    CHECK(rel_err(a.kappa_s, b.kappa_s) < 1e-9);
    CHECK(rel_err(a.kappa_as, b.kappa_as) < 1e-9);
    for (int i = 0; i < 6; ++i) {
      CHECK(rel_err(a.xi_s[i], b.xi_s[i]) < 1e-9);
      CHECK(rel_err(a.xi_as[i], b.xi_as[i]) < 1e-9);
    }
    ++checked;
  }
}

TEST_CASE("frozen coefficients at the figure operating point, omega = 0") {
  SystemParams p;
  ResponseSet r = at(p, 0.0);
  CHECK(rel_err(r.gamma_as, C(-0.152378, 6.58595)) < 1e-5);
  CHECK(rel_err(r.g_raman, C(-0.266521, -0.100773)) < 1e-5);
  CHECK(rel_err(r.kappa_s, C(-0.795528, 16.46671)) < 1e-5);
  CHECK(rel_err(r.kappa_as, C(0.582808, 16.46665)) < 1e-5);
}

TEST_CASE("coupling symmetry at the figure operating point") {
  // The operating point is chosen so the two cross couplings nearly agree
  // in magnitude; the exact model keeps a small pump-order residue.
  SystemParams p;
  ResponseSet r = at(p, 0.0);
  double asym = std::abs(std::abs(r.kappa_s) - std::abs(r.kappa_as)) /
                std::abs(r.kappa_s);
  CHECK(asym < 1e-3);
  WARN_MESSAGE(asym < 1e-10,
               "cross couplings match only to pump-order residue: ", asym);
}

TEST_CASE("linear response scales linearly with density") {
  SystemParams p;
  Mat5 rho = solve_steady_state(p);
  ResponseSet r1 = propagation_coefficients(p, rho, 0.4);
  SystemParams q = p;
  q.density *= 3.0;
  ResponseSet r3 = propagation_coefficients(q, rho, 0.4);
  CHECK(rel_err(r3.g_raman, 3.0 * r1.g_raman) < 1e-12);
  CHECK(rel_err(r3.gamma_as, 3.0 * r1.gamma_as) < 1e-12);
  CHECK(rel_err(r3.kappa_s, 3.0 * r1.kappa_s) < 1e-12);
  // noise couplings carry the square root of the optical depth prefactor
  for (int i = 0; i < 6; ++i)
    CHECK(rel_err(r3.xi_s[i], std::sqrt(3.0) * r1.xi_s[i]) < 1e-12);
}

TEST_CASE("degenerate first-order system is reported, not silently used") {
  SystemParams p;
  p.omega_p = 0.0;
  p.omega_c = 0.0;
  p.omega_d = 0.0;
  p.gamma21 = 0.0;  // 21 channel decouples with zero width at omega = 0
  Mat5 rho = Mat5::Zero();
  rho(0, 0) = 1.0;
  CHECK_THROWS_AS(propagation_coefficients(p, rho, 0.0), SimError);
  try {
    propagation_coefficients(p, rho, 0.0);
  } catch (const SimError& e) {
    CHECK(e.kind() == ErrKind::DenominatorVanishes);
  }
  CHECK_THROWS_AS(first_order_oracle(p, rho, 0.0), SimError);
}

TEST_CASE("scan helpers reproduce pointwise evaluation") {
  SystemParams p;
  std::vector<double> wgrid = {-2.0, -0.5, 0.0, 1.25, 6.0};
  auto scan = coefficient_scan_omega(p, wgrid, 2);
  REQUIRE(scan.size() == wgrid.size());
  for (size_t i = 0; i < wgrid.size(); ++i) {
    ResponseSet want = at(p, wgrid[i]);
    CHECK(scan[i].omega == wgrid[i]);
    CHECK(rel_err(scan[i].g_raman, want.g_raman) < 1e-12);
    CHECK(rel_err(scan[i].gamma_as, want.gamma_as) < 1e-12);
  }

  std::vector<double> dgrid = {0.0, 1.2, 5.0};
  auto dscan = coefficient_scan_drive(p, dgrid, 0.0, 2);
  REQUIRE(dscan.size() == dgrid.size());
  for (size_t i = 0; i < dgrid.size(); ++i) {
    SystemParams q = p;
    q.omega_d = C(dgrid[i], 0.0);
    ResponseSet want = at(q, 0.0);
    CHECK(rel_err(dscan[i].kappa_s, want.kappa_s) < 1e-12);
    CHECK(rel_err(dscan[i].gamma_as, want.gamma_as) < 1e-12);
  }
}
