#include "sfwm/diffusion.hpp"

namespace sfwm {

C einstein_entry(const Mat25& drift, const Mat5& rho0, int a, int b, int c,
                 int d) {
  C val = 0.0;
  if (b == c) {
    // <DD(s_ad)> = drift row (a,d) contracted with <sigma>
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= 5; ++n)
        val += drift(vec_index(a, d), vec_index(m, n)) * rho0(m - 1, n - 1);
  }
  // -<DD(s_ab) s_cd>: product collapses to delta_{f c} s_ed
  for (int e = 1; e <= 5; ++e)
    val -= drift(vec_index(a, b), vec_index(e, c)) * rho0(e - 1, d - 1);
  // -<s_ab DD(s_cd)>: product collapses to delta_{b e} s_af
  for (int f = 1; f <= 5; ++f)
    val -= drift(vec_index(c, d), vec_index(b, f)) * rho0(a - 1, f - 1);
  return val;
}

DiffusionMatrix diffusion_from_table(const SystemParams& p,
                                     const Mat5& rho0) {
  auto s = [&](int m, int n) { return rho0(m - 1, n - 1); };
  double G3 = p.Gamma3(), G4 = p.Gamma4(), G5 = p.Gamma5();
  DiffusionMatrix D;
  auto put = [&](int a, int b, int c, int d, C v) {
    D.entries[{a, b, c, d}] = v;
  };
  // Stokes-channel set
  put(1, 2, 2, 4, p.gamma21 * s(1, 4));
  put(1, 2, 2, 5, p.gamma21 * s(1, 5));
  put(1, 3, 3, 1, p.Gamma41 * s(4, 4) + p.Gamma31 * s(3, 3) + G3 * s(1, 1));
  put(1, 3, 3, 4, G3 * s(1, 4));
  put(1, 3, 3, 5, G3 * s(1, 5));
  put(4, 2, 2, 1, p.gamma21 * s(4, 1));
  put(4, 2, 2, 4, p.Gamma54 * s(5, 5));
  put(4, 3, 3, 1, G3 * s(4, 1));
  put(4, 3, 3, 4, p.Gamma54 * s(5, 5) + G3 * s(4, 4));
  put(4, 3, 3, 5, G3 * s(4, 5));
  put(5, 2, 2, 1, p.gamma21 * s(5, 1));
  put(5, 3, 3, 1, G3 * s(5, 1));
  put(5, 3, 3, 4, G3 * s(5, 4));
  put(5, 3, 3, 5, G3 * s(5, 5));
  // anti-Stokes-channel set
  put(2, 1, 1, 2,
      p.Gamma32 * s(3, 3) + p.Gamma42 * s(4, 4) + 2.0 * p.gamma21 * s(2, 2));
  put(2, 1, 1, 3, p.gamma21 * s(2, 3));
  put(3, 1, 1, 2, p.gamma21 * s(3, 2));
  put(3, 1, 1, 3, p.Gamma53 * s(5, 5));
  // rate symbols adjudicated against the Einstein relation (capital Gamma)
  put(2, 4, 4, 2,
      p.Gamma32 * s(3, 3) + p.Gamma42 * s(4, 4) + G4 * s(2, 2));
  put(2, 4, 4, 3, G4 * s(2, 3));
  put(2, 5, 5, 2, p.Gamma32 * s(3, 3) + p.Gamma42 * s(4, 4) + G5 * s(2, 2));
  put(2, 5, 5, 3, G5 * s(2, 3));
  put(3, 5, 5, 2, G5 * s(3, 2));
  put(3, 5, 5, 3, p.Gamma53 * s(5, 5) + G5 * s(3, 3));
  put(3, 4, 4, 3, p.Gamma53 * s(5, 5) + G4 * s(3, 3));
  put(3, 4, 4, 2, G4 * s(3, 2));
  return D;
}

DiffusionMatrix einstein_oracle(const SystemParams& p, const Mat5& rho0) {
  Mat25 L = build_drift_matrix(p, 0.0);
  DiffusionMatrix D;
  std::array<std::pair<int, int>, 12> chans;
  for (int i = 0; i < 6; ++i) {
    chans[i] = kAlpha[i];
    chans[6 + i] = {kAlpha[i].second, kAlpha[i].first};
  }
  for (auto [a, b] : chans)
    for (auto [c, d] : chans)
      D.entries[{a, b, c, d}] = einstein_entry(L, rho0, a, b, c, d);
  return D;
}

Mat6 stokes_quadrature_matrix(const SystemParams& p, const Mat5& rho0) {
  Mat25 L = build_drift_matrix(p, 0.0);
  Mat6 S;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto [a, b] = kAlpha[i];
      auto [c, d] = kAlpha[j];
      S(i, j) = einstein_entry(L, rho0, b, a, c, d);  // D_{conj(a_i), a_j}
    }
  return S;
}

Mat6 antistokes_quadrature_matrix(const SystemParams& p, const Mat5& rho0) {
  Mat25 L = build_drift_matrix(p, 0.0);
  Mat6 A;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto [a, b] = kAlpha[i];
      auto [c, d] = kAlpha[j];
      A(i, j) = einstein_entry(L, rho0, a, b, d, c);  // D_{a_i, conj(a_j)}
    }
  return A;
}

}  // namespace sfwm
