#pragma once
#include <array>
#include <map>

#include "sfwm/bloch.hpp"
#include "sfwm/response.hpp"

namespace sfwm {

// Sparse diffusion matrix over operator pairs; key = {a,b,c,d} for
// D_{ab,cd}, 1-based level indices.
struct DiffusionMatrix {
  std::map<std::array<int, 4>, C> entries;
  C get(int a, int b, int c, int d) const {
    auto it = entries.find({a, b, c, d});
    return it == entries.end() ? C{0.0, 0.0} : it->second;
  }
};

// Single diffusion coefficient from the Einstein relation,
//   D_{ab,cd} = <DD(s_ab s_cd)> - <DD(s_ab) s_cd> - <s_ab DD(s_cd)>,
// with products reduced via s_ab s_cd = delta_{bc} s_ad and DD the
// deterministic drift. The drift's omega offset cancels in every entry.
C einstein_entry(const Mat25& drift, const Mat5& rho0, int a, int b, int c,
                 int d);

// The published coefficient table, transcribed (with the two adjudicated
// rate-symbol corrections), evaluated on rho0. Entries not in the table are
// absent.
DiffusionMatrix diffusion_from_table(const SystemParams& p, const Mat5& rho0);

// Mechanical evaluation over the full 12x12 channel set
// {21,31,24,34,25,35} and conjugates; authoritative when the table and the
// oracle disagree.
DiffusionMatrix einstein_oracle(const SystemParams& p, const Mat5& rho0);

// Contraction matrices for the rate quadratures (channel order kAlpha):
//   stokes:      S[i][j]  = D_{conj(alpha_i), alpha_j}   (for P* S P)
//   anti-Stokes: A[i][j]  = D_{alpha_i, conj(alpha_j)}   (for Q A Q*, P A Q*)
Mat6 stokes_quadrature_matrix(const SystemParams& p, const Mat5& rho0);
Mat6 antistokes_quadrature_matrix(const SystemParams& p, const Mat5& rho0);

}  // namespace sfwm
