#pragma once

#include <vector>

#include "ffv/rational.hpp"

namespace ffv {

/// Per-site parameter triple of the quantum space.
struct Site {
  Rational w;
  Rational alpha;
  Rational gamma;
};

/// Global model data: deformation t, spectral parameters z_1..z_N carried by
/// the auxiliary rows, and one Site per quantum column j = 1..M.
struct ModelParams {
  Rational t;
  std::vector<Rational> z;
  std::vector<Site> sites;

  int m() const { return static_cast<int>(sites.size()); }
  int n() const { return static_cast<int>(z.size()); }

  /// Copy with the last column and last spectral parameter dropped.
  ModelParams truncated_both() const;
  /// Copy with only the last column dropped.
  ModelParams truncated_site() const;
};

// Edge bits are plain ints in {0, 1}: 0 = hole, 1 = particle.
//
// Matrix-element convention, fixed project-wide: weights are
// <a_out q_out| . |a_in q_in> with the auxiliary bit first and tensor basis
// ordered 00, 01, 10, 11. Both weights vanish unless the in-particle count
// equals the out-particle count (ice rule).

/// L-operator weight coupling one auxiliary edge to one quantum column.
Rational l_weight(int a_in, int q_in, int a_out, int q_out, const Rational& z,
                  const Rational& w, const Rational& alpha, const Rational& gamma,
                  const Rational& t);

/// R-matrix weight intertwining two auxiliary edges.
Rational r_weight(int a_in, int b_in, int a_out, int b_out, const Rational& z,
                  const Rational& t);

/// Checks R_ab(z1/z2) L_aj(z1) L_bj(z2) = L_bj(z2) L_aj(z1) R_ab(z1/z2)
/// as an exact 8x8 identity by explicit index contraction.
/// Throws if z2 = 0 (the R argument is the ratio z1/z2).
bool check_rll(const Rational& z1, const Rational& z2, const Site& site,
               const Rational& t);

}  // namespace ffv
