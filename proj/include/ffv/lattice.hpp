#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ffv/guards.hpp"
#include "ffv/model.hpp"
#include "ffv/rational.hpp"

namespace ffv {

/// Particle positions 1 <= x_1 < ... < x_N <= M labelling a dual state.
struct ParticleConfig {
  int m = 0;
  std::vector<int> x;

  int n() const { return static_cast<int>(x.size()); }
  /// Throws std::invalid_argument unless strictly increasing and in range.
  void validate() const;
  /// Occupation bitmask: bit (j-1) set iff site j holds a particle.
  std::uint64_t mask() const;

  /// Drops the last particle together with the last column.
  ParticleConfig truncated() const;
};

/// Sparse state in a fixed particle-number sector: coefficients keyed by
/// occupation bitmask. Absent keys are zero. An ordered map keeps iteration
/// deterministic.
struct SectorState {
  int m = 0;
  int particles = 0;
  std::map<std::uint64_t, Rational> coeff;
};

/// The M-column vacuum (empty subset, coefficient 1).
SectorState vacuum_state(int m);

/// One B-operator layer: the auxiliary bit enters column 1 carrying a
/// particle and must leave column M empty, depositing exactly one particle
/// into the quantum spaces. Raises the particle number by one; a full
/// sector maps to the zero state.
SectorState apply_b(const SectorState& state, const Rational& z,
                    const ModelParams& params);

/// Overlap of the dual configuration state with the N-layer B state built
/// on the vacuum, layers applied in order z_N first, z_1 last.
Rational projected_wavefunction(const ModelParams& params, const ParticleConfig& config);

/// Brute-force oracle: depth-first sum over all edge assignments of the
/// N x M grid consistent with the ice rule and the boundary (left edges 1,
/// right edges 0, bottom edges 0, top edges 1 exactly at the x_i), of the
/// product of vertex weights. Row i carries z_i, row 1 adjacent to the top.
/// Guarded to M <= 10, N <= 5; throws SizeGuardError beyond that.
Rational enumerate_configurations(const ModelParams& params, const ParticleConfig& config);

/// Per-configuration visitor variant: `levels[i]` lists the occupied columns
/// on the vertical edges below row i (levels[0] is the top boundary).
void visit_configurations(
    const ModelParams& params, const ParticleConfig& config,
    const std::function<void(const std::vector<std::vector<int>>& levels,
                             const Rational& weight)>& visit);

/// Single-column contraction: N auxiliary lines cross one column with
/// parameters (w, gamma); the auxiliary particle sits on line j and all
/// lines leave empty, while the column bit rises from hole to particle.
/// Computed by threading the column bit through the lines.
Rational column_amplitude(int j, const std::vector<Rational>& z, const Rational& w,
                          const Rational& gamma, const Rational& t);

}  // namespace ffv
