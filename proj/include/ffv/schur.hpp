#pragma once

#include <vector>

#include "ffv/guards.hpp"
#include "ffv/lattice.hpp"
#include "ffv/model.hpp"
#include "ffv/rational.hpp"

namespace ffv {

/// Weakly decreasing nonnegative parts; trailing zeros permitted.
struct Partition {
  std::vector<int> parts;

  /// Throws std::invalid_argument unless weakly decreasing and nonnegative.
  void validate() const;
  int cells() const;
  int part(int j) const;  // 1-based, 0 beyond the stored length
};

/// Particle picture to partition picture: lambda_j = x_{N-j+1} - (N-j+1).
Partition config_to_partition(const ParticleConfig& config);

/// Inverse translation. The partition must have at most n nonzero parts and
/// fit the n x (m-n) box.
ParticleConfig partition_to_config(const Partition& lambda, int n, int m);

/// One entry of the bialternant numerator:
/// w_{mu+1} prod_{j<=mu} {(1-a_j g_j) z + a_j w_j} prod_{j>=mu+2} (w_j - g_j z).
/// mu must lie in [0, M-1].
Rational f_factor(int mu, const Rational& z, const std::vector<Site>& sites);

/// Exact determinant by fraction-free elimination with row pivoting.
/// The empty matrix has determinant 1; non-square input throws.
Rational determinant(std::vector<std::vector<Rational>> a);

/// prod_{j<k} (z_j + t z_k), the factor relating the symmetric function to
/// the wavefunction.
Rational exchange_prefactor(const std::vector<Rational>& z, const Rational& t);

/// Bialternant form: det(f_{lambda_j + N - j}(z_k)) / prod_{j<k}(z_j - z_k).
/// Requires pairwise distinct z.
Rational generalized_schur_det(const ModelParams& params, const Partition& lambda);

/// Symmetrized-sum form over all N! orderings of the spectral parameters,
/// divided by prod_{j<k}(z_k - z_j). Requires pairwise distinct z; guarded
/// to N <= 9. Permutation blocks run concurrently unless parallel is false.
Rational generalized_schur_sum(const ModelParams& params, const ParticleConfig& config,
                               bool parallel = true);

/// Closed form of the projected wavefunction: exchange_prefactor times the
/// bialternant at the translated partition.
Rational theorem_rhs(const ModelParams& params, const ParticleConfig& config);

/// Tableau sum for the factorial Schur function: over semistandard tableaux
/// of shape lambda with entries in 1..N, the product of z_T + a_{T+j-i} per
/// cell. Shift indices outside [1, len(a)] contribute a plain z_T.
Rational factorial_schur_oracle(const std::vector<Rational>& z, const std::vector<Rational>& a,
                                const Partition& lambda);

/// Tableau sum for the Schur function (all shifts zero).
Rational schur_oracle(const std::vector<Rational>& z, const Partition& lambda);

}  // namespace ffv
