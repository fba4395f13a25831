#include "ffv/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ffv {

void Partition::validate() const {
  int prev = INT32_MAX;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (p > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
    prev = p;
  }
}

int Partition::cells() const {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

int Partition::part(int j) const {
  if (j < 1 || j > static_cast<int>(parts.size())) return 0;
  return parts[static_cast<std::size_t>(j - 1)];
}

Partition config_to_partition(const ParticleConfig& config) {
  config.validate();
  const int n = config.n();
  Partition lambda;
  lambda.parts.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    lambda.parts[static_cast<std::size_t>(j - 1)] =
        config.x[static_cast<std::size_t>(n - j)] - (n - j + 1);
  return lambda;
}

ParticleConfig partition_to_config(const Partition& lambda, int n, int m) {
  lambda.validate();
  if (static_cast<int>(lambda.parts.size()) > n && lambda.part(n + 1) != 0)
    throw std::invalid_argument("partition has more than N nonzero parts");
  if (lambda.part(1) > m - n) throw std::invalid_argument("partition exceeds the N x (M-N) box");
  ParticleConfig config{m, std::vector<int>(static_cast<std::size_t>(n))};
  for (int j = 1; j <= n; ++j)
    config.x[static_cast<std::size_t>(j - 1)] = lambda.part(n - j + 1) + j;
  config.validate();
  return config;
}

Rational f_factor(int mu, const Rational& z, const std::vector<Site>& sites) {
  const int m = static_cast<int>(sites.size());
  if (mu < 0 || mu > m - 1) throw std::invalid_argument("row index must lie in [0, M-1]");
  Rational out = sites[static_cast<std::size_t>(mu)].w;
  for (int j = 1; j <= mu; ++j) {
    const Site& s = sites[static_cast<std::size_t>(j - 1)];
    out *= (Rational(1) - s.alpha * s.gamma) * z + s.alpha * s.w;
  }
  for (int j = mu + 2; j <= m; ++j) {
    const Site& s = sites[static_cast<std::size_t>(j - 1)];
    out *= s.w - s.gamma * z;
  }
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  if (n == 0) return Rational(1);

  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Rational(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = Rational(0);
    }
    prev = a[k][k];
  }
  Rational det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Rational exchange_prefactor(const std::vector<Rational>& z, const Rational& t) {
  Rational out(1);
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) out *= z[j] + t * z[k];
  return out;
}

namespace {

// prod_{j<k} (z_j - z_k); throws on coincident entries.
Rational alternant_denominator(const std::vector<Rational>& z) {
  Rational out(1);
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      Rational d = z[j] - z[k];
      if (d.is_zero())
        throw std::invalid_argument("spectral parameters must be pairwise distinct");
      out *= d;
    }
  return out;
}

int inversion_count(const std::vector<int>& sigma) {
  int inv = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    for (std::size_t k = j + 1; k < sigma.size(); ++k)
      if (sigma[j] > sigma[k]) ++inv;
  return inv;
}

// One permutation's contribution given the per-slot factor table.
Rational permutation_term(const std::vector<std::vector<Rational>>& factor,
                          const std::vector<int>& sigma) {
  Rational term(1);
  for (std::size_t j = 0; j < sigma.size(); ++j)
    term *= factor[j][static_cast<std::size_t>(sigma[j])];
  return inversion_count(sigma) % 2 == 0 ? term : -term;
}

}  // namespace

Rational generalized_schur_det(const ModelParams& params, const Partition& lambda) {
  lambda.validate();
  const int n = params.n();
  const int m = params.m();
  if (static_cast<int>(lambda.parts.size()) > n && lambda.part(n + 1) != 0)
    throw std::invalid_argument("partition has more than N nonzero parts");
  if (lambda.part(1) > m - n) throw std::invalid_argument("partition exceeds the N x (M-N) box");
  if (n == 0) return Rational(1);

  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int j = 1; j <= n; ++j) {
    const int mu = lambda.part(j) + n - j;
    for (int k = 1; k <= n; ++k)
      a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
          f_factor(mu, params.z[static_cast<std::size_t>(k - 1)], params.sites);
  }
  return determinant(std::move(a)) / alternant_denominator(params.z);
}

Rational generalized_schur_sum(const ModelParams& params, const ParticleConfig& config,
                               bool parallel) {
  config.validate();
  const int n = params.n();
  const int m = params.m();
  if (config.m != m || config.n() != n)
    throw std::invalid_argument("configuration does not match the parameter set");
  if (n == 0) return Rational(1);
  if (n > 9) throw SizeGuardError("symmetrized sum is limited to N <= 9");

  // factor[j][i]: the two site products attached to particle j when it is
  // fed the spectral parameter z_i.
  std::vector<std::vector<Rational>> factor(static_cast<std::size_t>(n),
                                            std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    const int xj = config.x[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      const Rational& zi = params.z[static_cast<std::size_t>(i)];
      Rational v(1);
      for (int k = xj + 1; k <= m; ++k) {
        const Site& s = params.sites[static_cast<std::size_t>(k - 1)];
        v *= s.w - s.gamma * zi;
      }
      for (int k = 1; k <= xj - 1; ++k) {
        const Site& s = params.sites[static_cast<std::size_t>(k - 1)];
        v *= (Rational(1) - s.alpha * s.gamma) * zi + s.alpha * s.w;
      }
      factor[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }

  // Permutations are split into blocks by first slot; each block walks its
  // tail in lexicographic order. Exact arithmetic makes the block order
  // irrelevant to the result, so the serial and concurrent paths agree.
  std::vector<Rational> block(static_cast<std::size_t>(n));
  const auto run_block = [&](int b) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    sigma[0] = b;
    int fill = 1;
    for (int v = 0; v < n; ++v)
      if (v != b) sigma[static_cast<std::size_t>(fill++)] = v;
    Rational acc(0);
    do {
      acc += permutation_term(factor, sigma);
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    block[static_cast<std::size_t>(b)] = std::move(acc);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < n; ++b) run_block(b);
  } else {
    for (int b = 0; b < n; ++b) run_block(b);
  }

  Rational sum(0);
  for (const Rational& part : block) sum += part;

  Rational prefactor(1);
  for (int xj : config.x) prefactor *= params.sites[static_cast<std::size_t>(xj - 1)].w;
  // The sum form divides by prod_{j<k}(z_k - z_j), the reverse of the
  // bialternant's ordering.
  Rational denom = alternant_denominator(params.z);
  if (((static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1)) / 2) % 2 == 1)
    denom = -denom;
  return prefactor * sum / denom;
}

Rational theorem_rhs(const ModelParams& params, const ParticleConfig& config) {
  config.validate();
  if (config.m != params.m() || config.n() != params.n())
    throw std::invalid_argument("configuration does not match the parameter set");
  return exchange_prefactor(params.z, params.t) *
         generalized_schur_det(params, config_to_partition(config));
}

namespace {

// Backtracking fill of a semistandard tableau in row-major order: rows
// weakly increase, columns strictly increase, entries bounded by N.
void ssyt_walk(const Partition& lambda, const std::vector<Rational>& z,
               const std::vector<Rational>& a, std::vector<std::vector<int>>& t, int row, int col,
               const Rational& acc, Rational& total) {
  const int rows = static_cast<int>(lambda.parts.size());
  if (row == rows) {
    total += acc;
    return;
  }
  if (col == lambda.part(row + 1)) {
    ssyt_walk(lambda, z, a, t, row + 1, 0, acc, total);
    return;
  }
  const int n = static_cast<int>(z.size());
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
  if (row > 0 && col < lambda.part(row))
    lo = std::max(lo, t[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
  for (int v = lo; v <= n; ++v) {
    t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
    const int shift = v + col - row;  // content of the cell offsets the index
    Rational cell = z[static_cast<std::size_t>(v - 1)];
    if (shift >= 1 && shift <= static_cast<int>(a.size()))
      cell += a[static_cast<std::size_t>(shift - 1)];
    ssyt_walk(lambda, z, a, t, row, col + 1, acc * cell, total);
  }
}

}  // namespace

Rational factorial_schur_oracle(const std::vector<Rational>& z, const std::vector<Rational>& a,
                                const Partition& lambda) {
  lambda.validate();
  if (lambda.cells() > 100) throw SizeGuardError("tableau enumeration is limited to 100 cells");
  std::vector<std::vector<int>> t;
  for (int p : lambda.parts) t.emplace_back(static_cast<std::size_t>(p), 0);
  Rational total(0);
  ssyt_walk(lambda, z, a, t, 0, 0, Rational(1), total);
  return total;
}

Rational schur_oracle(const std::vector<Rational>& z, const Partition& lambda) {
  return factorial_schur_oracle(z, {}, lambda);
}

}  // namespace ffv
