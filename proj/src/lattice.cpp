#include "ffv/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ffv {

void ParticleConfig::validate() const {
  if (m < 0 || m > 62) throw std::invalid_argument("column count must lie in 0..62");
  int prev = 0;
  for (int xi : x) {
    if (xi <= prev || xi > m)
      throw std::invalid_argument("positions must be strictly increasing within 1..M");
    prev = xi;
  }
}

std::uint64_t ParticleConfig::mask() const {
  std::uint64_t bits = 0;
  for (int xi : x) bits |= std::uint64_t{1} << (xi - 1);
  return bits;
}

ParticleConfig ParticleConfig::truncated() const {
  if (m == 0 || x.empty()) throw std::logic_error("nothing to truncate");
  ParticleConfig out{m - 1, x};
  out.x.pop_back();
  out.validate();
  return out;
}

SectorState vacuum_state(int m) {
  if (m < 0 || m > 62) throw std::invalid_argument("column count must lie in 0..62");
  SectorState s{m, 0, {}};
  s.coeff[0] = Rational(1);
  return s;
}

SectorState apply_b(const SectorState& state, const Rational& z, const ModelParams& params) {
  const int m = state.m;
  if (params.m() != m) throw std::invalid_argument("site count mismatch");
  SectorState out{m, state.particles + 1, {}};

  // Walk the auxiliary bit across the columns, branching where the ice rule
  // leaves a choice. `built` collects the outgoing quantum bits of columns
  // already passed; `rest` holds the incoming basis state.
  std::function<void(int, int, std::uint64_t, const Rational&, std::uint64_t)> walk =
      [&](int j, int aux, std::uint64_t built, const Rational& acc, std::uint64_t rest) {
        if (j == m) {
          if (aux == 0) out.coeff[built] += acc;
          return;
        }
        const int q_in = static_cast<int>((rest >> j) & 1);
        const Site& site = params.sites[static_cast<std::size_t>(j)];
        const int total = aux + q_in;
        for (int a_out = 0; a_out <= 1; ++a_out) {
          const int q_out = total - a_out;
          if (q_out < 0 || q_out > 1) continue;
          Rational lw = l_weight(aux, q_in, a_out, q_out, z, site.w, site.alpha, site.gamma,
                                 params.t);
          if (lw.is_zero()) continue;
          walk(j + 1, a_out, built | (std::uint64_t{1} << j) * static_cast<unsigned>(q_out),
               acc * lw, rest);
        }
      };

  for (const auto& [bits, c] : state.coeff) {
    if (c.is_zero()) continue;
    walk(0, 1, 0, c, bits);
  }
  for (auto it = out.coeff.begin(); it != out.coeff.end();) {
    if (it->second.is_zero())
      it = out.coeff.erase(it);
    else
      ++it;
  }
  return out;
}

Rational projected_wavefunction(const ModelParams& params, const ParticleConfig& config) {
  config.validate();
  if (config.m != params.m()) throw std::invalid_argument("column count mismatch");
  if (config.n() != params.n())
    throw std::invalid_argument("need one spectral parameter per particle");
  SectorState state = vacuum_state(params.m());
  for (int i = params.n() - 1; i >= 0; --i)
    state = apply_b(state, params.z[static_cast<std::size_t>(i)], params);
  auto it = state.coeff.find(config.mask());
  return it == state.coeff.end() ? Rational(0) : it->second;
}

namespace {

// Depth-first walk over vertical-edge assignments, row by row from the top.
// `levels[i]` holds the column bits on the edges above row i+1 (levels[0] is
// the top boundary); within a row the horizontal bit threads left to right.
struct GridWalk {
  const ModelParams& params;
  int m;
  int n;
  std::vector<std::vector<int>> levels;
  const std::function<void(const std::vector<std::vector<int>>&, const Rational&)>& leaf;

  void row(int i, int j, int left, const Rational& acc) {
    if (j == m) {
      if (i + 1 == n)
        leaf(levels, acc);
      else
        row(i + 1, 0, 1, acc);
      return;
    }
    const int above = levels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Site& site = params.sites[static_cast<std::size_t>(j)];
    for (int b = 0; b <= 1; ++b) {
      if (i + 1 == n && b != 0) continue;
      const int r = left + b - above;
      if (r < 0 || r > 1) continue;
      if (j + 1 == m && r != 0) continue;
      Rational lw = l_weight(left, b, r, above, params.z[static_cast<std::size_t>(i)], site.w,
                             site.alpha, site.gamma, params.t);
      levels[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] = b;
      row(i, j + 1, r, acc * lw);
    }
  }
};

void walk_grid(const ModelParams& params, const ParticleConfig& config,
               const std::function<void(const std::vector<std::vector<int>>&, const Rational&)>&
                   leaf) {
  config.validate();
  if (config.m != params.m()) throw std::invalid_argument("column count mismatch");
  if (config.n() != params.n())
    throw std::invalid_argument("need one spectral parameter per particle");
  const int m = params.m();
  const int n = params.n();
  if (m > 10 || n > 5) throw SizeGuardError("grid enumeration is limited to M <= 10, N <= 5");

  std::vector<std::vector<int>> levels(static_cast<std::size_t>(n) + 1,
                                       std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int xi : config.x) levels[0][static_cast<std::size_t>(xi - 1)] = 1;
  if (n == 0) {
    leaf(levels, Rational(1));
    return;
  }
  GridWalk walk{params, m, n, std::move(levels), leaf};
  walk.row(0, 0, 1, Rational(1));
}

}  // namespace

Rational enumerate_configurations(const ModelParams& params, const ParticleConfig& config) {
  Rational total(0);
  walk_grid(params, config,
            [&](const std::vector<std::vector<int>>&, const Rational& w) { total += w; });
  return total;
}

void visit_configurations(
    const ModelParams& params, const ParticleConfig& config,
    const std::function<void(const std::vector<std::vector<int>>& levels,
                             const Rational& weight)>& visit) {
  walk_grid(params, config,
            [&](const std::vector<std::vector<int>>& bits, const Rational& w) {
              std::vector<std::vector<int>> levels(bits.size());
              for (std::size_t i = 0; i < bits.size(); ++i)
                for (std::size_t j = 0; j < bits[i].size(); ++j)
                  if (bits[i][j]) levels[i].push_back(static_cast<int>(j) + 1);
              visit(levels, w);
            });
}

Rational column_amplitude(int j, const std::vector<Rational>& z, const Rational& w,
                          const Rational& gamma, const Rational& t) {
  const int n = static_cast<int>(z.size());
  if (j < 1 || j > n) throw std::invalid_argument("line index out of range");
  const Rational alpha(0);  // the surviving matrix elements never involve alpha

  // Thread the column bit upward: it meets the bottom line first and must
  // leave every line empty, ending occupied at the top.
  Rational amp[2] = {Rational(1), Rational(0)};
  for (int i = n; i >= 1; --i) {
    const int a_in = (i == j) ? 1 : 0;
    Rational next[2];
    for (int q_in = 0; q_in <= 1; ++q_in) {
      const int q_out = a_in + q_in;
      if (q_out > 1) continue;
      if (amp[q_in].is_zero()) continue;
      Rational lw = l_weight(a_in, q_in, 0, q_out, z[static_cast<std::size_t>(i - 1)], w, alpha,
                             gamma, t);
      if (lw.is_zero()) continue;
      next[q_out] += lw * amp[q_in];
    }
    amp[0] = next[0];
    amp[1] = next[1];
  }
  return amp[1];
}

}  // namespace ffv
