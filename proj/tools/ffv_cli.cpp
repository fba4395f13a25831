#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffv/bench.hpp"
#include "ffv/guards.hpp"
#include "ffv/lattice.hpp"
#include "ffv/model.hpp"
#include "ffv/schur.hpp"
#include "ffv/verify.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;

std::vector<ffv::Rational> parse_list(const std::vector<std::string>& items) {
  std::vector<ffv::Rational> out;
  out.reserve(items.size());
  for (const std::string& s : items) out.push_back(ffv::Rational::parse(s));
  return out;
}

std::vector<std::string> to_strings(const std::vector<ffv::Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const ffv::Rational& v : values) out.push_back(v.str());
  return out;
}

struct ParamFlags {
  int m = 0;
  int n = 0;
  std::vector<int> x;
  std::vector<std::string> z, w, alpha, gamma;
  std::string t;
  std::uint64_t seed = 0;
  bool have_seed = false;

  void attach(CLI::App* cmd, bool with_config) {
    cmd->add_option("--M", m, "number of columns")->required();
    cmd->add_option("--N", n, "number of particles")->required();
    if (with_config)
      cmd->add_option("--x", x, "particle positions, strictly increasing")->delimiter(',');
    cmd->add_option("--z", z, "spectral parameters, N values")->delimiter(',');
    cmd->add_option("--w", w, "site weights, M values")->delimiter(',');
    cmd->add_option("--alpha", alpha, "site alpha list, M values")->delimiter(',');
    cmd->add_option("--gamma", gamma, "site gamma list, M values")->delimiter(',');
    cmd->add_option("--t", t, "deformation parameter");
    cmd->add_option("--seed", seed, "generate any missing parameters from this seed")
        ->each([this](const std::string&) { have_seed = true; });
  }

  ffv::ModelParams assemble() const {
    if (m < 0 || n < 0 || n > m) throw std::invalid_argument("need 0 <= N <= M");
    ffv::ModelParams p;
    if (have_seed) {
      p = ffv::random_params(seed, m, n);
    } else {
      p.t = ffv::Rational(1);
      p.z.resize(static_cast<std::size_t>(n));
      p.sites.resize(static_cast<std::size_t>(m));
      if (z.empty() && n > 0) throw std::invalid_argument("--z is required without --seed");
      if (w.empty() && m > 0) throw std::invalid_argument("--w is required without --seed");
    }
    if (!t.empty()) p.t = ffv::Rational::parse(t);
    const auto fill = [&](const std::vector<std::string>& flag, const char* name, int count,
                          const std::function<void(int, const ffv::Rational&)>& set) {
      if (flag.empty()) return;
      if (static_cast<int>(flag.size()) != count)
        throw std::invalid_argument(std::string(name) + " needs exactly " +
                                    std::to_string(count) + " comma-separated values");
      std::vector<ffv::Rational> values = parse_list(flag);
      for (int i = 0; i < count; ++i) set(i, values[static_cast<std::size_t>(i)]);
    };
    fill(z, "--z", n, [&](int i, const ffv::Rational& v) { p.z[static_cast<std::size_t>(i)] = v; });
    fill(w, "--w", m,
         [&](int i, const ffv::Rational& v) { p.sites[static_cast<std::size_t>(i)].w = v; });
    fill(alpha, "--alpha", m,
         [&](int i, const ffv::Rational& v) { p.sites[static_cast<std::size_t>(i)].alpha = v; });
    fill(gamma, "--gamma", m,
         [&](int i, const ffv::Rational& v) { p.sites[static_cast<std::size_t>(i)].gamma = v; });
    return p;
  }

  ffv::ParticleConfig config() const {
    ffv::ParticleConfig c{m, x};
    if (c.n() != n) throw std::invalid_argument("--x needs exactly N positions");
    c.validate();
    return c;
  }
};

nlohmann::json params_json(const ffv::ModelParams& p) {
  std::vector<ffv::Rational> w, alpha, gamma;
  for (const ffv::Site& s : p.sites) {
    w.push_back(s.w);
    alpha.push_back(s.alpha);
    gamma.push_back(s.gamma);
  }
  nlohmann::json j;
  j["t"] = p.t.str();
  j["z"] = to_strings(p.z);
  j["w"] = to_strings(w);
  j["alpha"] = to_strings(alpha);
  j["gamma"] = to_strings(gamma);
  return j;
}

void echo_params_human(std::ostream& os, const ffv::ModelParams& p) {
  nlohmann::json j = params_json(p);
  os << "t      " << j["t"].get<std::string>() << "\n";
  for (const char* key : {"z", "w", "alpha", "gamma"}) {
    os << key << std::string(7 - std::string(key).size(), ' ');
    bool first = true;
    for (const auto& item : j[key]) {
      if (!first) os << ",";
      os << item.get<std::string>();
      first = false;
    }
    os << "\n";
  }
}

int cmd_eval(const ParamFlags& flags, const std::string& method, const std::string& format) {
  ffv::ModelParams params = flags.assemble();
  ffv::ParticleConfig config = flags.config();

  const auto start = std::chrono::steady_clock::now();
  ffv::Rational value;
  if (method == "lattice")
    value = ffv::projected_wavefunction(params, config);
  else if (method == "bruteforce")
    value = ffv::enumerate_configurations(params, config);
  else if (method == "determinant")
    value = ffv::theorem_rhs(params, config);
  else if (method == "symsum")
    value = ffv::exchange_prefactor(params.z, params.t) *
            ffv::generalized_schur_sum(params, config);
  else
    throw std::invalid_argument("unknown method: " + method);
  const auto stop = std::chrono::steady_clock::now();
  const long long micros =
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();

  if (format == "structured") {
    nlohmann::json j;
    j["command"] = "eval";
    j["method"] = method;
    j["m"] = flags.m;
    j["n"] = flags.n;
    j["x"] = flags.x;
    j["params"] = params_json(params);
    if (flags.have_seed) j["seed"] = flags.seed;
    j["value"] = value.str();
    j["micros"] = micros;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "method " << method << "\n"
              << "M " << flags.m << "  N " << flags.n << "  x ";
    for (std::size_t i = 0; i < flags.x.size(); ++i)
      std::cout << (i ? "," : "") << flags.x[i];
    if (flags.x.empty()) std::cout << "-";
    std::cout << "\n";
    echo_params_human(std::cout, params);
    std::cout << "value  " << value.str() << "\n"
              << "micros " << micros << "\n";
  }
  return 0;
}

int cmd_enumerate(const ParamFlags& flags, const std::string& format) {
  ffv::ModelParams params = flags.assemble();
  ffv::ParticleConfig config = flags.config();

  ffv::Rational total(0);
  int count = 0;
  ffv::visit_configurations(
      params, config,
      [&](const std::vector<std::vector<int>>& levels, const ffv::Rational& weight) {
        total += weight;
        ++count;
        if (format == "structured") {
          nlohmann::json j;
          j["command"] = "enumerate";
          j["levels"] = levels;
          j["weight"] = weight.str();
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "# " << count << "  levels ";
          for (std::size_t i = 0; i < levels.size(); ++i) {
            if (i) std::cout << " / ";
            if (levels[i].empty()) std::cout << "-";
            for (std::size_t k = 0; k < levels[i].size(); ++k)
              std::cout << (k ? "," : "") << levels[i][k];
          }
          std::cout << "  weight " << weight.str() << "\n";
        }
      });

  if (format == "structured") {
    nlohmann::json j;
    j["command"] = "enumerate";
    j["params"] = params_json(params);
    j["configurations"] = count;
    j["total"] = total.str();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "configurations " << count << "\n"
              << "total " << total.str() << "\n";
  }
  return 0;
}

int cmd_verify(const ffv::SuiteOptions& options, const std::string& format) {
  std::vector<ffv::CheckReport> reports = ffv::run_suite(options);

  if (format == "structured") {
    for (const ffv::CheckReport& r : reports) std::cout << ffv::to_json_line(r) << "\n";
  } else {
    std::map<std::string, std::pair<int, int>> tally;  // property -> (pass, total)
    for (const ffv::CheckReport& r : reports) {
      auto& [ok, total] = tally[r.property];
      ok += r.pass ? 1 : 0;
      ++total;
    }
    for (const auto& [property, counts] : tally)
      std::cout << property << std::string(16 - std::min<std::size_t>(15, property.size()), ' ')
                << counts.first << "/" << counts.second << "\n";
    for (const ffv::CheckReport& r : reports)
      if (!r.pass) {
        std::cout << "FAIL " << r.property << " m=" << r.m << " n=" << r.n << " x=";
        for (std::size_t i = 0; i < r.x.size(); ++i)
          std::cout << (i ? "," : "") << r.x[i];
        if (r.x.empty()) std::cout << "-";
        std::cout << " seed=" << r.seed << " lhs=" << r.lhs << " rhs=" << r.rhs << " " << r.params
                  << "\n";
      }
    std::cout << (ffv::all_pass(reports) ? "all checks passed" : "CHECKS FAILED") << " ("
              << reports.size() << ")\n";
  }
  return ffv::all_pass(reports) ? 0 : kExitVerifyFail;
}

int cmd_bench(std::uint64_t seed, int m, int n, const std::string& format) {
  std::vector<ffv::BenchRow> rows = ffv::run_bench(seed, m, n);
  if (format == "structured") {
    for (const ffv::BenchRow& row : rows) std::cout << ffv::to_json_line(row) << "\n";
  } else {
    std::cout << "method       micros      peak_digits  value\n";
    for (const ffv::BenchRow& row : rows) {
      std::string name = row.method + std::string(13 - std::min<std::size_t>(12, row.method.size()), ' ');
      if (!row.skipped.empty()) {
        std::cout << name << "skipped: " << row.skipped << "\n";
        continue;
      }
      std::string micros = std::to_string(row.micros);
      std::string digits = std::to_string(row.peak_digits);
      std::cout << name << micros << std::string(12 - std::min<std::size_t>(11, micros.size()), ' ')
                << digits << std::string(13 - std::min<std::size_t>(12, digits.size()), ' ')
                << row.value << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluation and verification for free-fermion vertex-model wavefunctions"};
  app.require_subcommand(1);

  ParamFlags eval_flags;
  std::string eval_method = "lattice";
  std::string eval_format = "human";
  CLI::App* eval = app.add_subcommand("eval", "evaluate one wavefunction");
  eval_flags.attach(eval, true);
  eval->add_option("--method", eval_method, "lattice | bruteforce | determinant | symsum");
  eval->add_option("--format", eval_format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  ParamFlags enum_flags;
  std::string enum_format = "human";
  CLI::App* enumerate = app.add_subcommand("enumerate", "list grid configurations and weights");
  enum_flags.attach(enumerate, true);
  enumerate->add_option("--format", enum_format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  ffv::SuiteOptions suite;
  std::string verify_format = "human";
  bool verify_serial = false;
  CLI::App* verify = app.add_subcommand("verify", "run the seeded identity suite");
  verify->add_option("--seed", suite.seed, "base seed");
  verify->add_option("--max-m", suite.max_m, "largest column count");
  verify->add_option("--max-n", suite.max_n, "largest particle count");
  verify->add_option("--points", suite.points, "seeded points per case");
  verify->add_option("--suite", suite.suite,
                     "comma list: rll,degree,exchange,recursion,vanishing,factorization,"
                     "initial,theorem,commutation,column,uniqueness | characterization | all");
  verify->add_flag("--serial", verify_serial, "disable concurrent case execution");
  verify->add_option("--format", verify_format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  std::uint64_t bench_seed = 1;
  int bench_m = 8;
  int bench_n = 4;
  std::string bench_format = "human";
  CLI::App* bench = app.add_subcommand("bench", "time every method at one size");
  bench->add_option("--seed", bench_seed, "parameter seed");
  bench->add_option("--M", bench_m, "number of columns");
  bench->add_option("--N", bench_n, "number of particles");
  bench->add_option("--format", bench_format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_flags, eval_method, eval_format);
    if (enumerate->parsed()) return cmd_enumerate(enum_flags, enum_format);
    if (verify->parsed()) {
      suite.parallel = !verify_serial;
      return cmd_verify(suite, verify_format);
    }
    if (bench->parsed()) return cmd_bench(bench_seed, bench_m, bench_n, bench_format);
  } catch (const ffv::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
