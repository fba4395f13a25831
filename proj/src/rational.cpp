#include "ffv/rational.hpp"

#include <cctype>
#include <ostream>

namespace ffv {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("Rational: empty string");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }

  auto fail = [&] { throw std::invalid_argument("Rational: cannot parse '" + text + "'"); };

  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    q = mpq_class(n, d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp)) fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class n = mpz_class(ip) * scale + mpz_class(fp.empty() ? "0" : fp);
    q = mpq_class(n, scale);
  } else {
    if (!all_digits(s)) fail();
    q = mpq_class(mpz_class(s));
  }
  q.canonicalize();
  if (neg) q = -q;
  return Rational(q);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal_str() const {
  mpz_class den = v_.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return str();

  int shift = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, shift);
  mpz_class scaled = v_.get_num() * (scale / v_.get_den());
  mpz_class magnitude = abs(scaled);
  std::string digits = magnitude.get_str();
  std::string out = sgn(scaled) < 0 ? "-" : "";
  if (shift == 0) return out + digits;
  if (static_cast<int>(digits.size()) <= shift)
    digits.insert(0, shift + 1 - digits.size(), '0');
  digits.insert(digits.size() - shift, ".");
  return out + digits;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

int exact_degree(const std::vector<SamplePoint>& samples) {
  if (samples.empty()) throw std::invalid_argument("exact_degree: no samples");
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (samples[i].node == samples[j].node)
        throw std::invalid_argument("exact_degree: duplicate nodes");

  // Divided-difference table, row by row; the degree is the last level
  // holding a nonzero entry.
  std::vector<Rational> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = samples[i].value;

  int degree = 0;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Rational> next(n - k);
    for (std::size_t i = 0; i + k < n; ++i)
      next[i] = (level[i + 1] - level[i]) / (samples[i + k].node - samples[i].node);
    bool nonzero = false;
    for (const auto& d : next)
      if (!d.is_zero()) { nonzero = true; break; }
    if (nonzero) degree = static_cast<int>(k);
    level = std::move(next);
  }
  return degree;
}

Rational lagrange_eval(const std::vector<SamplePoint>& samples, const Rational& x) {
  if (samples.empty()) throw std::invalid_argument("lagrange_eval: no samples");
  Rational acc;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    Rational term = samples[j].value;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      if (k == j) continue;
      term *= (x - samples[k].node) / (samples[j].node - samples[k].node);
    }
    acc += term;
  }
  return acc;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RationalSampler::raw() { return splitmix64(state_); }

Rational RationalSampler::next() {
  long num = static_cast<long>(raw() % 19) - 9;
  long den = static_cast<long>(raw() % 9) + 1;
  return Rational(num, den);
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (!r.is_zero()) return r;
  }
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2));
  return splitmix64(s);
}

}  // namespace ffv
