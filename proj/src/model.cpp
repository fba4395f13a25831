#include "ffv/model.hpp"

#include <stdexcept>

namespace ffv {

ModelParams ModelParams::truncated_both() const {
  ModelParams p;
  p.t = t;
  p.z.assign(z.begin(), z.end() - 1);
  p.sites.assign(sites.begin(), sites.end() - 1);
  return p;
}

ModelParams ModelParams::truncated_site() const {
  ModelParams p;
  p.t = t;
  p.z = z;
  p.sites.assign(sites.begin(), sites.end() - 1);
  return p;
}

Rational l_weight(int a_in, int q_in, int a_out, int q_out, const Rational& z,
                  const Rational& w, const Rational& alpha, const Rational& gamma,
                  const Rational& t) {
  if (a_in + q_in != a_out + q_out) return Rational(0);
  if (a_in == 0 && q_in == 0) return w - gamma * z;
  if (a_in == 1 && q_in == 1) return Rational(0) - t * alpha * w + (Rational(1) - alpha * gamma) * z;
  // one particle in, one out
  if (a_in == 0 && a_out == 0) return t * w + gamma * z;                          // 01 -> 01
  if (a_in == 1 && a_out == 1) return alpha * w + (Rational(1) - alpha * gamma) * z;  // 10 -> 10
  if (a_in == 1 && a_out == 0) return w;                                          // 10 -> 01
  return (t + Rational(1)) * z;                                                   // 01 -> 10
}

Rational r_weight(int a_in, int b_in, int a_out, int b_out, const Rational& z,
                  const Rational& t) {
  if (a_in + b_in != a_out + b_out) return Rational(0);
  if (a_in == 0 && b_in == 0) return Rational(1) + t * z;
  if (a_in == 1 && b_in == 1) return z + t;
  if (a_in == 0 && a_out == 0) return t * (Rational(1) - z);  // 01 -> 01
  if (a_in == 1 && a_out == 1) return z - Rational(1);        // 10 -> 10
  if (a_in == 1 && a_out == 0) return t + Rational(1);        // 10 -> 01
  return (t + Rational(1)) * z;                               // 01 -> 10
}

bool check_rll(const Rational& z1, const Rational& z2, const Site& site,
               const Rational& t) {
  if (z2.is_zero()) throw std::invalid_argument("check_rll: z2 must be nonzero");
  const Rational ratio = z1 / z2;

  // Operators on W_a x W_b x F_j; element-by-element comparison of
  // lhs = R_ab L_aj(z1) L_bj(z2) against rhs = L_bj(z2) L_aj(z1) R_ab.
  for (int a0 = 0; a0 < 2; ++a0)
    for (int b0 = 0; b0 < 2; ++b0)
      for (int q0 = 0; q0 < 2; ++q0)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            for (int q2 = 0; q2 < 2; ++q2) {
              Rational acc_l, acc_r;
              // intermediate states after the first, then second factor
              for (int b1 = 0; b1 < 2; ++b1)
                for (int q1 = 0; q1 < 2; ++q1)
                  for (int a1 = 0; a1 < 2; ++a1) {
                    // lhs: L_bj(z2) first, then L_aj(z1), then R_ab
                    acc_l += r_weight(a1, b1, a2, b2, ratio, t) *
                             l_weight(a0, q1, a1, q2, z1, site.w, site.alpha, site.gamma, t) *
                             l_weight(b0, q0, b1, q1, z2, site.w, site.alpha, site.gamma, t);
                    // rhs: R_ab first, then L_aj(z1), then L_bj(z2)
                    acc_r += l_weight(b1, q1, b2, q2, z2, site.w, site.alpha, site.gamma, t) *
                             l_weight(a1, q0, a2, q1, z1, site.w, site.alpha, site.gamma, t) *
                             r_weight(a0, b0, a1, b1, ratio, t);
                  }
              if (acc_l != acc_r) return false;
            }
  return true;
}

}  // namespace ffv
