#include "pmf/deghilb.hpp"

#include "pmf/classical.hpp"

namespace pmf {

Symmetry detect_symmetry(const BiExp& x) {
  BiExp swapped = x.swap();
  if (BiExp::agree(x, swapped)) return Symmetry::symmetric;
  if (BiExp::agree(x, -swapped)) return Symmetry::antisymmetric;
  return Symmetry::mixed;
}

GForm make_gform(long weight, BiExp expansion) {
  Symmetry s = detect_symmetry(expansion);
  return {weight, std::move(expansion), s};
}

GForm f_tensor(int i, int j, const Rational& trunc) {
  if ((i != 1 && i != 2) || (j != 1 && j != 2))
    throw std::invalid_argument("tensor indices must be 1 or 2");
  auto e = [&](int idx) {
    return idx == 1 ? gamma2_e1(trunc).expansion : gamma2_e2(trunc).expansion;
  };
  return make_gform(2, tensor(e(i), e(j)));
}

GForm X2(const Rational& trunc) {
  BiExp f11 = f_tensor(1, 1, trunc).expansion;
  BiExp f12 = f_tensor(1, 2, trunc).expansion;
  BiExp f21 = f_tensor(2, 1, trunc).expansion;
  BiExp f22 = f_tensor(2, 2, trunc).expansion;
  return make_gform(2, Rational(4, 3) * (f11 + f22) - Rational(2, 3) * (f12 + f21));
}

GForm X4(const Rational& trunc) {
  BiExp f12 = f_tensor(1, 2, trunc).expansion;
  BiExp f21 = f_tensor(2, 1, trunc).expansion;
  return make_gform(4, Rational(1, 144) * (f12 - f21).pow(2));
}

GForm Delta6(const Rational& trunc) {
  BiExp f11 = f_tensor(1, 1, trunc).expansion;
  BiExp f12 = f_tensor(1, 2, trunc).expansion;
  BiExp f21 = f_tensor(2, 1, trunc).expansion;
  BiExp f22 = f_tensor(2, 2, trunc).expansion;
  BiExp p = (f11 + f12 + f21 + f22) *
            (f11 - Rational(2) * f12 - Rational(2) * f21 + Rational(4) * f22) *
            (Rational(4) * f11 - Rational(2) * f12 - Rational(2) * f21 + f22);
  return make_gform(6, Rational(1, 2916) * p);
}

GForm Delta6_eta(const Rational& trunc) {
  QExp eta12 = eta_power(12, trunc).expansion;
  return make_gform(6, tensor(eta12, eta12));
}

GForm X8(const Rational& trunc) {
  BiExp f11 = f_tensor(1, 1, trunc).expansion;
  BiExp f12 = f_tensor(1, 2, trunc).expansion;
  BiExp f21 = f_tensor(2, 1, trunc).expansion;
  BiExp f22 = f_tensor(2, 2, trunc).expansion;
  BiExp p = (f11 - f22) * (f12 - f21) * (f12 + f21 - f11) * (f12 + f21 - f22);
  return make_gform(8, Rational(1, 81) * p);
}

QExp phi(int which, const GForm& x) { return boundary_slice(x.expansion, which); }

BiExp relation_R_residual(const Rational& trunc) {
  return relation_R_residual_perturbed(trunc, Rational(4096));
}

BiExp relation_R_residual_perturbed(const Rational& trunc, const Rational& x4_4_coeff) {
  BiExp x2 = X2(trunc).expansion;
  BiExp x4 = X4(trunc).expansion;
  BiExp d6 = Delta6(trunc).expansion;
  BiExp x8 = X8(trunc).expansion;
  BiExp rhs = x2.pow(4) * x4.pow(2) - Rational(128) * x2.pow(2) * x4.pow(3) +
              x4_4_coeff * x4.pow(4) + Rational(4) * x2.pow(3) * x4 * d6 -
              Rational(2304) * x2 * x4.pow(2) * d6 - Rational(6912) * x4 * d6.pow(2);
  return x8.pow(2) - rhs;
}

std::vector<std::pair<std::string, GForm>> a_star_generators(const Rational& trunc) {
  BiExp x2 = X2(trunc).expansion;
  BiExp x4 = X4(trunc).expansion;
  BiExp d6 = Delta6(trunc).expansion;
  BiExp x8 = X8(trunc).expansion;
  std::vector<std::pair<std::string, GForm>> out;
  out.emplace_back("X2^2-48X4", make_gform(4, x2.pow(2) - Rational(48) * x4));
  out.emplace_back("X2^3-72X2X4", make_gform(6, x2.pow(3) - Rational(72) * x2 * x4));
  out.emplace_back("Delta6", make_gform(6, d6));
  out.emplace_back("X2Delta6", make_gform(8, x2 * d6));
  out.emplace_back("X4Delta6", make_gform(10, x4 * d6));
  out.emplace_back("X4X8", make_gform(12, x4 * x8));
  out.emplace_back("Delta6X8", make_gform(14, d6 * x8));
  out.emplace_back("X2Delta6X8", make_gform(16, x2 * d6 * x8));
  return out;
}

bool a_star_membership(const GForm& x) {
  for (int which : {1, 2}) {
    QExp slice = substitute_scale_down(phi(which, x), 2);
    if (!level1_membership(slice, x.weight).has_value()) return false;
  }
  return true;
}

}  // namespace pmf
