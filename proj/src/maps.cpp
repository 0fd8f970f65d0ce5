#include "s4cover/maps.hpp"

#include <cmath>
#include <string>

namespace s4cover {

namespace {
constexpr Complex kI{0.0, 1.0};
}

std::array<DihedralElement, 8> dihedral_all() {
  std::array<DihedralElement, 8> out;
  std::size_t k = 0;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 4; ++a) out[k++] = DihedralElement{a, b};
  return out;
}

PairS2 sigma_apply(const PairS2& p) { return {p.second, antipodal(p.first)}; }

PairS2 tau_apply(const PairS2& p) { return {p.second, p.first}; }

PairS2 dihedral_apply(const DihedralElement& e, const PairS2& p) {
  PairS2 q = p;
  if (e.b) q = tau_apply(q);
  for (int i = 0; i < e.a; ++i) q = sigma_apply(q);
  return q;
}

std::string dihedral_name(const DihedralElement& e) {
  static const char* kSigma[] = {"", "s", "s2", "s3"};
  if (e.a == 0 && e.b == 0) return "1";
  std::string out = kSigma[e.a];
  if (e.b) out += "t";
  return out;
}

CplxProj<1> gamma(const S2Point& s) {
  const Complex z = s.z();
  const double t = s.t();
  if (std::abs(1.0 - t) >= std::abs(1.0 + t)) return cp1(z, 1.0 - t);
  return cp1(1.0 + t, std::conj(z));
}

S2Point gamma_inv(const CplxProj<1>& p) {
  const Complex u = p.coords()[0];
  const Complex v = p.coords()[1];
  const double d = std::norm(u) + std::norm(v);
  return S2Point::from_zt(2.0 * u * std::conj(v) / d,
                          (std::norm(u) - std::norm(v)) / d);
}

CplxProj<1> antipodal_cp1(const CplxProj<1>& p) {
  return cp1(-std::conj(p.coords()[1]), std::conj(p.coords()[0]));
}

std::pair<Complex, Complex> f_affine(Complex w, Complex z) {
  return {w * z, w + z};
}

std::pair<Complex, Complex> alpha_map(Complex w, Complex z) {
  return {(w - z) / 2.0, (w + z) / 2.0};
}

std::pair<Complex, Complex> alpha_inv(Complex p, Complex q) {
  return {q + p, q - p};
}

std::pair<Complex, Complex> beta_map(Complex w, Complex z) {
  return {z, z * z - 4.0 * w};
}

std::pair<Complex, Complex> beta_inv(Complex p, Complex q) {
  return {(p * p - q) / 4.0, p};
}

CplxProj<2> f_hat(const CplxProj<1>& p, const CplxProj<1>& q) {
  const Complex u = p.coords()[0], v = p.coords()[1];
  const Complex u2 = q.coords()[0], v2 = q.coords()[1];
  return cp2(u * u2, u * v2 + u2 * v, v * v2);
}

CplxProj<2> lambda_map(const PairS2& p) {
  return f_hat(gamma(p.first), gamma(p.second));
}

CplxProj<2> theta(const CplxProj<2>& p, bool inverse) {
  const auto& a = p.coords();
  if (!inverse)
    return cp2(kI * a[0] + a[2], (1.0 - kI) * a[1], a[0] + kI * a[2]);
  return cp2(a[2] - kI * a[0], (1.0 + kI) * a[1], a[0] - kI * a[2]);
}

CplxProj<2> theta_inv(const CplxProj<2>& p) { return theta(p, true); }

RealProj<4> g_real(const RealProj<2>& p, const RealProj<2>& q) {
  const auto& x = p.coords();
  const auto& y = q.coords();
  return rp4(x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0],
             x[0] * y[2] + x[2] * y[0], x[1] * y[2] + x[2] * y[1],
             x[2] * y[2]);
}

std::array<double, 5> g_tilde_unnormalized(const PairS2& p) {
  const double r = p.first[0], s = p.first[1], t = p.first[2];
  const double r2 = p.second[0], s2 = p.second[1], t2 = p.second[2];
  return {r * r2 - s * s2, r * s2 + s * r2, r * t2 + t * r2, s * t2 + t * s2,
          t * t2};
}

double g_tilde_norm_formula(const PairS2& p) {
  const double r = p.first[0], s = p.first[1], t = p.first[2];
  const double r2 = p.second[0], s2 = p.second[1], t2 = p.second[2];
  return std::sqrt(1.0 + 2.0 * t * t2 * (r * r2 + s * s2));
}

S4Point g_tilde(const PairS2& p) { return S4Point(g_tilde_unnormalized(p)); }

S4Point big_g(const CplxProj<2>& p) {
  const auto a = p.canonical().coords();
  const Complex z0 = a[0], z1 = a[1], z2 = a[2];
  const Complex c1 = 4.0 * z0 * std::conj(z2);
  const Complex c2 = 2.0 * z0 * std::conj(z1) - 2.0 * z1 * std::conj(z2);
  const double r = std::norm(z0) + std::norm(z2) - 0.5 * std::norm(z1) -
                   0.5 * std::abs(z1 * z1 - 4.0 * z0 * z2);
  return S4Point(pack_c2r(c1, c2, r));
}

S4Point eth_with_signs(const CplxProj<2>& p, const EthSigns& sg) {
  const auto a = p.canonical().coords();
  const Complex u = a[0], v = a[1], w = a[2];
  const auto sd = [&sg](std::size_t k) { return static_cast<double>(sg.s[k]); };

  const Complex c1 =
      4.0 * (sd(0) * kI * std::norm(u) + sd(1) * u * std::conj(w) +
             sd(2) * std::conj(u) * w - sd(3) * kI * std::norm(w));
  const Complex c2 =
      2.0 * (kI - 1.0) *
      (sd(4) * u * std::conj(v) + sd(5) * std::conj(u) * v -
       sd(6) * kI * v * std::conj(w) - sd(7) * kI * std::conj(v) * w);
  const Complex inner = sd(12) * 2.0 * u * u + sd(13) * 2.0 * w * w +
                        sd(14) * v * v;
  const double c3 = sd(8) * 2.0 * std::norm(u) + sd(9) * 2.0 * std::norm(w) -
                    sd(10) * std::norm(v) - sd(11) * std::abs(inner);
  return S4Point(pack_c2r(c1, c2, c3));
}

S4Point eth(const CplxProj<2>& p) { return eth_with_signs(p, EthSigns{}); }

S4Point g_plus(const PairS2& p) { return g_tilde(p); }

RealProj<4> h_map(const PairS2& p) {
  return RealProj<4>(g_tilde_unnormalized(p)).canonical();
}

std::array<double, 6> eta_kuiper(const std::array<Complex, 3>& v) {
  const Complex z1 = v[0], z2 = v[1], z3 = v[2];
  return {std::norm(z1),
          std::norm(z2),
          std::norm(z3),
          (z2 * std::conj(z3)).real(),
          (z3 * std::conj(z1)).real(),
          (z1 * std::conj(z2)).real()};
}

PairS2 s3_double_cover(const Quaternion& q, double tol) {
  if (!is_unit(q, tol))
    throw NonUnitQuaternion("s3_double_cover: |q| must be 1");
  const Quaternion qi = q * Quaternion{0.0, 1.0, 0.0, 0.0} * q.conjugate();
  const Quaternion qj = q * Quaternion{0.0, 0.0, 1.0, 0.0} * q.conjugate();
  return {S2Point(qi.imag()), S2Point(qj.imag())};
}

}  // namespace s4cover
