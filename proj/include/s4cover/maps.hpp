#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>

#include "s4cover/projective.hpp"
#include "s4cover/quaternion.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

// ---------------------------------------------------------------------------
// Dihedral symmetries of S²×S².
//
// sigma(s,s') = (s', A(s)) and tau(s,s') = (s', s) generate a dihedral group
// of order 8: sigma⁴ = tau² = 1 and tau·sigma·tau = sigma⁻¹. Elements are
// kept in the normal form sigma^a tau^b.
// ---------------------------------------------------------------------------

struct DihedralElement {
  int a = 0;  // power of sigma, mod 4
  int b = 0;  // power of tau, mod 2

  static DihedralElement make(int a, int b) {
    return {((a % 4) + 4) % 4, ((b % 2) + 2) % 2};
  }
  static DihedralElement identity() { return {0, 0}; }
  static DihedralElement sigma() { return {1, 0}; }
  static DihedralElement tau() { return {0, 1}; }

  // (sigma^a1 tau^b1)(sigma^a2 tau^b2) = sigma^(a1 + (-1)^b1 a2) tau^(b1+b2)
  friend DihedralElement operator*(const DihedralElement& lhs,
                                   const DihedralElement& rhs) {
    return make(lhs.a + (lhs.b ? -rhs.a : rhs.a), lhs.b + rhs.b);
  }

  DihedralElement inverse() const { return make(b ? a : -a, b); }

  bool operator==(const DihedralElement&) const = default;

  // Total order for canonical subgroup listings.
  friend bool operator<(const DihedralElement& x, const DihedralElement& y) {
    return x.b != y.b ? x.b < y.b : x.a < y.a;
  }
};

std::array<DihedralElement, 8> dihedral_all();

PairS2 sigma_apply(const PairS2& p);
PairS2 tau_apply(const PairS2& p);

/// Applies the normal-form word: tau^b first, then sigma^a.
PairS2 dihedral_apply(const DihedralElement& e, const PairS2& p);

std::string dihedral_name(const DihedralElement& e);

// ---------------------------------------------------------------------------
// S⁴ packing convention.
//
// The target sphere S⁴ is the unit sphere of C²×R packed into R⁵ as
// (Re c1, Im c1, Re c2, Im c2, r). Every map with values in S⁴ uses this one
// packing bit-exactly.
// ---------------------------------------------------------------------------

struct C2R {
  Complex c1;
  Complex c2;
  double r;
};

inline std::array<double, 5> pack_c2r(Complex c1, Complex c2, double r) {
  return {c1.real(), c1.imag(), c2.real(), c2.imag(), r};
}

inline C2R unpack_c2r(const std::array<double, 5>& v) {
  return {{v[0], v[1]}, {v[2], v[3]}, v[4]};
}

inline C2R unpack_c2r(const S4Point& p) { return unpack_c2r(p.coords()); }

// ---------------------------------------------------------------------------
// The atlas of named maps.
// ---------------------------------------------------------------------------

/// Stereographic projection S² → CP¹, gamma(z,t) = [z : 1−t]. The equivalent
/// chart [1+t : conj(z)] is used when |1−t| < |1+t|, so the poles are covered
/// without a singular formula; the charts agree wherever both are valid
/// because z·conj(z) = (1−t)(1+t) on the sphere.
CplxProj<1> gamma(const S2Point& s);

/// Inverse of gamma: [u:v] -> (2u·conj(v), |u|²−|v|²) / (|u|²+|v|²).
S2Point gamma_inv(const CplxProj<1>& p);

/// The antipodal map conjugated through gamma: [u:v] -> [−conj(v) : conj(u)].
CplxProj<1> antipodal_cp1(const CplxProj<1>& p);

/// f(w,z) = (wz, w+z) on C².
std::pair<Complex, Complex> f_affine(Complex w, Complex z);

/// alpha(w,z) = ((w−z)/2, (w+z)/2); biholomorphic.
std::pair<Complex, Complex> alpha_map(Complex w, Complex z);
std::pair<Complex, Complex> alpha_inv(Complex p, Complex q);

/// beta(w,z) = (z, z²−4w); biholomorphic. beta∘f∘alpha = (w, z²).
std::pair<Complex, Complex> beta_map(Complex w, Complex z);
std::pair<Complex, Complex> beta_inv(Complex p, Complex q);

/// f_hat([u:v],[u':v']) = [uu' : uv'+u'v : vv'], the symmetric extension of f
/// to CP¹×CP¹ → CP². The diagonal lands on the conic z1² = 4·z0·z2.
CplxProj<2> f_hat(const CplxProj<1>& p, const CplxProj<1>& q);

/// lambda = f_hat ∘ (gamma × gamma): S²×S² → CP², invariant under tau.
CplxProj<2> lambda_map(const PairS2& p);

/// Coordinate-wise complex conjugation of CP^n.
template <std::size_t N>
CplxProj<N> conj_cp(const CplxProj<N>& p) {
  typename CplxProj<N>::Coords out;
  for (std::size_t i = 0; i <= N; ++i) out[i] = std::conj(p.coords()[i]);
  return CplxProj<N>(out);
}

/// The linear automorphism theta([u:v:w]) = [iu+w : (1−i)v : u+iw] of CP²,
/// or its inverse [w−iu : (1+i)v : u−iw] when `inverse` is set. Satisfies
/// theta⁴ = id, theta²([u:v:w]) = [w:−v:u] and c2·theta·c2 = theta⁻¹.
CplxProj<2> theta(const CplxProj<2>& p, bool inverse = false);
CplxProj<2> theta_inv(const CplxProj<2>& p);

/// g([r:s:t],[r':s':t']) = [rr'−ss' : rs'+sr' : rt'+tr' : st'+ts' : tt'],
/// the real-harmonic-coordinates extension of f to RP²×RP² → RP⁴.
RealProj<4> g_real(const RealProj<2>& p, const RealProj<2>& q);

/// The 5-tuple (rr'−ss', rs'+sr', rt'+tr', st'+ts', tt') before radial
/// normalization; equals (zz', zt'+tz', tt') under the C²×R packing. Its
/// norm is sqrt(1 + 2tt'(rr'+ss')), which never vanishes on S²×S².
std::array<double, 5> g_tilde_unnormalized(const PairS2& p);

/// Closed form of the norm of g_tilde_unnormalized.
double g_tilde_norm_formula(const PairS2& p);

/// The lift g~ : S²×S² → S⁴ of g; invariant under sigma² and tau, and
/// generically 4-to-1.
S4Point g_tilde(const PairS2& p);

/// G = g~ ∘ lambda⁻¹ : CP² → S⁴ in homogeneous form,
/// G([z0:z1:z2]) = nu(4·z0·conj(z2), 2·z0·conj(z1) − 2·z1·conj(z2),
///                    |z0|² + |z2|² − |z1|²/2 − |z1² − 4·z0·z2|/2).
S4Point big_g(const CplxProj<2>& p);

/// Per-term sign mask for the eth formula. All +1 reproduces the map; the
/// verification suites flip single entries to confirm that a corrupted
/// formula is detected against G∘theta.
struct EthSigns {
  static constexpr std::size_t kCount = 15;
  std::array<int, kCount> s{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

  static EthSigns flipped(std::size_t k) {
    EthSigns out;
    out.s[k] = -1;
    return out;
  }
};

/// eth = G ∘ theta : CP² → S⁴ evaluated by its own closed formula
/// eth([u:v:w]) = nu(4(i|u|² + u·conj(w) + conj(u)·w − i|w|²),
///                   2(i−1)(u·conj(v) + conj(u)·v − iv·conj(w) − i·conj(v)w),
///                   2|u|² + 2|w|² − |v|² − |2u² + 2w² + v²|),
/// obtained by expanding G(theta([u:v:w])) term by term; the identity
/// eth = G∘theta is kept as a two-route consistency check in the suites.
/// eth ∘ c2 = eth; its branch locus is the real locus of CP².
S4Point eth(const CplxProj<2>& p);
S4Point eth_with_signs(const CplxProj<2>& p, const EthSigns& signs);

/// g⁺ on S²×S²/<sigma²> at representative level: equals g_tilde and is
/// constant on <sigma²>-orbits.
S4Point g_plus(const PairS2& p);

/// h on S²×S²/<sigma> at representative level: the RP⁴ class of the g_tilde
/// 5-tuple (sigma negates the unnormalized tuple), constant on <sigma>-orbits.
RealProj<4> h_map(const PairS2& p);

/// eta(z1,z2,z3) = (|z1|², |z2|², |z3|², Re(z2·conj(z3)), Re(z3·conj(z1)),
/// Re(z1·conj(z2))): invariant under unit scalars and under conjugation; on
/// S⁵ the first three entries sum to 1, and on real points it restricts to
/// the Veronese embedding.
std::array<double, 6> eta_kuiper(const std::array<Complex, 3>& v);

/// The 2-fold covering S³ → C₀, q -> (q·i·q⁻¹, q·j·q⁻¹): both legs are on
/// S², orthogonal to each other, and q and −q have the same image.
PairS2 s3_double_cover(const Quaternion& q, double tol = 1e-9);

}  // namespace s4cover
