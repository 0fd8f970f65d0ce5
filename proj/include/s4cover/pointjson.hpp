#pragma once

#include <string>
#include <vector>

#include "s4cover/maps.hpp"
#include "s4cover/projective.hpp"
#include "s4cover/quaternion.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

/// Named point spaces of the CLI wire format. Real spaces carry a flat array
/// of reals; complex spaces carry an array of [re, im] pairs. PAIR_* spaces
/// concatenate the two legs.
enum class Space {
  S2,       // 3 reals
  S3,       // 4 reals (quaternion w, x, y, z)
  S4,       // 5 reals
  S5,       // 6 reals
  CP1,      // 2 complex
  CP2,      // 3 complex
  RP2,      // 3 reals
  RP4,      // 5 reals
  C2,       // 2 complex
  C3,       // 3 complex
  R6,       // 6 reals (eta's codomain)
  PairS2W,  // 6 reals
  PairCP1,  // 4 complex (f_hat's domain)
  PairRP2,  // 6 reals (g's domain)
};

const char* space_name(Space s);
Space space_from_name(const std::string& name);  // throws UsageError
bool space_is_complex(Space s);
std::size_t space_arity(Space s);  // number of entries in coords

/// One point as carried over the CLI boundary: {"space": ..., "coords": ...}.
/// Finite doubles round-trip bit-exactly through parse/serialize.
struct PointJson {
  Space space = Space::S2;
  std::vector<double> reals;      // used when the space is real
  std::vector<Complex> complexes; // used when the space is complex

  static PointJson parse(const std::string& text);
  std::string serialize() const;

  // Typed views; each checks the space tag and throws SpaceMismatch.
  S2Point as_s2() const;
  Quaternion as_quaternion() const;       // S3
  S4Point as_s4() const;
  CplxProj<1> as_cp1() const;
  CplxProj<2> as_cp2() const;
  RealProj<2> as_rp2() const;
  RealProj<4> as_rp4() const;
  PairS2 as_pair_s2() const;
  std::pair<CplxProj<1>, CplxProj<1>> as_pair_cp1() const;
  std::pair<RealProj<2>, RealProj<2>> as_pair_rp2() const;
  std::pair<Complex, Complex> as_c2() const;
  std::array<Complex, 3> as_c3() const;

  static PointJson of(const S2Point& p);
  static PointJson of(const Quaternion& q);
  static PointJson of(const S4Point& p);
  static PointJson of_cp1(const CplxProj<1>& p);   // canonical representative
  static PointJson of_cp2(const CplxProj<2>& p);   // canonical representative
  static PointJson of_rp2(const RealProj<2>& p);   // canonical representative
  static PointJson of_rp4(const RealProj<4>& p);   // canonical representative
  static PointJson of(const PairS2& p);
  static PointJson of_r6(const std::array<double, 6>& v);
  static PointJson of_c3(const std::array<Complex, 3>& v);
};

}  // namespace s4cover
