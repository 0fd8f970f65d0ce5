#include "s4cover/pointjson.hpp"

#include <cmath>

#include <json.hpp>

#include "s4cover/errors.hpp"

namespace s4cover {

namespace {

struct SpaceInfo {
  Space space;
  const char* name;
  bool complex_coords;
  std::size_t arity;
};

constexpr SpaceInfo kSpaces[] = {
    {Space::S2, "S2", false, 3},        {Space::S3, "S3", false, 4},
    {Space::S4, "S4", false, 5},        {Space::S5, "S5", false, 6},
    {Space::CP1, "CP1", true, 2},       {Space::CP2, "CP2", true, 3},
    {Space::RP2, "RP2", false, 3},      {Space::RP4, "RP4", false, 5},
    {Space::C2, "C2", true, 2},         {Space::C3, "C3", true, 3},
    {Space::R6, "R6", false, 6},        {Space::PairS2W, "PAIR_S2", false, 6},
    {Space::PairCP1, "PAIR_CP1", true, 4},
    {Space::PairRP2, "PAIR_RP2", false, 6},
};

const SpaceInfo& info_of(Space s) {
  for (const auto& i : kSpaces)
    if (i.space == s) return i;
  throw UsageError("unknown space");
}

// -0.0 prints as "-0.0"; normalize so equal points serialize identically.
double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

const char* space_name(Space s) { return info_of(s).name; }

Space space_from_name(const std::string& name) {
  for (const auto& i : kSpaces)
    if (name == i.name) return i.space;
  throw UsageError("unknown space '" + name + "'");
}

bool space_is_complex(Space s) { return info_of(s).complex_coords; }

std::size_t space_arity(Space s) { return info_of(s).arity; }

PointJson PointJson::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid point JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("space") || !j.contains("coords"))
    throw UsageError("point JSON must be {\"space\": ..., \"coords\": [...]}");

  PointJson out;
  out.space = space_from_name(j["space"].get<std::string>());
  const auto& info = info_of(out.space);
  const auto& coords = j["coords"];
  if (!coords.is_array() || coords.size() != info.arity)
    throw DimensionMismatch("space " + std::string(info.name) + " expects " +
                            std::to_string(info.arity) + " coordinates");
  if (info.complex_coords) {
    for (const auto& c : coords) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
          !c[1].is_number())
        throw UsageError("complex coordinates must be [re, im] pairs");
      out.complexes.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
  } else {
    for (const auto& c : coords) {
      if (!c.is_number())
        throw UsageError("real coordinates must be plain numbers");
      out.reals.push_back(c.get<double>());
    }
  }
  return out;
}

std::string PointJson::serialize() const {
  nlohmann::ordered_json j;
  const auto& info = info_of(space);
  j["space"] = info.name;
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  if (info.complex_coords) {
    for (const auto& c : complexes)
      coords.push_back({clean_zero(c.real()), clean_zero(c.imag())});
  } else {
    for (double x : reals) coords.push_back(clean_zero(x));
  }
  j["coords"] = coords;
  return j.dump();
}

namespace {

void expect(const PointJson& p, Space s) {
  if (p.space != s)
    throw SpaceMismatch(std::string("expected a point of ") + space_name(s) +
                        ", got " + space_name(p.space));
}

}  // namespace

S2Point PointJson::as_s2() const {
  expect(*this, Space::S2);
  return S2Point({reals[0], reals[1], reals[2]});
}

Quaternion PointJson::as_quaternion() const {
  expect(*this, Space::S3);
  return Quaternion{reals[0], reals[1], reals[2], reals[3]}.normalized();
}

S4Point PointJson::as_s4() const {
  expect(*this, Space::S4);
  return S4Point({reals[0], reals[1], reals[2], reals[3], reals[4]});
}

CplxProj<1> PointJson::as_cp1() const {
  expect(*this, Space::CP1);
  return cp1(complexes[0], complexes[1]);
}

CplxProj<2> PointJson::as_cp2() const {
  expect(*this, Space::CP2);
  return cp2(complexes[0], complexes[1], complexes[2]);
}

RealProj<2> PointJson::as_rp2() const {
  expect(*this, Space::RP2);
  return rp2(reals[0], reals[1], reals[2]);
}

RealProj<4> PointJson::as_rp4() const {
  expect(*this, Space::RP4);
  return rp4(reals[0], reals[1], reals[2], reals[3], reals[4]);
}

PairS2 PointJson::as_pair_s2() const {
  expect(*this, Space::PairS2W);
  return {S2Point({reals[0], reals[1], reals[2]}),
          S2Point({reals[3], reals[4], reals[5]})};
}

std::pair<CplxProj<1>, CplxProj<1>> PointJson::as_pair_cp1() const {
  expect(*this, Space::PairCP1);
  return {cp1(complexes[0], complexes[1]), cp1(complexes[2], complexes[3])};
}

std::pair<RealProj<2>, RealProj<2>> PointJson::as_pair_rp2() const {
  expect(*this, Space::PairRP2);
  return {rp2(reals[0], reals[1], reals[2]), rp2(reals[3], reals[4], reals[5])};
}

std::pair<Complex, Complex> PointJson::as_c2() const {
  expect(*this, Space::C2);
  return {complexes[0], complexes[1]};
}

std::array<Complex, 3> PointJson::as_c3() const {
  expect(*this, Space::C3);
  return {complexes[0], complexes[1], complexes[2]};
}

PointJson PointJson::of(const S2Point& p) {
  PointJson out;
  out.space = Space::S2;
  out.reals.assign(p.coords().begin(), p.coords().end());
  return out;
}

PointJson PointJson::of(const Quaternion& q) {
  PointJson out;
  out.space = Space::S3;
  out.reals = {q.w, q.x, q.y, q.z};
  return out;
}

PointJson PointJson::of(const S4Point& p) {
  PointJson out;
  out.space = Space::S4;
  out.reals.assign(p.coords().begin(), p.coords().end());
  return out;
}

PointJson PointJson::of_cp1(const CplxProj<1>& p) {
  PointJson out;
  out.space = Space::CP1;
  const auto c = p.canonical().coords();
  out.complexes.assign(c.begin(), c.end());
  return out;
}

PointJson PointJson::of_cp2(const CplxProj<2>& p) {
  PointJson out;
  out.space = Space::CP2;
  const auto c = p.canonical().coords();
  out.complexes.assign(c.begin(), c.end());
  return out;
}

PointJson PointJson::of_rp2(const RealProj<2>& p) {
  PointJson out;
  out.space = Space::RP2;
  const auto c = p.canonical().coords();
  out.reals.assign(c.begin(), c.end());
  return out;
}

PointJson PointJson::of_rp4(const RealProj<4>& p) {
  PointJson out;
  out.space = Space::RP4;
  const auto c = p.canonical().coords();
  out.reals.assign(c.begin(), c.end());
  return out;
}

PointJson PointJson::of(const PairS2& p) {
  PointJson out;
  out.space = Space::PairS2W;
  out.reals = {p.first[0],  p.first[1],  p.first[2],
               p.second[0], p.second[1], p.second[2]};
  return out;
}

PointJson PointJson::of_r6(const std::array<double, 6>& v) {
  PointJson out;
  out.space = Space::R6;
  out.reals.assign(v.begin(), v.end());
  return out;
}

PointJson PointJson::of_c3(const std::array<Complex, 3>& v) {
  PointJson out;
  out.space = Space::C3;
  out.complexes.assign(v.begin(), v.end());
  return out;
}

}  // namespace s4cover
