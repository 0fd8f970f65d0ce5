#pragma once

#include <cmath>
#include <cstdint>

namespace s4cover {

/// Identifies one deterministic sample substream. The pair (seed, index)
/// fully determines every draw of that sample, independent of the order in
/// which samples are evaluated, so parallel and serial runs agree.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// splitmix64 generator keyed by (seed, index).
class SubstreamRng {
 public:
  explicit SubstreamRng(RngSpec spec)
      : state_(detail::mix64(spec.seed ^ detail::mix64(spec.index))) {}

  SubstreamRng(std::uint64_t seed, std::uint64_t index)
      : SubstreamRng(RngSpec{seed, index}) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1].
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
  }

  /// Standard normal via Box-Muller; one spare value is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = uniform01();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * 3.14159265358979323846 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace s4cover
