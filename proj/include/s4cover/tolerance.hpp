#pragma once

#include "s4cover/errors.hpp"

namespace s4cover {

/// Tolerances threaded through every operation and verification suite.
///
/// eq_tol governs point equality and double-root classification, suite_tol
/// is the per-check tolerance of the verification suites, and hull_tol is
/// the sampled support-function gap allowed in the convex-hull evidence
/// check (a sampling-density compromise; it shrinks as sample counts grow).
struct Tolerance {
  double eq_tol = 1e-9;
  double suite_tol = 1e-9;
  double hull_tol = 5e-2;

  void validate() const {
    if (!(eq_tol > 0.0) || !(suite_tol > 0.0) || !(hull_tol > 0.0))
      throw Error("Tolerance: all tolerances must be strictly positive");
  }
};

}  // namespace s4cover
