#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "s4cover/maps.hpp"
#include "s4cover/report.hpp"
#include "s4cover/tolerance.hpp"

namespace s4cover {

/// Suite registry, in the order the verify command reports them.
const std::vector<std::string>& suite_names();

std::uint64_t default_suite_samples(std::string_view id);

/// Runs one randomized verification suite over `samples` deterministic
/// inputs drawn from (seed, index) substreams. Throws UnknownSuite for an
/// unregistered id.
Report run_suite(std::string_view id, std::uint64_t samples,
                 std::uint64_t seed, const Tolerance& tol = {});

/// The identities suite with a replaceable eth evaluator. The default runs
/// the production map; the acceptance tests inject sign-corrupted variants
/// to confirm the suite catches a wrong formula.
using EthFn = std::function<S4Point(const CplxProj<2>&)>;
Report run_identities_suite(std::uint64_t samples, std::uint64_t seed,
                            const Tolerance& tol, EthFn eth_fn = {});

}  // namespace s4cover
