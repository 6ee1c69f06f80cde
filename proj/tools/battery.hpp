#pragma once

#include <functional>
#include <string>

#include "mvm/verify.hpp"

namespace mvm {

/// The acceptance battery as one report, one axiom per criterion (A1 … A12).
/// progress is called with each criterion id and its wall time in seconds.
VerificationReport run_battery(unsigned jobs, std::uint64_t seed,
                               const std::function<void(const std::string&, double)>& progress = {});

}  // namespace mvm
