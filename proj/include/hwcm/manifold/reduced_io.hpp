#pragma once

#include "hwcm/manifold/reduced.hpp"

#include <json.hpp>

#include <string>

namespace hwcm {

/// Document with the generating parameters and their hash, centre modes,
/// Lambda_X, the nonzero entries of M11/M12/M21/M22 and Psi_L, and the xi table.
nlohmann::json reduced_to_json(const ReducedSystem& sys);

void write_reduced_json(const std::string& path, const ReducedSystem& sys);

} // namespace hwcm
