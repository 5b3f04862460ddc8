#pragma once

#include "hwcm/spectral/params.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hwcm {

std::uint64_t fnv1a64(std::string_view bytes);

/// 16 hex digits of FNV-1a over the compact dump of `doc` (keys are sorted,
/// so equal documents hash equally).
std::string config_hash(const nlohmann::json& doc);

nlohmann::json to_json(const PhysParams& p);
/// Missing keys keep their defaults; the result is validated.
PhysParams params_from_json(const nlohmann::json& j, PhysParams defaults = {});

} // namespace hwcm
