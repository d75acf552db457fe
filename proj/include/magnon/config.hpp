// config.hpp — strict JSON device-configuration ingestion.
//
// The file is a JSON object with up to four sections: film, transducer,
// device, solver. Every key is optional and falls back to the documented
// default; unknown keys are rejected. Units are fixed per field: Gauss for
// fields, cm for lengths, Hz for frequencies, Ohm for impedances, Henry for
// the electrode inductance (see docs/config_schema.md).

#pragma once

#include <filesystem>

#include <nlohmann/json_fwd.hpp>

#include "magnon/response.hpp"

namespace magnon {

/// Parses and validates a device configuration. An empty JSON object yields
/// the default (fabricated-geometry) device. Throws ParseError on malformed
/// JSON or unknown keys, ValidationError naming the violated invariant.
DeviceConfig parse_device_config(const std::filesystem::path& path);

/// Same, from an in-memory JSON document.
DeviceConfig device_config_from_json(const nlohmann::json& j);

/// Fully resolved configuration (every key present) for manifests and docs.
nlohmann::json device_config_to_json(const DeviceConfig& cfg);

}  // namespace magnon
