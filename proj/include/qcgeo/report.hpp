#pragma once

// Serialization of geometry reports. Output is deterministic: keys in a fixed
// order, tensors as sorted term tables with 1-based indices, rationals "p/q".

#include "qcgeo/qc_pipeline.hpp"

#include <string>

namespace qcgeo {

std::string report_to_json(const GeometryReport& report);
std::string report_to_text(const GeometryReport& report);

}  // namespace qcgeo
