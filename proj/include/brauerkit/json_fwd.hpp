#pragma once

#include <json.hpp>

namespace brauerkit {

// Insertion-ordered so emitted documents keep the field order they were built with.
using Json = nlohmann::ordered_json;

}  // namespace brauerkit
