#pragma once

// JSON building blocks shared by the library and the CLI. Pulls in the
// vendored nlohmann/json header; include only where JSON is composed.

#include <string>

#include "json.hpp"
#include "walkdom/domination.hpp"

namespace walkdom {

nlohmann::json certificate_json(const Graph& g, ClassPair pair, const Certificate& cert,
                                const std::string& graph6);

}  // namespace walkdom
