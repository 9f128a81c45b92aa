#pragma once

#include <json.hpp>
#include <string>

#include "walker/verify/report.hpp"

namespace walker {

using ojson = nlohmann::ordered_json;

ojson verdict_json(const Verdict& v);

// Overall word, optionally wrapped in an ANSI color.
std::string paint(Overall o, bool color);

}  // namespace walker
