#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "overtwist/pattern.h"

namespace overtwist::cli {

// Full analysis of one pattern. Divergent patterns get a reduced report:
// fields that need the unique fixed point are null.
nlohmann::ordered_json analyze(const Pattern& pattern);

// "key: value" lines, one per report field.
std::string render_text(const nlohmann::ordered_json& report);

// Entry point shared by the executable and the tests. args excludes argv[0].
// Exit codes: 0 success, 1 a verification or sweep found failures,
// 2 usage or parse error, 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overtwist::cli
