// Copyright 2026 The minss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"
#include "minss/access.hpp"
#include "minss/entropy.hpp"
#include "minss/schemes.hpp"
#include "minss/verify.hpp"

namespace minss {

using Json = nlohmann::json;

// {"num": int, "den": int}. Integers outside int64 are written as digit
// strings and accepted back in either form.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"variables": [...], "entries": [{"tuple": [...], "num": int, "den": int}, ...]},
// entries sorted by tuple.
Json joint_to_json(const JointDist& d);
JointDist joint_from_json(const Json& j);
Json dist_to_json(const ProbDist& d, const std::string& variable = "X");
// Accepts a one-variable distribution file.
ProbDist dist_from_json(const Json& j);

// {"n": int, "min_qualified": [[party, ...], ...]}
Json access_to_json(const AccessStructure& g);
AccessStructure access_from_json(const Json& j);

Json params_to_json(const SchemeParams& params);
SchemeParams params_from_json(SchemeKind kind, const Json& j);

// {"scheme": "pi1|pi2|general", "params": {...},
//  "shares": [{"party": i, "value": v} | {"party": i, "subshares": [{"j": j, "bit": b}]}]}
Json bundle_to_json(const ShareBundle& b);
ShareBundle bundle_from_json(const Json& j);

Json report_to_json(const SecurityReport& r);
Json report_to_json(const ShareBoundsReport& r);
Json report_to_json(const IdealityReport& r);
Json report_to_json(const ClaimReport& r);

// Parses text, wrapping library errors into ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace minss
