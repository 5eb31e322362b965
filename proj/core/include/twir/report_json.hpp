// Copyright 2026 The twir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWIR_REPORT_JSON_HPP_
#define TWIR_REPORT_JSON_HPP_

#include <nlohmann/json.hpp>

#include "twir/keyrate.hpp"
#include "twir/protocol.hpp"

namespace twir {

/// Payloads are hex strings (bit i -> nibble i/4, bit 3 - i%4) with an
/// explicit bit length.
nlohmann::json bits_to_json(const BitSeq& b);
nlohmann::json to_json(const Transcript& t);
nlohmann::json to_json(const SessionReport& r);
nlohmann::json to_json(const RatePoint& p);

}  // namespace twir

#endif  // TWIR_REPORT_JSON_HPP_
