// Copyright 2026 The qmetro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "qmetro/mbqc.hpp"

namespace qmetro {

/// Line-oriented text form:
///
///   pattern <name>
///   vertices <n>
///   edge <a> <b>
///   inputs <v>...
///   outputs <v>...
///   measure <vertex> <base angle> <sign parity> <offset parity>
///   correct <vertex> <X|Z|H> <parity>
///
/// A parity is "-" (zero), "1", or terms such as "s0+s2" or "1+s1".
std::string to_text(const MeasurementPattern &pattern);

/// Parses to_text output; throws std::invalid_argument with the line number.
MeasurementPattern from_text(const std::string &text);

std::string parity_to_text(const Parity &p);
Parity parity_from_text(const std::string &text);

}  // namespace qmetro
