// Copyright 2026 The ldpcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Text forms of numbers shared by the CSV and JSON writers.

#ifndef LDPCORE_FORMAT_H_
#define LDPCORE_FORMAT_H_

#include <string>

#include "ldpcore/graph.h"

namespace ldpcore {

// Shortest decimal that reads back as the same double.
std::string FormatDouble(double value);

// "p/q", or "p" when q = 1.
std::string FormatRational(const Rational& value);

}  // namespace ldpcore

#endif  // LDPCORE_FORMAT_H_
