// Copyright 2026 The Authors.
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

#ifndef MATALLOC_INSTANCE_JSON_H_
#define MATALLOC_INSTANCE_JSON_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "matalloc/instance.h"
#include "matalloc/matroid.h"
#include "matalloc/polymatroid.h"
#include "matalloc/rational.h"

namespace matalloc {

using Json = nlohmann::json;

// Rationals are {"num": n, "den": d} in lowest terms; +infinity is null.
Json RationalToJson(const Rational& q);
Json ExtRationalToJson(const ExtRational& q);
Rational RationalFromJson(const Json& j, const std::string& path);
ExtRational ExtRationalFromJson(const Json& j, const std::string& path);

Json MatroidToJson(const Matroid& m);
MatroidPtr MatroidFromJson(const Json& j, const std::string& path);
Json PolymatroidToJson(const Polymatroid& p);
PolymatroidPtr PolymatroidFromJson(const Json& j, const std::string& path);

Json InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const Json& j);

// Throws ParseError naming the offending field.
Instance ParseInstance(const std::string& text);
std::string SerializeInstance(const Instance& inst);

Json AllocationToJson(const Allocation& alloc);
Allocation AllocationFromJson(const Json& j, const std::string& path);

// Per-item, per-entity rationals.
using FractionalMatrix = std::vector<std::vector<Rational>>;
Json FractionalToJson(const FractionalMatrix& x);
FractionalMatrix FractionalFromJson(const Json& j, const std::string& path);

Json SubsetToJson(Subset s);
Json IntVectorToJson(const IntVector& v);

}  // namespace matalloc

#endif  // MATALLOC_INSTANCE_JSON_H_
