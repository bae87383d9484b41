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
#include "matalloc/caps.h"

#include <mutex>
#include <sstream>

#include "matalloc/errors.h"

namespace matalloc {
namespace {

std::mutex& CapsMutex() {
  static std::mutex mu;
  return mu;
}

Caps& GlobalCaps() {
  static Caps caps;
  return caps;
}

}  // namespace

const Caps& GetCaps() { return GlobalCaps(); }

void SetCaps(const Caps& caps) {
  std::lock_guard<std::mutex> lock(CapsMutex());
  GlobalCaps() = caps;
}

Caps ParseCapsOverride(const std::string& spec, Caps base) {
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ContractError("caps override '" + item + "' lacks '='");
    }
    std::string key = item.substr(0, eq);
    std::int64_t value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ContractError("caps override '" + item + "' is not an integer");
    }
    if (value <= 0) throw ContractError("caps must be positive: " + item);
    if (key == "ground") {
      base.sfm_ground = static_cast<int>(value);
    } else if (key == "expansion") {
      base.expansion = static_cast<int>(value);
    } else if (key == "enum") {
      base.classical_enum = value;
    } else if (key == "matroid-enum") {
      base.matroid_enum = value;
    } else if (key == "lp") {
      base.lp_variables = static_cast<int>(value);
    } else if (key == "configs") {
      base.configurations = value;
    } else if (key == "grid") {
      base.guess_grid = value;
    } else {
      throw ContractError("unknown caps key '" + key + "'");
    }
  }
  if (base.sfm_ground > 62 || base.expansion > 64) {
    throw ContractError("ground and expansion caps are limited to 64 bits");
  }
  return base;
}

}  // namespace matalloc
