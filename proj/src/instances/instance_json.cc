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

#include "matalloc/instance_json.h"

#include <string>
#include <utility>

#include "matalloc/errors.h"
#include "matalloc/intersect.h"

namespace matalloc {
namespace {

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& Field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(path + "." + key, "missing required field");
  }
  return *it;
}

std::int64_t IntFrom(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::int64_t NonNegInt(const Json& j, const std::string& path) {
  std::int64_t v = IntFrom(j, path);
  if (v < 0) throw ParseError(path, "expected a nonnegative integer");
  return v;
}

const Json& ArrayFrom(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

std::vector<int> IntList(const Json& j, const std::string& path) {
  std::vector<int> out;
  const Json& arr = ArrayFrom(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(static_cast<int>(IntFrom(arr[i], Index(path, i))));
  }
  return out;
}

IntVector IntVectorFrom(const Json& j, const std::string& path) {
  IntVector out;
  const Json& arr = ArrayFrom(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(IntFrom(arr[i], Index(path, i)));
  }
  return out;
}

std::vector<std::vector<int>> NestedIntList(const Json& j,
                                            const std::string& path) {
  std::vector<std::vector<int>> out;
  const Json& arr = ArrayFrom(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(IntList(arr[i], Index(path, i)));
  }
  return out;
}

Subset SubsetFrom(const Json& j, const std::string& path) {
  Subset s = 0;
  auto list = IntList(j, path);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] < 0 || list[i] >= kMaxGround) {
      throw ParseError(Index(path, i), "element out of range");
    }
    s |= Bit(list[i]);
  }
  return s;
}

Json TableToJson(int n, const auto& table) {
  Json out = Json::object();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    out[std::to_string(mask)] = table[mask];
  }
  return out;
}

std::vector<std::int64_t> TableFrom(const Json& j, int n,
                                    const std::string& path) {
  if (n > 24) throw ParseError(path, "explicit tables support n <= 24");
  if (!j.is_object()) throw ParseError(path, "expected an object");
  std::size_t size = std::size_t{1} << n;
  if (j.size() != size) {
    throw ParseError(path, "expected " + std::to_string(size) + " entries");
  }
  std::vector<std::int64_t> table(size);
  for (std::size_t mask = 0; mask < size; ++mask) {
    std::string key = std::to_string(mask);
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing entry");
    table[mask] = IntFrom(*it, path + "." + key);
  }
  return table;
}

template <typename Fn>
auto Wrap(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ContractError& e) {
    throw ParseError(path, e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace

Json RationalToJson(const Rational& q) {
  return Json{{"num", ToInt64(numerator(q))}, {"den", ToInt64(denominator(q))}};
}

Json ExtRationalToJson(const ExtRational& q) {
  return q.has_value() ? RationalToJson(*q) : Json(nullptr);
}

Rational RationalFromJson(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  std::int64_t num = IntFrom(Field(j, "num", path), path + ".num");
  std::int64_t den = IntFrom(Field(j, "den", path), path + ".den");
  if (den == 0) throw ParseError(path + ".den", "zero denominator");
  return MakeRational(num, den);
}

ExtRational ExtRationalFromJson(const Json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  return RationalFromJson(j, path);
}

Json SubsetToJson(Subset s) { return Json(Elements(s)); }
Json IntVectorToJson(const IntVector& v) { return Json(v); }

Json MatroidToJson(const Matroid& m) {
  switch (m.kind()) {
    case MatroidKind::kUniform: {
      const auto& u = static_cast<const UniformMatroid&>(m);
      return {{"kind", "uniform"}, {"n", u.size()}, {"rank", u.rank_bound()}};
    }
    case MatroidKind::kPartition: {
      const auto& p = static_cast<const PartitionMatroid&>(m);
      return {{"kind", "partition"},
              {"n", p.size()},
              {"blocks", p.blocks()},
              {"capacities", p.capacities()}};
    }
    case MatroidKind::kGraphic: {
      const auto& g = static_cast<const GraphicMatroid&>(m);
      Json edges = Json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      return {{"kind", "graphic"}, {"vertices", g.vertices()}, {"edges", edges}};
    }
    case MatroidKind::kTransversal: {
      const auto& t = static_cast<const TransversalMatroid&>(m);
      return {{"kind", "transversal"},
              {"right", t.right_size()},
              {"adjacency", t.adjacency()}};
    }
    case MatroidKind::kExplicit: {
      const auto& e = static_cast<const ExplicitMatroid&>(m);
      return {{"kind", "explicit"},
              {"n", e.size()},
              {"table", TableToJson(e.size(), e.table())}};
    }
    case MatroidKind::kContracted: {
      const auto& c = static_cast<const ContractedMatroid&>(m);
      return {{"kind", "contracted"},
              {"inner", MatroidToJson(*c.inner())},
              {"set", SubsetToJson(c.contracted())}};
    }
    case MatroidKind::kZeroed: {
      const auto& z = static_cast<const ZeroedMatroid&>(m);
      return {{"kind", "zeroed"},
              {"inner", MatroidToJson(*z.inner())},
              {"removed", SubsetToJson(z.removed())}};
    }
    case MatroidKind::kUnion: {
      const auto& u = static_cast<const UnionMatroid&>(m);
      Json parts = Json::array();
      for (const auto& p : u.parts()) parts.push_back(MatroidToJson(*p));
      return {{"kind", "union"}, {"n", u.size()}, {"parts", parts}};
    }
    case MatroidKind::kInduced: {
      const auto& i = static_cast<const InducedMatroid&>(m);
      return {{"kind", "induced"},
              {"polymatroid", PolymatroidToJson(*i.polymatroid())}};
    }
    case MatroidKind::kExpanded: {
      const auto& x = static_cast<const ExpandedMatroid&>(m);
      return {{"kind", "expanded"},
              {"polymatroid", PolymatroidToJson(*x.polymatroid())},
              {"caps", x.expanded().multiplicity}};
    }
  }
  throw ContractError("unserializable matroid kind");
}

MatroidPtr MatroidFromJson(const Json& j, const std::string& path) {
  const Json& kind_json = Field(j, "kind", path);
  if (!kind_json.is_string()) throw ParseError(path + ".kind", "expected string");
  std::string kind = kind_json.get<std::string>();
  return Wrap(path, [&]() -> MatroidPtr {
    if (kind == "uniform") {
      return MakeUniform(
          static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n")),
          static_cast<int>(NonNegInt(Field(j, "rank", path), path + ".rank")));
    }
    if (kind == "partition") {
      return MakePartition(
          static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n")),
          NestedIntList(Field(j, "blocks", path), path + ".blocks"),
          IntList(Field(j, "capacities", path), path + ".capacities"));
    }
    if (kind == "graphic") {
      std::vector<std::pair<int, int>> edges;
      auto raw = NestedIntList(Field(j, "edges", path), path + ".edges");
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != 2) {
          throw ParseError(Index(path + ".edges", i), "edge needs 2 endpoints");
        }
        edges.emplace_back(raw[i][0], raw[i][1]);
      }
      return MakeGraphic(static_cast<int>(NonNegInt(
                             Field(j, "vertices", path), path + ".vertices")),
                         std::move(edges));
    }
    if (kind == "transversal") {
      return MakeTransversal(
          static_cast<int>(NonNegInt(Field(j, "right", path), path + ".right")),
          NestedIntList(Field(j, "adjacency", path), path + ".adjacency"));
    }
    if (kind == "explicit") {
      int n = static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n"));
      auto table = TableFrom(Field(j, "table", path), n, path + ".table");
      return MakeExplicitMatroid(n, std::vector<int>(table.begin(), table.end()));
    }
    if (kind == "contracted") {
      return MakeContracted(
          MatroidFromJson(Field(j, "inner", path), path + ".inner"),
          SubsetFrom(Field(j, "set", path), path + ".set"));
    }
    if (kind == "zeroed") {
      return MakeZeroed(
          MatroidFromJson(Field(j, "inner", path), path + ".inner"),
          SubsetFrom(Field(j, "removed", path), path + ".removed"));
    }
    if (kind == "union") {
      std::vector<MatroidPtr> parts;
      const Json& arr = ArrayFrom(Field(j, "parts", path), path + ".parts");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        parts.push_back(MatroidFromJson(arr[i], Index(path + ".parts", i)));
      }
      if (parts.empty()) {
        int n = static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n"));
        return MakeUniform(n, 0);
      }
      return MakeUnion(std::move(parts));
    }
    if (kind == "induced") {
      return MakeInduced(PolymatroidFromJson(Field(j, "polymatroid", path),
                                             path + ".polymatroid"));
    }
    if (kind == "expanded") {
      auto p = PolymatroidFromJson(Field(j, "polymatroid", path),
                                   path + ".polymatroid");
      return UnitExpand(p, IntVectorFrom(Field(j, "caps", path), path + ".caps"))
          .second;
    }
    throw ParseError(path + ".kind", "unknown matroid kind '" + kind + "'");
  });
}

Json PolymatroidToJson(const Polymatroid& p) {
  switch (p.kind()) {
    case PolymatroidKind::kModular: {
      const auto& m = static_cast<const ModularPolymatroid&>(p);
      return {{"kind", "modular"}, {"weights", m.weights()}};
    }
    case PolymatroidKind::kCoverage: {
      const auto& c = static_cast<const CoveragePolymatroid&>(p);
      return {{"kind", "coverage"},
              {"covers", c.covers()},
              {"weights", c.item_weights()}};
    }
    case PolymatroidKind::kScaledRank: {
      const auto& s = static_cast<const ScaledRankPolymatroid&>(p);
      return {{"kind", "scaled-rank"},
              {"matroid", MatroidToJson(*s.matroid())},
              {"scale", s.scale()}};
    }
    case PolymatroidKind::kExplicit: {
      const auto& e = static_cast<const ExplicitPolymatroid&>(p);
      return {{"kind", "explicit"},
              {"n", e.size()},
              {"table", TableToJson(e.size(), e.table())}};
    }
    case PolymatroidKind::kSum: {
      const auto& s = static_cast<const SumPolymatroid&>(p);
      Json parts = Json::array();
      for (const auto& part : s.parts()) parts.push_back(PolymatroidToJson(*part));
      return {{"kind", "sum"}, {"n", s.size()}, {"parts", parts}};
    }
    case PolymatroidKind::kCapped: {
      const auto& c = static_cast<const CappedPolymatroid&>(p);
      Json caps = Json::array();
      for (const auto& cap : c.caps()) {
        caps.push_back(cap.has_value() ? Json(*cap) : Json(nullptr));
      }
      return {{"kind", "capped"},
              {"inner", PolymatroidToJson(*c.inner())},
              {"caps", caps}};
    }
    case PolymatroidKind::kContracted: {
      const auto& c = static_cast<const ContractedPolymatroid&>(p);
      return {{"kind", "contracted"},
              {"inner", PolymatroidToJson(*c.inner())},
              {"base", c.base()}};
    }
    case PolymatroidKind::kDual: {
      const auto& d = static_cast<const DualPolymatroid&>(p);
      return {{"kind", "dual"},
              {"inner", PolymatroidToJson(*d.inner())},
              {"z", d.z()}};
    }
    case PolymatroidKind::kPulledBack: {
      const auto& b = static_cast<const PulledBackPolymatroid&>(p);
      Json blocks = Json::array();
      for (const auto& block : b.blocks()) {
        blocks.push_back({{"inner", PolymatroidToJson(*block.inner)},
                          {"members", block.members},
                          {"targets", block.targets}});
      }
      return {{"kind", "pulled-back"}, {"n", b.size()}, {"blocks", blocks}};
    }
  }
  throw ContractError("unserializable polymatroid kind");
}

PolymatroidPtr PolymatroidFromJson(const Json& j, const std::string& path) {
  const Json& kind_json = Field(j, "kind", path);
  if (!kind_json.is_string()) throw ParseError(path + ".kind", "expected string");
  std::string kind = kind_json.get<std::string>();
  return Wrap(path, [&]() -> PolymatroidPtr {
    if (kind == "modular") {
      return MakeModular(
          IntVectorFrom(Field(j, "weights", path), path + ".weights"));
    }
    if (kind == "coverage") {
      return MakeCoverage(
          NestedIntList(Field(j, "covers", path), path + ".covers"),
          IntVectorFrom(Field(j, "weights", path), path + ".weights"));
    }
    if (kind == "scaled-rank") {
      return MakeScaledRank(
          MatroidFromJson(Field(j, "matroid", path), path + ".matroid"),
          NonNegInt(Field(j, "scale", path), path + ".scale"));
    }
    if (kind == "explicit") {
      int n = static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n"));
      return MakeExplicitPolymatroid(
          n, TableFrom(Field(j, "table", path), n, path + ".table"));
    }
    if (kind == "sum") {
      std::vector<PolymatroidPtr> parts;
      const Json& arr = ArrayFrom(Field(j, "parts", path), path + ".parts");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        parts.push_back(PolymatroidFromJson(arr[i], Index(path + ".parts", i)));
      }
      if (parts.empty()) {
        return MakeZeroPolymatroid(
            static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n")));
      }
      return MakeSum(std::move(parts));
    }
    if (kind == "capped") {
      std::vector<std::optional<std::int64_t>> caps;
      const Json& arr = ArrayFrom(Field(j, "caps", path), path + ".caps");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (arr[i].is_null()) {
          caps.push_back(std::nullopt);
        } else {
          caps.push_back(NonNegInt(arr[i], Index(path + ".caps", i)));
        }
      }
      return MakeCapped(
          PolymatroidFromJson(Field(j, "inner", path), path + ".inner"),
          std::move(caps));
    }
    if (kind == "contracted") {
      return MakeContractedPolymatroid(
          PolymatroidFromJson(Field(j, "inner", path), path + ".inner"),
          IntVectorFrom(Field(j, "base", path), path + ".base"));
    }
    if (kind == "dual") {
      return MakeDual(
          PolymatroidFromJson(Field(j, "inner", path), path + ".inner"),
          IntVectorFrom(Field(j, "z", path), path + ".z"));
    }
    if (kind == "pulled-back") {
      std::vector<PulledBackPolymatroid::Block> blocks;
      const Json& arr = ArrayFrom(Field(j, "blocks", path), path + ".blocks");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string at = Index(path + ".blocks", i);
        PulledBackPolymatroid::Block block;
        block.inner = PolymatroidFromJson(Field(arr[i], "inner", at), at + ".inner");
        block.members = IntList(Field(arr[i], "members", at), at + ".members");
        block.targets = IntList(Field(arr[i], "targets", at), at + ".targets");
        blocks.push_back(std::move(block));
      }
      return MakePulledBack(
          static_cast<int>(NonNegInt(Field(j, "n", path), path + ".n")),
          std::move(blocks));
    }
    throw ParseError(path + ".kind", "unknown polymatroid kind '" + kind + "'");
  });
}

Json InstanceToJson(const Instance& instance) {
  if (const auto* core = std::get_if<CoreCoverInstance>(&instance)) {
    return {{"type", "core-cover"},
            {"players", core->size()},
            {"matroid", MatroidToJson(*core->matroid)},
            {"polymatroid", PolymatroidToJson(*core->polymatroid)},
            {"b", core->b}};
  }
  const auto& inst = std::get<AllocationInstance>(instance);
  Json out;
  out["type"] = InstanceTypeName(inst.type);
  out[inst.is_santa() ? "players" : "machines"] = inst.entities;
  Json items = Json::array();
  for (const Item& item : inst.items) {
    Json entry;
    if (inst.is_matroid()) {
      entry["value"] = RationalToJson(item.value);
      entry["polymatroid"] = PolymatroidToJson(*item.polymatroid);
    } else {
      Json values = Json::array();
      for (const auto& v : item.values) values.push_back(ExtRationalToJson(v));
      entry["values"] = values;
    }
    items.push_back(entry);
  }
  out["items"] = items;
  return out;
}

Instance InstanceFromJson(const Json& j) {
  const std::string root = "$";
  const Json& type_json = Field(j, "type", root);
  if (!type_json.is_string()) throw ParseError("$.type", "expected string");
  std::string type = type_json.get<std::string>();
  if (type == "core-cover") {
    CoreCoverInstance core;
    core.matroid = MatroidFromJson(Field(j, "matroid", root), "$.matroid");
    core.polymatroid =
        PolymatroidFromJson(Field(j, "polymatroid", root), "$.polymatroid");
    auto players = NonNegInt(Field(j, "players", root), "$.players");
    if (core.matroid->size() != players ||
        core.polymatroid->size() != players) {
      throw ParseError("$.players", "does not match oracle ground sizes");
    }
    if (j.contains("b")) core.b = IntFrom(j["b"], "$.b");
    Wrap("$", [&] { ValidateInstance(core); });
    return core;
  }
  AllocationInstance inst;
  if (type == "santa") {
    inst.type = InstanceType::kSanta;
  } else if (type == "makespan") {
    inst.type = InstanceType::kMakespan;
  } else if (type == "santa-matroid") {
    inst.type = InstanceType::kSantaMatroid;
  } else if (type == "makespan-matroid") {
    inst.type = InstanceType::kMakespanMatroid;
  } else {
    throw ParseError("$.type", "unknown instance type '" + type + "'");
  }
  const char* entity_key = inst.is_santa() ? "players" : "machines";
  inst.entities = static_cast<int>(
      NonNegInt(Field(j, entity_key, root), std::string("$.") + entity_key));
  const Json& items = ArrayFrom(Field(j, "items", root), "$.items");
  for (std::size_t k = 0; k < items.size(); ++k) {
    std::string at = Index("$.items", k);
    Item item;
    if (inst.is_matroid()) {
      item.value = RationalFromJson(Field(items[k], "value", at), at + ".value");
      if (item.value < 0) throw ParseError(at + ".value", "negative value");
      item.polymatroid =
          PolymatroidFromJson(Field(items[k], "polymatroid", at), at + ".polymatroid");
      if (item.polymatroid->size() != inst.entities) {
        throw ParseError(at + ".polymatroid", "ground size mismatch");
      }
    } else {
      const Json& values =
          ArrayFrom(Field(items[k], "values", at), at + ".values");
      if (static_cast<int>(values.size()) != inst.entities) {
        throw ParseError(at + ".values", "expected one entry per entity");
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        std::string vat = Index(at + ".values", i);
        ExtRational v = ExtRationalFromJson(values[i], vat);
        if (v.has_value() && *v < 0) throw ParseError(vat, "negative value");
        if (!v.has_value() && inst.is_santa()) {
          throw ParseError(vat, "Santa values must be finite");
        }
        item.values.push_back(v);
      }
    }
    inst.items.push_back(std::move(item));
  }
  Wrap("$", [&] { ValidateInstance(inst); });
  return inst;
}

Instance ParseInstance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  return InstanceFromJson(j);
}

std::string SerializeInstance(const Instance& inst) {
  return InstanceToJson(inst).dump(2) + "\n";
}

Json AllocationToJson(const Allocation& alloc) {
  return Json{{"x", alloc.x}};
}

Allocation AllocationFromJson(const Json& j, const std::string& path) {
  Allocation alloc;
  const Json& arr = ArrayFrom(Field(j, "x", path), path + ".x");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    alloc.x.push_back(IntVectorFrom(arr[i], Index(path + ".x", i)));
  }
  return alloc;
}

Json FractionalToJson(const FractionalMatrix& x) {
  Json rows = Json::array();
  for (const auto& row : x) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(RationalToJson(v));
    rows.push_back(r);
  }
  return Json{{"x", rows}};
}

FractionalMatrix FractionalFromJson(const Json& j, const std::string& path) {
  FractionalMatrix x;
  const Json& rows = ArrayFrom(Field(j, "x", path), path + ".x");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string at = Index(path + ".x", k);
    const Json& row = ArrayFrom(rows[k], at);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < row.size(); ++i) {
      values.push_back(RationalFromJson(row[i], Index(at, i)));
    }
    x.push_back(std::move(values));
  }
  return x;
}

}  // namespace matalloc
