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

// matalloc: command-line front end for the allocation toolkit.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/generators.h"
#include "matalloc/instance_json.h"
#include "matalloc/localsearch.h"
#include "matalloc/oracle.h"
#include "matalloc/reductions.h"
#include "matalloc/rounding.h"

namespace matalloc {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;  // infeasible / failed, certificate emitted

struct RunConfig {
  std::string subcommand;
  std::string in;
  std::string out;
  std::string x_path;
  std::string alloc_path;
  std::string kind;
  std::string flavor = "gap";
  std::string format = "json";
  std::string eps_text = "1/10";
  std::string alpha_text;
  std::string guess_text;
  std::optional<std::int64_t> b;
  std::uint64_t seed = 1;
  std::optional<int> cap_ground;
  std::optional<std::int64_t> cap_enum;
  int m = 3;
  int items = 6;
  Rational eps;
  std::optional<Rational> alpha;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance ReadInstance(const std::string& path) {
  if (path.empty()) throw ContractError("--in is required");
  try {
    return ParseInstance(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

Json ReadJson(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::exception& e) {
    throw ParseError(path, e.what());
  }
}

std::string Scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num") && v.contains("den") && v.size() == 2) {
    return ToString(MakeRational(v["num"].get<std::int64_t>(), v["den"].get<std::int64_t>()));
  }
  return v.dump();
}

void Emit(const RunConfig& cfg, const Json& doc) {
  std::ostringstream text;
  if (cfg.format == "tsv") {
    if (doc.contains("rows")) {
      const Json& cols = doc["columns"];
      for (std::size_t c = 0; c < cols.size(); ++c) text << (c ? "\t" : "") << cols[c].get<std::string>();
      text << "\n";
      for (const Json& row : doc["rows"]) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          text << (c ? "\t" : "") << Scalar(row[cols[c].get<std::string>()]);
        }
        text << "\n";
      }
      if (doc.contains("summary")) {
        for (const auto& [k, v] : doc["summary"].items()) text << "# " << k << "\t" << Scalar(v) << "\n";
      }
    } else {
      for (const auto& [k, v] : doc.items()) text << k << "\t" << Scalar(v) << "\n";
    }
  } else {
    text << doc.dump(2) << "\n";
  }
  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw ContractError("cannot write " + cfg.out);
    out << text.str();
  }
}

Json Header(const RunConfig& cfg) {
  return Json{{"command", cfg.subcommand}, {"seed", cfg.seed}, {"eps", ToString(cfg.eps)}};
}

SearchOptions Search(const RunConfig& cfg) {
  SearchOptions o;
  o.eps = cfg.eps;
  return o;
}

Rational Alpha(const RunConfig& cfg) {
  return cfg.alpha ? *cfg.alpha : SoundnessAlpha(cfg.eps);
}

// ---- solve-cover ----

Json CoverJson(const RunConfig& cfg, const CoreCoverInstance& inst, const CoverResult& r) {
  Json doc = Header(cfg);
  doc["b"] = inst.b;
  doc["status"] = r.success ? "cover" : "infeasible";
  doc["restarts"] = r.restarts;
  doc["recursion_nodes"] = r.recursion_nodes;
  doc["max_call_nodes"] = r.max_call_nodes;
  doc["node_bound_exponent"] = RecursionDepthExponent(inst.size(), cfg.eps);
  doc["oracle_queries"] = r.oracle_queries;
  if (r.success) {
    doc["matroid_side"] = SubsetToJson(r.im);
    doc["polymatroid_vector"] = IntVectorToJson(r.y);
  }
  Json failures = Json::array();
  for (const CoverFailure& f : r.failures) {
    CertificateReport rep = VerifyCertificate(f.certificate, f.state, cfg.eps);
    failures.push_back({{"element", f.element},
                        {"z1", SubsetToJson(f.certificate.z1)},
                        {"z2", SubsetToJson(f.certificate.z2)},
                        {"valid", rep.ok()},
                        {"checks", rep.Describe()}});
  }
  doc["failures"] = failures;
  if (!r.diagnostic.empty()) doc["diagnostic"] = r.diagnostic;
  return doc;
}

int SolveCoverCommand(const RunConfig& cfg, CoreCoverInstance inst) {
  if (cfg.b) inst.b = *cfg.b;
  ValidateInstance(inst);
  CoverResult r = SolveCover(inst, Search(cfg));
  Emit(cfg, CoverJson(cfg, inst, r));
  return r.success ? kExitOk : kExitNegative;
}

// ---- solve ----

struct Solved {
  std::string method;
  Allocation allocation;
  std::optional<Rational> guess;
  std::string detail;
};

Solved SolveAllocation(const RunConfig& cfg, const AllocationInstance& inst) {
  Solved s;
  switch (inst.type) {
    case InstanceType::kSanta: {
      std::optional<LpOptimum> lp = OptimizeAssignmentLp(inst);
      if (!lp) throw GuessRejected("assignment LP infeasible");
      s.method = "assignment-lp+rounding";
      s.allocation = RoundSanta(inst, lp->x);
      s.guess = lp->t;
      auto restricted = RestrictedSantaAsMatroid(inst);
      if (!restricted || inst.entities == 0) return s;
      // Restricted instances also run the matroid pipeline; keep the better.
      Solved via;
      try {
        via = SolveAllocation(cfg, restricted->matroid);
      } catch (const CapExceeded&) {
        return s;
      }
      Allocation back = ClassicalFromRestricted(inst, *restricted, via.allocation);
      if (SantaObjective(inst, back) > SantaObjective(inst, s.allocation)) {
        s.method = via.method;
        s.allocation = std::move(back);
        s.guess = via.guess;
      }
      return s;
    }
    case InstanceType::kMakespanMatroid: {
      std::optional<LpOptimum> lp = OptimizeAssignmentLp(inst);
      if (!lp) throw GuessRejected("assignment LP infeasible");
      s.method = "assignment-lp+rounding";
      s.allocation = inst.is_santa() ? RoundSanta(inst, lp->x) : RoundMakespan(inst, lp->x);
      s.guess = lp->t;
      return s;
    }
    case InstanceType::kMakespan: {
      LstResult r = LstBaseline(inst);
      s.method = "lst-baseline";
      s.allocation = r.allocation;
      s.guess = r.lp_threshold;
      return s;
    }
    case InstanceType::kSantaMatroid: {
      CoreOptions o;
      o.alpha = Alpha(cfg);
      o.search = Search(cfg);
      std::function<std::optional<CoreReduction>(const Rational&)> solver =
          [&](const Rational& t) -> std::optional<CoreReduction> {
        return ReduceToCore(inst, t, o);
      };
      auto out = GuessLoop<CoreReduction>(GuessGrid(inst), solver);
      if (!out.solution) throw GuessRejected(out.diagnostic);
      s.method = "guess-loop+core-" + CoreCaseName(out.solution->kind);
      s.allocation = out.solution->allocation;
      s.guess = out.guess;
      return s;
    }
    default:
      break;
  }
  throw ContractError("solve: unsupported instance type");
}

ExtRational Objective(const AllocationInstance& inst, const Allocation& a) {
  return inst.is_santa() ? ExtRational(SantaObjective(inst, a)) : MakespanObjective(inst, a);
}

int SolveCommand(const RunConfig& cfg) {
  Instance any = ReadInstance(cfg.in);
  if (auto* core = std::get_if<CoreCoverInstance>(&any)) return SolveCoverCommand(cfg, *core);
  const auto& inst = std::get<AllocationInstance>(any);
  ValidateInstance(inst);
  Json doc = Header(cfg);
  doc["type"] = InstanceTypeName(inst.type);
  try {
    Solved s = SolveAllocation(cfg, inst);
    doc["status"] = "ok";
    doc["method"] = s.method;
    if (s.guess) doc["threshold"] = RationalToJson(*s.guess);
    doc["objective"] = ExtRationalToJson(Objective(inst, s.allocation));
    doc["allocation"] = AllocationToJson(s.allocation);
    Emit(cfg, doc);
    return kExitOk;
  } catch (const GuessRejected& e) {
    doc["status"] = "infeasible";
    doc["reason"] = e.what();
    Emit(cfg, doc);
    return kExitNegative;
  }
}

// ---- reduce ----

Json ConfigsJson(const ConfigCollection& configs) {
  Json out = Json::array();
  for (const auto& list : configs) {
    Json player = Json::array();
    for (const Configuration& c : list) {
      Json counts = Json::array();
      for (const auto& [v, cnt] : c.counts) counts.push_back({RationalToJson(v), cnt});
      player.push_back(counts);
    }
    out.push_back(player);
  }
  return out;
}

int ReduceCommand(const RunConfig& cfg) {
  Instance any = ReadInstance(cfg.in);
  Json doc = Header(cfg);
  doc["kind"] = cfg.kind;
  auto alloc_inst = [&]() -> const AllocationInstance& {
    auto* p = std::get_if<AllocationInstance>(&any);
    if (!p) throw ContractError("reduce: expected an allocation instance");
    return *p;
  };
  if (cfg.kind == "config") {
    ConfigRoundResult r = ConfigRound(alloc_inst(), cfg.eps);
    doc["instance"] = InstanceToJson(r.rounded);
    doc["configs"] = ConfigsJson(r.configs);
  } else if (cfg.kind == "santa-to-makespan") {
    ConfigRoundResult r = ConfigRound(alloc_inst(), cfg.eps);
    SantaMakespanBundle g = SantaToMakespan(r.rounded, r.configs);
    doc["instance"] = InstanceToJson(g.makespan);
    Json machines = Json::array(), jobs = Json::array();
    for (auto [i, c] : g.config_machine) machines.push_back({i, c});
    for (const auto& job : g.config_jobs) jobs.push_back({job.player, job.config, RationalToJson(job.value)});
    doc["bundle"] = {{"santa", InstanceToJson(g.santa)},
                     {"configs", ConfigsJson(g.configs)},
                     {"config_machines", machines},
                     {"resource_machine_offset", g.resource_machine_offset},
                     {"config_jobs", jobs}};
  } else if (cfg.kind == "twovalue-makespan-to-santa") {
    TwoValueMakespanBundle g = TwoValueMakespanToSanta(alloc_inst());
    doc["instance"] = InstanceToJson(g.santa);
    doc["bundle"] = {{"u", RationalToJson(g.u)}, {"w", RationalToJson(g.w)},
                     {"t", RationalToJson(g.t)}, {"k", g.k},
                     {"machines", g.machines}, {"jobs", g.jobs}};
  } else if (cfg.kind == "matroid-makespan-to-santa" || cfg.kind == "matroid-santa-to-makespan") {
    MatroidDualBundle g = cfg.kind == "matroid-makespan-to-santa"
                              ? MatroidMakespanToSanta(alloc_inst())
                              : MatroidSantaToMakespan(alloc_inst());
    doc["instance"] = InstanceToJson(g.target);
    doc["bundle"] = {{"k", IntVectorToJson(g.k)}, {"t", RationalToJson(g.t)}};
  } else if (cfg.kind == "core") {
    if (cfg.guess_text.empty()) throw ContractError("reduce --kind core needs --guess");
    CoreOptions o;
    o.alpha = Alpha(cfg);
    o.search = Search(cfg);
    try {
      CoreReduction r = ReduceToCore(alloc_inst(), ParseRational(cfg.guess_text), o);
      doc["status"] = "ok";
      doc["case"] = CoreCaseName(r.kind);
      if (r.core) doc["core"] = InstanceToJson(*r.core);
      doc["allocation"] = AllocationToJson(r.allocation);
      doc["value"] = RationalToJson(r.value);
      doc["promised"] = RationalToJson(r.promised);
    } catch (const GuessRejected& e) {
      doc["status"] = "rejected";
      doc["reason"] = e.what();
      Emit(cfg, doc);
      return kExitNegative;
    }
  } else {
    throw ContractError("reduce: unknown --kind '" + cfg.kind + "'");
  }
  Emit(cfg, doc);
  return kExitOk;
}

// ---- round ----

int RoundCommand(const RunConfig& cfg) {
  Instance any = ReadInstance(cfg.in);
  auto* inst = std::get_if<AllocationInstance>(&any);
  if (!inst) throw ContractError("round: expected an allocation instance");
  if (cfg.x_path.empty()) throw ContractError("round needs --x");
  Json xj = ReadJson(cfg.x_path);
  if (xj.is_array()) xj = Json{{"x", xj}};
  FractionalAssignment x = FractionalFromJson(xj, cfg.x_path);
  Allocation a = inst->is_santa() ? RoundSanta(*inst, x) : RoundMakespan(*inst, x);
  Json doc = Header(cfg);
  doc["fractional_objective"] = Json::array();
  for (const Rational& l : FractionalLoads(*inst, x)) doc["fractional_objective"].push_back(RationalToJson(l));
  doc["objective"] = ExtRationalToJson(Objective(*inst, a));
  doc["allocation"] = AllocationToJson(a);
  Emit(cfg, doc);
  return kExitOk;
}

// ---- verify ----

int VerifyCommand(const RunConfig& cfg) {
  Instance any = ReadInstance(cfg.in);
  Json doc = Header(cfg);
  std::vector<std::string> violations;
  auto absorb = [&](const AxiomReport& r, const std::string& where) {
    for (const auto& v : r.violations) violations.push_back(where + ": " + v);
  };
  if (auto* core = std::get_if<CoreCoverInstance>(&any)) {
    ValidateInstance(*core);
    doc["type"] = "core-cover";
    if (core->size() <= 12) absorb(CheckMatroidAxioms(*core->matroid), "matroid");
    absorb(CheckPolymatroidAxioms(*core->polymatroid, 32, cfg.seed), "polymatroid");
  } else {
    const auto& inst = std::get<AllocationInstance>(any);
    ValidateInstance(inst);
    doc["type"] = InstanceTypeName(inst.type);
    for (int j = 0; j < inst.num_items(); ++j) {
      absorb(CheckPolymatroidAxioms(*inst.ItemPolymatroid(j), 32, cfg.seed),
             "item " + std::to_string(j));
    }
    if (!cfg.alloc_path.empty()) {
      Allocation a = AllocationFromJson(ReadJson(cfg.alloc_path), cfg.alloc_path);
      std::string err = CheckAllocation(inst, a);
      doc["allocation"] = err.empty() ? "valid" : "invalid";
      if (!err.empty()) violations.push_back("allocation: " + err);
      else doc["objective"] = ExtRationalToJson(Objective(inst, a));
    }
  }
  doc["axioms"] = violations.empty() ? "pass" : "fail";
  doc["violations"] = violations;
  Emit(cfg, doc);
  return violations.empty() ? kExitOk : kExitNegative;
}

// ---- gen ----

int GenCommand(const RunConfig& cfg) {
  GenParams p;
  p.entities = cfg.m;
  p.items = cfg.items;
  if (cfg.b) p.b = *cfg.b;
  Instance inst = cfg.flavor == "gap" ? Instance(GenGapInstance(cfg.m, p.b))
                                      : GenRandom(cfg.flavor, cfg.seed, p);
  std::string text = SerializeInstance(inst);
  if (cfg.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw ContractError("cannot write " + cfg.out);
    out << text << "\n";
  }
  std::cerr << "gen: flavor=" << cfg.flavor << " seed=" << cfg.seed << "\n";
  return kExitOk;
}

// ---- bench ----

Json BenchRow(const RunConfig& cfg, const std::filesystem::path& file) {
  Json row = {{"file", file.filename().string()}, {"type", ""}, {"opt", ""},
              {"value", ""}, {"ratio", ""}, {"nodes", ""}, {"node_bound", ""},
              {"queries", ""}, {"within_alpha", ""}, {"status", "ok"}};
  Instance any = ReadInstance(file.string());
  const Rational alpha = Alpha(cfg);
  if (auto* core = std::get_if<CoreCoverInstance>(&any)) {
    ValidateInstance(*core);
    row["type"] = "core-cover";
    std::optional<std::int64_t> opt = BruteMaxCoverB(*core->matroid, *core->polymatroid);
    const std::int64_t hi = opt ? std::max<std::int64_t>(*opt, 1) : 1;
    std::uint64_t nodes = 0, queries = 0;
    std::function<std::optional<CoverResult>(const Rational&)> solver =
        [&](const Rational& t) -> std::optional<CoverResult> {
      CoreCoverInstance at = *core;
      at.b = FloorToInt64(t);
      CoverResult r = SolveCover(at, Search(cfg));
      nodes = std::max(nodes, r.max_call_nodes);
      queries += r.oracle_queries;
      if (!r.success) return std::nullopt;
      return r;
    };
    auto out = GuessLoop<CoverResult>(IntegerGrid(1, hi), solver);
    const Rational value = out.guess ? *out.guess : Rational(0);
    row["opt"] = opt ? std::to_string(*opt) : std::string("unbounded");
    row["value"] = ToString(value);
    Rational ratio = !opt ? Rational(1) : value > 0 ? Rational(*opt) / value
                                        : (*opt == 0 ? Rational(1) : Rational(-1));
    row["ratio"] = ratio < 0 ? std::string("inf") : ToString(ratio);
    row["nodes"] = nodes;
    row["node_bound"] = "2^" + std::to_string(RecursionDepthExponent(core->size(), cfg.eps));
    row["queries"] = queries;
    row["within_alpha"] = ratio >= 0 && ratio <= alpha && WithinNodeBound(nodes, core->size(), cfg.eps);
    row["ratio_value"] = ratio < 0 ? Json(nullptr) : RationalToJson(ratio);
    return row;
  }
  const auto& inst = std::get<AllocationInstance>(any);
  ValidateInstance(inst);
  row["type"] = InstanceTypeName(inst.type);
  OptReport brute = inst.is_santa() ? BruteOptSanta(inst) : BruteOptMakespan(inst);
  Solved s = SolveAllocation(cfg, inst);
  ExtRational value = Objective(inst, s.allocation);
  row["opt"] = ToString(brute.value);
  row["value"] = ToString(value);
  std::optional<Rational> ratio;
  if (inst.is_santa()) {
    if (*value > 0) ratio = brute.value / *value;
    else if (brute.value == 0) ratio = Rational(1);
  } else if (value) {
    ratio = brute.value > 0 ? *value / brute.value : Rational(1);
  }
  const Rational bound = inst.is_santa() ? alpha : Rational(2);
  row["ratio"] = ratio ? ToString(*ratio) : std::string("inf");
  row["ratio_value"] = ratio ? RationalToJson(*ratio) : Json(nullptr);
  row["nodes"] = brute.search_nodes;
  row["queries"] = 0;
  row["within_alpha"] = ratio && *ratio <= bound;
  row["method"] = s.method;
  return row;
}

int BenchCommand(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  if (cfg.in.empty() || !fs::is_directory(cfg.in)) {
    throw ContractError("bench: --in must be a corpus directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cfg.in)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Json doc = Header(cfg);
  doc["columns"] = {"file", "type", "opt", "value", "ratio", "nodes", "node_bound",
                    "queries", "within_alpha", "status"};
  doc["rows"] = Json::array();
  std::optional<Rational> worst;
  bool unbounded = false;
  bool errors = false;
  int skipped = 0;
  for (const fs::path& f : files) {
    Json row;
    try {
      row = BenchRow(cfg, f);
      if (!row["ratio_value"].is_null()) {
        Rational r = RationalFromJson(row["ratio_value"], "ratio");
        if (!worst || r > *worst) worst = r;
      } else if (row["ratio"] == "inf") {
        unbounded = true;
      }
    } catch (const CapExceeded& e) {
      row = {{"file", f.filename().string()}, {"type", ""}, {"opt", ""}, {"value", ""},
             {"ratio", ""}, {"nodes", ""}, {"node_bound", ""}, {"queries", ""},
             {"within_alpha", ""}, {"status", "skipped (cap)"}};
      ++skipped;
    } catch (const std::exception& e) {
      row = {{"file", f.filename().string()}, {"type", ""}, {"opt", ""}, {"value", ""},
             {"ratio", ""}, {"nodes", ""}, {"node_bound", ""}, {"queries", ""},
             {"within_alpha", ""}, {"status", std::string("error: ") + e.what()}};
      errors = true;
    }
    row.erase("ratio_value");
    doc["rows"].push_back(row);
  }
  doc["summary"] = {{"instances", files.size()},
                    {"skipped", skipped},
                    {"worst_ratio", unbounded ? std::string("inf")
                                   : worst    ? ToString(*worst)
                                              : std::string("-")},
                    {"alpha", ToString(Alpha(cfg))}};
  Emit(cfg, doc);
  return errors ? kExitError : kExitOk;
}

void ApplyCaps(const RunConfig& cfg) {
  Caps caps;
  if (const char* env = std::getenv("MATROID_ALLOC_CAPS")) caps = ParseCapsOverride(env, caps);
  if (cfg.cap_ground) caps.sfm_ground = *cfg.cap_ground;
  if (cfg.cap_enum) {
    caps.classical_enum = *cfg.cap_enum;
    caps.matroid_enum = *cfg.cap_enum;
  }
  if (caps.sfm_ground > 62 || caps.sfm_ground <= 0) throw ContractError("--cap-ground must be in [1, 62]");
  SetCaps(caps);
}

int Dispatch(RunConfig& cfg) {
  cfg.eps = ParseRational(cfg.eps_text);
  if (cfg.eps <= 0 || cfg.eps > MakeRational(1, 8)) throw ContractError("--eps must lie in (0, 1/8]");
  if (!cfg.alpha_text.empty()) cfg.alpha = ParseRational(cfg.alpha_text);
  if (cfg.format != "json" && cfg.format != "tsv") throw ContractError("--format must be json or tsv");
  ApplyCaps(cfg);
  if (cfg.subcommand == "solve-cover") {
    Instance any = ReadInstance(cfg.in);
    auto* core = std::get_if<CoreCoverInstance>(&any);
    if (!core) throw ContractError("solve-cover: expected a core-cover instance");
    return SolveCoverCommand(cfg, *core);
  }
  if (cfg.subcommand == "solve") return SolveCommand(cfg);
  if (cfg.subcommand == "reduce") return ReduceCommand(cfg);
  if (cfg.subcommand == "round") return RoundCommand(cfg);
  if (cfg.subcommand == "verify") return VerifyCommand(cfg);
  if (cfg.subcommand == "gen") return GenCommand(cfg);
  if (cfg.subcommand == "bench") return BenchCommand(cfg);
  throw ContractError("no subcommand given; see --help");
}

}  // namespace
}  // namespace matalloc

int main(int argc, char** argv) {
  using matalloc::RunConfig;
  RunConfig cfg;
  CLI::App app{"Matroid-constrained allocation toolkit"};
  app.require_subcommand(1);

  const std::string footer =
      "Environment: MATROID_ALLOC_CAPS=key=value,... overrides caps (keys: ground, "
      "expansion, enum, matroid-enum, lp, configs, grid); --cap-* flags override it.\n"
      "Exit codes: 0 success, 2 infeasible/failed with certificate, 1 error.";
  auto common = [&](CLI::App* sub, bool needs_in) {
    sub->footer(footer);
    auto* in = sub->add_option("--in", cfg.in, "input instance (directory for bench)");
    if (needs_in) in->required()->check(CLI::ExistingPath);
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
    sub->add_option("--eps", cfg.eps_text, "local-search precision in (0, 1/8]")->capture_default_str();
    sub->add_option("--alpha", cfg.alpha_text, "approximation factor (default 4 + 40 eps)");
    sub->add_option("--b", cfg.b, "cover multiplicity b");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--cap-ground", cfg.cap_ground, "subset-enumeration ground cap");
    sub->add_option("--cap-enum", cfg.cap_enum, "brute-force enumeration cap");
    sub->add_option("--format", cfg.format, "json or tsv")->capture_default_str();
  };
  auto* solve_cover = app.add_subcommand("solve-cover", "solve a core cover instance at --b");
  common(solve_cover, true);
  auto* solve = app.add_subcommand("solve", "solve any instance (core cover, Santa, Makespan)");
  common(solve, true);
  auto* reduce = app.add_subcommand("reduce", "build a reduced instance");
  common(reduce, true);
  reduce->add_option("--kind", cfg.kind,
                     "config | santa-to-makespan | twovalue-makespan-to-santa | "
                     "matroid-makespan-to-santa | matroid-santa-to-makespan | core")
      ->required();
  reduce->add_option("--guess", cfg.guess_text, "objective guess for --kind core");
  auto* round = app.add_subcommand("round", "round a fractional assignment");
  common(round, true);
  round->add_option("--x", cfg.x_path, "fractional assignment JSON")->required()->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "check instance axioms and optionally an allocation");
  common(verify, true);
  verify->add_option("--alloc", cfg.alloc_path, "allocation JSON")->check(CLI::ExistingFile);
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  common(gen, false);
  gen->add_option("--flavor", cfg.flavor, "generator flavor")->capture_default_str();
  gen->add_option("--m", cfg.m, "entities (players, machines or ground size)")->capture_default_str();
  gen->add_option("--items", cfg.items, "items (resources or jobs)")->capture_default_str();
  auto* bench = app.add_subcommand("bench", "run a corpus directory against brute force");
  common(bench, true);
  app.footer(footer);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : matalloc::kExitError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    return matalloc::Dispatch(cfg);
  } catch (const std::exception& e) {
    std::cerr << "matalloc: " << e.what() << "\n";
    return matalloc::kExitError;
  }
}
