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


#include "matalloc/localsearch.h"

#include <cmath>
#include <utility>

#include "matalloc/caps.h"
#include "matalloc/errors.h"
#include "matalloc/oracle.h"
#include "matalloc/oracle_base.h"
#include "matalloc/polyops.h"

namespace matalloc {
namespace {

Rational Size(Subset s) { return Rational(Popcount(s)); }

void Require(bool condition, const std::string& what) {
  if (!condition) throw InternalError("invariant breached: " + what);
}

class Searcher {
 public:
  explicit Searcher(const SearchOptions& options) : options_(options) {}

  AugmentResult Run(const SearchState& state) {
    ++nodes_;
    AugmentResult out = Step(state);
    out.nodes = nodes_;
    return out;
  }

 private:
  const Rational& eps() const { return options_.eps; }

  void CheckFeasible(const SearchState& s, Subset ai, const char* where) {
    if (!options_.check_invariants) return;
    std::string at = std::string(" (") + where + ")";
    Require((s.im & s.ip) == 0 && (s.im & s.b0) == 0 && (s.ip & s.b0) == 0,
            "disjoint I_M, I_P, B0" + at);
    Require(s.matroid->IsIndependent(s.im), "I_M independent" + at);
    Require(Member(*s.polymatroid,
                   ScaledIndicator(s.size(), s.b, s.ip | ai)),
            "b·(I_P ∪ A_I) in P" + at);
  }

  void CheckAddable(const SearchState& s, const AddableSets& add) {
    if (!options_.check_invariants) return;
    const Polymatroid& f = *s.polymatroid;
    Require(Member(f, ScaledIndicator(s.size(), 2 * s.b, add.a)), "2b·A in P");
    for (int i : Elements(add.c & ~add.a & ~s.b0)) {
      Require(CappedMarginal(f, Bit(i), 2 * s.b, add.a) < 2 * s.b,
              "A maximal within C");
    }
    Subset core = add.c & ~s.b0;
    Require(Rational(RankMarginal(*s.matroid, s.b0, core)) <=
                2 * eps() * Size(s.b0),
            "r(B0 | C) <= 2 eps |B0|");
  }

  // Weak addable property: r(B0 | I_M \ R) ≥ ε²|B0| − |B0 ∩ I_M| for every
  // R ⊆ A with |R| ≥ ε|A|.
  void CheckWeakAddable(const SearchState& s, Subset a) {
    if (!options_.check_invariants || a == 0 || Popcount(a) > 12) return;
    Rational need = eps() * eps() * Size(s.b0) - Size(s.b0 & s.im);
    ForEachSubsetOf(a, [&](Subset r) {
      if (Size(r) < eps() * Size(a)) return;
      Require(Rational(RankMarginal(*s.matroid, s.b0, s.im & ~r)) >= need,
              "weak addable property");
    });
  }

  void CheckMarginsOfAB(const SearchState& s, Subset a, Subset blocking,
                        Subset ai) {
    if (!options_.check_invariants) return;
    Subset ab = a | blocking;
    for (int i : Elements(ab & ~ai)) {
      Require(CappedMarginal(*s.polymatroid, Bit(i), s.b, ab & ~Bit(i)) < s.b,
              "f(i | b·(A ∪ B − i)) < b");
    }
  }

  void CheckBlockingSize(Subset a, Subset blocking, Subset ai) {
    if (!options_.check_invariants || a == 0) return;
    if (Size(ai) >= eps() * Size(a)) return;
    Require(Size(blocking) > (1 - 2 * eps()) * Size(a), "|B| > (1 - 2eps)|A|");
  }

  AugmentResult Succeed(const SearchState& s, Subset im, Subset ip) {
    im = MatroidAddGreedy(*s.matroid, im, s.order);
    if (options_.check_invariants) {
      Require(Size(im & s.b0) >= eps() * eps() * Size(s.b0),
              "success covers eps^2 |B0|");
      Require(IsSubsetOf(s.im | s.ip, im | ip), "success keeps coverage");
      SearchState done = s;
      done.im = im;
      done.ip = ip;
      done.b0 = s.b0 & ~im;
      CheckFeasible(done, 0, "success");
    }
    AugmentResult out;
    out.success = true;
    out.im = im;
    out.ip = ip;
    return out;
  }

  static AugmentResult Fail(Subset z1, Subset z2) {
    AugmentResult out;
    out.certificate = {z1, z2};
    return out;
  }

  AugmentResult Step(const SearchState& input) {
    SearchState s = input;
    const Polymatroid& f = *s.polymatroid;
    const Matroid& r = *s.matroid;
    const std::int64_t b = s.b;
    const Rational b0_size = Size(s.b0);
    CheckFeasible(s, 0, "entry");

    if (Rational(RankMarginal(r, s.b0, s.im)) >= eps() * eps() * b0_size) {
      return Succeed(s, s.im, s.ip);
    }

    AddableSets add = BuildAddable(s, eps());
    const Subset a = add.a;
    const Subset c = add.c;
    const Subset c_core = c & ~s.b0;
    CheckAddable(s, add);
    CheckWeakAddable(s, a);

    Subset ai = 0;
    Subset blocking = ComputeBlocking(s, a);
    int rounds = 0;
    const int max_rounds = 4 * (s.size() + 1) * (s.size() + 1);
    while (true) {
      if (++rounds > max_rounds) throw InternalError("augment loop does not progress");
      // (1) grow the immediately addable set.
      bool grew = false;
      for (int i : Elements(a & ~ai)) {
        if (CappedMarginal(f, Bit(i), b, s.ip | ai) >= b) {
          ai |= Bit(i);
          grew = true;
          break;
        }
      }
      if (grew) {
        CheckFeasible(s, ai, "after op 1");
        continue;
      }
      // (2) commit once enough of A is addable; an empty A never qualifies.
      if (a != 0 && Size(ai) >= eps() * Size(a)) {
        CheckWeakAddable(s, a);
        return Succeed(s, s.im & ~ai, s.ip | ai);
      }
      // Operations (1) and (2) are exhausted; blocking-set bounds apply.
      CheckBlockingSize(a, blocking, ai);
      CheckMarginsOfAB(s, a, blocking, ai);
      // (3) too few blocking elements: certificate.
      if (Size(blocking) < eps() * b0_size) {
        return Fail((c | blocking) & ~s.b0, a | blocking);
      }
      // (4) recurse on the blocking elements.
      SearchState child = RecurseInput(s, a, c, blocking);
      if (options_.check_invariants) CheckFeasible(child, 0, "child input");
      AugmentResult sub = Run(child);
      if (!sub.success) {
        return Fail((sub.certificate.z1 | c | blocking) & ~s.b0,
                    sub.certificate.z2 | a | blocking);
      }
      s.im = c_core | sub.im;
      s.ip = (blocking & ~sub.im) | sub.ip;
      CheckFeasible(s, ai, "after recursion");
      if (Size(s.b0 & sub.im) >= eps() * eps() * b0_size) {
        return Succeed(s, s.im, s.ip);
      }
      Subset updated = ComputeBlocking(s, a);
      if (options_.check_invariants) {
        Require(IsSubsetOf(updated, blocking), "B' ⊆ B after recursion");
        Require(Size(updated) <= (1 - eps() * eps()) * Size(blocking),
                "|B'| <= (1 - eps^2)|B|");
      }
      blocking = updated;
      CheckWeakAddable(s, a);
    }
  }

  const SearchOptions& options_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AddableSets BuildAddable(const SearchState& state, const Rational& eps) {
  const Matroid& r = *state.matroid;
  const Polymatroid& f = *state.polymatroid;
  const std::int64_t h = 2 * state.b;
  AddableSets out;
  Subset all = 0;
  while (true) {
    Subset layer = 0;
    bool added = true;
    while (added) {
      added = false;
      for (int i : Elements(state.im & ~all & ~layer)) {
        Subset rest = (state.b0 | state.im) & ~layer & ~Bit(i);
        if (RankMarginal(r, Bit(i), rest) != 0) continue;
        if (CappedMarginal(f, Bit(i), h, all | layer) < h) continue;
        layer |= Bit(i);
        added = true;
        break;  // rescan: the rank condition depends on the layer
      }
    }
    if (Size(layer) < eps * Size(state.b0) || layer == 0) break;
    all |= layer;
    out.layers.push_back(layer);
  }
  out.a = all;
  out.c = state.b0 | all;
  for (int i : Elements(state.im & ~all)) {
    if (CappedMarginal(f, Bit(i), h, all) < h) out.c |= Bit(i);
  }
  return out;
}

Subset ComputeBlocking(const SearchState& state, Subset a) {
  Subset out = 0;
  for (int i : Elements(state.ip)) {
    Subset rest = (state.ip | a) & ~Bit(i);
    if (CappedMarginal(*state.polymatroid, Bit(i), state.b, rest) < state.b) {
      out |= Bit(i);
    }
  }
  return out;
}

SearchState RecurseInput(const SearchState& state, Subset a, Subset c,
                         Subset blocking) {
  const Subset c_core = c & ~state.b0;
  SearchState child;
  child.matroid = MakeContracted(state.matroid, c_core);
  child.polymatroid = MakeContractedPolymatroid(
      state.polymatroid, ScaledIndicator(state.size(), state.b, a | blocking));
  child.b = state.b;
  child.im = state.im & ~c_core;
  child.ip = state.ip & ~blocking;
  child.b0 = state.b0 | blocking;
  child.order = state.order;
  for (int i : Elements(blocking)) child.order.push_back(i);
  return child;
}

AugmentResult Augment(const SearchState& state, const SearchOptions& options) {
  if (state.b < 1) throw ContractError("augment: b must be at least 1");
  if (state.b0 == 0) throw ContractError("augment: B0 is empty");
  Searcher searcher(options);
  return searcher.Run(state);
}

std::string CertificateReport::Describe() const {
  auto mark = [](bool v) { return v ? "ok" : "FAIL"; };
  return std::string("shape=") + mark(shape) + " p1=" + mark(p1) +
         " p2=" + mark(p2) + " p3=" + mark(p3) + " p4=" + mark(p4);
}

CertificateReport VerifyCertificate(const Certificate& cert,
                                    const SearchState& state,
                                    const Rational& eps) {
  const Matroid& r = *state.matroid;
  const Polymatroid& f = *state.polymatroid;
  const std::int64_t b = state.b;
  const Subset z1 = cert.z1;
  const Subset z2 = cert.z2;
  const Rational b0 = Size(state.b0);
  CertificateReport rep;
  rep.shape = IsSubsetOf(z2, z1) && IsSubsetOf(z1, state.Ground() & ~state.b0);
  rep.p1 = Rational(RankMarginal(r, state.b0, z1)) < 2 * eps * b0;
  rep.p2 = Rational(r.Rank(z1)) <=
           Size(z1) - (MakeRational(1, 2) - 2 * eps) * Size(z2) + eps * b0;
  int small = 0;
  for (int i : Elements(z2)) {
    if (CappedMarginal(f, Bit(i), b, z2 & ~Bit(i)) < b) ++small;
  }
  rep.p3 = Rational(small) >= (1 - eps) * Size(z2);
  rep.p4 = true;
  for (int i : Elements(z1 & ~z2)) {
    if (CappedMarginal(f, Bit(i), 2 * b, z2) >= 2 * b) rep.p4 = false;
  }
  return rep;
}

std::optional<std::int64_t> CertificateExcludedMultiple(const Certificate& cert,
                                                        const SearchState& state,
                                                        const Rational& eps) {
  const Matroid& r = *state.matroid;
  Rational b0 = Size(state.b0);
  // |b0 ∩ I*| ≤ r(b0|z1) + r(z1) − |z1| + ((1 + 2ε)/(k − 2) + ε)|z2|.
  Rational base = Rational(RankMarginal(r, state.b0, cert.z1)) +
                  r.Rank(cert.z1) - Size(cert.z1);
  for (std::int64_t k = 3; k <= 1000; ++k) {
    Rational bound = base + ((1 + 2 * eps) / Rational(k - 2) + eps) * Size(cert.z2);
    if (bound < 3 * eps * b0) return k;
  }
  return std::nullopt;
}

Rational SoundnessAlpha(const Rational& eps) { return 4 + 40 * eps; }

bool ExhaustiveSoundness(const SearchState& state, const Rational& eps,
                         const Rational& alpha) {
  const Matroid& r = *state.matroid;
  const Subset ground = state.Ground();
  auto ok = UniformLoadTable(*state.polymatroid, alpha * state.b);
  const Rational need = 3 * eps * Size(state.b0);
  bool found = false;
  ForEachSubsetOf(ground, [&](Subset im) {
    if (found || Size(im & state.b0) < need) return;
    if (!r.IsIndependent(im)) return;
    if (ok[ground & ~state.b0 & ~im]) found = true;
  });
  return !found;
}

bool VerifyMiniatureCertificate(const Matroid& m, const Polymatroid& p,
                                std::int64_t b, Subset x, Subset y) {
  if (!IsSubsetOf(x, y)) return false;
  if (p.Value(x) > b * Popcount(x)) return false;
  // r(y) < |y| − |x|/2, doubled to stay in integers.
  if (2 * m.Rank(y) >= 2 * Popcount(y) - Popcount(x)) return false;
  for (int i : Elements(y & ~x)) {
    if (CappedMarginal(p, Bit(i), p.Value(p.ground()) + 1, x) > b) return false;
  }
  return true;
}

bool NoCoverOfSetAt(const Matroid& m, const Polymatroid& p, Subset y,
                    const Rational& multiplicity) {
  auto ok = UniformLoadTable(p, multiplicity);
  bool found = false;
  ForEachSubsetOf(y, [&](Subset im) {
    if (!found && m.IsIndependent(im) && ok[y & ~im]) found = true;
  });
  return !found;
}

CoverResult SolveCover(const CoreCoverInstance& inst,
                       const SearchOptions& options) {
  ValidateInstance(inst);
  if (options.eps <= 0 || options.eps > MakeRational(1, 8)) {
    throw ContractError("eps must lie in (0, 1/8]");
  }
  const int n = inst.size();
  const Polymatroid& f = *inst.polymatroid;
  ResetOracleQueryCount();
  CoverResult out;
  Subset removed = 0;
  MatroidPtr matroid = inst.matroid;
  while (true) {
    Subset loops = 0;
    for (int i = 0; i < n; ++i) {
      if (matroid->Rank(Bit(i)) == 0) loops |= Bit(i);
    }
    Subset im = 0;
    Subset ip = loops;
    if (!Member(f, ScaledIndicator(n, inst.b, ip))) {
      out.diagnostic = "b times the rank-zero elements is outside P; the "
                       "optimum is below b";
      break;
    }
    bool failed = false;
    for (int i = 0; i < n; ++i) {
      if (Contains(im | ip, i)) continue;
      SearchState state;
      state.matroid = matroid;
      state.polymatroid = inst.polymatroid;
      state.b = inst.b;
      state.im = im;
      state.ip = ip;
      state.b0 = Bit(i);
      state.order = {i};
      AugmentResult res = Augment(state, options);
      out.recursion_nodes += res.nodes;
      out.max_call_nodes = std::max(out.max_call_nodes, res.nodes);
      if (res.success) {
        im = res.im;
        ip = res.ip;
        if (!Contains(im, i)) {
          throw InternalError("successful augmentation did not cover B0");
        }
        continue;
      }
      out.failures.push_back({i, res.certificate, state});
      removed |= Bit(i);
      matroid = MakeZeroed(inst.matroid, removed);
      failed = true;
      break;
    }
    if (!failed) {
      out.success = true;
      out.im = im;
      out.y = ScaledIndicator(n, inst.b, ip);
      if (!inst.matroid->IsIndependent(im) || !Member(f, out.y) ||
          (im | ip) != FullSet(n)) {
        throw InternalError("cover failed validation");
      }
      break;
    }
    if (++out.restarts > n) {
      out.diagnostic = "restart bound |E| reached";
      break;
    }
  }
  out.oracle_queries = OracleQueryCount();
  return out;
}

int RecursionDepthExponent(int n, const Rational& eps) {
  if (n <= 1) return 0;
  long double e = ToDouble(eps);
  long double base = 1.0L / (1.0L - e * e);
  return static_cast<int>(std::ceil(std::log(static_cast<long double>(n)) /
                                    std::log(base) - 1e-12L));
}

bool WithinNodeBound(std::uint64_t nodes, int n, const Rational& eps) {
  int exponent = RecursionDepthExponent(n, eps);
  if (exponent >= 63) return true;
  return nodes <= (std::uint64_t{1} << exponent);
}

}  // namespace matalloc
