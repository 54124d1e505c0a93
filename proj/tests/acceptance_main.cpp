// This file is part of pointlike-lab, a workbench for pointlike sets of
// finite semigroups.
//
// Copyright 2026 the pointlike-lab authors
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

// Acceptance gate: thirteen checks over the law registry, one line each.
// Every check is an exact set equality or count identity over an enumerated
// universe; several also assert a wall-clock budget.  Exits nonzero if any
// line fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pointlike/laws.hpp"

using namespace pointlike;

namespace {

struct Timed {
  LawResult result;
  double seconds = 0.0;
};

Timed run(const std::string& name, int order) {
  for (const LawSuite& s : law_suites()) {
    if (s.name != name) continue;
    auto t0 = std::chrono::steady_clock::now();
    LawResult r = run_law_suite(s, order);
    double dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return {std::move(r), dt};
  }
  std::fprintf(stderr, "unknown suite %s\n", name.c_str());
  std::exit(2);
}

int failures = 0;

void line(int criterion, bool ok, const std::string& what) {
  if (!ok) ++failures;
  std::printf("criterion %2d: %s %s\n", criterion, ok ? "PASS" : "FAIL",
              what.c_str());
  std::fflush(stdout);
}

std::string stats(const Timed& t) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), " (%llu cases, %.1fs)",
                static_cast<unsigned long long>(t.result.cases), t.seconds);
  return buf;
}

}  // namespace

int main() {
  // 1: complex generation is a closure operator, exhaustively at order 3,
  // for generator families of up to two subsets.
  Timed c1 = run("generation-closure-laws", 3);
  line(1, c1.result.ok() && c1.seconds < 30.0,
       "complex generation closure laws" + stats(c1));

  // 2: the pushforward/pullback adjunction for every morphism between
  // order <= 3 semigroups and every complex pair.
  Timed c2 = run("transport-adjunction", 3);
  line(2, c2.result.ok() && c2.seconds < 60.0,
       "transport adjunction" + stats(c2));

  // 3: nerve identities: direct sums to meets, products to tensors, base
  // change, and division iff singleton nerve.
  Timed c3a = run("nerve-direct-sum-meet", 3);
  Timed c3b = run("nerve-product-tensor", 3);
  Timed c3c = run("nerve-base-change", 3);
  Timed c3d = run("division-iff-singleton-nerve", 3);
  bool ok3 = c3a.result.ok() && c3b.result.ok() && c3c.result.ok() &&
             c3d.result.ok();
  line(3, ok3, "nerve identities (" +
                   std::to_string(c3a.result.cases + c3b.result.cases +
                                  c3c.result.cases + c3d.result.cases) +
                   " cases)");

  // 4: both modulus axioms and both context axioms for every builtin
  // against every morphism and congruence quotient at order <= 3.
  Timed c4a = run("modulus-axiom-push", 3);
  Timed c4b = run("modulus-axiom-lift", 3);
  Timed c4c = run("context-axioms", 3);
  line(4, c4a.result.ok() && c4b.result.ok() && c4c.result.ok(),
       "modulus and context axioms (" +
           std::to_string(c4a.result.cases + c4b.result.cases +
                          c4c.result.cases) +
           " cases)");

  // 5: points of all 13 builtins match their wired pseudovarieties for
  // every semigroup of order <= 4.
  Timed c5 = run("point-identifications", 4);
  line(5, c5.result.ok() && c5.seconds < 180.0,
       "point identifications at order 4" + stats(c5));

  // 6: trivial functor value, trivial completion, and points membership
  // coincide for all builtins at order <= 4.
  Timed c6a = run("fix-vs-points", 4);
  Timed c6b = run("completion-vs-points", 4);
  line(6, c6a.result.ok() && c6b.result.ok(),
       "fix and completion agree with points at order 4 (" +
           std::to_string(c6a.result.cases + c6b.result.cases) + " cases)");

  // 7: the union law holds at completion fixpoints and the iteration
  // terminates; the observed level counts are reported, not asserted.
  Timed c7 = run("monad-union-law", 3);
  std::string levels = c7.result.notes.empty() ? "" : c7.result.notes.back();
  line(7, c7.result.ok(),
       "monad union law and termination; " + levels + stats(c7));

  // 8: the completion sits below the oracle upper bound for all builtins
  // with wired points, order <= 3, bound 3.
  Timed c8 = run("completion-below-oracle", 3);
  line(8, c8.result.ok(), "lower bound below upper bound" + stats(c8));

  // 9: squeeze certificates: P(G) for the groups Z2 and Z3 against the
  // aperiodics, and singleton values for members of the four classes.
  Timed c9 = run("known-pointlike-values", 3);
  line(9, c9.result.ok(), "known pointlike values certified" + stats(c9));

  // 10: pointlike computations commute with reversal.
  Timed c10 = run("reversal-transfer", 3);
  line(10, c10.result.ok(), "reversal transfer" + stats(c10));

  // 11: fixed point transfer at order <= 4 for the three wired pairs.
  Timed c11 = run("fptc-transfer", 4);
  line(11, c11.result.ok(), "fixed point transfer at order 4" + stats(c11));

  // 12: enumeration counts match the naive oracle and the published
  // sequence values.
  Timed c12 = run("enumerator-vs-naive", 3);
  line(12, c12.result.ok() && c12.seconds < 10.0,
       "enumerator against the naive oracle" + stats(c12));

  // 13: the full order-3 registry finishes under 5 minutes; the order-4
  // suites behind criteria 5, 6, and 11 finish under 15 minutes.
  auto t0 = std::chrono::steady_clock::now();
  bool all_ok = true;
  std::uint64_t all_cases = 0;
  for (const LawSuite& s : law_suites()) {
    LawResult r = run_law_suite(s, 3);
    all_ok = all_ok && r.ok();
    all_cases += r.cases;
  }
  double full3 = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  double order4 = c5.seconds + c6a.seconds + c6b.seconds + c11.seconds;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "full registry: order 3 in %.1fs (%llu cases), order-4 "
                "suites in %.1fs",
                full3, static_cast<unsigned long long>(all_cases), order4);
  line(13, all_ok && full3 < 300.0 && order4 < 900.0, buf);

  if (failures) {
    std::printf("ACCEPTANCE: %d of 13 criteria failed\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 13 criteria passed\n");
  return 0;
}
