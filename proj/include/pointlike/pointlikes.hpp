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

// Pointlike sets relative to a pseudovariety V: the subsets of S that land
// in a single element under every relational morphism into a member of V.
// The oracle here meets the nerves of all minimal graphs into the members of
// V up to a codomain order bound, giving an upper bound for the true value.
// Moduli completions give lower bounds; when the two meet, the value is
// certified exact.

#ifndef POINTLIKE_POINTLIKES_HPP_
#define POINTLIKE_POINTLIKES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/complex.hpp"
#include "pointlike/enumerate.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/modulus.hpp"
#include "pointlike/relmorph.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

struct OracleResult {
  Complex value;                       // upper bound for the pointlikes
  int codomain_bound = 0;
  std::uint64_t codomains_used = 0;    // members of V enumerated
  std::uint64_t graphs_intersected = 0;
  std::optional<RelMorphism> witness;  // a graph whose nerve is the value
};

// Meet of nerves over every minimal graph into every enumerated member of V
// of order at most k.  Each relational morphism into a member of V contains
// a minimal graph over the chosen generators, and nerves shrink with the
// graph, so the meet over minimal graphs is the meet over all graphs into
// the enumerated codomains.  Bounding the codomain order is what makes this
// an over-approximation.
inline OracleResult oracle_pointlikes(const Semigroup& s,
                                      const Pseudovariety& v, int k) {
  require_complex_base(s);
  if (k < 1 || k > enumeration_cap()) {
    throw Error(ErrorKind::SizeCap,
                "codomain bound " + std::to_string(k) +
                    " outside 1.." + std::to_string(enumeration_cap()));
  }
  std::vector<Elem> gens = greedy_generators(s);
  OracleResult result;
  result.codomain_bound = k;
  result.value = complex_top(s);
  Complex witness_nerve;
  for (int n = 1; n <= k; ++n) {
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& t) {
      if (!pv_member(v, t)) return true;
      ++result.codomains_used;
      minimal_graphs(s, t, gens, [&](const RelMorphism& rho) {
        ++result.graphs_intersected;
        Complex nv = nerve(rho);
        if (complex_le(nv, result.value)) {
          result.value = nv;
          result.witness = rho;
          witness_nerve = std::move(nv);
        } else {
          result.value =
              complex_lattice(LatticeOp::Meet, result.value, nv);
        }
        return true;
      });
      return true;
    });
  }
  if (result.witness && !(witness_nerve == result.value)) {
    result.witness.reset();
  }
  return result;
}

// Completion of the modulus: a lower bound for the pointlikes whenever
// every member of V is a points-semigroup of the modulus.
inline Complex lower_bound(const Semigroup& s, const Modulus& m) {
  return monad_completion(m, s).value;
}

struct Certificate {
  Semigroup semigroup;
  Pseudovariety pv{};
  ModulusPtr modulus;
  Complex lower;
  OracleResult upper;
  bool exact = false;
};

// Squeeze certification: the completion is a sound lower bound only when V
// sits inside the points of the modulus, so that compatibility is checked
// over the enumerated members of V up to the codomain bound first.
inline Certificate certify_exact(const Semigroup& s, const Pseudovariety& v,
                                 ModulusPtr m, int k) {
  if (k < 1 || k > enumeration_cap()) {
    throw Error(ErrorKind::SizeCap, "codomain bound outside enumeration cap");
  }
  for (int n = 1; n <= k; ++n) {
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& t) {
      if (pv_member(v, t) && !points_member(*m, t)) {
        std::vector<std::int64_t> data{t.order()};
        for (Elem x : t.table()) data.push_back(x);
        throw Error(ErrorKind::PointsMismatch,
                    "a member of the pseudovariety of order " +
                        std::to_string(t.order()) +
                        " is not a points-semigroup of the modulus",
                    std::move(data));
      }
      return true;
    });
  }
  Complex lower = lower_bound(s, *m);
  Certificate cert{s, v, std::move(m), std::move(lower), {}, false};
  cert.upper = oracle_pointlikes(s, v, k);
  cert.exact = cert.lower == cert.upper.value;
  return cert;
}

// Transfer along reversal: pointlikes for the reversed pseudovariety equal
// the pointlikes of the reversed semigroup, as face families over the same
// element set.
inline bool reversal_transfer_check(const Semigroup& s,
                                    const Pseudovariety& v, int k) {
  OracleResult lhs = oracle_pointlikes(s, reverse_pseudovariety(v), k);
  OracleResult rhs = oracle_pointlikes(reverse(s), v, k);
  return lhs.value.faces() == rhs.value.faces();
}

struct FptcReport {
  int max_order = 0;
  std::uint64_t checked = 0;
  std::vector<Semigroup> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// Fixed-point transfer: points of the restricted modulus against the
// context operator applied to the wired points pseudovariety, over every
// semigroup up to max_order.  A refutation harness, not a proof.
inline FptcReport fptc_check(const ContextPtr& ctx, const ModulusPtr& m,
                             int max_order = 4) {
  std::optional<Pseudovariety> wired = wired_points(*m);
  if (!wired) {
    throw Error(ErrorKind::PointsMismatch,
                "modulus has no wired points identification");
  }
  ModulusPtr restricted = mod_restrict(m, ctx);
  FptcReport report;
  report.max_order = max_order;
  for (int n = 1; n <= max_order; ++n) {
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& s) {
      ++report.checked;
      bool via_points = points_member(*restricted, s);
      bool via_ctx = ctx_operator_member(*ctx, *wired, s);
      if (via_points != via_ctx) report.counterexamples.push_back(s);
      return true;
    });
  }
  return report;
}

}  // namespace pointlike

#endif  // POINTLIKE_POINTLIKES_HPP_
