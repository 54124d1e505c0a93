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

// Moduli assign to each finite semigroup a family of subsets (subgroups,
// Green classes, principal ideals, length-k products, idempotents, ...).
// Context specifiers assign families of subsemigroups.  Both are expression
// trees evaluated on demand.  A modulus induces a complex on each semigroup
// by generation, and iterating that construction over face semigroups yields
// the monad completion, the lower-bound engine for pointlike computations.

#ifndef POINTLIKE_MODULUS_HPP_
#define POINTLIKE_MODULUS_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/complex.hpp"
#include "pointlike/enumerate.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/relmorph.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

// Tuple enumeration cap for the Suffix / Prefix / Prod leaves.
inline constexpr std::uint64_t kMaxTupleCount = 4096;
// Face-count cap for intermediate face semigroups in the completion.
inline constexpr std::size_t kMaxCompletionFaces = std::size_t{1} << 16;

enum class ModulusKind {
  Grp,
  CycGrp,
  RCl,
  LCl,
  JCl,
  PrinR,
  PrinL,
  PrinJ,
  Prod,
  Suffix,
  Prefix,
  E,
  Reg,
  Join,
  FromContext,
  ContextRestrict,
};

enum class ContextKind {
  Grp,
  CycGrp,
  Loc,
  EGen,
  RegGen,
  Full,
  FromModulus,
  EPApprox,
};

struct Modulus;
struct ContextSpec;
using ModulusPtr = std::shared_ptr<const Modulus>;
using ContextPtr = std::shared_ptr<const ContextSpec>;

struct Modulus {
  ModulusKind kind;
  int k = 0;             // Prod / Suffix / Prefix parameter, k >= 1
  ModulusPtr left;       // Join operand, ContextRestrict operand
  ModulusPtr right;      // Join operand
  ContextPtr ctx;        // FromContext / ContextRestrict context
};

struct ContextSpec {
  ContextKind kind;
  ModulusPtr modulus;    // FromModulus
  Pseudovariety pv{};    // EPApprox target
  int max_order = 0;     // EPApprox codomain bound, >= 1
};

inline ModulusPtr mod_builtin(ModulusKind kind) {
  assert(kind != ModulusKind::Prod && kind != ModulusKind::Suffix &&
         kind != ModulusKind::Prefix && kind != ModulusKind::Join &&
         kind != ModulusKind::FromContext &&
         kind != ModulusKind::ContextRestrict);
  return std::make_shared<Modulus>(Modulus{kind, 0, nullptr, nullptr, nullptr});
}

inline ModulusPtr mod_param(ModulusKind kind, int k) {
  assert(kind == ModulusKind::Prod || kind == ModulusKind::Suffix ||
         kind == ModulusKind::Prefix);
  if (k < 1) throw Error(ErrorKind::ParseError, "modulus parameter k < 1");
  return std::make_shared<Modulus>(Modulus{kind, k, nullptr, nullptr, nullptr});
}

inline ModulusPtr mod_join(ModulusPtr a, ModulusPtr b) {
  return std::make_shared<Modulus>(
      Modulus{ModulusKind::Join, 0, std::move(a), std::move(b), nullptr});
}

inline ModulusPtr mod_from_context(ContextPtr ctx) {
  return std::make_shared<Modulus>(
      Modulus{ModulusKind::FromContext, 0, nullptr, nullptr, std::move(ctx)});
}

inline ModulusPtr mod_restrict(ModulusPtr m, ContextPtr ctx) {
  return std::make_shared<Modulus>(Modulus{
      ModulusKind::ContextRestrict, 0, std::move(m), nullptr, std::move(ctx)});
}

inline ContextPtr ctx_builtin(ContextKind kind) {
  assert(kind != ContextKind::FromModulus && kind != ContextKind::EPApprox);
  return std::make_shared<ContextSpec>(
      ContextSpec{kind, nullptr, Pseudovariety{}, 0});
}

inline ContextPtr ctx_from_modulus(ModulusPtr m) {
  return std::make_shared<ContextSpec>(
      ContextSpec{ContextKind::FromModulus, std::move(m), Pseudovariety{}, 0});
}

inline ContextPtr ctx_epapprox(Pseudovariety pv, int max_order) {
  if (max_order < 1) {
    throw Error(ErrorKind::ParseError, "epapprox bound < 1");
  }
  return std::make_shared<ContextSpec>(
      ContextSpec{ContextKind::EPApprox, nullptr, pv, max_order});
}

// True when the tree contains an EPApprox leaf; such results are labeled
// approximate because the bounded context over-approximates the true one.
inline bool modulus_is_approximate(const Modulus& m);
inline bool context_is_approximate(const ContextSpec& c) {
  if (c.kind == ContextKind::EPApprox) return true;
  if (c.kind == ContextKind::FromModulus) {
    return modulus_is_approximate(*c.modulus);
  }
  return false;
}
inline bool modulus_is_approximate(const Modulus& m) {
  switch (m.kind) {
    case ModulusKind::Join:
      return modulus_is_approximate(*m.left) ||
             modulus_is_approximate(*m.right);
    case ModulusKind::FromContext:
      return context_is_approximate(*m.ctx);
    case ModulusKind::ContextRestrict:
      return modulus_is_approximate(*m.left) ||
             context_is_approximate(*m.ctx);
    default:
      return false;
  }
}

using SubsetFamily = std::vector<std::vector<Elem>>;

inline void sort_family(SubsetFamily& fam) {
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

inline SubsetFamily eval_modulus(const Modulus& m, const Semigroup& s);
inline SubsetFamily eval_context(const ContextSpec& c, const Semigroup& s);

namespace detail {

// All products of exactly k elements, as the k-th setwise power.
inline std::vector<Elem> length_k_product_set(const Semigroup& s, int k) {
  std::vector<Elem> cur(s.order());
  for (Elem x = 0; x < s.order(); ++x) cur[x] = x;
  for (int step = 1; step < k; ++step) {
    std::vector<char> next(s.order(), 0);
    for (Elem p : cur) {
      for (Elem x = 0; x < s.order(); ++x) next[s.at(p, x)] = 1;
    }
    cur.clear();
    for (Elem x = 0; x < s.order(); ++x) {
      if (next[x]) cur.push_back(x);
    }
  }
  return cur;
}

inline void require_tuple_cap(const Semigroup& s, int k) {
  std::uint64_t tuples = 1;
  for (int i = 0; i < k; ++i) {
    tuples *= static_cast<std::uint64_t>(s.order());
    if (tuples > kMaxTupleCount) {
      throw Error(ErrorKind::SizeCap,
                  "tuple enumeration " + std::to_string(s.order()) + "^" +
                      std::to_string(k) + " exceeds cap " +
                      std::to_string(kMaxTupleCount));
    }
  }
}

// {x} with all left (Side=0), right (Side=1), or two-sided (Side=2)
// translates adjoined: the principal ideal of x in S with identity adjoined.
inline std::vector<Elem> principal_ideal(const Semigroup& s, Elem x,
                                         int side) {
  std::vector<Elem> out{x};
  if (side != 1) {
    for (Elem a = 0; a < s.order(); ++a) out.push_back(s.at(a, x));
  }
  if (side != 0) {
    for (Elem a = 0; a < s.order(); ++a) out.push_back(s.at(x, a));
  }
  if (side == 2) {
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem b = 0; b < s.order(); ++b) {
        out.push_back(s.at(s.at(a, x), b));
      }
    }
  }
  return sorted_unique(std::move(out));
}

inline SubsetFamily epapprox_context(const Semigroup& s,
                                     const Pseudovariety& pv, int max_order) {
  if (s.order() > kMaxComplexBase) {
    throw Error(ErrorKind::SizeCap,
                "bounded idempotent context needs base order <= " +
                    std::to_string(kMaxComplexBase));
  }
  if (max_order > enumeration_cap()) {
    throw Error(ErrorKind::SizeCap, "codomain bound exceeds enumeration cap");
  }
  std::vector<Elem> gens = greedy_generators(s);
  // Collect, per admissible minimal graph, the union of idempotent fibers a
  // candidate subsemigroup must fit inside one of.
  std::vector<std::vector<Mask>> idem_fibers;
  for (int n = 1; n <= max_order; ++n) {
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& t) {
      if (!pv_member(pv, t)) return true;
      std::vector<Elem> idems =
          element_sets(t, ElementSetKind::Idempotents);
      minimal_graphs(s, t, gens, [&](const RelMorphism& rho) {
        std::vector<Mask> fibers;
        for (Elem e : idems) {
          Mask f = 0;
          for (const auto& [a, b] : rho.graph) {
            if (b == e) f |= Mask{1} << a;
          }
          if (f != 0) fibers.push_back(f);
        }
        idem_fibers.push_back(std::move(fibers));
        return true;
      });
      return true;
    });
  }
  SubsetFamily out;
  for (Mask t = 1; t <= full_mask(s); ++t) {
    std::vector<Elem> elems = mask_elements(t);
    if (!is_product_closed(s, elems)) continue;
    bool ok = true;
    for (const auto& fibers : idem_fibers) {
      bool inside = false;
      for (Mask f : fibers) {
        if ((t & f) == t) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(elems));
  }
  sort_family(out);
  return out;
}

}  // namespace detail

inline SubsetFamily eval_context(const ContextSpec& c, const Semigroup& s) {
  if (s.order() < 1) {
    throw Error(ErrorKind::EmptyOperand, "context of an empty semigroup");
  }
  SubsetFamily out;
  switch (c.kind) {
    case ContextKind::Grp:
      out = special_subsemigroups(s, SubsemigroupKind::Subgroups);
      break;
    case ContextKind::CycGrp:
      out = special_subsemigroups(s, SubsemigroupKind::CyclicSubgroups);
      break;
    case ContextKind::Loc:
      out = special_subsemigroups(s, SubsemigroupKind::LocalMonoids);
      break;
    case ContextKind::EGen:
      out = special_subsemigroups(s, SubsemigroupKind::IdempotentGenerated);
      break;
    case ContextKind::RegGen:
      out = special_subsemigroups(s, SubsemigroupKind::RegularGenerated);
      break;
    case ContextKind::Full: {
      std::vector<Elem> all(s.order());
      for (Elem x = 0; x < s.order(); ++x) all[x] = x;
      out.push_back(std::move(all));
      break;
    }
    case ContextKind::FromModulus:
      for (const auto& x : eval_modulus(*c.modulus, s)) {
        out.push_back(generate_subsemigroup(s, x));
      }
      break;
    case ContextKind::EPApprox:
      out = detail::epapprox_context(s, c.pv, c.max_order);
      break;
  }
  sort_family(out);
  return out;
}

inline SubsetFamily eval_modulus(const Modulus& m, const Semigroup& s) {
  if (s.order() < 1) {
    throw Error(ErrorKind::EmptyOperand, "modulus of an empty semigroup");
  }
  SubsetFamily out;
  switch (m.kind) {
    case ModulusKind::Grp:
      out = special_subsemigroups(s, SubsemigroupKind::Subgroups);
      break;
    case ModulusKind::CycGrp:
      out = special_subsemigroups(s, SubsemigroupKind::CyclicSubgroups);
      break;
    case ModulusKind::RCl:
      out = green_partition(s, GreenRelation::R).classes;
      break;
    case ModulusKind::LCl:
      out = green_partition(s, GreenRelation::L).classes;
      break;
    case ModulusKind::JCl:
      out = green_partition(s, GreenRelation::J).classes;
      break;
    case ModulusKind::PrinR:
      for (Elem x = 0; x < s.order(); ++x) {
        out.push_back(detail::principal_ideal(s, x, 1));
      }
      break;
    case ModulusKind::PrinL:
      for (Elem x = 0; x < s.order(); ++x) {
        out.push_back(detail::principal_ideal(s, x, 0));
      }
      break;
    case ModulusKind::PrinJ:
      for (Elem x = 0; x < s.order(); ++x) {
        out.push_back(detail::principal_ideal(s, x, 2));
      }
      break;
    case ModulusKind::Prod:
      detail::require_tuple_cap(s, m.k);
      out.push_back(detail::length_k_product_set(s, m.k));
      break;
    case ModulusKind::Suffix:
    case ModulusKind::Prefix: {
      detail::require_tuple_cap(s, m.k);
      bool suffix = m.kind == ModulusKind::Suffix;
      for (Elem p : detail::length_k_product_set(s, m.k)) {
        std::vector<Elem> face{p};
        for (Elem a = 0; a < s.order(); ++a) {
          face.push_back(suffix ? s.at(a, p) : s.at(p, a));
        }
        out.push_back(sorted_unique(std::move(face)));
      }
      break;
    }
    case ModulusKind::E:
      out.push_back(element_sets(s, ElementSetKind::Idempotents));
      break;
    case ModulusKind::Reg:
      out.push_back(element_sets(s, ElementSetKind::Regular));
      break;
    case ModulusKind::Join: {
      out = eval_modulus(*m.left, s);
      SubsetFamily other = eval_modulus(*m.right, s);
      out.insert(out.end(), other.begin(), other.end());
      break;
    }
    case ModulusKind::FromContext:
      out = eval_context(*m.ctx, s);
      break;
    case ModulusKind::ContextRestrict:
      for (const auto& u : eval_context(*m.ctx, s)) {
        MaterializedSub sub = materialize_subsemigroup(s, u);
        for (const auto& x : eval_modulus(*m.left, sub.sub)) {
          std::vector<Elem> lifted;
          lifted.reserve(x.size());
          for (Elem i : x) lifted.push_back(sub.parent_of[i]);
          out.push_back(sorted_unique(std::move(lifted)));
        }
      }
      break;
  }
  sort_family(out);
  assert(!out.empty());
  return out;
}

inline bool points_member(const Modulus& m, const Semigroup& s) {
  for (const auto& x : eval_modulus(m, s)) {
    if (x.size() != 1) return false;
  }
  return true;
}

// The induced complex: generate from the modulus values.
inline Complex functor_value(const Modulus& m, const Semigroup& s) {
  std::vector<Mask> gens;
  for (const auto& x : eval_modulus(m, s)) gens.push_back(mask_of(x));
  return complex_generate(s, gens);
}

// Face semigroup of a complex: elements are the faces in ascending mask
// order, multiplication is the setwise product.
inline Semigroup face_semigroup(const Complex& k) {
  const std::vector<Mask>& faces = k.faces();
  std::size_t m = faces.size();
  if (m > kMaxCompletionFaces) {
    throw Error(ErrorKind::SizeCap, "face semigroup exceeds face cap");
  }
  std::vector<int> index(std::size_t{1} << k.base().order(), -1);
  for (std::size_t i = 0; i < m; ++i) index[faces[i]] = static_cast<int>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      int prod = index[setwise_product(k.base(), faces[i], faces[j])];
      assert(prod >= 0);  // complexes are product closed
      table[i * m + j] = prod;
    }
  }
  Semigroup q(static_cast<int>(m), std::move(table));
  std::vector<std::string> lab;
  lab.reserve(m);
  for (Mask f : faces) {
    std::string names = "{";
    for (Elem e : mask_elements(f)) {
      if (names.size() > 1) names += ",";
      names += std::to_string(e);
    }
    lab.push_back(names + "}");
  }
  q.set_labels(std::move(lab));
  return q;
}

namespace detail {

// One completion step: evaluate the modulus on the face semigroup, close the
// resulting family (with singletons) under products inside P(Q), push every
// member down to its union in the base, then downward-close.  Faces of Q are
// plain sorted index vectors because Q may outgrow the mask width.
inline Complex completion_step(const Modulus& m, const Complex& level) {
  Semigroup q = face_semigroup(level);
  SubsetFamily family = eval_modulus(m, q);
  for (Elem i = 0; i < q.order(); ++i) family.push_back({i});
  std::set<std::vector<Elem>> seen(family.begin(), family.end());
  std::vector<std::vector<Elem>> work(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        std::vector<Elem> prod;
        for (Elem a : work[x]) {
          for (Elem b : work[y]) prod.push_back(q.at(a, b));
        }
        prod = sorted_unique(std::move(prod));
        if (seen.insert(prod).second) work.push_back(std::move(prod));
      }
    }
  }
  std::vector<Mask> unions;
  unions.reserve(work.size());
  for (const auto& a : work) {
    Mask u = 0;
    for (Elem i : a) u |= level.faces()[i];
    unions.push_back(u);
  }
  Complex next(level.base(), downward_close(level.base(), unions));
  assert(complex_invariants_hold(next));
  return next;
}

}  // namespace detail

struct CompletionResult {
  Complex value;
  int levels = 0;                   // index of the first repeated level
  std::vector<std::size_t> trace;   // face count at each level
};

// Iterated union closure: level 0 is the singleton complex, each next level
// applies the induced construction to the face semigroup and takes unions.
// Levels increase and live inside the finite lattice of complexes over S,
// so the iteration reaches a fixpoint.
inline CompletionResult monad_completion(const Modulus& m,
                                         const Semigroup& s) {
  Complex level = complex_bottom(s);
  CompletionResult result;
  result.trace.push_back(level.face_count());
  while (true) {
    Complex next = detail::completion_step(m, level);
    assert(complex_le(level, next));
    if (next == level) break;
    level = std::move(next);
    result.trace.push_back(level.face_count());
    ++result.levels;
  }
  result.value = std::move(level);
  return result;
}

inline bool ctx_operator_member(const ContextSpec& c, const Pseudovariety& pv,
                                const Semigroup& s) {
  for (const auto& u : eval_context(c, s)) {
    if (!pv_member(pv, materialize_subsemigroup(s, u).sub)) return false;
  }
  return true;
}

// The pseudovariety whose members are exactly the semigroups on which the
// builtin modulus has singleton values.  Each pairing is covered by a law
// suite; composite trees have no wired identification.
inline std::optional<Pseudovariety> wired_points(const Modulus& m) {
  using K = Pseudovariety::Kind;
  switch (m.kind) {
    case ModulusKind::Grp:
      return Pseudovariety{K::Aperiodic, 0};
    case ModulusKind::CycGrp:
      return Pseudovariety{K::Aperiodic, 0};
    case ModulusKind::RCl:
      return Pseudovariety{K::RTrivial, 0};
    case ModulusKind::LCl:
      return Pseudovariety{K::LTrivial, 0};
    case ModulusKind::JCl:
      return Pseudovariety{K::JTrivial, 0};
    case ModulusKind::PrinR:
      return Pseudovariety{K::LeftZero, 0};
    case ModulusKind::PrinL:
      return Pseudovariety{K::RightZero, 0};
    case ModulusKind::PrinJ:
      return Pseudovariety{K::Trivial, 0};
    case ModulusKind::Prod:
      return Pseudovariety{K::NilpotentK, m.k};
    case ModulusKind::Suffix:
      return Pseudovariety{K::DelayK, m.k};
    case ModulusKind::Prefix:
      return Pseudovariety{K::ReverseDelayK, m.k};
    case ModulusKind::E:
      return Pseudovariety{K::UniqueIdempotent, 0};
    case ModulusKind::Reg:
      return Pseudovariety{K::Nilpotent, 0};
    default:
      return std::nullopt;
  }
}

// The thirteen builtin moduli in a fixed order, for law suites.
inline std::vector<std::pair<std::string, ModulusPtr>> builtin_moduli(
    int param_k = 2) {
  return {
      {"grp", mod_builtin(ModulusKind::Grp)},
      {"cycgrp", mod_builtin(ModulusKind::CycGrp)},
      {"rcl", mod_builtin(ModulusKind::RCl)},
      {"lcl", mod_builtin(ModulusKind::LCl)},
      {"jcl", mod_builtin(ModulusKind::JCl)},
      {"prinr", mod_builtin(ModulusKind::PrinR)},
      {"prinl", mod_builtin(ModulusKind::PrinL)},
      {"prinj", mod_builtin(ModulusKind::PrinJ)},
      {"prod:" + std::to_string(param_k),
       mod_param(ModulusKind::Prod, param_k)},
      {"suffix:" + std::to_string(param_k),
       mod_param(ModulusKind::Suffix, param_k)},
      {"prefix:" + std::to_string(param_k),
       mod_param(ModulusKind::Prefix, param_k)},
      {"e", mod_builtin(ModulusKind::E)},
      {"reg", mod_builtin(ModulusKind::Reg)},
  };
}

inline std::vector<std::pair<std::string, ContextPtr>> builtin_contexts() {
  return {
      {"ctx:grp", ctx_builtin(ContextKind::Grp)},
      {"ctx:cycgrp", ctx_builtin(ContextKind::CycGrp)},
      {"ctx:loc", ctx_builtin(ContextKind::Loc)},
      {"ctx:egen", ctx_builtin(ContextKind::EGen)},
      {"ctx:reggen", ctx_builtin(ContextKind::RegGen)},
      {"ctx:full", ctx_builtin(ContextKind::Full)},
  };
}

}  // namespace pointlike

#endif  // POINTLIKE_MODULUS_HPP_
