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

// Property suites: every algebraic law the library relies on, checked over
// enumerated universes of small semigroups.  Each suite reports how many
// cases it ran and how many failed; the CLI's check-laws command and the
// acceptance harness both drive this registry.
//
// Universe bounds are per suite: a suite caps the requested order at the
// largest bound it is designed for, so raising the global order only grows
// the suites meant to grow.

#ifndef POINTLIKE_LAWS_HPP_
#define POINTLIKE_LAWS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/complex.hpp"
#include "pointlike/enumerate.hpp"
#include "pointlike/io.hpp"
#include "pointlike/modulus.hpp"
#include "pointlike/pointlikes.hpp"
#include "pointlike/relmorph.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

struct LawResult {
  std::string suite;
  int order = 0;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;

  LawResult() = default;
  LawResult(std::string name, int ord) : suite(std::move(name)), order(ord) {}

  bool ok() const { return failures == 0; }
  void check(bool passed, const std::string& what) {
    ++cases;
    if (!passed) {
      ++failures;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
  void note(const std::string& text) {
    if (notes.size() < 8) notes.push_back(text);
  }
};

struct LawSuite {
  std::string name;
  std::string summary;
  int max_order;
  std::function<LawResult(int)> run;
};

namespace laws {

// ---------------------------------------------------------------------------
// Test universes and shared helpers

inline const std::vector<Semigroup>& iso_universe(int n) {
  static std::map<int, std::vector<Semigroup>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Semigroup> all;
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& s) {
      all.push_back(s);
      return true;
    });
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

inline std::vector<const Semigroup*> universe_upto(int n) {
  std::vector<const Semigroup*> out;
  for (int i = 1; i <= n; ++i) {
    for (const Semigroup& s : iso_universe(i)) out.push_back(&s);
  }
  return out;
}

// All complexes over a small base, by filtering families of non-singleton
// faces; feasible for bases of order at most 4.
inline std::vector<Complex> all_complexes(const Semigroup& s) {
  std::vector<Mask> extras;
  for (Mask m = 1; m <= full_mask(s); ++m) {
    if ((m & (m - 1)) != 0) extras.push_back(m);  // not a singleton
  }
  std::vector<Complex> out;
  for (std::uint32_t pick = 0; pick < (1u << extras.size()); ++pick) {
    std::vector<Mask> faces;
    for (Elem x = 0; x < s.order(); ++x) faces.push_back(Mask{1} << x);
    for (std::size_t i = 0; i < extras.size(); ++i) {
      if (pick & (1u << i)) faces.push_back(extras[i]);
    }
    std::sort(faces.begin(), faces.end());
    Complex cand(s, std::move(faces));
    if (complex_invariants_hold(cand)) out.push_back(std::move(cand));
  }
  return out;
}

// Every relational morphism between two small semigroups, by filtering all
// pair subsets; feasible when |S| * |T| is at most about 12.
inline std::vector<RelMorphism> all_relmorphs(const Semigroup& s,
                                              const Semigroup& t) {
  int np = s.order() * t.order();
  std::vector<GraphPair> universe;
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < t.order(); ++b) universe.emplace_back(a, b);
  }
  std::vector<RelMorphism> out;
  for (std::uint32_t pick = 1; pick < (1u << np); ++pick) {
    std::vector<GraphPair> pairs;
    for (int i = 0; i < np; ++i) {
      if (pick & (1u << i)) pairs.push_back(universe[i]);
    }
    bool closed = true;
    auto has = [&](Elem a, Elem b) {
      return std::binary_search(pairs.begin(), pairs.end(),
                                GraphPair{a, b});
    };
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, d] : pairs) {
        if (!has(s.at(a, c), t.at(b, d))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    std::vector<char> covered(s.order(), 0);
    for (const auto& [a, b] : pairs) covered[a] = 1;
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
      continue;
    }
    out.push_back(RelMorphism{s, t, std::move(pairs)});
  }
  return out;
}

// Deterministic thinning: keep at most `budget` evenly spaced items.
template <typename T>
inline std::vector<T> thin(std::vector<T> items, std::size_t budget) {
  if (items.size() <= budget) return items;
  std::vector<T> out;
  std::size_t stride = (items.size() + budget - 1) / budget;
  for (std::size_t i = 0; i < items.size(); i += stride) {
    out.push_back(items[i]);
  }
  return out;
}

inline std::string sgp_tag(const Semigroup& s) {
  std::string tag = "n" + std::to_string(s.order()) + "[";
  for (Elem v : s.table()) tag += std::to_string(v);
  return tag + "]";
}

inline Semigroup permuted_copy(const Semigroup& s,
                               const std::vector<Elem>& perm) {
  return Semigroup(s.order(), detail::permuted_table(s.table(), s.order(),
                                                     perm));
}

inline std::vector<std::pair<std::string, Pseudovariety>> pv_roster() {
  using K = Pseudovariety::Kind;
  std::vector<std::pair<std::string, Pseudovariety>> out;
  for (K kind :
       {K::Trivial, K::Groups, K::Aperiodic, K::RTrivial, K::LTrivial,
        K::JTrivial, K::Semilattices, K::Bands, K::Commutative, K::Nilpotent,
        K::LeftZero, K::RightZero, K::LocallyTrivial, K::UniqueIdempotent}) {
    Pseudovariety v{kind, 0};
    out.emplace_back(pv_name(v), v);
  }
  for (K kind : {K::NilpotentK, K::DelayK, K::ReverseDelayK}) {
    Pseudovariety v{kind, 2};
    out.emplace_back(pv_name(v), v);
  }
  return out;
}

inline std::vector<std::pair<std::string, ContextPtr>> context_roster() {
  auto out = builtin_contexts();
  out.emplace_back("gen(e)", ctx_from_modulus(mod_builtin(ModulusKind::E)));
  out.emplace_back("gen(grp)",
                   ctx_from_modulus(mod_builtin(ModulusKind::Grp)));
  return out;
}

// ---------------------------------------------------------------------------
// Core semigroup suites

inline LawResult quotient_morphisms(int order) {
  LawResult r{"quotient-morphisms", order};
  for (const Semigroup* s : universe_upto(order)) {
    for (const Congruence& c : congruences_and_quotients(*s)) {
      bool good = true;
      try {
        Morphism phi = make_morphism(*s, c.quotient, c.projection.map);
        good = phi.surjective();
      } catch (const Error&) {
        good = false;
      }
      r.check(good, "quotient of " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult green_h_refinement(int order) {
  LawResult r{"green-h-refinement", order};
  for (const Semigroup* s : universe_upto(order)) {
    Partition h = green_partition(*s, GreenRelation::H);
    Partition rr = green_partition(*s, GreenRelation::R);
    Partition ll = green_partition(*s, GreenRelation::L);
    bool fine = true;
    for (Elem x = 0; x < s->order() && fine; ++x) {
      for (Elem y = 0; y < s->order() && fine; ++y) {
        if (h.class_of[x] == h.class_of[y] &&
            (rr.class_of[x] != rr.class_of[y] ||
             ll.class_of[x] != ll.class_of[y])) {
          fine = false;
        }
      }
    }
    r.check(fine, "H refines R and L on " + sgp_tag(*s));
  }
  return r;
}

inline LawResult group_elements_vs_subgroups(int order) {
  LawResult r{"group-elements-vs-subgroups", order};
  for (const Semigroup* s : universe_upto(order)) {
    std::vector<Elem> via_h = element_sets(*s, ElementSetKind::GroupElements);
    std::vector<Elem> via_sub;
    for (const auto& g : special_subsemigroups(*s, SubsemigroupKind::Subgroups)) {
      via_sub.insert(via_sub.end(), g.begin(), g.end());
    }
    r.check(via_h == sorted_unique(std::move(via_sub)),
            "group elements of " + sgp_tag(*s));
  }
  return r;
}

inline LawResult leftzero_rightzero_reversal(int order) {
  LawResult r{"leftzero-rightzero-reversal", order};
  using K = Pseudovariety::Kind;
  for (const Semigroup* s : universe_upto(order)) {
    Semigroup rev = reverse(*s);
    r.check(pv_member({K::LeftZero, 0}, *s) ==
                pv_member({K::RightZero, 0}, rev),
            "LZ vs RZ on " + sgp_tag(*s));
    r.check(pv_member({K::RightZero, 0}, *s) ==
                pv_member({K::LeftZero, 0}, rev),
            "RZ vs LZ on " + sgp_tag(*s));
  }
  return r;
}

inline LawResult pv_isomorphism_invariance(int order) {
  LawResult r{"pv-isomorphism-invariance", order};
  std::mt19937 rng(12345);
  auto roster = pv_roster();
  for (const Semigroup* s : universe_upto(order)) {
    int n = s->order();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Elem> perm(n);
      for (Elem i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng() % (i + 1)]);
      }
      Semigroup copy = permuted_copy(*s, perm);
      for (const auto& [name, v] : roster) {
        r.check(pv_member(v, *s) == pv_member(v, copy),
                name + " under relabeling of " + sgp_tag(*s));
      }
    }
  }
  return r;
}

inline LawResult enumerator_canonical_unique(int order) {
  LawResult r{"enumerator-canonical-unique", order};
  for (int n = 1; n <= order; ++n) {
    std::set<std::vector<Elem>> canon;
    for (const Semigroup& s : iso_universe(n)) {
      r.check(canonical_table(s) == s.table(),
              "self-canonical at order " + std::to_string(n));
      r.check(canon.insert(s.table()).second,
              "duplicate canonical form at order " + std::to_string(n));
    }
    if (n > 3) continue;  // the raw sweep below is n^(n^2) tables
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= n;
    std::vector<Elem> table(n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < n * n; ++i) {
        table[i] = static_cast<Elem>(c % n);
        c /= n;
      }
      bool assoc = true;
      for (Elem i = 0; i < n && assoc; ++i) {
        for (Elem j = 0; j < n && assoc; ++j) {
          for (Elem k = 0; k < n && assoc; ++k) {
            if (table[table[i * n + j] * n + k] !=
                table[i * n + table[j * n + k]]) {
              assoc = false;
            }
          }
        }
      }
      if (!assoc) continue;
      r.check(canon.count(canonical_table(table, n)) == 1,
              "missing representative at order " + std::to_string(n));
    }
  }
  return r;
}

inline LawResult enumerator_vs_naive(int order) {
  LawResult r{"enumerator-vs-naive", order};
  struct Frozen {
    std::uint64_t raw, iso, anti;
  };
  const std::map<int, Frozen> published{
      {1, {1, 1, 1}}, {2, {8, 5, 4}}, {3, {113, 24, 18}}};
  for (int n = 1; n <= std::min(order, 3); ++n) {
    std::uint64_t naive_raw = 0;
    std::set<std::vector<Elem>> naive_iso, naive_anti;
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= n;
    std::vector<Elem> table(n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < n * n; ++i) {
        table[i] = static_cast<Elem>(c % n);
        c /= n;
      }
      bool assoc = true;
      for (Elem i = 0; i < n && assoc; ++i) {
        for (Elem j = 0; j < n && assoc; ++j) {
          for (Elem k = 0; k < n && assoc; ++k) {
            if (table[table[i * n + j] * n + k] !=
                table[i * n + table[j * n + k]]) {
              assoc = false;
            }
          }
        }
      }
      if (!assoc) continue;
      ++naive_raw;
      naive_iso.insert(canonical_table(table, n));
      naive_anti.insert(canonical_table_anti(table, n));
    }
    std::uint64_t raw = count_semigroups(n, Dedup::Raw);
    std::uint64_t iso = count_semigroups(n, Dedup::UpToIso);
    std::uint64_t anti = count_semigroups(n, Dedup::UpToIsoAntiIso);
    std::string at = " at order " + std::to_string(n);
    r.check(raw == naive_raw, "raw count vs naive" + at);
    r.check(iso == naive_iso.size(), "iso count vs naive" + at);
    r.check(anti == naive_anti.size(), "anti-iso count vs naive" + at);
    const Frozen& f = published.at(n);
    r.check(raw == f.raw && iso == f.iso && anti == f.anti,
            "published sequence values" + at);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Complex suites

inline LawResult generation_closure_laws(int order) {
  LawResult r{"generation-closure-laws", order};
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    std::vector<std::vector<Mask>> families;
    families.push_back({});
    for (Mask m = 1; m <= full_mask(*s); ++m) families.push_back({m});
    for (Mask m1 = 1; m1 <= full_mask(*s); ++m1) {
      for (Mask m2 = m1 + 1; m2 <= full_mask(*s); ++m2) {
        families.push_back({m1, m2});
      }
    }
    std::vector<Complex> gen;
    gen.reserve(families.size());
    for (const auto& fam : families) gen.push_back(complex_generate(*s, fam));
    for (std::size_t i = 0; i < families.size(); ++i) {
      bool increasing = true;
      for (Mask m : families[i]) {
        if (!gen[i].contains(m)) increasing = false;
      }
      r.check(increasing, "increasing on " + sgp_tag(*s));
      r.check(complex_generate(*s, gen[i].faces()) == gen[i],
              "idempotent on " + sgp_tag(*s));
      r.check(complex_invariants_hold(gen[i]),
              "invariants on " + sgp_tag(*s));
    }
    for (std::size_t i = 0; i < families.size(); ++i) {
      for (std::size_t j = 0; j < families.size(); ++j) {
        bool included = std::includes(families[j].begin(), families[j].end(),
                                      families[i].begin(),
                                      families[i].end());
        if (!included) continue;
        r.check(complex_le(gen[i], gen[j]), "monotone on " + sgp_tag(*s));
      }
    }
  }
  return r;
}

inline LawResult transport_adjunction(int order) {
  LawResult r{"transport-adjunction", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* s : universe) {
    std::vector<Complex> cs = all_complexes(*s);
    for (const Semigroup* t : universe) {
      std::vector<Morphism> phis = all_morphisms(*s, *t);
      if (phis.empty()) continue;
      std::vector<Complex> ct = all_complexes(*t);
      for (const Morphism& phi : phis) {
        for (const Complex& ks : cs) {
          Complex push = transport(phi, Transport::Pushforward, ks);
          for (const Complex& kt : ct) {
            bool lhs = complex_le(push, kt);
            bool rhs =
                complex_le(ks, transport(phi, Transport::Pullback, kt));
            r.check(lhs == rhs,
                    "adjunction " + sgp_tag(*s) + " -> " + sgp_tag(*t));
          }
        }
      }
    }
  }
  return r;
}

inline LawResult transport_adjoint_lattice_laws(int order) {
  LawResult r{"transport-adjoint-lattice-laws", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* s : universe) {
    std::vector<Complex> cs = all_complexes(*s);
    for (const Semigroup* t : universe) {
      std::vector<Morphism> phis = all_morphisms(*s, *t);
      if (phis.empty()) continue;
      std::vector<Complex> ct = all_complexes(*t);
      auto phis_thin = thin(phis, 6);
      auto cs_thin = thin(cs, 8);
      auto ct_thin = thin(ct, 8);
      for (const Morphism& phi : phis_thin) {
        for (const Complex& k1 : ct_thin) {
          for (const Complex& k2 : ct_thin) {
            Complex lhs = transport(phi, Transport::Pullback,
                                    complex_lattice(LatticeOp::Meet, k1, k2));
            Complex rhs = complex_lattice(
                LatticeOp::Meet, transport(phi, Transport::Pullback, k1),
                transport(phi, Transport::Pullback, k2));
            r.check(lhs == rhs, "pullback meets on " + sgp_tag(*t));
          }
        }
        for (const Complex& k1 : cs_thin) {
          for (const Complex& k2 : cs_thin) {
            Complex lhs =
                transport(phi, Transport::Pushforward,
                          complex_lattice(LatticeOp::Join, k1, k2));
            Complex rhs = complex_lattice(
                LatticeOp::Join, transport(phi, Transport::Pushforward, k1),
                transport(phi, Transport::Pushforward, k2));
            r.check(lhs == rhs, "pushforward joins on " + sgp_tag(*s));
          }
        }
      }
    }
  }
  return r;
}

inline LawResult surjection_image_law(int order) {
  LawResult r{"surjection-image-law", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* s : universe) {
    std::vector<Complex> cs = all_complexes(*s);
    for (const Semigroup* t : universe) {
      for (const Morphism& phi : all_morphisms(*s, *t)) {
        if (!phi.surjective()) continue;
        for (const Complex& k : cs) {
          Complex push = transport(phi, Transport::Pushforward, k);
          std::vector<Mask> images;
          for (Mask f : k.faces()) images.push_back(image_mask(phi, f));
          r.check(push.faces() == downward_close(*t, images),
                  "push = ssc(images) for " + sgp_tag(*s));
          bool every_face_an_image = true;
          for (Mask g : push.faces()) {
            bool hit = false;
            for (Mask f : k.faces()) {
              if (image_mask(phi, f) == g) {
                hit = true;
                break;
              }
            }
            if (!hit) every_face_an_image = false;
          }
          r.check(every_face_an_image,
                  "faces are images for " + sgp_tag(*s));
        }
      }
    }
  }
  return r;
}

inline LawResult complex_lattice_invariants(int order) {
  LawResult r{"complex-lattice-invariants", order};
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    std::vector<Complex> cs = all_complexes(*s);
    r.note(sgp_tag(*s) + " lattice size " + std::to_string(cs.size()));
    for (const Complex& k1 : cs) {
      for (const Complex& k2 : cs) {
        Complex meet = complex_lattice(LatticeOp::Meet, k1, k2);
        Complex join = complex_lattice(LatticeOp::Join, k1, k2);
        r.check(complex_invariants_hold(meet) &&
                    complex_invariants_hold(join),
                "lattice results valid on " + sgp_tag(*s));
        r.check(complex_le(meet, k1) && complex_le(meet, k2) &&
                    complex_le(k1, join) && complex_le(k2, join),
                "meet/join bounds on " + sgp_tag(*s));
      }
    }
  }
  return r;
}

inline LawResult filtered_meet_chains(int order) {
  LawResult r{"filtered-meet-chains", order};
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    std::vector<Complex> cs = all_complexes(*s);
    // Build descending chains by meeting lattice elements left to right.
    Complex acc = complex_top(*s);
    std::vector<Mask> pointwise = acc.faces();
    for (const Complex& k : cs) {
      acc = complex_lattice(LatticeOp::Meet, acc, k);
      std::vector<Mask> cut;
      std::set_intersection(pointwise.begin(), pointwise.end(),
                            k.faces().begin(), k.faces().end(),
                            std::back_inserter(cut));
      pointwise = std::move(cut);
      r.check(acc.faces() == pointwise,
              "chain meet is pointwise on " + sgp_tag(*s));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Relational morphism suites

inline LawResult nerve_monotonicity(int order) {
  LawResult r{"nerve-monotonicity", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* s : universe) {
    for (const Semigroup* t : universe) {
      std::vector<RelMorphism> graphs = thin(all_relmorphs(*s, *t), 60);
      std::vector<Complex> nerves;
      nerves.reserve(graphs.size());
      for (const RelMorphism& g : graphs) nerves.push_back(nerve(g));
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = 0; j < graphs.size(); ++j) {
          if (!std::includes(graphs[j].graph.begin(), graphs[j].graph.end(),
                             graphs[i].graph.begin(),
                             graphs[i].graph.end())) {
            continue;
          }
          r.check(complex_le(nerves[i], nerves[j]),
                  "monotone " + sgp_tag(*s) + " -> " + sgp_tag(*t));
        }
      }
    }
  }
  return r;
}

inline LawResult nerve_base_change(int order) {
  LawResult r{"nerve-base-change", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* sp : universe) {
    for (const Semigroup* s : universe) {
      std::vector<Morphism> phis = all_morphisms(*sp, *s);
      if (phis.empty()) continue;
      for (const Semigroup* t : universe) {
        std::vector<RelMorphism> rhos = thin(all_relmorphs(*s, *t), 12);
        for (const Morphism& phi : thin(phis, 4)) {
          for (const RelMorphism& rho : rhos) {
            Complex lhs = nerve(compose_rel(from_morphism(phi), rho));
            Complex rhs = transport(phi, Transport::Pullback, nerve(rho));
            r.check(lhs == rhs, "base change through " + sgp_tag(*s));
          }
        }
      }
    }
  }
  return r;
}

inline LawResult nerve_direct_sum_meet(int order) {
  LawResult r{"nerve-direct-sum-meet", order};
  auto universe = universe_upto(std::min(order, 3));
  std::uint64_t budget = 200;
  for (const Semigroup* s : universe) {
    for (const Semigroup* t1 : universe) {
      for (const Semigroup* t2 : universe) {
        if (r.cases >= budget) return r;
        auto r1s = thin(all_relmorphs(*s, *t1), 3);
        auto r2s = thin(all_relmorphs(*s, *t2), 3);
        for (const RelMorphism& r1 : r1s) {
          for (const RelMorphism& r2 : r2s) {
            Complex lhs = nerve(direct_sum(r1, r2));
            Complex rhs =
                complex_lattice(LatticeOp::Meet, nerve(r1), nerve(r2));
            r.check(lhs == rhs, "direct sum over " + sgp_tag(*s));
          }
        }
      }
    }
  }
  return r;
}

inline LawResult nerve_product_tensor(int order) {
  LawResult r{"nerve-product-tensor", order};
  auto universe = universe_upto(std::min(order, 3));
  std::uint64_t budget = 200;
  for (const Semigroup* s1 : universe) {
    for (const Semigroup* s2 : universe) {
      for (const Semigroup* t1 : universe) {
        for (const Semigroup* t2 : universe) {
          if (r.cases >= budget) return r;
          auto r1s = thin(all_relmorphs(*s1, *t1), 2);
          auto r2s = thin(all_relmorphs(*s2, *t2), 2);
          for (const RelMorphism& r1 : r1s) {
            for (const RelMorphism& r2 : r2s) {
              Complex lhs = nerve(rel_product(r1, r2));
              Complex rhs = complex_tensor(nerve(r1), nerve(r2));
              r.check(lhs == rhs, "product over " + sgp_tag(*s1) + " x " +
                                      sgp_tag(*s2));
            }
          }
        }
      }
    }
  }
  return r;
}

inline LawResult division_iff_singleton_nerve(int order) {
  LawResult r{"division-iff-singleton-nerve", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* s : universe) {
    std::vector<Elem> gens = greedy_generators(*s);
    for (const Semigroup* t : universe) {
      minimal_graphs(*s, *t, gens, [&](const RelMorphism& rho) {
        r.check(is_division(rho) == (nerve(rho) == complex_bottom(*s)),
                "division test " + sgp_tag(*s) + " -> " + sgp_tag(*t));
        return true;
      });
    }
  }
  return r;
}

inline LawResult composition_laws(int order) {
  LawResult r{"composition-laws", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const Semigroup* s : universe) {
    for (const Semigroup* t : universe) {
      std::vector<RelMorphism> rhos = thin(all_relmorphs(*s, *t), 8);
      for (const RelMorphism& rho : rhos) {
        r.check(compose_rel(rho, rel_identity(*t)) == rho,
                "right unit on " + sgp_tag(*s));
        r.check(compose_rel(rel_identity(*s), rho) == rho,
                "left unit on " + sgp_tag(*s));
      }
      // Precomposition with a morphism: (s)(phi;rho) = (s phi)rho.
      for (const Semigroup* sp : universe) {
        for (const Morphism& phi : thin(all_morphisms(*sp, *s), 3)) {
          for (const RelMorphism& rho : thin(rhos, 3)) {
            RelMorphism lhs = compose_rel(from_morphism(phi), rho);
            std::vector<GraphPair> direct;
            for (Elem x = 0; x < sp->order(); ++x) {
              for (const auto& [a, b] : rho.graph) {
                if (a == phi.map[x]) direct.emplace_back(x, b);
              }
            }
            std::sort(direct.begin(), direct.end());
            direct.erase(std::unique(direct.begin(), direct.end()),
                         direct.end());
            r.check(lhs.graph == direct, "precompose formula");
          }
        }
        // Postcomposition: (s, t psi) for (s, t) in the graph.
        for (const Morphism& psi : thin(all_morphisms(*t, *sp), 3)) {
          for (const RelMorphism& rho : thin(rhos, 3)) {
            RelMorphism lhs = compose_rel(rho, from_morphism(psi));
            std::vector<GraphPair> direct;
            for (const auto& [a, b] : rho.graph) {
              direct.emplace_back(a, psi.map[b]);
            }
            std::sort(direct.begin(), direct.end());
            direct.erase(std::unique(direct.begin(), direct.end()),
                         direct.end());
            r.check(lhs.graph == direct, "postcompose formula");
          }
        }
      }
      // Associativity on composable triples through small middles.
      for (const Semigroup* u : universe) {
        if (u->order() > 2) continue;
        auto mids = thin(all_relmorphs(*t, *u), 3);
        auto outs = thin(all_relmorphs(*u, *s), 3);
        for (const RelMorphism& rho : thin(rhos, 2)) {
          for (const RelMorphism& mu : mids) {
            for (const RelMorphism& nu : outs) {
              r.check(compose_rel(compose_rel(rho, mu), nu) ==
                          compose_rel(rho, compose_rel(mu, nu)),
                      "associativity");
            }
          }
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Modulus suites

inline LawResult modulus_axiom_push(int order) {
  LawResult r{"modulus-axiom-push", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe) {
      SubsetFamily fam_s = eval_modulus(*mod, *s);
      for (const Semigroup* t : universe) {
        for (const Morphism& phi : all_morphisms(*s, *t)) {
          SubsetFamily fam_t = eval_modulus(*mod, *t);
          for (const auto& x : fam_s) {
            std::vector<Elem> image;
            for (Elem e : x) image.push_back(phi.map[e]);
            image = sorted_unique(std::move(image));
            bool covered = false;
            for (const auto& y : fam_t) {
              if (std::includes(y.begin(), y.end(), image.begin(),
                                image.end())) {
                covered = true;
                break;
              }
            }
            r.check(covered, name + " push along " + sgp_tag(*s) + " -> " +
                                 sgp_tag(*t));
          }
        }
      }
    }
  }
  return r;
}

inline LawResult modulus_axiom_lift(int order) {
  LawResult r{"modulus-axiom-lift", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe) {
      SubsetFamily fam_s = eval_modulus(*mod, *s);
      for (const Congruence& c : congruences_and_quotients(*s)) {
        SubsetFamily fam_q = eval_modulus(*mod, c.quotient);
        for (const auto& y : fam_q) {
          bool lifted = false;
          for (const auto& x : fam_s) {
            std::vector<Elem> image;
            for (Elem e : x) image.push_back(c.projection.map[e]);
            if (sorted_unique(std::move(image)) == y) {
              lifted = true;
              break;
            }
          }
          r.check(lifted, name + " lift along quotient of " + sgp_tag(*s));
        }
      }
    }
  }
  return r;
}

inline LawResult context_axioms(int order) {
  LawResult r{"context-axioms", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const auto& [name, ctx] : context_roster()) {
    for (const Semigroup* s : universe) {
      SubsetFamily fam_s = eval_context(*ctx, *s);
      for (const Semigroup* t : universe) {
        for (const Morphism& phi : all_morphisms(*s, *t)) {
          SubsetFamily fam_t = eval_context(*ctx, *t);
          for (const auto& u : fam_s) {
            std::vector<Elem> image;
            for (Elem e : u) image.push_back(phi.map[e]);
            image = sorted_unique(std::move(image));
            bool covered = false;
            for (const auto& v : fam_t) {
              if (std::includes(v.begin(), v.end(), image.begin(),
                                image.end())) {
                covered = true;
                break;
              }
            }
            r.check(covered, name + " axiom 1 on " + sgp_tag(*s));
          }
        }
      }
      for (const Congruence& c : congruences_and_quotients(*s)) {
        SubsetFamily fam_q = eval_context(*ctx, c.quotient);
        for (const auto& v : fam_q) {
          bool lifted = false;
          for (const auto& u : fam_s) {
            std::vector<Elem> image;
            for (Elem e : u) image.push_back(c.projection.map[e]);
            if (sorted_unique(std::move(image)) == v) {
              lifted = true;
              break;
            }
          }
          r.check(lifted, name + " axiom 2 on " + sgp_tag(*s));
        }
      }
    }
  }
  return r;
}

inline LawResult fix_vs_points(int order) {
  LawResult r{"fix-vs-points", order};
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe_upto(order)) {
      bool pts = points_member(*mod, *s);
      bool fixed = functor_value(*mod, *s) == complex_bottom(*s);
      r.check(fixed == pts, name + " fix vs points on " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult completion_vs_points(int order) {
  LawResult r{"completion-vs-points", order};
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe_upto(order)) {
      bool pts = points_member(*mod, *s);
      bool fixed = monad_completion(*mod, *s).value == complex_bottom(*s);
      r.check(fixed == pts,
              name + " completion fix vs points on " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult join_preservation(int order) {
  LawResult r{"join-preservation", order};
  auto mods = builtin_moduli(2);
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = i; j < mods.size(); ++j) {
      ModulusPtr joined = mod_join(mods[i].second, mods[j].second);
      for (const Semigroup* s : universe_upto(std::min(order, 3))) {
        Complex lhs = functor_value(*joined, *s);
        Complex rhs = complex_lattice(LatticeOp::Join,
                                      functor_value(*mods[i].second, *s),
                                      functor_value(*mods[j].second, *s));
        r.check(lhs == rhs, mods[i].first + " join " + mods[j].first +
                                " on " + sgp_tag(*s));
      }
    }
  }
  return r;
}

inline LawResult completion_closure_properties(int order) {
  LawResult r{"completion-closure-properties", order};
  auto mods = builtin_moduli(2);
  auto universe = universe_upto(std::min(order, 3));
  for (const auto& [name, mod] : mods) {
    for (const Semigroup* s : universe) {
      CompletionResult comp = monad_completion(*mod, *s);
      r.check(complex_le(functor_value(*mod, *s), comp.value),
              name + " completion contains functor value on " + sgp_tag(*s));
      r.check(detail::completion_step(*mod, comp.value) == comp.value,
              name + " completion stable on " + sgp_tag(*s));
    }
  }
  // Monotone in the modulus whenever one family sits inside the other at
  // every universe member (the hypothesis is checked, not assumed).
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = 0; j < mods.size(); ++j) {
      if (i == j) continue;
      bool pointwise_included = true;
      for (const Semigroup* s : universe) {
        SubsetFamily fi = eval_modulus(*mods[i].second, *s);
        SubsetFamily fj = eval_modulus(*mods[j].second, *s);
        for (const auto& x : fi) {
          if (!std::binary_search(fj.begin(), fj.end(), x)) {
            pointwise_included = false;
            break;
          }
        }
        if (!pointwise_included) break;
      }
      if (!pointwise_included) continue;
      for (const Semigroup* s : universe) {
        r.check(complex_le(monad_completion(*mods[i].second, *s).value,
                           monad_completion(*mods[j].second, *s).value),
                mods[i].first + " <= " + mods[j].first + " completion on " +
                    sgp_tag(*s));
      }
    }
  }
  return r;
}

inline LawResult monad_union_law(int order) {
  LawResult r{"monad-union-law", order};
  int max_level = 0;
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe_upto(std::min(order, 3))) {
      CompletionResult comp = monad_completion(*mod, *s);
      max_level = std::max(max_level, comp.levels);
      Semigroup q = face_semigroup(comp.value);
      SubsetFamily family = eval_modulus(*mod, q);
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
      bool unions_inside = true;
      for (const auto& a : work) {
        Mask u = 0;
        for (Elem idx : a) u |= comp.value.faces()[idx];
        if (!comp.value.contains(u)) unions_inside = false;
      }
      r.check(unions_inside, name + " union law on " + sgp_tag(*s));
    }
  }
  r.note("max completion level observed: " + std::to_string(max_level));
  return r;
}

inline LawResult points_pseudovariety_closure(int order) {
  LawResult r{"points-pseudovariety-closure", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe) {
      if (!points_member(*mod, *s)) continue;
      // Product-closed subsets stay points-semigroups.
      for (Mask m = 1; m <= full_mask(*s); ++m) {
        std::vector<Elem> elems = mask_elements(m);
        if (!is_product_closed(*s, elems)) continue;
        MaterializedSub sub = materialize_subsemigroup(*s, elems);
        r.check(points_member(*mod, sub.sub),
                name + " closed under subsemigroups of " + sgp_tag(*s));
      }
      // Quotients stay points-semigroups.
      for (const Congruence& c : congruences_and_quotients(*s)) {
        r.check(points_member(*mod, c.quotient),
                name + " closed under quotients of " + sgp_tag(*s));
      }
      // Binary products with other points-semigroups.
      for (const Semigroup* t : universe) {
        if (!points_member(*mod, *t)) continue;
        r.check(points_member(*mod, direct_product(*s, *t)),
                name + " closed under product " + sgp_tag(*s) + " x " +
                    sgp_tag(*t));
      }
    }
  }
  return r;
}

inline LawResult point_identifications(int order) {
  LawResult r{"point-identifications", order};
  for (int k : {1, 2, 3}) {
    int bound = k == 2 ? order : std::min(order, 3);
    for (const auto& [name, mod] : builtin_moduli(k)) {
      std::optional<Pseudovariety> wired = wired_points(*mod);
      if (!wired) continue;
      for (const Semigroup* s : universe_upto(bound)) {
        r.check(points_member(*mod, *s) == pv_member(*wired, *s),
                name + " points vs " + pv_name(*wired) + " on " +
                    sgp_tag(*s));
      }
    }
  }
  return r;
}

inline LawResult restriction_refinement(int order) {
  LawResult r{"restriction-refinement", order};
  for (const auto& [mname, mod] : builtin_moduli(2)) {
    for (const auto& [cname, ctx] : context_roster()) {
      ModulusPtr restricted = mod_restrict(mod, ctx);
      for (const Semigroup* s : universe_upto(std::min(order, 3))) {
        SubsetFamily base = eval_modulus(*mod, *s);
        for (const auto& x : eval_modulus(*restricted, *s)) {
          bool refined = false;
          for (const auto& y : base) {
            if (std::includes(y.begin(), y.end(), x.begin(), x.end())) {
              refined = true;
              break;
            }
          }
          r.check(refined, mname + " | " + cname + " refines on " +
                               sgp_tag(*s));
        }
      }
    }
  }
  return r;
}

inline LawResult restriction_points_theorem(int order) {
  LawResult r{"restriction-points-theorem", order};
  for (const auto& [mname, mod] : builtin_moduli(2)) {
    std::optional<Pseudovariety> wired = wired_points(*mod);
    if (!wired) continue;
    for (const auto& [cname, ctx] : context_roster()) {
      ModulusPtr restricted = mod_restrict(mod, ctx);
      for (const Semigroup* s : universe_upto(std::min(order, 3))) {
        bool via_points = points_member(*restricted, *s);
        bool via_ctx = ctx_operator_member(*ctx, *wired, *s);
        r.check(via_points == via_ctx, mname + " | " + cname +
                                           " points theorem on " +
                                           sgp_tag(*s));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pointlikes suites

inline LawResult oracle_k_monotonicity(int order) {
  LawResult r{"oracle-k-monotonicity", order};
  using K = Pseudovariety::Kind;
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    for (K kind : {K::Trivial, K::Aperiodic, K::JTrivial}) {
      Pseudovariety v{kind, 0};
      Complex prev = oracle_pointlikes(*s, v, 1).value;
      for (int k = 2; k <= 3; ++k) {
        Complex cur = oracle_pointlikes(*s, v, k).value;
        r.check(complex_le(cur, prev),
                pv_name(v) + " monotone at k=" + std::to_string(k) +
                    " on " + sgp_tag(*s));
        prev = std::move(cur);
      }
    }
  }
  return r;
}

inline LawResult lower_bound_soundness(int order) {
  LawResult r{"lower-bound-soundness", order};
  auto universe = universe_upto(std::min(order, 3));
  for (const auto& [name, mod] : builtin_moduli(2)) {
    for (const Semigroup* s : universe) {
      Complex fv = functor_value(*mod, *s);
      Complex comp = monad_completion(*mod, *s).value;
      std::vector<Elem> gens = greedy_generators(*s);
      for (const Semigroup* t : universe) {
        if (!points_member(*mod, *t)) continue;
        minimal_graphs(*s, *t, gens, [&](const RelMorphism& rho) {
          Complex nv = nerve(rho);
          r.check(complex_le(fv, nv) && complex_le(comp, nv),
                  name + " below nerve " + sgp_tag(*s) + " -> " +
                      sgp_tag(*t));
          return true;
        });
      }
    }
  }
  return r;
}

inline LawResult oracle_fixed_point_detection(int order) {
  LawResult r{"oracle-fixed-point-detection", order};
  using K = Pseudovariety::Kind;
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    for (K kind : {K::Trivial, K::Aperiodic, K::RTrivial, K::LTrivial,
                   K::JTrivial, K::Semilattices, K::Commutative}) {
      Pseudovariety v{kind, 0};
      if (!pv_member(v, *s)) continue;
      r.check(oracle_pointlikes(*s, v, 3).value == complex_bottom(*s),
              pv_name(v) + " member has singleton pointlikes: " +
                  sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult certificate_k_stability(int order) {
  LawResult r{"certificate-k-stability", order};
  using K = Pseudovariety::Kind;
  const std::vector<std::pair<Pseudovariety, ModulusPtr>> combos = {
      {{K::Aperiodic, 0}, mod_builtin(ModulusKind::Grp)},
      {{K::RTrivial, 0}, mod_builtin(ModulusKind::RCl)},
      {{K::LTrivial, 0}, mod_builtin(ModulusKind::LCl)},
      {{K::JTrivial, 0}, mod_builtin(ModulusKind::JCl)},
  };
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    for (const auto& [v, mod] : combos) {
      Certificate at2 = certify_exact(*s, v, mod, 2);
      if (!at2.exact) continue;
      Certificate at3 = certify_exact(*s, v, mod, 3);
      r.check(at3.exact && at3.upper.value == at2.upper.value,
              pv_name(v) + " certificate stable on " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult completion_below_oracle(int order) {
  LawResult r{"completion-below-oracle", order};
  std::map<std::pair<std::string, const Semigroup*>, Complex> oracle_cache;
  for (const auto& [name, mod] : builtin_moduli(2)) {
    std::optional<Pseudovariety> wired = wired_points(*mod);
    if (!wired) continue;
    for (const Semigroup* s : universe_upto(std::min(order, 3))) {
      auto key = std::make_pair(pv_name(*wired), s);
      auto it = oracle_cache.find(key);
      if (it == oracle_cache.end()) {
        it = oracle_cache
                 .emplace(key, oracle_pointlikes(*s, *wired, 3).value)
                 .first;
      }
      r.check(complex_le(monad_completion(*mod, *s).value, it->second),
              name + " below oracle on " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult known_pointlike_values(int order) {
  LawResult r{"known-pointlike-values", order};
  using K = Pseudovariety::Kind;
  Semigroup z2(2, {0, 1, 1, 0});
  Semigroup z3(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  for (const Semigroup* g : {&z2, &z3}) {
    Certificate cert = certify_exact(*g, {K::Aperiodic, 0},
                                     mod_builtin(ModulusKind::Grp), 3);
    r.check(cert.exact && cert.upper.value == complex_top(*g),
            "group pointlikes are the full power set: " + sgp_tag(*g));
  }
  const std::vector<std::pair<Pseudovariety, ModulusPtr>> combos = {
      {{K::Aperiodic, 0}, mod_builtin(ModulusKind::Grp)},
      {{K::RTrivial, 0}, mod_builtin(ModulusKind::RCl)},
      {{K::LTrivial, 0}, mod_builtin(ModulusKind::LCl)},
      {{K::JTrivial, 0}, mod_builtin(ModulusKind::JCl)},
  };
  for (const auto& [v, mod] : combos) {
    for (const Semigroup* s : universe_upto(std::min(order, 3))) {
      if (!pv_member(v, *s)) continue;
      Certificate cert = certify_exact(*s, v, mod, 3);
      r.check(cert.exact && cert.upper.value == complex_bottom(*s),
              pv_name(v) + " member certifies singleton: " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult reversal_transfer(int order) {
  LawResult r{"reversal-transfer", order};
  using K = Pseudovariety::Kind;
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    for (K kind : {K::Aperiodic, K::JTrivial, K::RTrivial, K::LTrivial}) {
      Pseudovariety v{kind, 0};
      r.check(reversal_transfer_check(*s, v, 3),
              pv_name(v) + " transfer on " + sgp_tag(*s));
    }
  }
  return r;
}

inline LawResult fptc_transfer(int order) {
  LawResult r{"fptc-transfer", order};
  const std::vector<std::pair<ContextPtr, ModulusPtr>> combos = {
      {ctx_builtin(ContextKind::Grp), mod_builtin(ModulusKind::Grp)},
      {ctx_builtin(ContextKind::Loc), mod_builtin(ModulusKind::JCl)},
      {ctx_builtin(ContextKind::EGen), mod_builtin(ModulusKind::Grp)},
  };
  for (const auto& [ctx, mod] : combos) {
    FptcReport report = fptc_check(ctx, mod, order);
    r.cases += report.checked;
    r.failures += report.counterexamples.size();
    for (const Semigroup& bad : report.counterexamples) {
      if (r.notes.size() < 5) {
        r.notes.push_back(context_to_string(*ctx) + " / " +
                          modulus_to_string(*mod) + " counterexample " +
                          sgp_tag(bad));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Serialization suite

inline LawResult io_roundtrip(int order) {
  LawResult r{"io-roundtrip", order};
  for (const Semigroup* s : universe_upto(std::min(order, 3))) {
    std::string canon = serialize_semigroup(*s);
    Semigroup back = parse_semigroup(canon);
    r.check(back == *s && serialize_semigroup(back) == canon,
            "sgp round trip for " + sgp_tag(*s));
  }
  Semigroup z2(2, {0, 1, 1, 0});
  Semigroup sl2(2, {0, 0, 0, 1});
  for (const RelMorphism& rho : all_relmorphs(z2, sl2)) {
    std::string canon = serialize_relmorph(rho);
    RelMorphism back = parse_relmorph(canon, z2, sl2);
    r.check(back.graph == rho.graph && serialize_relmorph(back) == canon,
            "rel round trip");
  }
  for (const char* expr :
       {"grp", "cycgrp", "rcl", "lcl", "jcl", "prinr", "prinl", "prinj",
        "prod:2", "suffix:3", "prefix:4", "e", "reg", "join(grp,e)",
        "restrict(jcl,ctx:loc)", "restrict(join(rcl,lcl),gen(e))",
        "epapprox:aperiodic:2", "ctx:egen"}) {
    r.check(modulus_to_string(*parse_modulus(expr)) == expr,
            std::string("expression round trip: ") + expr);
  }
  Complex k = functor_value(*mod_builtin(ModulusKind::Grp), z2);
  r.check(complex_json(k).dump() == complex_json(k).dump(),
          "deterministic complex payload");
  return r;
}

}  // namespace laws

inline const std::vector<LawSuite>& law_suites() {
  static const std::vector<LawSuite> suites = {
      {"quotient-morphisms",
       "congruence quotient projections are surjective morphisms", 3,
       laws::quotient_morphisms},
      {"green-h-refinement", "the H relation refines both R and L", 4,
       laws::green_h_refinement},
      {"group-elements-vs-subgroups",
       "group elements are exactly the union of all subgroups", 4,
       laws::group_elements_vs_subgroups},
      {"leftzero-rightzero-reversal",
       "left zero and right zero swap under reversal", 4,
       laws::leftzero_rightzero_reversal},
      {"pv-isomorphism-invariance",
       "membership predicates are relabeling invariant", 4,
       laws::pv_isomorphism_invariance},
      {"enumerator-canonical-unique",
       "enumerated tables are canonical, distinct, and complete", 3,
       laws::enumerator_canonical_unique},
      {"enumerator-vs-naive",
       "enumeration counts match a naive filter and published values", 3,
       laws::enumerator_vs_naive},
      {"generation-closure-laws",
       "complex generation is increasing, monotone, idempotent", 3,
       laws::generation_closure_laws},
      {"transport-adjunction",
       "pushforward is left adjoint to pullback", 3,
       laws::transport_adjunction},
      {"transport-adjoint-lattice-laws",
       "pullback preserves meets, pushforward preserves joins", 3,
       laws::transport_adjoint_lattice_laws},
      {"surjection-image-law",
       "pushforward along surjections is the closed image family", 3,
       laws::surjection_image_law},
      {"complex-lattice-invariants",
       "meets and joins are valid complexes and lattice bounds", 3,
       laws::complex_lattice_invariants},
      {"filtered-meet-chains",
       "chain meets are pointwise face intersections", 3,
       laws::filtered_meet_chains},
      {"nerve-monotonicity", "larger graphs have larger nerves", 3,
       laws::nerve_monotonicity},
      {"nerve-base-change",
       "nerves of precompositions are transport pullbacks", 3,
       laws::nerve_base_change},
      {"nerve-direct-sum-meet", "nerves send direct sums to meets", 3,
       laws::nerve_direct_sum_meet},
      {"nerve-product-tensor", "nerves send products to tensors", 3,
       laws::nerve_product_tensor},
      {"division-iff-singleton-nerve",
       "divisions are the graphs with singleton nerves", 3,
       laws::division_iff_singleton_nerve},
      {"composition-laws",
       "composition units, associativity, and morphism formulas", 3,
       laws::composition_laws},
      {"modulus-axiom-push",
       "modulus values push forward along morphisms", 3,
       laws::modulus_axiom_push},
      {"modulus-axiom-lift",
       "modulus values lift exactly along quotients", 3,
       laws::modulus_axiom_lift},
      {"context-axioms",
       "context values push along morphisms and lift along quotients", 3,
       laws::context_axioms},
      {"fix-vs-points",
       "the induced complex is trivial exactly on points", 4,
       laws::fix_vs_points},
      {"completion-vs-points",
       "the completion is trivial exactly on points", 4,
       laws::completion_vs_points},
      {"join-preservation", "the induced complex preserves joins", 3,
       laws::join_preservation},
      {"completion-closure-properties",
       "completion is increasing, monotone, and stable", 3,
       laws::completion_closure_properties},
      {"monad-union-law",
       "unions of face families stay inside the completion", 3,
       laws::monad_union_law},
      {"points-pseudovariety-closure",
       "points classes are closed under sub, quotient, product", 3,
       laws::points_pseudovariety_closure},
      {"point-identifications",
       "builtin points match their wired pseudovarieties", 4,
       laws::point_identifications},
      {"restriction-refinement", "restricted moduli refine the original", 3,
       laws::restriction_refinement},
      {"restriction-points-theorem",
       "points of restrictions match the context operator", 3,
       laws::restriction_points_theorem},
      {"oracle-k-monotonicity", "oracle values shrink as the bound grows", 3,
       laws::oracle_k_monotonicity},
      {"lower-bound-soundness",
       "functor values and completions sit below admissible nerves", 3,
       laws::lower_bound_soundness},
      {"oracle-fixed-point-detection",
       "members of the pseudovariety have singleton oracle values", 3,
       laws::oracle_fixed_point_detection},
      {"certificate-k-stability",
       "exact certificates survive larger codomain bounds", 3,
       laws::certificate_k_stability},
      {"completion-below-oracle",
       "completions sit below the oracle for wired points", 3,
       laws::completion_below_oracle},
      {"known-pointlike-values",
       "certified values for groups and pseudovariety members", 3,
       laws::known_pointlike_values},
      {"reversal-transfer", "pointlikes commute with reversal", 3,
       laws::reversal_transfer},
      {"fptc-transfer",
       "points of restrictions match context operators exhaustively", 4,
       laws::fptc_transfer},
      {"io-roundtrip", "parse and serialize are mutually inverse", 3,
       laws::io_roundtrip},
  };
  return suites;
}

inline LawResult run_law_suite(const LawSuite& suite, int order) {
  return suite.run(std::min(order, suite.max_order));
}

}  // namespace pointlike

#endif  // POINTLIKE_LAWS_HPP_
