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

// Relational morphisms between finite semigroups, represented by their
// graphs: product-closed pair sets whose domain projection is onto.  The
// module provides composition, direct sums, products and pullbacks, division
// testing, reversal, the nerve construction, and the bounded-graph streams
// used by the pointlikes oracle.

#ifndef POINTLIKE_RELMORPH_HPP_
#define POINTLIKE_RELMORPH_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/complex.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

using GraphPair = std::pair<Elem, Elem>;

struct RelMorphism {
  Semigroup dom;
  Semigroup cod;
  std::vector<GraphPair> graph;  // sorted, duplicate free

  bool has_pair(Elem s, Elem t) const {
    return std::binary_search(graph.begin(), graph.end(), GraphPair{s, t});
  }

  // (s)rho as a sorted element list.
  std::vector<Elem> image_of(Elem s) const {
    std::vector<Elem> out;
    for (const auto& [a, t] : graph) {
      if (a == s) out.push_back(t);
    }
    return out;
  }

  // (t)rho^{-1} as a sorted element list.
  std::vector<Elem> fiber_of(Elem t) const {
    std::vector<Elem> out;
    for (const auto& [s, b] : graph) {
      if (b == t) out.push_back(s);
    }
    return out;
  }
};

inline bool operator==(const RelMorphism& a, const RelMorphism& b) {
  return a.dom == b.dom && a.cod == b.cod && a.graph == b.graph;
}

inline std::vector<GraphPair> product_close_pairs(
    const Semigroup& s, const Semigroup& t, std::vector<GraphPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<char> seen(static_cast<std::size_t>(s.order()) * t.order(), 0);
  for (const auto& [a, b] : pairs) seen[a * t.order() + b] = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        Elem a = s.at(pairs[x].first, pairs[y].first);
        Elem b = t.at(pairs[x].second, pairs[y].second);
        if (!seen[a * t.order() + b]) {
          seen[a * t.order() + b] = 1;
          pairs.emplace_back(a, b);
        }
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// Build a relational morphism from a pair set.  With close=true the set is
// completed to its product closure first; otherwise closure is verified.
// Domain surjectivity is always verified.
inline RelMorphism make_relmorph(Semigroup dom, Semigroup cod,
                                 std::vector<GraphPair> pairs,
                                 bool close = false) {
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= dom.order() || b < 0 || b >= cod.order()) {
      throw Error(ErrorKind::InvalidTable, "graph pair out of range",
                  {a, b});
    }
  }
  if (close) {
    pairs = product_close_pairs(dom, cod, std::move(pairs));
  } else {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    auto has = [&](Elem a, Elem b) {
      return std::binary_search(pairs.begin(), pairs.end(),
                                GraphPair{a, b});
    };
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, d] : pairs) {
        if (!has(dom.at(a, c), cod.at(b, d))) {
          throw Error(ErrorKind::NotProductClosed,
                      "graph not closed under products",
                      {a, b, c, d});
        }
      }
    }
  }
  std::vector<char> covered(dom.order(), 0);
  for (const auto& [a, b] : pairs) covered[a] = 1;
  for (Elem a = 0; a < dom.order(); ++a) {
    if (!covered[a]) {
      throw Error(ErrorKind::NotSurjectiveOntoDomain,
                  "element " + std::to_string(a) + " relates to nothing",
                  {a});
    }
  }
  return RelMorphism{std::move(dom), std::move(cod), std::move(pairs)};
}

inline RelMorphism from_morphism(const Morphism& phi) {
  std::vector<GraphPair> pairs;
  pairs.reserve(phi.dom.order());
  for (Elem a = 0; a < phi.dom.order(); ++a) pairs.emplace_back(a, phi.map[a]);
  return RelMorphism{phi.dom, phi.cod, std::move(pairs)};
}

inline RelMorphism rel_identity(const Semigroup& s) {
  return from_morphism(identity_morphism(s));
}

// S relates fully to the one-point semigroup.
inline RelMorphism terminal_rel(const Semigroup& s) {
  Semigroup one(1, {0});
  std::vector<GraphPair> pairs;
  for (Elem a = 0; a < s.order(); ++a) pairs.emplace_back(a, 0);
  return RelMorphism{s, std::move(one), std::move(pairs)};
}

// Relational composition: relate s to u when some t witnesses both halves.
inline RelMorphism compose_rel(const RelMorphism& r1, const RelMorphism& r2) {
  if (r1.cod != r2.dom) {
    throw Error(ErrorKind::CodDomMismatch,
                "cannot compose: codomain differs from next domain");
  }
  std::vector<GraphPair> pairs;
  for (const auto& [s, t] : r1.graph) {
    for (const auto& [t2, u] : r2.graph) {
      if (t == t2) pairs.emplace_back(s, u);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  RelMorphism out{r1.dom, r2.cod, std::move(pairs)};
  assert([&] {
    make_relmorph(out.dom, out.cod, out.graph);
    return true;
  }());
  return out;
}

// Common-domain pairing into the product codomain.
inline RelMorphism direct_sum(const RelMorphism& r1, const RelMorphism& r2) {
  if (r1.dom != r2.dom) {
    throw Error(ErrorKind::DomMismatch, "direct sum needs a shared domain");
  }
  Semigroup cod = direct_product(r1.cod, r2.cod);
  int n2 = r2.cod.order();
  std::vector<GraphPair> pairs;
  for (const auto& [s, t1] : r1.graph) {
    for (const auto& [s2, t2] : r2.graph) {
      if (s == s2) pairs.emplace_back(s, t1 * n2 + t2);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return RelMorphism{r1.dom, std::move(cod), std::move(pairs)};
}

inline RelMorphism rel_product(const RelMorphism& r1, const RelMorphism& r2) {
  Semigroup dom = direct_product(r1.dom, r2.dom);
  Semigroup cod = direct_product(r1.cod, r2.cod);
  int s2 = r2.dom.order();
  int t2 = r2.cod.order();
  std::vector<GraphPair> pairs;
  for (const auto& [a1, b1] : r1.graph) {
    for (const auto& [a2, b2] : r2.graph) {
      pairs.emplace_back(a1 * s2 + a2, b1 * t2 + b2);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return RelMorphism{std::move(dom), std::move(cod), std::move(pairs)};
}

// An arrow between relational morphisms: a morphism on domains and one on
// codomains that jointly map graph into graph.
struct RelArrow {
  Morphism on_dom;
  Morphism on_cod;
};

inline void require_rel_arrow(const RelMorphism& src, const RelMorphism& dst,
                              const RelArrow& arrow) {
  if (arrow.on_dom.dom != src.dom || arrow.on_cod.dom != src.cod ||
      arrow.on_dom.cod != dst.dom || arrow.on_cod.cod != dst.cod) {
    throw Error(ErrorKind::DomMismatch,
                "arrow legs do not match the relational morphisms");
  }
  for (const auto& [s, t] : src.graph) {
    if (!dst.has_pair(arrow.on_dom.map[s], arrow.on_cod.map[t])) {
      throw Error(ErrorKind::MorphismConditionViolated,
                  "arrow does not map graph into graph",
                  {s, t, arrow.on_dom.map[s], arrow.on_cod.map[t]});
    }
  }
}

// Cospan data for pullbacks of relational morphisms: arrows from each
// operand into a common relational morphism mu.
struct RelCospan {
  RelMorphism mu;
  RelArrow a1;
  RelArrow a2;
};

// Pullback apex: restrict the product graph to the pairs whose domain halves
// equalize in mu's domain and codomain halves equalize in mu's codomain.
// Degenerate cospans can leave a domain element with no partner; that case
// is rejected rather than silently shrinking the domain.
inline RelMorphism rel_pullback(const RelMorphism& r1, const RelMorphism& r2,
                                const RelCospan& cospan) {
  require_rel_arrow(r1, cospan.mu, cospan.a1);
  require_rel_arrow(r2, cospan.mu, cospan.a2);
  const Morphism& phi1 = cospan.a1.on_dom;
  const Morphism& phi2 = cospan.a2.on_dom;
  const Morphism& psi1 = cospan.a1.on_cod;
  const Morphism& psi2 = cospan.a2.on_cod;
  int s2 = r2.dom.order();
  int t2 = r2.cod.order();
  Semigroup sprod = direct_product(r1.dom, r2.dom);
  Semigroup tprod = direct_product(r1.cod, r2.cod);
  std::vector<Elem> dom_fiber;
  for (Elem a1 = 0; a1 < r1.dom.order(); ++a1) {
    for (Elem a2 = 0; a2 < s2; ++a2) {
      if (phi1.map[a1] == phi2.map[a2]) dom_fiber.push_back(a1 * s2 + a2);
    }
  }
  std::vector<Elem> cod_fiber;
  for (Elem b1 = 0; b1 < r1.cod.order(); ++b1) {
    for (Elem b2 = 0; b2 < t2; ++b2) {
      if (psi1.map[b1] == psi2.map[b2]) cod_fiber.push_back(b1 * t2 + b2);
    }
  }
  if (dom_fiber.empty() || cod_fiber.empty()) {
    throw Error(ErrorKind::EmptyOperand, "empty fiber in pullback cospan");
  }
  MaterializedSub dsub = materialize_subsemigroup(sprod, dom_fiber);
  MaterializedSub csub = materialize_subsemigroup(tprod, cod_fiber);
  std::vector<GraphPair> pairs;
  for (std::size_t i = 0; i < dom_fiber.size(); ++i) {
    Elem a1 = dom_fiber[i] / s2, a2 = dom_fiber[i] % s2;
    for (std::size_t j = 0; j < cod_fiber.size(); ++j) {
      Elem b1 = cod_fiber[j] / t2, b2 = cod_fiber[j] % t2;
      if (r1.has_pair(a1, b1) && r2.has_pair(a2, b2)) {
        pairs.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
      }
    }
  }
  return make_relmorph(dsub.sub, csub.sub, std::move(pairs));
}

inline RelMorphism rel_product_pullback(const RelMorphism& r1,
                                        const RelMorphism& r2,
                                        const RelCospan* fiber = nullptr) {
  if (fiber == nullptr) return rel_product(r1, r2);
  return rel_pullback(r1, r2, *fiber);
}

// The nerve: faces are the nonempty subsets whose members share a common
// relative, equivalently the downward closure of the graph fibers.  Both
// descriptions are computed in debug builds and must agree.
inline Complex nerve(const RelMorphism& rho) {
  require_complex_base(rho.dom);
  std::vector<Mask> fibers;
  for (Elem t = 0; t < rho.cod.order(); ++t) {
    Mask f = 0;
    for (const auto& [s, b] : rho.graph) {
      if (b == t) f |= Mask{1} << s;
    }
    if (f != 0) fibers.push_back(f);
  }
  Complex out(rho.dom, downward_close(rho.dom, fibers));
  assert([&] {
    std::vector<Mask> direct;
    for (Mask m = 1; m <= full_mask(rho.dom); ++m) {
      bool shared = false;
      for (Elem t = 0; t < rho.cod.order() && !shared; ++t) {
        bool all = true;
        for (Elem s = 0; s < rho.dom.order() && all; ++s) {
          if ((m & (Mask{1} << s)) && !rho.has_pair(s, t)) all = false;
        }
        shared = all;
      }
      if (shared) direct.push_back(m);
    }
    return direct == out.faces();
  }());
  assert(complex_invariants_hold(out));
  return out;
}

// Division test: no codomain element may represent two domain elements.
inline bool is_division(const RelMorphism& rho) {
  for (const auto& [s1, t1] : rho.graph) {
    for (const auto& [s2, t2] : rho.graph) {
      if (t1 == t2 && s1 != s2) return false;
    }
  }
  return true;
}

inline RelMorphism reverse_rel(const RelMorphism& rho) {
  return RelMorphism{reverse(rho.dom), reverse(rho.cod), rho.graph};
}

// Small generating set picked greedily by closure gain.
inline std::vector<Elem> greedy_generators(const Semigroup& s) {
  std::vector<Elem> gens;
  std::vector<Elem> closed;
  while (static_cast<int>(closed.size()) < s.order()) {
    Elem best = -1;
    std::size_t best_size = closed.size();
    for (Elem x = 0; x < s.order(); ++x) {
      if (std::binary_search(closed.begin(), closed.end(), x)) continue;
      std::vector<Elem> trial = gens;
      trial.push_back(x);
      std::size_t sz = generate_subsemigroup(s, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    assert(best >= 0);
    gens.push_back(best);
    closed = generate_subsemigroup(s, gens);
  }
  return gens;
}

inline std::uint64_t minimal_graphs_count(const Semigroup& t,
                                          const std::vector<Elem>& gens) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    count *= static_cast<std::uint64_t>(t.order());
  }
  return count;
}

// Streams the |T|^|gens| relational morphisms generated by one pair per
// generator.  Every relational morphism S to T contains one of these as a
// subgraph, so by nerve monotonicity the stream reaches the minimum nerve.
// The visitor returns false to stop early; the return value reports whether
// the stream was exhausted.
inline bool minimal_graphs(
    const Semigroup& s, const Semigroup& t, const std::vector<Elem>& gens,
    const std::function<bool(const RelMorphism&)>& visit) {
  if (static_cast<int>(generate_subsemigroup(s, gens).size()) != s.order()) {
    throw Error(ErrorKind::NotGenerating,
                "given set does not generate the domain");
  }
  std::vector<Elem> choice(gens.size(), 0);
  while (true) {
    std::vector<GraphPair> seed;
    seed.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      seed.emplace_back(gens[i], choice[i]);
    }
    RelMorphism rho{s, t, product_close_pairs(s, t, std::move(seed))};
    if (!visit(rho)) return false;
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == t.order()) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) return true;
  }
}

}  // namespace pointlike

#endif  // POINTLIKE_RELMORPH_HPP_
