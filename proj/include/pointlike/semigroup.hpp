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

// Finite semigroups as dense multiplication tables, with the structural
// queries everything else is built from: Green's relations, idempotents,
// subgroups, congruences, pseudovariety membership, and small constructions
// (products, reversal, identity adjunction, subsemigroup materialization).
//
// Elements are indices 0..n-1.  Composition is written left to right: the
// product of x by y is table[x][y], and morphisms act on the right, (x)phi.

#ifndef POINTLIKE_SEMIGROUP_HPP_
#define POINTLIKE_SEMIGROUP_HPP_

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/errors.hpp"

namespace pointlike {

using Elem = int;

// Size limits.  These guard brute-force loops; every violation raises
// ErrorKind::SizeCap rather than silently degrading.
inline constexpr int kMaxProductOrder = 4096;
inline constexpr int kMaxCongruenceOrder = 6;
inline constexpr int kMaxEnumerationOrder = 5;
inline constexpr int kMaxSubgroupUniverse = 22;

class Semigroup {
 public:
  Semigroup() = default;  // the empty semigroup

  // Validates shape, entry range, and associativity.  The associativity
  // witness is the lexicographically first failing triple (i, j, k).
  Semigroup(int order, std::vector<Elem> table) : order_(order) {
    if (order < 0 ||
        table.size() != static_cast<std::size_t>(order) * order) {
      throw Error(ErrorKind::InvalidTable, "table is not order x order");
    }
    for (Elem v : table) {
      if (v < 0 || v >= order) {
        throw Error(ErrorKind::InvalidTable, "table entry out of range",
                    {v, order});
      }
    }
    table_ = std::move(table);
    for (Elem i = 0; i < order; ++i) {
      for (Elem j = 0; j < order; ++j) {
        for (Elem k = 0; k < order; ++k) {
          if (at(at(i, j), k) != at(i, at(j, k))) {
            throw Error(ErrorKind::NonAssociative,
                        "(" + std::to_string(i) + "*" + std::to_string(j) +
                            ")*" + std::to_string(k) + " != " +
                            std::to_string(i) + "*(" + std::to_string(j) +
                            "*" + std::to_string(k) + ")",
                        {i, j, k});
          }
        }
      }
    }
  }

  static Semigroup from_rows(const std::vector<std::vector<Elem>>& rows) {
    std::vector<Elem> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) {
        throw Error(ErrorKind::InvalidTable, "ragged row");
      }
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Semigroup(static_cast<int>(rows.size()), std::move(flat));
  }

  int order() const noexcept { return order_; }
  Elem at(Elem a, Elem b) const { return table_[a * order_ + b]; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() &&
        labels.size() != static_cast<std::size_t>(order_)) {
      throw Error(ErrorKind::InvalidTable, "label count != order");
    }
    labels_ = std::move(labels);
  }

  // x^m for m >= 1.
  Elem pow(Elem x, long long m) const {
    Elem acc = x;
    for (long long i = 1; i < m; ++i) acc = at(acc, x);
    return acc;
  }

  // Identity comparison is by table; labels are presentation only.
  friend bool operator==(const Semigroup& a, const Semigroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }
  friend bool operator!=(const Semigroup& a, const Semigroup& b) {
    return !(a == b);
  }

 private:
  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
};

struct Morphism {
  Semigroup dom;
  Semigroup cod;
  std::vector<Elem> map;  // (x)phi = map[x]

  Elem operator()(Elem x) const { return map[x]; }

  bool surjective() const {
    std::vector<char> hit(cod.order(), 0);
    for (Elem v : map) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }
  bool injective() const {
    std::vector<char> hit(cod.order(), 0);
    for (Elem v : map) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }
};

// Checks the homomorphism condition; the witness is the first failing pair.
inline Morphism make_morphism(Semigroup dom, Semigroup cod,
                              std::vector<Elem> map) {
  if (map.size() != static_cast<std::size_t>(dom.order())) {
    throw Error(ErrorKind::MorphismConditionViolated, "map length != order");
  }
  for (Elem v : map) {
    if (v < 0 || v >= cod.order()) {
      throw Error(ErrorKind::MorphismConditionViolated,
                  "image out of range", {v});
    }
  }
  for (Elem i = 0; i < dom.order(); ++i) {
    for (Elem j = 0; j < dom.order(); ++j) {
      if (map[dom.at(i, j)] != cod.at(map[i], map[j])) {
        throw Error(ErrorKind::MorphismConditionViolated,
                    "(i*j)phi != (i)phi * (j)phi at i=" + std::to_string(i) +
                        " j=" + std::to_string(j),
                    {i, j});
      }
    }
  }
  return Morphism{std::move(dom), std::move(cod), std::move(map)};
}

inline Morphism identity_morphism(const Semigroup& s) {
  std::vector<Elem> id(s.order());
  std::iota(id.begin(), id.end(), 0);
  return Morphism{s, s, std::move(id)};
}

// ---------------------------------------------------------------------------
// Constructions

// Componentwise product; pair (i, j) is encoded as i * |T| + j.
inline Semigroup direct_product(const Semigroup& s, const Semigroup& t) {
  long long n = static_cast<long long>(s.order()) * t.order();
  if (n > kMaxProductOrder) {
    throw Error(ErrorKind::SizeCap, "product order " + std::to_string(n) +
                                        " exceeds cap " +
                                        std::to_string(kMaxProductOrder));
  }
  std::vector<Elem> table(n * n);
  int to = t.order();
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < to; ++b) {
      for (Elem c = 0; c < s.order(); ++c) {
        for (Elem d = 0; d < to; ++d) {
          table[(a * to + b) * n + (c * to + d)] =
              s.at(a, c) * to + t.at(b, d);
        }
      }
    }
  }
  Semigroup p(static_cast<int>(n), std::move(table));
  if (!s.labels().empty() || !t.labels().empty()) {
    std::vector<std::string> lab;
    lab.reserve(n);
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem b = 0; b < to; ++b) {
        std::string la =
            s.labels().empty() ? std::to_string(a) : s.labels()[a];
        std::string lb =
            t.labels().empty() ? std::to_string(b) : t.labels()[b];
        lab.push_back("(" + la + "," + lb + ")");
      }
    }
    p.set_labels(std::move(lab));
  }
  return p;
}

inline std::pair<Morphism, Morphism> product_projections(
    const Semigroup& s, const Semigroup& t, const Semigroup& product) {
  std::vector<Elem> p1, p2;
  p1.reserve(product.order());
  p2.reserve(product.order());
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < t.order(); ++b) {
      p1.push_back(a);
      p2.push_back(b);
    }
  }
  return {make_morphism(product, s, std::move(p1)),
          make_morphism(product, t, std::move(p2))};
}

// Opposite semigroup: table'[i][j] = table[j][i].
inline Semigroup reverse(const Semigroup& s) {
  int n = s.order();
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) table[i * n + j] = s.at(j, i);
  }
  Semigroup r(n, std::move(table));
  r.set_labels(s.labels());
  return r;
}

// Unconditionally adjoins a new identity element at index |S|.
inline Semigroup adjoin_identity(const Semigroup& s) {
  int n = s.order();
  int m = n + 1;
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) table[i * m + j] = s.at(i, j);
    table[i * m + n] = i;
    table[n * m + i] = i;
  }
  table[n * m + n] = n;
  return Semigroup(m, std::move(table));
}

// ---------------------------------------------------------------------------
// Subsets and generation.  Subsets are sorted element lists here; the
// complexes layer switches to bitmasks once base orders are capped.

inline std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Smallest product-closed superset of seed.
inline std::vector<Elem> generate_subsemigroup(const Semigroup& s,
                                               const std::vector<Elem>& seed) {
  std::vector<char> in(s.order(), 0);
  std::vector<Elem> work;
  for (Elem x : seed) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem p : {s.at(work[i], work[j]), s.at(work[j], work[i])}) {
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
      }
    }
  }
  return sorted_unique(std::move(work));
}

inline bool is_product_closed(const Semigroup& s,
                              const std::vector<Elem>& elems) {
  std::vector<char> in(s.order(), 0);
  for (Elem x : elems) in[x] = 1;
  for (Elem x : elems) {
    for (Elem y : elems) {
      if (!in[s.at(x, y)]) return false;
    }
  }
  return true;
}

// A subsemigroup re-indexed as a standalone Semigroup, with the index map
// back to the parent (sub element i corresponds to parent_of[i]).
struct MaterializedSub {
  Semigroup sub;
  std::vector<Elem> parent_of;

  Elem index_of(Elem parent_elem) const {
    auto it = std::lower_bound(parent_of.begin(), parent_of.end(),
                               parent_elem);
    assert(it != parent_of.end() && *it == parent_elem);
    return static_cast<Elem>(it - parent_of.begin());
  }
};

inline MaterializedSub materialize_subsemigroup(const Semigroup& s,
                                                std::vector<Elem> elems) {
  elems = sorted_unique(std::move(elems));
  if (!is_product_closed(s, elems)) {
    throw Error(ErrorKind::NotProductClosed,
                "element set is not a subsemigroup");
  }
  int m = static_cast<int>(elems.size());
  std::vector<Elem> index(s.order(), -1);
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[i * m + j] = index[s.at(elems[i], elems[j])];
    }
  }
  Semigroup sub(m, std::move(table));
  if (!s.labels().empty()) {
    std::vector<std::string> lab;
    for (Elem e : elems) lab.push_back(s.labels()[e]);
    sub.set_labels(std::move(lab));
  }
  return MaterializedSub{std::move(sub), std::move(elems)};
}

// ---------------------------------------------------------------------------
// Green's relations

enum class GreenRelation { R, L, J, H };

struct Partition {
  std::vector<int> class_of;               // element -> class index
  std::vector<std::vector<Elem>> classes;  // each sorted; ordered by minimum

  bool all_singletons() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const auto& c) { return c.size() == 1; });
  }
};

namespace detail {

inline Partition partition_from_class_of(std::vector<int> raw) {
  // Renumber classes by first occurrence so output order is canonical.
  Partition p;
  p.class_of.assign(raw.size(), -1);
  std::vector<int> renum(raw.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (renum[raw[i]] < 0) {
      renum[raw[i]] = next++;
      p.classes.emplace_back();
    }
    p.class_of[i] = renum[raw[i]];
    p.classes[p.class_of[i]].push_back(static_cast<Elem>(i));
  }
  return p;
}

// Key = characteristic vector of the principal ideal of x.
inline std::vector<int> classes_by_ideal(
    const Semigroup& s,
    const std::function<std::vector<char>(Elem)>& ideal_of) {
  std::map<std::vector<char>, int> seen;
  std::vector<int> raw(s.order(), -1);
  for (Elem x = 0; x < s.order(); ++x) {
    auto [it, fresh] = seen.emplace(ideal_of(x), static_cast<int>(seen.size()));
    (void)fresh;
    raw[x] = it->second;
  }
  return raw;
}

}  // namespace detail

// R-classes by equality of x S^I, L-classes by S^I x, J-classes by
// S^I x S^I, and H as the common refinement of R and L.
inline Partition green_partition(const Semigroup& s, GreenRelation rel) {
  int n = s.order();
  auto right_ideal = [&s, n](Elem x) {
    std::vector<char> in(n, 0);
    in[x] = 1;
    for (Elem y = 0; y < n; ++y) in[s.at(x, y)] = 1;
    return in;
  };
  auto left_ideal = [&s, n](Elem x) {
    std::vector<char> in(n, 0);
    in[x] = 1;
    for (Elem y = 0; y < n; ++y) in[s.at(y, x)] = 1;
    return in;
  };
  auto two_sided_ideal = [&s, n, right_ideal, left_ideal](Elem x) {
    std::vector<char> in = right_ideal(x);
    std::vector<char> l = left_ideal(x);
    for (int i = 0; i < n; ++i) in[i] = in[i] | l[i];
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) in[s.at(s.at(a, x), b)] = 1;
    }
    return in;
  };
  switch (rel) {
    case GreenRelation::R:
      return detail::partition_from_class_of(
          detail::classes_by_ideal(s, right_ideal));
    case GreenRelation::L:
      return detail::partition_from_class_of(
          detail::classes_by_ideal(s, left_ideal));
    case GreenRelation::J:
      return detail::partition_from_class_of(
          detail::classes_by_ideal(s, two_sided_ideal));
    case GreenRelation::H: {
      Partition r = green_partition(s, GreenRelation::R);
      Partition l = green_partition(s, GreenRelation::L);
      std::vector<int> raw(n, -1);
      std::map<std::pair<int, int>, int> seen;
      for (Elem x = 0; x < n; ++x) {
        auto key = std::make_pair(r.class_of[x], l.class_of[x]);
        auto [it, fresh] = seen.emplace(key, static_cast<int>(seen.size()));
        (void)fresh;
        raw[x] = it->second;
      }
      return detail::partition_from_class_of(std::move(raw));
    }
  }
  throw Error(ErrorKind::InvalidTable, "unknown Green relation");
}

// ---------------------------------------------------------------------------
// Element sets

enum class ElementSetKind { Idempotents, Regular, GroupElements };

inline std::vector<Elem> element_sets(const Semigroup& s, ElementSetKind k) {
  std::vector<Elem> out;
  int n = s.order();
  switch (k) {
    case ElementSetKind::Idempotents:
      for (Elem x = 0; x < n; ++x) {
        if (s.at(x, x) == x) out.push_back(x);
      }
      break;
    case ElementSetKind::Regular:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (s.at(s.at(x, y), x) == x) {
            out.push_back(x);
            break;
          }
        }
      }
      break;
    case ElementSetKind::GroupElements: {
      // x lies in a subgroup iff x H x^2.
      Partition h = green_partition(s, GreenRelation::H);
      for (Elem x = 0; x < n; ++x) {
        if (h.class_of[x] == h.class_of[s.at(x, x)]) out.push_back(x);
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Special subsemigroups

enum class SubsemigroupKind {
  Subgroups,
  CyclicSubgroups,
  LocalMonoids,
  IdempotentGenerated,
  RegularGenerated,
};

// Does the subset form a group under the induced operation?
inline bool subset_is_group(const Semigroup& s, const std::vector<Elem>& x) {
  if (x.empty()) return false;
  Elem e = -1;
  for (Elem cand : x) {
    bool ok = true;
    for (Elem y : x) {
      if (s.at(cand, y) != y || s.at(y, cand) != y) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) return false;
  for (Elem y : x) {
    bool inv = false;
    for (Elem z : x) {
      if (s.at(y, z) == e && s.at(z, y) == e) {
        inv = true;
        break;
      }
    }
    if (!inv) return false;
  }
  return true;
}

inline std::vector<std::vector<Elem>> special_subsemigroups(
    const Semigroup& s, SubsemigroupKind kind) {
  std::vector<std::vector<Elem>> out;
  switch (kind) {
    case SubsemigroupKind::Subgroups: {
      // Brute filter of product-closed subsets for the group axioms.  Every
      // subgroup consists of group elements, so the search universe shrinks
      // to those without losing any subgroup.
      std::vector<Elem> ge = element_sets(s, ElementSetKind::GroupElements);
      int m = static_cast<int>(ge.size());
      if (m > kMaxSubgroupUniverse) {
        throw Error(ErrorKind::SizeCap,
                    "subgroup search over " + std::to_string(m) +
                        " group elements exceeds cap " +
                        std::to_string(kMaxSubgroupUniverse));
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Elem> sub;
        for (int i = 0; i < m; ++i) {
          if (mask & (std::uint64_t{1} << i)) sub.push_back(ge[i]);
        }
        if (is_product_closed(s, sub) && subset_is_group(s, sub)) {
          out.push_back(std::move(sub));
        }
      }
      break;
    }
    case SubsemigroupKind::CyclicSubgroups: {
      for (Elem g : element_sets(s, ElementSetKind::GroupElements)) {
        out.push_back(generate_subsemigroup(s, {g}));
      }
      break;
    }
    case SubsemigroupKind::LocalMonoids: {
      for (Elem e : element_sets(s, ElementSetKind::Idempotents)) {
        std::vector<Elem> loc;
        for (Elem x = 0; x < s.order(); ++x) {
          loc.push_back(s.at(s.at(e, x), e));
        }
        out.push_back(sorted_unique(std::move(loc)));
      }
      break;
    }
    case SubsemigroupKind::IdempotentGenerated: {
      std::vector<Elem> e = element_sets(s, ElementSetKind::Idempotents);
      if (!e.empty()) out.push_back(generate_subsemigroup(s, e));
      break;
    }
    case SubsemigroupKind::RegularGenerated: {
      std::vector<Elem> r = element_sets(s, ElementSetKind::Regular);
      if (!r.empty()) out.push_back(generate_subsemigroup(s, r));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Congruences

struct Congruence {
  std::vector<int> block_of;  // element -> block index (first-occurrence order)
  Semigroup quotient;
  Morphism projection;
};

// All congruences, via set-partition enumeration filtered for compatibility.
inline std::vector<Congruence> congruences_and_quotients(const Semigroup& s) {
  int n = s.order();
  if (n > kMaxCongruenceOrder) {
    throw Error(ErrorKind::SizeCap,
                "congruence search capped at order " +
                    std::to_string(kMaxCongruenceOrder));
  }
  std::vector<Congruence> out;
  std::vector<int> block(n, 0);
  auto compatible = [&]() {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (block[x] != block[y]) continue;
        for (Elem z = 0; z < n; ++z) {
          if (block[s.at(x, z)] != block[s.at(y, z)]) return false;
          if (block[s.at(z, x)] != block[s.at(z, y)]) return false;
        }
      }
    }
    return true;
  };
  auto emit = [&]() {
    if (!compatible()) return;
    int k = n == 0 ? 0 : 1 + *std::max_element(block.begin(), block.end());
    std::vector<Elem> rep(k, -1);
    for (Elem x = 0; x < n; ++x) {
      if (rep[block[x]] < 0) rep[block[x]] = x;
    }
    std::vector<Elem> qtable(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        qtable[a * k + b] = block[s.at(rep[a], rep[b])];
      }
    }
    // Compatibility makes the quotient well defined, hence associative.
    Semigroup q(k, std::move(qtable));
    std::vector<Elem> proj(block.begin(), block.end());
    out.push_back(Congruence{block, q, make_morphism(s, q, std::move(proj))});
  };
  // Restricted growth strings enumerate set partitions exactly once.
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0) {
    emit();
  } else {
    block[0] = 0;
    rec(1, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pseudovariety membership

struct Pseudovariety {
  enum class Kind {
    Trivial,
    Groups,
    Aperiodic,
    RTrivial,
    LTrivial,
    JTrivial,
    Semilattices,
    Bands,
    Commutative,
    Nilpotent,
    NilpotentK,
    DelayK,
    ReverseDelayK,
    LeftZero,
    RightZero,
    LocallyTrivial,
    UniqueIdempotent,
  };

  Kind kind = Kind::Trivial;
  int k = 0;  // >= 1 for NilpotentK / DelayK / ReverseDelayK

  friend bool operator==(const Pseudovariety& a, const Pseudovariety& b) {
    return a.kind == b.kind && a.k == b.k;
  }
};

// Mirror class: left/right-sensitive kinds swap, everything else is fixed.
inline Pseudovariety reverse_pseudovariety(Pseudovariety v) {
  using K = Pseudovariety::Kind;
  switch (v.kind) {
    case K::RTrivial: v.kind = K::LTrivial; break;
    case K::LTrivial: v.kind = K::RTrivial; break;
    case K::LeftZero: v.kind = K::RightZero; break;
    case K::RightZero: v.kind = K::LeftZero; break;
    case K::DelayK: v.kind = K::ReverseDelayK; break;
    case K::ReverseDelayK: v.kind = K::DelayK; break;
    default: break;
  }
  return v;
}

// The set of all products of exactly k factors.  The chain S ⊇ S^2 ⊇ ... is
// decreasing, so iteration stops early at the first repeat.
inline std::vector<Elem> length_k_products(const Semigroup& s, long long k) {
  assert(k >= 1);
  std::vector<Elem> cur(s.order());
  std::iota(cur.begin(), cur.end(), 0);
  for (long long step = 1; step < k; ++step) {
    std::vector<char> in(s.order(), 0);
    for (Elem x : cur) {
      for (Elem y = 0; y < s.order(); ++y) in[s.at(x, y)] = 1;
    }
    std::vector<Elem> next;
    for (Elem x = 0; x < s.order(); ++x) {
      if (in[x]) next.push_back(x);
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

inline bool pv_member(const Pseudovariety& v, const Semigroup& s) {
  using K = Pseudovariety::Kind;
  int n = s.order();
  if (n == 0) return true;  // the empty semigroup lies in every pseudovariety
  switch (v.kind) {
    case K::Trivial:
      return n <= 1;
    case K::Groups: {
      Elem e = -1;
      for (Elem cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (Elem x = 0; x < n; ++x) {
          if (s.at(cand, x) != x || s.at(x, cand) != x) {
            ok = false;
            break;
          }
        }
        if (ok) {
          e = cand;
          break;
        }
      }
      if (e < 0) return false;
      for (Elem x = 0; x < n; ++x) {
        bool inv = false;
        for (Elem y = 0; y < n; ++y) {
          if (s.at(x, y) == e && s.at(y, x) == e) {
            inv = true;
            break;
          }
        }
        if (!inv) return false;
      }
      return true;
    }
    case K::Aperiodic:
      for (Elem x = 0; x < n; ++x) {
        if (s.pow(x, n) != s.pow(x, n + 1)) return false;
      }
      return true;
    case K::RTrivial:
      return green_partition(s, GreenRelation::R).all_singletons();
    case K::LTrivial:
      return green_partition(s, GreenRelation::L).all_singletons();
    case K::JTrivial:
      return green_partition(s, GreenRelation::J).all_singletons();
    case K::Semilattices:
      return pv_member({K::Bands, 0}, s) && pv_member({K::Commutative, 0}, s);
    case K::Bands:
      for (Elem x = 0; x < n; ++x) {
        if (s.at(x, x) != x) return false;
      }
      return true;
    case K::Commutative:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < x; ++y) {
          if (s.at(x, y) != s.at(y, x)) return false;
        }
      }
      return true;
    case K::Nilpotent: {
      // Unique idempotent which is a zero.
      auto e = element_sets(s, ElementSetKind::Idempotents);
      if (e.size() != 1) return false;
      Elem z = e[0];
      for (Elem x = 0; x < n; ++x) {
        if (s.at(z, x) != z || s.at(x, z) != z) return false;
      }
      return true;
    }
    case K::NilpotentK:
      return length_k_products(s, v.k).size() <= 1;
    case K::DelayK: {
      for (Elem p : length_k_products(s, v.k)) {
        for (Elem y = 0; y < n; ++y) {
          if (s.at(y, p) != p) return false;
        }
      }
      return true;
    }
    case K::ReverseDelayK: {
      for (Elem p : length_k_products(s, v.k)) {
        for (Elem y = 0; y < n; ++y) {
          if (s.at(p, y) != p) return false;
        }
      }
      return true;
    }
    case K::LeftZero:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (s.at(x, y) != x) return false;
        }
      }
      return true;
    case K::RightZero:
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (s.at(x, y) != y) return false;
        }
      }
      return true;
    case K::LocallyTrivial:
      for (Elem e : element_sets(s, ElementSetKind::Idempotents)) {
        for (Elem x = 0; x < n; ++x) {
          if (s.at(s.at(e, x), e) != e) return false;
        }
      }
      return true;
    case K::UniqueIdempotent:
      return element_sets(s, ElementSetKind::Idempotents).size() == 1;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Morphism enumeration (test universes and axiom suites)

inline std::vector<Morphism> all_morphisms(const Semigroup& s,
                                           const Semigroup& t) {
  std::vector<Morphism> out;
  if (s.order() == 0) {
    out.push_back(Morphism{s, t, {}});
    return out;
  }
  if (t.order() == 0) return out;  // nothing maps a nonempty S into ∅
  double total = std::pow(static_cast<double>(t.order()), s.order());
  if (total > 2e7) {
    throw Error(ErrorKind::SizeCap, "morphism enumeration too large");
  }
  std::vector<Elem> map(s.order(), 0);
  while (true) {
    bool ok = true;
    for (Elem i = 0; ok && i < s.order(); ++i) {
      for (Elem j = 0; j < s.order(); ++j) {
        if (map[s.at(i, j)] != t.at(map[i], map[j])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(Morphism{s, t, map});
    int pos = s.order() - 1;
    while (pos >= 0 && map[pos] == t.order() - 1) map[pos--] = 0;
    if (pos < 0) break;
    ++map[pos];
  }
  return out;
}

}  // namespace pointlike

#endif  // POINTLIKE_SEMIGROUP_HPP_
