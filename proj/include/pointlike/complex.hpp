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

// Semigroup complexes: families of nonempty subsets of a base semigroup that
// contain all singletons, are closed under nonempty subsets, and are closed
// under setwise products.  This module provides the generation closure, the
// lattice structure (meet, join, top, bottom), transport along morphisms
// (a Galois connection), and tensor / fiber products.
//
// Faces are bitmasks over the base elements; base orders are capped at 16,
// which keeps every family enumerable (at most 2^16 - 1 faces).

#ifndef POINTLIKE_COMPLEX_HPP_
#define POINTLIKE_COMPLEX_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

using Mask = std::uint32_t;

inline constexpr int kMaxComplexBase = 16;

inline void require_complex_base(const Semigroup& s) {
  if (s.order() < 1) {
    throw Error(ErrorKind::EmptyOperand,
                "complexes need a nonempty base semigroup");
  }
  if (s.order() > kMaxComplexBase) {
    throw Error(ErrorKind::SizeCap,
                "base order " + std::to_string(s.order()) +
                    " exceeds complex cap " +
                    std::to_string(kMaxComplexBase));
  }
}

inline Mask full_mask(const Semigroup& s) {
  return static_cast<Mask>((std::uint64_t{1} << s.order()) - 1);
}

inline std::vector<Elem> mask_elements(Mask m) {
  std::vector<Elem> out;
  for (Elem i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) out.push_back(i);
  }
  return out;
}

inline Mask mask_of(const std::vector<Elem>& elems) {
  Mask m = 0;
  for (Elem e : elems) m |= Mask{1} << e;
  return m;
}

// {xy : x in X, y in Y}; both operands must be nonempty.
inline Mask setwise_product(const Semigroup& s, Mask x, Mask y) {
  require_complex_base(s);
  if (x == 0 || y == 0) {
    throw Error(ErrorKind::EmptyOperand, "setwise product of an empty set");
  }
  Mask out = 0;
  for (Elem a = 0; a < s.order(); ++a) {
    if (!(x & (Mask{1} << a))) continue;
    for (Elem b = 0; b < s.order(); ++b) {
      if (y & (Mask{1} << b)) out |= Mask{1} << s.at(a, b);
    }
  }
  return out;
}

// {Y nonempty : Y ⊆ X for some X in family}, sorted ascending.
inline std::vector<Mask> downward_close(const Semigroup& s,
                                        const std::vector<Mask>& family) {
  require_complex_base(s);
  std::vector<char> present(std::size_t{1} << s.order(), 0);
  for (Mask x : family) {
    if (present[x]) continue;
    // Standard submask walk enumerates each nonempty subset of x once.
    for (Mask sub = x; sub != 0; sub = (sub - 1) & x) present[sub] = 1;
  }
  std::vector<Mask> out;
  for (Mask m = 1; m < present.size(); ++m) {
    if (present[m]) out.push_back(m);
  }
  return out;
}

// A semigroup complex as an explicit sorted face list over a base.
class Complex {
 public:
  Complex() = default;
  Complex(Semigroup base, std::vector<Mask> faces)
      : base_(std::move(base)), faces_(std::move(faces)) {
    assert(std::is_sorted(faces_.begin(), faces_.end()));
  }

  const Semigroup& base() const noexcept { return base_; }
  const std::vector<Mask>& faces() const noexcept { return faces_; }
  std::size_t face_count() const noexcept { return faces_.size(); }

  bool contains(Mask m) const {
    return std::binary_search(faces_.begin(), faces_.end(), m);
  }

  // ⊆-maximal faces; a lossless summary under downward closure.
  std::vector<Mask> max_faces() const {
    std::vector<Mask> out;
    for (Mask f : faces_) {
      bool maximal = true;
      for (Mask g : faces_) {
        if (g != f && (f & g) == f) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.base_ == b.base_ && a.faces_ == b.faces_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) {
    return !(a == b);
  }

 private:
  Semigroup base_;
  std::vector<Mask> faces_;
};

inline void require_same_base(const Complex& a, const Complex& b) {
  if (a.base() != b.base()) {
    throw Error(ErrorKind::BaseMismatch, "complexes over different bases");
  }
}

// Face-wise containment; bases must agree.
inline bool complex_le(const Complex& a, const Complex& b) {
  require_same_base(a, b);
  return std::includes(b.faces().begin(), b.faces().end(), a.faces().begin(),
                       a.faces().end());
}

inline bool complex_invariants_hold(const Complex& k) {
  const Semigroup& s = k.base();
  for (Elem x = 0; x < s.order(); ++x) {
    if (!k.contains(Mask{1} << x)) return false;
  }
  for (Mask f : k.faces()) {
    if (f == 0) return false;
    for (Mask sub = f; sub != 0; sub = (sub - 1) & f) {
      if (!k.contains(sub)) return false;
    }
  }
  for (Mask f : k.faces()) {
    for (Mask g : k.faces()) {
      if (!k.contains(setwise_product(s, f, g))) return false;
    }
  }
  return true;
}

// Least complex containing the generator family: subsemigroup closure of
// generators plus singletons inside the power semigroup, then one downward
// pass.  Downward closure of a product-closed, singleton-containing family
// stays product closed, so one pass suffices (asserted in debug builds).
inline Complex complex_generate(const Semigroup& s,
                                const std::vector<Mask>& generators) {
  require_complex_base(s);
  Mask full = full_mask(s);
  std::vector<char> present(std::size_t{1} << s.order(), 0);
  std::vector<Mask> work;
  auto add = [&](Mask m) {
    if (m == 0) throw Error(ErrorKind::EmptyOperand, "empty generator face");
    if ((m & ~full) != 0) {
      throw Error(ErrorKind::BaseMismatch, "generator face out of range");
    }
    if (!present[m]) {
      present[m] = 1;
      work.push_back(m);
    }
  };
  for (Elem x = 0; x < s.order(); ++x) add(Mask{1} << x);
  for (Mask g : generators) add(g);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Mask p : {setwise_product(s, work[i], work[j]),
                     setwise_product(s, work[j], work[i])}) {
        if (!present[p]) {
          present[p] = 1;
          work.push_back(p);
        }
      }
    }
  }
  Complex out(s, downward_close(s, work));
  assert(complex_invariants_hold(out));
  return out;
}

inline Complex complex_bottom(const Semigroup& s) {
  require_complex_base(s);
  std::vector<Mask> faces;
  for (Elem x = 0; x < s.order(); ++x) faces.push_back(Mask{1} << x);
  return Complex(s, std::move(faces));
}

inline Complex complex_top(const Semigroup& s) {
  require_complex_base(s);
  std::vector<Mask> faces;
  for (Mask m = 1; m <= full_mask(s); ++m) faces.push_back(m);
  return Complex(s, std::move(faces));
}

enum class LatticeOp { Meet, Join };

// Meet is plain face intersection; join regenerates from the union.
inline Complex complex_lattice(LatticeOp op, const Complex& k1,
                               const Complex& k2) {
  require_same_base(k1, k2);
  if (op == LatticeOp::Meet) {
    std::vector<Mask> faces;
    std::set_intersection(k1.faces().begin(), k1.faces().end(),
                          k2.faces().begin(), k2.faces().end(),
                          std::back_inserter(faces));
    return Complex(k1.base(), std::move(faces));
  }
  std::vector<Mask> gens = k1.faces();
  gens.insert(gens.end(), k2.faces().begin(), k2.faces().end());
  return complex_generate(k1.base(), gens);
}

inline Mask image_mask(const Morphism& phi, Mask x) {
  Mask out = 0;
  for (Elem a = 0; a < phi.dom.order(); ++a) {
    if (x & (Mask{1} << a)) out |= Mask{1} << phi.map[a];
  }
  return out;
}

enum class Transport { Pushforward, Pullback };

// Pushforward (lower adjoint): generate from the face images.
// Pullback (upper adjoint): all subsets whose image is a face; this is
// already a complex, no generation pass needed.
inline Complex transport(const Morphism& phi, Transport dir,
                         const Complex& k) {
  if (dir == Transport::Pushforward) {
    if (k.base() != phi.dom) {
      throw Error(ErrorKind::BaseMismatch, "pushforward needs K over dom");
    }
    require_complex_base(phi.cod);
    std::vector<Mask> images;
    images.reserve(k.face_count());
    for (Mask f : k.faces()) images.push_back(image_mask(phi, f));
    return complex_generate(phi.cod, images);
  }
  if (k.base() != phi.cod) {
    throw Error(ErrorKind::BaseMismatch, "pullback needs K over cod");
  }
  require_complex_base(phi.dom);
  std::vector<Mask> faces;
  for (Mask m = 1; m <= full_mask(phi.dom); ++m) {
    if (k.contains(image_mask(phi, m))) faces.push_back(m);
  }
  return Complex(phi.dom, std::move(faces));
}

// Tensor product: subsets of S1 x S2 both of whose projections are faces.
inline Complex complex_tensor(const Complex& k1, const Complex& k2) {
  Semigroup prod = direct_product(k1.base(), k2.base());
  require_complex_base(prod);
  int n2 = k2.base().order();
  std::vector<Mask> faces;
  for (Mask z = 1; z <= full_mask(prod); ++z) {
    Mask p1 = 0, p2 = 0;
    for (Elem e = 0; e < prod.order(); ++e) {
      if (z & (Mask{1} << e)) {
        p1 |= Mask{1} << (e / n2);
        p2 |= Mask{1} << (e % n2);
      }
    }
    if (k1.contains(p1) && k2.contains(p2)) faces.push_back(z);
  }
  return Complex(std::move(prod), std::move(faces));
}

// Cospan data for fiber products: maps from both bases into a common
// codomain that carries a complex.  Both maps must be complex morphisms,
// i.e. push each K_i into L.
struct ComplexCospan {
  Morphism phi1;
  Morphism phi2;
  Complex l;
};

// Fiber product: the tensor restricted to the equalizing pairs, based on
// the materialized fiber subsemigroup {(s1, s2) : s1 phi1 = s2 phi2}.
inline Complex complex_fiber_product(const Complex& k1, const Complex& k2,
                                     const ComplexCospan& cospan) {
  if (cospan.phi1.dom != k1.base() || cospan.phi2.dom != k2.base() ||
      cospan.phi1.cod != cospan.l.base() ||
      cospan.phi2.cod != cospan.l.base()) {
    throw Error(ErrorKind::BaseMismatch, "cospan legs do not match bases");
  }
  for (const auto* leg : {&cospan.phi1, &cospan.phi2}) {
    const Complex& k = leg == &cospan.phi1 ? k1 : k2;
    if (!complex_le(transport(*leg, Transport::Pushforward, k), cospan.l)) {
      throw Error(ErrorKind::MorphismConditionViolated,
                  "cospan leg does not push its complex into L");
    }
  }
  int n1 = k1.base().order();
  int n2 = k2.base().order();
  std::vector<Elem> fiber;            // indices into the would-be product
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < n1; ++a) {
    for (Elem b = 0; b < n2; ++b) {
      if (cospan.phi1.map[a] == cospan.phi2.map[b]) {
        fiber.push_back(a * n2 + b);
        pairs.emplace_back(a, b);
      }
    }
  }
  int m = static_cast<int>(fiber.size());
  if (m > kMaxComplexBase) {
    throw Error(ErrorKind::SizeCap, "fiber subsemigroup exceeds complex cap");
  }
  if (m == 0) {
    throw Error(ErrorKind::EmptyOperand, "empty fiber subsemigroup");
  }
  std::vector<Elem> index(static_cast<std::size_t>(n1) * n2, -1);
  for (int i = 0; i < m; ++i) index[fiber[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Elem a = k1.base().at(pairs[i].first, pairs[j].first);
      Elem b = k2.base().at(pairs[i].second, pairs[j].second);
      Elem enc = index[a * n2 + b];
      assert(enc >= 0);  // the fiber is product closed
      table[i * m + j] = enc;
    }
  }
  Semigroup base(m, std::move(table));
  {
    std::vector<std::string> lab;
    for (auto [a, b] : pairs) {
      lab.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    base.set_labels(std::move(lab));
  }
  std::vector<Mask> faces;
  for (Mask z = 1; z <= full_mask(base); ++z) {
    Mask p1 = 0, p2 = 0;
    for (int i = 0; i < m; ++i) {
      if (z & (Mask{1} << i)) {
        p1 |= Mask{1} << pairs[i].first;
        p2 |= Mask{1} << pairs[i].second;
      }
    }
    if (k1.contains(p1) && k2.contains(p2)) faces.push_back(z);
  }
  return Complex(std::move(base), std::move(faces));
}

// Product of complexes; with fiber data the base is restricted to the
// equalizing subsemigroup and both legs must push into the carried complex.
inline Complex complex_product(const Complex& k1, const Complex& k2,
                               const ComplexCospan* fiber = nullptr) {
  if (fiber == nullptr) return complex_tensor(k1, k2);
  return complex_fiber_product(k1, k2, *fiber);
}

}  // namespace pointlike

#endif  // POINTLIKE_COMPLEX_HPP_
