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

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pointlike/complex.hpp"

using namespace pointlike;

TEST_CASE("setwise products on masks") {
  CHECK(setwise_product(fixtures::z2(), 3, 3) == 3);     // {0,1}{0,1}={0,1}
  CHECK(setwise_product(fixtures::n2(), 2, 2) == 1);     // {1}{1}={0}
  CHECK(setwise_product(fixtures::lz2(), 3, 1) == 3);    // {0,1}{0}={0,1}
  CHECK(setwise_product(fixtures::lz2(), 1, 3) == 1);    // {0}{0,1}={0}
  CHECK_THROWS_AS(setwise_product(fixtures::z2(), 0, 1), Error);
}

TEST_CASE("downward closure walks all nonempty submasks") {
  std::vector<Mask> closed = downward_close(fixtures::z2(), {3});
  CHECK(closed == std::vector<Mask>{1, 2, 3});
  CHECK(downward_close(fixtures::z2(), {}) == std::vector<Mask>{});
}

TEST_CASE("generation from a family of faces") {
  Semigroup z2 = fixtures::z2();
  Complex k = complex_generate(z2, {Mask{3}});
  CHECK(k == complex_top(z2));
  CHECK(k.face_count() == 3);
  CHECK(k.max_faces() == std::vector<Mask>{3});
  CHECK(complex_invariants_hold(k));

  CHECK(complex_generate(z2, {}) == complex_bottom(z2));
  CHECK(complex_bottom(z2).face_count() == 2);

  // On N2, {0,1}{0,1} = {0}; the generated complex is the full power set.
  Complex kn = complex_generate(fixtures::n2(), {Mask{3}});
  CHECK(kn == complex_top(fixtures::n2()));
}

TEST_CASE("generation is increasing, monotone, and idempotent") {
  Semigroup b2 = fixtures::b2();
  std::vector<Mask> gens = {Mask{0b00110}, Mask{0b11000}};
  Complex k = complex_generate(b2, gens);
  for (Mask g : gens) CHECK(k.contains(g));
  CHECK(complex_generate(b2, k.faces()) == k);
  Complex smaller = complex_generate(b2, {gens[0]});
  CHECK(complex_le(smaller, k));
  CHECK(complex_invariants_hold(k));
}

TEST_CASE("lattice operations") {
  Semigroup z2 = fixtures::z2();
  Complex top = complex_top(z2), bottom = complex_bottom(z2);
  CHECK(complex_lattice(LatticeOp::Meet, top, bottom) == bottom);
  CHECK(complex_lattice(LatticeOp::Join, bottom, bottom) == bottom);
  CHECK(complex_lattice(LatticeOp::Join, bottom, top) == top);
  CHECK(complex_le(bottom, top));
  CHECK_FALSE(complex_le(top, bottom));
  CHECK_THROWS_AS(
      complex_lattice(LatticeOp::Meet, top, complex_top(fixtures::sl2())),
      Error);  // different bases
}

TEST_CASE("transport along a collapse and the adjunction") {
  Semigroup z2 = fixtures::z2(), one = fixtures::triv();
  Morphism collapse = make_morphism(z2, one, {0, 0});
  Complex pull = transport(collapse, Transport::Pullback, complex_bottom(one));
  CHECK(pull == complex_top(z2));
  Complex push = transport(collapse, Transport::Pushforward, complex_top(z2));
  CHECK(push.face_count() == 1);

  for (const Complex& k :
       {complex_bottom(z2), complex_generate(z2, {Mask{3}}),
        complex_top(z2)}) {
    bool lhs = complex_le(transport(collapse, Transport::Pushforward, k),
                          complex_bottom(one));
    bool rhs = complex_le(k, pull);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pushforward along a surjection is the closed image family") {
  Semigroup z4 = fixtures::z4(), z2 = fixtures::z2();
  Morphism mod2 = make_morphism(z4, z2, {0, 1, 0, 1});
  Complex k = complex_generate(z4, {Mask{0b0101}});  // {0,2}, the kernel
  Complex push = transport(mod2, Transport::Pushforward, k);
  CHECK(push == complex_bottom(z2));  // the kernel maps onto {0}
  Complex k2 = complex_generate(z4, {Mask{0b0011}});
  CHECK(transport(mod2, Transport::Pushforward, k2) == complex_top(z2));
}

TEST_CASE("tensor products") {
  Semigroup z2 = fixtures::z2();
  Complex t = complex_tensor(complex_bottom(z2), complex_bottom(z2));
  CHECK(t.base().order() == 4);
  CHECK(t.face_count() == 4);
  Complex tt = complex_tensor(complex_top(z2), complex_top(z2));
  CHECK(tt.face_count() == 15);  // every nonempty subset of a 4 element set
  CHECK(complex_invariants_hold(tt));
}

TEST_CASE("fiber products over a cospan") {
  Semigroup z2 = fixtures::z2(), one = fixtures::triv();
  // Over the trivial cospan the fiber product is the whole tensor.
  ComplexCospan over_point{make_morphism(z2, one, {0, 0}),
                           make_morphism(z2, one, {0, 0}),
                           complex_top(one)};
  Complex fib = complex_fiber_product(complex_top(z2), complex_top(z2),
                                      over_point);
  CHECK(fib.base().order() == 4);
  CHECK(fib.face_count() == 15);

  // Over the identity cospan only the diagonal survives.
  ComplexCospan diag{identity_morphism(z2), identity_morphism(z2),
                     complex_top(z2)};
  Complex fd = complex_fiber_product(complex_top(z2), complex_top(z2), diag);
  CHECK(fd.base().order() == 2);
  CHECK(fd.face_count() == 3);

  // The unified entry point dispatches on the presence of a cospan.
  CHECK(complex_product(complex_top(z2), complex_top(z2)) ==
        complex_tensor(complex_top(z2), complex_top(z2)));
  CHECK(complex_product(complex_top(z2), complex_top(z2), &diag) == fd);

  // Legs that fail to land in the cospan complex are rejected.
  ComplexCospan bad{identity_morphism(z2), identity_morphism(z2),
                    complex_bottom(z2)};
  try {
    complex_fiber_product(complex_top(z2), complex_top(z2), bad);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MorphismConditionViolated);
  }
}

TEST_CASE("base cap enforcement") {
  std::vector<Elem> big(17 * 17, 0);
  Semigroup left_zero_17 = [&] {
    for (Elem i = 0; i < 17; ++i) {
      for (Elem j = 0; j < 17; ++j) big[i * 17 + j] = i;
    }
    return Semigroup(17, big);
  }();
  try {
    complex_bottom(left_zero_17);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
  }
}

TEST_CASE("invariant checker rejects broken families") {
  Semigroup z2 = fixtures::z2();
  // Missing a singleton.
  CHECK_FALSE(complex_invariants_hold(Complex(z2, {Mask{1}})));
  // Not downward closed.
  CHECK_FALSE(complex_invariants_hold(Complex(z2, {Mask{1}, Mask{3}})));
  // Not product closed: over Z3 the face {0,1} squares to {0,1,2}.
  Semigroup z3 = fixtures::z3();
  CHECK_FALSE(complex_invariants_hold(
      Complex(z3, {Mask{1}, Mask{2}, Mask{3}, Mask{4}})));
  CHECK(complex_invariants_hold(complex_top(z2)));
  CHECK(complex_invariants_hold(complex_bottom(z2)));
}
