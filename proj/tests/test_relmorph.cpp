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
#include "pointlike/relmorph.hpp"

using namespace pointlike;

TEST_CASE("identity and terminal relational morphisms") {
  Semigroup z2 = fixtures::z2();
  RelMorphism id = rel_identity(z2);
  CHECK(id.graph.size() == 2);
  CHECK(nerve(id) == complex_bottom(z2));
  CHECK(is_division(id));

  RelMorphism term = terminal_rel(z2);
  CHECK(nerve(term) == complex_top(z2));
  CHECK_FALSE(is_division(term));
}

TEST_CASE("graph validation error paths") {
  Semigroup z2 = fixtures::z2();
  try {
    make_relmorph(z2, z2, {{0, 1}});
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotProductClosed);
    CHECK(e.data().size() == 4);
  }
  try {
    make_relmorph(z2, z2, {{0, 0}});
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjectiveOntoDomain);
    CHECK(e.data() == std::vector<std::int64_t>{1});
  }
  CHECK_THROWS_AS(make_relmorph(z2, z2, {{0, 7}}), Error);
  // Requesting closure repairs a seed that only lacks products.
  RelMorphism closed = make_relmorph(z2, z2, {{1, 0}}, /*close=*/true);
  CHECK(closed.graph == std::vector<GraphPair>{{0, 0}, {1, 0}});
}

TEST_CASE("the worked nerve example over the two element semilattice") {
  Semigroup z2 = fixtures::z2(), sl2 = fixtures::sl2();
  RelMorphism rho = make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, /*close=*/true);
  CHECK(rho.graph.size() == 3);  // closure adds (1,0)(1,0) = (0,0)
  CHECK(nerve(rho) == complex_top(z2));
}

TEST_CASE("composition behaves like a category") {
  Semigroup z2 = fixtures::z2(), sl2 = fixtures::sl2();
  RelMorphism rho = make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, true);
  CHECK(compose_rel(rho, rel_identity(sl2)) == rho);
  CHECK(compose_rel(rel_identity(z2), rho) == rho);

  Morphism f = make_morphism(z2, z2, {0, 1});
  Morphism g = make_morphism(z2, sl2, {1, 1});
  RelMorphism lhs = compose_rel(from_morphism(f), from_morphism(g));
  CHECK(lhs == from_morphism(make_morphism(z2, sl2, {1, 1})));

  try {
    compose_rel(rho, rel_identity(z2));  // cod(sl2) != dom(z2) as tables
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CodDomMismatch);
  }
}

TEST_CASE("direct sums meet the nerves") {
  Semigroup z2 = fixtures::z2(), sl2 = fixtures::sl2();
  RelMorphism id = rel_identity(z2);
  RelMorphism ds = direct_sum(id, id);
  CHECK(ds.graph == std::vector<GraphPair>{{0, 0}, {1, 3}});
  CHECK(nerve(ds) == complex_bottom(z2));

  RelMorphism rho = make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, true);
  RelMorphism term = terminal_rel(z2);
  CHECK(nerve(direct_sum(rho, term)) ==
        complex_lattice(LatticeOp::Meet, nerve(rho), nerve(term)));

  try {
    direct_sum(rho, make_relmorph(sl2, z2, {{0, 0}, {1, 0}}));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomMismatch);
  }
}

TEST_CASE("products tensor the nerves") {
  Semigroup z2 = fixtures::z2(), sl2 = fixtures::sl2();
  RelMorphism id = rel_identity(z2);
  CHECK(rel_product(id, id) == rel_identity(direct_product(z2, z2)));
  RelMorphism rho = make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, true);
  RelMorphism term = terminal_rel(z2);
  CHECK(nerve(rel_product(rho, term)) ==
        complex_tensor(nerve(rho), nerve(term)));
  // The unified entry point with no cospan is the plain product.
  CHECK(rel_product_pullback(rho, term) == rel_product(rho, term));
}

TEST_CASE("base change pulls nerves back") {
  Semigroup z4 = fixtures::z4(), z2 = fixtures::z2(), sl2 = fixtures::sl2();
  Morphism mod2 = make_morphism(z4, z2, {0, 1, 0, 1});
  for (const RelMorphism& rho :
       {rel_identity(z2), terminal_rel(z2),
        make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, true)}) {
    CHECK(nerve(compose_rel(from_morphism(mod2), rho)) ==
          transport(mod2, Transport::Pullback, nerve(rho)));
  }
}

TEST_CASE("reversal keeps the nerve faces") {
  Semigroup z2 = fixtures::z2(), sl2 = fixtures::sl2();
  RelMorphism rho = make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, true);
  RelMorphism rev = reverse_rel(rho);
  CHECK(rev.dom == reverse(z2));
  CHECK(nerve(rev).faces() == nerve(rho).faces());
}

TEST_CASE("pullback over the terminal cospan matches the direct sum") {
  Semigroup z2 = fixtures::z2(), sl2 = fixtures::sl2(),
            one = fixtures::triv();
  RelMorphism rho = make_relmorph(z2, sl2, {{0, 1}, {1, 0}}, true);
  RelMorphism term = terminal_rel(z2);
  RelCospan co{terminal_rel(z2),
               RelArrow{identity_morphism(z2),
                        make_morphism(sl2, one, {0, 0})},
               RelArrow{identity_morphism(z2),
                        make_morphism(one, one, {0})}};
  RelMorphism pb = rel_pullback(rho, term, co);
  RelMorphism ds = direct_sum(rho, term);
  CHECK(pb.dom.order() == 2);
  CHECK(nerve(pb).faces() == nerve(ds).faces());
}

TEST_CASE("cospan arrows are validated") {
  Semigroup z2 = fixtures::z2();
  RelMorphism id = rel_identity(z2);
  Morphism const0 = make_morphism(z2, z2, {0, 0});
  try {
    require_rel_arrow(id, id, RelArrow{const0, identity_morphism(z2)});
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MorphismConditionViolated);
  }
  CHECK_NOTHROW(require_rel_arrow(id, id, RelArrow{const0, const0}));
}

TEST_CASE("degenerate pullbacks fail surjectivity") {
  // Two relations out of the trivial semigroup whose images are disjoint
  // idempotents: the cod fiber over the identity legs is the diagonal, so
  // the apex pair set is empty and the final validation rejects it.
  Semigroup one = fixtures::triv(), lz2 = fixtures::lz2();
  RelMorphism r1 = make_relmorph(one, lz2, {{0, 0}});
  RelMorphism r2 = make_relmorph(one, lz2, {{0, 1}});
  RelMorphism mu = make_relmorph(one, lz2, {{0, 0}, {0, 1}});
  RelCospan co{mu, RelArrow{identity_morphism(one), identity_morphism(lz2)},
               RelArrow{identity_morphism(one), identity_morphism(lz2)}};
  try {
    rel_pullback(r1, r2, co);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjectiveOntoDomain);
  }
}

TEST_CASE("minimal graphs enumerate one pair per generator") {
  Semigroup z2 = fixtures::z2();
  CHECK(minimal_graphs_count(z2, {1}) == 2);
  int count = 0;
  std::vector<std::size_t> sizes;
  bool exhausted = minimal_graphs(z2, z2, {1}, [&](const RelMorphism& r) {
    ++count;
    sizes.push_back(r.graph.size());
    return true;
  });
  CHECK(exhausted);
  CHECK(count == 2);
  // Seed (1,0) closes to {(0,0),(1,0)} and seed (1,1) to {(0,0),(1,1)}.
  CHECK(sizes == std::vector<std::size_t>{2, 2});

  CHECK_THROWS_AS(
      minimal_graphs(z2, z2, {0}, [](const RelMorphism&) { return true; }),
      Error);  // {0} does not generate Z2
}

TEST_CASE("greedy generators cover the semigroup") {
  for (const Semigroup& s :
       {fixtures::z2(), fixtures::b2(), fixtures::sl2(), fixtures::z4()}) {
    std::vector<Elem> gens = greedy_generators(s);
    std::vector<Elem> all(static_cast<std::size_t>(s.order()));
    for (Elem i = 0; i < s.order(); ++i) all[i] = i;
    CHECK(generate_subsemigroup(s, gens) == all);
  }
  CHECK(greedy_generators(fixtures::z2()) == std::vector<Elem>{1});
}
