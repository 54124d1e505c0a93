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
#include "pointlike/enumerate.hpp"
#include "pointlike/modulus.hpp"

using namespace pointlike;
using K = Pseudovariety::Kind;

namespace {
SubsetFamily fam(std::initializer_list<std::vector<Elem>> xs) {
  SubsetFamily out(xs);
  sort_family(out);
  return out;
}
}  // namespace

TEST_CASE("builtin modulus values on the basic examples") {
  CHECK(eval_modulus(*mod_builtin(ModulusKind::Grp), fixtures::z2()) ==
        fam({{0}, {0, 1}}));
  CHECK(eval_modulus(*mod_param(ModulusKind::Prod, 2), fixtures::n2()) ==
        fam({{0}}));
  CHECK(eval_modulus(*mod_builtin(ModulusKind::JCl), fixtures::z2()) ==
        fam({{0, 1}}));
  CHECK(eval_modulus(*mod_builtin(ModulusKind::E), fixtures::b2()) ==
        fam({{0, 1, 4}}));
  CHECK(eval_modulus(*mod_builtin(ModulusKind::Reg), fixtures::n2()) ==
        fam({{0}}));
  // Principal ideals: in SL2, 0 generates {0} and 1 generates {0,1}.
  CHECK(eval_modulus(*mod_builtin(ModulusKind::PrinJ), fixtures::sl2()) ==
        fam({{0}, {0, 1}}));
}

TEST_CASE("suffix and prefix moduli distinguish the zero semigroups") {
  auto suf2 = mod_param(ModulusKind::Suffix, 2);
  // In LZ2, p in S^2 is either 0 or 1 and Sp = {0,1}: one big set each.
  CHECK(eval_modulus(*suf2, fixtures::lz2()) == fam({{0, 1}}));
  // In RZ2, Sp = {p}: singletons only.
  CHECK(eval_modulus(*suf2, fixtures::rz2()) == fam({{0}, {1}}));
  auto pre2 = mod_param(ModulusKind::Prefix, 2);
  CHECK(eval_modulus(*pre2, fixtures::rz2()) == fam({{0, 1}}));
  CHECK(eval_modulus(*pre2, fixtures::lz2()) == fam({{0}, {1}}));
}

TEST_CASE("context values") {
  CHECK(eval_context(*ctx_builtin(ContextKind::Loc), fixtures::sl2()) ==
        fam({{0}, {0, 1}}));
  CHECK(eval_context(*ctx_builtin(ContextKind::Full), fixtures::z2()) ==
        fam({{0, 1}}));
  CHECK(eval_context(*ctx_from_modulus(mod_builtin(ModulusKind::E)),
                     fixtures::lz2()) == fam({{0, 1}}));
  // B2 is aperiodic, so its subgroups are the trivial ones at idempotents.
  CHECK(eval_context(*ctx_builtin(ContextKind::Grp), fixtures::b2()) ==
        fam({{0}, {1}, {4}}));
  CHECK(eval_context(*ctx_builtin(ContextKind::Loc), fixtures::b2()) ==
        fam({{0}, {0, 1}, {0, 4}}));
}

TEST_CASE("restriction to the full context changes nothing") {
  auto grp = mod_builtin(ModulusKind::Grp);
  auto restricted = mod_restrict(grp, ctx_builtin(ContextKind::Full));
  for (const Semigroup& s : {fixtures::z2(), fixtures::sl2(), fixtures::n2(),
                             fixtures::lz2(), fixtures::b2()}) {
    CHECK(eval_modulus(*restricted, s) == eval_modulus(*grp, s));
  }
}

TEST_CASE("points membership on the basic examples") {
  CHECK_FALSE(points_member(*mod_builtin(ModulusKind::PrinJ), fixtures::z2()));
  CHECK(points_member(*mod_builtin(ModulusKind::Grp), fixtures::sl2()));
  CHECK(points_member(*mod_param(ModulusKind::Prod, 2), fixtures::n2()));
  CHECK(points_member(*mod_builtin(ModulusKind::RCl), fixtures::lz2()));
  CHECK_FALSE(points_member(*mod_builtin(ModulusKind::LCl), fixtures::lz2()));
}

TEST_CASE("functor values") {
  CHECK(functor_value(*mod_builtin(ModulusKind::Grp), fixtures::sl2()) ==
        complex_bottom(fixtures::sl2()));
  CHECK(functor_value(*mod_builtin(ModulusKind::Grp), fixtures::z2()) ==
        complex_top(fixtures::z2()));
  CHECK(functor_value(*mod_builtin(ModulusKind::JCl), fixtures::triv()) ==
        complex_bottom(fixtures::triv()));
}

TEST_CASE("face semigroups multiply by setwise product") {
  Complex top = complex_top(fixtures::z2());
  Semigroup q = face_semigroup(top);
  CHECK(q.order() == 3);
  // Faces in mask order: {0}, {1}, {0,1}; so q(1,1) is {1}{1} = {0}.
  CHECK(q.at(0, 0) == 0);
  CHECK(q.at(1, 1) == 0);
  CHECK(q.at(2, 2) == 2);
  CHECK(q.labels() == std::vector<std::string>{"{0}", "{1}", "{0,1}"});
}

TEST_CASE("monad completion reaches union-closed fixpoints") {
  CompletionResult c1 = monad_completion(*mod_builtin(ModulusKind::Grp),
                                         fixtures::z2());
  CHECK(c1.value == complex_top(fixtures::z2()));
  CHECK(c1.levels == 1);
  CHECK(c1.trace == std::vector<std::size_t>{2, 3});

  CompletionResult c2 = monad_completion(*mod_builtin(ModulusKind::Grp),
                                         fixtures::sl2());
  CHECK(c2.value == complex_bottom(fixtures::sl2()));
  CHECK(c2.levels == 0);

  CompletionResult c3 = monad_completion(*mod_builtin(ModulusKind::JCl),
                                         fixtures::b2());
  CHECK(c3.value == complex_top(fixtures::b2()));
  CHECK(c3.trace.front() == 5);
  CHECK(c3.trace.back() == 31);
}

TEST_CASE("join moduli evaluate to unions and preserve joins") {
  auto grp = mod_builtin(ModulusKind::Grp);
  auto e = mod_builtin(ModulusKind::E);
  auto joined = mod_join(grp, e);
  for (const Semigroup& s :
       {fixtures::z2(), fixtures::sl2(), fixtures::n2(), fixtures::lz2()}) {
    CHECK(functor_value(*joined, s) ==
          complex_lattice(LatticeOp::Join, functor_value(*grp, s),
                          functor_value(*e, s)));
  }
}

TEST_CASE("wired points identifications") {
  auto check_wired = [](ModulusKind kind, int k, K pv_kind, int pv_k) {
    ModulusPtr m = k ? mod_param(kind, k) : mod_builtin(kind);
    std::optional<Pseudovariety> w = wired_points(*m);
    REQUIRE(w.has_value());
    CHECK(w->kind == pv_kind);
    CHECK(w->k == pv_k);
  };
  check_wired(ModulusKind::Grp, 0, K::Aperiodic, 0);
  check_wired(ModulusKind::CycGrp, 0, K::Aperiodic, 0);
  check_wired(ModulusKind::RCl, 0, K::RTrivial, 0);
  check_wired(ModulusKind::LCl, 0, K::LTrivial, 0);
  check_wired(ModulusKind::JCl, 0, K::JTrivial, 0);
  check_wired(ModulusKind::PrinR, 0, K::LeftZero, 0);
  check_wired(ModulusKind::PrinL, 0, K::RightZero, 0);
  check_wired(ModulusKind::PrinJ, 0, K::Trivial, 0);
  check_wired(ModulusKind::Prod, 2, K::NilpotentK, 2);
  check_wired(ModulusKind::Suffix, 2, K::DelayK, 2);
  check_wired(ModulusKind::Prefix, 2, K::ReverseDelayK, 2);
  check_wired(ModulusKind::E, 0, K::UniqueIdempotent, 0);
  check_wired(ModulusKind::Reg, 0, K::Nilpotent, 0);
  CHECK_FALSE(wired_points(*mod_join(mod_builtin(ModulusKind::Grp),
                                     mod_builtin(ModulusKind::E)))
                  .has_value());
}

TEST_CASE("points match the wired pseudovarieties at order <= 3") {
  for (const auto& [name, mod] : builtin_moduli(2)) {
    std::optional<Pseudovariety> wired = wired_points(*mod);
    REQUIRE(wired.has_value());
    for (int n = 1; n <= 3; ++n) {
      enumerate_semigroups(n, Dedup::UpToIso, [&, m = mod](const Semigroup& s) {
        CHECK(points_member(*m, s) == pv_member(*wired, s));
        return true;
      });
    }
  }
}

TEST_CASE("context operator membership") {
  Pseudovariety triv{K::Trivial, 0};
  CHECK(ctx_operator_member(*ctx_builtin(ContextKind::Grp), triv,
                            fixtures::sl2()));
  CHECK_FALSE(ctx_operator_member(*ctx_builtin(ContextKind::Grp), triv,
                                  fixtures::z2()));
  // (Loc, Trivial) carves out the locally trivial semigroups.
  for (int n = 1; n <= 3; ++n) {
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& s) {
      CHECK(ctx_operator_member(*ctx_builtin(ContextKind::Loc), triv, s) ==
            pv_member({K::LocallyTrivial, 0}, s));
      return true;
    });
  }
}

TEST_CASE("approximate flags") {
  CHECK_FALSE(modulus_is_approximate(*mod_builtin(ModulusKind::Grp)));
  ContextPtr ep = ctx_epapprox({K::Aperiodic, 0}, 2);
  CHECK(context_is_approximate(*ep));
  CHECK(modulus_is_approximate(
      *mod_restrict(mod_builtin(ModulusKind::Grp), ep)));
  CHECK_FALSE(context_is_approximate(*ctx_builtin(ContextKind::Loc)));
}

TEST_CASE("the empirical idempotent-fiber context on Z2") {
  ContextPtr ep = ctx_epapprox({K::Aperiodic, 0}, 2);
  CHECK(eval_context(*ep, fixtures::z2()) == fam({{0}, {0, 1}}));
}

TEST_CASE("tuple enumeration respects the cap") {
  std::vector<Elem> t(36);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) t[i * 6 + j] = static_cast<Elem>(i);
  }
  Semigroup lz6(6, std::move(t));
  try {
    eval_modulus(*mod_param(ModulusKind::Prod, 5), lz6);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
  }
}

TEST_CASE("modulus values survive push along morphisms") {
  // Spot instance of the push axiom: the image of a subgroup of Z4 under
  // the mod-2 projection lands inside a subgroup of Z2.
  Semigroup z4 = fixtures::z4(), z2 = fixtures::z2();
  Morphism mod2 = make_morphism(z4, z2, {0, 1, 0, 1});
  SubsetFamily down = eval_modulus(*mod_builtin(ModulusKind::Grp), z2);
  for (const auto& x : eval_modulus(*mod_builtin(ModulusKind::Grp), z4)) {
    std::vector<Elem> image;
    for (Elem e : x) image.push_back(mod2.map[e]);
    image = sorted_unique(std::move(image));
    bool covered = false;
    for (const auto& y : down) {
      covered = covered || std::includes(y.begin(), y.end(), image.begin(),
                                         image.end());
    }
    CHECK(covered);
  }
}
