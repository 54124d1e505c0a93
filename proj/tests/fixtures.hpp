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

#ifndef POINTLIKE_TESTS_FIXTURES_HPP_
#define POINTLIKE_TESTS_FIXTURES_HPP_

#include "pointlike/semigroup.hpp"

namespace fixtures {

// The small semigroups every suite leans on, by their multiplication tables.
inline pointlike::Semigroup triv() { return pointlike::Semigroup(1, {0}); }
inline pointlike::Semigroup z2() {
  return pointlike::Semigroup(2, {0, 1, 1, 0});
}
inline pointlike::Semigroup z3() {
  return pointlike::Semigroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
}
inline pointlike::Semigroup z4() {
  return pointlike::Semigroup(4,
                              {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
}
inline pointlike::Semigroup sl2() {
  return pointlike::Semigroup(2, {0, 0, 0, 1});
}
inline pointlike::Semigroup lz2() {
  return pointlike::Semigroup(2, {0, 0, 1, 1});
}
inline pointlike::Semigroup rz2() {
  return pointlike::Semigroup(2, {0, 1, 0, 1});
}
inline pointlike::Semigroup n2() {
  return pointlike::Semigroup(2, {0, 0, 0, 0});
}
// Brandt semigroup of the 2x2 matrix units with zero; regular but not a
// union of groups, aperiodic, not J-trivial.
inline pointlike::Semigroup b2() {
  return pointlike::Semigroup(5, {0, 0, 0, 0, 0,  //
                                  0, 1, 2, 0, 0,  //
                                  0, 0, 0, 1, 2,  //
                                  0, 3, 4, 0, 0,  //
                                  0, 0, 0, 3, 4});
}

}  // namespace fixtures

#endif  // POINTLIKE_TESTS_FIXTURES_HPP_
