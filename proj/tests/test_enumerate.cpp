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

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <vector>

#include "pointlike/enumerate.hpp"

using namespace pointlike;

namespace {

// Reference oracle: filter all n^(n^2) tables for associativity, dedup by
// canonical form.  Only feasible for n <= 3.
struct NaiveCounts {
  std::uint64_t raw = 0, iso = 0, anti = 0;
};

NaiveCounts naive_counts(int n) {
  NaiveCounts out;
  std::set<std::vector<Elem>> iso, anti;
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
    ++out.raw;
    iso.insert(canonical_table(table, n));
    anti.insert(canonical_table_anti(table, n));
  }
  out.iso = iso.size();
  out.anti = anti.size();
  return out;
}

}  // namespace

TEST_CASE("counts match the naive oracle at orders 2 and 3") {
  for (int n : {2, 3}) {
    NaiveCounts naive = naive_counts(n);
    CHECK(count_semigroups(n, Dedup::Raw) == naive.raw);
    CHECK(count_semigroups(n, Dedup::UpToIso) == naive.iso);
    CHECK(count_semigroups(n, Dedup::UpToIsoAntiIso) == naive.anti);
  }
}

TEST_CASE("counts match the published sequences") {
  // Associative tables: 1, 8, 113, 3492; up to isomorphism: 1, 5, 24, 188;
  // up to isomorphism and anti-isomorphism: 1, 4, 18, 126.
  CHECK(count_semigroups(1, Dedup::Raw) == 1);
  CHECK(count_semigroups(2, Dedup::Raw) == 8);
  CHECK(count_semigroups(3, Dedup::Raw) == 113);
  CHECK(count_semigroups(4, Dedup::Raw) == 3492);
  CHECK(count_semigroups(1, Dedup::UpToIso) == 1);
  CHECK(count_semigroups(2, Dedup::UpToIso) == 5);
  CHECK(count_semigroups(3, Dedup::UpToIso) == 24);
  CHECK(count_semigroups(4, Dedup::UpToIso) == 188);
  CHECK(count_semigroups(2, Dedup::UpToIsoAntiIso) == 4);
  CHECK(count_semigroups(3, Dedup::UpToIsoAntiIso) == 18);
  CHECK(count_semigroups(4, Dedup::UpToIsoAntiIso) == 126);
}

TEST_CASE("enumerated representatives are canonical and valid") {
  for (int n : {1, 2, 3}) {
    std::set<std::vector<Elem>> seen;
    enumerate_semigroups(n, Dedup::UpToIso, [&](const Semigroup& s) {
      CHECK(s.order() == n);
      CHECK(canonical_table(s) == s.table());
      CHECK(seen.insert(s.table()).second);
    });
  }
}

TEST_CASE("the streaming callback sees the same sequence as the batch API") {
  std::vector<std::vector<Elem>> streamed;
  enumerate_semigroups(3, Dedup::UpToIso, [&](const Semigroup& s) {
    streamed.push_back(s.table());
  });
  std::vector<std::vector<Elem>> batched;
  for (const Semigroup& s : all_semigroups(3, Dedup::UpToIso)) {
    batched.push_back(s.table());
  }
  CHECK(streamed == batched);
  CHECK(std::is_sorted(streamed.begin(), streamed.end()));
}

TEST_CASE("order bounds respect the cap") {
  CHECK_THROWS_AS(count_semigroups(0, Dedup::Raw), Error);
  CHECK_THROWS_AS(count_semigroups(enumeration_cap() + 1, Dedup::Raw), Error);
  try {
    count_semigroups(99, Dedup::Raw);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
  }
}

TEST_CASE("canonical forms are permutation invariant") {
  Semigroup sl2(2, {0, 0, 0, 1});
  // Relabeling 0<->1 gives the same semilattice with the other zero.
  Semigroup swapped(2, {0, 1, 1, 1});
  CHECK(canonical_table(sl2) == canonical_table(swapped));
  Semigroup lz2(2, {0, 0, 1, 1});
  Semigroup rz2(2, {0, 1, 0, 1});
  CHECK(canonical_table(lz2) != canonical_table(rz2));
  CHECK(canonical_table_anti(lz2.table(), 2) ==
        canonical_table_anti(rz2.table(), 2));
}
