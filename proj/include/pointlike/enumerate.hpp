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

// Exhaustive enumeration of small semigroups: backtracking table fill with
// associativity pruning, canonical forms over element relabelings (optionally
// also over reversal), and the three deduplication modes used as the test
// universe for every universally quantified law in the library.

#ifndef POINTLIKE_ENUMERATE_HPP_
#define POINTLIKE_ENUMERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "pointlike/errors.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

enum class Dedup { Raw, UpToIso, UpToIsoAntiIso };

// Enumeration order cap: POINTLIKE_LAB_MAX_ORDER may lower the default,
// but the hard cap stays at kMaxEnumerationOrder.
inline int enumeration_cap() {
  int cap = kMaxEnumerationOrder;
  if (const char* env = std::getenv("POINTLIKE_LAB_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      cap = std::min<long>(cap, v);
    }
  }
  return cap;
}

namespace detail {

// Relabel a flat table by permutation p: entry (p[i], p[j]) = p[table[i][j]].
inline std::vector<Elem> permuted_table(const std::vector<Elem>& table, int n,
                                        const std::vector<Elem>& p) {
  std::vector<Elem> out(table.size());
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      out[p[i] * n + p[j]] = p[table[i * n + j]];
    }
  }
  return out;
}

inline std::vector<Elem> reversed_table(const std::vector<Elem>& table,
                                        int n) {
  std::vector<Elem> out(table.size());
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) out[i * n + j] = table[j * n + i];
  }
  return out;
}

}  // namespace detail

// Lexicographically minimal relabeling of the row-major table.
inline std::vector<Elem> canonical_table(const std::vector<Elem>& table,
                                         int n) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Elem> best = table;
  while (std::next_permutation(p.begin(), p.end())) {
    std::vector<Elem> cand = detail::permuted_table(table, n, p);
    if (cand < best) best = cand;
  }
  return best;
}

inline std::vector<Elem> canonical_table(const Semigroup& s) {
  return canonical_table(s.table(), s.order());
}

// Minimal over relabelings of both the table and its reversal.
inline std::vector<Elem> canonical_table_anti(const std::vector<Elem>& table,
                                              int n) {
  return std::min(canonical_table(table, n),
                  canonical_table(detail::reversed_table(table, n), n));
}

// Streams every associative n x n table in lexicographic order, keeping only
// canonical representatives per the dedup mode.  Deterministic.
inline void enumerate_semigroups(int n, Dedup dedup,
                                 const std::function<void(const Semigroup&)>&
                                     emit) {
  if (n < 1 || n > enumeration_cap()) {
    throw Error(ErrorKind::SizeCap,
                "enumeration order " + std::to_string(n) + " outside 1.." +
                    std::to_string(enumeration_cap()));
  }
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, -1);
  // After each cell assignment, check all triples whose five lookups are
  // already determined; a violated triple prunes the whole subtree.
  auto consistent = [&](int) {
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        Elem ij = table[i * n + j];
        if (ij < 0) continue;
        for (Elem k = 0; k < n; ++k) {
          Elem jk = table[j * n + k];
          if (jk < 0) continue;
          Elem left = table[ij * n + k];
          Elem right = table[i * n + jk];
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    }
    return true;
  };
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * n) {
      switch (dedup) {
        case Dedup::Raw:
          emit(Semigroup(n, table));
          break;
        case Dedup::UpToIso:
          if (canonical_table(table, n) == table) emit(Semigroup(n, table));
          break;
        case Dedup::UpToIsoAntiIso:
          if (canonical_table_anti(table, n) == table) {
            emit(Semigroup(n, table));
          }
          break;
      }
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      table[cell] = v;
      if (consistent(cell)) fill(cell + 1);
    }
    table[cell] = -1;
  };
  fill(0);
}

inline std::vector<Semigroup> all_semigroups(int n, Dedup dedup) {
  std::vector<Semigroup> out;
  enumerate_semigroups(n, dedup, [&out](const Semigroup& s) {
    out.push_back(s);
  });
  return out;
}

inline std::uint64_t count_semigroups(int n, Dedup dedup) {
  std::uint64_t c = 0;
  enumerate_semigroups(n, dedup, [&c](const Semigroup&) { ++c; });
  return c;
}

}  // namespace pointlike

#endif  // POINTLIKE_ENUMERATE_HPP_
