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

// File formats and serialization.
//
//   .sgp   line 1: order n; then n rows of n space-separated indices.
//          '#' starts a comment; a '# labels: ...' comment names elements.
//   .rel   graph pairs, one "s t" per line; a lone 'closure' line asks for
//          the product closure of the listed pairs.
//
// Modulus / context expressions use a small prefix grammar (grp, jcl,
// prod:2, join(a,b), restrict(a,ctx:loc), gen(e), epapprox:aperiodic:2, ...)
// and pseudovarieties are named by fixed tokens (aperiodic, jtrivial, ...).
// JSON output is canonical: sorted keys, faces as ascending index arrays,
// face lists sorted lexicographically, no timestamps.

#ifndef POINTLIKE_IO_HPP_
#define POINTLIKE_IO_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pointlike/complex.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/modulus.hpp"
#include "pointlike/pointlikes.hpp"
#include "pointlike/relmorph.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// .sgp parsing and serialization

inline Semigroup parse_semigroup(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Elem> table;
  std::vector<std::string> labels;
  int rows_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string payload = line;
    auto hash = payload.find('#');
    if (hash != std::string::npos) {
      std::string comment = payload.substr(hash + 1);
      payload.erase(hash);
      std::istringstream cs(comment);
      std::string word;
      if (cs >> word && word == "labels:") {
        std::string lab;
        while (cs >> lab) labels.push_back(lab);
      }
    }
    std::istringstream ls(payload);
    if (n < 0) {
      if (!(ls >> n)) {
        std::string rest;
        if (payload.find_first_not_of(" \t\r") == std::string::npos) {
          n = -1;  // blank or comment-only line before the header
          continue;
        }
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": expected order",
                    {lineno});
      }
      if (n < 1) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": order must be >= 1",
                    {lineno});
      }
      std::string junk;
      if (ls >> junk) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) +
                        ": trailing text after order",
                    {lineno});
      }
      continue;
    }
    if (payload.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (rows_seen == n) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": extra table row",
                  {lineno});
    }
    int count = 0;
    Elem v;
    while (ls >> v) {
      table.push_back(v);
      ++count;
    }
    if (!ls.eof()) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": bad table entry",
                  {lineno});
    }
    if (count != n) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected " +
                      std::to_string(n) + " entries, found " +
                      std::to_string(count),
                  {lineno});
    }
    ++rows_seen;
  }
  if (n < 0) {
    throw Error(ErrorKind::ParseError, "empty input", {lineno});
  }
  if (rows_seen != n) {
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(n) + " rows, found " +
                    std::to_string(rows_seen),
                {lineno});
  }
  Semigroup s(n, std::move(table));  // forwards NonAssociative / InvalidTable
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n) {
      throw Error(ErrorKind::ParseError,
                  "labels count differs from order", {lineno});
    }
    s.set_labels(std::move(labels));
  }
  return s;
}

inline std::string serialize_semigroup(const Semigroup& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (Elem i = 0; i < s.order(); ++i) {
    for (Elem j = 0; j < s.order(); ++j) {
      out << (j ? " " : "") << s.at(i, j);
    }
    out << "\n";
  }
  if (!s.labels().empty()) {
    out << "# labels:";
    for (const auto& lab : s.labels()) out << " " << lab;
    out << "\n";
  }
  return out.str();
}

inline Semigroup load_semigroup(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_semigroup(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message(), e.data());
  }
}

// ---------------------------------------------------------------------------
// .rel parsing and serialization

inline RelMorphism parse_relmorph(const std::string& text,
                                  const Semigroup& dom,
                                  const Semigroup& cod) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool close = false;
  std::vector<GraphPair> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "closure") {
      close = true;
      continue;
    }
    Elem s, t;
    std::istringstream ps(line);
    if (!(ps >> s >> t)) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected 's t' pair",
                  {lineno});
    }
    std::string junk;
    if (ps >> junk) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": trailing text",
                  {lineno});
    }
    pairs.emplace_back(s, t);
  }
  return make_relmorph(dom, cod, std::move(pairs), close);
}

inline std::string serialize_relmorph(const RelMorphism& rho) {
  std::ostringstream out;
  for (const auto& [s, t] : rho.graph) out << s << " " << t << "\n";
  return out.str();
}

inline std::string load_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// Pseudovariety tokens

inline Pseudovariety parse_pv(const std::string& token) {
  using K = Pseudovariety::Kind;
  auto colon = token.find(':');
  std::string head = token.substr(0, colon);
  int k = 0;
  if (colon != std::string::npos) {
    std::string tail = token.substr(colon + 1);
    if (tail.empty() ||
        tail.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::ParseError,
                  "bad pseudovariety parameter in '" + token + "'");
    }
    k = std::stoi(tail);
    if (k < 1) {
      throw Error(ErrorKind::ParseError, "pseudovariety parameter < 1");
    }
  }
  auto plain = [&](K kind) {
    if (colon != std::string::npos) {
      throw Error(ErrorKind::ParseError,
                  "'" + head + "' takes no parameter");
    }
    return Pseudovariety{kind, 0};
  };
  auto param = [&](K kind) {
    if (colon == std::string::npos) {
      throw Error(ErrorKind::ParseError,
                  "'" + head + "' needs a :k parameter");
    }
    return Pseudovariety{kind, k};
  };
  if (head == "trivial") return plain(K::Trivial);
  if (head == "groups") return plain(K::Groups);
  if (head == "aperiodic") return plain(K::Aperiodic);
  if (head == "rtrivial") return plain(K::RTrivial);
  if (head == "ltrivial") return plain(K::LTrivial);
  if (head == "jtrivial") return plain(K::JTrivial);
  if (head == "semilattices") return plain(K::Semilattices);
  if (head == "bands") return plain(K::Bands);
  if (head == "commutative") return plain(K::Commutative);
  if (head == "nilpotent") {
    return colon == std::string::npos ? Pseudovariety{K::Nilpotent, 0}
                                      : Pseudovariety{K::NilpotentK, k};
  }
  if (head == "delay") return param(K::DelayK);
  if (head == "revdelay") return param(K::ReverseDelayK);
  if (head == "leftzero") return plain(K::LeftZero);
  if (head == "rightzero") return plain(K::RightZero);
  if (head == "loctrivial") return plain(K::LocallyTrivial);
  if (head == "uniqueidem") return plain(K::UniqueIdempotent);
  throw Error(ErrorKind::ParseError,
              "unknown pseudovariety '" + token + "'");
}

inline std::string pv_name(const Pseudovariety& v) {
  using K = Pseudovariety::Kind;
  switch (v.kind) {
    case K::Trivial: return "trivial";
    case K::Groups: return "groups";
    case K::Aperiodic: return "aperiodic";
    case K::RTrivial: return "rtrivial";
    case K::LTrivial: return "ltrivial";
    case K::JTrivial: return "jtrivial";
    case K::Semilattices: return "semilattices";
    case K::Bands: return "bands";
    case K::Commutative: return "commutative";
    case K::Nilpotent: return "nilpotent";
    case K::NilpotentK: return "nilpotent:" + std::to_string(v.k);
    case K::DelayK: return "delay:" + std::to_string(v.k);
    case K::ReverseDelayK: return "revdelay:" + std::to_string(v.k);
    case K::LeftZero: return "leftzero";
    case K::RightZero: return "rightzero";
    case K::LocallyTrivial: return "loctrivial";
    case K::UniqueIdempotent: return "uniqueidem";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Modulus / context expression grammar

namespace detail {

struct ExprCursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) {
      throw Error(ErrorKind::ParseError,
                  std::string("expected '") + c + "' at offset " +
                      std::to_string(pos),
                  {static_cast<std::int64_t>(pos)});
    }
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == ':' || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) {
      throw Error(ErrorKind::ParseError,
                  "expected a name at offset " + std::to_string(pos),
                  {static_cast<std::int64_t>(pos)});
    }
    return text.substr(start, pos - start);
  }
};

inline ModulusPtr parse_modulus_expr(ExprCursor& cur);
inline ContextPtr parse_context_expr(ExprCursor& cur);

inline int parse_param(const std::string& word, const std::string& head) {
  std::string tail = word.substr(head.size() + 1);
  if (tail.empty() ||
      tail.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "bad parameter in '" + word + "'");
  }
  int k = std::stoi(tail);
  if (k < 1) throw Error(ErrorKind::ParseError, "parameter < 1");
  return k;
}

inline ContextPtr context_from_word(ExprCursor& cur, const std::string& w) {
  if (w == "gen") {
    cur.expect('(');
    ModulusPtr m = parse_modulus_expr(cur);
    cur.expect(')');
    return ctx_from_modulus(std::move(m));
  }
  if (w == "ctx:grp") return ctx_builtin(ContextKind::Grp);
  if (w == "ctx:cycgrp") return ctx_builtin(ContextKind::CycGrp);
  if (w == "ctx:loc") return ctx_builtin(ContextKind::Loc);
  if (w == "ctx:egen") return ctx_builtin(ContextKind::EGen);
  if (w == "ctx:reggen") return ctx_builtin(ContextKind::RegGen);
  if (w == "ctx:full") return ctx_builtin(ContextKind::Full);
  if (w.rfind("epapprox:", 0) == 0) {
    std::string rest = w.substr(9);
    auto last = rest.rfind(':');
    if (last == std::string::npos) {
      throw Error(ErrorKind::ParseError,
                  "epapprox needs ':PV:k' parameters");
    }
    std::string pv_token = rest.substr(0, last);
    std::string bound = rest.substr(last + 1);
    if (bound.empty() ||
        bound.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::ParseError, "bad epapprox bound");
    }
    return ctx_epapprox(parse_pv(pv_token), std::stoi(bound));
  }
  throw Error(ErrorKind::ParseError, "unknown context '" + w + "'");
}

inline ContextPtr parse_context_expr(ExprCursor& cur) {
  return context_from_word(cur, cur.word());
}

inline ModulusPtr parse_modulus_expr(ExprCursor& cur) {
  std::string w = cur.word();
  if (w == "join") {
    cur.expect('(');
    ModulusPtr a = parse_modulus_expr(cur);
    cur.expect(',');
    ModulusPtr b = parse_modulus_expr(cur);
    cur.expect(')');
    return mod_join(std::move(a), std::move(b));
  }
  if (w == "restrict") {
    cur.expect('(');
    ModulusPtr a = parse_modulus_expr(cur);
    cur.expect(',');
    ContextPtr c = parse_context_expr(cur);
    cur.expect(')');
    return mod_restrict(std::move(a), std::move(c));
  }
  if (w == "grp") return mod_builtin(ModulusKind::Grp);
  if (w == "cycgrp") return mod_builtin(ModulusKind::CycGrp);
  if (w == "rcl") return mod_builtin(ModulusKind::RCl);
  if (w == "lcl") return mod_builtin(ModulusKind::LCl);
  if (w == "jcl") return mod_builtin(ModulusKind::JCl);
  if (w == "prinr") return mod_builtin(ModulusKind::PrinR);
  if (w == "prinl") return mod_builtin(ModulusKind::PrinL);
  if (w == "prinj") return mod_builtin(ModulusKind::PrinJ);
  if (w == "e") return mod_builtin(ModulusKind::E);
  if (w == "reg") return mod_builtin(ModulusKind::Reg);
  if (w.rfind("prod:", 0) == 0) {
    return mod_param(ModulusKind::Prod, parse_param(w, "prod"));
  }
  if (w.rfind("suffix:", 0) == 0) {
    return mod_param(ModulusKind::Suffix, parse_param(w, "suffix"));
  }
  if (w.rfind("prefix:", 0) == 0) {
    return mod_param(ModulusKind::Prefix, parse_param(w, "prefix"));
  }
  // A context expression in modulus position is read as its induced modulus.
  return mod_from_context(context_from_word(cur, w));
}

}  // namespace detail

inline ModulusPtr parse_modulus(const std::string& text) {
  detail::ExprCursor cur{text};
  ModulusPtr m = detail::parse_modulus_expr(cur);
  cur.skip_ws();
  if (cur.pos != text.size()) {
    throw Error(ErrorKind::ParseError,
                "trailing text at offset " + std::to_string(cur.pos),
                {static_cast<std::int64_t>(cur.pos)});
  }
  return m;
}

inline ContextPtr parse_context(const std::string& text) {
  detail::ExprCursor cur{text};
  ContextPtr c = detail::parse_context_expr(cur);
  cur.skip_ws();
  if (cur.pos != text.size()) {
    throw Error(ErrorKind::ParseError,
                "trailing text at offset " + std::to_string(cur.pos),
                {static_cast<std::int64_t>(cur.pos)});
  }
  return c;
}

inline std::string modulus_to_string(const Modulus& m);

inline std::string context_to_string(const ContextSpec& c) {
  switch (c.kind) {
    case ContextKind::Grp: return "ctx:grp";
    case ContextKind::CycGrp: return "ctx:cycgrp";
    case ContextKind::Loc: return "ctx:loc";
    case ContextKind::EGen: return "ctx:egen";
    case ContextKind::RegGen: return "ctx:reggen";
    case ContextKind::Full: return "ctx:full";
    case ContextKind::FromModulus:
      return "gen(" + modulus_to_string(*c.modulus) + ")";
    case ContextKind::EPApprox:
      return "epapprox:" + pv_name(c.pv) + ":" + std::to_string(c.max_order);
  }
  return "?";
}

inline std::string modulus_to_string(const Modulus& m) {
  switch (m.kind) {
    case ModulusKind::Grp: return "grp";
    case ModulusKind::CycGrp: return "cycgrp";
    case ModulusKind::RCl: return "rcl";
    case ModulusKind::LCl: return "lcl";
    case ModulusKind::JCl: return "jcl";
    case ModulusKind::PrinR: return "prinr";
    case ModulusKind::PrinL: return "prinl";
    case ModulusKind::PrinJ: return "prinj";
    case ModulusKind::Prod: return "prod:" + std::to_string(m.k);
    case ModulusKind::Suffix: return "suffix:" + std::to_string(m.k);
    case ModulusKind::Prefix: return "prefix:" + std::to_string(m.k);
    case ModulusKind::E: return "e";
    case ModulusKind::Reg: return "reg";
    case ModulusKind::Join:
      return "join(" + modulus_to_string(*m.left) + "," +
             modulus_to_string(*m.right) + ")";
    case ModulusKind::FromContext: return context_to_string(*m.ctx);
    case ModulusKind::ContextRestrict:
      return "restrict(" + modulus_to_string(*m.left) + "," +
             context_to_string(*m.ctx) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Canonical JSON payloads

inline Json subset_json(const std::vector<Elem>& x) { return Json(x); }

inline Json family_json(const SubsetFamily& fam) {
  Json arr = Json::array();
  for (const auto& x : fam) arr.push_back(x);
  return arr;
}

inline Json complex_json(const Complex& k) {
  std::vector<std::vector<Elem>> maxf;
  for (Mask f : k.max_faces()) maxf.push_back(mask_elements(f));
  std::sort(maxf.begin(), maxf.end());
  Json out;
  out["base_order"] = k.base().order();
  out["face_count"] = k.face_count();
  out["max_faces"] = maxf;
  return out;
}

inline Json relmorph_json(const RelMorphism& rho) {
  Json pairs = Json::array();
  for (const auto& [s, t] : rho.graph) {
    pairs.push_back(Json::array({s, t}));
  }
  Json out;
  out["dom_order"] = rho.dom.order();
  out["cod_order"] = rho.cod.order();
  out["graph"] = std::move(pairs);
  return out;
}

inline Json semigroup_json(const Semigroup& s) {
  Json rows = Json::array();
  for (Elem i = 0; i < s.order(); ++i) {
    Json row = Json::array();
    for (Elem j = 0; j < s.order(); ++j) row.push_back(s.at(i, j));
    rows.push_back(std::move(row));
  }
  Json out;
  out["order"] = s.order();
  out["table"] = std::move(rows);
  if (!s.labels().empty()) out["labels"] = s.labels();
  return out;
}

inline Json error_json(const Error& e) {
  Json err;
  err["kind"] = error_kind_name(e.kind());
  err["message"] = e.what();
  if (!e.data().empty()) err["witness"] = e.data();
  Json out;
  out["error"] = std::move(err);
  return out;
}

inline Json make_report(const std::string& command, Json inputs,
                        Json result) {
  Json out;
  out["schema"] = "1";
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["result"] = std::move(result);
  return out;
}

}  // namespace pointlike

#endif  // POINTLIKE_IO_HPP_
