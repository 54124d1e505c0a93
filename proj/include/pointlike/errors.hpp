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

#ifndef POINTLIKE_ERRORS_HPP_
#define POINTLIKE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pointlike {

// Every failure mode raised by the library.  The CLI maps these one-to-one
// onto machine-readable error kinds.
enum class ErrorKind {
  NonAssociative,             // table fails associativity; witness = (i, j, k)
  InvalidTable,               // malformed table (entry out of range, shape)
  SizeCap,                    // a configured size limit would be exceeded
  EmptyOperand,               // empty subset passed where nonempty required
  BaseMismatch,               // complexes or subsets over different bases
  DomMismatch,                // relational morphisms with different domains
  CodDomMismatch,             // composition with cod != dom
  MorphismConditionViolated,  // map fails the homomorphism / graph condition
  NotGenerating,              // claimed generating set does not generate
  NotSurjectiveOntoDomain,    // graph misses some domain element
  NotProductClosed,           // pair set is not closed under products
  PointsMismatch,             // certification pre-check failed; witness table
  ParseError,                 // malformed input text; data[0] = line number
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::DomMismatch: return "DomMismatch";
    case ErrorKind::CodDomMismatch: return "CodDomMismatch";
    case ErrorKind::MorphismConditionViolated:
      return "MorphismConditionViolated";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotSurjectiveOntoDomain: return "NotSurjectiveOntoDomain";
    case ErrorKind::NotProductClosed: return "NotProductClosed";
    case ErrorKind::PointsMismatch: return "PointsMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Single exception type carrying a kind plus a small integer payload
// (witness triple, line number, offending indices, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::int64_t> data = {})
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " +
                           message),
        kind_(kind),
        message_(message),
        data_(std::move(data)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The text without the kind prefix, for wrappers that add context.
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::vector<std::int64_t> data_;
};

}  // namespace pointlike

#endif  // POINTLIKE_ERRORS_HPP_
