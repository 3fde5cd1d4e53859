/*
 * Copyright 2026 The localscott Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOCALSCOTT_ORACLES_HPP
#define LOCALSCOTT_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "localscott/scott.hpp"

namespace localscott {

/// One failed identity.
struct Discrepancy {
  std::string suite;
  std::string lemma;
  std::optional<std::size_t> u;
  std::optional<std::size_t> v;
  std::optional<std::size_t> level;
  /// point / element indices sufficient to replay the identity
  std::vector<std::size_t> witness;
  std::string detail;
  bool theorem = false;
  auto operator<=>(const Discrepancy&) const = default;
};

struct LemmaStats {
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool operator==(const LemmaStats&) const = default;
};

/**
 * Output of the differential runner. Definitional identities are asserted in
 * every mode; theorem identities only on strict instances (elsewhere they
 * are findings).
 */
struct OracleLog {
  Mode mode = Mode::exploratory;
  std::vector<Discrepancy> entries;  // at most kEntryCap per lemma
  std::map<std::string, LemmaStats> stats;
  static constexpr std::size_t kEntryCap = 16;

  bool empty() const { return entries.empty(); }
  /// A definitional discrepancy, or a theorem discrepancy on a strict instance.
  bool failed() const;
  std::size_t failures() const;
  void merge(const OracleLog& other);
};

struct OracleOptions {
  std::uint64_t seed = 0;
  /// quantifier domains up to this size are enumerated completely
  std::size_t budget = 50000;
  /// samples drawn from larger domains
  std::size_t trials = 2000;
  std::size_t workers = 1;
};

/// locsat, bH, vaught, phar, hist, vb, list, translate, orb, subs
const std::vector<std::string>& suite_names();
bool is_theorem_lemma(const std::string& lemma);

/// Runs the named suite, or every suite for "all". Throws ValidationError on
/// an unknown name.
OracleLog run_oracles(const PieceTable& table, const std::string& suite, const OracleOptions& opts = {});
OracleLog run_oracles(const PieceTable& table, const std::vector<std::string>& suites, const OracleOptions& opts = {});

}  // namespace localscott

#endif  // LOCALSCOTT_ORACLES_HPP
