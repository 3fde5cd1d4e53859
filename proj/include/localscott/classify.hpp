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

#ifndef LOCALSCOTT_CLASSIFY_HPP
#define LOCALSCOTT_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localscott/scott.hpp"
#include "localscott/topology.hpp"

namespace localscott {

/// (n, m) with x ∈ U_n and (V_m)_{U_n} x ⊆ Vx, or nothing.
using OpennessWitness = std::optional<std::pair<std::size_t, std::size_t>>;

struct EventualOpenness {
  /// witnesses[x][k] for the k-th member of 𝒱; the first (n, m) in index
  /// order is reported
  std::vector<std::vector<OpennessWitness>> witnesses;
  bool value = true;
};

EventualOpenness eventual_openness(const ActionInstance& inst);

/// A locally invariant set A and a point x ∈ A whose piece leaves A.
struct ContainmentViolation {
  std::size_t u;
  std::size_t v;
  Point x;
  PointSet a;
  PointSet piece;
};

struct ContainmentResult {
  std::size_t alpha;
  bool holds = true;
  bool exhaustive = true;   // false once some pair fell back to sampling
  std::size_t sets_checked = 0;
  std::size_t budget = 0;
  std::vector<ContainmentViolation> violations;
};

/**
 * For every pair (U, V), every locally V_U-invariant A and every x ∈ A ∩ U,
 * checks B_α(x, U, V) ⊆ A. Invariant sets are unions of local orbits joined
 * with X∖U (the part outside U does not affect the check, so only the
 * maximal padding is used). Pairs with |U| ≤ 12 are enumerated completely;
 * larger ones draw at most `budget` unions from a generator seeded by `seed`.
 */
ContainmentResult invariant_containment_check(const PieceTable& table, std::size_t alpha, std::size_t budget = 4096,
                                              std::uint64_t seed = 0);

struct PointReport {
  Point x;
  std::vector<OpennessWitness> witnesses;
  Level rank{1};
  PointSet orbit;
  PointSet piece_rank;    // B_{γ*+2}(x, X, G)
  PointSet piece_stable;  // B_STABLE(x, X, G)
  bool orbit_is_piece;    // condition (3) at x
  bool rank_regression;   // B_{γ*+2} = B_STABLE
  OpenMapResult open_map; // condition (4) at x, level γ*+2
  /// open at some level 1..L+2 iff open at γ*+2
  bool open_levels_consistent;
};

struct ClascharReport {
  Mode mode;
  std::vector<PointReport> points;
  bool cond1 = true;
  bool cond2 = true;
  bool cond3 = true;
  bool cond4 = true;
  ContainmentResult containment;
  /// human-readable notes on disagreements; in strict mode any note is a
  /// failure
  std::vector<std::string> flags;
  bool all_true() const { return cond1 && cond2 && cond3 && cond4; }
};

ClascharReport claschar_report(const PieceTable& table, std::size_t budget = 4096, std::uint64_t seed = 0);

}  // namespace localscott

#endif  // LOCALSCOTT_CLASSIFY_HPP
