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

#ifndef LOCALSCOTT_SATURATION_HPP
#define LOCALSCOTT_SATURATION_HPP

#include <optional>
#include <vector>

#include "localscott/gspace.hpp"

namespace localscott {

/// Number of rounds for reach_set; nullopt means the full union.
using Depth = std::optional<std::size_t>;
inline constexpr Depth kFullDepth = std::nullopt;

/// Local V_U-saturation: least fixpoint of A∩U ↦ V(·)∩U.
PointSet saturate(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v);

/// V_U x; empty iff x ∉ U.
PointSet local_orbit(const ActionInstance& inst, Point x, PointSet u, ElemSet v);

/// For every point, its local V_U-orbit (empty outside U). The non-empty
/// entries partition U.
std::vector<PointSet> local_orbit_map(const ActionInstance& inst, PointSet u, ElemSet v);

/**
 * ⟨V⟩ˣ_U(depth): group elements reachable from 1 by at most `depth` V-steps
 * whose partial images of x stay inside U. Empty when x ∉ U, at every depth.
 */
ElemSet reach_set(const ActionInstance& inst, Point x, PointSet u, ElemSet v, Depth depth = kFullDepth);

/// ⟨V⟩^A_U = ⋂_{t∈A} ⟨V⟩ᵗ_U (all of G for empty A).
ElemSet common_reach_set(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v);

/// V_U A = A ∩ U. Evaluated both through the fixpoint and through the
/// one-step criterion V(A∩U)∩U = A∩U; a mismatch is a logic error.
bool is_locally_invariant(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v);

/// The distinct sets ⟨V⟩^{hx}_U·h over h with hx ∈ U. Partitions
/// {h : hx ∈ U}; empty when no such h exists.
std::vector<ElemSet> group_coset_partition(const ActionInstance& inst, Point x, PointSet u, ElemSet v);

}  // namespace localscott

#endif  // LOCALSCOTT_SATURATION_HPP
