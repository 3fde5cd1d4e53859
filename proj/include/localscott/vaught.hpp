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

#ifndef LOCALSCOTT_VAUGHT_HPP
#define LOCALSCOTT_VAUGHT_HPP

#include <cstddef>

#include "localscott/gspace.hpp"

namespace localscott {

// In a finite discrete group a subset of a non-empty H is non-meagre in H iff
// it is non-empty, and comeagre in H iff it is all of H. These two
// transforms are the only place that reading enters.

/// B^{ΔH} = {x : gx ∈ A for some g ∈ H}. Throws DomainError on empty H.
PointSet delta(const ActionInstance& inst, PointSet a, ElemSet h);

/// B^{*H} = {x : gx ∈ A for every g ∈ H}. Throws DomainError on empty H.
PointSet star(const ActionInstance& inst, PointSet a, ElemSet h);

/// Stage n ≥ 1 of the local Δ-transform: stage 1 is (A∩U)^{ΔV} ∩ U, stage
/// n+1 is (stage n)^{ΔV} ∩ U. Throws DomainError for n = 0.
PointSet local_delta_n(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v, std::size_t n);

/// Stage n ≥ 1 of the local *-transform, padding with X∖U before each
/// star step.
PointSet local_star_n(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v, std::size_t n);

/// Union of all Δ stages (they increase and stabilize within |U| steps).
PointSet local_delta(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v);

/// Intersection of all * stages (they decrease).
PointSet local_star(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v);

}  // namespace localscott

#endif  // LOCALSCOTT_VAUGHT_HPP
