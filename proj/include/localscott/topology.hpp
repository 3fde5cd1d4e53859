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

#ifndef LOCALSCOTT_TOPOLOGY_HPP
#define LOCALSCOTT_TOPOLOGY_HPP

#include <optional>
#include <vector>

#include "localscott/scott.hpp"

namespace localscott {

/**
 * A topology on a finite ground set.
 *
 * Stored through the least open neighbourhood of every point; a set is
 * open iff it contains the least neighbourhood of each of its points. The
 * full lattice of open sets is materialized only on request.
 */
class FiniteTopology {
 public:
  PointSet ground() const { return ground_; }
  /// Least neighbourhoods of the points together with the ground set,
  /// canonically ordered. Every open set is a union of members.
  const std::vector<PointSet>& basis() const { return basis_; }
  /// Least open set containing x (x must lie in the ground set).
  PointSet neighborhood(Point x) const { return nbhd_[x]; }

  bool is_open(PointSet a) const;
  bool is_discrete() const;
  bool is_indiscrete() const;

  /// Every open set, canonically ordered. Throws DomainError when the ground
  /// set has more than kMaxExplicitGround points.
  std::vector<PointSet> opens() const;
  static constexpr std::size_t kMaxExplicitGround = 20;

  /// Same open sets (checked through least neighbourhoods).
  bool same_opens(const FiniteTopology& other) const;

 private:
  friend FiniteTopology generate_topology(PointSet ground, const std::vector<PointSet>& subbasis);
  PointSet ground_;
  std::vector<PointSet> basis_;
  std::vector<PointSet> nbhd_;
};

/// Topology on `ground` generated by the members of `subbasis` intersected
/// with the ground set.
FiniteTopology generate_topology(PointSet ground, const std::vector<PointSet>& subbasis);

/// ℬˣ_β: 𝒰 for β = 0, otherwise the β-pieces B_β(x', U, V) over all pairs
/// and all x' ∈ Gx ∩ U. Canonically ordered, duplicate-free.
std::vector<PointSet> piece_family(const PieceTable& table, Point x, std::size_t beta);

/// ℬˣ_{<α} = ⋃_{β<α} ℬˣ_β.
std::vector<PointSet> refined_family(const PieceTable& table, Point x, std::size_t alpha);

struct RefinedSpace {
  PointSet ground;  // B_α(x, X, G)
  FiniteTopology topology;
  bool invariant;   // G maps the ground set onto itself
};

/// B_α(x, X, G) with the topology generated by ℬˣ_{<α}.
RefinedSpace refined_space(const PieceTable& table, Point x, std::size_t alpha);

/**
 * The G-space B_α(x, X, G) with basic sets ℬˣ_{<α} (relativized), analysed
 * on its own. Points are renumbered in increasing order.
 */
class RelativeSpace {
 public:
  PointSet ground() const { return ground_; }
  std::size_t alpha() const { return alpha_; }
  const PieceTable& table() const { return table_; }
  /// sub-instance index of an original point (which must lie in the ground)
  Point to_sub(Point y) const { return to_sub_[y]; }
  PointSet to_sub(PointSet a) const;
  PointSet lift(PointSet a) const;

 private:
  friend RelativeSpace relative_space(const PieceTable& table, Point x, std::size_t alpha);
  RelativeSpace(PointSet ground, std::size_t alpha, std::vector<Point> to_sub, std::vector<Point> to_orig, PieceTable t)
      : ground_(ground), alpha_(alpha), to_sub_(std::move(to_sub)), to_orig_(std::move(to_orig)), table_(std::move(t)) {}
  PointSet ground_;
  std::size_t alpha_;
  std::vector<Point> to_sub_;
  std::vector<Point> to_orig_;
  PieceTable table_;
};

/// Requires α ≥ 1. In the sub-instance 𝒱 is the same family with the same
/// indices.
RelativeSpace relative_space(const PieceTable& table, Point x, std::size_t alpha);

/// One comparison B_{α+β}(y, U, V) against the relative B_{β+1}(y, D, V),
/// D = B_α(x, X, G) ∩ B_γ(x', U, V).
struct RelativeComparison {
  Point y;
  std::size_t beta;
  PointSet original;
  PointSet relative;  // lifted back to original indices
  bool equal() const { return original == relative; }
};

/**
 * All comparisons for y ∈ D and finite β from 0 to one past the relative
 * stabilization level. Requires 1 ≤ γ < α = rel.alpha() and x' ∈ Gx ∩ U_n.
 * Throws DomainError on violated preconditions.
 */
std::vector<RelativeComparison> relative_pieces(const PieceTable& table, const RelativeSpace& rel, Point x,
                                                std::size_t gamma, Point x2, std::size_t n, std::size_t m);

struct OpenMapResult {
  bool open;
  /// first orbit point whose singleton is not relatively open
  std::optional<Point> witness;
  /// least neighbourhood of the witness, intersected with the orbit
  PointSet neighborhood;
};

/// g ↦ gx is open for the topology generated by ℬˣ_{<α} iff every point of
/// the orbit is isolated in the relative topology on Gx.
OpenMapResult open_map_check(const PieceTable& table, Point x, std::size_t alpha);

}  // namespace localscott

#endif  // LOCALSCOTT_TOPOLOGY_HPP
