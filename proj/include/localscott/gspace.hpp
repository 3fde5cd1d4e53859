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

#ifndef LOCALSCOTT_GSPACE_HPP
#define LOCALSCOTT_GSPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localscott/algebra.hpp"
#include "localscott/index_set.hpp"

namespace localscott {

/// strict: 𝒰 holds every singleton and 𝒱 holds {1_G}, so both families are
/// genuine bases of the discrete topologies and every theorem is asserted.
/// exploratory: arbitrary closed families; only definitional identities are
/// asserted.
enum class Mode { strict, exploratory };

const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);

/**
 * The translation-closed family 𝒰 of subsets of X.
 *
 * Empty sets are never members. Ordered by cardinality then
 * lexicographically, so X (when appended) is the last member.
 */
class SetFamily {
 public:
  SetFamily() = default;

  std::size_t size() const { return members_.size(); }
  PointSet operator[](std::size_t i) const { return members_[i]; }
  const std::vector<PointSet>& members() const { return members_; }
  bool whole_appended() const { return whole_appended_; }
  std::optional<std::size_t> index_of(PointSet u) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool operator==(const SetFamily&) const = default;

 private:
  friend class ActionInstance;
  std::vector<PointSet> members_;
  bool whole_appended_ = false;
};

/// act[g][x] is the image of point x under element g.
using ActionTable = std::vector<std::vector<Point>>;

class ActionInstance {
 public:
  /**
   * Closes seedsU under translation and seedsV under symmetrization and
   * conjugation, appends X and G, then validates the action axioms and, in
   * strict mode, the presence of all singletons and of {1_G}.
   */
  static ActionInstance build(Group group, std::size_t size, ActionTable act, const std::vector<PointSet>& seedsU,
                              const std::vector<ElemSet>& seedsV, Mode mode, std::string name = {});

  const Group& group() const { return group_; }
  std::size_t size() const { return size_; }
  Point act(Elem g, Point x) const { return act_[g * size_ + x]; }
  PointSet points() const { return PointSet::prefix(size_); }

  const SetFamily& basisU() const { return basisU_; }
  const NeighborhoodFamily& basisV() const { return basisV_; }
  Mode mode() const { return mode_; }
  bool strict() const { return mode_ == Mode::strict; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::optional<std::uint64_t> seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

  /// gA
  PointSet translate(PointSet a, Elem g) const;
  /// HA = {hx : h ∈ H, x ∈ A}
  PointSet apply(ElemSet h, PointSet a) const;
  /// Gx
  PointSet orbit(Point x) const;
  /// {g : gx = y}
  ElemSet transporter(Point x, Point y) const;

  /// Index of gU_i in basisU.
  std::size_t translate_index(std::size_t i, Elem g) const { return transU_[g * basisU_.size() + i]; }
  /// Index of hV_m h⁻¹ in basisV.
  std::size_t conjugate_index(std::size_t m, Elem h) const { return conjV_[h * basisV_.size() + m]; }

  /// Index of X in basisU and of G in basisV.
  std::size_t whole_index() const { return basisU_.size() - 1; }
  std::size_t full_index() const { return basisV_.size() - 1; }

  ActionTable action_table() const;

  /// Same tables and families, different mode; strict requirements are
  /// re-validated.
  ActionInstance with_mode(Mode m) const;

 private:
  ActionInstance() = default;
  Group group_ = Group::cyclic(1);
  std::size_t size_ = 0;
  std::vector<Point> act_;
  SetFamily basisU_;
  NeighborhoodFamily basisV_;
  Mode mode_ = Mode::exploratory;
  std::string name_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::size_t> transU_;
  std::vector<std::size_t> conjV_;
};

/// pointwise image under g (free-function form of ActionInstance::translate)
PointSet translate_set(const ActionInstance& inst, PointSet a, Elem g);
PointSet orbit(const ActionInstance& inst, Point x);

// ---------------------------------------------------------------------------
// Instance templates

/// Z/n acting on itself by addition; 𝒰 from {0,1}, 𝒱 from {0,1,n-1}.
ActionInstance cyclic_self(std::size_t n);

/// Z/2 on four points {a,b,c,d} = {0,1,2,3} swapping a and b; all
/// singletons in 𝒰, 𝒱 = [{1}, G]. Strict.
ActionInstance swap_fix();

/// Left multiplication on the left cosets of h (coset of g at the position
/// of its first occurrence when enumerating g = 0, 1, ...). With no seeds the
/// strict template (singletons, {1}) is used.
ActionInstance coset_action(const Group& g, ElemSet h, std::optional<std::vector<PointSet>> seedsU = std::nullopt,
                            std::optional<std::vector<ElemSet>> seedsV = std::nullopt,
                            Mode mode = Mode::strict);

/// G₁×G₂ on X₁×X₂, point (x₁,x₂) at x₁·|X₂|+x₂; families are products of
/// members. Strict iff both factors are.
ActionInstance product(const ActionInstance& a, const ActionInstance& b);

struct RandomBounds {
  std::size_t max_group = 8;
  std::size_t max_points = 12;
  std::size_t max_u = 24;
  std::size_t max_v = 6;
  Mode mode = Mode::exploratory;
};

/// Deterministic in the seed on every platform (raw mt19937_64 output only).
ActionInstance random_instance(std::uint64_t seed, const RandomBounds& bounds);

/// All groups of order ≤ 8 up to isomorphism, smallest first.
std::vector<Group> small_groups();

// Named instances used by the examples, tests and CLI.
ActionInstance z4_self();     // "z4self"
ActionInstance z4_coarse();   // "z4coarse": 𝒰 = {X}, 𝒱 = {{0,1,3}, G}
ActionInstance z4_halves();   // "z4halves": 𝒰 from {0,1},{2,3}; 𝒱 = {{0,2}, G}
ActionInstance trivial_group_instance(std::size_t points = 3);  // "trivial"

/// Looks up one of the names above; nullopt when unknown.
std::optional<ActionInstance> named_instance(const std::string& name);
std::vector<std::string> instance_names();

}  // namespace localscott

#endif  // LOCALSCOTT_GSPACE_HPP
