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

#ifndef LOCALSCOTT_ALGEBRA_HPP
#define LOCALSCOTT_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "localscott/index_set.hpp"

namespace localscott {

/// Images of 0..degree-1; p[i] is where i goes.
using Permutation = std::vector<std::size_t>;

/// Composition p∘q (apply q first).
Permutation compose(const Permutation& p, const Permutation& q);

/**
 * A finite group given by its Cayley table.
 *
 * Element 0 is always the identity. Groups built from permutation
 * generators keep the permutation of every element so callers can look
 * elements up by their action; mul(a, b) is then perm(a)∘perm(b).
 */
class Group {
 public:
  static constexpr Elem identity = 0;

  /// Validates associativity, identity and inverses. If the identity sits at
  /// some index e ≠ 0 the labels e and 0 are swapped.
  static Group from_table(std::vector<std::vector<Elem>> mul);

  /// Closure of the generators under composition, enumerated breadth-first
  /// from the identity (left multiplication by generators, in order).
  static Group from_generators(std::size_t degree, const std::vector<Permutation>& generators);

  /// Cyclic group Z/n, element k acting as addition of k.
  static Group cyclic(std::size_t n);

  /// G × H with (g,h) at index g·|H| + h.
  static Group product(const Group& g, const Group& h);

  std::size_t order() const { return inv_.size(); }
  Elem mul(Elem a, Elem b) const { return mul_[a * order() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  ElemSet elements() const { return ElemSet::prefix(order()); }

  /// {a·b : a ∈ s}
  ElemSet right_mul(ElemSet s, Elem b) const;
  /// {b·a : a ∈ s}
  ElemSet left_mul(Elem b, ElemSet s) const;
  /// {a⁻¹ : a ∈ s}
  ElemSet inverse(ElemSet s) const;
  /// {a·b : a ∈ s, b ∈ t}
  ElemSet product_set(ElemSet s, ElemSet t) const;

  bool is_subgroup(ElemSet s) const;
  /// Smallest subgroup containing s.
  ElemSet generated(ElemSet s) const;
  /// Every subgroup, in canonical set order.
  std::vector<ElemSet> subgroups() const;
  bool is_abelian() const;

  bool has_permutations() const { return !perms_.empty(); }
  std::size_t degree() const { return degree_; }
  const Permutation& permutation(Elem g) const { return perms_.at(g); }
  std::optional<Elem> find(const Permutation& p) const;

  /// Row-major Cayley table.
  std::vector<std::vector<Elem>> table() const;

  bool operator==(const Group& o) const { return mul_ == o.mul_; }

 private:
  Group() = default;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
};

/// seed ∪ seed⁻¹ ∪ {1}.
ElemSet symmetric_closure(ElemSet seed, const Group& g);

/// hVh⁻¹, the convention that makes f(V_U A) = (V^f)_{fU}(fA) hold.
ElemSet conjugate(ElemSet v, Elem h, const Group& g);

/**
 * The family 𝒱 of symmetric identity neighbourhoods.
 *
 * Members are symmetric, contain the identity, are closed under conjugation
 * and are ordered by cardinality then lexicographically. When the full group
 * is part of the family it is the last member.
 */
class NeighborhoodFamily {
 public:
  NeighborhoodFamily() = default;

  std::size_t size() const { return members_.size(); }
  ElemSet operator[](std::size_t i) const { return members_[i]; }
  const std::vector<ElemSet>& members() const { return members_; }
  bool full_appended() const { return full_appended_; }
  std::optional<std::size_t> index_of(ElemSet v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool operator==(const NeighborhoodFamily&) const = default;

 private:
  friend NeighborhoodFamily close_neighborhood_family(const std::vector<ElemSet>&, const Group&, bool);
  std::vector<ElemSet> members_;
  bool full_appended_ = false;
};

NeighborhoodFamily close_neighborhood_family(const std::vector<ElemSet>& seeds, const Group& g,
                                             bool append_full);

}  // namespace localscott

#endif  // LOCALSCOTT_ALGEBRA_HPP
