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

#ifndef LOCALSCOTT_SCOTT_HPP
#define LOCALSCOTT_SCOTT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "localscott/gspace.hpp"

namespace localscott {

/**
 * A refinement level: a natural number α, or STABLE for every α at or past
 * the stabilization level (limit levels included, since a finite instance
 * stops refining after finitely many steps). STABLE compares greater than
 * every natural level.
 */
class Level {
 public:
  constexpr explicit Level(std::size_t n) : n_(n) {}
  static constexpr Level stable() { return Level(kStable); }

  constexpr bool is_stable() const { return n_ == kStable; }
  constexpr std::size_t value() const { return n_; }
  constexpr auto operator<=>(const Level&) const = default;

  std::string to_string() const { return is_stable() ? "STABLE" : std::to_string(n_); }
  static Level parse(const std::string& s);

 private:
  static constexpr std::size_t kStable = std::numeric_limits<std::size_t>::max();
  std::size_t n_;
};

using PieceId = std::uint32_t;
inline constexpr PieceId kNoPiece = std::numeric_limits<PieceId>::max();

/// (piece id at level α for the pair (U_u, V_v), u, v)
struct PieceTriple {
  PieceId piece;
  std::uint32_t u;
  std::uint32_t v;
  auto operator<=>(const PieceTriple&) const = default;
};

/**
 * Finite stand-in for the level-α Scott invariant of a point relative to a
 * pair (U, V).
 *
 * Level 1: the indices n with V_U x ∩ U_n ≠ ∅ (stored in `sets`).
 * Level α+1: every triple (id of an α-piece of (U_n, V_m), n, m) whose piece
 * meets V_U x, over all n, m (stored in `triples`).
 * Both vectors are sorted and duplicate-free, so structural equality is
 * equality of the underlying sets.
 */
struct Signature {
  std::size_t level = 0;
  std::vector<std::uint32_t> sets;
  std::vector<PieceTriple> triples;
  auto operator<=>(const Signature&) const = default;
};

/// Hash-consing dictionary: structurally equal signatures get equal ids.
/// Ids are handed out in first-seen order.
class SignatureInterner {
 public:
  PieceId intern(Signature s);
  const Signature& operator[](PieceId id) const { return sigs_.at(id); }
  std::size_t size() const { return sigs_.size(); }

 private:
  std::map<Signature, PieceId> index_;
  std::vector<Signature> sigs_;
};

struct AnalyzeOptions {
  /// Cells of one level are split across this many threads; the result does
  /// not depend on it.
  std::size_t workers = 1;
  /// Optional dictionary shared with other analyses so that ids agree
  /// across tables. A fresh private one is used when null.
  std::shared_ptr<SignatureInterner> interner;
};

/**
 * Partitions of every basic U_n into α-pieces for each V_m, for all levels
 * up to one past stabilization.
 *
 * Cells are pairs (n, m) stored at index n·|𝒱| + m. Level 0 is U_n itself.
 */
class PieceTable {
 public:
  const ActionInstance& instance() const { return inst_; }
  std::size_t cell(std::size_t n, std::size_t m) const { return n * inst_.basisV().size() + m; }
  std::size_t cell_count() const { return inst_.basisU().size() * inst_.basisV().size(); }
  std::size_t cell_u(std::size_t c) const { return c / inst_.basisV().size(); }
  std::size_t cell_v(std::size_t c) const { return c % inst_.basisV().size(); }

  /// Least level L ≥ 1 whose table equals the level-(L+1) table.
  std::size_t stabilization() const { return stabilization_; }
  /// Highest level with stored ids (L + 1).
  std::size_t top_level() const { return ids_.size() - 1; }

  /// Natural level that a request resolves to: STABLE and anything past
  /// L + 1 map to L.
  std::size_t resolve(Level level) const;

  /// B_α(x, U_n, V_m). Throws DomainError if x ∉ U_n.
  PointSet piece(Point x, std::size_t n, std::size_t m, Level level) const;
  /// Canonical signature of x at (U_n, V_m); levels ≥ 1. Levels past L+1
  /// report the level-(L+1) signature, which delimits the same pieces.
  const Signature& signature(Point x, std::size_t n, std::size_t m, Level level) const;
  PieceId id(Point x, std::size_t n, std::size_t m, Level level) const;

  /// V_{U_n}x for V = V_m (empty outside U_n).
  PointSet local_orbit(std::size_t c, Point x) const { return orbits_[c * inst_.size() + x]; }
  /// Unchecked piece lookup by cell and resolved natural level.
  PointSet piece_at(std::size_t level, std::size_t c, Point x) const;
  PieceId id_at(std::size_t level, std::size_t c, Point x) const { return ids_[level][c * inst_.size() + x]; }

  /// Distinct pieces of a cell, canonically ordered.
  std::vector<PointSet> partition(std::size_t c, Level level) const;

  const SignatureInterner& dictionary() const { return *interner_; }

 private:
  friend PieceTable analyze(const ActionInstance&, const AnalyzeOptions&);
  explicit PieceTable(ActionInstance inst) : inst_(std::move(inst)) {}

  ActionInstance inst_;
  std::shared_ptr<SignatureInterner> interner_;
  std::vector<PointSet> orbits_;
  // index 0 is unused for ids (level 0 is U itself)
  std::vector<std::vector<PieceId>> ids_;
  std::vector<std::vector<PointSet>> masks_;
  std::size_t stabilization_ = 1;
};

/// Level-1 signatures from local orbits, then the successor rule until a
/// level's partitions coincide with the next one's.
PieceTable analyze(const ActionInstance& inst, const AnalyzeOptions& opts = {});

/**
 * γ*(x): least level γ ≥ 1 such that, for all cells and all x′, x″ ∈ Gx ∩ U,
 * equal γ-pieces imply equal stable pieces. Points outside U do not take
 * part in the comparison for that cell.
 */
Level scott_rank(const PieceTable& table, Point x);

/**
 * Candidate for B_{α+1}(x, U_n, V_m) assembled from α-pieces of translated
 * pairs (hU_i, hV_m h⁻¹):
 *
 *   ⋂_{(n',m') : U_n' ⊆ U, V_U x ∩ U_n' ≠ ∅} ⋃ { B_α(gx, hU_i, V_m'^h) :
 *        U_i ⊆ U_n', h ∈ ⟨V⟩^{U_i}_U, g ∈ ⟨V⟩ˣ_U, gx ∈ hU_i }
 *   ∩ ⋂_{(n',m')} ( (X∖U_n') ∪ ⋃ { B_α(gx, U_n', V_m') : g ∈ ⟨V⟩ˣ_U, gx ∈ U_n' } )
 *
 * The first intersection only runs over the U_n' ⊆ U met by the local
 * orbit. Elsewhere no U_i ⊆ U_n' need have a common reach set, the union is
 * empty and the whole right-hand side collapses to ∅.
 */
PointSet vb_piece(const PieceTable& table, Point x, std::size_t n, std::size_t m, std::size_t alpha);

/// Blocks of (X, G) at level STABLE.
std::vector<PointSet> stable_partition(const PieceTable& table);

}  // namespace localscott

#endif  // LOCALSCOTT_SCOTT_HPP
