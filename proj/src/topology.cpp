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

#include "localscott/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "localscott/error.hpp"

namespace localscott {

namespace {

void sort_unique(std::vector<PointSet>& v) {
  std::sort(v.begin(), v.end(), canonical_less<PointTag>);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

FiniteTopology generate_topology(PointSet ground, const std::vector<PointSet>& subbasis) {
  FiniteTopology t;
  t.ground_ = ground;
  t.nbhd_.assign(ground.empty() ? 0 : ground.to_vector().back() + 1, PointSet{});
  for (auto y : ground) {
    PointSet n = ground;
    for (auto s : subbasis)
      if (s.contains(y)) n &= s;
    t.nbhd_[y] = n;
  }
  for (auto y : ground) t.basis_.push_back(t.nbhd_[y]);
  t.basis_.push_back(ground);
  sort_unique(t.basis_);
  return t;
}

bool FiniteTopology::is_open(PointSet a) const {
  if (!a.subset_of(ground_)) return false;
  for (auto y : a)
    if (!nbhd_[y].subset_of(a)) return false;
  return true;
}

bool FiniteTopology::is_discrete() const {
  for (auto y : ground_)
    if (nbhd_[y].size() != 1) return false;
  return true;
}

bool FiniteTopology::is_indiscrete() const {
  for (auto y : ground_)
    if (nbhd_[y] != ground_) return false;
  return true;
}

std::vector<PointSet> FiniteTopology::opens() const {
  if (ground_.size() > kMaxExplicitGround) throw DomainError("ground set too large to list its open sets");
  std::unordered_set<PointSet::Word> seen{0};
  std::vector<PointSet> out{PointSet{}};
  for (auto b : basis_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      PointSet u = out[i] | b;
      if (seen.insert(u.bits()).second) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less<PointTag>);
  return out;
}

bool FiniteTopology::same_opens(const FiniteTopology& other) const {
  if (ground_ != other.ground_) return false;
  for (auto y : ground_)
    if (nbhd_[y] != other.nbhd_[y]) return false;
  return true;
}

std::vector<PointSet> piece_family(const PieceTable& table, Point x, std::size_t beta) {
  const auto& inst = table.instance();
  if (beta == 0) return inst.basisU().members();
  const PointSet orb = inst.orbit(x);
  const std::size_t level = table.resolve(Level(beta));
  std::vector<PointSet> out;
  for (std::size_t c = 0; c < table.cell_count(); ++c) {
    PointSet left = orb & inst.basisU()[table.cell_u(c)];
    while (!left.empty()) {
      PointSet p = table.piece_at(level, c, left.front());
      out.push_back(p);
      left -= p;
    }
  }
  sort_unique(out);
  return out;
}

std::vector<PointSet> refined_family(const PieceTable& table, Point x, std::size_t alpha) {
  if (alpha == 0) throw DomainError("refined family needs a level of at least 1");
  std::vector<PointSet> out;
  // levels past the top one repeat the stable family
  const std::size_t last = std::min(alpha - 1, table.top_level());
  for (std::size_t beta = 0; beta <= last; ++beta) {
    auto f = piece_family(table, x, beta);
    out.insert(out.end(), f.begin(), f.end());
  }
  sort_unique(out);
  return out;
}

RefinedSpace refined_space(const PieceTable& table, Point x, std::size_t alpha) {
  const auto& inst = table.instance();
  if (alpha == 0) throw DomainError("refined space needs a level of at least 1");
  PointSet ground = table.piece(x, inst.whole_index(), inst.full_index(), Level(alpha));
  bool invariant = true;
  for (Elem g = 0; g < inst.group().order(); ++g)
    if (inst.translate(ground, g) != ground) invariant = false;
  return {ground, generate_topology(ground, refined_family(table, x, alpha)), invariant};
}

PointSet RelativeSpace::to_sub(PointSet a) const {
  PointSet out;
  for (auto y : a & ground_) out.insert(to_sub_[y]);
  return out;
}

PointSet RelativeSpace::lift(PointSet a) const {
  PointSet out;
  for (auto i : a) out.insert(to_orig_.at(i));
  return out;
}

RelativeSpace relative_space(const PieceTable& table, Point x, std::size_t alpha) {
  const auto& inst = table.instance();
  auto space = refined_space(table, x, alpha);
  if (!space.invariant) throw std::logic_error("top-level piece is not G-invariant");
  const PointSet ground = space.ground;
  std::vector<Point> to_sub(inst.size(), 0), to_orig;
  for (auto y : ground) {
    to_sub[y] = to_orig.size();
    to_orig.push_back(y);
  }
  const std::size_t k = to_orig.size();
  const Group& g = inst.group();
  ActionTable act(g.order(), std::vector<Point>(k));
  for (Elem a = 0; a < g.order(); ++a)
    for (Point i = 0; i < k; ++i) act[a][i] = to_sub[inst.act(a, to_orig[i])];

  auto relativize = [&](PointSet s) {
    PointSet out;
    for (auto y : s & ground) out.insert(to_sub[y]);
    return out;
  };
  std::vector<PointSet> seedsU;
  for (auto s : refined_family(table, x, alpha))
    if (auto r = relativize(s); !r.empty()) seedsU.push_back(r);
  const auto& seedsV = inst.basisV().members();
  auto sub = ActionInstance::build(g, k, std::move(act), seedsU, seedsV, inst.mode(),
                                   inst.name() + "/B" + std::to_string(alpha) + "(" + std::to_string(x) + ")");
  if (sub.basisV().members() != inst.basisV().members())
    throw std::logic_error("relative space reindexed the neighbourhood family");
  PieceTable t = analyze(sub);
  return RelativeSpace(ground, alpha, std::move(to_sub), std::move(to_orig), std::move(t));
}

std::vector<RelativeComparison> relative_pieces(const PieceTable& table, const RelativeSpace& rel, Point x,
                                                std::size_t gamma, Point x2, std::size_t n, std::size_t m) {
  const auto& inst = table.instance();
  const std::size_t alpha = rel.alpha();
  if (gamma < 1 || gamma >= alpha) throw DomainError("relative pieces need 1 <= gamma < alpha");
  if (x >= inst.size() || x2 >= inst.size() || !inst.orbit(x).contains(x2))
    throw DomainError("x' must lie in the orbit of x");
  if (n >= inst.basisU().size() || m >= inst.basisV().size() || !inst.basisU()[n].contains(x2))
    throw DomainError("x' must lie in U_n");
  if (!rel.ground().contains(x)) throw DomainError("relative space does not contain x");

  const PointSet d = rel.ground() & table.piece(x2, n, m, Level(gamma));
  const auto& sub = rel.table().instance();
  auto di = sub.basisU().index_of(rel.to_sub(d));
  if (!di) throw std::logic_error("relative basic set " + d.to_string() + " missing");

  std::vector<RelativeComparison> out;
  const std::size_t top = rel.table().stabilization() + 1;
  for (auto y : d)
    for (std::size_t beta = 0; beta <= top; ++beta) {
      PointSet orig = table.piece(y, n, m, Level(alpha + beta));
      PointSet relp = rel.lift(rel.table().piece(rel.to_sub(y), *di, m, Level(beta + 1)));
      out.push_back({y, beta, orig, relp});
    }
  return out;
}

OpenMapResult open_map_check(const PieceTable& table, Point x, std::size_t alpha) {
  auto space = refined_space(table, x, alpha);
  const PointSet orb = table.instance().orbit(x);
  for (auto y : orb) {
    PointSet nb = space.topology.neighborhood(y) & orb;
    if (nb != PointSet::singleton(y)) return {false, y, nb};
  }
  return {true, std::nullopt, PointSet{}};
}

}  // namespace localscott
