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

#include "localscott/classify.hpp"

#include <random>

#include "localscott/error.hpp"
#include "localscott/saturation.hpp"

namespace localscott {

EventualOpenness eventual_openness(const ActionInstance& inst) {
  const auto& U = inst.basisU();
  const auto& V = inst.basisV();
  // local orbit maps per pair, shared by all points
  std::vector<std::vector<PointSet>> lo(U.size() * V.size());
  for (std::size_t n = 0; n < U.size(); ++n)
    for (std::size_t m = 0; m < V.size(); ++m) lo[n * V.size() + m] = local_orbit_map(inst, U[n], V[m]);

  EventualOpenness out;
  out.witnesses.assign(inst.size(), std::vector<OpennessWitness>(V.size()));
  for (Point x = 0; x < inst.size(); ++x)
    for (std::size_t k = 0; k < V.size(); ++k) {
      const PointSet vx = inst.apply(V[k], PointSet::singleton(x));
      OpennessWitness w;
      for (std::size_t n = 0; n < U.size() && !w; ++n) {
        if (!U[n].contains(x)) continue;
        for (std::size_t m = 0; m < V.size(); ++m)
          if (lo[n * V.size() + m][x].subset_of(vx)) {
            w = std::make_pair(n, m);
            break;
          }
      }
      if (!w) out.value = false;
      out.witnesses[x][k] = w;
    }
  return out;
}

ContainmentResult invariant_containment_check(const PieceTable& table, std::size_t alpha, std::size_t budget,
                                              std::uint64_t seed) {
  if (alpha == 0) throw DomainError("containment check needs a level of at least 1");
  constexpr std::size_t kExhaustiveLimit = 12;
  constexpr std::size_t kViolationCap = 256;
  const auto& inst = table.instance();
  const std::size_t level = table.resolve(Level(alpha));
  ContainmentResult res;
  res.alpha = alpha;
  res.budget = budget;
  std::mt19937_64 rng(seed);

  for (std::size_t c = 0; c < table.cell_count(); ++c) {
    const PointSet u = inst.basisU()[table.cell_u(c)];
    const PointSet pad = inst.points() - u;
    std::vector<PointSet> orbits;
    for (PointSet left = u; !left.empty();) {
      PointSet o = table.local_orbit(c, left.front());
      orbits.push_back(o);
      left -= o;
    }
    auto check = [&](std::uint64_t mask) {
      PointSet inside;
      for (std::size_t i = 0; i < orbits.size(); ++i)
        if ((mask >> i) & 1U) inside |= orbits[i];
      const PointSet a = inside | pad;
      ++res.sets_checked;
      for (auto x : inside) {
        PointSet p = table.piece_at(level, c, x);
        if (!p.subset_of(a)) {
          res.holds = false;
          if (res.violations.size() < kViolationCap)
            res.violations.push_back({table.cell_u(c), table.cell_v(c), x, a, p});
        }
      }
    };
    const std::size_t k = orbits.size();
    if (u.size() <= kExhaustiveLimit) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) check(mask);
    } else {
      res.exhaustive = false;
      const std::uint64_t all = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
      for (std::size_t s = 0; s < budget; ++s) check(rng() & all);
    }
  }
  return res;
}

ClascharReport claschar_report(const PieceTable& table, std::size_t budget, std::uint64_t seed) {
  const auto& inst = table.instance();
  const std::size_t whole = inst.whole_index(), full = inst.full_index();
  const std::size_t top = table.stabilization() + 2;
  ClascharReport rep;
  rep.mode = inst.mode();
  auto eo = eventual_openness(inst);
  rep.cond1 = eo.value;

  for (Point x = 0; x < inst.size(); ++x) {
    PointReport pr;
    pr.x = x;
    pr.witnesses = eo.witnesses[x];
    pr.rank = scott_rank(table, x);
    const std::size_t lvl = pr.rank.value() + 2;
    pr.orbit = inst.orbit(x);
    pr.piece_rank = table.piece(x, whole, full, Level(lvl));
    pr.piece_stable = table.piece(x, whole, full, Level::stable());
    pr.rank_regression = pr.piece_rank == pr.piece_stable;
    pr.orbit_is_piece = pr.orbit == pr.piece_rank;
    pr.open_map = open_map_check(table, x, lvl);
    bool some_open = false;
    for (std::size_t a = 1; a <= top; ++a) some_open = some_open || open_map_check(table, x, a).open;
    pr.open_levels_consistent = some_open == pr.open_map.open;

    rep.cond3 = rep.cond3 && pr.orbit_is_piece;
    rep.cond4 = rep.cond4 && pr.open_map.open;
    if (!pr.rank_regression)
      rep.flags.push_back("point " + std::to_string(x) + ": piece at rank+2 differs from the stable piece");
    if (!pr.open_levels_consistent)
      rep.flags.push_back("point " + std::to_string(x) + ": open at some level but not at rank+2");
    rep.points.push_back(std::move(pr));
  }

  rep.containment = invariant_containment_check(table, 1, budget, seed);
  rep.cond2 = rep.containment.holds;

  if (inst.strict()) {
    if (!rep.cond1) rep.flags.push_back("condition (1) fails on a strict instance");
    if (!rep.cond2) rep.flags.push_back("condition (2) fails on a strict instance");
    if (!rep.cond3) rep.flags.push_back("condition (3) fails on a strict instance");
    if (!rep.cond4) rep.flags.push_back("condition (4) fails on a strict instance");
  } else {
    const bool c[4] = {rep.cond1, rep.cond2, rep.cond3, rep.cond4};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (c[i] != c[j])
          rep.flags.push_back("conditions (" + std::to_string(i + 1) + ") and (" + std::to_string(j + 1) +
                              ") disagree");
  }
  return rep;
}

}  // namespace localscott
