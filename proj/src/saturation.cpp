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

#include "localscott/saturation.hpp"

#include <algorithm>
#include <stdexcept>

namespace localscott {

PointSet saturate(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v) {
  PointSet cur = a & u;
  while (true) {
    PointSet next = inst.apply(v, cur) & u;
    next |= cur;  // union of the stages
    if (next == cur) return cur;
    cur = next;
  }
}

PointSet local_orbit(const ActionInstance& inst, Point x, PointSet u, ElemSet v) {
  return saturate(inst, PointSet::singleton(x), u, v);
}

std::vector<PointSet> local_orbit_map(const ActionInstance& inst, PointSet u, ElemSet v) {
  std::vector<PointSet> out(inst.size());
  PointSet left = u & inst.points();
  while (!left.empty()) {
    auto o = local_orbit(inst, left.front(), u, v);
    for (auto y : o) out[y] = o;
    left -= o;
  }
  return out;
}

ElemSet reach_set(const ActionInstance& inst, Point x, PointSet u, ElemSet v, Depth depth) {
  if (!u.contains(x)) return {};
  const Group& g = inst.group();
  ElemSet cur = ElemSet::singleton(Group::identity);
  for (std::size_t round = 0; !depth || round < *depth; ++round) {
    ElemSet next;
    for (auto h : cur)
      for (auto a : v) {
        auto gh = g.mul(a, h);
        if (u.contains(inst.act(gh, x))) next.insert(gh);
      }
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

ElemSet common_reach_set(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v) {
  ElemSet r = inst.group().elements();
  for (auto t : a) r &= reach_set(inst, t, u, v);
  return r;
}

bool is_locally_invariant(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v) {
  const PointSet au = a & u;
  const bool by_fixpoint = saturate(inst, a, u, v) == au;
  const bool by_step = (inst.apply(v, au) & u) == au;
  if (by_fixpoint != by_step) throw std::logic_error("local invariance criteria disagree on " + a.to_string());
  return by_fixpoint;
}

std::vector<ElemSet> group_coset_partition(const ActionInstance& inst, Point x, PointSet u, ElemSet v) {
  const Group& g = inst.group();
  std::vector<ElemSet> blocks;
  for (Elem h = 0; h < g.order(); ++h)
    if (u.contains(inst.act(h, x))) blocks.push_back(g.right_mul(reach_set(inst, inst.act(h, x), u, v), h));
  std::sort(blocks.begin(), blocks.end(), canonical_less<ElemTag>);
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

}  // namespace localscott
