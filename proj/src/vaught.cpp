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

#include "localscott/vaught.hpp"

#include <string>

#include "localscott/error.hpp"

namespace localscott {

namespace {

void require_nonempty(ElemSet h) {
  if (h.empty()) throw DomainError("transform over empty set");
}

}  // namespace

PointSet delta(const ActionInstance& inst, PointSet a, ElemSet h) {
  require_nonempty(h);
  PointSet r;
  for (Point x = 0; x < inst.size(); ++x)
    for (auto g : h)
      if (a.contains(inst.act(g, x))) {
        r.insert(x);
        break;
      }
  return r;
}

PointSet star(const ActionInstance& inst, PointSet a, ElemSet h) {
  require_nonempty(h);
  PointSet r;
  for (Point x = 0; x < inst.size(); ++x) {
    bool all = true;
    for (auto g : h)
      if (!a.contains(inst.act(g, x))) {
        all = false;
        break;
      }
    if (all) r.insert(x);
  }
  return r;
}

PointSet local_delta_n(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v, std::size_t n) {
  if (n == 0) throw DomainError("local transform stage must be at least 1");
  PointSet cur = a & u;
  for (std::size_t k = 0; k < n; ++k) cur = delta(inst, cur, v) & u;
  return cur;
}

PointSet local_star_n(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v, std::size_t n) {
  if (n == 0) throw DomainError("local transform stage must be at least 1");
  const PointSet outside = inst.points() - u;
  PointSet cur = a & u;
  for (std::size_t k = 0; k < n; ++k) cur = star(inst, cur | outside, v) & u;
  return cur;
}

PointSet local_delta(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v) {
  PointSet acc = local_delta_n(inst, a, u, v, 1);
  PointSet stage = acc;
  for (std::size_t n = 2; n <= inst.size() + 1; ++n) {
    auto next = delta(inst, stage, v) & u;
    if (next == stage) break;
    stage = next;
    acc |= stage;
  }
  return acc;
}

PointSet local_star(const ActionInstance& inst, PointSet a, PointSet u, ElemSet v) {
  const PointSet outside = inst.points() - u;
  PointSet acc = local_star_n(inst, a, u, v, 1);
  PointSet stage = acc;
  for (std::size_t n = 2; n <= inst.size() + 1; ++n) {
    auto next = star(inst, stage | outside, v) & u;
    if (next == stage) break;
    stage = next;
    acc &= stage;
  }
  return acc;
}

}  // namespace localscott
