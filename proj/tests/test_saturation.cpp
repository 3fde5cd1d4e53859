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

#include <gtest/gtest.h>

#include "brute.hpp"
#include "localscott/gspace.hpp"
#include "localscott/saturation.hpp"

using namespace localscott;

namespace {

const PointSet U01{0, 1};
const ElemSet V013{0, 1, 3};

std::vector<ActionInstance> corpus() {
  std::vector<ActionInstance> out;
  for (const auto& n : instance_names()) out.push_back(*named_instance(n));
  for (std::uint64_t s = 1; s <= 25; ++s) {
    RandomBounds b;
    b.max_points = 7;
    b.mode = s % 3 == 0 ? Mode::strict : Mode::exploratory;
    out.push_back(random_instance(s, b));
  }
  return out;
}

}  // namespace

TEST(Saturate, Examples) {
  auto i = z4_self();
  EXPECT_EQ(saturate(i, PointSet{0}, U01, V013), U01);
  EXPECT_EQ(saturate(i, PointSet{2, 3}, U01, V013), PointSet{});
  for (std::size_t n = 0; n < i.basisU().size(); ++n)
    for (auto v : i.basisV()) EXPECT_EQ(saturate(i, i.points(), i.basisU()[n], v), i.basisU()[n]);
  EXPECT_EQ(saturate(i, PointSet{}, U01, V013), PointSet{});
}

TEST(LocalOrbit, Examples) {
  auto i = z4_self();
  EXPECT_EQ(local_orbit(i, 0, U01, V013), U01);
  EXPECT_EQ(local_orbit(i, 1, U01, ElemSet{0}), (PointSet{1}));
  EXPECT_EQ(local_orbit(i, 3, U01, V013), PointSet{});
  auto map = local_orbit_map(i, U01, V013);
  EXPECT_EQ(map[0], U01);
  EXPECT_EQ(map[2], PointSet{});
}

TEST(Reach, Examples) {
  auto i = z4_self();
  EXPECT_EQ(reach_set(i, 0, U01, V013), (ElemSet{0, 1}));
  EXPECT_EQ(reach_set(i, 0, U01, V013, 0), (ElemSet{0}));
  EXPECT_EQ(reach_set(i, 3, U01, V013, 0), ElemSet{});
  EXPECT_EQ(reach_set(i, 3, U01, V013), ElemSet{});
  EXPECT_EQ(common_reach_set(i, U01, U01, V013), (ElemSet{0}));
}

TEST(Invariance, Examples) {
  auto i = z4_self();
  EXPECT_TRUE(is_locally_invariant(i, i.points(), U01, V013));
  EXPECT_TRUE(is_locally_invariant(i, PointSet{2, 3}, U01, V013));
  EXPECT_FALSE(is_locally_invariant(i, PointSet{0}, U01, V013));
  EXPECT_TRUE(is_locally_invariant(i, PointSet{0, 1, 2}, U01, V013));
}

TEST(CosetPartition, Examples) {
  auto i = z4_self();
  auto blocks = group_coset_partition(i, 0, U01, V013);
  ElemSet all;
  for (auto b : blocks) {
    EXPECT_FALSE(all.intersects(b));
    all |= b;
  }
  EXPECT_EQ(all, (ElemSet{0, 1}));
  auto whole = group_coset_partition(i, 0, i.points(), i.group().elements());
  ASSERT_EQ(whole.size(), 1U);
  EXPECT_EQ(whole[0], i.group().elements());
  auto s = swap_fix();
  EXPECT_TRUE(group_coset_partition(s, 2, PointSet{0, 1}, ElemSet{0, 1}).empty());
}

TEST(Saturate, MatchesBruteForce) {
  for (const auto& inst : corpus()) {
    const std::size_t full = std::size_t{1} << inst.size();
    for (auto u : inst.basisU())
      for (auto v : inst.basisV()) {
        for (std::size_t a = 0; a < full; a += 1 + inst.size() / 4) {
          PointSet A(a);
          ASSERT_EQ(saturate(inst, A, u, v), brute::saturate(inst, A, u, v)) << inst.name();
        }
        for (Point x = 0; x < inst.size(); ++x) {
          ASSERT_EQ(reach_set(inst, x, u, v), brute::reach(inst, x, u, v)) << inst.name();
          for (long d = 0; d <= 3; ++d)
            ASSERT_EQ(reach_set(inst, x, u, v, static_cast<std::size_t>(d)), brute::reach(inst, x, u, v, d));
          EXPECT_EQ(local_orbit(inst, x, u, v).empty(), !u.contains(x));
        }
      }
  }
}

TEST(Saturate, CommonReachIsIntersection) {
  for (const auto& inst : corpus())
    for (auto u : inst.basisU())
      for (auto v : inst.basisV())
        for (auto a : inst.basisU()) {
          ElemSet want = inst.group().elements();
          for (auto t : a) want &= brute::reach(inst, t, u, v);
          EXPECT_EQ(common_reach_set(inst, a, u, v), want);
        }
}

TEST(Saturate, InvarianceMatchesDefinition) {
  for (const auto& inst : corpus()) {
    const std::size_t full = std::size_t{1} << inst.size();
    for (auto u : inst.basisU())
      for (auto v : inst.basisV())
        for (std::size_t a = 0; a < full; a += 3) {
          PointSet A(a);
          EXPECT_EQ(is_locally_invariant(inst, A, u, v), brute::saturate(inst, A, u, v) == (A & u));
        }
  }
}

TEST(Saturate, BoundedRounds) {
  // the fixpoint never needs more than |U| steps: check via a trace of stages
  for (const auto& inst : corpus())
    for (auto u : inst.basisU())
      for (auto v : inst.basisV())
        for (auto x : u) {
          PointSet cur = PointSet::singleton(x);
          std::size_t rounds = 0;
          for (;;) {
            PointSet next = inst.apply(v, cur) & u;
            next |= cur;
            if (next == cur) break;
            cur = next;
            ++rounds;
          }
          EXPECT_LE(rounds, u.size());
          EXPECT_EQ(cur, local_orbit(inst, x, u, v));
        }
}
