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

#include <algorithm>
#include <set>

#include "localscott/error.hpp"
#include "localscott/gspace.hpp"
#include "localscott/topology.hpp"

using namespace localscott;

namespace {

// closes under pairwise ∩, then pairwise ∪, until nothing new appears
std::vector<PointSet> brute_opens(PointSet ground, const std::vector<PointSet>& sub) {
  std::set<PointSet::Word> fam{0, ground.bits()};
  for (auto s : sub) fam.insert((s & ground).bits());
  for (int pass = 0; pass < 2; ++pass) {
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<PointSet::Word> cur(fam.begin(), fam.end());
      for (auto a : cur)
        for (auto b : cur) grew |= fam.insert(pass == 0 ? (a & b) : (a | b)).second;
    }
  }
  std::vector<PointSet> out;
  for (auto w : fam) out.push_back(PointSet(w));
  std::sort(out.begin(), out.end(), canonical_less<PointTag>);
  return out;
}

std::vector<ActionInstance> corpus() {
  std::vector<ActionInstance> out;
  for (const auto& n : instance_names()) out.push_back(*named_instance(n));
  for (std::uint64_t s = 200; s < 230; ++s) {
    RandomBounds b;
    b.max_points = 8;
    b.mode = s % 2 ? Mode::strict : Mode::exploratory;
    out.push_back(random_instance(s, b));
  }
  return out;
}

}  // namespace

TEST(Topology, EmptySubbasisIsIndiscrete) {
  auto t = generate_topology(PointSet{0, 1, 2}, {});
  EXPECT_TRUE(t.is_indiscrete());
  EXPECT_EQ(t.opens(), (std::vector<PointSet>{{}, {0, 1, 2}}));
}

TEST(Topology, IntersectionIsOpen) {
  auto t = generate_topology(PointSet{0, 1, 2, 3}, {PointSet{0, 1}, PointSet{0, 3}});
  EXPECT_TRUE(t.is_open(PointSet{0}));
  EXPECT_EQ(t.neighborhood(0), (PointSet{0}));
  EXPECT_FALSE(t.is_open(PointSet{1}));
  EXPECT_EQ(t.opens(), (std::vector<PointSet>{{}, {0}, {0, 1}, {0, 3}, {0, 1, 3}, {0, 1, 2, 3}}));
}

TEST(Topology, SingletonsGiveDiscrete) {
  std::vector<PointSet> singles;
  for (Point x = 0; x < 5; ++x) singles.push_back(PointSet::singleton(x));
  auto t = generate_topology(PointSet::prefix(5), singles);
  EXPECT_TRUE(t.is_discrete());
  EXPECT_EQ(t.opens().size(), 32U);
}

TEST(Topology, OpensMatchBruteClosure) {
  std::uint64_t state = 42;
  for (int trial = 0; trial < 200; ++trial) {
    state = state * 6364136223846793005ULL + 1;
    const std::size_t n = 1 + (state >> 60) % 7;
    const PointSet ground = PointSet::prefix(n) & PointSet(state >> 7 | 1);
    std::vector<PointSet> sub;
    for (int k = 0; k < 4; ++k) {
      state = state * 6364136223846793005ULL + 1;
      sub.push_back(PointSet(state >> 33) & PointSet::prefix(n));
    }
    auto t = generate_topology(ground, sub);
    auto opens = t.opens();
    EXPECT_EQ(opens, brute_opens(ground, sub));
    for (auto a : opens) {
      EXPECT_TRUE(t.is_open(a));
      for (auto b : opens) {
        EXPECT_TRUE(t.is_open(a | b));
        EXPECT_TRUE(t.is_open(a & b));
      }
    }
  }
}

TEST(Topology, ExplicitListCapped) {
  auto t = generate_topology(PointSet::prefix(21), {});
  EXPECT_THROW(t.opens(), DomainError);
}

TEST(RefinedFamily, LevelOneIsU) {
  auto inst = z4_self();
  auto t = analyze(inst);
  EXPECT_EQ(refined_family(t, 0, 1), inst.basisU().members());
  EXPECT_EQ(refined_family(t, 0, 2), inst.basisU().members());
  EXPECT_THROW(refined_family(t, 0, 0), DomainError);
}

TEST(RefinedFamily, SwapFixAddsPieces) {
  auto t = analyze(swap_fix());
  auto f = refined_family(t, 0, 2);
  EXPECT_NE(std::find(f.begin(), f.end(), PointSet{0, 1}), f.end());
  EXPECT_NE(std::find(f.begin(), f.end(), PointSet{0}), f.end());
}

TEST(RefinedSpace, Examples) {
  auto z4 = analyze(z4_self());
  auto sp = refined_space(z4, 0, 2);
  EXPECT_EQ(sp.ground, (PointSet{0, 1, 2, 3}));
  EXPECT_TRUE(sp.invariant);
  EXPECT_TRUE(sp.topology.is_discrete());

  auto coarse = refined_space(analyze(z4_coarse()), 0, 2);
  EXPECT_EQ(coarse.ground, (PointSet{0, 1, 2, 3}));
  EXPECT_TRUE(coarse.topology.is_indiscrete());
  EXPECT_EQ(coarse.topology.opens(), (std::vector<PointSet>{{}, {0, 1, 2, 3}}));
}

TEST(RefinedSpace, StrictIsDiscrete) {
  for (const auto& inst : corpus()) {
    if (!inst.strict()) continue;
    auto t = analyze(inst);
    for (Point x = 0; x < inst.size(); ++x)
      for (std::size_t a = 1; a <= t.top_level() + 1; ++a) EXPECT_TRUE(refined_space(t, x, a).topology.is_discrete());
  }
}

TEST(RefinedFamily, MonotoneAndPiecesOpen) {
  for (const auto& inst : corpus()) {
    auto t = analyze(inst);
    for (Point x = 0; x < inst.size(); ++x)
      for (std::size_t a = 1; a <= t.top_level() + 1; ++a) {
        auto f = refined_family(t, x, a), g = refined_family(t, x, a + 1);
        for (auto p : f) EXPECT_NE(std::find(g.begin(), g.end(), p), g.end());
        auto sp = refined_space(t, x, a);
        EXPECT_TRUE(sp.invariant);
        for (auto p : f) EXPECT_TRUE(sp.topology.is_open(p & sp.ground));
      }
  }
}

TEST(RelativePieces, Z4SelfAllStable) {
  auto t = analyze(z4_self());
  auto rel = relative_space(t, 0, 2);
  auto cmp = relative_pieces(t, rel, 0, 1, 0, 0, 1);
  ASSERT_FALSE(cmp.empty());
  for (const auto& c : cmp) {
    EXPECT_TRUE(c.equal()) << c.y << " " << c.beta;
    EXPECT_EQ(c.original, t.piece(c.y, 0, 1, Level::stable()));
  }
}

TEST(RelativePieces, SwapFixAllCells) {
  auto t = analyze(swap_fix());
  const auto& inst = t.instance();
  auto rel = relative_space(t, 0, 2);
  EXPECT_EQ(rel.ground(), (PointSet{0, 1}));
  for (std::size_t n = 0; n < inst.basisU().size(); ++n)
    for (std::size_t m = 0; m < inst.basisV().size(); ++m)
      for (auto x2 : inst.orbit(0) & inst.basisU()[n])
        for (const auto& c : relative_pieces(t, rel, 0, 1, x2, n, m)) EXPECT_TRUE(c.equal());
}

TEST(RelativePieces, SinglePointSpace) {
  auto t = analyze(trivial_group_instance(3));
  auto rel = relative_space(t, 1, 2);
  EXPECT_EQ(rel.ground(), (PointSet{1}));
  for (const auto& c : relative_pieces(t, rel, 1, 1, 1, t.instance().basisU().index_of(PointSet{1}).value(), 0)) {
    EXPECT_EQ(c.original, (PointSet{1}));
    EXPECT_TRUE(c.equal());
  }
}

TEST(RelativePieces, Preconditions) {
  auto t = analyze(swap_fix());
  auto rel = relative_space(t, 0, 2);
  EXPECT_THROW(relative_pieces(t, rel, 0, 2, 0, 0, 0), DomainError);
  EXPECT_THROW(relative_pieces(t, rel, 0, 0, 0, 0, 0), DomainError);
  EXPECT_THROW(relative_pieces(t, rel, 0, 1, 2, 0, 0), DomainError);
}

TEST(OpenMap, Examples) {
  auto z4 = analyze(z4_self());
  EXPECT_TRUE(open_map_check(z4, 0, 3).open);
  auto coarse = analyze(z4_coarse());
  auto r = open_map_check(coarse, 0, 3);
  EXPECT_FALSE(r.open);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, 0U);
  EXPECT_EQ(r.neighborhood, (PointSet{0, 1, 2, 3}));
  for (const auto& inst : corpus())
    if (inst.strict()) {
      auto t = analyze(inst);
      for (Point x = 0; x < inst.size(); ++x) EXPECT_TRUE(open_map_check(t, x, 1).open);
    }
}
