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

#include "localscott/error.hpp"
#include "localscott/gspace.hpp"

using namespace localscott;

namespace {

void expect_action_axioms(const ActionInstance& inst) {
  const auto& g = inst.group();
  for (Point x = 0; x < inst.size(); ++x) {
    EXPECT_EQ(inst.act(0, x), x);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) EXPECT_EQ(inst.act(a, inst.act(b, x)), inst.act(g.mul(a, b), x));
  }
}

void expect_families_closed(const ActionInstance& inst) {
  const auto& g = inst.group();
  PointSet cover;
  for (std::size_t i = 0; i < inst.basisU().size(); ++i) {
    const PointSet u = inst.basisU()[i];
    EXPECT_FALSE(u.empty());
    cover |= u;
    for (Elem a = 0; a < g.order(); ++a) {
      auto j = inst.basisU().index_of(inst.translate(u, a));
      ASSERT_TRUE(j);
      EXPECT_EQ(*j, inst.translate_index(i, a));
    }
  }
  EXPECT_EQ(cover, inst.points());
  EXPECT_EQ(inst.basisU()[inst.whole_index()], inst.points());
  EXPECT_EQ(inst.basisV()[inst.full_index()], g.elements());
  for (std::size_t m = 0; m < inst.basisV().size(); ++m)
    for (Elem h = 0; h < g.order(); ++h)
      EXPECT_EQ(inst.basisV()[inst.conjugate_index(m, h)], conjugate(inst.basisV()[m], h, g));
}

}  // namespace

TEST(Build, Z4SelfFamilies) {
  auto i = z4_self();
  // ordered by size, then lexicographically
  EXPECT_EQ(i.basisU().members(),
            (std::vector<PointSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 1, 2, 3}}));
  EXPECT_EQ(i.basisV().members(), (std::vector<ElemSet>{{0, 1, 3}, {0, 1, 2, 3}}));
  EXPECT_FALSE(i.strict());
  expect_action_axioms(i);
  expect_families_closed(i);
}

TEST(Build, SwapFixIsStrict) {
  auto i = swap_fix();
  EXPECT_TRUE(i.strict());
  EXPECT_EQ(i.basisU().size(), 5U);
  EXPECT_EQ(i.basisV().members(), (std::vector<ElemSet>{{0}, {0, 1}}));
}

TEST(Build, StrictNamesMissingSingleton) {
  ActionTable t{{0, 1, 2, 3}, {1, 0, 2, 3}};
  try {
    ActionInstance::build(Group::cyclic(2), 4, t, {PointSet{0, 1}}, {ElemSet{0}, ElemSet{0, 1}}, Mode::strict);
    FAIL();
  } catch (const StrictModeError& e) {
    EXPECT_NE(std::string(e.what()).find("{2}"), std::string::npos) << e.what();
  }
}

TEST(Build, StrictNeedsIdentityNeighbourhood) {
  ActionTable t{{0, 1}, {1, 0}};
  EXPECT_THROW(ActionInstance::build(Group::cyclic(2), 2, t, {PointSet{0}}, {}, Mode::strict), StrictModeError);
}

TEST(Build, RejectsBrokenActions) {
  auto g = Group::cyclic(2);
  EXPECT_THROW(ActionInstance::build(g, 2, {{0, 1}, {0, 0}}, {}, {}, Mode::exploratory), ValidationError);
  EXPECT_THROW(ActionInstance::build(g, 2, {{1, 0}, {0, 1}}, {}, {}, Mode::exploratory), ValidationError);
  // Z/3 rows that are permutations but not a homomorphism
  EXPECT_THROW(ActionInstance::build(Group::cyclic(3), 3, {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}, {}, {}, Mode::exploratory),
               ValidationError);
  EXPECT_THROW(ActionInstance::build(g, 2, {{0, 1}}, {}, {}, Mode::exploratory), ValidationError);
  EXPECT_THROW(ActionInstance::build(g, 2, {{0, 1}, {1, 0}}, {PointSet{5}}, {}, Mode::exploratory), ValidationError);
}

TEST(Translate, Examples) {
  auto i = z4_self();
  EXPECT_EQ(i.translate(PointSet{0, 1}, 0), (PointSet{0, 1}));
  EXPECT_EQ(i.translate(PointSet{0, 1}, 1), (PointSet{1, 2}));
  for (Elem g = 0; g < 4; ++g)
    for (PointSet::Word w = 0; w < 16; ++w) {
      PointSet a(w);
      EXPECT_EQ(translate_set(i, translate_set(i, a, g), i.group().inv(g)), a);
    }
}

TEST(Orbit, Examples) {
  EXPECT_EQ(z4_self().orbit(0), (PointSet{0, 1, 2, 3}));
  auto s = swap_fix();
  EXPECT_EQ(orbit(s, 2), (PointSet{2}));
  EXPECT_EQ(orbit(s, 0), (PointSet{0, 1}));
  EXPECT_EQ(s.transporter(0, 1), (ElemSet{1}));
}

TEST(Templates, CyclicSelfIsZ4Self) {
  auto a = cyclic_self(4), b = z4_self();
  EXPECT_EQ(a.basisU(), b.basisU());
  EXPECT_EQ(a.basisV(), b.basisV());
  EXPECT_EQ(a.action_table(), b.action_table());
}

TEST(Templates, CosetActionS3) {
  auto s3 = Group::from_generators(3, {{1, 0, 2}, {1, 2, 0}});
  const Elem t = *s3.find({1, 0, 2});
  auto i = coset_action(s3, ElemSet{0, t});
  EXPECT_EQ(i.size(), 3U);
  EXPECT_EQ(i.orbit(0), i.points());
  EXPECT_TRUE(i.strict());
  expect_action_axioms(i);
  EXPECT_THROW(coset_action(s3, ElemSet{0, t, *s3.find({0, 2, 1})}), DomainError);
}

TEST(Templates, Product) {
  auto p = product(swap_fix(), trivial_group_instance(2));
  EXPECT_EQ(p.size(), 8U);
  EXPECT_EQ(p.group().order(), 2U);
  EXPECT_TRUE(p.strict());
  expect_action_axioms(p);
  expect_families_closed(p);
}

TEST(Templates, NamedInstances) {
  for (const auto& n : instance_names()) {
    auto i = named_instance(n);
    ASSERT_TRUE(i) << n;
    EXPECT_EQ(i->name(), n);
    expect_action_axioms(*i);
    expect_families_closed(*i);
  }
  EXPECT_FALSE(named_instance("nope"));
  auto c = z4_coarse();
  EXPECT_EQ(c.basisU().members(), (std::vector<PointSet>{{0, 1, 2, 3}}));
  auto h = z4_halves();
  EXPECT_EQ(h.basisU().members(), (std::vector<PointSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 1, 2, 3}}));
  EXPECT_EQ(h.basisV().members(), (std::vector<ElemSet>{{0, 2}, {0, 1, 2, 3}}));
}

TEST(Mode, RoundTripAndOverride) {
  EXPECT_EQ(mode_from_string("strict"), Mode::strict);
  EXPECT_EQ(std::string(to_string(Mode::exploratory)), "exploratory");
  EXPECT_THROW(mode_from_string("lenient"), ValidationError);
  EXPECT_FALSE(swap_fix().with_mode(Mode::exploratory).strict());
  EXPECT_THROW(z4_self().with_mode(Mode::strict), StrictModeError);
}

class RandomInstances : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomInstances, ValidAndDeterministic) {
  for (Mode m : {Mode::exploratory, Mode::strict}) {
    RandomBounds b;
    b.mode = m;
    auto a = random_instance(GetParam(), b), c = random_instance(GetParam(), b);
    EXPECT_EQ(a.action_table(), c.action_table());
    EXPECT_EQ(a.basisU(), c.basisU());
    EXPECT_EQ(a.basisV(), c.basisV());
    EXPECT_LE(a.group().order(), 8U);
    EXPECT_LE(a.size(), 12U);
    EXPECT_LE(a.basisU().size(), 24U);
    EXPECT_LE(a.basisV().size(), 6U);
    EXPECT_EQ(a.strict(), m == Mode::strict);
    expect_action_axioms(a);
    expect_families_closed(a);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomInstances, ::testing::Range<std::uint64_t>(0, 40));
