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

#include "localscott/gspace.hpp"

#include <algorithm>
#include <random>

#include "localscott/error.hpp"

namespace localscott {

const char* to_string(Mode m) { return m == Mode::strict ? "strict" : "exploratory"; }

Mode mode_from_string(const std::string& s) {
  if (s == "strict") return Mode::strict;
  if (s == "exploratory") return Mode::exploratory;
  throw ValidationError("unknown mode \"" + s + "\" (expected strict or exploratory)");
}

std::optional<std::size_t> SetFamily::index_of(PointSet u) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), u, canonical_less<PointTag>);
  if (it != members_.end() && *it == u) return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

ActionInstance ActionInstance::build(Group group, std::size_t size, ActionTable act,
                                     const std::vector<PointSet>& seedsU, const std::vector<ElemSet>& seedsV,
                                     Mode mode, std::string name) {
  if (size == 0) throw ValidationError("space must have at least one point");
  if (size > kMaxIndex)
    throw ValidationError("space size " + std::to_string(size) + " exceeds the supported maximum " +
                          std::to_string(kMaxIndex));
  const std::size_t n = group.order();
  if (act.size() != n)
    throw ValidationError("action table has " + std::to_string(act.size()) + " rows, group order is " +
                          std::to_string(n));

  ActionInstance inst;
  inst.act_.assign(n * size, 0);
  for (Elem g = 0; g < n; ++g) {
    if (act[g].size() != size)
      throw ValidationError("action row " + std::to_string(g) + " has " + std::to_string(act[g].size()) +
                            " entries, expected " + std::to_string(size));
    std::vector<bool> hit(size, false);
    for (Point x = 0; x < size; ++x) {
      auto y = act[g][x];
      if (y >= size || hit[y]) throw ValidationError("action row " + std::to_string(g) + " is not a permutation");
      hit[y] = true;
      inst.act_[g * size + x] = y;
    }
  }
  inst.size_ = size;
  for (Point x = 0; x < size; ++x)
    if (inst.act_[x] != x) throw ValidationError("identity moves point " + std::to_string(x));
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      for (Point x = 0; x < size; ++x)
        if (inst.act(g, inst.act(h, x)) != inst.act(group.mul(g, h), x))
          throw ValidationError("action is not compatible with multiplication at g=" + std::to_string(g) +
                                ", h=" + std::to_string(h) + ", x=" + std::to_string(x));

  const PointSet all = PointSet::prefix(size);
  std::vector<PointSet> us;
  for (auto s : seedsU) {
    if (!s.subset_of(all)) throw ValidationError("basisU seed " + s.to_string() + " has points outside X");
    if (s.empty()) continue;
    for (Elem g = 0; g < n; ++g) us.push_back(inst.translate(s, g));
  }
  us.push_back(all);
  std::sort(us.begin(), us.end(), canonical_less<PointTag>);
  us.erase(std::unique(us.begin(), us.end()), us.end());
  inst.basisU_.members_ = std::move(us);
  inst.basisU_.whole_appended_ = true;

  for (auto s : seedsV)
    if (!s.subset_of(group.elements()))
      throw ValidationError("basisV seed " + s.to_string() + " has elements outside G");
  inst.basisV_ = close_neighborhood_family(seedsV, group, true);

  inst.transU_.resize(n * inst.basisU_.size());
  for (Elem g = 0; g < n; ++g)
    for (std::size_t i = 0; i < inst.basisU_.size(); ++i)
      inst.transU_[g * inst.basisU_.size() + i] = *inst.basisU_.index_of(inst.translate(inst.basisU_[i], g));
  inst.conjV_.resize(n * inst.basisV_.size());
  for (Elem h = 0; h < n; ++h)
    for (std::size_t m = 0; m < inst.basisV_.size(); ++m)
      inst.conjV_[h * inst.basisV_.size() + m] = *inst.basisV_.index_of(conjugate(inst.basisV_[m], h, group));

  inst.group_ = std::move(group);
  inst.name_ = std::move(name);
  return inst.with_mode(mode);
}

ActionInstance ActionInstance::with_mode(Mode m) const {
  if (m == Mode::strict) {
    std::string missing;
    std::size_t count = 0;
    for (Point x = 0; x < size_; ++x)
      if (!basisU_.index_of(PointSet::singleton(x))) {
        missing += (count++ ? ", {" : "{") + std::to_string(x) + "}";
      }
    if (count)
      throw StrictModeError("strict mode: singleton" + std::string(count > 1 ? "s " : " ") + missing +
                            " missing from basisU");
    if (!basisV_.index_of(ElemSet::singleton(Group::identity)))
      throw StrictModeError("strict mode: {1_G} missing from basisV");
  }
  ActionInstance out = *this;
  out.mode_ = m;
  return out;
}

PointSet ActionInstance::translate(PointSet a, Elem g) const {
  PointSet r;
  for (auto x : a) r.insert(act(g, x));
  return r;
}

PointSet ActionInstance::apply(ElemSet h, PointSet a) const {
  PointSet r;
  for (auto g : h) r |= translate(a, g);
  return r;
}

PointSet ActionInstance::orbit(Point x) const { return apply(group_.elements(), PointSet::singleton(x)); }

ElemSet ActionInstance::transporter(Point x, Point y) const {
  ElemSet r;
  for (Elem g = 0; g < group_.order(); ++g)
    if (act(g, x) == y) r.insert(g);
  return r;
}

ActionTable ActionInstance::action_table() const {
  ActionTable t(group_.order(), std::vector<Point>(size_));
  for (Elem g = 0; g < group_.order(); ++g)
    for (Point x = 0; x < size_; ++x) t[g][x] = act(g, x);
  return t;
}

PointSet translate_set(const ActionInstance& inst, PointSet a, Elem g) { return inst.translate(a, g); }
PointSet orbit(const ActionInstance& inst, Point x) { return inst.orbit(x); }

// ---------------------------------------------------------------------------

namespace {

ActionTable self_action(const Group& g) {
  ActionTable t(g.order(), std::vector<Point>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

std::vector<PointSet> singletons(std::size_t n) {
  std::vector<PointSet> s;
  for (Point x = 0; x < n; ++x) s.push_back(PointSet::singleton(x));
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }
  bool coin(unsigned num, unsigned den) { return below(den) < num; }
  std::uint64_t word() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

Group quaternion() {
  // regular representation: i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5)
  return Group::from_generators(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
}

}  // namespace

std::vector<Group> small_groups() {
  std::vector<Group> gs;
  gs.push_back(Group::cyclic(1));
  gs.push_back(Group::cyclic(2));
  gs.push_back(Group::cyclic(3));
  gs.push_back(Group::cyclic(4));
  gs.push_back(Group::product(Group::cyclic(2), Group::cyclic(2)));
  gs.push_back(Group::cyclic(5));
  gs.push_back(Group::cyclic(6));
  gs.push_back(Group::from_generators(3, {{1, 0, 2}, {1, 2, 0}}));  // S3
  gs.push_back(Group::cyclic(7));
  gs.push_back(Group::cyclic(8));
  gs.push_back(Group::product(Group::cyclic(2), Group::cyclic(4)));
  gs.push_back(Group::product(Group::product(Group::cyclic(2), Group::cyclic(2)), Group::cyclic(2)));
  gs.push_back(Group::from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}));  // D4
  gs.push_back(quaternion());
  return gs;
}

ActionInstance cyclic_self(std::size_t n) {
  auto g = Group::cyclic(n);
  auto t = self_action(g);
  std::vector<PointSet> su;
  if (n > 1) su.push_back(PointSet{0, 1});
  std::vector<ElemSet> sv;
  if (n > 1) sv.push_back(ElemSet{0, 1, n - 1});
  return ActionInstance::build(std::move(g), n, std::move(t), su, sv, Mode::exploratory,
                               "cyclic_self(" + std::to_string(n) + ")");
}

ActionInstance swap_fix() {
  auto g = Group::cyclic(2);
  ActionTable t{{0, 1, 2, 3}, {1, 0, 2, 3}};
  return ActionInstance::build(std::move(g), 4, std::move(t), singletons(4), {ElemSet{0}, ElemSet{0, 1}},
                               Mode::strict, "swapfix");
}

ActionInstance coset_action(const Group& g, ElemSet h, std::optional<std::vector<PointSet>> seedsU,
                            std::optional<std::vector<ElemSet>> seedsV, Mode mode) {
  if (!g.is_subgroup(h)) throw DomainError("coset_action: " + h.to_string() + " is not a subgroup");
  std::vector<ElemSet> cosets;
  std::vector<Point> coset_of(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    auto c = g.left_mul(a, h);
    auto it = std::find(cosets.begin(), cosets.end(), c);
    coset_of[a] = static_cast<Point>(it - cosets.begin());
    if (it == cosets.end()) cosets.push_back(c);
  }
  const std::size_t n = cosets.size();
  ActionTable t(g.order(), std::vector<Point>(n));
  for (Elem a = 0; a < g.order(); ++a)
    for (Point c = 0; c < n; ++c) t[a][c] = coset_of[g.mul(a, cosets[c].front())];
  auto su = seedsU.value_or(singletons(n));
  auto sv = seedsV.value_or(std::vector<ElemSet>{ElemSet{Group::identity}});
  return ActionInstance::build(g, n, std::move(t), su, sv, mode, "coset_action");
}

ActionInstance product(const ActionInstance& a, const ActionInstance& b) {
  auto g = Group::product(a.group(), b.group());
  const std::size_t nb = b.size(), hb = b.group().order();
  const std::size_t n = a.size() * nb;
  ActionTable t(g.order(), std::vector<Point>(n));
  for (Elem e = 0; e < g.order(); ++e)
    for (Point p = 0; p < n; ++p) t[e][p] = a.act(e / hb, p / nb) * nb + b.act(e % hb, p % nb);
  std::vector<PointSet> su;
  for (auto u : a.basisU())
    for (auto w : b.basisU()) {
      PointSet s;
      for (auto x : u)
        for (auto y : w) s.insert(x * nb + y);
      su.push_back(s);
    }
  std::vector<ElemSet> sv;
  for (auto v : a.basisV())
    for (auto w : b.basisV()) {
      ElemSet s;
      for (auto x : v)
        for (auto y : w) s.insert(x * hb + y);
      sv.push_back(s);
    }
  Mode m = a.strict() && b.strict() ? Mode::strict : Mode::exploratory;
  return ActionInstance::build(std::move(g), n, std::move(t), su, sv, m, "product(" + a.name() + "," + b.name() + ")");
}

ActionInstance random_instance(std::uint64_t seed, const RandomBounds& bounds) {
  Rng rng(seed);
  auto groups = small_groups();
  std::erase_if(groups, [&](const Group& g) { return g.order() > bounds.max_group; });
  if (groups.empty()) throw DomainError("random_instance: no group fits the bounds");
  const Group g = groups[rng.below(groups.size())];

  // disjoint union of coset spaces G/H
  auto subs = g.subgroups();
  std::vector<ElemSet> orbit_stabs;
  std::size_t total = 0;
  const std::size_t want_orbits = 1 + rng.below(3);
  for (std::size_t attempt = 0; attempt < 16 && orbit_stabs.size() < want_orbits; ++attempt) {
    auto h = subs[rng.below(subs.size())];
    auto sz = g.order() / h.size();
    if (total + sz > bounds.max_points) continue;
    orbit_stabs.push_back(h);
    total += sz;
  }
  if (orbit_stabs.empty()) {
    orbit_stabs.push_back(g.elements());
    total = 1;
  }

  ActionTable t(g.order(), std::vector<Point>(total));
  std::size_t offset = 0;
  for (auto h : orbit_stabs) {
    std::vector<ElemSet> cosets;
    std::vector<Point> coset_of(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      auto c = g.left_mul(a, h);
      auto it = std::find(cosets.begin(), cosets.end(), c);
      coset_of[a] = static_cast<Point>(it - cosets.begin());
      if (it == cosets.end()) cosets.push_back(c);
    }
    for (Elem a = 0; a < g.order(); ++a)
      for (Point c = 0; c < cosets.size(); ++c) t[a][offset + c] = offset + coset_of[g.mul(a, cosets[c].front())];
    offset += cosets.size();
  }

  const PointSet all = PointSet::prefix(total);
  std::vector<PointSet> su;
  if (bounds.mode == Mode::strict) su = singletons(total);
  auto family_size = [&](const std::vector<PointSet>& seeds) {
    std::vector<PointSet> fam;
    for (auto s : seeds)
      for (Elem a = 0; a < g.order(); ++a) {
        PointSet r;
        for (auto x : s) r.insert(t[a][x]);
        fam.push_back(r);
      }
    fam.push_back(all);
    std::sort(fam.begin(), fam.end(), canonical_less<PointTag>);
    return static_cast<std::size_t>(std::unique(fam.begin(), fam.end()) - fam.begin());
  };
  const std::size_t extra_u = rng.below(6);
  for (std::size_t k = 0; k < extra_u; ++k) {
    auto s = PointSet(rng.word()) & all;
    if (s.empty()) continue;
    su.push_back(s);
    if (family_size(su) > bounds.max_u) su.pop_back();
  }

  std::vector<ElemSet> sv;
  if (bounds.mode == Mode::strict) sv.push_back(ElemSet{Group::identity});
  const std::size_t extra_v = rng.below(4);
  for (std::size_t k = 0; k < extra_v; ++k) {
    sv.push_back(ElemSet(rng.word()) & g.elements());
    if (close_neighborhood_family(sv, g, true).size() > bounds.max_v) sv.pop_back();
  }

  auto inst = ActionInstance::build(g, total, std::move(t), su, sv, bounds.mode, "random(" + std::to_string(seed) + ")");
  inst.set_seed(seed);
  return inst;
}

ActionInstance z4_self() {
  auto i = cyclic_self(4);
  i.set_name("z4self");
  return i;
}

ActionInstance z4_coarse() {
  auto g = Group::cyclic(4);
  auto t = self_action(g);
  return ActionInstance::build(std::move(g), 4, std::move(t), {}, {ElemSet{0, 1, 3}}, Mode::exploratory, "z4coarse");
}

ActionInstance z4_halves() {
  auto g = Group::cyclic(4);
  auto t = self_action(g);
  return ActionInstance::build(std::move(g), 4, std::move(t), {PointSet{0, 1}, PointSet{2, 3}}, {ElemSet{0, 2}},
                               Mode::exploratory, "z4halves");
}

ActionInstance trivial_group_instance(std::size_t points) {
  ActionTable t{std::vector<Point>(points)};
  for (Point x = 0; x < points; ++x) t[0][x] = x;
  return ActionInstance::build(Group::cyclic(1), points, std::move(t), singletons(points), {ElemSet{0}},
                               Mode::strict, "trivial");
}

std::optional<ActionInstance> named_instance(const std::string& name) {
  if (name == "z4self") return z4_self();
  if (name == "z4coarse") return z4_coarse();
  if (name == "z4halves") return z4_halves();
  if (name == "swapfix") return swap_fix();
  if (name == "trivial") return trivial_group_instance();
  return std::nullopt;
}

std::vector<std::string> instance_names() { return {"swapfix", "trivial", "z4coarse", "z4halves", "z4self"}; }

}  // namespace localscott
