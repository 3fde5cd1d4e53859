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

#include "localscott/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "localscott/error.hpp"

namespace localscott {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw ValidationError("group must have at least one element");
  if (n > kMaxIndex)
    throw ValidationError("group order " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxIndex));
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Group Group::from_table(std::vector<std::vector<Elem>> mul) {
  const std::size_t n = mul.size();
  check_size(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[a].size() != n)
      throw ValidationError("multiplication table is not square (row " + std::to_string(a) + ")");
    for (auto v : mul[a])
      if (v >= n) throw ValidationError("table entry out of range in row " + std::to_string(a));
  }

  std::optional<Elem> e;
  for (Elem c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g) ok = mul[c][g] == g && mul[g][c] == g;
    if (ok) e = c;
  }
  if (!e) throw ValidationError("multiplication table has no identity element");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw ValidationError("multiplication is not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");

  // relabel so that the identity is 0
  std::vector<Elem> relabel(n);
  for (Elem i = 0; i < n; ++i) relabel[i] = i;
  std::swap(relabel[0], relabel[*e]);

  Group out;
  out.mul_.assign(n * n, 0);
  out.inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) out.mul_[relabel[a] * n + relabel[b]] = relabel[mul[a][b]];

  for (Elem a = 0; a < n; ++a) {
    std::optional<Elem> found;
    for (Elem b = 0; b < n && !found; ++b)
      if (out.mul(a, b) == 0 && out.mul(b, a) == 0) found = b;
    if (!found) throw ValidationError("element " + std::to_string(relabel[a]) + " has no inverse");
    out.inv_[a] = *found;
  }
  return out;
}

Group Group::from_generators(std::size_t degree, const std::vector<Permutation>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != degree)
      throw ValidationError("generator " + std::to_string(i) + " has arity " +
                            std::to_string(generators[i].size()) + ", expected " + std::to_string(degree));
    if (!is_permutation(generators[i]))
      throw ValidationError("generator " + std::to_string(i) + " is not a permutation");
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;

  std::vector<Permutation> elems{id};
  std::map<Permutation, Elem> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : generators) {
      auto p = compose(s, elems[k]);
      if (index.emplace(p, elems.size()).second) {
        elems.push_back(std::move(p));
        check_size(elems.size());
      }
    }
  }

  const std::size_t n = elems.size();
  Group out;
  out.mul_.assign(n * n, 0);
  out.inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) out.mul_[a * n + b] = index.at(compose(elems[a], elems[b]));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (out.mul(a, b) == 0) out.inv_[a] = b;
  out.degree_ = degree;
  out.perms_ = std::move(elems);
  return out;
}

Group Group::cyclic(std::size_t n) {
  check_size(n);
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t));
}

Group Group::product(const Group& g, const Group& h) {
  const std::size_t n = g.order() * h.order();
  check_size(n);
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto ga = a / h.order(), ha = a % h.order();
      auto gb = b / h.order(), hb = b % h.order();
      t[a][b] = g.mul(ga, gb) * h.order() + h.mul(ha, hb);
    }
  return from_table(std::move(t));
}

ElemSet Group::right_mul(ElemSet s, Elem b) const {
  ElemSet r;
  for (auto a : s) r.insert(mul(a, b));
  return r;
}

ElemSet Group::left_mul(Elem b, ElemSet s) const {
  ElemSet r;
  for (auto a : s) r.insert(mul(b, a));
  return r;
}

ElemSet Group::inverse(ElemSet s) const {
  ElemSet r;
  for (auto a : s) r.insert(inv(a));
  return r;
}

ElemSet Group::product_set(ElemSet s, ElemSet t) const {
  ElemSet r;
  for (auto a : s)
    for (auto b : t) r.insert(mul(a, b));
  return r;
}

bool Group::is_subgroup(ElemSet s) const {
  if (!s.contains(identity) || !s.subset_of(elements())) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.contains(mul(a, inv(b)))) return false;
  return true;
}

ElemSet Group::generated(ElemSet s) const {
  ElemSet cur = s | ElemSet::singleton(identity);
  while (true) {
    auto next = product_set(cur, cur) | inverse(cur);
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<ElemSet> Group::subgroups() const {
  // every subgroup arises from the trivial one by adjoining elements
  std::set<ElemSet::Word> seen{ElemSet::singleton(identity).bits()};
  std::deque<ElemSet> todo{ElemSet::singleton(identity)};
  while (!todo.empty()) {
    auto k = todo.front();
    todo.pop_front();
    for (Elem g = 0; g < order(); ++g) {
      if (k.contains(g)) continue;
      auto bigger = generated(k | ElemSet::singleton(g));
      if (seen.insert(bigger.bits()).second) todo.push_back(bigger);
    }
  }
  std::vector<ElemSet> out;
  for (auto w : seen) out.emplace_back(w);
  std::sort(out.begin(), out.end(), canonical_less<ElemTag>);
  return out;
}

bool Group::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Elem> Group::find(const Permutation& p) const {
  for (Elem g = 0; g < perms_.size(); ++g)
    if (perms_[g] == p) return g;
  return std::nullopt;
}

std::vector<std::vector<Elem>> Group::table() const {
  std::vector<std::vector<Elem>> t(order(), std::vector<Elem>(order()));
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

ElemSet symmetric_closure(ElemSet seed, const Group& g) {
  return (seed & g.elements()) | g.inverse(seed & g.elements()) | ElemSet::singleton(Group::identity);
}

ElemSet conjugate(ElemSet v, Elem h, const Group& g) {
  ElemSet r;
  const Elem hi = g.inv(h);
  for (auto a : v) r.insert(g.mul(g.mul(h, a), hi));
  return r;
}

std::optional<std::size_t> NeighborhoodFamily::index_of(ElemSet v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v, canonical_less<ElemTag>);
  if (it != members_.end() && *it == v) return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

NeighborhoodFamily close_neighborhood_family(const std::vector<ElemSet>& seeds, const Group& g,
                                             bool append_full) {
  std::vector<ElemSet> all;
  for (auto s : seeds) {
    auto v = symmetric_closure(s, g);
    for (Elem h = 0; h < g.order(); ++h) all.push_back(conjugate(v, h, g));
  }
  if (append_full) all.push_back(g.elements());
  std::sort(all.begin(), all.end(), canonical_less<ElemTag>);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  NeighborhoodFamily fam;
  fam.members_ = std::move(all);
  fam.full_appended_ = append_full;
  return fam;
}

}  // namespace localscott
