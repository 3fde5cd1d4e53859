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

#include "localscott/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "localscott/error.hpp"
#include "localscott/saturation.hpp"
#include "localscott/topology.hpp"
#include "localscott/vaught.hpp"

namespace localscott {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"locsat", "bH",        "vaught", "phar", "hist",
                                              "vb",     "list",      "translate", "orb",  "subs"};
  return names;
}

bool is_theorem_lemma(const std::string& lemma) {
  static const std::set<std::string> theorems{"hist.3", "hist.4", "collapse", "vb",           "list",
                                              "translate", "basis", "orb",  "subs", "pol.successor",
                                              "pol.discrete"};
  return theorems.count(lemma) > 0;
}

bool OracleLog::failed() const {
  for (const auto& e : entries)
    if (!e.theorem || mode == Mode::strict) return true;
  return false;
}

std::size_t OracleLog::failures() const {
  std::size_t n = 0;
  for (const auto& [k, s] : stats) n += s.failed;
  return n;
}

void OracleLog::merge(const OracleLog& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  for (const auto& [k, s] : other.stats) {
    stats[k].checked += s.checked;
    stats[k].failed += s.failed;
  }
}

namespace {

struct Where {
  std::optional<std::size_t> u, v, level;
  std::vector<std::size_t> witness;
};

std::vector<std::size_t> pts(PointSet s) { return s.to_vector(); }

// Recording and sampling shared by all checks of one suite.
class Run {
 public:
  Run(const PieceTable& t, std::string suite, const OracleOptions& opts, std::uint64_t salt)
      : table(t), inst(t.instance()), U(inst.basisU()), V(inst.basisV()), G(inst.group()),
        suite_(std::move(suite)), budget_(opts.budget), trials_(opts.trials),
        rng_(opts.seed * 0x9E3779B97F4A7C15ULL + salt) {
    log.mode = inst.mode();
  }

  const PieceTable& table;
  const ActionInstance& inst;
  const SetFamily& U;
  const NeighborhoodFamily& V;
  const Group& G;
  OracleLog log;

  std::size_t nu() const { return U.size(); }
  std::size_t nv() const { return V.size(); }
  std::size_t cells() const { return table.cell_count(); }
  PointSet cu(std::size_t c) const { return U[table.cell_u(c)]; }
  ElemSet cv(std::size_t c) const { return V[table.cell_v(c)]; }
  Where at(std::size_t c, std::optional<std::size_t> level = std::nullopt, std::vector<std::size_t> w = {}) const {
    return {table.cell_u(c), table.cell_v(c), level, std::move(w)};
  }

  void expect(bool ok, const std::string& lemma, const Where& w, const std::function<std::string()>& detail) {
    auto& s = log.stats[lemma];
    ++s.checked;
    if (ok) return;
    ++s.failed;
    if (s.failed > OracleLog::kEntryCap) return;
    log.entries.push_back({suite_, lemma, w.u, w.v, w.level, w.witness, detail(), is_theorem_lemma(lemma)});
  }

  template <class F>
  void each(std::size_t total, F&& f) {
    if (total <= budget_) {
      for (std::size_t i = 0; i < total; ++i) f(i);
    } else {
      for (std::size_t k = 0; k < trials_; ++k) f(below(total));
    }
  }

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  PointSet random_points(PointSet of) { return PointSet(rng_()) & of; }
  ElemSet random_elems(ElemSet of) { return ElemSet(rng_()) & of; }

  // the a-th subset of X when enumerating, random otherwise
  std::size_t subset_count() const { return inst.size() >= 20 ? std::size_t{1} << 20 : std::size_t{1} << inst.size(); }
  PointSet subset(std::size_t a) const { return PointSet(static_cast<PointSet::Word>(a)) & inst.points(); }

  // V-indices of family members contained in V_m
  std::vector<std::size_t> sub_v(std::size_t m) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < nv(); ++k)
      if (V[k].subset_of(V[m])) out.push_back(k);
    return out;
  }
  std::vector<std::size_t> sub_u(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < nu(); ++k)
      if (U[k].subset_of(U[n])) out.push_back(k);
    return out;
  }

  std::vector<ElemSet>& reach_of(std::size_t c) {
    auto it = reach_.find(c);
    if (it != reach_.end()) return it->second;
    std::vector<ElemSet> r(inst.size());
    for (auto t : cu(c)) r[t] = reach_set(inst, t, cu(c), cv(c));
    return reach_.emplace(c, std::move(r)).first->second;
  }

  std::size_t top() const { return table.top_level(); }

 private:
  std::string suite_;
  std::size_t budget_;
  std::size_t trials_;
  std::mt19937_64 rng_;
  std::map<std::size_t, std::vector<ElemSet>> reach_;
};

std::string sets(std::initializer_list<PointSet> s) {
  std::string out;
  for (auto p : s) out += (out.empty() ? "" : " vs ") + p.to_string();
  return out;
}

// ---------------------------------------------------------------------------
// locsat

void suite_locsat(Run& r) {
  const auto& inst = r.inst;
  r.each(r.cells() * r.subset_count(), [&](std::size_t i) {
    const std::size_t c = i % r.cells();
    const PointSet a = r.subset(i / r.cells());
    const PointSet u = r.cu(c);
    const ElemSet v = r.cv(c);
    const PointSet sa = saturate(inst, a, u, v);
    const auto w = r.at(c, std::nullopt, pts(a));

    // (1) monotone in A, U and V
    {
      PointSet b = a | r.random_points(inst.points());
      auto su = r.sub_u(r.table.cell_u(c));
      auto sv = r.sub_v(r.table.cell_v(c));
      PointSet u2 = r.U[su[r.below(su.size())]];
      ElemSet v2 = r.V[sv[r.below(sv.size())]];
      PointSet small = saturate(inst, a, u2, v2);
      PointSet big = saturate(inst, b, u, v);
      r.expect(small.subset_of(big), "locsat.1", w, [&] { return sets({small, big}) + " with B=" + b.to_string(); });
    }
    // (2) unions
    {
      PointSet b = r.random_points(inst.points());
      PointSet lhs = saturate(inst, a | b, u, v);
      PointSet rhs = sa | saturate(inst, b, u, v);
      r.expect(lhs == rhs, "locsat.2", w, [&] { return sets({lhs, rhs}) + " with B=" + b.to_string(); });
    }
    // (3) idempotence
    {
      PointSet twice = saturate(inst, sa, u, v);
      r.expect(twice == sa, "locsat.3", w, [&] { return sets({twice, sa}); });
    }
    // (6) equivariance under every f
    for (Elem f = 0; f < r.G.order(); ++f) {
      PointSet lhs = inst.translate(sa, f);
      PointSet rhs = saturate(inst, inst.translate(a, f), inst.translate(u, f), conjugate(v, f, r.G));
      r.expect(lhs == rhs, "locsat.6", r.at(c, std::nullopt, {f}), [&] { return "A=" + a.to_string() + " " + sets({lhs, rhs}); });
    }
    // saturation is the union of the local orbits it meets
    {
      PointSet uni;
      for (auto x : a & u) uni |= local_orbit(inst, x, u, v);
      r.expect(uni == sa, "locsat.union-of-orbits", w, [&] { return sets({uni, sa}); });
    }
    // the two invariance criteria agree
    try {
      (void)is_locally_invariant(inst, a, u, v);
      r.expect(true, "locsat.invariance-criteria", w, [] { return std::string(); });
    } catch (const std::logic_error& e) {
      r.expect(false, "locsat.invariance-criteria", w, [&] { return std::string(e.what()); });
    }
  });

  r.each(r.cells(), [&](std::size_t c) {
    const PointSet u = r.cu(c);
    const ElemSet v = r.cv(c);
    auto& reach = r.reach_of(c);
    for (auto x : u) {
      PointSet lox = local_orbit(inst, x, u, v);
      PointSet via = inst.apply(reach[x], PointSet::singleton(x));
      r.expect(lox == via, "locsat.orbit-reach", r.at(c, std::nullopt, {x}), [&] { return sets({lox, via}); });
      // (4) V_U x = V_U y iff x ∈ V_U y
      for (auto y : u) {
        PointSet loy = local_orbit(inst, y, u, v);
        r.expect((lox == loy) == loy.contains(x), "locsat.4", r.at(c, std::nullopt, {x, y}),
                 [&] { return sets({lox, loy}); });
      }
    }
  });
}

// ---------------------------------------------------------------------------
// bH

void suite_bh(Run& r) {
  const auto& inst = r.inst;
  const auto& G = r.G;
  r.each(r.cells(), [&](std::size_t c) {
    const PointSet u = r.cu(c);
    const ElemSet v = r.cv(c);
    for (auto x : u) {
      const ElemSet full = reach_set(inst, x, u, v);
      const ElemSet one = reach_set(inst, x, u, v, 1);
      // (1) composition law, up to the depth where the sets stop growing
      for (std::size_t n = 0; n <= G.order(); ++n) {
        ElemSet lhs = reach_set(inst, x, u, v, n + 1);
        ElemSet rhs;
        for (auto h : one) rhs |= G.right_mul(reach_set(inst, inst.act(h, x), u, v, n), h);
        r.expect(lhs == rhs, "bH.1", r.at(c, n, {x}), [&] { return lhs.to_string() + " vs " + rhs.to_string(); });
      }
      // (2) coset law
      for (auto h : full) {
        ElemSet lhs = G.right_mul(reach_set(inst, inst.act(h, x), u, v), h);
        r.expect(lhs == full, "bH.2", r.at(c, std::nullopt, {x, h}),
                 [&] { return lhs.to_string() + " vs " + full.to_string(); });
      }
      // coset partition of {h : hx ∈ U}
      auto blocks = group_coset_partition(inst, x, u, v);
      ElemSet target;
      for (Elem h = 0; h < G.order(); ++h)
        if (u.contains(inst.act(h, x))) target.insert(h);
      ElemSet uni;
      bool disjoint = true;
      for (auto b : blocks) {
        if (uni.intersects(b)) disjoint = false;
        uni |= b;
      }
      r.expect(disjoint && uni == target, "bH.partition", r.at(c, std::nullopt, {x}),
               [&] { return "union " + uni.to_string() + " target " + target.to_string(); });
    }
  });
  // the convention at depth 0 and outside U
  r.each(r.cells(), [&](std::size_t c) {
    for (Point x = 0; x < inst.size(); ++x) {
      ElemSet z = reach_set(inst, x, r.cu(c), r.cv(c), 0);
      ElemSet want = r.cu(c).contains(x) ? ElemSet::singleton(Group::identity) : ElemSet{};
      r.expect(z == want, "bH.0", r.at(c, 0, {x}), [&] { return z.to_string(); });
    }
  });
}

// ---------------------------------------------------------------------------
// vaught

// symmetric subsets of v that contain the identity
std::vector<ElemSet> symmetric_parts(const Group& g, ElemSet v) {
  std::vector<Elem> reps;
  for (auto a : v)
    if (a != Group::identity && g.inv(a) >= a) reps.push_back(a);
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask) {
    ElemSet s = ElemSet::singleton(Group::identity);
    for (std::size_t i = 0; i < reps.size(); ++i)
      if ((mask >> i) & 1U) {
        s.insert(reps[i]);
        s.insert(g.inv(reps[i]));
      }
    out.push_back(s);
  }
  return out;
}

void suite_vaught(Run& r) {
  const auto& inst = r.inst;
  const auto& G = r.G;
  const PointSet X = inst.points();
  const auto subgroups = G.subgroups();

  // global transforms
  r.each(r.subset_count(), [&](std::size_t i) {
    const PointSet a = r.subset(i);
    for (auto k : subgroups) {
      PointSet lhs = delta(inst, a, k);
      PointSet rhs = inst.apply(k, a);
      r.expect(lhs == rhs, "vaught.subgroup", {std::nullopt, std::nullopt, std::nullopt, pts(a)},
               [&] { return "K=" + k.to_string() + " " + sets({lhs, rhs}); });
    }
    ElemSet h = r.random_elems(G.elements());
    if (h.empty()) h = ElemSet::singleton(Group::identity);
    const PointSet st = star(inst, a, h), de = delta(inst, a, h);
    for (Elem g = 0; g < G.order(); ++g) {
      const ElemSet hg = G.right_mul(h, g);
      const PointSet st2 = star(inst, a, hg), de2 = delta(inst, a, hg);
      bool ok = true;
      for (Point x = 0; x < inst.size(); ++x) {
        ok = ok && st.contains(inst.act(g, x)) == st2.contains(x);
        ok = ok && de.contains(inst.act(g, x)) == de2.contains(x);
      }
      r.expect(ok, "vaught.translation", {std::nullopt, std::nullopt, std::nullopt, {g}},
               [&] { return "A=" + a.to_string() + " H=" + h.to_string(); });
    }
  });

  std::map<std::size_t, std::vector<ElemSet>> parts;
  r.each(r.cells() * r.subset_count(), [&](std::size_t i) {
    const std::size_t c = i % r.cells();
    const PointSet a = r.subset(i / r.cells());
    const PointSet u = r.cu(c);
    const ElemSet v = r.cv(c);
    const auto w = r.at(c, std::nullopt, pts(a));
    auto& reach = r.reach_of(c);
    const PointSet ld = local_delta(inst, a, u, v);
    const PointSet ls = local_star(inst, a, u, v);

    // stage n from depth-n reach sets; stages are monotone
    PointSet prev_d = local_delta_n(inst, a, u, v, 1), prev_s = local_star_n(inst, a, u, v, 1);
    for (std::size_t n = 1; n <= u.size() + 1; ++n) {
      const PointSet dn = local_delta_n(inst, a, u, v, n), sn = local_star_n(inst, a, u, v, n);
      bool ok = true;
      for (auto x : u) {
        ElemSet rn = reach_set(inst, x, u, v, n);
        ok = ok && dn.contains(x) == delta(inst, a, rn).contains(x);
        ok = ok && sn.contains(x) == star(inst, a, rn).contains(x);
      }
      r.expect(ok && dn.subset_of(u) && sn.subset_of(u), "vaught.nkey", r.at(c, n, pts(a)),
               [&] { return sets({dn, sn}); });
      r.expect(prev_d.subset_of(dn) && sn.subset_of(prev_s), "vaught.monotone", r.at(c, n, pts(a)),
               [&] { return sets({prev_d, dn, prev_s, sn}); });
      prev_d = dn;
      prev_s = sn;
    }
    // full transforms from the full reach sets
    {
      bool ok = true;
      for (auto x : u) {
        ok = ok && ld.contains(x) == delta(inst, a, reach[x]).contains(x);
        ok = ok && ls.contains(x) == star(inst, a, reach[x]).contains(x);
      }
      r.expect(ok, "vaught.key", w, [&] { return sets({ld, ls}); });
    }
    // (1) antitone in V
    for (auto k : r.sub_v(r.table.cell_v(c))) {
      PointSet d2 = local_delta(inst, a, u, r.V[k]), s2 = local_star(inst, a, u, r.V[k]);
      r.expect(d2.subset_of(ld) && ls.subset_of(s2), "vaught.basic1", r.at(c, std::nullopt, pts(a)),
               [&] { return "V'=" + r.V[k].to_string() + " " + sets({d2, ld, ls, s2}); });
    }
    // (2) complement duality
    {
      PointSet lhs = local_delta(inst, u - a, u, v);
      PointSet rhs = u - ls;
      r.expect(lhs == rhs, "vaught.basic2", w, [&] { return sets({lhs, rhs}); });
    }
    // (3) unions and intersections
    {
      PointSet b = r.random_points(X);
      PointSet du = local_delta(inst, a | b, u, v), du2 = ld | local_delta(inst, b, u, v);
      PointSet si = local_star(inst, a & b, u, v), si2 = ls & local_star(inst, b, u, v);
      r.expect(du == du2 && si == si2, "vaught.basic3", w,
               [&] { return "B=" + b.to_string() + " " + sets({du, du2, si, si2}); });
    }
    // (4) decomposition over g ∈ ⟨V⟩ˣ_U and symmetric V'' ⊆ V with V''g ⊆ ⟨V⟩ˣ_U
    {
      auto it = parts.find(c);
      if (it == parts.end()) it = parts.emplace(c, symmetric_parts(G, v)).first;
      const auto& vs = it->second;
      bool ok = true;
      for (auto x : u) {
        bool any = false, all = true;
        for (auto g : reach[x]) {
          // V'' ranges over parts with V''g ⊆ R, i.e. V'' ⊆ R g⁻¹
          const ElemSet allowed = G.right_mul(reach[x], G.inv(g));
          ElemSet hits;
          for (auto e : v)
            if (a.contains(inst.act(G.mul(e, g), x))) hits.insert(e);
          for (auto p : vs) {
            if (!p.subset_of(allowed)) continue;
            if (p.subset_of(hits)) any = true;      // x ∈ A^{*(V''g)}
            if (!p.intersects(hits)) all = false;   // x ∉ A^{Δ(V''g)}
          }
        }
        ok = ok && ld.contains(x) == any && ls.contains(x) == all;
      }
      r.expect(ok, "vaught.basic4", w, [&] { return sets({ld, ls}); });
    }
    // ls ⊆ ld ⊆ saturation, both locally invariant
    {
      PointSet sa = saturate(inst, a, u, v);
      r.expect(ls.subset_of(ld) && ld.subset_of(sa), "vaught.10.1", w, [&] { return sets({ls, ld, sa}); });
      r.expect(is_locally_invariant(inst, ld, u, v) && is_locally_invariant(inst, ls, u, v), "vaught.10.2", w,
               [&] { return sets({ld, ls}); });
      for (PointSet inv : {sa, sa | (X - u)}) {
        PointSet d3 = local_delta(inst, inv, u, v), s3 = local_star(inst, inv, u, v);
        r.expect(d3 == (inv & u) && s3 == (inv & u), "vaught.10.3", r.at(c, std::nullopt, pts(inv)),
                 [&] { return sets({d3, s3, inv & u}); });
      }
      if (is_locally_invariant(inst, a, u, v))
        r.expect(ld == (a & u) && ls == (a & u), "vaught.10.3", w, [&] { return sets({ld, ls}); });
    }
    // V_U A = A^{Δ_U V} for A ⊆ U' ⊆ U locally V'_{U'}-invariant
    {
      auto su = r.sub_u(r.table.cell_u(c));
      PointSet u2 = r.U[su[r.below(su.size())]];
      ElemSet v2 = r.V[r.below(r.nv())];
      PointSet b = saturate(inst, a, u2, v2);
      PointSet lhs = saturate(inst, b, u, v), rhs = local_delta(inst, b, u, v);
      r.expect(lhs == rhs, "vaught.prop", r.at(c, std::nullopt, pts(b)),
               [&] { return "U'=" + u2.to_string() + " V'=" + v2.to_string() + " " + sets({lhs, rhs}); });
    }
  });
}

// ---------------------------------------------------------------------------
// phar: pieces against the set descriptions

// For each block representative of cell c, whether its local orbit meets
// each set in `family`; returns the induced partition of U.
std::vector<PointSet> meet_partition(const PieceTable& t, std::size_t c, const std::vector<PointSet>& family) {
  const PointSet u = t.instance().basisU()[t.cell_u(c)];
  std::map<std::vector<bool>, PointSet> classes;
  for (PointSet left = u; !left.empty();) {
    const Point x = left.front();
    const PointSet lo = t.local_orbit(c, x);
    std::vector<bool> key;
    key.reserve(family.size());
    for (auto p : family) key.push_back(lo.intersects(p));
    classes[key] |= lo;
    left -= lo;
  }
  std::vector<PointSet> out;
  for (auto& [k, s] : classes) out.push_back(s);
  std::sort(out.begin(), out.end(), canonical_less<PointTag>);
  return out;
}

std::vector<PointSet> level_pieces(const PieceTable& t, std::size_t level) {
  if (level == 0) return t.instance().basisU().members();
  std::vector<PointSet> out;
  for (std::size_t c = 0; c < t.cell_count(); ++c) {
    auto p = t.partition(c, Level(level));
    out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end(), canonical_less<PointTag>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void suite_phar(Run& r) {
  const auto& t = r.table;
  std::vector<std::vector<PointSet>> by_level;
  for (std::size_t l = 0; l <= r.top(); ++l) by_level.push_back(level_pieces(t, l));
  for (std::size_t alpha = 1; alpha <= r.top(); ++alpha) {
    std::vector<PointSet> below_all;
    for (std::size_t b = 0; b < alpha; ++b) below_all.insert(below_all.end(), by_level[b].begin(), by_level[b].end());
    r.each(r.cells(), [&](std::size_t c) {
      auto got = t.partition(c, Level(alpha));
      auto ph = meet_partition(t, c, by_level[alpha - 1]);
      r.expect(got == ph, "ph", r.at(c, alpha), [&] { return std::to_string(got.size()) + " vs " + std::to_string(ph.size()) + " blocks"; });
      auto phar = meet_partition(t, c, below_all);
      r.expect(got == phar, "phar", r.at(c, alpha), [&] { return std::to_string(got.size()) + " vs " + std::to_string(phar.size()) + " blocks"; });
    });
  }
  // signature equality delimits pieces exactly
  r.each(r.cells(), [&](std::size_t c) {
    for (std::size_t l = 1; l <= r.top(); ++l)
      for (auto x : r.cu(c))
        for (auto y : r.cu(c)) {
          bool same_piece = t.piece_at(l, c, x).contains(y);
          bool same_sig = t.id_at(l, c, x) == t.id_at(l, c, y);
          r.expect(same_piece == same_sig, "phar.ids", r.at(c, l, {x, y}), [] { return std::string("piece/id mismatch"); });
        }
  });
  // level 1 on (X, G) against the membership pattern in the sets G·U_n
  {
    std::vector<PointSet> sats;
    for (auto u : r.U) sats.push_back(r.inst.apply(r.G.elements(), u));
    std::map<std::vector<bool>, PointSet> blocks;
    for (Point x = 0; x < r.inst.size(); ++x) {
      std::vector<bool> key;
      for (auto s : sats) key.push_back(s.contains(x));
      blocks[key].insert(x);
    }
    std::vector<PointSet> want;
    for (auto& [k, b] : blocks) want.push_back(b);
    std::sort(want.begin(), want.end(), canonical_less<PointTag>);
    auto got = t.partition(t.cell(r.inst.whole_index(), r.inst.full_index()), Level(1));
    r.expect(got == want, "becker", {r.inst.whole_index(), r.inst.full_index(), 1, {}},
             [&] { return std::to_string(got.size()) + " vs " + std::to_string(want.size()) + " blocks"; });
  }
}

// ---------------------------------------------------------------------------
// hist

void suite_hist(Run& r) {
  const auto& t = r.table;
  const auto& inst = r.inst;
  r.each(r.cells(), [&](std::size_t c) {
    const PointSet u = r.cu(c);
    for (std::size_t l = 1; l <= r.top(); ++l) {
      for (auto x : u) {
        const PointSet p = t.piece_at(l, c, x);
        const PointSet lo = t.local_orbit(c, x);
        bool ok = lo.subset_of(p) && p.subset_of(u) && is_locally_invariant(inst, p, u, r.cv(c));
        for (auto z : p) ok = ok && t.piece_at(l, c, z) == p;
        r.expect(ok, "hist.1", r.at(c, l, {x}), [&] { return sets({lo, p, u}); });
        for (auto z : u) {
          const PointSet q = t.piece_at(l, c, z);
          r.expect(p == q || !p.intersects(q), "hist.2", r.at(c, l, {x, z}), [&] { return sets({p, q}); });
        }
        const PointSet prev = t.piece_at(l - 1, c, x);
        r.expect(p.subset_of(prev), "refine", r.at(c, l, {x}), [&] { return sets({p, prev}); });
      }
    }
    for (auto x : u) {
      const PointSet s = t.piece(x, t.cell_u(c), t.cell_v(c), Level::stable());
      const PointSet l = t.piece_at(t.stabilization(), c, x);
      const PointSet l1 = t.piece_at(t.stabilization() + 1, c, x);
      r.expect(s == l && l == l1, "refine", r.at(c, t.stabilization(), {x}), [&] { return sets({s, l, l1}); });
    }
  });

  // (3) cross-scale monotonicity
  std::vector<std::pair<std::size_t, std::size_t>> nested;
  for (std::size_t c = 0; c < r.cells(); ++c)
    for (std::size_t d = 0; d < r.cells(); ++d)
      if (r.cu(d).subset_of(r.cu(c)) && r.cv(d).subset_of(r.cv(c))) nested.push_back({c, d});
  r.each(nested.size(), [&](std::size_t i) {
    auto [c, d] = nested[i];
    for (auto x : r.cu(d))
      for (std::size_t a = 1; a <= r.top(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
          PointSet small = t.piece_at(a, d, x), big = t.piece_at(b, c, x);
          r.expect(small.subset_of(big), "hist.3", r.at(c, a, {x, t.cell_u(d), t.cell_v(d), b}),
                   [&] { return sets({small, big}); });
        }
  });

  // (4) equivariance
  r.each(r.cells() * r.G.order(), [&](std::size_t i) {
    const std::size_t c = i % r.cells();
    const Elem h = i / r.cells();
    const std::size_t c2 = t.cell(inst.translate_index(t.cell_u(c), h), inst.conjugate_index(t.cell_v(c), h));
    for (std::size_t l = 1; l <= r.top(); ++l)
      for (auto x : r.cu(c)) {
        PointSet lhs = inst.translate(t.piece_at(l, c, x), h);
        PointSet rhs = t.piece_at(l, c2, inst.act(h, x));
        r.expect(lhs == rhs, "hist.4", r.at(c, l, {x, h}), [&] { return sets({lhs, rhs}); });
      }
  });

  if (inst.strict()) {
    r.each(r.cells(), [&](std::size_t c) {
      for (std::size_t l = 1; l <= r.top(); ++l)
        for (auto x : r.cu(c)) {
          PointSet p = t.piece_at(l, c, x), lo = t.local_orbit(c, x);
          r.expect(p == lo, "collapse", r.at(c, l, {x}), [&] { return sets({p, lo}); });
        }
    });
    std::vector<PointSet> orbits;
    for (Point x = 0; x < inst.size(); ++x) orbits.push_back(inst.orbit(x));
    std::sort(orbits.begin(), orbits.end(), canonical_less<PointTag>);
    orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
    auto st = stable_partition(t);
    r.expect(st == orbits, "collapse", {inst.whole_index(), inst.full_index(), std::nullopt, {}},
             [&] { return std::to_string(st.size()) + " vs " + std::to_string(orbits.size()) + " blocks"; });
  }
}

// ---------------------------------------------------------------------------
// vb

void suite_vb(Run& r) {
  const auto& t = r.table;
  r.each(r.cells(), [&](std::size_t c) {
    for (std::size_t a = 1; a <= t.stabilization() + 1; ++a)
      for (auto x : r.cu(c)) {
        PointSet lhs = vb_piece(t, x, t.cell_u(c), t.cell_v(c), a);
        PointSet rhs = t.piece(x, t.cell_u(c), t.cell_v(c), Level(a + 1));
        r.expect(lhs == rhs, "vb", r.at(c, a, {x}), [&] { return sets({lhs, rhs}); });
      }
  });
}

// ---------------------------------------------------------------------------
// list

void suite_list(Run& r) {
  const auto& t = r.table;
  const auto& inst = r.inst;
  // common reach sets ⟨V⟩^{U_i}_U for each outer cell
  std::map<std::size_t, std::vector<ElemSet>> common;
  auto common_of = [&](std::size_t c) -> const std::vector<ElemSet>& {
    auto it = common.find(c);
    if (it != common.end()) return it->second;
    auto& reach = r.reach_of(c);
    std::vector<ElemSet> cr(r.nu());
    for (std::size_t i = 0; i < r.nu(); ++i) {
      ElemSet s = r.G.elements();
      for (auto y : r.U[i]) s &= r.cu(c).contains(y) ? reach[y] : ElemSet{};
      cr[i] = s;
    }
    return common.emplace(c, std::move(cr)).first->second;
  };
  r.each(r.cells() * r.cells(), [&](std::size_t k) {
    const std::size_t c = k % r.cells();       // (U, V)
    const std::size_t d = k / r.cells();       // (U_n, V_m)
    const std::size_t n = t.cell_u(d), m = t.cell_v(d);
    const PointSet u = r.cu(c);
    const ElemSet v = r.cv(c);
    const auto& cr = common_of(c);
    for (std::size_t a = 1; a <= r.top(); ++a)
      for (auto piece : t.partition(d, Level(a))) {
        if (!piece.intersects(u)) continue;
        const PointSet sat = saturate(inst, piece, u, v);
        for (auto y : sat) {
          bool found = false;
          for (std::size_t i = 0; i < r.nu() && !found; ++i) {
            if (!r.U[i].subset_of(r.U[n])) continue;
            for (auto h : cr[i]) {
              if (!r.U[i].contains(inst.act(r.G.inv(h), y))) continue;
              std::size_t c2 = t.cell(inst.translate_index(i, h), inst.conjugate_index(m, h));
              if (t.piece_at(a, c2, y).subset_of(sat)) {
                found = true;
                break;
              }
            }
          }
          r.expect(found, "list", r.at(c, a, {y, n, m, piece.front()}),
                   [&] { return "no surrounding piece inside " + sat.to_string(); });
        }
      }
  });
}

// ---------------------------------------------------------------------------
// translate

void suite_translate(Run& r) {
  const auto& t = r.table;
  const auto& inst = r.inst;
  r.each(r.cells() * r.G.order(), [&](std::size_t k) {
    const std::size_t c = k % r.cells();
    const Elem h = k / r.cells();
    const PointSet hu = inst.translate(r.cu(c), h);
    const ElemSet vh = conjugate(r.cv(c), h, r.G);
    for (std::size_t a = 1; a <= r.top(); ++a)
      for (auto x : r.cu(c)) {
        const Point hx = inst.act(h, x);
        // h-translate lemma
        for (std::size_t d = 0; d < r.cells(); ++d) {
          if (!r.cu(d).contains(hx) || !r.cu(d).subset_of(hu) || !r.cv(d).subset_of(vh)) continue;
          for (std::size_t b = 0; b <= a; ++b) {
            PointSet lhs = t.piece_at(a, d, hx);
            PointSet rhs = inst.translate(t.piece_at(b, c, x), h);
            r.expect(lhs.subset_of(rhs), "translate", r.at(c, a, {x, h, t.cell_u(d), t.cell_v(d), b}),
                     [&] { return sets({lhs, rhs}); });
          }
        }
        // hB is the union of the α-pieces it contains
        if (x != t.piece_at(a, c, x).front()) continue;
        const PointSet hp = inst.translate(t.piece_at(a, c, x), h);
        PointSet uni;
        for (auto y : hp)
          for (std::size_t d = 0; d < r.cells(); ++d) {
            if (!r.cu(d).contains(y)) continue;
            PointSet q = t.piece_at(a, d, y);
            if (q.subset_of(hp)) uni |= q;
          }
        r.expect(uni == hp, "basis", r.at(c, a, {x, h}), [&] { return sets({uni, hp}); });
      }
  });
}

// ---------------------------------------------------------------------------
// orb

void suite_orb(Run& r) {
  const auto& t = r.table;
  for (Point x = 0; x < r.inst.size(); ++x) {
    const std::size_t g = scott_rank(t, x).value();
    r.each(r.cells(), [&](std::size_t c) {
      if (!r.cu(c).contains(x)) return;
      PointSet lhs = t.piece(x, t.cell_u(c), t.cell_v(c), Level(g + 2));
      PointSet rhs = t.piece(x, t.cell_u(c), t.cell_v(c), Level::stable());
      r.expect(lhs == rhs, "orb", r.at(c, g + 2, {x}), [&] { return sets({lhs, rhs}); });
    });
  }
}

// ---------------------------------------------------------------------------
// subs

void suite_subs(Run& r) {
  const auto& t = r.table;
  const auto& inst = r.inst;
  const std::size_t L = t.stabilization();
  std::vector<Point> reps;
  {
    PointSet left = inst.points();
    while (!left.empty()) {
      reps.push_back(left.front());
      left -= inst.orbit(left.front());
    }
  }
  for (auto x : reps) {
    const PointSet orb = inst.orbit(x);
    for (std::size_t alpha = 1; alpha <= L + 2; ++alpha) {
      auto space = refined_space(t, x, alpha);
      r.expect(space.invariant, "pol.invariant", {std::nullopt, std::nullopt, alpha, {x}},
               [&] { return space.ground.to_string(); });
      // every β-piece, β < α, is relatively open
      bool open = true;
      for (auto p : refined_family(t, x, alpha)) open = open && space.topology.is_open(p & space.ground);
      r.expect(open, "pol.open-pieces", {std::nullopt, std::nullopt, alpha, {x}}, [] { return std::string(); });
      // for α = β+1 the β-pieces alone generate the same topology
      auto alone = generate_topology(space.ground, piece_family(t, x, alpha - 1));
      r.expect(alone.same_opens(space.topology), "pol.successor", {std::nullopt, std::nullopt, alpha, {x}},
               [] { return std::string("different topologies"); });
      if (inst.strict())
        r.expect(space.topology.is_discrete(), "pol.discrete", {std::nullopt, std::nullopt, alpha, {x}},
                 [] { return std::string("relative topology not discrete"); });
      if (alpha < 2) continue;

      auto rel = relative_space(t, x, alpha);
      std::vector<std::tuple<std::size_t, Point, std::size_t>> cases;  // (γ, x', cell)
      for (std::size_t gamma = 1; gamma < alpha; ++gamma)
        for (std::size_t c = 0; c < r.cells(); ++c)
          for (auto x2 : orb & r.cu(c)) cases.emplace_back(gamma, x2, c);
      r.each(cases.size(), [&](std::size_t i) {
        auto [gamma, x2, c] = cases[i];
        for (const auto& cmp : relative_pieces(t, rel, x, gamma, x2, t.cell_u(c), t.cell_v(c)))
          r.expect(cmp.equal(), "subs", r.at(c, alpha, {x, gamma, x2, cmp.y, cmp.beta}),
                   [&] { return sets({cmp.original, cmp.relative}); });
      });
    }
  }
}

using SuiteFn = void (*)(Run&);

SuiteFn find_suite(const std::string& name) {
  static const std::map<std::string, SuiteFn> table{
      {"locsat", suite_locsat}, {"bH", suite_bh},     {"vaught", suite_vaught},      {"phar", suite_phar},
      {"hist", suite_hist},     {"vb", suite_vb},     {"list", suite_list},          {"translate", suite_translate},
      {"orb", suite_orb},       {"subs", suite_subs}};
  auto it = table.find(name);
  if (it == table.end()) throw ValidationError("unknown oracle suite '" + name + "'");
  return it->second;
}

}  // namespace

OracleLog run_oracles(const PieceTable& table, const std::string& suite, const OracleOptions& opts) {
  if (suite == "all") return run_oracles(table, suite_names(), opts);
  return run_oracles(table, std::vector<std::string>{suite}, opts);
}

OracleLog run_oracles(const PieceTable& table, const std::vector<std::string>& suites, const OracleOptions& opts) {
  std::vector<SuiteFn> fns;
  for (const auto& s : suites) fns.push_back(find_suite(s));
  std::vector<OracleLog> logs(suites.size());
  auto run_one = [&](std::size_t i) {
    // salt depends only on the suite name, so sampling is schedule-independent
    std::uint64_t salt = std::hash<std::string>{}(suites[i]);
    for (char ch : suites[i]) salt = salt * 131 + static_cast<unsigned char>(ch);
    Run r(table, suites[i], opts, salt);
    fns[i](r);
    logs[i] = std::move(r.log);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.workers, suites.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < suites.size(); ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < suites.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  OracleLog out;
  out.mode = table.instance().mode();
  for (const auto& l : logs) out.merge(l);
  return out;
}

}  // namespace localscott
