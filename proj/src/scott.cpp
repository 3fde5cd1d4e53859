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

#include "localscott/scott.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "localscott/error.hpp"
#include "localscott/saturation.hpp"

namespace localscott {

Level Level::parse(const std::string& s) {
  if (s == "STABLE" || s == "stable") return stable();
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError("bad level '" + s + "'");
  }
  if (pos != s.size()) throw ValidationError("bad level '" + s + "'");
  return Level(static_cast<std::size_t>(v));
}

PieceId SignatureInterner::intern(Signature s) {
  auto it = index_.find(s);
  if (it != index_.end()) return it->second;
  auto id = static_cast<PieceId>(sigs_.size());
  sigs_.push_back(s);
  index_.emplace(std::move(s), id);
  return id;
}

namespace {

// Runs body(c) for every cell, split into contiguous chunks across workers.
template <class F>
void for_cells(std::size_t cells, std::size_t workers, F&& body) {
  workers = std::max<std::size_t>(1, std::min(workers, cells));
  if (workers == 1) {
    for (std::size_t c = 0; c < cells; ++c) body(c);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (cells + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(cells, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t c = lo; c < hi; ++c) body(c);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

PieceTable analyze(const ActionInstance& inst, const AnalyzeOptions& opts) {
  PieceTable t(inst);
  t.interner_ = opts.interner ? opts.interner : std::make_shared<SignatureInterner>();
  const auto& U = inst.basisU();
  const auto& V = inst.basisV();
  const std::size_t nx = inst.size();
  const std::size_t cells = t.cell_count();

  t.orbits_.assign(cells * nx, PointSet{});
  for_cells(cells, opts.workers, [&](std::size_t c) {
    auto map = local_orbit_map(inst, U[t.cell_u(c)], V[t.cell_v(c)]);
    std::copy(map.begin(), map.end(), t.orbits_.begin() + static_cast<std::ptrdiff_t>(c * nx));
  });

  t.ids_.emplace_back();
  t.masks_.emplace_back();

  // signature of the block containing x in cell c, at level `level` ≥ 1
  auto block_signature = [&](std::size_t level, std::size_t c, Point x) {
    Signature s;
    s.level = level;
    PointSet lo = t.orbits_[c * nx + x];
    if (level == 1) {
      for (std::size_t n = 0; n < U.size(); ++n)
        if (lo.intersects(U[n])) s.sets.push_back(static_cast<std::uint32_t>(n));
      return s;
    }
    const auto& prev = t.ids_[level - 1];
    for (std::size_t c2 = 0; c2 < cells; ++c2) {
      PointSet meet = lo & U[t.cell_u(c2)];
      for (auto y : meet)
        s.triples.push_back({prev[c2 * nx + y], static_cast<std::uint32_t>(t.cell_u(c2)),
                             static_cast<std::uint32_t>(t.cell_v(c2))});
    }
    std::sort(s.triples.begin(), s.triples.end());
    s.triples.erase(std::unique(s.triples.begin(), s.triples.end()), s.triples.end());
    return s;
  };

  auto build_level = [&](std::size_t level) {
    // one signature per block, keyed by its least point
    std::vector<Signature> sigs(cells * nx);
    std::vector<char> have(cells * nx, 0);
    for_cells(cells, opts.workers, [&](std::size_t c) {
      PointSet left = U[t.cell_u(c)];
      while (!left.empty()) {
        Point x = left.front();
        sigs[c * nx + x] = block_signature(level, c, x);
        have[c * nx + x] = 1;
        left -= t.orbits_[c * nx + x];
      }
    });
    std::vector<PieceId> ids(cells * nx, kNoPiece);
    for (std::size_t c = 0; c < cells; ++c)
      for (Point x = 0; x < nx; ++x)
        if (have[c * nx + x]) {
          PieceId id = t.interner_->intern(std::move(sigs[c * nx + x]));
          for (auto y : t.orbits_[c * nx + x]) ids[c * nx + y] = id;
        }
    std::vector<PointSet> masks(cells * nx);
    for (std::size_t c = 0; c < cells; ++c) {
      PointSet left = U[t.cell_u(c)];
      while (!left.empty()) {
        PieceId id = ids[c * nx + left.front()];
        PointSet piece;
        for (auto y : left)
          if (ids[c * nx + y] == id) piece.insert(y);
        for (auto y : piece) masks[c * nx + y] = piece;
        left -= piece;
      }
    }
    t.ids_.push_back(std::move(ids));
    t.masks_.push_back(std::move(masks));
  };

  // Each level refines the previous one and there are finitely many
  // partitions, so the loop ends; the cap only guards against a broken
  // refinement step.
  const std::size_t cap = cells * nx + 2;
  build_level(1);
  for (std::size_t level = 1;; ++level) {
    build_level(level + 1);
    if (t.masks_[level] == t.masks_[level + 1]) {
      t.stabilization_ = level;
      break;
    }
    if (level > cap) throw std::logic_error("piece refinement did not stabilize");
  }
  return t;
}

std::size_t PieceTable::resolve(Level level) const {
  if (level.is_stable() || level.value() > top_level()) return stabilization_;
  return level.value();
}

PointSet PieceTable::piece_at(std::size_t level, std::size_t c, Point x) const {
  if (level == 0) return inst_.basisU()[cell_u(c)];
  return masks_[level][c * inst_.size() + x];
}

PointSet PieceTable::piece(Point x, std::size_t n, std::size_t m, Level level) const {
  if (n >= inst_.basisU().size() || m >= inst_.basisV().size()) throw DomainError("basic set index out of range");
  if (x >= inst_.size() || !inst_.basisU()[n].contains(x))
    throw DomainError("point " + std::to_string(x) + " is not in U_" + std::to_string(n));
  return piece_at(resolve(level), cell(n, m), x);
}

const Signature& PieceTable::signature(Point x, std::size_t n, std::size_t m, Level level) const {
  return dictionary()[id(x, n, m, level)];
}

PieceId PieceTable::id(Point x, std::size_t n, std::size_t m, Level level) const {
  piece(x, n, m, level);  // range and membership checks
  std::size_t l = level.is_stable() || level.value() > top_level() ? top_level() : level.value();
  if (l == 0) throw DomainError("level 0 has no signature");
  return id_at(l, cell(n, m), x);
}

std::vector<PointSet> PieceTable::partition(std::size_t c, Level level) const {
  std::size_t l = resolve(level);
  std::vector<PointSet> out;
  PointSet left = inst_.basisU()[cell_u(c)];
  while (!left.empty()) {
    PointSet p = piece_at(l, c, left.front());
    out.push_back(p);
    left -= p;
  }
  std::sort(out.begin(), out.end(), canonical_less<PointTag>);
  return out;
}

Level scott_rank(const PieceTable& table, Point x) {
  const auto& inst = table.instance();
  if (x >= inst.size()) throw DomainError("point out of range");
  const PointSet orb = inst.orbit(x);
  const std::size_t L = table.stabilization();
  for (std::size_t gamma = 1; gamma < L; ++gamma) {
    bool ok = true;
    for (std::size_t c = 0; ok && c < table.cell_count(); ++c) {
      PointSet pts = orb & inst.basisU()[table.cell_u(c)];
      for (auto a : pts) {
        PointSet pa = table.piece_at(gamma, c, a) & pts;
        // every point sharing the γ-piece of a must share its stable piece
        if (!pa.subset_of(table.piece_at(L, c, a))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return Level(gamma);
  }
  return Level(L);
}

PointSet vb_piece(const PieceTable& table, Point x, std::size_t n, std::size_t m, std::size_t alpha) {
  const auto& inst = table.instance();
  const auto& U = inst.basisU();
  const auto& V = inst.basisV();
  if (n >= U.size() || m >= V.size()) throw DomainError("basic set index out of range");
  if (x >= inst.size() || !U[n].contains(x)) throw DomainError("point is not in U_n");
  const std::size_t level = table.resolve(Level(alpha));
  const PointSet u = U[n];
  const ElemSet v = V[m];
  const PointSet lox = table.local_orbit(table.cell(n, m), x);
  const Group& g = inst.group();

  std::vector<ElemSet> reach(inst.size());
  for (auto t : u) reach[t] = reach_set(inst, t, u, v);

  // per (i, m'): union of α-pieces of gx in (hU_i, V_m'^h) over h in the
  // common reach set of U_i
  const std::size_t nu = U.size(), nv = V.size();
  std::vector<PointSet> part(nu * nv);
  for (std::size_t i = 0; i < nu; ++i) {
    ElemSet common = g.elements();
    for (auto t : U[i]) common &= u.contains(t) ? reach[t] : ElemSet{};
    if (common.empty()) continue;
    for (auto h : common) {
      std::size_t hi = inst.translate_index(i, h);
      PointSet ws = lox & U[hi];
      if (ws.empty()) continue;
      for (std::size_t m2 = 0; m2 < nv; ++m2) {
        std::size_t c = table.cell(hi, inst.conjugate_index(m2, h));
        PointSet acc;
        for (auto w : ws) acc |= table.piece_at(level, c, w);
        part[i * nv + m2] |= acc;
      }
    }
  }

  PointSet result = inst.points();
  for (std::size_t n2 = 0; n2 < nu; ++n2) {
    const bool met = lox.intersects(U[n2]) && U[n2].subset_of(u);
    for (std::size_t m2 = 0; m2 < nv; ++m2) {
      if (met) {
        PointSet s;
        for (std::size_t i = 0; i < nu; ++i)
          if (U[i].subset_of(U[n2])) s |= part[i * nv + m2];
        result &= s;
      }
      PointSet t = inst.points() - U[n2];
      for (auto w : lox & U[n2]) t |= table.piece_at(level, table.cell(n2, m2), w);
      result &= t;
    }
  }
  return result;
}

std::vector<PointSet> stable_partition(const PieceTable& table) {
  const auto& inst = table.instance();
  return table.partition(table.cell(inst.whole_index(), inst.full_index()), Level::stable());
}

}  // namespace localscott
