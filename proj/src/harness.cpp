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

#include "localscott/harness.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "localscott/error.hpp"

namespace localscott {

namespace {

class Where {
 public:
  Where(std::string source, std::string path = "") : source_(std::move(source)), path_(std::move(path)) {}
  Where operator/(const std::string& key) const { return {source_, path_ + "/" + key}; }
  Where operator/(std::size_t i) const { return {source_, path_ + "/" + std::to_string(i)}; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_ + ": " + (path_.empty() ? "/" : path_) + ": " + what);
  }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::string path_;
};

const Json& field(const Json& obj, const char* key, const Where& w) {
  if (!obj.is_object()) w.fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) w.fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index(const Json& v, const Where& w) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    w.fail("expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_array(const Json& v, const Where& w) {
  if (!v.is_array()) w.fail("expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(index(v[i], w / i));
  return out;
}

void check_permutation(const std::vector<std::size_t>& row, std::size_t n, const Where& w) {
  if (row.size() != n) w.fail("expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
  std::vector<bool> hit(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i] >= n) (w / i).fail("image " + std::to_string(row[i]) + " out of range");
    if (hit[row[i]]) w.fail("not a permutation (" + std::to_string(row[i]) + " repeats)");
    hit[row[i]] = true;
  }
}

template <class Tag>
std::vector<IndexSet<Tag>> seeds(const Json& fam, std::size_t bound, const Where& w) {
  const Json& list = field(fam, "seeds", w);
  const Where ws = w / "seeds";
  if (!list.is_array()) ws.fail("expected an array of index arrays");
  std::vector<IndexSet<Tag>> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    IndexSet<Tag> s;
    auto items = index_array(list[i], ws / i);
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k] >= bound) (ws / i / k).fail("index " + std::to_string(items[k]) + " out of range");
      s.insert(items[k]);
    }
    out.push_back(s);
  }
  return out;
}

Group parse_group(const Json& g, const Where& w) {
  try {
    if (g.is_object() && g.contains("mul")) {
      const std::size_t order = index(field(g, "order", w), w / "order");
      const Json& mul = g["mul"];
      const Where wm = w / "mul";
      if (!mul.is_array()) wm.fail("expected an array of rows");
      std::vector<std::vector<Elem>> rows;
      // a flat row-major table or a list of rows
      if (!mul.empty() && !mul[0].is_array()) {
        auto flat = index_array(mul, wm);
        if (flat.size() != order * order)
          wm.fail("expected " + std::to_string(order * order) + " entries, got " + std::to_string(flat.size()));
        for (std::size_t a = 0; a < order; ++a) rows.emplace_back(flat.begin() + a * order, flat.begin() + (a + 1) * order);
      } else {
        if (mul.size() != order) wm.fail("expected " + std::to_string(order) + " rows, got " + std::to_string(mul.size()));
        for (std::size_t a = 0; a < order; ++a) {
          auto row = index_array(mul[a], wm / a);
          check_permutation(row, order, wm / a);
          rows.push_back(row);
        }
      }
      return Group::from_table(rows);
    }
    if (g.is_object() && g.contains("generators")) {
      const std::size_t degree = index(field(g, "degree", w), w / "degree");
      const Json& gens = g["generators"];
      if (!gens.is_array()) (w / "generators").fail("expected an array of permutations");
      std::vector<Permutation> ps;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto p = index_array(gens[i], w / "generators" / i);
        check_permutation(p, degree, w / "generators" / i);
        ps.push_back(p);
      }
      return Group::from_generators(degree, ps);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    w.fail(e.what());
  }
  w.fail("expected {order, mul} or {degree, generators}");
}

}  // namespace

ActionInstance parse_instance(const Json& doc, const std::string& source) {
  const Where root(source);
  if (!doc.is_object()) root.fail("expected an object");
  const Group group = parse_group(field(doc, "group", root), root / "group");
  const std::size_t n = group.order();

  const Json& space = field(doc, "space", root);
  const Where wsp = root / "space";
  std::size_t size = 0;
  ActionTable act;
  if (space.is_string()) {
    if (space.get<std::string>() != "self-left-multiplication") wsp.fail("unknown space \"" + space.get<std::string>() + "\"");
    size = n;
    act.assign(n, std::vector<Point>(n));
    for (Elem g = 0; g < n; ++g)
      for (Elem x = 0; x < n; ++x) act[g][x] = group.mul(g, x);
  } else {
    size = index(field(space, "size", wsp), wsp / "size");
    const Json& rows = field(space, "action", wsp);
    if (!rows.is_array()) (wsp / "action").fail("expected one image array per group element");
    if (rows.size() != n)
      (wsp / "action").fail("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    for (std::size_t g = 0; g < n; ++g) {
      auto row = index_array(rows[g], wsp / "action" / g);
      check_permutation(row, size, wsp / "action" / g);
      act.push_back(row);
    }
  }
  if (size > kMaxIndex) wsp.fail("at most " + std::to_string(kMaxIndex) + " points are supported");

  auto su = seeds<PointTag>(field(doc, "basisU", root), size, root / "basisU");
  auto sv = seeds<ElemTag>(field(doc, "basisV", root), n, root / "basisV");

  const Json& mode = field(doc, "mode", root);
  if (!mode.is_string()) (root / "mode").fail("expected \"strict\" or \"exploratory\"");
  Mode m;
  try {
    m = mode_from_string(mode.get<std::string>());
  } catch (const ValidationError& e) {
    (root / "mode").fail(e.what());
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) (root / "name").fail("expected a string");
    name = doc["name"].get<std::string>();
  }

  try {
    auto inst = ActionInstance::build(group, size, std::move(act), su, sv, m, name);
    if (doc.contains("seed")) inst.set_seed(index(doc["seed"], root / "seed"));
    return inst;
  } catch (const StrictModeError& e) {
    throw StrictModeError(source + ": " + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

ActionInstance parse_instance_text(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset to line / column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  return parse_instance(doc, source);
}

ActionInstance load_instance(const std::string& path_or_name) {
  if (auto named = named_instance(path_or_name); named && !std::filesystem::exists(path_or_name)) return *named;
  std::ifstream in(path_or_name);
  if (!in) throw ValidationError("cannot open instance \"" + path_or_name + "\" (not a file or a built-in name)");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str(), path_or_name);
}

Json set_json(PointSet s) { return Json(s.to_vector()); }
Json set_json(ElemSet s) { return Json(s.to_vector()); }

Json instance_to_json(const ActionInstance& inst) {
  const Group& g = inst.group();
  Json doc;
  doc["group"] = {{"order", g.order()}, {"mul", g.table()}};
  doc["space"] = {{"size", inst.size()}, {"action", inst.action_table()}};
  Json su = Json::array(), sv = Json::array();
  const auto& U = inst.basisU().members();
  for (std::size_t i = 0; i + (inst.basisU().whole_appended() ? 1 : 0) < U.size(); ++i) su.push_back(set_json(U[i]));
  const auto& V = inst.basisV().members();
  for (std::size_t i = 0; i + (inst.basisV().full_appended() ? 1 : 0) < V.size(); ++i) sv.push_back(set_json(V[i]));
  doc["basisU"] = {{"seeds", su}};
  doc["basisV"] = {{"seeds", sv}};
  doc["mode"] = to_string(inst.mode());
  if (!inst.name().empty()) doc["name"] = inst.name();
  if (inst.seed()) doc["seed"] = *inst.seed();
  return doc;
}

namespace {

bool flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void format(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      format(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      format(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string format_json(const Json& j) {
  std::string out;
  format(j, 0, out);
  return out + "\n";
}

std::string serialize_instance(const ActionInstance& inst) { return format_json(instance_to_json(inst)); }

namespace {

Json opt(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const OracleLog& log) {
  Json entries = Json::array();
  for (const auto& e : log.entries)
    entries.push_back({{"suite", e.suite},
                       {"lemma", e.lemma},
                       {"u", opt(e.u)},
                       {"v", opt(e.v)},
                       {"level", opt(e.level)},
                       {"witness", e.witness},
                       {"detail", e.detail},
                       {"tier", e.theorem ? "theorem" : "definitional"}});
  Json stats = Json::object();
  for (const auto& [k, s] : log.stats) stats[k] = {{"checked", s.checked}, {"failed", s.failed}};
  return {{"mode", to_string(log.mode)}, {"failed", log.failed()}, {"entries", entries}, {"stats", stats}};
}

Json to_json(const EventualOpenness& eo) {
  Json table = Json::array();
  for (const auto& row : eo.witnesses) {
    Json r = Json::array();
    for (const auto& w : row) r.push_back(w ? Json{w->first, w->second} : Json(nullptr));
    table.push_back(r);
  }
  return {{"value", eo.value}, {"witnesses", table}};
}

Json to_json(const ContainmentResult& res) {
  Json vs = Json::array();
  for (const auto& v : res.violations)
    vs.push_back({{"u", v.u}, {"v", v.v}, {"x", v.x}, {"set", set_json(v.a)}, {"piece", set_json(v.piece)}});
  return {{"alpha", res.alpha},         {"holds", res.holds},   {"exhaustive", res.exhaustive},
          {"sets_checked", res.sets_checked}, {"budget", res.budget}, {"violations", vs}};
}

Json to_json(const ClascharReport& rep) {
  Json points = Json::array();
  for (const auto& p : rep.points) {
    Json w = Json::array();
    for (const auto& x : p.witnesses) w.push_back(x ? Json{x->first, x->second} : Json(nullptr));
    points.push_back({{"x", p.x},
                      {"witnesses", w},
                      {"rank", p.rank.value()},
                      {"orbit", set_json(p.orbit)},
                      {"piece_rank", set_json(p.piece_rank)},
                      {"piece_stable", set_json(p.piece_stable)},
                      {"orbit_is_piece", p.orbit_is_piece},
                      {"rank_regression", p.rank_regression},
                      {"open_map", {{"open", p.open_map.open},
                                    {"witness", opt(p.open_map.witness)},
                                    {"neighborhood", set_json(p.open_map.neighborhood)}}},
                      {"open_levels_consistent", p.open_levels_consistent}});
  }
  return {{"mode", to_string(rep.mode)},
          {"conditions", {rep.cond1, rep.cond2, rep.cond3, rep.cond4}},
          {"all_true", rep.all_true()},
          {"points", points},
          {"containment", to_json(rep.containment)},
          {"flags", rep.flags}};
}

Json analysis_to_json(const PieceTable& table, const AnalysisOptions& opts) {
  const auto& inst = table.instance();
  Json levels = Json::array();
  for (std::size_t l = 1; l <= table.top_level(); ++l) {
    Json cells = Json::array();
    for (std::size_t c = 0; c < table.cell_count(); ++c) {
      Json labels = Json::array();
      for (Point x = 0; x < inst.size(); ++x)
        labels.push_back(inst.basisU()[table.cell_u(c)].contains(x) ? Json(table.id_at(l, c, x)) : Json(nullptr));
      cells.push_back({{"u", table.cell_u(c)}, {"v", table.cell_v(c)}, {"labels", labels}});
    }
    levels.push_back({{"level", l}, {"cells", cells}});
  }
  Json dict = Json::array();
  const auto& d = table.dictionary();
  for (PieceId id = 0; id < d.size(); ++id) {
    const auto& s = d[id];
    Json triples = Json::array();
    for (const auto& t : s.triples) triples.push_back({t.piece, t.u, t.v});
    dict.push_back({{"id", id}, {"level", s.level}, {"sets", s.sets}, {"triples", triples}});
  }
  Json ranks = Json::array();
  for (Point x = 0; x < inst.size(); ++x) ranks.push_back(scott_rank(table, x).value());
  Json stable = Json::array();
  for (auto b : stable_partition(table)) stable.push_back(set_json(b));

  Json doc;
  doc["instance"] = instance_to_json(inst);
  doc["families"] = {{"U", Json::array()}, {"V", Json::array()}};
  for (auto u : inst.basisU()) doc["families"]["U"].push_back(set_json(u));
  for (auto v : inst.basisV()) doc["families"]["V"].push_back(set_json(v));
  doc["stabilization"] = table.stabilization();
  doc["levels"] = levels;
  doc["dictionary"] = dict;
  doc["ranks"] = ranks;
  doc["stable_partition"] = stable;
  if (opts.claschar) doc["claschar"] = to_json(claschar_report(table, opts.containment_budget, opts.oracle.seed));
  if (!opts.suites.empty()) doc["oracles"] = to_json(run_oracles(table, opts.suites, opts.oracle));
  return doc;
}

std::string serialize_analysis(const PieceTable& table, const AnalysisOptions& opts) {
  return format_json(analysis_to_json(table, opts));
}

}  // namespace localscott
