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

// localscott command-line tool.
//
//   localscott <subcommand> --instance <path|name> [flags]
//
// Exit status: 0 on success, 1 on validation or usage errors, 2 when an
// oracle run on a strict instance reports a discrepancy.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "localscott/classify.hpp"
#include "localscott/error.hpp"
#include "localscott/harness.hpp"
#include "localscott/oracles.hpp"
#include "localscott/saturation.hpp"
#include "localscott/scott.hpp"
#include "localscott/topology.hpp"
#include "localscott/vaught.hpp"

using namespace localscott;

namespace {

struct Globals {
  std::string instance;
  std::string mode_override;
  std::uint64_t seed = 0;
  bool json = false;
  bool text = false;
  std::string level;
  std::optional<std::size_t> u, v, x;
  std::string set;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t workers() {
  std::size_t w = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOCALSCOTT_WORKERS")) {
    try {
      w = std::max<std::size_t>(1, std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("LOCALSCOTT_WORKERS must be a positive integer, got \"") + env + "\"");
    }
  }
  return w;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  std::string token;
  for (char ch : s + ",") {
    if (ch == '{' || ch == '}' || ch == '[' || ch == ']' || ch == ' ') continue;
    if (ch == ',') {
      if (token.empty()) continue;
      try {
        std::size_t pos = 0;
        out.push_back(std::stoul(token, &pos));
        if (pos != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw UsageError("--set: \"" + token + "\" is not an index");
      }
      token.clear();
    } else {
      token += ch;
    }
  }
  return out;
}

class Session {
 public:
  explicit Session(const Globals& g) : g_(g), inst_(load()) {}

  const ActionInstance& inst() const { return inst_; }
  const Globals& globals() const { return g_; }

  const PieceTable& table() {
    if (!table_) {
      AnalyzeOptions o;
      o.workers = workers();
      table_ = analyze(inst_, o);
    }
    return *table_;
  }

  std::size_t u() const { return need(g_.u, "--u", inst_.basisU().size(), "basisU"); }
  std::size_t v() const { return need(g_.v, "--v", inst_.basisV().size(), "basisV"); }
  std::size_t u_or_whole() const { return g_.u ? u() : inst_.whole_index(); }
  std::size_t v_or_full() const { return g_.v ? v() : inst_.full_index(); }
  Point x() const { return need(g_.x, "--x", inst_.size(), "the space"); }

  PointSet set() const {
    PointSet s;
    for (auto i : parse_indices(g_.set)) {
      if (i >= inst_.size()) throw UsageError("--set: point " + std::to_string(i) + " is outside the space");
      s.insert(i);
    }
    return s;
  }

  Level level(std::optional<Level> fallback = std::nullopt) const {
    if (g_.level.empty()) {
      if (fallback) return *fallback;
      throw UsageError("--level is required");
    }
    try {
      return Level::parse(g_.level);
    } catch (const std::exception& e) {
      throw UsageError("--level: " + std::string(e.what()));
    }
  }

  std::size_t finite_level(std::size_t fallback) const {
    Level l = level(Level(fallback));
    if (l.is_stable()) return table_ ? table_->stabilization() : fallback;
    return l.value();
  }

 private:
  static std::size_t need(const std::optional<std::size_t>& v, const char* flag, std::size_t bound, const char* what) {
    if (!v) throw UsageError(std::string(flag) + " is required");
    if (*v >= bound)
      throw UsageError(std::string(flag) + " " + std::to_string(*v) + " is out of range for " + what + " (size " +
                       std::to_string(bound) + ")");
    return *v;
  }

  ActionInstance load() const {
    if (g_.instance.empty()) throw UsageError("--instance is required");
    auto inst = load_instance(g_.instance);
    if (!g_.mode_override.empty()) inst = inst.with_mode(mode_from_string(g_.mode_override));
    return inst;
  }

  const Globals& g_;
  ActionInstance inst_;
  std::optional<PieceTable> table_;
};

void emit(const Session& s, const Json& j, const std::string& text) {
  if (s.globals().json)
    std::cout << format_json(j);
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string join(const std::vector<PointSet>& sets) {
  std::string out;
  for (auto p : sets) out += (out.empty() ? "" : " ") + p.to_string();
  return out;
}

Json partition_json(const std::vector<PointSet>& sets) {
  Json j = Json::array();
  for (auto p : sets) j.push_back(set_json(p));
  return j;
}

std::string witness_table(const ActionInstance& inst, const EventualOpenness& eo) {
  std::ostringstream os;
  os << "eventually open: " << (eo.value ? "true" : "false") << "\n";
  os << "x";
  for (auto v : inst.basisV()) os << "\tV=" << v.to_string();
  os << "\n";
  for (Point x = 0; x < inst.size(); ++x) {
    os << x;
    for (const auto& w : eo.witnesses[x]) {
      os << "\t";
      if (w)
        os << "(U=" << inst.basisU()[w->first].to_string() << ", V=" << inst.basisV()[w->second].to_string() << ")";
      else
        os << "-";
    }
    os << "\n";
  }
  return os.str();
}

std::string claschar_text(const ActionInstance& inst, const ClascharReport& rep) {
  std::ostringstream os;
  os << "mode: " << to_string(rep.mode) << "\n";
  const bool c[4] = {rep.cond1, rep.cond2, rep.cond3, rep.cond4};
  for (int i = 0; i < 4; ++i) os << "(" << i + 1 << ") " << (c[i] ? "true" : "false") << "\n";
  os << "containment: " << rep.containment.sets_checked << " sets at level " << rep.containment.alpha
     << (rep.containment.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  for (const auto& v : rep.containment.violations)
    os << "  violation: U=" << inst.basisU()[v.u].to_string() << " V=" << inst.basisV()[v.v].to_string()
       << " x=" << v.x << " A=" << v.a.to_string() << " piece=" << v.piece.to_string() << "\n";
  for (const auto& p : rep.points)
    os << "x=" << p.x << " rank=" << p.rank.value() << " orbit=" << p.orbit.to_string()
       << " piece=" << p.piece_rank.to_string() << " open=" << (p.open_map.open ? "yes" : "no") << "\n";
  for (const auto& f : rep.flags) os << "flag: " << f << "\n";
  return os.str();
}

std::string log_text(const OracleLog& log) {
  std::ostringstream os;
  std::size_t checked = 0;
  for (const auto& [k, s] : log.stats) checked += s.checked;
  os << "mode: " << to_string(log.mode) << ", " << checked << " identities checked, " << log.failures()
     << " discrepancies\n";
  for (const auto& [k, s] : log.stats)
    if (s.failed) os << "  " << k << ": " << s.failed << "/" << s.checked << "\n";
  for (const auto& e : log.entries) {
    os << (e.theorem ? "[theorem] " : "[definitional] ") << e.suite << "/" << e.lemma;
    if (e.u) os << " u=" << *e.u;
    if (e.v) os << " v=" << *e.v;
    if (e.level) os << " level=" << *e.level;
    os << " witness=";
    for (std::size_t i = 0; i < e.witness.size(); ++i) os << (i ? "," : "") << e.witness[i];
    os << " " << e.detail << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Scott analysis of finite group actions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--instance", g.instance, "instance document path or built-in name");
  app.add_option("--mode-override", g.mode_override, "strict | exploratory");
  app.add_option("--seed", g.seed, "seed for sampling and generation");
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--text", g.text, "text output (default)")->excludes(json_flag);
  app.add_option("--level", g.level, "level (positive integer or STABLE)");
  app.add_option("--u", g.u, "index into basisU");
  app.add_option("--v", g.v, "index into basisV");
  app.add_option("--x", g.x, "point index");
  app.add_option("--set", g.set, "comma-separated point indices");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* desc, std::function<int(Session&)> f) {
    auto* c = app.add_subcommand(name, desc);
    c->callback([&, f] {
      action = [&, f] {
        Session s(g);
        return f(s);
      };
    });
    return c;
  };

  sub("validate", "parse and validate an instance", [](Session& s) {
    const auto& i = s.inst();
    Json j = {{"valid", true},
              {"name", i.name()},
              {"mode", to_string(i.mode())},
              {"group_order", i.group().order()},
              {"points", i.size()},
              {"basisU", i.basisU().size()},
              {"basisV", i.basisV().size()}};
    std::ostringstream os;
    os << "valid " << to_string(i.mode()) << " instance" << (i.name().empty() ? "" : " '" + i.name() + "'")
       << ": |G|=" << i.group().order() << " |X|=" << i.size() << " |U|=" << i.basisU().size()
       << " |V|=" << i.basisV().size();
    emit(s, j, os.str());
    return 0;
  });

  sub("saturate", "local saturation of --set in (--u, --v)", [](Session& s) {
    const auto& i = s.inst();
    PointSet r = saturate(i, s.set(), i.basisU()[s.u()], i.basisV()[s.v()]);
    emit(s, set_json(r), r.to_string());
    return 0;
  });

  sub("orbit", "orbit of --x, local when --u and --v are given", [](Session& s) {
    const auto& i = s.inst();
    const auto& gl = s.globals();
    PointSet r = (gl.u || gl.v) ? local_orbit(i, s.x(), i.basisU()[s.u_or_whole()], i.basisV()[s.v_or_full()])
                                : i.orbit(s.x());
    emit(s, set_json(r), r.to_string());
    return 0;
  });

  sub("reach", "reach set of --x in (--u, --v); --level bounds the depth", [](Session& s) {
    const auto& i = s.inst();
    Depth d = kFullDepth;
    if (!s.globals().level.empty() && !s.level().is_stable()) d = s.level().value();
    ElemSet r = reach_set(i, s.x(), i.basisU()[s.u()], i.basisV()[s.v()], d);
    emit(s, set_json(r), r.to_string());
    return 0;
  });

  std::string kind = "delta";
  auto* tr = sub("transform", "local Vaught transform of --set; --level gives the stage", [&kind](Session& s) {
    const auto& i = s.inst();
    const PointSet u = i.basisU()[s.u()];
    const ElemSet v = i.basisV()[s.v()];
    PointSet r;
    const bool staged = !s.globals().level.empty() && !s.level().is_stable();
    if (kind == "delta")
      r = staged ? local_delta_n(i, s.set(), u, v, s.level().value()) : local_delta(i, s.set(), u, v);
    else
      r = staged ? local_star_n(i, s.set(), u, v, s.level().value()) : local_star(i, s.set(), u, v);
    emit(s, set_json(r), r.to_string());
    return 0;
  });
  tr->add_option("kind", kind, "delta | star")->check(CLI::IsMember({"delta", "star"}));

  sub("pieces", "piece of --x, or the partition of U, at (--u, --v, --level)", [](Session& s) {
    const auto& t = s.table();
    const Level l = s.level(Level::stable());
    if (s.globals().x) {
      PointSet p = t.piece(s.x(), s.u(), s.v(), l);
      emit(s, set_json(p), p.to_string());
    } else {
      auto part = t.partition(t.cell(s.u(), s.v()), l);
      emit(s, partition_json(part), join(part));
    }
    return 0;
  });

  sub("rank", "generalized Scott rank of --x (all points when omitted)", [](Session& s) {
    const auto& t = s.table();
    Json j = Json::object();
    std::ostringstream os;
    os << "stabilization: " << t.stabilization() << "\n";
    j["stabilization"] = t.stabilization();
    j["ranks"] = Json::object();
    for (Point x = 0; x < s.inst().size(); ++x) {
      if (s.globals().x && x != s.x()) continue;
      const auto r = scott_rank(t, x).value();
      j["ranks"][std::to_string(x)] = r;
      os << "x=" << x << " rank=" << r << "\n";
    }
    emit(s, j, os.str());
    return 0;
  });

  sub("topology", "refined topology on B_level(--x, X, G)", [](Session& s) {
    const auto& t = s.table();
    const std::size_t a = s.finite_level(1);
    auto sp = refined_space(t, s.x(), a);
    Json nb = Json::object();
    std::ostringstream os;
    os << "ground: " << sp.ground.to_string() << (sp.invariant ? " (G-invariant)" : " (not G-invariant)") << "\n";
    os << (sp.topology.is_discrete() ? "discrete" : sp.topology.is_indiscrete() ? "indiscrete" : "neither discrete nor indiscrete")
       << "\n";
    for (auto y : sp.ground) {
      nb[std::to_string(y)] = set_json(sp.topology.neighborhood(y));
      os << "nbhd(" << y << ") = " << sp.topology.neighborhood(y).to_string() << "\n";
    }
    Json j = {{"level", a},
              {"ground", set_json(sp.ground)},
              {"invariant", sp.invariant},
              {"discrete", sp.topology.is_discrete()},
              {"neighborhoods", nb}};
    emit(s, j, os.str());
    return 0;
  });

  std::size_t gamma = 1;
  std::optional<std::size_t> x2;
  auto* rp = sub("relpieces", "pieces in the relative space B_level(--x) against the originals",
                 [&gamma, &x2](Session& s) {
                   const auto& t = s.table();
                   const std::size_t a = s.finite_level(2);
                   auto rel = relative_space(t, s.x(), a);
                   const Point xx = x2.value_or(s.x());
                   auto cmp = relative_pieces(t, rel, s.x(), gamma, xx, s.u(), s.v());
                   Json j = Json::array();
                   std::ostringstream os;
                   bool all = true;
                   for (const auto& c : cmp) {
                     all = all && c.equal();
                     j.push_back({{"y", c.y},
                                  {"beta", c.beta},
                                  {"original", set_json(c.original)},
                                  {"relative", set_json(c.relative)},
                                  {"equal", c.equal()}});
                     os << "y=" << c.y << " beta=" << c.beta << " " << c.original.to_string() << " "
                        << (c.equal() ? "==" : "!=") << " " << c.relative.to_string() << "\n";
                   }
                   os << (all ? "all equal" : "differences found") << "\n";
                   emit(s, j, os.str());
                   return 0;
                 });
  rp->add_option("--gamma", gamma, "level of the basic set inside the relative space")->check(CLI::PositiveNumber);
  rp->add_option("--x2", x2, "point of the orbit whose piece gives the basic set (default --x)");

  sub("openmap", "whether g -> g·x is open onto the orbit at --level", [](Session& s) {
    const auto& t = s.table();
    const std::size_t a = s.finite_level(scott_rank(t, s.x()).value() + 2);
    auto r = open_map_check(t, s.x(), a);
    Json j = {{"level", a},
              {"open", r.open},
              {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
              {"neighborhood", set_json(r.neighborhood)}};
    std::string text = "level " + std::to_string(a) + ": " + (r.open ? "open" : "not open");
    if (r.witness) text += " (point " + std::to_string(*r.witness) + " has neighbourhood " + r.neighborhood.to_string() + ")";
    emit(s, j, text);
    return 0;
  });

  std::string what;
  std::size_t budget = 4096;
  auto* ck = sub("check", "eventual-openness | claschar", [&what, &budget](Session& s) {
    if (what == "eventual-openness") {
      auto eo = eventual_openness(s.inst());
      emit(s, to_json(eo), witness_table(s.inst(), eo));
      return 0;
    }
    auto rep = claschar_report(s.table(), budget, s.globals().seed);
    emit(s, to_json(rep), claschar_text(s.inst(), rep));
    return 0;
  });
  ck->add_option("what", what, "eventual-openness | claschar")
      ->required()
      ->check(CLI::IsMember({"eventual-openness", "claschar"}));
  ck->add_option("--budget", budget, "sampled invariant sets for pairs with |U| > 12");

  std::string suite;
  OracleOptions oo;
  auto* orc = sub("oracle", "run an oracle suite", [&suite, &oo](Session& s) {
    OracleOptions o = oo;
    o.seed = s.globals().seed;
    o.workers = workers();
    auto log = run_oracles(s.table(), suite, o);
    emit(s, to_json(log), log_text(log));
    return s.inst().strict() && !log.empty() ? 2 : 0;
  });
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  orc->add_option("suite", suite, "locsat | bH | vaught | phar | hist | vb | list | translate | orb | subs | all")
      ->required()
      ->check(CLI::IsMember(suites));
  orc->add_option("--budget", oo.budget, "enumerate quantifier domains up to this size");
  orc->add_option("--trials", oo.trials, "samples drawn from larger domains");

  RandomBounds rb;
  std::string gen_mode = "exploratory";
  auto* gen = app.add_subcommand("generate", "print a seeded random instance document");
  gen->add_option("--max-group", rb.max_group, "largest group order")->capture_default_str();
  gen->add_option("--max-points", rb.max_points, "largest space")->capture_default_str();
  gen->add_option("--max-u", rb.max_u, "most basisU members")->capture_default_str();
  gen->add_option("--max-v", rb.max_v, "most basisV members")->capture_default_str();
  gen->add_option("--mode", gen_mode, "mode of the generated instance")->check(CLI::IsMember({"strict", "exploratory"}));
  gen->callback([&] {
    action = [&] {
      rb.mode = mode_from_string(g.mode_override.empty() ? gen_mode : g.mode_override);
      auto inst = random_instance(g.seed, rb);
      std::cout << serialize_instance(inst);
      return 0;
    };
  });

  AnalysisOptions ao;
  std::string report_suites = "all";
  auto* rep = sub("report", "full analysis document", [&ao, &report_suites](Session& s) {
    AnalysisOptions o = ao;
    o.oracle.seed = s.globals().seed;
    o.oracle.workers = workers();
    if (report_suites == "all")
      o.suites = suite_names();
    else if (report_suites != "none")
      for (std::string part; auto ch : report_suites + ",") {
        if (ch == ',') {
          if (!part.empty()) o.suites.push_back(part);
          part.clear();
        } else {
          part += ch;
        }
      }
    std::cout << serialize_analysis(s.table(), o);
    if (o.suites.empty() || !s.inst().strict()) return 0;
    return run_oracles(s.table(), o.suites, o.oracle).empty() ? 0 : 2;
  });
  rep->add_option("--suites", report_suites, "comma-separated oracle suites, all or none");
  rep->add_option("--budget", ao.containment_budget, "containment check budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    return action ? action() : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
