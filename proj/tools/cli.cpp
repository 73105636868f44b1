#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "bbd/analysis.hpp"
#include "bbd/canon.hpp"
#include "bbd/cycles.hpp"
#include "bbd/digraph.hpp"
#include "bbd/hunt.hpp"
#include "bbd/json_io.hpp"
#include "bbd/verify.hpp"

namespace bbd::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad input after argument parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BipartiteDigraph load(const std::string& path) {
  try {
    if (path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      return parse(ss.str());
    }
    return read_digraph_file(path);
  } catch (const DigraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int default_workers() {
  if (const char* env = std::getenv("BBD_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void print_report_text(std::ostream& out, const ConditionReport& r) {
  out << "order " << r.order << "\n"
      << "strong " << (r.strong ? "yes" : "no") << "\n"
      << "underlying 2-connected " << (r.underlying_2connected ? "yes" : "no") << "\n"
      << "cut vertices " << format_vertices(r.cut_vertices.members()) << "\n"
      << "dominating pairs " << r.dominating_pairs.size() << "\n"
      << "max B_k " << r.max_bk.to_string() << "\n"
      << "wang condition " << (r.wang ? "yes" : "no") << "\n"
      << "sum condition " << (r.sum_condition ? "yes" : "no") << "\n";
  for (const auto& [v, d] : r.degrees)
    out << "  " << v.name() << " out " << d.out << " in " << d.in << " total " << d.total << "\n";
}

void print_verdict_text(std::ostream& out, const TheoremVerdict& v) {
  out << to_string(v.theorem) << ": hypotheses " << (v.hypotheses_met ? "met" : "not met");
  for (const auto& f : v.failed_hypotheses) out << " [" << f << "]";
  out << "\n";
  if (v.conclusion_holds) {
    out << "conclusion " << (*v.conclusion_holds ? "holds" : "FAILS");
    if (v.escape_clause) out << " (" << *v.escape_clause << ")";
    out << "\n";
  }
  if (v.witness) out << "witness " << v.witness->to_text() << "\n";
  if (v.counterexample) out << "COUNTEREXAMPLE\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced bipartite digraph toolkit: conditions, cycles, isomorphism, theorem checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit one JSON document");

  auto* exemplar = app.add_subcommand("exemplar", "Print a named digraph in bbd text format");
  std::string ex_name;
  int ex_a = 0, ex_p = 0, ex_q = 0;
  exemplar->add_option("name", ex_name, "d10 | d8 | complete | cycle")->required();
  exemplar->add_option("--a", ex_a, "Half-order (cycle, or complete with p = q = a)");
  exemplar->add_option("--p", ex_p, "Size of the X side (complete)");
  exemplar->add_option("--q", ex_q, "Size of the Y side (complete)");

  auto* check = app.add_subcommand("check", "Connectivity and degree-condition report");
  std::string check_file;
  check->add_option("file", check_file, "Digraph file or - for stdin")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Even cycle lengths present");
  std::string spec_file;
  spectrum->add_option("file", spec_file)->required();

  auto* witness = app.add_subcommand("witness", "Least cycle of a given length");
  std::string wit_file;
  int wit_len = 0;
  witness->add_option("file", wit_file)->required();
  witness->add_option("--length", wit_len, "Cycle length")->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test (parts may be swapped)");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check one theorem on a digraph");
  std::string ver_file, ver_theorem;
  verify_cmd->add_option("file", ver_file)->required();
  verify_cmd->add_option("--theorem", ver_theorem, "t12 | t13 | t14 | t15 | t16 | cor")->required();

  auto* hunt = app.add_subcommand("hunt", "Counterexample campaign");
  std::string hunt_theorem, hunt_mode = "structured";
  GenSpec gs;
  gs.count = 1000;
  gs.arc_density = 0.5;
  int workers = 0;
  bool no_timing = false;
  hunt->add_option("--theorem", hunt_theorem)->required();
  hunt->add_option("--mode", hunt_mode, "random | structured | exhaustive");
  hunt->add_option("--a", gs.half_order, "Half-order")->required();
  hunt->add_option("--density", gs.arc_density, "Arc probability per direction");
  hunt->add_option("--seed", gs.seed);
  hunt->add_option("--count", gs.count, "Number of instance indices");
  hunt->add_option("--workers", workers, "Worker threads (default: BBD_WORKERS or hardware)");
  hunt->add_flag("--no-timing", no_timing, "Omit duration_ms");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*exemplar) {
      std::optional<BipartiteDigraph> d;
      if (ex_name == "d10") {
        d = build_d10();
      } else if (ex_name == "d8") {
        d = build_d8();
      } else if (ex_name == "complete") {
        int p = ex_p ? ex_p : ex_a, q = ex_q ? ex_q : ex_a;
        if (p < 1 || q < 1) throw UsageError("complete needs --a or both --p and --q");
        d = build_complete(p, q);
      } else if (ex_name == "cycle") {
        if (ex_a < 1) throw UsageError("cycle needs --a");
        d = build_directed_cycle(ex_a);
      } else {
        throw UsageError("unknown exemplar '" + ex_name + "' (expected d10, d8, complete, cycle)");
      }
      if (json)
        out << Json{{"name", ex_name}, {"digraph", serialize(*d)}}.dump(2) << "\n";
      else
        out << serialize(*d);
      return kOk;
    }

    if (*check) {
      auto r = analyze(load(check_file));
      if (json)
        out << to_json(r) << "\n";
      else
        print_report_text(out, r);
      return kOk;
    }

    if (*spectrum) {
      auto s = cycle_spectrum(load(spec_file));
      if (json) {
        out << to_json(s) << "\n";
      } else {
        for (std::size_t i = 0; i < s.witnesses.size(); ++i)
          out << (i ? " " : "") << s.witnesses[i].length();
        out << "\n";
      }
      return kOk;
    }

    if (*witness) {
      auto w = find_cycle_of_length(load(wit_file), wit_len);
      if (json)
        out << Json{{"length", wit_len}, {"witness", w ? Json(w->to_text()) : Json(nullptr)}}.dump(2) << "\n";
      else
        out << (w ? w->to_text() : "none") << "\n";
      return kOk;
    }

    if (*iso) {
      auto d1 = load(iso_a);
      auto d2 = load(iso_b);
      auto m = find_isomorphism(d1, d2);
      if (m && !is_isomorphism(d1, d2, *m)) throw std::logic_error("isomorphism failed re-validation");
      if (json) {
        Json j{{"isomorphic", m.has_value()}};
        if (m) {
          Json mapping = Json::object();
          for (const auto& v : VertexSet::full(d1.half_order()).members()) mapping[v.name()] = m->image(v).name();
          j["mapping"] = mapping;
        }
        out << j.dump(2) << "\n";
      } else {
        out << (m ? "isomorphic\n" + m->to_text() : std::string("not isomorphic")) << "\n";
      }
      return kOk;
    }

    if (*verify_cmd) {
      TheoremId id;
      try {
        id = parse_theorem_id(ver_theorem);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto v = verify(id, load(ver_file));
      if (json)
        out << to_json(v) << "\n";
      else
        print_verdict_text(out, v);
      return v.counterexample ? kCounterexample : kOk;
    }

    if (*hunt) {
      TheoremId id;
      try {
        id = parse_theorem_id(hunt_theorem);
        gs.mode = parse_gen_mode(hunt_mode);
        gs.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto r = hunt_counterexamples(id, gs, workers > 0 ? workers : default_workers());
      if (json) {
        out << to_json(r, !no_timing) << "\n";
      } else {
        out << to_string(id) << " " << to_string(gs.mode) << " a=" << gs.half_order << " seed=" << gs.seed
            << "\ntested " << r.tested << " discarded " << r.discarded << " hypotheses met " << r.hypotheses_met
            << "\ndistinct canonical forms " << r.distinct_canonical_forms << "\n";
        for (const auto& [k, n] : r.rejections) out << "  rejected " << k << ": " << n << "\n";
        out << "counterexamples " << r.counterexamples.size() << "\n";
        for (const auto& c : r.counterexamples) out << "# index " << c.index << "\n" << c.digraph;
      }
      return r.counterexamples.empty() ? kOk : kCounterexample;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DigraphError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace bbd::cli
