#include "chordlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordlab/clutter_file.hpp"
#include "chordlab/cycles.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/harness.hpp"
#include "chordlab/homology.hpp"
#include "chordlab/ideal.hpp"
#include "chordlab/report.hpp"

namespace chordlab {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool timing = false;
  int workers = 0;
  std::string file;
  std::string mode = "exhaustive";
  std::string replay;
  int ci = 0;
  std::string check;
  std::string of = "complement";
  std::string order = "natural";
  std::string id;
  int n = -1;
  int d = -1;
  std::uint64_t shards = 0;
  int length = 4;
};

/// What a subcommand produced: a structured document and its text rendering.
struct Result {
  int code = kHolds;
  json doc = json::object();
  std::ostringstream text;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Loads the input clutter and fills the envelope's input section.
ClutterFile load(const Options& o, Result& r) {
  ClutterFile f = read_clutter_file(o.file);
  r.doc["input"] = {{"path", o.file},
                    {"digest", input_digest(f.clutter, f.labels)},
                    {"clutter", clutter_to_json(f.clutter, f.labels)}};
  return f;
}

/// "C - 12" when the witness is C minus the circuits through one MS.
std::string describe_subclutter(const Clutter& c, const Clutter& w, const LabelMap& labels) {
  for (FaceSet e : maximal_subcircuits(c))
    if (remove(c, e) == w) return "C - " + labels.format(e);
  return "{" + labels.format(w.circuits()) + "}";
}

void cmd_analyze(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  json v;
  json w;
  auto line = [&](const std::string& key, const std::string& value) { r.text << key << ": " << value << '\n'; };

  const auto ms = maximal_subcircuits(c);
  const auto sms = simplicial_ms_set(c);
  const auto free = free_ms_set(c);
  v["circuits"] = c.size();
  v["ms_count"] = ms.size();
  v["sms_count"] = sms.size();
  v["free_ms_count"] = free.size();
  w["sms"] = sets_to_json(sms, labels);
  w["free_ms"] = sets_to_json(free, labels);
  line("n, d", std::to_string(c.n()) + ", " + std::to_string(c.d()));
  line("circuits", std::to_string(c.size()));
  line("maximal subcircuits", std::to_string(ms.size()));
  line("simplicial MSs", std::to_string(sms.size()) + (sms.empty() ? "" : "  [" + labels.format(sms) + "]"));
  line("free MSs", std::to_string(free.size()) + (free.empty() ? "" : "  [" + labels.format(free) + "]"));

  const auto cert = chordality(c, ChordalityMode::exhaustive);
  const auto greedy = chordality(c, ChordalityMode::greedy);
  v["chordal"] = cert.chordal;
  v["greedy_reaches_empty"] = greedy.chordal;
  if (cert.chordal) {
    w["sms_sequence"] = sets_to_json(cert.sequence, labels);
    r.doc["replay"] = "chordlab chordal --replay " + shell_quote(labels.format(cert.sequence)) + " " + o.file;
  } else if (cert.stuck_witness) {
    w["stuck"] = sets_to_json(cert.stuck_witness->circuits(), labels);
  }
  line("chordal", yes_no(cert.chordal) + (cert.chordal ? "  [" + labels.format(cert.sequence) + "]" : ""));
  line("greedy deletion reaches empty", yes_no(greedy.chordal));

  v["cf_cycle"] = is_cf_cycle(c);
  v["cf_tree"] = is_cf_tree(c);
  line("CF-cycle", yes_no(v["cf_cycle"]));
  line("CF-tree", yes_no(v["cf_tree"]));
  if (c.d() >= 1) {
    const auto b = boundary_clutter(c);
    v["boundary_components"] = b.components.size();
    line("boundary components", std::to_string(b.components.size()));
  }

  for (auto kind : {CycleKind::c1, CycleKind::c2, CycleKind::c3}) {
    const std::string key = "c" + std::to_string(static_cast<int>(kind));
    try {
      const auto res = ci_cycle(c, kind);
      v[key + "_cycle"] = res.is_cycle;
      line("C" + key.substr(1) + "-cycle", yes_no(res.is_cycle));
    } catch (const CapacityError&) {
      // Every C1-cycle is a C2-cycle.
      if (kind == CycleKind::c2 && v["c1_cycle"] == true) {
        v[key + "_cycle"] = true;
        line("C2-cycle", "yes (implied by C1)");
      } else {
        v[key + "_cycle"] = nullptr;
        line("C" + key.substr(1) + "-cycle", "skipped (over the enumeration cap)");
      }
    }
  }
  for (auto kind : {CycleKind::c2, CycleKind::c3}) {
    const std::string key = kind == CycleKind::c2 ? "ms_induced_noncomplete_c2" : "vertex_induced_noncomplete_c3";
    try {
      v[key] = has_induced_noncomplete_ci_cycle(c, kind);
      line(kind == CycleKind::c2 ? "MS-induced non-complete C2-cycle" : "vertex-induced non-complete C3-cycle",
           yes_no(v[key]));
    } catch (const CapacityError&) {
      v[key] = nullptr;
    }
  }

  v["linear_resolution_z2"] = has_linear_resolution_z2(c);
  line("linear resolution of I(C-bar) over Z2", yes_no(v["linear_resolution_z2"]));

  const auto ideal = SquarefreeIdeal::complement_ideal(c);
  v["complement_stable"] = is_squarefree_stable(ideal);
  v["complement_strongly_stable"] = is_squarefree_strongly_stable(ideal);
  v["complement_polymatroidal"] = is_polymatroidal(ideal);
  line("I(C-bar) squarefree stable", yes_no(v["complement_stable"]));
  line("I(C-bar) squarefree strongly stable", yes_no(v["complement_strongly_stable"]));
  line("I(C-bar) polymatroidal", yes_no(v["complement_polymatroidal"]));
  if (ideal.size() <= kLinearQuotientCap) {
    const auto lq = find_linear_quotients(ideal);
    v["complement_linear_quotients"] = lq.has_value();
    if (lq) w["linear_quotient_order"] = sets_to_json(apply_order(ideal, *lq), labels);
    line("I(C-bar) linear quotients", yes_no(lq.has_value()));
  } else {
    v["complement_linear_quotients"] = nullptr;
    line("I(C-bar) linear quotients", "skipped (more than 12 generators)");
  }

  if (!c.empty()) {
    const auto vd = vertex_decomposition(facet_complex(c));
    v["vertex_decomposable"] = vd.decomposable;
    if (vd.decomposable) {
      std::vector<std::int64_t> shed;
      for (int x : vd.shedding) shed.push_back(labels.to_external(x));
      w["shedding"] = shed;
    }
    line("facet complex vertex decomposable", yes_no(vd.decomposable));
  }
  r.doc["verdicts"] = v;
  r.doc["witnesses"] = w;
}

void cmd_chordal(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  if (!o.replay.empty()) {
    const auto seq = parse_set_list(o.replay, c.d(), labels);
    const bool ok = replays_to_empty(c, seq);
    r.doc["verdicts"] = {{"replays_to_empty", ok}};
    r.doc["witnesses"] = {{"sequence", sets_to_json(seq, labels)}};
    r.text << (ok ? "valid" : "invalid") << " SMS deletion sequence: " << labels.format(seq) << '\n';
    r.code = ok ? kHolds : kFails;
    return;
  }
  if (o.mode != "greedy" && o.mode != "exhaustive") throw InputError("--mode must be greedy or exhaustive");
  const auto mode = o.mode == "greedy" ? ChordalityMode::greedy : ChordalityMode::exhaustive;
  const auto cert = chordality(c, mode);
  r.doc["verdicts"] = {{"chordal", cert.chordal}, {"conclusive", cert.chordal || cert.conclusive}, {"mode", o.mode}};
  json w;
  if (cert.chordal) {
    const std::string seq = labels.format(cert.sequence);
    w["sequence"] = sets_to_json(cert.sequence, labels);
    r.doc["replay"] = "chordlab chordal --replay " + shell_quote(seq) + " " + o.file;
    r.text << "chordal\nwitness: " << seq << '\n';
  } else {
    if (cert.stuck_witness) w["stuck"] = sets_to_json(cert.stuck_witness->circuits(), labels);
    if (mode == ChordalityMode::greedy) {
      r.text << "not established: greedy deletion got stuck; rerun with --mode exhaustive\n";
    } else {
      r.text << "not chordal\n";
    }
    if (cert.stuck_witness) r.text << "stuck at: " << labels.format(cert.stuck_witness->circuits()) << '\n';
  }
  r.doc["witnesses"] = w;
  r.code = cert.chordal ? kHolds : kFails;
}

void cmd_cycles(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  if (o.ci == 0) {
    const auto cls = classify_cycles(c);
    r.doc["verdicts"] = {{"cf_cycle", cls.cf_cycle}, {"complete_small", cls.complete_small}, {"sms_empty", cls.sms_empty},
                         {"c1_cycle", cls.c1},   {"c2_cycle", cls.c2},             {"c3_cycle", cls.c3}};
    json w = json::object();
    if (cls.c1_witness) w["c1"] = sets_to_json(cls.c1_witness->circuits(), labels);
    if (cls.c2_witness) w["c2"] = sets_to_json(cls.c2_witness->circuits(), labels);
    if (cls.c3_witness) w["c3"] = sets_to_json(cls.c3_witness->circuits(), labels);
    r.doc["witnesses"] = w;
    r.text << "CF-cycle: " << yes_no(cls.cf_cycle) << "\nSMS empty: " << yes_no(cls.sms_empty)
           << "\nC1-cycle: " << yes_no(cls.c1) << "\nC2-cycle: " << yes_no(cls.c2) << "\nC3-cycle: " << yes_no(cls.c3)
           << '\n';
    return;
  }
  if (o.ci < 1 || o.ci > 3) throw InputError("--ci must be 1, 2 or 3");
  const auto res = ci_cycle(c, static_cast<CycleKind>(o.ci));
  r.doc["verdicts"] = {{"ci", o.ci}, {"is_cycle", res.is_cycle}, {"sms_empty", res.sms_empty},
                       {"complete_small", res.complete_small}};
  r.text << "C" << o.ci << "-cycle: " << yes_no(res.is_cycle) << '\n';
  if (res.witness) {
    const std::string what = describe_subclutter(c, *res.witness, labels);
    r.doc["witnesses"] = {{"sms_free_subclutter", sets_to_json(res.witness->circuits(), labels)}, {"description", what}};
    r.text << "witness: SMS(" << what << ") = {}\n";
  } else if (!c.empty() && !res.sms_empty && !res.complete_small) {
    r.text << "reason: SMS(C) is nonempty\n";
  }
  r.code = res.is_cycle ? kHolds : kFails;
}

void cmd_ideal(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  if (o.of != "complement" && o.of != "circuits") throw InputError("--of must be complement or circuits");
  if (o.order != "natural" && o.order != "reverse") throw InputError("--order must be natural or reverse");
  const auto ideal =
      o.of == "complement" ? SquarefreeIdeal::complement_ideal(c) : SquarefreeIdeal::circuit_ideal(c);
  const auto vorder = o.order == "natural" ? VertexOrder::natural : VertexOrder::reversed;
  bool holds = false;
  json w = json::object();
  if (o.check == "lq") {
    const auto ord = find_linear_quotients(ideal);
    holds = ord.has_value();
    if (ord) {
      w["order"] = sets_to_json(apply_order(ideal, *ord), labels);
      r.text << "order: " << labels.format(apply_order(ideal, *ord)) << '\n';
    }
  } else if (o.check == "stable") {
    holds = is_squarefree_stable(ideal, vorder);
  } else if (o.check == "strongly-stable") {
    holds = is_squarefree_strongly_stable(ideal, vorder);
  } else if (o.check == "polymatroidal") {
    const auto ex = polymatroidal_exchange(ideal);
    holds = ex.holds;
    if (ex.failure) {
      const auto& f = *ex.failure;
      w["exchange_failure"] = {{"u", labels.to_external(f.u)},
                               {"v", labels.to_external(f.v)},
                               {"i", labels.to_external(FaceSet::singleton(f.i)).front()}};
      r.text << "no exchange for u=" << labels.format(f.u) << " v=" << labels.format(f.v)
             << " i=" << labels.to_external(FaceSet::singleton(f.i)).front() << '\n';
    }
  } else {
    throw InputError("--check must be lq, stable, strongly-stable or polymatroidal");
  }
  r.doc["verdicts"] = {{"check", o.check}, {"of", o.of}, {"order", o.order}, {"holds", holds}};
  r.doc["witnesses"] = w;
  r.text << o.check << " (" << o.of << " ideal): " << yes_no(holds) << '\n';
  r.code = holds ? kHolds : kFails;
}

void cmd_homology(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  const auto h = reduced_homology_ranks(facet_complex(c));
  json ranks = json::object();
  for (int i = -1; i + 1 < static_cast<int>(h.betti.size()); ++i) {
    ranks[std::to_string(i)] = h.at(i);
    r.text << "H~_" << i << " rank " << h.at(i) << '\n';
  }
  r.doc["verdicts"] = {{"reduced_betti", ranks}, {"acyclic", h.acyclic()}};
}

void cmd_predicate(const Options& o, Result& r, const std::string& key, const std::function<bool(const Clutter&)>& p) {
  const auto [c, labels] = load(o, r);
  const bool holds = p(c);
  r.doc["verdicts"] = {{key, holds}};
  r.text << key << ": " << yes_no(holds) << '\n';
  r.code = holds ? kHolds : kFails;
}

void cmd_vdec(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  const auto vd = vertex_decomposition(facet_complex(c));
  r.doc["verdicts"] = {{"vertex_decomposable", vd.decomposable}};
  r.text << "vertex decomposable: " << yes_no(vd.decomposable) << '\n';
  if (vd.decomposable) {
    std::vector<std::int64_t> shed;
    for (int v : vd.shedding) shed.push_back(labels.to_external(v));
    r.doc["witnesses"] = {{"shedding", shed}};
    r.text << "shedding sequence:";
    for (auto v : shed) r.text << ' ' << v;
    r.text << '\n';
  }
  r.code = vd.decomposable ? kHolds : kFails;
}

void cmd_dual(const Options& o, Result& r) {
  const auto [c, labels] = load(o, r);
  const Clutter dual = alexander_dual_clutter(c);
  r.doc["verdicts"] = {{"dual_circuits", dual.size()}};
  r.doc["witnesses"] = {{"dual", clutter_to_json(dual, labels)}};
  r.text << format_clutter(dual, labels);
}

void cmd_harness(const Options& o, Result& r, bool hunt) {
  if (o.n < 0 || o.d < 0) throw InputError("--n and --d are required");
  RunOptions run;
  run.workers = o.workers;
  if (o.shards > 0) run.shards = o.shards;
  run.sequence_length = o.length;
  const auto report = hunt ? counterexample_search(o.id, o.n, o.d, run) : verify(o.id, o.n, o.d, run);
  r.doc = report_to_json(report, o.timing);
  r.text << report_to_text(report, o.timing);
  if (hunt && !report.counterexamples.empty())
    r.text << "*** " << report.failures << " hit(s) for " << o.id << "; replay listings above ***\n";
  r.code = report.pass ? kHolds : kFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"chordlab: chordality, cycles and ideal predicates for uniform clutters", "chordlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit one structured JSON document");
  app.add_flag("--timing", o.timing, "Include wall time in reports");
  app.add_option("--workers", o.workers, "Worker threads for verify/hunt (default: CHORDLAB_WORKERS or 1)")
      ->check(CLI::Range(1, 1024));

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Clutter file")->required();
    return sub;
  };
  file_cmd("analyze", "Full verdict matrix");
  auto* chordal = file_cmd("chordal", "Chordality with a replayable SMS deletion sequence");
  chordal->add_option("--mode", o.mode, "greedy or exhaustive")->check(CLI::IsMember({"greedy", "exhaustive"}));
  chordal->add_option("--replay", o.replay, "Check a deletion sequence instead, e.g. '14 34 24'");
  auto* cycles = file_cmd("cycles", "CF- and Ci-cycle classification");
  cycles->add_option("--ci", o.ci, "Test one kind: 1, 2 or 3")->check(CLI::Range(1, 3));
  auto* ideal = file_cmd("ideal", "Predicates of I(C-bar) or I(C)");
  ideal->add_option("--check", o.check, "lq, stable, strongly-stable or polymatroidal")
      ->required()
      ->check(CLI::IsMember({"lq", "stable", "strongly-stable", "polymatroidal"}));
  ideal->add_option("--of", o.of, "complement (default) or circuits")->check(CLI::IsMember({"complement", "circuits"}));
  ideal->add_option("--order", o.order, "Vertex order for stability: natural or reverse")
      ->check(CLI::IsMember({"natural", "reverse"}));
  file_cmd("homology", "Reduced Z2 Betti numbers of the facet complex");
  file_cmd("cm", "Cohen-Macaulay test of the facet complex over Z2");
  file_cmd("linres", "Linear resolution of I(C-bar) over Z2");
  file_cmd("vdec", "Vertex decomposability of the facet complex");
  file_cmd("dual", "Alexander dual clutter");
  for (const auto* name : {"verify", "hunt"}) {
    const bool hunt = std::string(name) == "hunt";
    auto* sub = app.add_subcommand(name, hunt ? "Counterexample search" : "Theorem sweep");
    sub->add_option(hunt ? "property" : "theorem-id", o.id, hunt ? "Property to search" : "Theorem id")->required();
    sub->add_option("--n", o.n, "Vertex count")->required();
    sub->add_option("--d", o.d, "Dimension")->required();
    if (!hunt) sub->add_option("--length", o.length, "Sequence length for lq-sms-equivalence");
    sub->add_option("--shards", o.shards, "Shard count (default depends only on n and d)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Result r;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (name == "analyze") cmd_analyze(o, r);
    else if (name == "chordal") cmd_chordal(o, r);
    else if (name == "cycles") cmd_cycles(o, r);
    else if (name == "ideal") cmd_ideal(o, r);
    else if (name == "homology") cmd_homology(o, r);
    else if (name == "cm") cmd_predicate(o, r, "cohen_macaulay_z2", [](const Clutter& c) { return is_cohen_macaulay_z2(facet_complex(c)); });
    else if (name == "linres") cmd_predicate(o, r, "linear_resolution_z2", has_linear_resolution_z2);
    else if (name == "vdec") cmd_vdec(o, r);
    else if (name == "dual") cmd_dual(o, r);
    else cmd_harness(o, r, name == "hunt");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacityError;
  } catch (const CounterexampleAlert& e) {
    err << "COUNTEREXAMPLE ALERT: " << e.what() << '\n';
    return kFails;
  }

  if (o.json) {
    if (name != "verify" && name != "hunt") {
      r.doc["format_version"] = kReportFormatVersion;
      r.doc["command"] = name;
      r.doc["argv"] = args;
      r.doc["exit_code"] = r.code;
      if (o.timing) r.doc["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out << r.doc.dump(2) << '\n';
  } else {
    out << r.text.str();
  }
  return r.code;
}

}  // namespace chordlab
