#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cvxlat/analysis.hpp"
#include "cvxlat/closure.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/io.hpp"
#include "cvxlat/parallel.hpp"
#include "cvxlat/segment_ground.hpp"
#include "cvxlat/simplex_embedding.hpp"
#include "cvxlat/verify/acceptance.hpp"

using namespace cvxlat;
using io::Json;

namespace {

enum Exit { kOk = 0, kInput = 1, kResource = 2, kViolated = 3 };

struct Config {
  std::string input;
  std::string out_dir;
  std::string format = "json";
  std::uint64_t seed = 0;
  int workers = 0;
  std::size_t max_ground = FiniteGround::kDefaultMaxGround;
  std::size_t n = 2;
  std::size_t max_n = 2;
  std::size_t count = 200;
  std::string set_name;
  std::string fixtures = CVXLAT_FIXTURE_DIR;
  std::vector<int> only;
  bool timing = false;
};

using Clock = std::chrono::steady_clock;

Json envelope(const std::string& command) {
  return Json{{"schema_version", io::kSchemaVersion}, {"command", command}};
}

Json reason(const std::string& kind, const std::string& message) { return Json{{"kind", kind}, {"message", message}}; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_artifact(const Config& cfg, const std::string& name, const std::string& text) {
  if (cfg.out_dir.empty()) return;
  std::filesystem::create_directories(cfg.out_dir);
  io::write_file((std::filesystem::path(cfg.out_dir) / name).string(), text);
}

// Writes report.json and prints the report; returns the exit code.
int finish(const Config& cfg, Json report, int code, Clock::time_point t0) {
  if (cfg.timing) report["timing"] = {{"elapsed_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
  write_artifact(cfg, "report.json", report.dump(2) + "\n");
  emit(report);
  return code;
}

Json read_input(const Config& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  return io::read_file(cfg.input);
}

// A lattice file ("leq") or a finite ground file ("points").
struct LatticeInput {
  std::optional<io::FiniteGroundFile> ground;
  FiniteLattice lattice;
};

LatticeInput load_lattice(const Config& cfg) {
  const auto j = read_input(cfg);
  if (j.contains("leq")) return {std::nullopt, io::lattice_from_json(j)};
  auto g = io::finite_ground_from_json(j);
  auto l = enumerate_closed_sets(g.ground, cfg.max_ground);
  return {std::move(g), std::move(l)};
}

std::string render(const Config& cfg, const FiniteLattice& l, const LatticeInput& in) {
  if (cfg.format == "dot") return io::to_dot(l);
  if (cfg.format == "csv") return io::to_csv(l);
  if (cfg.format == "svg") {
    if (!in.ground) throw InputError("svg output needs a point file");
    return io::to_svg(in.ground->ground.points(), in.ground->labels);
  }
  return io::to_json(l).dump(2) + "\n";
}

int cmd_build(const Config& cfg) {
  const auto t0 = Clock::now();
  const auto in = load_lattice(cfg);
  const auto& l = in.lattice;
  auto report = envelope("build");
  report["ground_size"] = in.ground ? in.ground->ground.size() : 0;
  report["lattice"] = io::to_json(l);
  write_artifact(cfg, "lattice.json", io::to_json(l).dump(2) + "\n");
  write_artifact(cfg, "lattice.dot", io::to_dot(l));
  write_artifact(cfg, "lattice.csv", io::to_csv(l));
  if (cfg.format != "json") {
    std::cout << render(cfg, l, in);
    return kOk;
  }
  return finish(cfg, report, kOk, t0);
}

int cmd_check(const Config& cfg, const std::string& property) {
  const auto t0 = Clock::now();
  const auto in = load_lattice(cfg);
  const auto& l = in.lattice;
  CheckResult r;
  if (property == "jsd") {
    r = check_jsd(l);
  } else if (property == "lb") {
    r = check_lower_bounded(l);
  } else if (property == "biatomic") {
    r = check_biatomic(l);
  } else if (property == "antiexchange") {
    if (!l.has_sets()) throw InputError("anti-exchange needs a point file");
    r = check_anti_exchange(l);
  } else if (property == "weakatom") {
    r = check_weak_atom_property(l);
  } else if (property == "m3") {
    const auto w = find_m3(l);
    r.holds = !w;
    r.witness = w;
  } else {
    throw InputError("unknown property " + property);
  }
  auto report = envelope("check");
  report["property"] = property == "m3" ? "m3-free" : property;
  report["lattice_size"] = l.size();
  report["holds"] = r.holds;
  if (r.witness) {
    report["witness"] = io::to_json(*r.witness, &l);
    report["witness_revalidated"] = revalidate(l, *r.witness);
  }
  if (!r.holds) report["reason"] = reason("property_violated", report["property"].get<std::string>() + " fails");
  return finish(cfg, report, r.holds ? kOk : kViolated, t0);
}

int cmd_embed(const Config& cfg) {
  const auto t0 = Clock::now();
  const auto ct = build_table(cfg.n);
  std::vector<GroundLabel> labels;
  const auto x = ground_set(ct, &labels);
  std::vector<std::string> names;
  for (const auto& g : labels) names.push_back(g.text());
  const auto lemmas = verify_lemmas(ct);
  const auto r = build_embedding(ct, cfg.max_n);

  write_artifact(cfg, "ground.json", io::to_json(x, names).dump(2) + "\n");
  write_artifact(cfg, "construction.json", io::to_json(ct).dump(2) + "\n");
  if (!cfg.out_dir.empty() && (cfg.format == "dot" || cfg.format == "svg")) {
    write_artifact(cfg, "target.dot", io::to_dot(enumerate_closed_sets(x, x.size())));
    if (x.dim() == 2) write_artifact(cfg, "points.svg", io::to_svg(x.points(), names));
  }

  auto report = envelope("embed");
  report["n"] = cfg.n;
  report["ground"] = io::to_json(x, names);
  report["schedule"] = io::to_json(ct.schedule);
  report["lemmas"] = io::to_json(lemmas);
  report["embedding"] = io::to_json(r);
  const bool lemmas_ok = std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaCheck& c) { return c.holds; });
  report["embedding_verified"] = r.embedding_verified();
  report["lower_bounded"] = r.lower_bounded;
  const bool ok = lemmas_ok && r.embedding_verified() && r.lower_bounded;
  if (!ok) {
    std::string why;
    if (!lemmas_ok) why = "a lemma check failed";
    else if (!r.embedding_verified()) why = "the map is not a lattice embedding";
    else why = "the target lattice has a D-cycle";
    report["reason"] = reason("property_violated", why);
  }
  return finish(cfg, report, ok ? kOk : kViolated, t0);
}

int cmd_segments(const Config& cfg, const std::string& what) {
  const auto t0 = Clock::now();
  const auto f = io::segment_ground_from_json(read_input(cfg));
  const auto& x = f.ground;
  auto report = envelope("segments");
  report["check"] = what;
  bool holds = true;
  if (what == "check-i") {
    const auto r = check_condition_disjoint(x);
    report["report"] = io::to_json(r);
    holds = r.holds;
  } else if (what == "check-ii") {
    if (f.polytope.empty()) throw InputError("check-ii needs a \"polytope\" in the input");
    const auto r = check_condition_faces(x, VPolytope::from_points(f.polytope));
    report["report"] = io::to_json(r);
    holds = r.holds;
  } else if (what == "sdv") {
    SdvReport r;
    if (!f.triples.empty()) {
      std::vector<SdvTriple> triples;
      for (const auto& t : f.triples) triples.push_back({f.sets.at(t[0]), f.sets.at(t[1]), f.sets.at(t[2])});
      r = sdv_spot_check(x, triples);
      report["mode"] = "fixture triples";
    } else {
      r = sdv_spot_check(x, cfg.count, cfg.seed);
      report["mode"] = "random";
      report["seed"] = cfg.seed;
    }
    report["report"] = io::to_json(r);
    holds = r.holds;
  } else if (what == "closure") {
    Json out = Json::object();
    for (const auto& [name, y] : f.sets) {
      if (!cfg.set_name.empty() && name != cfg.set_name) continue;
      out[name] = io::to_json(seg_closure(x, y));
    }
    if (!cfg.set_name.empty() && out.empty()) throw InputError("no set named " + cfg.set_name);
    report["closures"] = out;
  } else {
    throw InputError("unknown segments check " + what);
  }
  report["holds"] = holds;
  if (!holds) report["reason"] = reason("property_violated", what + " fails");
  if (x.dim() == 2 && cfg.format == "svg") write_artifact(cfg, "segments.svg", io::to_svg({}, {}, x.segments()));
  return finish(cfg, report, holds ? kOk : kViolated, t0);
}

int cmd_verify(const Config& cfg) {
  const auto t0 = Clock::now();
  verify::AcceptanceOptions opt;
  opt.fixture_dir = cfg.fixtures;
  opt.seed = cfg.seed;
  opt.only = cfg.only;
  Json rows = Json::array();
  bool all = true;
  verify::run_acceptance(opt, [&](const verify::CriterionResult& r) {
    std::cerr << verify::format_line(r) << "\n";
    Json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    if (cfg.timing) row["seconds"] = r.seconds;
    rows.push_back(std::move(row));
    all = all && r.pass;
  });
  auto report = envelope("verify-paper");
  report["criteria"] = rows;
  report["all_pass"] = all;
  if (!all) report["reason"] = reason("property_violated", "some acceptance criteria fail");
  return finish(cfg, report, all ? kOk : kViolated, t0);
}

int fail(const std::string& kind, const std::string& message, int code) {
  auto j = envelope("error");
  j["exit_code"] = code;
  j["reason"] = reason(kind, message);
  emit(j);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relatively convex sets: lattice construction and checks"};
  app.require_subcommand(1);
  Config cfg;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Input file (JSON)");
    sub->add_option("--out-dir", cfg.out_dir, "Directory for artifacts");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv", "svg"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--workers", cfg.workers, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-ground", cfg.max_ground, "Largest finite ground to enumerate")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", cfg.timing, "Include elapsed times in the report");
  };

  auto* build = app.add_subcommand("build", "Lattice of closed sets of a finite ground");
  common(build);

  std::string property;
  auto* check = app.add_subcommand("check", "Check a lattice property");
  check->add_option("property", property, "jsd|lb|biatomic|antiexchange|weakatom|m3")
      ->required()
      ->check(CLI::IsMember({"jsd", "lb", "biatomic", "antiexchange", "weakatom", "m3"}));
  common(check);

  auto* embed = app.add_subcommand("embed", "Simplex construction and embedding verification");
  embed->add_option("--n", cfg.n, "Dimension n")->required();
  embed->add_option("--max-n", cfg.max_n, "Largest n to verify in full")->check(CLI::PositiveNumber);
  common(embed);

  std::string seg_check;
  auto* segments = app.add_subcommand("segments", "Checks on finite unions of segments");
  segments->add_option("check", seg_check, "check-i|check-ii|sdv|closure")
      ->required()
      ->check(CLI::IsMember({"check-i", "check-ii", "sdv", "closure"}));
  segments->add_option("--count", cfg.count, "Random triples for sdv");
  segments->add_option("--set", cfg.set_name, "Named set for closure");
  common(segments);

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify->add_option("--fixtures", cfg.fixtures, "Fixture directory");
  verify->add_option("--only", cfg.only, "Criterion ids")->delimiter(',');
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage_error", e.what(), kInput);
  }

  try {
    if (cfg.workers > 0) set_worker_count(cfg.workers);
    if (*build) return cmd_build(cfg);
    if (*check) return cmd_check(cfg, property);
    if (*embed) return cmd_embed(cfg);
    if (*segments) return cmd_segments(cfg, seg_check);
    if (*verify) return cmd_verify(cfg);
  } catch (const ResourceError& e) {
    return fail("resource_bound", e.what(), kResource);
  } catch (const InputError& e) {
    return fail("input_error", e.what(), kInput);
  } catch (const UnsupportedError& e) {
    return fail("unsupported", e.what(), kInput);
  } catch (const ConstructionError& e) {
    return fail("construction_failed", e.what(), kViolated);
  } catch (const std::exception& e) {
    return fail("input_error", e.what(), kInput);
  }
  return kInput;
}
