// nsbox — exact analysis of two-party, two-input, two-output nonsignaling
// boxes: CHSH values, PR-box fraction, polytope membership certificates,
// PR decomposition, Hardy checks, family generators, parameter sweeps, and
// reproduction suites. All arithmetic is exact rational; numeric CLI inputs
// are rational strings like "3/4", never decimals.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nsbox/chsh.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/families.hpp"
#include "nsbox/fpr.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/json_io.hpp"
#include "nsbox/membership.hpp"
#include "nsbox/repro.hpp"
#include "nsbox/witness.hpp"

namespace {

using namespace nsbox;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NSBOX_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw UsageError(std::string("NSBOX_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("invalid JSON in '" + path + "': " + e.what());
  }
}

Box read_box(const std::string& path, bool allow_signaling, bool* nonsignaling_out = nullptr) {
  Box box;
  try {
    box = box_from_json(read_json(path));
  } catch (const ParseError& e) {
    throw UsageError("'" + path + "': " + std::string(e.what()));
  }
  if (!is_valid_box(box))
    throw DomainError("'" + path + "': entries are not a probability table "
                      "(negative entry or context not summing to 1)");
  bool ns = is_nonsignaling(box);
  if (nonsignaling_out) *nonsignaling_out = ns;
  if (!ns && !allow_signaling)
    throw DomainError("'" + path + "': box is signaling (pass --allow-signaling "
                      "to validate only)");
  return box;
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
  }
}

Rational parse_rational_arg(const std::string& text, const std::string& name) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

NoiseVertex parse_noise_vertex(const std::string& text) {
  if (text == "pr100") return NoiseVertex::pr100;
  if (text == "pr111") return NoiseVertex::pr111;
  if (text == "d0000") return NoiseVertex::d0000;
  throw UsageError("unknown noise vertex '" + text + "' (pr100, pr111, d0000)");
}

std::vector<std::pair<DetLabel, Rational>> parse_local_part(const std::string& text) {
  // "0000:1/2,0101:1/2"
  std::vector<std::pair<DetLabel, Rational>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon != 4)
      throw UsageError("local part entry '" + item + "' is not of the form bbbb:weight");
    DetLabel label;
    std::uint8_t* bits[4] = {&label.alpha, &label.beta, &label.gamma, &label.epsilon};
    for (int i = 0; i < 4; ++i) {
      char c = item[i];
      if (c != '0' && c != '1')
        throw UsageError("local part label '" + item.substr(0, 4) + "' must be four bits");
      *bits[i] = static_cast<std::uint8_t>(c - '0');
    }
    out.emplace_back(label, parse_rational_arg(item.substr(colon + 1), "local part weight"));
  }
  if (out.empty()) throw UsageError("empty local part");
  return out;
}

// ---------------------------------------------------------------------------
// eval and the single-report verbs
// ---------------------------------------------------------------------------

struct BoxCommandOptions {
  std::string path;
  bool allow_signaling = false;
  bool variants = false;
};

int cmd_eval(const BoxCommandOptions& opt) {
  bool nonsignaling = false;
  Box box = read_box(opt.path, opt.allow_signaling, &nonsignaling);
  Json j;
  j["valid"] = true;
  j["nonsignaling"] = nonsignaling;
  if (!nonsignaling) {  // reachable only with --allow-signaling
    emit(j, "");
    return kExitOk;
  }
  j["correlation_summary"] = to_json(correlation_summary(box));
  Json chsh = Json::array();
  for (int i = 0; i < 8; ++i) {
    ChshLabel label = ChshLabel::from_index(i);
    chsh.push_back(Json{{"label",
                         {static_cast<int>(label.alpha), static_cast<int>(label.beta),
                          static_cast<int>(label.gamma)}},
                        {"value", chsh_value(box, label).str()}});
  }
  j["chsh"] = std::move(chsh);
  auto [max_label, max_value] = max_chsh(box);
  j["max_chsh"] = Json{{"label",
                        {static_cast<int>(max_label.alpha), static_cast<int>(max_label.beta),
                         static_cast<int>(max_label.gamma)}},
                       {"value", max_value.str()}};
  j["fpr"] = to_json(f_pr(box));
  j["local"] = to_json(is_bell_local(box), local_vertices());
  j["genuine"] = to_json(is_genuine_member(box), genuine_vertices());
  j["hardy"] = to_json(hardy_check(box, opt.variants));
  emit(j, "");
  return kExitOk;
}

int cmd_fpr(const BoxCommandOptions& opt) {
  emit(to_json(f_pr(read_box(opt.path, false))), "");
  return kExitOk;
}

int cmd_local(const BoxCommandOptions& opt) {
  emit(to_json(is_bell_local(read_box(opt.path, false)), local_vertices()), "");
  return kExitOk;
}

int cmd_genuine(const BoxCommandOptions& opt) {
  emit(to_json(is_genuine_member(read_box(opt.path, false)), genuine_vertices()), "");
  return kExitOk;
}

int cmd_decompose(const BoxCommandOptions& opt) {
  emit(to_json(pr_decompose(read_box(opt.path, false))), "");
  return kExitOk;
}

int cmd_hardy(const BoxCommandOptions& opt) {
  emit(to_json(hardy_check(read_box(opt.path, false), opt.variants)), "");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

struct FamilyOptions {
  std::string family;
  std::string c0, c1, hpr, h, eps, nu, q = "pr100", local;
  std::string out;
};

FamilyPoint family_point_from_options(const FamilyOptions& opt) {
  auto need = [](const std::string& value, const std::string& name) {
    if (value.empty()) throw UsageError("missing --" + name);
    return value;
  };
  if (opt.family == "gnstpq")
    return GnstpqPoint{parse_rational_arg(need(opt.c0, "c0"), "--c0"),
                       parse_local_part(need(opt.local, "local"))};
  if (opt.family == "gnstpq1")
    return Gnstpq1Point{parse_rational_arg(need(opt.c0, "c0"), "--c0"),
                        parse_rational_arg(need(opt.c1, "c1"), "--c1")};
  if (opt.family == "hardy") {
    HardyPoint p;
    p.h_pr = parse_rational_arg(need(opt.hpr, "hpr"), "--hpr");
    std::stringstream ss(need(opt.h, "h"));
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= 5) throw UsageError("--h expects exactly 5 comma-separated rationals");
      p.h[i++] = parse_rational_arg(item, "--h");
    }
    if (i != 5) throw UsageError("--h expects exactly 5 comma-separated rationals");
    return p;
  }
  if (opt.family == "noisy-pr")
    return NoisyPrPoint{parse_noise_vertex(opt.q),
                        parse_rational_arg(need(opt.eps, "eps"), "--eps"),
                        parse_rational_arg(need(opt.nu, "nu"), "--nu")};
  if (opt.family == "isotropic")
    return IsotropicPoint{parse_rational_arg(need(opt.eps, "eps"), "--eps")};
  if (opt.family == "noise")
    return NoisePoint{parse_noise_vertex(opt.q), parse_rational_arg(need(opt.nu, "nu"), "--nu")};
  throw UsageError("unknown family '" + opt.family +
                   "' (gnstpq, gnstpq1, hardy, noisy-pr, isotropic, noise)");
}

int cmd_family(const FamilyOptions& opt) {
  FamilyPoint point = family_point_from_options(opt);
  Box box = generate(point);  // ParamError names the violated invariant
  emit(box_to_json(box), opt.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
  std::string family;
  std::string eps, nu, c0, c1, hpr;
  std::string q = "pr100";
  std::string local;
  std::string out;
};

std::vector<Rational> parse_grid(const std::string& text, const std::string& name) {
  // "start:stop:step" or a single value
  if (text.empty()) throw UsageError("missing grid --" + name);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() == 1) return {parse_rational_arg(parts[0], "--" + name)};
  if (parts.size() != 3)
    throw UsageError("--" + name + " expects start:stop:step or a single rational");
  Rational start = parse_rational_arg(parts[0], "--" + name);
  Rational stop = parse_rational_arg(parts[1], "--" + name);
  Rational step = parse_rational_arg(parts[2], "--" + name);
  if (step.sign() <= 0) throw UsageError("--" + name + ": step must be positive");
  std::vector<Rational> grid;
  for (Rational v = start; !(stop < v); v += step) grid.push_back(v);
  return grid;
}

struct SweepAxis {
  std::string name;
  std::vector<Rational> values;
};

void sweep_rows(std::ostream& os, const std::string& family, const std::vector<SweepAxis>& axes,
                const std::function<std::optional<FamilyPoint>(const std::vector<Rational>&)>&
                    make_point) {
  os << "family";
  for (const auto& axis : axes) os << "," << axis.name << "," << axis.name << "_dec";
  os << ",B_000,B_000_dec,f_pr,f_pr_dec,local,genuine,beyond_tsirelson,ic_verdict,"
        "quantum_model_known\n";

  std::vector<std::size_t> index(axes.size(), 0);
  bool empty = axes.empty();
  for (const auto& axis : axes)
    if (axis.values.empty()) empty = true;
  if (empty) return;

  while (true) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < axes.size(); ++i) values.push_back(axes[i].values[index[i]]);
    if (auto point = make_point(values)) {
      Box box = generate(*point);
      Rational b000 = chsh_value(box, ChshLabel{0, 0, 0});
      Rational fp = f_pr(box).f_pr;
      WitnessVerdict wv = witness(box, point);
      bool genuine = is_genuine_member(box).member;
      os << family;
      for (const Rational& v : values) os << "," << v.str() << "," << v.decimal();
      os << "," << b000.str() << "," << b000.decimal() << "," << fp.str() << "," << fp.decimal()
         << "," << (wv.bell_local ? 1 : 0) << "," << (genuine ? 1 : 0) << ","
         << (wv.beyond_tsirelson ? 1 : 0) << "," << ic_verdict_name(wv.ic_verdict) << ",";
      if (wv.quantum_model_known == QuantumModel::unknown)
        os << "unknown";
      else
        os << (wv.quantum_model_known == QuantumModel::yes ? 1 : 0);
      os << "\n";
    }
    // lexicographic advance, last axis fastest
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++index[i] < axes[i].values.size()) break;
      index[i] = 0;
      if (i == 0) return;
    }
  }
}

int cmd_sweep(const SweepOptions& opt) {
  std::ostringstream csv;
  if (opt.family == "isotropic") {
    sweep_rows(csv, opt.family, {{"eps", parse_grid(opt.eps, "eps")}},
               [](const std::vector<Rational>& v) -> std::optional<FamilyPoint> {
                 return IsotropicPoint{v[0]};
               });
  } else if (opt.family == "noise") {
    NoiseVertex q = parse_noise_vertex(opt.q);
    sweep_rows(csv, opt.family, {{"nu", parse_grid(opt.nu, "nu")}},
               [q](const std::vector<Rational>& v) -> std::optional<FamilyPoint> {
                 return NoisePoint{q, v[0]};
               });
  } else if (opt.family == "noisy-pr") {
    NoiseVertex q = parse_noise_vertex(opt.q);
    sweep_rows(csv, opt.family,
               {{"eps", parse_grid(opt.eps, "eps")}, {"nu", parse_grid(opt.nu, "nu")}},
               [q](const std::vector<Rational>& v) -> std::optional<FamilyPoint> {
                 if (Rational(1) < v[0] + v[1]) return std::nullopt;  // outside the simplex
                 return NoisyPrPoint{q, v[0], v[1]};
               });
  } else if (opt.family == "gnstpq1") {
    sweep_rows(csv, opt.family,
               {{"c0", parse_grid(opt.c0, "c0")}, {"c1", parse_grid(opt.c1, "c1")}},
               [](const std::vector<Rational>& v) -> std::optional<FamilyPoint> {
                 return Gnstpq1Point{v[0], v[1]};
               });
  } else if (opt.family == "gnstpq") {
    auto local = parse_local_part(
        opt.local.empty() ? throw UsageError("missing --local") : opt.local);
    sweep_rows(csv, opt.family, {{"c0", parse_grid(opt.c0, "c0")}},
               [local](const std::vector<Rational>& v) -> std::optional<FamilyPoint> {
                 return GnstpqPoint{v[0], local};
               });
  } else if (opt.family == "hardy") {
    // remaining weight split evenly over the five deterministic components
    sweep_rows(csv, opt.family, {{"hpr", parse_grid(opt.hpr, "hpr")}},
               [](const std::vector<Rational>& v) -> std::optional<FamilyPoint> {
                 Rational rest = (Rational(1) - v[0]) / Rational(5);
                 return HardyPoint{v[0], {rest, rest, rest, rest, rest}};
               });
  } else {
    throw UsageError("unknown family '" + opt.family + "'");
  }

  if (opt.out.empty() || opt.out == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(opt.out);
    if (!out) throw UsageError("cannot write '" + opt.out + "'");
    out << csv.str();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// repro
// ---------------------------------------------------------------------------

struct ReproCliOptions {
  std::string suite;
  std::uint64_t seed = 1;
  long samples = 0;     // 0 = default scale
  long parts = 0;
  long relabel_boxes = 0;
  std::string grid_step, pair_grid_step;
};

int cmd_repro(const ReproCliOptions& cli) {
  ReproOptions opts;
  opts.seed = cli.seed;
  if (cli.samples > 0) {
    opts.lemma2_samples = cli.samples;
    opts.theorem_samples = cli.samples;
    opts.fpr_box_samples = cli.samples;
    opts.fpr_product_samples = std::max(1L, cli.samples / 10);
  }
  if (cli.parts > 0) opts.local_parts_per_point = cli.parts;
  if (cli.relabel_boxes > 0) opts.fpr_relabel_boxes = cli.relabel_boxes;
  if (!cli.grid_step.empty())
    opts.grid_step = parse_rational_arg(cli.grid_step, "--grid-step");
  if (!cli.pair_grid_step.empty())
    opts.pair_grid_step = parse_rational_arg(cli.pair_grid_step, "--pair-grid-step");

  auto run_one = [&](const std::string& name) -> ReproReport {
    if (name == "lemma1") return run_lemma1(opts);
    if (name == "lemma2") return run_lemma2(opts);
    if (name == "lemma3") return run_lemma3(opts);
    if (name == "theorem") return run_theorem_classification(opts);
    if (name == "fpr-properties") return run_fpr_properties(opts);
    throw UsageError("unknown suite '" + name +
                     "' (lemma1, lemma2, lemma3, theorem, fpr-properties, all)");
  };

  if (cli.suite == "all") {
    Json suites = Json::array();
    long run = 0, passed = 0;
    for (const char* name : {"lemma1", "lemma2", "lemma3", "theorem", "fpr-properties"}) {
      ReproReport rep = run_one(name);
      run += rep.run;
      passed += rep.passed;
      suites.push_back(to_json(rep));
    }
    Json j;
    j["suites"] = std::move(suites);
    j["run"] = run;
    j["passed"] = passed;
    j["all_passed"] = run == passed;
    emit(j, "");
    return run == passed ? kExitOk : kExitSuiteFailure;
  }

  ReproReport rep = run_one(cli.suite);
  emit(to_json(rep), "");
  return rep.ok() ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational analysis of two-party nonsignaling boxes"};
  app.set_help_flag("--help", "Print help");  // leave -h free for hardy's --h
  app.require_subcommand(1);

  BoxCommandOptions box_opt;
  FamilyOptions family_opt;
  SweepOptions sweep_opt;
  ReproCliOptions repro_opt;
  std::string seed_text;
  app.add_option("--seed", seed_text, "Sampler seed (fallback: NSBOX_SEED, default 1)");

  CLI::App* eval = app.add_subcommand("eval", "Full analysis report for a box file");
  eval->add_option("box", box_opt.path, "Box JSON file, or - for stdin")->required();
  eval->add_flag("--allow-signaling", box_opt.allow_signaling,
                 "Only validate when the box signals instead of failing");
  eval->add_flag("--variants", box_opt.variants, "Search all 128 Hardy relabelings");

  for (const char* name : {"fpr", "local", "genuine", "decompose", "hardy"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string("Print the ") + name + " report for a box file");
    sub->add_option("box", box_opt.path, "Box JSON file, or - for stdin")->required();
    if (std::string(name) == "hardy")
      sub->add_flag("--variants", box_opt.variants, "Search all 128 relabelings");
  }

  CLI::App* family = app.add_subcommand("family", "Generate a family box");
  family->set_help_flag("--help", "Print help");  // -h would clash with --h below
  family->add_option("id", family_opt.family, "gnstpq|gnstpq1|hardy|noisy-pr|isotropic|noise")
      ->required();
  family->add_option("--c0", family_opt.c0, "PR weight (gnstpq, gnstpq1)");
  family->add_option("--c1", family_opt.c1, "first local weight (gnstpq1)");
  family->add_option("--hpr", family_opt.hpr, "PR weight (hardy)");
  family->add_option("--h", family_opt.h, "five deterministic weights, comma separated (hardy)");
  family->add_option("--eps", family_opt.eps, "PR weight (noisy-pr, isotropic)");
  family->add_option("--nu", family_opt.nu, "noise vertex weight (noisy-pr, noise)");
  family->add_option("--q", family_opt.q, "noise vertex: pr100|pr111|d0000");
  family->add_option("--local", family_opt.local,
                     "local part, e.g. 0000:1/2,0101:1/2 (gnstpq)");
  family->add_option("--out", family_opt.out, "output path (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV region map over a parameter grid");
  sweep->add_option("id", sweep_opt.family, "family id")->required();
  sweep->add_option("--eps", sweep_opt.eps, "grid start:stop:step");
  sweep->add_option("--nu", sweep_opt.nu, "grid start:stop:step");
  sweep->add_option("--c0", sweep_opt.c0, "grid start:stop:step");
  sweep->add_option("--c1", sweep_opt.c1, "grid start:stop:step");
  sweep->add_option("--hpr", sweep_opt.hpr, "grid start:stop:step");
  sweep->add_option("--q", sweep_opt.q, "noise vertex: pr100|pr111|d0000");
  sweep->add_option("--local", sweep_opt.local, "local part (gnstpq)");
  sweep->add_option("--out", sweep_opt.out, "output path (default stdout)");

  CLI::App* repro = app.add_subcommand("repro", "Run a reproduction suite");
  repro->add_option("suite", repro_opt.suite,
                    "lemma1|lemma2|lemma3|theorem|fpr-properties|all")
      ->required();
  repro->add_option("--samples", repro_opt.samples, "override sample counts");
  repro->add_option("--parts", repro_opt.parts, "local parts per grid point (lemma1)");
  repro->add_option("--relabel-boxes", repro_opt.relabel_boxes,
                    "boxes for the relabeling-invariance property");
  repro->add_option("--grid-step", repro_opt.grid_step, "scalar grid step, e.g. 1/100");
  repro->add_option("--pair-grid-step", repro_opt.pair_grid_step, "pair grid step, e.g. 1/20");

  // the global --seed may appear after the subcommand
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::uint64_t seed = seed_text.empty() ? default_seed() : std::stoull(seed_text);
    repro_opt.seed = seed;

    if (eval->parsed()) return cmd_eval(box_opt);
    if (app.get_subcommand("fpr")->parsed()) return cmd_fpr(box_opt);
    if (app.get_subcommand("local")->parsed()) return cmd_local(box_opt);
    if (app.get_subcommand("genuine")->parsed()) return cmd_genuine(box_opt);
    if (app.get_subcommand("decompose")->parsed()) return cmd_decompose(box_opt);
    if (app.get_subcommand("hardy")->parsed()) return cmd_hardy(box_opt);
    if (family->parsed()) return cmd_family(family_opt);
    if (sweep->parsed()) return cmd_sweep(sweep_opt);
    if (repro->parsed()) return cmd_repro(repro_opt);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const SignalingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
