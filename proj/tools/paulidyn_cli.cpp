// Command-line front end: classify trajectories, run collision-model
// simulations, compile and verify schedules, estimate the semigroup body
// fraction, and export plot-ready CSV/JSON data.
//
// Exit codes: 0 ok, 2 invalid config or input, 3 degenerate (singular-only)
// input, 4 infeasible synthesis target.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paulidyn/paulidyn.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace paulidyn;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInfeasible = 4;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ValidationError("cannot open output file " + path);
  out << content;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------
// Shared option bundle mirroring the JSON config file. Flags override file
// values; the merge happens by appending file entries absent from argv.

struct Options {
  std::string family;
  std::string input;
  std::string model;
  std::string out = "paulidyn_out";
  std::string quantity = "volume";
  std::string format = "csv";
  std::string grid = "10,1001";
  std::string axes = "0,1,2";
  std::string axes_list = "0,2";
  std::string bloch1 = "1,0,0";
  std::string bloch2 = "-1,0,0";
  int axis = 2;
  double G1 = 1.0, G2 = 1.0, G3 = 1.0;
  double gamma_i = 1.0, gamma_j = 1.0;
  double gamma = 1.0;
  double p1 = 1.0, p2 = 0.0, p3 = 0.0;
  double g = 1.0, g1 = 0.0, g2 = 0.0;
  double tau = 1e-3;
  int n = 1000;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
};

void add_family_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family,
                  "semigroup | ultimate | dephasing_mixture | eternal | "
                  "oscillatory_dephasing | oscillatory_depolarizing | "
                  "volume_example");
  cmd->add_option("--G1", o.G1, "decoherence rate Gamma_1 [1/time]");
  cmd->add_option("--G2", o.G2, "decoherence rate Gamma_2 [1/time]");
  cmd->add_option("--G3", o.G3, "decoherence rate Gamma_3 [1/time]");
  cmd->add_option("--gamma-i", o.gamma_i, "dissipator rate gamma_i [1/time]");
  cmd->add_option("--gamma-j", o.gamma_j, "dissipator rate gamma_j [1/time]");
  cmd->add_option("--gamma", o.gamma, "dephasing rate [1/time]");
  cmd->add_option("--p1", o.p1, "mixture weight");
  cmd->add_option("--p2", o.p2, "mixture weight");
  cmd->add_option("--p3", o.p3, "mixture weight");
  cmd->add_option("--g", o.g, "coupling or oscillation rate [1/time]");
  cmd->add_option("--axis", o.axis, "axis index 0..2");
  cmd->add_option("--axes", o.axes, "axis permutation i,j,k");
}

AxisTriple parse_axes(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3)
    throw ValidationError("--axes expects i,j,k");
  return AxisTriple::checked(std::stoi(parts[0]), std::stoi(parts[1]),
                             std::stoi(parts[2]));
}

AnalyticFamily make_family(const Options& o) {
  if (o.family == "semigroup")
    return pauli_semigroup({o.G1, o.G2, o.G3});
  if (o.family == "ultimate")
    return ultimate_semigroup(o.gamma_i, o.gamma_j, parse_axes(o.axes));
  if (o.family == "dephasing_mixture")
    return dephasing_mixture(MixtureWeights::checked(o.p1, o.p2, o.p3),
                             o.gamma);
  if (o.family == "eternal")
    return eternal_family(MixtureWeights::checked(o.p1, o.p2, o.p3), o.gamma_i,
                          o.gamma_j, parse_axes(o.axes));
  if (o.family == "oscillatory_dephasing")
    return oscillatory_dephasing(o.g, o.axis);
  if (o.family == "oscillatory_depolarizing")
    return oscillatory_depolarizing(o.g);
  if (o.family == "volume_example")
    return volume_example();
  throw ValidationError("unknown family '" + o.family + "'");
}

struct GridSpec {
  double t_max;
  std::size_t n_points;
};

GridSpec parse_grid(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2)
    throw ValidationError("--grid expects t_max,n_points");
  GridSpec g{std::stod(parts[0]),
             static_cast<std::size_t>(std::stoll(parts[1]))};
  if (!(g.t_max > 0.0) || g.n_points < 2)
    throw ValidationError("--grid needs t_max > 0 and n_points >= 2");
  return g;
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open trajectory file " + path);
  std::string line;
  if (!std::getline(in, line))
    throw ValidationError("empty trajectory file");
  auto header = split(line, ',');
  int it = -1, i1 = -1, i2 = -1, i3 = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string name = header[c].substr(0, header[c].find('['));
    if (name == "t")
      it = static_cast<int>(c);
    else if (name == "lambda1")
      i1 = static_cast<int>(c);
    else if (name == "lambda2")
      i2 = static_cast<int>(c);
    else if (name == "lambda3")
      i3 = static_cast<int>(c);
  }
  if (it < 0 || i1 < 0 || i2 < 0 || i3 < 0)
    throw ValidationError("trajectory CSV needs columns t,lambda1..3");
  std::vector<double> times;
  std::vector<PauliTriple> samples;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto cells = split(line, ',');
    times.push_back(std::stod(cells.at(static_cast<std::size_t>(it))));
    samples.push_back({std::stod(cells.at(static_cast<std::size_t>(i1))),
                       std::stod(cells.at(static_cast<std::size_t>(i2))),
                       std::stod(cells.at(static_cast<std::size_t>(i3)))});
  }
  return Trajectory::checked(std::move(times), std::move(samples));
}

ordered_json metadata(const std::string& command, const ordered_json& config) {
  ordered_json j;
  j["artifact"] = "paulidyn";
  j["version"] = PAULIDYN_VERSION;
  j["command"] = command;
  j["config"] = config;
  return j;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const Options& o, const ordered_json& echo) {
  Trajectory traj;
  if (!o.input.empty()) {
    traj = read_trajectory_csv(o.input);
  } else {
    const GridSpec grid = parse_grid(o.grid);
    traj = sample_family(make_family(o), grid.t_max, grid.n_points);
  }

  const TrajectorySegmentReport report = classify_trajectory(traj);
  if (report.segments.empty())
    return kExitDegenerate;

  std::string csv =
      "t[time],lambda1[1],lambda2[1],lambda3[1],kappa1[1/time],"
      "kappa2[1/time],kappa3[1/time],class,cp_slack1[1/time],"
      "cp_slack2[1/time],cp_slack3[1/time],flag\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const PauliTriple& l = traj.samples[k];
    csv += fmt(traj.times[k]) + "," + fmt(l.lambda1) + "," + fmt(l.lambda2) +
           "," + fmt(l.lambda3) + ",";
    try {
      const SampledKappa sk = kappa_sampled(traj, k);
      const DivisibilityClass c = classify_point(sk.kappa);
      csv += fmt(c.kappa.kappa1) + "," + fmt(c.kappa.kappa2) + "," +
             fmt(c.kappa.kappa3) + "," + to_string(c.kind) + "," +
             fmt(c.cp_slack[0]) + "," + fmt(c.cp_slack[1]) + "," +
             fmt(c.cp_slack[2]) + "," + (sk.one_sided ? "one_sided" : "") +
             "\n";
    } catch (const SingularPoint&) {
      csv += "nan,nan,nan,Singular,nan,nan,nan,singular\n";
    }
  }

  ordered_json j = metadata("classify", echo);
  j["segments"] = ordered_json::array();
  for (const auto& s : report.segments) {
    ordered_json seg;
    seg["t_begin"] = s.t_begin;
    seg["t_end"] = s.t_end;
    seg["class"] = to_string(s.kind);
    seg["p_divisible"] = s.p_holds;
    seg["volume_shrinking"] = s.volume_holds;
    j["segments"].push_back(seg);
  }
  j["singular_points"] = ordered_json::array();
  for (const auto& s : report.singular) {
    ordered_json sp;
    sp["time"] = s.time;
    sp["axis"] = s.axis;
    j["singular_points"].push_back(sp);
  }

  write_file(o.out + ".csv", csv);
  write_file(o.out + ".json", j.dump(2) + "\n");
  std::printf("classify: %zu segments, %zu singular points -> %s.{csv,json}\n",
              report.segments.size(), report.singular.size(), o.out.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

Trajectory build_simulation(const Options& o) {
  if (o.model == "factorized") {
    const double g1 = o.g1 != 0.0 ? o.g1 : stroboscopic_coupling(o.gamma_i, o.tau);
    const double g2 = o.g2 != 0.0 ? o.g2 : stroboscopic_coupling(o.gamma_j, o.tau);
    return run_factorized({HamiltonianXY{g1, g2, 0, 1}, o.tau}, o.n);
  }
  if (o.model == "dephasing") {
    // Single-axis pairwise Hamiltonian: lambda_axis = 1, rest cos(g tau).
    const double g = o.g1 != 0.0 ? o.g1 : stroboscopic_coupling(o.gamma, o.tau);
    const int b = o.axis == 0 ? 1 : 0;
    return run_factorized({HamiltonianXY{g, 0.0, o.axis, b}, o.tau}, o.n);
  }
  if (o.model == "interleaved") {
    auto parts = split(o.axes_list, ',');
    if (parts.empty())
      throw ValidationError("--axes-list must name at least one axis");
    std::vector<ElementaryCollision> models;
    std::vector<int> pattern;
    for (std::size_t m = 0; m < parts.size(); ++m) {
      const int axis = std::stoi(parts[m]);
      if (axis < 0 || axis > 2)
        throw ValidationError("axis indices must be 0..2");
      const double g =
          o.g1 != 0.0 ? o.g1 : stroboscopic_coupling(o.gamma, o.tau);
      const int b = axis == 0 ? 1 : 0;
      models.push_back({HamiltonianXY{g, 0.0, axis, b}, o.tau});
      pattern.push_back(static_cast<int>(m));
    }
    return run_interleaved(models, pattern, o.n);
  }
  if (o.model == "blockmix") {
    // Three controlled-axis dephasing blocks (one 6-level particle species),
    // weighted by p1..p3.
    const double g = o.g != 0.0 ? o.g : stroboscopic_coupling(o.gamma, o.tau);
    MixtureWeights p = MixtureWeights::checked(o.p1, o.p2, o.p3);
    std::vector<Trajectory> runs;
    for (int m = 0; m < 3; ++m)
      runs.push_back(run_factorized({ControlledAxis{m, g}, o.tau}, o.n));
    return run_block_mixture({p.p1, p.p2, p.p3}, runs);
  }
  if (o.model == "ghz") {
    std::vector<std::uint8_t> zeros(static_cast<std::size_t>(o.n), 0);
    return run_branch_correlated({Branch{1.0, zeros}},
                                 ControlledAxis{o.axis, o.g}, o.tau, o.n);
  }
  throw ValidationError("unknown model '" + o.model +
                        "' (factorized | dephasing | interleaved | blockmix | "
                        "ghz)");
}

int cmd_simulate(const Options& o, const ordered_json& echo) {
  const Trajectory traj = build_simulation(o);

  std::string csv = "k,t[time],lambda1[1],lambda2[1],lambda3[1]\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const PauliTriple& l = traj.samples[k];
    csv += std::to_string(k) + "," + fmt(traj.times[k]) + "," +
           fmt(l.lambda1) + "," + fmt(l.lambda2) + "," + fmt(l.lambda3) + "\n";
  }

  ordered_json j = metadata("simulate", echo);
  j["n_collisions"] = o.n;
  j["tau"] = o.tau;
  if (o.format == "json") {
    j["trajectory"] = ordered_json::array();
    for (std::size_t k = 0; k < traj.size(); ++k)
      j["trajectory"].push_back({traj.times[k], traj.samples[k].lambda1,
                                 traj.samples[k].lambda2,
                                 traj.samples[k].lambda3});
  }

  write_file(o.out + ".csv", csv);
  write_file(o.out + ".json", j.dump(2) + "\n");
  std::printf("simulate: %d collisions -> %s.{csv,json}\n", o.n, o.out.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synthesize

int cmd_synthesize(const Options& o, const ordered_json& echo) {
  LambdaFn target;
  std::string name;
  Trajectory input_traj;
  if (!o.input.empty()) {
    input_traj = read_trajectory_csv(o.input);
    target = [input_traj](double t) { return input_traj.interpolate(t); };
    name = o.input;
  } else {
    const AnalyticFamily fam = make_family(o);
    target = fam.lambda;
    name = fam.name;
  }

  const PauliSchedule schedule = schedule_pauli(target, o.g, o.tau, o.n, name);
  const Trajectory achieved = verify_schedule(schedule);

  double max_err = 0.0;
  std::string csv =
      "t[time],target1[1],target2[1],target3[1],achieved1[1],achieved2[1],"
      "achieved3[1],max_abs_error[1]\n";
  for (std::size_t k = 0; k < achieved.size(); ++k) {
    const PauliTriple want = target(achieved.times[k]);
    const PauliTriple got = achieved.samples[k];
    double e = 0.0;
    for (int a = 0; a < 3; ++a)
      e = std::max(e, std::abs(want[a] - got[a]));
    max_err = std::max(max_err, e);
    csv += fmt(achieved.times[k]) + "," + fmt(want.lambda1) + "," +
           fmt(want.lambda2) + "," + fmt(want.lambda3) + "," +
           fmt(got.lambda1) + "," + fmt(got.lambda2) + "," + fmt(got.lambda3) +
           "," + fmt(e) + "\n";
  }

  ordered_json j = metadata("synthesize", echo);
  j["target"] = name;
  j["max_abs_error"] = max_err;
  std::size_t lagging = 0;
  for (const auto& ax : schedule.axis_schedules)
    lagging += ax.lagging_slots.size();
  j["lagging_slots"] = lagging;

  write_file(o.out + ".schedule.json", schedule_to_json(schedule));
  write_file(o.out + ".verify.csv", csv);
  write_file(o.out + ".json", j.dump(2) + "\n");
  std::printf("synthesize: max |target - achieved| = %s -> "
              "%s.{schedule.json,verify.csv,json}\n",
              fmt(max_err).c_str(), o.out.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bodyfrac

int cmd_bodyfrac(const Options& o, const ordered_json& echo, bool has_out) {
  const BodyFractionEstimate est = mc_body_fraction(o.samples, o.seed);
  std::printf("body fraction = %s +- %s (n = %llu, seed = %llu)\n",
              fmt(est.fraction).c_str(), fmt(est.std_error).c_str(),
              static_cast<unsigned long long>(est.n_samples),
              static_cast<unsigned long long>(est.seed));
  if (has_out) {
    ordered_json j = metadata("bodyfrac", echo);
    j["fraction"] = est.fraction;
    j["std_error"] = est.std_error;
    j["n_samples"] = est.n_samples;
    j["n_draws"] = est.n_draws;
    j["seed"] = est.seed;
    write_file(o.out + ".json", j.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// props

std::array<double, 3> parse_bloch(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3)
    throw ValidationError("Bloch vector expects x,y,z");
  return {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
}

int cmd_props(const Options& o, const ordered_json& echo) {
  const GridSpec grid = parse_grid(o.grid);
  Trajectory traj;
  if (!o.input.empty())
    traj = read_trajectory_csv(o.input);
  else
    traj = sample_family(make_family(o), grid.t_max, grid.n_points);

  MonotoneQuantity q;
  std::string unit;
  if (o.quantity == "trace_distance") {
    q = MonotoneQuantity::TraceDistance;
    unit = "1";
  } else if (o.quantity == "relative_entropy") {
    q = MonotoneQuantity::RelativeEntropy;
    unit = "nat";
  } else if (o.quantity == "capacity") {
    q = MonotoneQuantity::Capacity;
    unit = "bit";
  } else if (o.quantity == "volume") {
    q = MonotoneQuantity::Volume;
    unit = "1";
  } else {
    throw ValidationError("unknown quantity '" + o.quantity + "'");
  }

  const auto b1 = parse_bloch(o.bloch1);
  const auto b2 = parse_bloch(o.bloch2);
  const Matrix r1 = qubit_state(b1[0], b1[1], b1[2]);
  const Matrix r2 = qubit_state(b2[0], b2[1], b2[2]);
  const MonotonicityReport rep = monotonicity_scan(traj, r1, r2, q);

  std::string csv = "t[time]," + rep.quantity + "[" + unit + "]\n";
  for (std::size_t k = 0; k < rep.times.size(); ++k)
    csv += fmt(rep.times[k]) + "," + fmt(rep.values[k]) + "\n";

  ordered_json j = metadata("props", echo);
  j["quantity"] = rep.quantity;
  j["unit"] = unit;
  j["log_convention"] =
      rep.quantity == "relative_entropy"
          ? "natural"
          : (rep.quantity == "capacity" ? "base-2" : "none");
  j["violations"] = ordered_json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"t_begin", v.t_begin}, {"t_end", v.t_end}});

  write_file(o.out + ".csv", csv);
  write_file(o.out + ".json", j.dump(2) + "\n");
  std::printf("props: %s, %zu violation intervals -> %s.{csv,json}\n",
              rep.quantity.c_str(), rep.violations.size(), o.out.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::vector<std::string> merge_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      config_path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      config_path = args[i].substr(9);
  }
  if (config_path.empty())
    return args;

  std::ifstream in(config_path);
  if (!in)
    throw ValidationError("cannot open config file " + config_path);
  ordered_json j = ordered_json::parse(in);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string flag = "--" + it.key();
    bool given = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0)
        given = true;
    if (given)
      continue;
    args.push_back(flag);
    if (it.value().is_string())
      args.push_back(it.value().get<std::string>());
    else
      args.push_back(it.value().dump());
  }
  return args;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisibility analysis, collision-model simulation and "
               "schedule synthesis for qubit Pauli dynamical maps"};
  app.require_subcommand(1);

  Options o;
  std::string config_file;
  app.add_option("--config", config_file,
                 "JSON file with default option values (flags override)");

  auto* classify = app.add_subcommand("classify", "kappa-vector divisibility "
                                                  "classification");
  add_family_options(classify, o);
  classify->add_option("--input", o.input, "trajectory CSV (t,lambda1..3)");
  classify->add_option("--grid", o.grid, "t_max,n_points");
  classify->add_option("--out", o.out, "output path prefix");

  auto* simulate = app.add_subcommand("simulate", "collision-model run");
  simulate->add_option("--model", o.model,
                       "factorized | dephasing | interleaved | blockmix | ghz");
  simulate->add_option("--g1", o.g1, "coupling 1 [1/time]");
  simulate->add_option("--g2", o.g2, "coupling 2 [1/time]");
  simulate->add_option("--g", o.g, "controlled-collision coupling [1/time]");
  simulate->add_option("--gamma-i", o.gamma_i, "target rate (stroboscopic)");
  simulate->add_option("--gamma-j", o.gamma_j, "target rate (stroboscopic)");
  simulate->add_option("--gamma", o.gamma, "target rate (stroboscopic)");
  simulate->add_option("--tau", o.tau, "collision duration [time]");
  simulate->add_option("--n", o.n, "number of collisions");
  simulate->add_option("--axis", o.axis, "axis index 0..2");
  simulate->add_option("--axes-list", o.axes_list, "axes for interleaving");
  simulate->add_option("--p1", o.p1, "block weight");
  simulate->add_option("--p2", o.p2, "block weight");
  simulate->add_option("--p3", o.p3, "block weight");
  simulate->add_option("--format", o.format, "csv | json");
  simulate->add_option("--out", o.out, "output path prefix");

  auto* synthesize = app.add_subcommand("synthesize",
                                        "compile target dynamics into a "
                                        "collision schedule and verify it");
  add_family_options(synthesize, o);
  synthesize->add_option("--input", o.input, "trajectory CSV target");
  synthesize->add_option("--tau", o.tau, "slot duration [time]");
  synthesize->add_option("--n", o.n, "total number of slots");
  synthesize->add_option("--out", o.out, "output path prefix");

  auto* bodyfrac = app.add_subcommand("bodyfrac", "Monte Carlo fraction of "
                                                  "semigroup-reachable "
                                                  "channels");
  bodyfrac->add_option("--samples", o.samples, "tetrahedron sample count");
  bodyfrac->add_option("--seed", o.seed, "PRNG seed");
  auto* bodyfrac_out = bodyfrac->add_option("--out", o.out, "JSON sidecar "
                                                            "path prefix");

  auto* props = app.add_subcommand("props", "monotone-quantity scan");
  add_family_options(props, o);
  props->add_option("--input", o.input, "trajectory CSV");
  props->add_option("--quantity", o.quantity,
                    "trace_distance | relative_entropy | capacity | volume");
  props->add_option("--bloch1", o.bloch1, "first state Bloch vector x,y,z");
  props->add_option("--bloch2", o.bloch2, "second state Bloch vector x,y,z");
  props->add_option("--grid", o.grid, "t_max,n_points");
  props->add_option("--out", o.out, "output path prefix");

  // --config sits on the parent app; let it match from subcommand scope.
  for (auto* cmd : {classify, simulate, synthesize, bodyfrac, props})
    cmd->fallthrough();

  std::vector<std::string> args;
  try {
    args = merge_config_args(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }

  try {
    // CLI11 parses reversed vectors.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      app.exit(e);
      return kExitOk;
    }
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }

  ordered_json echo;
  for (const auto& a : args)
    echo.push_back(a);

  try {
    if (classify->parsed())
      return cmd_classify(o, echo);
    if (simulate->parsed())
      return cmd_simulate(o, echo);
    if (synthesize->parsed())
      return cmd_synthesize(o, echo);
    if (bodyfrac->parsed())
      return cmd_bodyfrac(o, echo, bodyfrac_out->count() > 0);
    if (props->parsed())
      return cmd_props(o, echo);
  } catch (const NonCpTarget& e) {
    std::fprintf(stderr, "infeasible target: %s\n", e.what());
    return kExitInfeasible;
  } catch (const ScheduleError& e) {
    std::fprintf(stderr, "infeasible schedule: %s\n", e.what());
    return kExitInfeasible;
  } catch (const SingularPoint& e) {
    std::fprintf(stderr, "degenerate input: %s\n", e.what());
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
