#include "polyemden/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyemden/capacity.hpp"
#include "polyemden/classify.hpp"
#include "polyemden/continuation.hpp"
#include "polyemden/format.hpp"
#include "polyemden/uniqueness.hpp"

namespace polyemden {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands = {"classify", "solve", "branch", "blowup", "capacity", "unique"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string k) {
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

std::string env_name(const std::string& key) {
  std::string e = "POLYEMDEN_";
  for (char c : key) e += (c == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return e;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot write " + path.string());
  os << text;
}

json params_json(const ProblemParams& p) {
  return {{"N", p.N}, {"alpha", p.alpha}, {"beta", p.beta}, {"p", p.p}, {"q", p.q}, {"t", p.t}, {"theta", p.theta}};
}

json shape_json(const ShapeReport& s) {
  return {{"ok", s.ok},
          {"violations", s.violations},
          {"u_inward_derivative", s.u_inward_derivative},
          {"v_inward_derivative", s.v_inward_derivative},
          {"u_inward_sign", s.u_inward_sign},
          {"v_inward_sign", s.v_inward_sign}};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad number in list: " + item);
    }
  }
  return out;
}

double parse_exponent(const std::string& text, const char* name) {
  try {
    return Rational::parse(text).to_double();
  } catch (const std::exception&) {
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(std::string("bad value for ") + name + ": " + text);
}

// Registers every setting once so flags, config keys and env names stay in sync.
struct OptionTable {
  CLI::App& app;
  std::vector<std::string> keys;

  template <class T>
  void add(const std::string& key, T& var, const std::string& help) {
    app.add_option("--" + key, var, help);
    keys.push_back(key);
  }
};

Box make_box(const RunConfig& c) {
  if (!(c.box_lo > 0.0) || !(c.box_hi > 0.0)) throw ValidationError("box bounds must be positive");
  return Box(static_cast<std::size_t>(c.params.chain_size()), {c.box_lo, c.box_hi});
}

MultistartOptions multistart_options(const RunConfig& c) {
  MultistartOptions o;
  o.seed = c.seed;
  o.dedup_rel = c.dedup;
  o.threads = c.threads;
  o.newton.newton.tol = c.tol;
  o.newton.newton.target = std::min(o.newton.newton.target, c.tol);
  o.newton.grid_nodes = c.grid;
  return o;
}

struct Outputs {
  std::filesystem::path dir;
  std::string command;

  std::filesystem::path file(const std::string& name) const { return dir / name; }

  void report(json j) const {
    j["timestamp"] = timestamp();
    write_text(file(command + ".json"), j.dump(2) + "\n");
  }
};

int cmd_classify(const RunConfig& c, const Outputs& o, std::ostream& out) {
  std::vector<ClassifyInput> inputs;
  if (!c.input.empty()) {
    std::ifstream is(c.input);
    if (!is) throw ValidationError("cannot read " + c.input);
    std::string line;
    while (std::getline(is, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string item;
      while (std::getline(ss, item, ',')) f.push_back(trim(item));
      if (f.size() != 5) throw ValidationError("classify input needs N,alpha,beta,p,q: " + line);
      if (f[0] == "N") continue;
      try {
        inputs.push_back({std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]), Rational::parse(f[3]), Rational::parse(f[4])});
      } catch (const std::invalid_argument&) {
        throw ValidationError("bad classify row: " + line);
      }
    }
  } else {
    inputs.push_back({c.params.N, c.params.alpha, c.params.beta, Rational::parse(c.p_text), Rational::parse(c.q_text)});
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const ClassifyInput& a, const ClassifyInput& b) {
    return std::tie(a.N, a.alpha, a.beta, a.p, a.q) < std::tie(b.N, b.alpha, b.beta, b.p, b.q);
  });
  std::string lines;
  json summary = {{"command", "classify"}, {"count", inputs.size()}};
  std::map<std::string, int> tally;
  for (const auto& in : inputs) {
    const RegionVerdict v = verdict(in);
    lines += to_json_line(v) + "\n";
    tally[to_string(v.verdict)] += 1;
  }
  summary["verdicts"] = tally;
  summary["jsonl"] = o.file("classify.jsonl").string();
  write_text(o.file("classify.jsonl"), lines);
  o.report(summary);
  out << lines;
  return kExitOk;
}

int cmd_solve(const RunConfig& c, const Outputs& o, std::ostream& out) {
  const auto records = multistart_search(c.params, make_box(c), c.starts, multistart_options(c));
  if (records.empty()) throw NumericalError("no nontrivial solution found from " + std::to_string(c.starts) + " starts");
  json j = {{"command", "solve"}, {"params", params_json(c.params)}, {"count", records.size()}};
  bool ok = true;
  const bool bound = c.params.t == 0.0 && c.params.p * c.params.q > 1.0;
  if (bound) j["norm_lower_bound"] = {{"u", norm_lower_bound(c.params)}, {"v", norm_lower_bound_v(c.params)}};
  json sols = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string csv = o.file("solve_profile_" + std::to_string(i) + ".csv").string();
    std::ofstream os(csv);
    write_profile_csv(os, records[i].profile);
    json r = record_json(records[i], csv);
    ok = ok && records[i].residual_norm < c.tol && r["shape_report"]["ok"].get<bool>();
    if (bound) ok = ok && records[i].sup_u >= norm_lower_bound(c.params) && records[i].sup_v >= norm_lower_bound_v(c.params);
    sols.push_back(std::move(r));
  }
  j["solutions"] = sols;
  j["invariants_ok"] = ok;
  o.report(j);
  out << "solve: " << records.size() << " nontrivial solution(s); residual " << fmt17(records.front().residual_norm)
      << "; invariants " << (ok ? "ok" : "VIOLATED") << "\n";
  return ok ? kExitOk : kExitInvariant;
}

BranchOptions branch_options(const RunConfig& c) {
  BranchOptions b;
  b.ds_initial = c.ds;
  b.norm_ceiling = c.norm_ceiling;
  b.max_points = c.max_points;
  b.newton.newton.tol = c.tol;
  b.newton.newton.target = std::min(b.newton.newton.target, c.tol);
  b.newton.grid_nodes = c.grid;
  return b;
}

void write_branch_csv(const std::filesystem::path& path, const Branch& br) {
  std::ofstream os(path);
  os << "arclength,t,sup_u,sup_v,residual\n";
  for (const auto& p : br.points) {
    os << fmt17(p.arclength) << ',' << fmt17(p.t) << ',' << fmt17(p.record.sup_u) << ',' << fmt17(p.record.sup_v) << ','
       << fmt17(p.record.residual_norm) << '\n';
  }
}

json branch_summary(const Branch& br) {
  double t_peak = 0.0, sup_peak = 0.0;
  for (const auto& p : br.points) {
    t_peak = std::max(t_peak, p.t);
    sup_peak = std::max({sup_peak, p.record.sup_u, p.record.sup_v});
  }
  const auto& last = br.points.back();
  return {{"points", br.points.size()},
          {"stop", to_string(br.stop)},
          {"message", br.message},
          {"max_t", t_peak},
          {"max_sup", sup_peak},
          {"last", {{"t", last.t}, {"arclength", last.arclength}, {"sup_u", last.record.sup_u},
                    {"sup_v", last.record.sup_v}, {"shooting", last.record.shooting.values}}}};
}

int cmd_branch(const RunConfig& c, const Outputs& o, std::ostream& out) {
  const Branch br = trace_branch(c.params, c.t_max, branch_options(c));
  write_branch_csv(o.file("branch.csv"), br);
  json j = {{"command", "branch"}, {"params", params_json(c.params)}, {"t_max", c.t_max}};
  j["branch"] = branch_summary(br);
  j["csv"] = o.file("branch.csv").string();
  o.report(j);
  out << "branch: " << br.points.size() << " points; stop: " << to_string(br.stop) << "\n";
  const bool failed = br.stop == BranchStop::StepCollapse || br.stop == BranchStop::SolverFailure;
  return failed ? kExitNumerical : kExitOk;
}

int cmd_blowup(const RunConfig& c, const Outputs& o, std::ostream& out) {
  const Branch br = trace_branch(c.params, c.t_max, branch_options(c));
  write_branch_csv(o.file("branch.csv"), br);
  LimitOptions lo;
  lo.tail = c.tail;
  lo.growth_factor = c.growth;
  const LimitReport rep = limit_profile(br.points, c.window, lo);
  {
    std::ofstream os(o.file("blowup_profile.csv"));
    write_profile_csv(os, rep.profile);
  }
  const auto [tau, sigma] = scaling_exponents(c.params);
  json tail = json::array();
  bool normalized = true, decreasing = true;
  for (std::size_t i = 0; i < rep.tail.size(); ++i) {
    const TailPoint& tp = rep.tail[i];
    tail.push_back({{"t", tp.t}, {"C", tp.C}, {"A", std::pow(tp.C, tau)}, {"B", std::pow(tp.C, sigma)},
                    {"u_hat0_root", tp.u_hat0_root}, {"v_hat0_root", tp.v_hat0_root}, {"t_over_B", tp.t_over_B},
                    {"ttheta_over_A", tp.ttheta_over_A}});
    normalized = normalized && std::max(tp.u_hat0_root, tp.v_hat0_root) >= 0.5 - 1e-6;
    if (i > 0) {
      decreasing = decreasing && tp.t_over_B < rep.tail[i - 1].t_over_B && tp.ttheta_over_A < rep.tail[i - 1].ttheta_over_A;
    }
  }
  json j = {{"command", "blowup"}, {"params", params_json(c.params)}, {"tau", tau}, {"sigma", sigma},
            {"window", rep.window}, {"growth", rep.growth}, {"tail", tail}, {"cauchy_defects", rep.cauchy_defects},
            {"normalization_ok", normalized}, {"shifts_decreasing", decreasing}, {"branch", branch_summary(br)},
            {"profile_csv", o.file("blowup_profile.csv").string()}};
  o.report(j);
  out << "blowup: growth " << fmt17(rep.growth) << "; normalization " << (normalized ? "ok" : "VIOLATED") << "\n";
  return normalized ? kExitOk : kExitInvariant;
}

int cmd_capacity(const RunConfig& c, const Outputs& o, std::ostream& out) {
  int s = 0;
  double r = c.exponent;
  if (c.which == "beta") {
    s = c.params.beta;
    if (r == 0.0) r = c.params.q / (c.params.q - 1.0);
  } else if (c.which == "alpha") {
    s = c.params.alpha;
    if (r == 0.0) r = c.params.p / (c.params.p - 1.0);
  } else {
    throw ValidationError("--which must be alpha or beta");
  }
  if (!(r >= 1.0) || !std::isfinite(r)) throw ValidationError("capacity exponent must be >= 1 (conjugate needs p, q > 1)");
  CutoffSpec spec;
  spec.gamma = c.gamma > 0.0 ? c.gamma : std::ceil(2.0 * s * r) + 1.0;
  const std::vector<double> radii = parse_list(c.radii);
  const CapacityReport rep = capacity_sweep(spec, s, r, c.params.N, radii);
  {
    std::ofstream os(o.file("capacity.csv"));
    os << "R,cap\n";
    for (std::size_t i = 0; i < radii.size(); ++i) os << fmt17(radii[i]) << ',' << fmt17(rep.cap_values[i]) << '\n';
  }
  json j = {{"command", "capacity"}, {"N", c.params.N}, {"which", c.which}, {"s", s}, {"exponent", r},
            {"gamma", spec.gamma}, {"R_values", rep.R_values}, {"cap_values", rep.cap_values},
            {"fitted_slope", rep.fitted_slope}, {"theoretical_slope", rep.theoretical_slope},
            {"max_relative_fit_residual", rep.max_relative_fit_residual}};
  if (rep.theoretical_slope == 0.0) {
    const auto [lo, hi] = std::minmax_element(rep.cap_values.begin(), rep.cap_values.end());
    j["critical"] = true;
    j["cap_ratio_max_min"] = *hi / *lo;
  } else {
    j["relative_slope_error"] = std::abs(rep.fitted_slope - rep.theoretical_slope) / std::abs(rep.theoretical_slope);
  }
  if (c.params.p * c.params.q > 1.0) {
    const auto [e1, e2] = nonexistence_exponent(c.params);
    j["nonexistence_exponent"] = {e1, e2};
  }
  o.report(j);
  out << "capacity: slope " << fmt17(rep.fitted_slope) << " (theory " << fmt17(rep.theoretical_slope) << ")\n";
  return kExitOk;
}

int cmd_unique(const RunConfig& c, const Outputs& o, std::ostream& out) {
  const UniquenessScan scan = uniqueness_scan(c.params, make_box(c), c.starts, multistart_options(c));
  json recs = json::array();
  for (std::size_t i = 0; i < scan.records.size(); ++i) {
    const std::string csv = o.file("unique_profile_" + std::to_string(i) + ".csv").string();
    std::ofstream os(csv);
    write_profile_csv(os, scan.records[i].profile);
    recs.push_back(record_json(scan.records[i], csv));
  }
  std::map<std::string, int> tally;
  double worst = 0.0;
  for (const auto& sp : scan.patterns) {
    tally[to_string(sp.status)] += 1;
    for (double x : sp.rel_sup) worst = std::max(worst, x);
  }
  json j = {{"command", "unique"}, {"params", params_json(c.params)}, {"starts", c.starts}, {"seed", c.seed},
            {"count", scan.count}, {"hits", scan.hits}, {"records", recs},
            {"sign_patterns", {{"pairs", scan.patterns.size()}, {"by_status", tally}, {"max_rel_difference", worst},
                               {"all_identical", scan.all_identical}}}};
  o.report(j);
  out << "unique: count " << scan.count << " from " << scan.hits << " converged starts; pairs identical: "
      << (scan.all_identical ? "yes" : "no") << "\n";
  if (scan.count > 1) return kExitInvariant;
  return scan.all_identical ? kExitOk : kExitInvariant;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    if (key.empty()) throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::string RunConfig::echo() const {
  std::map<std::string, std::string> kv;
  kv["command"] = command;
  kv["N"] = std::to_string(params.N);
  kv["alpha"] = std::to_string(params.alpha);
  kv["beta"] = std::to_string(params.beta);
  kv["p"] = p_text;
  kv["q"] = q_text;
  kv["t"] = fmt17(params.t);
  kv["theta"] = fmt17(params.theta);
  kv["grid"] = std::to_string(grid);
  kv["tol"] = fmt17(tol);
  kv["seed"] = std::to_string(seed);
  kv["out"] = out;
  kv["threads"] = std::to_string(threads);
  kv["starts"] = std::to_string(starts);
  kv["box-lo"] = fmt17(box_lo);
  kv["box-hi"] = fmt17(box_hi);
  kv["dedup"] = fmt17(dedup);
  if (!input.empty()) kv["input"] = input;
  kv["t-max"] = fmt17(t_max);
  kv["ds"] = fmt17(ds);
  kv["norm-ceiling"] = fmt17(norm_ceiling);
  kv["max-points"] = std::to_string(max_points);
  kv["window"] = fmt17(window);
  kv["tail"] = std::to_string(tail);
  kv["growth"] = fmt17(growth);
  kv["which"] = which;
  kv["exponent"] = fmt17(exponent);
  kv["gamma"] = fmt17(gamma);
  kv["radii"] = radii;
  std::string s;
  for (const auto& [k, v] : kv) s += k + " = " + v + "\n";
  return s;
}

json record_json(const SolutionRecord& rec, const std::string& profile_csv_path) {
  return {{"params", params_json(rec.params)},
          {"shooting", rec.shooting.values},
          {"residual_norm", rec.residual_norm},
          {"sup_u", rec.sup_u},
          {"sup_v", rec.sup_v},
          {"profile_csv_path", profile_csv_path},
          {"shape_report", shape_json(check_solution_shape(rec))}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string config_path;
  std::string theta_text;

  CLI::App app{"Radial polyharmonic Lane-Emden systems on the unit ball", "polyemden"};
  app.usage("polyemden <classify|solve|branch|blowup|capacity|unique> [OPTIONS]");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  OptionTable t{app, {}};
  t.add("N", cfg.params.N, "dimension");
  t.add("alpha", cfg.params.alpha, "order of the u-equation");
  t.add("beta", cfg.params.beta, "order of the v-equation");
  t.add("p", cfg.p_text, "exponent p (decimal or a/b)");
  t.add("q", cfg.q_text, "exponent q (decimal or a/b)");
  t.add("t", cfg.params.t, "homotopy shift t >= 0");
  t.add("theta", theta_text, "shift power theta in (1/p, q); default midpoint");
  t.add("grid", cfg.grid, "report grid nodes on [0, 1]");
  t.add("tol", cfg.tol, "residual acceptance tolerance");
  t.add("seed", cfg.seed, "multistart seed");
  t.add("out", cfg.out, "output directory");
  t.add("threads", cfg.threads, "worker threads (0 = hardware)");
  t.add("starts", cfg.starts, "multistart count");
  t.add("box-lo", cfg.box_lo, "lower bound of every center value");
  t.add("box-hi", cfg.box_hi, "upper bound of every center value");
  t.add("dedup", cfg.dedup, "relative dedup threshold on shooting vectors");
  t.add("input", cfg.input, "classify: CSV of N,alpha,beta,p,q");
  t.add("t-max", cfg.t_max, "branch: largest t");
  t.add("ds", cfg.ds, "branch: initial arclength step");
  t.add("norm-ceiling", cfg.norm_ceiling, "branch: sup-norm stop");
  t.add("max-points", cfg.max_points, "branch: point budget");
  t.add("window", cfg.window, "blowup: comparison window");
  t.add("tail", cfg.tail, "blowup: rescaled tail length");
  t.add("growth", cfg.growth, "blowup: required sup-norm growth factor");
  t.add("which", cfg.which, "capacity: alpha or beta");
  t.add("exponent", cfg.exponent, "capacity: integrability exponent (0 = conjugate)");
  t.add("gamma", cfg.gamma, "capacity: cutoff power (0 = default)");
  t.add("radii", cfg.radii, "capacity: comma separated radii");
  app.add_option("--config", config_path, "key = value settings file");

  try {
    std::vector<std::string> rest = args;
    if (!rest.empty() && !rest.front().empty() && rest.front()[0] != '-') {
      cfg.command = rest.front();
      rest.erase(rest.begin());
    }
    // locate --config before the full parse
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == "--config" && i + 1 < rest.size()) config_path = rest[i + 1];
      if (rest[i].rfind("--config=", 0) == 0) config_path = rest[i].substr(9);
    }
    std::vector<std::string> merged;
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) throw ValidationError("cannot read config " + config_path);
      std::stringstream buf;
      buf << is.rdbuf();
      for (const auto& [k, v] : parse_config_text(buf.str())) {
        if (k == "command") {
          if (cfg.command.empty()) cfg.command = v;
          continue;
        }
        if (std::find(t.keys.begin(), t.keys.end(), k) == t.keys.end()) throw ValidationError("unknown config key: " + k);
        merged.push_back("--" + k + "=" + v);
      }
    }
    for (const auto& k : t.keys) {
      if (const char* e = std::getenv(env_name(k).c_str())) merged.push_back("--" + k + "=" + e);
    }
    merged.insert(merged.end(), rest.begin(), rest.end());
    std::reverse(merged.begin(), merged.end());  // CLI11 consumes a reversed vector
    app.parse(merged);

    if (cfg.command.empty()) throw ValidationError("missing command (one of classify, solve, branch, blowup, capacity, unique)");
    if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
      throw ValidationError("unknown command: " + cfg.command);
    }
    cfg.params.p = parse_exponent(cfg.p_text, "p");
    cfg.params.q = parse_exponent(cfg.q_text, "q");
    cfg.theta_given = !theta_text.empty();
    cfg.params.theta = cfg.theta_given ? parse_exponent(theta_text, "theta")
                                       : ProblemParams::default_theta(cfg.params.p, cfg.params.q);
    if (cfg.grid < 17) throw ValidationError("grid needs at least 17 nodes");
    if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive");
    if (cfg.command != "classify" && cfg.command != "capacity") cfg.params.validate();
    if (cfg.command == "capacity" && cfg.params.N < 1) throw ValidationError("N must be >= 1");

    Outputs o{cfg.out, cfg.command};
    std::filesystem::create_directories(o.dir);
    write_text(o.file(cfg.command + ".config"), cfg.echo());

    if (cfg.command == "classify") return cmd_classify(cfg, o, out);
    if (cfg.command == "solve") return cmd_solve(cfg, o, out);
    if (cfg.command == "branch") return cmd_branch(cfg, o, out);
    if (cfg.command == "blowup") return cmd_blowup(cfg, o, out);
    if (cfg.command == "capacity") return cmd_capacity(cfg, o, out);
    return cmd_unique(cfg, o, out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::overflow_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace polyemden
