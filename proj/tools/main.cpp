// mgraph command line: verification suites, evaluations and experiments.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "mgraph/boundary.hpp"
#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/family.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/harmonic.hpp"
#include "verify.hpp"

using json = nlohmann::ordered_json;
using namespace mgraph;

namespace {

constexpr int kSchemaVersion = 1;

// Every command renders into one of these.
struct Table {
  std::string command;
  json meta = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<bool> pass;  // set for checking commands
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = t.command;
    if (t.pass) j["pass"] = *t.pass;
    j["meta"] = t.meta;
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i] == "pass")
          o[t.columns[i]] = r[i] == "true";
        else
          o[t.columns[i]] = r[i];
      }
      rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << "\n";
    }
  } else {
    for (const auto& [k, v] : t.meta.items()) os << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "\t" : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
      os << "\n";
    }
    if (t.pass) os << (*t.pass ? "PASS" : "FAIL") << "\n";
  }
}

Table from_report(const verify::Report& rep) {
  Table t{"verify " + rep.suite, json::object(), {"tag", "instance", "lhs", "rhs", "pass"}, {}, rep.pass()};
  for (const auto& r : rep.rows) t.rows.push_back({r.tag, r.instance, r.lhs, r.rhs, r.pass ? "true" : "false"});
  t.meta["checked"] = rep.rows.size();
  t.meta["failures"] = rep.failures();
  for (const auto& n : rep.notes) t.meta["notes"].push_back(n);
  return t;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

std::vector<int> parse_ints(const std::vector<std::string>& items) {
  std::vector<int> out;
  for (const auto& s : items) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("not an integer: '" + item + "'");
      out.push_back(v);
    }
  }
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

// {"command": [...], "options": {...}} becomes argv; options already given on
// the command line win.
std::vector<std::string> merge_config(const std::string& path, std::vector<std::string> cli) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  const json command = cfg.value("command", json::array()), options = cfg.value("options", json::object());
  std::set<std::string> given;
  for (const auto& a : cli)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  std::vector<std::string> argv;
  if (cli.empty() || cli.front().rfind("-", 0) == 0)
    for (const auto& c : command) argv.push_back(c.get<std::string>());
  argv.insert(argv.end(), cli.begin(), cli.end());
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [k, v] : options.items()) {
    if (given.count(k)) continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) argv.push_back("--" + k);
    } else if (v.is_array()) {
      for (const auto& x : v) argv.insert(argv.end(), {"--" + k, scalar(x)});
    } else {
      argv.insert(argv.end(), {"--" + k, scalar(v)});
    }
  }
  return argv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic functions on multiplicative graded graphs"};
  app.require_subcommand(1);

  std::string out_format = "text", output_path, config_path;
  int workers = 1;
  std::uint64_t seed = 2026;
  app.add_option("--out", out_format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output_path, "Write the report to a file");
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for random-point suites");
  app.add_option("--config", config_path, "JSON config {\"command\": [...], \"options\": {...}}");

  std::function<Table()> action;
  auto sub = [&](const std::string& name, const std::string& desc, CLI::App* parent = nullptr) {
    CLI::App* s = (parent ? parent : &app)->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // verify
  verify::Options vo;
  std::string suite, tolerance = vo.tolerance;
  std::vector<std::string> n_list, triples;
  int resolution = vo.convergence.resolution;
  std::string epsilon = vo.convergence.epsilon.str();
  double ratio_tol = vo.convergence.ratio_tolerance;
  long precision = vo.precision;
  auto* v = sub("verify", "Run a verification suite");
  v->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  v->add_option("--family", vo.families, "Family spec (repeatable)");
  v->add_option("--levels", vo.levels, "Top level");
  v->add_option("--graph", vo.graph, "young|kingman|schur|gamma");
  v->add_option("--lambda", vo.lambda, "Partition for a single instance");
  v->add_option("--mu", vo.mu, "Partition for a single instance");
  v->add_option("--max-size", vo.max_size);
  v->add_option("--max-lambda", vo.max_lambda);
  v->add_option("--max-length", vo.max_length);
  v->add_option("--points", vo.points, "Random points");
  v->add_option("--k", vo.ks, "Staircase sizes");
  v->add_flag("--corrected", vo.corrected, "Staircase (k-1, ..., 1)");
  v->add_option("--n", n_list, "Levels for convergence, comma separated");
  v->add_option("--resolution", resolution);
  v->add_option("--epsilon", epsilon);
  v->add_option("--ratio-tolerance", ratio_tol);
  v->add_option("--tolerance", tolerance, "Gauss tolerance");
  v->add_option("--precision", precision, "MPFR bits")->check(CLI::Range(128L, 1L << 20));
  v->add_option("--triple", triples, "a,b,c for the Gauss suite (repeatable)");
  v->callback([&] {
    action = [&] {
      vo.seed = seed;
      vo.workers = workers;
      vo.tolerance = tolerance;
      vo.precision = precision;
      vo.has_instance = !vo.lambda.empty() || !vo.mu.empty();
      if (vo.has_instance && vo.lambda.empty()) throw ParseError("--mu needs --lambda");
      if (!n_list.empty()) vo.n_values = parse_ints(n_list);
      vo.convergence.resolution = resolution;
      vo.convergence.epsilon = Rational::parse(epsilon);
      vo.convergence.ratio_tolerance = ratio_tol;
      vo.convergence.precision = precision;
      for (const auto& tr : triples) {
        const auto r = parse_rationals(tr);
        if (r.size() != 3) throw ParseError("--triple needs a,b,c");
        vo.triples.push_back({r[0], r[1], r[2]});
      }
      return from_report(verify::run(suite, vo));
    };
  });

  // eval phi / phi
  std::string family, mu_text;
  auto add_phi = [&](CLI::App* s) {
    s->add_option("--family", family, "Family spec")->required();
    s->add_option("--mu", mu_text, "Vertex, e.g. 2+1")->required();
    s->callback([&] {
      action = [&] {
        const HarmonicFamily f = HarmonicFamily::parse(family);
        const Partition mu = Partition::parse(mu_text);
        Table t{"phi", {{"family", f.str()}}, {"mu", "phi"}, {}, {}};
        t.rows.push_back({mu.str(), f.phi(mu).str()});
        return t;
      };
    });
  };
  auto* ev = sub("eval", "Evaluate a quantity");
  ev->require_subcommand(1);
  add_phi(sub("phi", "Harmonic function value", ev));
  add_phi(sub("phi", "Harmonic function value (same as eval phi)"));

  // measure
  int n_level = 0;
  auto* me = sub("measure", "Level measure M_n");
  me->add_option("--family", family)->required();
  me->add_option("--n", n_level)->required()->check(CLI::NonNegativeNumber);
  me->callback([&] {
    action = [&] {
      const HarmonicFamily f = HarmonicFamily::parse(family);
      const LevelMeasure m = level_measure(f, n_level, workers);
      Table t{"measure", {{"family", f.str()}, {"n", n_level}, {"total", m.total().str()}}, {"n", "partition", "mass"}, {}, {}};
      for (const auto& [nu, x] : m.mass) t.rows.push_back({std::to_string(n_level), nu.str(), x.str()});
      return t;
    };
  });

  // check-harmonic
  int levels = 8;
  auto* ch = sub("check-harmonic", "Harmonicity and positivity of a family");
  ch->add_option("--family", family)->required();
  ch->add_option("--levels", levels);
  ch->callback([&] {
    action = [&] {
      const HarmonicFamily f = HarmonicFamily::parse(family);
      const HarmonicityReport h = check_harmonicity(f, levels, workers);
      Table t{"check-harmonic",
              {{"family", f.str()}, {"levels", levels}, {"vertices_checked", h.vertices_checked}},
              {"kind", "mu", "lhs", "rhs"},
              {},
              h.harmonic() && h.nonnegative()};
      for (const auto& x : h.violations) t.rows.push_back({"violation", x.mu.str(), x.lhs.str(), x.rhs.str()});
      for (const auto& [nu, x] : h.negatives) t.rows.push_back({"negative", nu.str(), x.str(), "0"});
      return t;
    };
  });

  // integral-verify
  std::string graph = "young", lambda_text;
  auto* iv = sub("integral-verify", "Exact boundary integral for one (lambda, mu)");
  iv->add_option("--graph", graph)->required();
  iv->add_option("--lambda", lambda_text)->required();
  iv->add_option("--mu", mu_text)->required();
  iv->callback([&] {
    action = [&] {
      const SelbergReport r =
          selberg_verify(parse_boundary_kind(graph), Partition::parse(lambda_text), Partition::parse(mu_text), workers);
      Table t{"integral-verify",
              {{"graph", to_string(r.kind)}, {"terms", r.terms}},
              {"lambda", "mu", "lhs", "rhs", "pass"},
              {},
              r.equal};
      t.rows.push_back({r.lambda.str(), r.mu.str(), r.lhs.str(), r.rhs.str(), r.equal ? "true" : "false"});
      return t;
    };
  });

  // density
  std::string at_text;
  auto* de = sub("density", "Boundary density at a point of the face");
  de->add_option("--graph", graph)->required();
  de->add_option("--lambda", lambda_text)->required();
  de->add_option("--at", at_text, "Comma separated coordinates")->required();
  de->callback([&] {
    action = [&] {
      const DensitySpec spec = DensitySpec::make(parse_boundary_kind(graph), Partition::parse(lambda_text));
      const auto pt = parse_rationals(at_text);
      Table t{"density", {{"graph", to_string(spec.kind)}, {"form", spec.describe()}}, {"lambda", "point", "density"}, {}, {}};
      t.rows.push_back({spec.lambda.str(), join(pt), density(spec, pt).str()});
      return t;
    };
  });

  // converge
  ConvergenceOptions co;
  std::string co_eps = co.epsilon.str();
  bool keep_points = false;
  auto* cv = sub("converge", "Level measures against the boundary density");
  cv->add_option("--family", family)->required();
  cv->add_option("--n", n_list, "Levels, comma separated")->required();
  cv->add_option("--resolution", co.resolution);
  cv->add_option("--epsilon", co_eps);
  cv->add_option("--ratio-tolerance", co.ratio_tolerance);
  cv->add_flag("--points", keep_points, "Emit every embedded point");
  cv->callback([&] {
    action = [&] {
      co.epsilon = Rational::parse(co_eps);
      co.keep_points = keep_points;
      co.workers = workers;
      const ConvergenceReport r = convergence_experiment(HarmonicFamily::parse(family), parse_ints(n_list), co);
      Table t{"converge",
              {{"family", r.family}, {"ratio_pass", r.ratio_pass}, {"distance_pass", r.distance_pass}},
              {},
              {},
              r.pass()};
      if (keep_points) {
        t.columns = {"n", "partition", "mass", "point", "interior", "ratio"};
        for (const auto& lv : r.levels)
          for (const auto& p : lv.points)
            t.rows.push_back({std::to_string(lv.n), p.nu.str(), p.mass.str(), join(p.point), p.interior ? "1" : "0",
                              p.ratio ? p.ratio->decimal(12) : ""});
      } else {
        t.columns = {"n", "total", "interior", "worst_ratio_error", "binned_distance"};
        for (const auto& lv : r.levels)
          t.rows.push_back({std::to_string(lv.n), lv.total.str(), std::to_string(lv.interior),
                            lv.worst_ratio_error.decimal(12), lv.binned_distance.decimal(12)});
      }
      return t;
    };
  });

  // dims
  std::string dims_graph = "young";
  int dims_max = 6;
  auto* di = sub("dims", "Dimension table");
  di->add_option("--graph", dims_graph, "young|kingman|schur|jack:theta=..");
  di->add_option("--n", dims_max, "Top level")->check(CLI::NonNegativeNumber);
  di->callback([&] {
    action = [&] {
      const GraphKind k = GraphKind::parse(dims_graph);
      Table t{"dims", {{"graph", k.str()}}, {"level", "partition", "dim"}, {}, {}};
      for (const Partition& lam : partitions_up_to(dims_max, k))
        t.rows.push_back({std::to_string(lam.size()), lam.str(), dim(lam, k).str()});
      return t;
    };
  });

  // admissible
  int surrogate = 6;
  auto* ad = sub("admissible", "Positivity region test");
  ad->add_option("--family", family)->required();
  ad->add_option("--surrogate-level", surrogate);
  ad->callback([&] {
    action = [&] {
      const HarmonicFamily f = HarmonicFamily::parse(family);
      const Admissibility a = admissible(f, surrogate);
      Table t{"admissible", {{"family", f.str()}}, {"admissible", "surrogate", "reason"}, {}, {}};
      t.rows.push_back({a.admissible ? "true" : "false", a.surrogate ? "true" : "false", a.reason});
      return t;
    };
  });

  // kernel
  std::string alpha_text, beta_text;
  auto* ke = sub("kernel", "Boundary kernel at a Thoma point");
  ke->add_option("--graph", graph, "young|kingman");
  ke->add_option("--alpha", alpha_text)->required();
  ke->add_option("--beta", beta_text);
  ke->add_option("--mu", mu_text)->required();
  ke->callback([&] {
    action = [&] {
      const ThomaPoint w(parse_rationals(alpha_text), parse_rationals(beta_text));
      const Partition mu = Partition::parse(mu_text);
      const BoundaryKind kind = parse_boundary_kind(graph);
      Rational val;
      if (kind == BoundaryKind::Young)
        val = young_kernel(mu, w);
      else if (kind == BoundaryKind::Kingman)
        val = kingman_kernel(mu, w);
      else
        throw UnsupportedError("kernel: graph must be young or kingman");
      Table t{"kernel", {{"graph", to_string(kind)}, {"omega", w.str()}}, {"mu", "value"}, {}, {}};
      t.rows.push_back({mu.str(), val.str()});
      return t;
    };
  });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
        args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
        args.erase(args.begin() + static_cast<long>(i));
      }
      if (!path.empty()) {
        args = merge_config(path, args);
        break;
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Table table;
  try {
    table = action();
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // ShapeError, ParseError, unknown suite
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {  // degree caps, singular systems, division by zero
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (output_path.empty()) {
    render(table, out_format, std::cout);
  } else {
    std::ofstream f(output_path);
    if (!f) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return 2;
    }
    render(table, out_format, f);
  }
  return table.pass.value_or(true) ? 0 : 1;
}
