// sublin: command-line front end for the sublinear expectation engine.
//
// Exit codes: 0 ok, 1 assertion failure, 2 input or configuration error.

#include "sublinear/errors.hpp"
#include "sublinear/harness.hpp"
#include "sublinear/independence.hpp"
#include "sublinear/json_io.hpp"
#include "sublinear/maximality.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace sublinear;
using Json = nlohmann::json;
namespace jio = sublinear::json;

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string mode = "rational";
  double tolerance = 1e-9;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
  std::string config;

  std::string space_path, table_path, dx_path, dy_path, joint_path, dist_path, replay_path;
  std::string order = "y-from-x";
  bool probe = false;
  bool full = false;
  std::size_t probe_tables = 200;
};

void emit(const Options& o, const Json& doc) {
  if (o.out.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidInput("cannot write '" + o.out + "'");
  f << doc.dump(2) << '\n';
}

TrialConfig load_config(const Options& o) {
  TrialConfig c = o.config.empty() ? TrialConfig{} : config_from_json(jio::read_file(o.config));
  if (o.seed) c.seed = *o.seed;
  if (o.trials) c.trials = *o.trials;
  c.mode = parse_mode(o.mode);
  c.tolerance = o.tolerance;
  c.validate();
  return c;
}

template <Scalar T>
int run_eval(const Options& o) {
  SublinearSpace<T> space = jio::space_from_json<T>(jio::read_file(o.space_path));
  ValueTable<T> table = jio::table_from_json<T>(jio::read_file(o.table_path), space.omega());
  emit(o, Json{{"mode", o.mode}, {"value", jio::scalar_to_json(space.expectation(table))}});
  return kOk;
}

template <Scalar T>
int run_product(const Options& o) {
  Distribution<T> dx = jio::distribution_from_json<T>(jio::read_file(o.dx_path));
  Distribution<T> dy = jio::distribution_from_json<T>(jio::read_file(o.dy_path));
  emit(o, jio::to_json(peng_product(dx, dy, parse_order(o.order))));
  return kOk;
}

template <Scalar T>
int run_check_independence(const Options& o) {
  JointDistribution<T> joint = jio::joint_from_json<T>(jio::read_file(o.joint_path));
  ProbeOptions probe{o.probe_tables, o.seed.value_or(1), o.tolerance};
  auto verdict = is_independent(joint, parse_order(o.order), o.probe ? CheckMode::Probe : CheckMode::Certificate, probe);
  Json doc = jio::to_json(verdict);
  doc["order"] = o.order;
  emit(o, doc);
  return kOk;
}

template <Scalar T>
int run_check_maximal(const Options& o) {
  Distribution<T> d = jio::distribution_from_json<T>(jio::read_file(o.dist_path));
  emit(o, jio::to_json(is_maximal(d)));
  return kOk;
}

int run_verify_theorem(const Options& o) {
  if (parse_mode(o.mode) != Mode::Rational) throw InvalidInput("verify-theorem requires --mode rational");
  if (!o.replay_path.empty()) {
    Json inst = jio::read_file(o.replay_path);
    if (inst.contains("instance")) inst = inst["instance"];
    if (!inst.contains("x") || !inst.contains("y")) throw InvalidInput("replay file needs \"x\" and \"y\" distributions");
    TrialRecord rec = evaluate_pair(jio::distribution_from_json<Rational>(inst["x"]),
                                    jio::distribution_from_json<Rational>(inst["y"]));
    Json doc = to_json(rec);
    doc["instance"] = rec.instance;
    emit(o, doc);
    return rec.counterexample ? kAssertionFailed : kOk;
  }
  TrialReport report = verify_theorem(load_config(o));
  emit(o, to_json(report, o.full));
  return report.ok() ? kOk : kAssertionFailed;
}

template <Scalar T>
int run_reproduce(const Options& o) {
  auto line = [](std::initializer_list<long> xs) {
    std::vector<Point<T>> pts;
    for (long x : xs) pts.push_back({T(x)});
    return pts;
  };
  std::vector<ExampleReport> reports{
      reproduce_example_xy2<T>(),
      reproduce_maximal_product<T>(line({0}), line({1})),
      reproduce_maximal_product<T>(line({-1, 1}), line({0, 2})),
      reproduce_maximal_product<T>(line({1, 2, 3}), line({5})),
  };
  Json doc = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    doc.push_back(to_json(r));
    ok = ok && r.ok();
  }
  emit(o, Json{{"mode", o.mode}, {"reports", doc}, {"ok", ok}});
  return ok ? kOk : kAssertionFailed;
}

template <Scalar T>
int run_probe(const Options& o) {
  ProbeReport report = probe_weak_vs_full<T>(load_config(o));
  emit(o, to_json(report));
  return report.control_failures == 0 ? kOk : kAssertionFailed;
}

template <template <class> class F>
int dispatch(const Options& o) {
  return parse_mode(o.mode) == Mode::Rational ? F<Rational>::run(o) : F<double>::run(o);
}

#define SUBLIN_COMMAND(Name, fn) \
  template <class T>             \
  struct Name {                  \
    static int run(const Options& o) { return fn<T>(o); } \
  };

SUBLIN_COMMAND(Eval, run_eval)
SUBLIN_COMMAND(Product, run_product)
SUBLIN_COMMAND(CheckIndependence, run_check_independence)
SUBLIN_COMMAND(CheckMaximal, run_check_maximal)
SUBLIN_COMMAND(Reproduce, run_reproduce)
SUBLIN_COMMAND(Probe, run_probe)

#undef SUBLIN_COMMAND

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite credal-set calculus for sublinear expectations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--mode", o.mode, "Arithmetic: rational|float")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--tol", o.tolerance, "Float-mode tolerance");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--trials", o.trials, "Trial count");
  app.add_option("--out", o.out, "Write JSON here instead of stdout");
  app.add_option("--config", o.config, "TrialConfig JSON file");

  auto* eval = app.add_subcommand("eval", "Upper expectation of a table on a space");
  eval->add_option("space", o.space_path, "Space JSON")->required();
  eval->add_option("table", o.table_path, "Table JSON")->required();

  auto* product = app.add_subcommand("product", "Peng product of two distributions");
  product->add_option("dx", o.dx_path, "Distribution of X")->required();
  product->add_option("dy", o.dy_path, "Distribution of Y")->required();
  product->add_option("--order", o.order, "y-from-x|x-from-y");

  auto* indep = app.add_subcommand("check-independence", "Is a joint the Peng product of its marginals");
  indep->add_option("joint", o.joint_path, "Joint JSON")->required();
  indep->add_option("--order", o.order, "y-from-x|x-from-y");
  indep->add_flag("--probe", o.probe, "Falsify with sampled tables instead of a certificate");
  indep->add_option("--tables", o.probe_tables, "Random tables in probe mode");

  auto* maximal = app.add_subcommand("check-maximal", "Dirac-vertex maximality test");
  maximal->add_option("dist", o.dist_path, "Distribution JSON")->required();

  auto* theorem = app.add_subcommand("verify-theorem", "Randomized mutual-independence vs maximality check");
  theorem->add_flag("--full", o.full, "Include every trial record");
  theorem->add_option("--replay", o.replay_path, "Re-run one serialized instance");

  auto* examples = app.add_subcommand("reproduce-examples", "Fixed worked examples");
  auto* probe = app.add_subcommand("probe-weak", "Search for weakly but not fully independent joints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) return dispatch<Eval>(o);
    if (*product) return dispatch<Product>(o);
    if (*indep) return dispatch<CheckIndependence>(o);
    if (*maximal) return dispatch<CheckMaximal>(o);
    if (*theorem) return run_verify_theorem(o);
    if (*examples) return dispatch<Reproduce>(o);
    if (*probe) return dispatch<Probe>(o);
  } catch (const sublinear::Error& e) {
    std::cerr << "sublin: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "sublin: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
