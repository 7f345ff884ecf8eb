#include "sublinear/json_io.hpp"

#include "sublinear/errors.hpp"

#include <fstream>
#include <sstream>

namespace sublinear::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  return a;
}

template <Scalar T>
Point<T> point_from_json(const json& j) {
  if (j.is_array()) {
    Point<T> p;
    p.reserve(j.size());
    for (const auto& c : j) p.push_back(scalar_from_json<T>(c));
    if (p.empty()) throw InvalidInput("points must have at least one coordinate");
    return p;
  }
  return {scalar_from_json<T>(j)};
}

template <Scalar T>
json point_to_json(const Point<T>& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(scalar_to_json(c));
  return out;
}

template <Scalar T>
std::vector<T> scalars_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of numbers");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& c : j) out.push_back(scalar_from_json<T>(c));
  return out;
}

template <Scalar T>
json scalars_to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(scalar_to_json(c));
  return out;
}

}  // namespace

template <Scalar T>
json scalar_to_json(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(x);
  } else {
    return x;
  }
}

template <Scalar T>
T scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar<T>(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return T(j.get<std::uint64_t>());
    return T(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    if constexpr (std::same_as<T, Rational>) {
      return rational_from_double(j.get<double>());
    } else {
      return j.get<double>();
    }
  }
  throw InvalidInput("expected a number or a \"p/q\" string, got " + j.dump());
}

template <Scalar T>
json to_json(const FiniteSupport<T>& s) {
  json out = json::array();
  for (const auto& p : s.points()) out.push_back(point_to_json(p));
  return out;
}

template <Scalar T>
FiniteSupport<T> support_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("support must be an array of points");
  std::vector<Point<T>> pts;
  pts.reserve(j.size());
  for (const auto& p : j) pts.push_back(point_from_json<T>(p));
  return FiniteSupport<T>(std::move(pts));
}

template <Scalar T>
json to_json(const ProbabilityMeasure<T>& m) {
  return json{{"weights", scalars_to_json(m.weights())}};
}

template <Scalar T>
ProbabilityMeasure<T> measure_from_json(const json& j, const FiniteSupport<T>& support) {
  const json& w = j.is_array() ? j : array_field(j, "weights");
  return make_measure(support, scalars_from_json<T>(w));
}

template <Scalar T>
json to_json(const CredalSet<T>& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(to_json(g));
  return json{{"support", to_json(m.support())}, {"generators", gens}};
}

template <Scalar T>
CredalSet<T> credal_from_json(const json& j, const FiniteSupport<T>* fallback) {
  if (!j.is_object()) throw InvalidInput("credal set must be an object");
  std::optional<FiniteSupport<T>> own;
  if (j.contains("support")) own.emplace(support_from_json<T>(j.at("support")));
  if (!own && !fallback) throw InvalidInput("credal set is missing its support");
  const FiniteSupport<T>& support = own ? *own : *fallback;
  if (own && fallback && !(*own == *fallback)) throw SupportMismatch("credal set support differs from enclosing support");
  std::vector<ProbabilityMeasure<T>> gens;
  for (const auto& g : array_field(j, "generators")) gens.push_back(measure_from_json<T>(g, support));
  return CredalSet<T>(fallback ? *fallback : support, std::move(gens));
}

template <Scalar T>
json to_json(const ValueTable<T>& t) {
  return json{{"values", scalars_to_json(t.values())}};
}

template <Scalar T>
ValueTable<T> table_from_json(const json& j, const FiniteSupport<T>& support) {
  const json& v = j.is_array() ? j : array_field(j, "values");
  return ValueTable<T>(support, scalars_from_json<T>(v));
}

template <Scalar T>
json to_json(const SublinearSpace<T>& s) {
  return json{{"omega", to_json(s.omega())}, {"credal", to_json(s.credal())}};
}

template <Scalar T>
SublinearSpace<T> space_from_json(const json& j) {
  FiniteSupport<T> omega = support_from_json<T>(field(j, "omega"));
  CredalSet<T> credal = credal_from_json<T>(field(j, "credal"), &omega);
  return SublinearSpace<T>(omega, std::move(credal));
}

template <Scalar T>
RandomVariable<T> random_variable_from_json(const json& j) {
  SublinearSpace<T> space = space_from_json<T>(field(j, "space"));
  std::vector<Point<T>> values;
  for (const auto& v : array_field(j, "values")) values.push_back(point_from_json<T>(v));
  return RandomVariable<T>(std::move(space), std::move(values));
}

template <Scalar T>
json to_json(const RandomVariable<T>& rv) {
  json values = json::array();
  for (const auto& v : rv.values()) values.push_back(point_to_json(v));
  return json{{"space", to_json(rv.space())}, {"values", values}};
}

template <Scalar T>
json to_json(const Distribution<T>& d) {
  return json{{"omega", to_json(d.grid())}, {"credal", to_json(d.credal())}};
}

template <Scalar T>
Distribution<T> distribution_from_json(const json& j) {
  SublinearSpace<T> space = space_from_json<T>(j);
  return Distribution<T>(space.credal());
}

template <Scalar T>
json to_json(const JointDistribution<T>& joint) {
  return json{{"gridX", to_json(joint.grid_x())}, {"gridY", to_json(joint.grid_y())}, {"credal", to_json(joint.credal())}};
}

template <Scalar T>
JointDistribution<T> joint_from_json(const json& j) {
  FiniteSupport<T> gx = support_from_json<T>(field(j, "gridX"));
  FiniteSupport<T> gy = support_from_json<T>(field(j, "gridY"));
  FiniteSupport<T> product = product_support(gx, gy);
  CredalSet<T> credal = credal_from_json<T>(field(j, "credal"), &product);
  return JointDistribution<T>(std::move(gx), std::move(gy), std::move(credal));
}

template <Scalar T>
json to_json(const MaximalityCertificate<T>& cert) {
  json out{{"maximal", cert.maximal}, {"mode", std::string(to_string(cert.mode))}};
  if (cert.maximal) {
    json gamma = json::array();
    for (const auto& p : cert.gamma) gamma.push_back(point_to_json(p));
    out["gamma"] = gamma;
  } else if (cert.violator) {
    out["violator"] = to_json(*cert.violator);
  }
  return out;
}

template <Scalar T>
json to_json(const IndependenceVerdict<T>& v) {
  json out{{"independent", v.independent},
           {"mode", std::string(to_string(v.mode))},
           {"check", v.check == CheckMode::Certificate ? "certificate" : "probe"}};
  if (v.check == CheckMode::Probe) out["tables_tried"] = v.tables_tried;
  if (v.witness) {
    out["witness"] = to_json(*v.witness);
    out["values"] = json::array({scalar_to_json(v.joint_value), scalar_to_json(v.product_value)});
  }
  return out;
}

template <Scalar T>
json to_json(const WeakVerdict<T>& v) {
  json out{{"falsified", v.falsified}, {"mode", std::string(to_string(v.mode))}, {"pairs_tried", v.pairs_tried}};
  if (v.falsified) {
    out["phi"] = to_json(*v.phi);
    out["psi"] = to_json(*v.psi);
    out["values"] = json::array({scalar_to_json(v.joint_value), scalar_to_json(v.nested_value)});
  }
  return out;
}

template <Scalar T>
json to_json(const Lemma2Report<T>& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"sample", f.sample}, {"identity", f.identity}, {"detail", f.detail}});
  return json{{"mode", std::string(to_string(r.mode))},
              {"epsilon", scalar_to_json(r.epsilon)},
              {"witness_index", r.witness_index},
              {"samples", r.samples},
              {"checks", r.checks},
              {"max_limit_iterations", r.max_limit_iterations},
              {"failures", failures},
              {"ok", r.ok()}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

#define SUBLINEAR_INSTANTIATE(T)                                                          \
  template json scalar_to_json<T>(const T&);                                              \
  template T scalar_from_json<T>(const json&);                                            \
  template json to_json<T>(const FiniteSupport<T>&);                                      \
  template FiniteSupport<T> support_from_json<T>(const json&);                            \
  template json to_json<T>(const ProbabilityMeasure<T>&);                                 \
  template ProbabilityMeasure<T> measure_from_json<T>(const json&, const FiniteSupport<T>&); \
  template json to_json<T>(const CredalSet<T>&);                                          \
  template CredalSet<T> credal_from_json<T>(const json&, const FiniteSupport<T>*);        \
  template json to_json<T>(const ValueTable<T>&);                                         \
  template ValueTable<T> table_from_json<T>(const json&, const FiniteSupport<T>&);        \
  template json to_json<T>(const SublinearSpace<T>&);                                     \
  template SublinearSpace<T> space_from_json<T>(const json&);                             \
  template RandomVariable<T> random_variable_from_json<T>(const json&);                   \
  template json to_json<T>(const RandomVariable<T>&);                                     \
  template json to_json<T>(const Distribution<T>&);                                      \
  template Distribution<T> distribution_from_json<T>(const json&);                        \
  template json to_json<T>(const JointDistribution<T>&);                                  \
  template JointDistribution<T> joint_from_json<T>(const json&);                          \
  template json to_json<T>(const MaximalityCertificate<T>&);                              \
  template json to_json<T>(const IndependenceVerdict<T>&);                                \
  template json to_json<T>(const WeakVerdict<T>&);                                        \
  template json to_json<T>(const Lemma2Report<T>&);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear::json
