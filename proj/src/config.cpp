#include "orthomean/config.hpp"

#include <json.hpp>
#include <memory>
#include <stdexcept>

#include "orthomean/csv.hpp"

namespace orthomean {

using nlohmann::json;

namespace {

std::string family_kind_name(FamilySpec::Kind k) {
  switch (k) {
    case FamilySpec::Kind::ultraspherical: return "ultraspherical";
    case FamilySpec::Kind::jacobi_shift: return "jacobi_shift";
    case FamilySpec::Kind::constant: return "constant";
    case FamilySpec::Kind::table: return "table";
  }
  throw std::logic_error("unreachable");
}

FamilySpec::Kind family_kind_from(const std::string& s) {
  if (s == "ultraspherical") return FamilySpec::Kind::ultraspherical;
  if (s == "jacobi_shift") return FamilySpec::Kind::jacobi_shift;
  if (s == "constant" || s == "legendre") return FamilySpec::Kind::constant;
  if (s == "table") return FamilySpec::Kind::table;
  throw std::invalid_argument("unknown family kind: " + s);
}

std::string method_kind_name(MethodSpec::Kind k) {
  switch (k) {
    case MethodSpec::Kind::arithmetic: return "arithmetic";
    case MethodSpec::Kind::legendre: return "legendre";
    case MethodSpec::Kind::cesaro: return "cesaro";
    case MethodSpec::Kind::gegenbauer: return "gegenbauer";
    case MethodSpec::Kind::identity: return "identity";
    case MethodSpec::Kind::custom: return "custom";
  }
  throw std::logic_error("unreachable");
}

MethodSpec::Kind method_kind_from(const std::string& s) {
  if (s == "arithmetic") return MethodSpec::Kind::arithmetic;
  if (s == "legendre") return MethodSpec::Kind::legendre;
  if (s == "cesaro") return MethodSpec::Kind::cesaro;
  if (s == "gegenbauer") return MethodSpec::Kind::gegenbauer;
  if (s == "identity") return MethodSpec::Kind::identity;
  if (s == "custom") return MethodSpec::Kind::custom;
  throw std::invalid_argument("unknown method kind: " + s);
}

json family_to_json(const FamilySpec& f) {
  json params = json::object();
  switch (f.kind) {
    case FamilySpec::Kind::ultraspherical:
      params["lambda"] = f.lambda;
      break;
    case FamilySpec::Kind::jacobi_shift:
      params["lambda1"] = f.lambda1;
      params["lambda2"] = f.lambda2;
      break;
    case FamilySpec::Kind::constant:
      params["max_index"] = f.max_index;
      break;
    case FamilySpec::Kind::table:
      params["path"] = f.path;
      params["mass"] = f.mass;
      break;
  }
  return json{{"kind", family_kind_name(f.kind)}, {"params", params}};
}

FamilySpec family_from_json(const json& j) {
  FamilySpec f;
  f.kind = family_kind_from(j.at("kind").get<std::string>());
  const json params = j.value("params", json::object());
  switch (f.kind) {
    case FamilySpec::Kind::ultraspherical:
      f.lambda = params.value("lambda", 0.5);
      break;
    case FamilySpec::Kind::jacobi_shift:
      f.lambda1 = params.value("lambda1", 0.0);
      f.lambda2 = params.value("lambda2", 0.0);
      break;
    case FamilySpec::Kind::constant:
      f.max_index = params.value("max_index", std::size_t{64});
      break;
    case FamilySpec::Kind::table:
      f.path = params.at("path").get<std::string>();
      f.mass = params.value("mass", 2.0);
      break;
  }
  return f;
}

json method_to_json(const MethodSpec& m) {
  json j{{"method", method_kind_name(m.kind)}};
  if (m.kind == MethodSpec::Kind::cesaro) j["alpha"] = m.alpha;
  if (m.kind == MethodSpec::Kind::gegenbauer) j["nu"] = m.nu;
  if (m.kind == MethodSpec::Kind::custom) j["sigma_file"] = m.sigma_file;
  return j;
}

MethodSpec method_from_json(const json& j) {
  MethodSpec m;
  m.kind = method_kind_from(j.at("method").get<std::string>());
  m.alpha = j.value("alpha", 1.0);
  m.nu = j.value("nu", 0.5);
  m.sigma_file = j.value("sigma_file", std::string{});
  return m;
}

}  // namespace

std::string FamilySpec::to_json() const { return family_to_json(*this).dump(); }

FamilySpec FamilySpec::from_json(const std::string& text) {
  return family_from_json(json::parse(text));
}

CoefficientFamily FamilySpec::build(std::size_t scan_j, std::size_t scan_k) const {
  switch (kind) {
    case Kind::ultraspherical:
      return ultraspherical_family(lambda, scan_j, scan_k);
    case Kind::jacobi_shift:
      return jacobi_shift_family(lambda1, lambda2, scan_j, scan_k);
    case Kind::constant:
      return constant_family(legendre_table(max_index), "legendre");
    case Kind::table:
      return constant_family(read_table_csv(path, mass), "table");
  }
  throw std::logic_error("unreachable");
}

std::string MethodSpec::to_json() const { return method_to_json(*this).dump(); }

MethodSpec MethodSpec::from_json(const std::string& text) {
  return method_from_json(json::parse(text));
}

NorlundMethod MethodSpec::build() const {
  switch (kind) {
    case Kind::arithmetic:
      return arithmetic_mean();
    case Kind::legendre:
      return legendre_summation();
    case Kind::cesaro:
      return cesaro(alpha);
    case Kind::gegenbauer:
      return gegenbauer(nu);
    case Kind::identity:
      return identity_method();
    case Kind::custom: {
      if (sigma_file.empty())
        throw std::invalid_argument("custom method requires a sigma_file");
      auto rows = read_csv(sigma_file);
      auto seq = std::make_shared<std::vector<double>>();
      for (const auto& row : rows) {
        if (row.size() != 2)
          throw std::invalid_argument("sigma file: expected columns k,sigma");
        seq->push_back(std::stod(row[1]));
      }
      if (seq->empty()) throw std::invalid_argument("sigma file: no rows");
      return NorlundMethod("custom", [seq](std::size_t k) {
        if (k >= seq->size())
          throw std::out_of_range("custom sigma sequence too short for requested n");
        return (*seq)[k];
      });
    }
  }
  throw std::logic_error("unreachable");
}

std::string RunConfig::to_json() const {
  json j;
  j["family"] = family_to_json(family);
  j["method"] = method_to_json(method);
  j["n_list"] = n_list;
  j["L"] = L;
  j["output"] = output;
  j["bins"] = bins;
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  const json j = json::parse(text);
  RunConfig c;
  if (j.contains("family")) c.family = family_from_json(j.at("family"));
  if (j.contains("method")) c.method = method_from_json(j.at("method"));
  c.n_list = j.value("n_list", c.n_list);
  c.L = j.value("L", c.L);
  c.output = j.value("output", c.output);
  c.bins = j.value("bins", c.bins);
  return c;
}

void RunConfig::validate(std::size_t max_L) const {
  if (n_list.empty()) throw std::invalid_argument("n_list must be nonempty");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("n_list must be strictly ascending");
  if (L > max_L)
    throw std::invalid_argument("L exceeds the path-oracle cap (" +
                                std::to_string(max_L) + ")");
  if (bins < 1) throw std::invalid_argument("bins must be >= 1");
}

namespace {

// Coefficient tail of the k = 0 measure, used as the Nevai limit estimate for
// arcsine-type equilibria.
std::pair<double, double> tail_limits(const FamilySpec& spec) {
  const CoefficientFamily fam = spec.build(8, 8);
  std::size_t jmax = 400;
  if (spec.kind == FamilySpec::Kind::constant) jmax = spec.max_index;
  if (spec.kind == FamilySpec::Kind::table)
    jmax = read_table_csv(spec.path, spec.mass).max_index();
  const RecurrencePair p = fam.coeff(0, jmax);
  return {p.a, p.b};
}

std::optional<double> cesaro_order(const MethodSpec& m) {
  switch (m.kind) {
    case MethodSpec::Kind::arithmetic: return 1.0;
    case MethodSpec::Kind::legendre: return 1.0;
    case MethodSpec::Kind::cesaro: return m.alpha;
    case MethodSpec::Kind::gegenbauer: return 2.0 * m.nu;
    default: return std::nullopt;
  }
}

}  // namespace

EquilibriumMeasure pick_equilibrium(const FamilySpec& family, const MethodSpec& method) {
  const bool shift_family = family.kind == FamilySpec::Kind::ultraspherical ||
                            family.kind == FamilySpec::Kind::jacobi_shift;
  if (shift_family && method.kind != MethodSpec::Kind::identity) {
    const auto alpha = cesaro_order(method);
    if (!alpha)
      throw std::invalid_argument(
          "no closed-form equilibrium measure for this family/method combination");
    return gegenbauer_equilibrium(*alpha);
  }
  const auto [a, b] = tail_limits(family);
  return arcsine_measure(a, b);
}

double pick_sigma_closed_form(const FamilySpec& family, const MethodSpec& method,
                              std::size_t l_a, std::size_t l_b) {
  const bool shift_family = family.kind == FamilySpec::Kind::ultraspherical ||
                            family.kind == FamilySpec::Kind::jacobi_shift;
  if (shift_family && method.kind != MethodSpec::Kind::identity) {
    const auto alpha = cesaro_order(method);
    if (!alpha)
      throw std::invalid_argument(
          "no closed-form Sigma limits for this family/method combination");
    return sigma_cesaro(*alpha, l_a, l_b);
  }
  const auto [a, b] = tail_limits(family);
  return sigma_uniform_nevai(a, b, l_a, l_b);
}

}  // namespace orthomean
