#include "wfgcri/model_parse.hpp"

#include <cstdlib>
#include <string_view>
#include <utility>
#include <vector>

#include "wfgcri/errors.hpp"

namespace wfgcri {

namespace {

[[noreturn]] void parse_fail(std::string_view spec, const std::string& why) {
  throw Error(ErrorCode::parse,
              "bad model spec '" + std::string(spec) + "': " + why);
}

double parse_number(std::string_view spec, std::string_view token) {
  std::string buf(token);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty())
    parse_fail(spec, "'" + buf + "' is not a number");
  return v;
}

// key=value pairs split on ',' until "base=" (which swallows the rest).
struct Params {
  std::vector<std::pair<std::string_view, std::string_view>> scalars;
  std::string_view base;  // empty when absent
  bool has_base = false;
};

Params split_params(std::string_view spec, std::string_view body) {
  Params out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t eq = body.find('=', pos);
    if (eq == std::string_view::npos)
      parse_fail(spec, "expected key=value near '" +
                           std::string(body.substr(pos)) + "'");
    std::string_view key = body.substr(pos, eq - pos);
    if (key == "base") {
      out.base = body.substr(eq + 1);
      out.has_base = true;
      return out;
    }
    std::size_t comma = body.find(',', eq + 1);
    std::size_t end = comma == std::string_view::npos ? body.size() : comma;
    out.scalars.emplace_back(key, body.substr(eq + 1, end - eq - 1));
    pos = comma == std::string_view::npos ? body.size() : comma + 1;
  }
  return out;
}

double scalar_param(std::string_view spec, const Params& p,
                    std::string_view key) {
  for (const auto& [k, v] : p.scalars)
    if (k == key) return parse_number(spec, v);
  parse_fail(spec, "missing parameter '" + std::string(key) + "'");
}

SurvivalModel parse_spec(std::string_view full, std::string_view spec);

SurvivalModel parse_mixture(std::string_view full, std::string_view body) {
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    parse_fail(full, "mix body must be [p*spec;...]");
  std::string_view inner = body.substr(1, body.size() - 2);
  std::vector<std::pair<double, SurvivalModel>> comps;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    int depth = 0;
    std::size_t end = pos;
    while (end < inner.size() && (inner[end] != ';' || depth > 0)) {
      if (inner[end] == '[') ++depth;
      if (inner[end] == ']') --depth;
      ++end;
    }
    std::string_view item = inner.substr(pos, end - pos);
    std::size_t star = item.find('*');
    if (star == std::string_view::npos)
      parse_fail(full, "mixture component needs weight*spec, got '" +
                           std::string(item) + "'");
    double p = parse_number(full, item.substr(0, star));
    comps.emplace_back(p, parse_spec(full, item.substr(star + 1)));
    if (end >= inner.size()) break;
    pos = end + 1;
  }
  return SurvivalModel::mixture_hazard(comps);
}

SurvivalModel parse_spec(std::string_view full, std::string_view spec) {
  if (spec.empty()) parse_fail(full, "empty model spec");
  std::size_t colon = spec.find(':');
  std::string_view head =
      colon == std::string_view::npos ? spec : spec.substr(0, colon);
  std::string_view body =
      colon == std::string_view::npos ? std::string_view{}
                                      : spec.substr(colon + 1);
  if (head == "gamma2") {
    if (!body.empty()) parse_fail(full, "gamma2 takes no parameters");
    return SurvivalModel::gamma_shape2();
  }
  if (head == "mix") return parse_mixture(full, body);
  Params p = split_params(full, body);
  auto need_base = [&]() -> SurvivalModel {
    if (!p.has_base)
      parse_fail(full, std::string(head) + " needs base=<spec> last");
    return parse_spec(full, p.base);
  };
  if (head == "exp")
    return SurvivalModel::exponential(scalar_param(full, p, "rate"));
  if (head == "weibull")
    return SurvivalModel::weibull(scalar_param(full, p, "k"),
                                  scalar_param(full, p, "eta"));
  if (head == "rayleigh")
    return SurvivalModel::rayleigh(scalar_param(full, p, "b"));
  if (head == "phr") {
    double alpha = scalar_param(full, p, "alpha");
    return SurvivalModel::phr(need_base(), alpha);
  }
  if (head == "po") {
    double alpha = scalar_param(full, p, "alpha");
    return SurvivalModel::po(need_base(), alpha);
  }
  if (head == "trunc") {
    double a = scalar_param(full, p, "a");
    double b = scalar_param(full, p, "b");
    return SurvivalModel::truncated(need_base(), a, b);
  }
  if (head == "affine") {
    double a = scalar_param(full, p, "a");
    double b = scalar_param(full, p, "b");
    return SurvivalModel::affine(need_base(), a, b);
  }
  parse_fail(full, "unknown model family '" + std::string(head) + "'");
}

}  // namespace

SurvivalModel parse_survival_model(const std::string& spec) {
  return parse_spec(spec, spec);
}

}  // namespace wfgcri
