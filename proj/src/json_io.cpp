#include "setopt/json_io.hpp"

#include "setopt/error.hpp"
#include "setopt/expr.hpp"

namespace setopt::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ValidationError, what); }

Json int_or_string(const Q& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

}  // namespace

Json to_json(const Q& q) { return Json(to_string(q)); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

Json to_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const ExtReal& e) {
  if (e.is_plus_inf()) return Json("+inf");
  if (e.is_minus_inf()) return Json("-inf");
  return to_json(e.value());
}

Json to_json(const UpperSet& s) {
  if (s.empty) return Json{{"tag", "empty"}};
  Json cons = Json::array();
  for (const auto& h : s.H) {
    Json n = Json::array();
    for (const auto& c : h.n) n.push_back(int_or_string(c));
    cons.push_back(Json{{"n", n}, {"b", to_json(h.b)}});
  }
  return Json{{"tag", "poly"}, {"constraints", cons}, {"vertices", to_json(s.V)}, {"rays", to_json(s.R)}};
}

Q rat_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_number()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad rational ") + j.dump() + ": " + e.what());
  }
  bad("expected a rational, got " + j.dump());
}

Vec vec_from_json(const Json& j, int dim) {
  if (!j.is_array()) bad("expected a vector, got " + j.dump());
  Vec v;
  for (const auto& c : j) v.push_back(rat_from_json(c));
  if (dim >= 0 && static_cast<int>(v.size()) != dim)
    bad("vector " + j.dump() + " should have " + std::to_string(dim) + " coordinates");
  return v;
}

std::vector<Vec> vecs_from_json(const Json& j, int dim) {
  if (!j.is_array()) bad("expected a list of vectors, got " + j.dump());
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(vec_from_json(v, dim));
  return out;
}

std::vector<Halfspace> halfspaces_from_json(const Json& j, int dim) {
  if (!j.is_array()) bad("expected a list of constraints");
  std::vector<Halfspace> out;
  for (const auto& h : j) {
    if (!h.is_object() || !h.contains("n") || !h.contains("b")) bad("constraint needs \"n\" and \"b\": " + h.dump());
    out.push_back(Halfspace{vec_from_json(h["n"], dim), rat_from_json(h["b"])});
  }
  return out;
}

UpperSet set_from_json(const Workspace& ws, const Json& j) {
  if (j.is_string()) return eval_expr(ws, j.get<std::string>());
  if (!j.is_object()) bad("expected a set, got " + j.dump());
  if (j.value("tag", "") == "empty") return empty_set(ws);
  if (j.contains("constraints")) return canonicalize(ws, halfspaces_from_json(j["constraints"], ws.dim()));
  if (j.contains("points")) {
    std::vector<Vec> rays = j.contains("rays") ? vecs_from_json(j["rays"], ws.dim()) : std::vector<Vec>{};
    return hull(ws, vecs_from_json(j["points"], ws.dim()), rays);
  }
  bad("unrecognized set description " + j.dump());
}

Json describe(const Workspace& ws, const UpperSet& s) {
  Json phi = Json::array();
  for (const auto& z : ws.directions()) phi.push_back(Json{{"zstar", to_json(z)}, {"phi", to_json(neg_support(z, s))}});
  return Json{{"set", to_json(s)}, {"phi", phi}};
}

}  // namespace setopt::io
