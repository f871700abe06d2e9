#include "setopt/fm.hpp"

#include <map>

namespace setopt {

std::optional<std::vector<LinIneq>> fm_normalize(const std::vector<LinIneq>& sys) {
  std::map<Vec, Q, decltype(&lex_less)> best(&lex_less);
  for (const auto& r : sys) {
    if (is_zero(r.a)) {
      if (r.b < 0) return std::nullopt;
      continue;
    }
    Q f = primitive_factor(r.a);
    Vec a = scale(f, r.a);
    Q b = f * r.b;
    auto [it, inserted] = best.emplace(std::move(a), b);
    if (!inserted && b < it->second) it->second = b;
  }
  std::vector<LinIneq> out;
  out.reserve(best.size());
  for (auto& [a, b] : best) out.push_back({a, b});
  return out;
}

std::optional<std::vector<LinIneq>> fm_eliminate(const std::vector<LinIneq>& sys, std::size_t k) {
  std::vector<LinIneq> pos, negs, out;
  auto drop = [k](const Vec& a) {
    Vec r;
    r.reserve(a.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != k) r.push_back(a[i]);
    return r;
  };
  for (const auto& r : sys) {
    int s = sgn(r.a[k]);
    if (s > 0) pos.push_back(r);
    else if (s < 0) negs.push_back(r);
    else out.push_back({drop(r.a), r.b});
  }
  for (const auto& p : pos)
    for (const auto& n : negs) {
      // p.a[k] > 0 > n.a[k]: combine so the k-th coefficient cancels
      Q lp = -n.a[k], ln = p.a[k];
      Vec a(p.a.size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = lp * p.a[i] + ln * n.a[i];
      out.push_back({drop(a), lp * p.b + ln * n.b});
    }
  return fm_normalize(out);
}

std::optional<std::vector<LinIneq>> fm_project(const std::vector<LinIneq>& sys, std::size_t keep) {
  auto cur = fm_normalize(sys);
  if (!cur) return std::nullopt;
  if (cur->empty()) return cur;
  std::size_t n = sys.front().a.size();
  while (n > keep) {
    cur = fm_eliminate(*cur, n - 1);
    if (!cur) return std::nullopt;
    --n;
    if (cur->empty()) return cur;
  }
  return cur;
}

bool fm_feasible(const std::vector<LinIneq>& sys) {
  if (sys.empty()) return true;
  return fm_project(sys, 0).has_value();
}

}  // namespace setopt
