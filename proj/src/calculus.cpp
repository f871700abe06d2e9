#include "setopt/calculus.hpp"

#include "setopt/error.hpp"

namespace setopt {

std::vector<Q> TGrid::values() const {
  std::vector<Q> out;
  Q t = t0;
  for (int k = 0; k < steps; ++k) {
    out.push_back(t);
    t *= rho;
  }
  return out;
}

UpperSet diff_quotient(const SetFunction& f, const Vec& x, const Vec& u, const Q& t) {
  if (t <= 0) throw Error(ErrorCode::InvalidArgument, "quotient needs t > 0");
  const Workspace& ws = f.ws();
  return scale(ws, 1 / t, residual_diff(ws, f.eval(add(x, scale(t, u))), f.eval(x)));
}

namespace {

// Right slope of a concave PWL function at x along u.
Q right_slope(const ConcavePWL& b, const Vec& x, const Vec& u) {
  Q val = b.eval(x);
  bool first = true;
  Q best;
  for (const auto& p : b.pieces) {
    if (p.eval(x) != val) continue;
    Q s = dot(p.a, u);
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

Q right_slope(const ConvexPWL& b, const Vec& x, const Vec& u) {
  Q val = b.eval(x);
  bool first = true;
  Q best;
  for (const auto& p : b.pieces) {
    if (p.eval(x) != val) continue;
    Q s = dot(p.a, u);
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

// First kink of the offsets alone along x + t u.
ExtReal first_offset_kink(const ParamPolyData& P, const Vec& x, const Vec& u) {
  ExtReal best = ExtReal::plus_inf();
  for (const auto& o : P.offsets) {
    Q v0 = o.eval(x);
    Q s0 = right_slope(o, x, u);
    // the active line is v0 + s0 t; another piece takes over when it drops below it
    for (const auto& p : o.pieces) {
      Q v = p.eval(x), s = dot(p.a, u);
      if (s < s0) {
        Q t = (v - v0) / (s0 - s);
        if (t > 0) best = min(best, ExtReal(t));
      }
    }
  }
  return best;
}

DerivativeResult exact_param_poly(const SetFunction& f, const Vec& x, const Vec& u) {
  const Workspace& ws = f.ws();
  const auto& P = *f.param_poly_data();
  DerivativeResult r;
  UpperSet fx = f.eval(x);
  if (fx.empty) {
    r.value = all_set(ws);
    r.t_star = ExtReal::plus_inf();
    return r;
  }
  ExtReal tS = f.exit_time(x, u);
  if (tS == ExtReal(0)) {
    r.value = empty_set(ws);
    r.t_star = ExtReal::plus_inf();
    return r;
  }
  ExtReal tstar = min(tS, first_offset_kink(P, x, u));
  const std::size_t m = P.normals.size();
  std::vector<Q> beta(m), slack(m);
  std::vector<Halfspace> tight;
  for (std::size_t i = 0; i < m; ++i) {
    beta[i] = right_slope(P.offsets[i], x, u);
    ExtReal sig = support(P.normals[i], fx);
    slack[i] = P.offsets[i].eval(x) - sig.value();
    if (slack[i] == 0) tight.push_back({P.normals[i], beta[i]});
  }
  UpperSet Qset = canonicalize(ws, tight);
  for (std::size_t j = 0; j < m; ++j) {
    if (slack[j] == 0) continue;
    ExtReal s = support(P.normals[j], Qset);
    if (s.is_minus_inf()) continue;  // Q empty: every quotient is empty
    if (s.is_plus_inf()) {
      tstar = ExtReal(0);
      continue;
    }
    if (s.value() > beta[j]) tstar = min(tstar, ExtReal(Q(slack[j] / (s.value() - beta[j]))));
  }
  r.t_star = tstar;
  if (tstar == ExtReal(0)) {
    r.value = Qset;
    r.diagnostic = "limit not attained at positive t";
    return r;
  }
  Q h = tstar.finite() ? Q(tstar.value() / 2) : Q(1);
  r.value = diff_quotient(f, x, u, h);
  r.samples.push_back({h, r.value});
  if (!set_equal(r.value, Qset)) r.diagnostic = "quotient differs from the tight-constraint limit";
  return r;
}

DerivativeResult exact_epi_vector(const SetFunction& f, const Vec& x, const Vec& u) {
  const Workspace& ws = f.ws();
  const auto& E = *f.epi_vector_data();
  DerivativeResult r;
  if (!E.domain.contains(x)) {
    r.value = all_set(ws);
    r.t_star = ExtReal::plus_inf();
    return r;
  }
  ExtReal tS = E.domain.exit_time(x, u);
  if (tS == ExtReal(0)) {
    r.value = empty_set(ws);
    r.t_star = ExtReal::plus_inf();
    return r;
  }
  Vec slope;
  for (const auto& c : E.components) slope.push_back(right_slope(c, x, u));
  r.value = point_plus_cone(ws, slope);
  r.t_star = f.first_event(x, u);
  return r;
}

}  // namespace

DerivativeResult set_derivative(const SetFunction& f, const Vec& x, const Vec& u, const TGrid& grid) {
  if (!f.declared_convex()) throw Error(ErrorCode::NotDeclaredConvex, "set derivative needs a convex function");
  switch (f.variant()) {
    case SetFunction::Variant::ParamPoly: return exact_param_poly(f, x, u);
    case SetFunction::Variant::EpiVector: return exact_epi_vector(f, x, u);
    default: break;
  }
  const Workspace& ws = f.ws();
  DerivativeResult r;
  r.exact = false;
  UpperSet fx = f.eval(x);
  if (fx.empty) {
    r.value = all_set(ws);
    return r;
  }
  std::vector<UpperSet> qs;
  for (const Q& t : grid.values()) {
    UpperSet q = diff_quotient(f, x, u, t);
    r.samples.push_back({t, q});
    qs.push_back(q);
  }
  r.value = inf_family(ws, qs);
  // support-value Cauchy diagnostic over the last two samples
  if (qs.size() >= 2) {
    const UpperSet& a = qs[qs.size() - 2];
    const UpperSet& b = qs.back();
    Q worst = 0;
    bool infinite = false;
    for (const auto& z : ws.directions()) {
      ExtReal va = neg_support(z, a), vb = neg_support(z, b);
      if (va.finite() && vb.finite()) worst = std::max(worst, abs_q(va.value() - vb.value()));
      else if (va != vb) infinite = true;
    }
    r.diagnostic = infinite ? "support values not settled" : (worst <= f.tolerance() ? "converged" : "not converged");
  }
  return r;
}

ScalarDini scalar_dini(const SetFunction& f, const Vec& zstar, const Vec& x, const Vec& u, const TGrid& grid) {
  ExtReal phi = f.scalarize(zstar, x);
  if (phi.is_plus_inf()) return {ExtReal::minus_inf(), f.exact()};
  if (!f.exact()) {
    ExtReal best = ExtReal::plus_inf();
    for (const Q& t : grid.values()) {
      ExtReal q = residual(f.scalarize(zstar, add(x, scale(t, u))), phi);
      best = min(best, q.finite() ? ExtReal(Q(q.value() / t)) : q);
    }
    if (best.finite()) best = ExtReal(simplest_between(best.value() - f.tolerance(), best.value()));
    return {best, false};
  }
  if (is_zero(u)) return {phi.is_minus_inf() ? ExtReal::minus_inf() : ExtReal(0), true};
  if (f.exit_time(x, u) == ExtReal(0)) return {phi.is_minus_inf() ? ExtReal::minus_inf() : ExtReal::plus_inf(), true};
  if (f.variant() == SetFunction::Variant::EpiVector) {
    Vec slope;
    for (const auto& c : f.epi_vector_data()->components) slope.push_back(right_slope(c, x, u));
    return {ExtReal(Q(-dot(zstar, slope))), true};
  }
  ExtReal te = f.first_event(x, u);
  Q h = te.finite() ? Q(te.value() / 2) : Q(1);
  ExtReal next = f.scalarize(zstar, add(x, scale(h, u)));
  if (phi.is_minus_inf()) return {next.is_minus_inf() ? ExtReal::minus_inf() : ExtReal::plus_inf(), true};
  if (!next.finite()) return {next, true};
  return {ExtReal(Q((next.value() - phi.value()) / h)), true};
}

UpperSet scalarized_derivative_intersection(const SetFunction& f, const Vec& x, const Vec& u,
                                            const std::vector<Vec>& mstar, const TGrid& grid) {
  if (mstar.empty()) throw Error(ErrorCode::InvalidArgument, "direction set is empty");
  std::vector<UpperSet> hs;
  for (const auto& z : mstar) hs.push_back(level_halfspace(f.ws(), z, scalar_dini(f, z, x, u, grid).value));
  return sup_family(f.ws(), hs);
}

RegularityReport regularity_check(const SetFunction& f, const Vec& x, const Vec& u, const std::vector<Vec>& mstar,
                                  const TGrid& grid) {
  RegularityReport r;
  DerivativeResult d = set_derivative(f, x, u, grid);
  r.derivative = d.value;
  r.exact = d.exact;
  std::vector<UpperSet> hs;
  for (const auto& z : mstar) {
    ScalarDini sd = scalar_dini(f, z, x, u, grid);
    r.exact = r.exact && sd.exact;
    hs.push_back(level_halfspace(f.ws(), z, sd.value));
    if (neg_support(z, d.value) != sd.value) {
      r.SR = false;
      r.sr_failures.push_back(z);
    }
  }
  r.scalarized = sup_family(f.ws(), hs);
  r.WR = set_equal(r.derivative, r.scalarized);
  return r;
}

}  // namespace setopt
