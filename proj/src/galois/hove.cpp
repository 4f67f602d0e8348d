#include "swing/galois/hove.hpp"

#include <string>

#include "swing/error.hpp"

namespace swing {

namespace {

PolySeries lift(const RationalSeries& s) { return convert<Poly>(s); }

RationalSeries solution_series(const FrobeniusSolution& s) {
  return shift(s.series, static_cast<int>(s.exponent.get_num().get_si()));
}

bool is_exact_zero(const PolySeries& s) { return s.is_zero() && s.is_exact(); }

// Sum over a list of products, skipping exact zeros.
PolySeries add(const PolySeries& acc, const PolySeries& a, const PolySeries& b) {
  if (is_exact_zero(a) || is_exact_zero(b)) return acc;
  return acc + a * b;
}

Rational constant_wronskian(const RationalSeries& w, const char* block) {
  for (int n = w.lowest_exponent(); n < w.order(); ++n)
    if (n != 0 && w.coefficient(n) != 0) throw std::logic_error(std::string(block) + " Wronskian is not constant");
  if (w.order() <= 0) throw TruncationError(std::string(block) + " Wronskian is not certified");
  const Rational c = w.coefficient(0);
  if (c == 0) throw std::logic_error(std::string(block) + " Frobenius pair is degenerate");
  return c;
}

}  // namespace

int default_hove_budget(int max_order) { return 3 * max_order + 9; }

HoveEngine::HoveEngine(const Rational& k, const Rational& energy, int budget)
    : k_(k), a_(-k), energy_(energy), budget_(budget) {
  if (k == 0) throw DomainError("the higher-order pipeline needs k != 0");
  if (budget < 8) throw std::invalid_argument("budget must be at least 8 terms");
  const PendulumParams params{k_, a_, energy_};
  invariants_ = invariants_from_params(params);
  if (invariants_.degenerate()) throw DomainError("degenerate energy: discriminant vanishes at E = " + to_string(energy_));
  if (k_ * k_ - 4 * a_ > 0 && invariants_.discriminant < 0)
    throw DomainError("E = " + to_string(energy_) + " lies outside the critical energy interval");

  const int wp_terms = budget_ / 2 + 4;
  const OrbitSeries orbit = particular_orbit_series(params, wp_terms);
  r0_ = orbit.r;
  p_r0_ = orbit.p_r;
  w0_ = invert(r0_);
  const RationalSeries wp = wp_series(invariants_.g2, invariants_.g3, wp_terms);
  const RationalSeries one = RationalSeries::monomial(Rational(1), 0);

  tangential_ = frobenius_basis(SeriesODE{RationalSeries(), -scale(wp, Rational(12))}, budget_);
  normal_ = frobenius_basis(SeriesODE{RationalSeries(), -(scale(wp, Rational(6)) + scale(one, Rational(k_ / 2)))}, budget_);
  if (tangential_.log_flag != LogFlag::kNoLog || normal_.log_flag != LogFlag::kNoLog)
    throw std::logic_error("first variational equations acquired a logarithm");

  const RationalSeries ua = solution_series(tangential_.first), ub = solution_series(tangential_.second);
  tangential_pair_ = {ua, ub, derivative(ua), derivative(ub), Rational(0)};
  tangential_pair_.wronskian = constant_wronskian(ua * tangential_pair_.zb - ub * tangential_pair_.za, "tangential");

  // Theta = Phi / r0, P_Theta = r0 Phi' - r0' Phi
  const RationalSeries fa = solution_series(normal_.first), fb = solution_series(normal_.second);
  normal_pair_ = {fa * w0_, fb * w0_, r0_ * derivative(fa) - p_r0_ * fa, r0_ * derivative(fb) - p_r0_ * fb, Rational(0)};
  normal_pair_.wronskian = constant_wronskian(normal_pair_.ya * normal_pair_.zb - normal_pair_.yb * normal_pair_.za, "normal");

  const RationalSeries zero;
  ve1_.entries = {{{zero, one, zero, zero},
                   {scale(r0_ - one, Rational(2 * a_)) - scale(one, k_), zero, zero, zero},
                   {zero, zero, zero, w0_ * w0_},
                   {zero, zero, -r0_, zero}}};
}

void HoveEngine::init_first_order() {
  const auto& t = tangential_pair_;
  const auto& n = normal_pair_;
  const Poly c1 = Poly::variable(0), c2 = Poly::variable(1), c3 = Poly::variable(2), c4 = Poly::variable(3);
  state_[1] = {scale(lift(t.ya), c1) + scale(lift(t.yb), c2), scale(lift(t.za), c1) + scale(lift(t.zb), c2),
               scale(lift(n.ya), c3) + scale(lift(n.yb), c4), scale(lift(n.za), c3) + scale(lift(n.zb), c4)};
  cos_[1] = PolySeries();
  sin_[1] = PolySeries();  // theta_1 added in finalize
}

std::array<PolySeries, 3> HoveEngine::compute_forcing(int j) {
  const auto& R = [this](int i) -> const PolySeries& { return state_[static_cast<std::size_t>(i)][0]; };
  const auto& TH = [this](int i) -> const PolySeries& { return state_[static_cast<std::size_t>(i)][2]; };
  const auto& PT = [this](int i) -> const PolySeries& { return state_[static_cast<std::size_t>(i)][3]; };
  const auto at = [](std::vector<PolySeries>& v, int i) -> PolySeries& { return v[static_cast<std::size_t>(i)]; };

  // cos and the theta_j-free part of sin via d/d(eps) cos = -sin theta', d/d(eps) sin = cos theta'
  PolySeries c, s_partial;
  for (int i = 1; i < j; ++i) {
    const PolySeries weighted = scale(TH(i), Rational(Rational(i) / Rational(j)));
    c = add(c, weighted, at(sin_, j - i));
    s_partial = add(s_partial, weighted, at(cos_, j - i));
  }
  at(cos_, j) = -c;

  PolySeries pt2;
  for (int i = 1; i < j; ++i) pt2 = add(pt2, PT(i), PT(j - i));
  at(pt2_, j) = pt2;

  PolySeries f_pr = at(cos_, j), rr, f_th, rs;
  for (int m = 2; m <= j; ++m) f_pr = add(f_pr, at(pt2_, m), at(w3_, j - m));
  for (int i = 1; i < j; ++i) {
    rr = add(rr, R(i), R(j - i));
    f_th = add(f_th, PT(i), at(w2_, j - i));
    rs = add(rs, R(i), at(sin_, j - i));
  }
  f_pr = f_pr + scale(rr, a_);
  const PolySeries f_pth = -(lift(r0_) * s_partial + rs);
  at(sin_, j) = s_partial;  // theta_j added in finalize
  return {f_pr, f_th, f_pth};
}

void HoveEngine::finalize(int j) {
  const auto idx = [](int i) { return static_cast<std::size_t>(i); };
  sin_[idx(j)] = sin_[idx(j)] + state_[idx(j)][2];
  if (j + 1 >= static_cast<int>(state_.size())) return;  // 1/r terms of order j are read from order j+1 on
  PolySeries sum;
  for (int i = 1; i <= j; ++i) sum = add(sum, state_[idx(i)][0], w_[idx(j - i)]);
  w_[idx(j)] = -(w_[0] * sum);
  PolySeries w2, w3;
  for (int i = 0; i <= j; ++i) w2 = add(w2, w_[idx(i)], w_[idx(j - i)]);
  w2_[idx(j)] = w2;
  for (int i = 0; i <= j; ++i) w3 = add(w3, w2_[idx(i)], w_[idx(j - i)]);
  w3_[idx(j)] = w3;
}

std::pair<std::array<PolySeries, 2>, std::array<Poly, 2>> HoveEngine::vary_constants(const Pair& pair, const PolySeries& f_y,
                                                                                     const PolySeries& f_z, int j, const char* block) {
  const Rational inv = 1 / pair.wronskian;
  PolySeries da, db;
  da = add(da, lift(pair.zb), f_y);
  da = add(da, lift(-pair.yb), f_z);
  db = add(db, lift(-pair.za), f_y);
  db = add(db, lift(pair.ya), f_z);
  da = scale(da, inv);
  db = scale(db, inv);
  Antiderivative<Poly> ca, cb;
  try {
    ca = integrate(da);
    cb = integrate(db);
  } catch (const TruncationError&) {
    throw TruncationError("budget of " + std::to_string(budget_) + " terms cannot certify the " + block + " residues at order " +
                          std::to_string(j));
  }
  const PolySeries y = ca.series * lift(pair.ya) + cb.series * lift(pair.yb);
  const PolySeries z = ca.series * lift(pair.za) + cb.series * lift(pair.zb);
  return {{y, z}, {ca.residue, cb.residue}};
}

HoveReport HoveEngine::run(int max_order) {
  if (max_order < 2) throw std::invalid_argument("max_order must be at least 2");
  const auto size = static_cast<std::size_t>(max_order + 1);
  state_.assign(size, {});
  forcing_.assign(size, {});
  for (auto* v : {&w_, &w2_, &w3_, &pt2_, &sin_, &cos_}) v->assign(size, PolySeries());
  w_[0] = lift(w0_);
  w2_[0] = lift(w0_ * w0_);
  w3_[0] = lift(w0_ * w0_ * w0_);
  cos_[0] = PolySeries::monomial(Poly(Rational(1)), 0);

  HoveReport report;
  report.k = k_;
  report.energy = energy_;
  report.max_order = max_order;
  report.budget = budget_;
  report.invariants = invariants_;
  report.tangential_wronskian = tangential_pair_.wronskian;
  report.normal_wronskian = normal_pair_.wronskian;

  init_first_order();
  finalize(1);
  for (int j = 2; j <= max_order; ++j) {
    const auto f = compute_forcing(j);
    forcing_[static_cast<std::size_t>(j)] = f;
    const auto [tangential, t_res] = vary_constants(tangential_pair_, PolySeries(), f[0], j, "tangential");
    const auto [normal, n_res] = vary_constants(normal_pair_, f[1], f[2], j, "normal");
    state_[static_cast<std::size_t>(j)] = {tangential[0], tangential[1], normal[0], normal[1]};

    HoveOrderReport order;
    order.order = j;
    order.residues = {t_res[0], t_res[1], n_res[0], n_res[1]};
    for (const auto& r : order.residues) order.obstruction = order.obstruction || !r.is_zero();
    const auto vr = tangential[0].valuation(), vt = normal[0].valuation();
    if (!vr || !vt)
      throw TruncationError("budget of " + std::to_string(budget_) + " terms cannot certify the valuations at order " + std::to_string(j));
    order.valuation_r = *vr;
    order.valuation_theta = *vt;
    report.orders.push_back(order);
    if (order.obstruction) {
      report.obstruction = true;
      report.first_obstruction_order = j;
      break;  // higher orders would need logarithms
    }
    finalize(j);
  }
  return report;
}

HoveReport hove_obstruction(const Rational& k, const Rational& energy, int max_order, int budget) {
  if (max_order < 2) throw std::invalid_argument("max_order must be at least 2");
  HoveEngine engine(k, energy, budget > 0 ? budget : default_hove_budget(max_order));
  return engine.run(max_order);
}

}  // namespace swing
