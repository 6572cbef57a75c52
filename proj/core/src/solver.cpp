#include "liouville/solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "liouville/errors.hpp"
#include "liouville/hermite.hpp"
#include "liouville/linear.hpp"

namespace liouville {

const char* to_string(Method m) {
  switch (m) {
    case Method::classic_ps: return "classic_ps";
    case Method::liouvillian_x: return "liouvillian_x";
    case Method::liouvillian_y: return "liouvillian_y";
    case Method::liouvillian_xy: return "liouvillian_xy";
    case Method::none: break;
  }
  return "none";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::solved: return "solved";
    case Status::no_result: return "no_result";
    case Status::timeout: return "timeout";
  }
  return "no_result";
}

namespace {

struct Rows {
  Matrix a;
  Vector b;
};

// Coefficient matching for sum_k u_k * cols[k] == rhs.
void match_coefficients(const std::vector<MPoly>& cols, const MPoly& rhs, Rows& out) {
  std::set<Mono, GrlexDescending> monos;
  for (const auto& c : cols)
    for (const auto& [m, v] : c.terms()) monos.insert(m);
  for (const auto& [m, v] : rhs.terms()) monos.insert(m);
  for (Mono m : monos) {
    Vector row(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) row[k] = cols[k].coeff(m);
    out.a.push_back(std::move(row));
    out.b.push_back(rhs.coeff(m));
  }
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) { return *divide_exact(a * b, poly_gcd(a, b)); }

// Same identity with rational-function columns: clears the common
// denominator first.
void match_rational(const std::vector<RatFunc>& cols, const RatFunc& rhs, Rows& out) {
  MPoly l = rhs.den();
  for (const auto& c : cols) l = poly_lcm(l, c.den());
  std::vector<MPoly> pc;
  for (const auto& c : cols) pc.push_back(c.num() * *divide_exact(l, c.den()));
  match_coefficients(pc, rhs.num() * *divide_exact(l, rhs.den()), out);
}

// N_x + M_y
MPoly divergence(const FOODE& eq) { return -divergence_source(eq); }

IntegratingFactor assemble(RatFunc r0, const std::vector<DarbouxPair>& pairs, const Vector& exponents,
                           std::size_t offset) {
  IntegratingFactor r;
  r.r0 = std::move(r0);
  for (std::size_t i = 0; i < pairs.size(); ++i) r.factors.push_back({pairs[i].p, exponents[offset + i]});
  r.canonicalize();
  return r;
}

std::optional<IntegratingFactor> single_variable_case(const FOODE& eq, const std::vector<DarbouxPair>& pairs,
                                                      Variable v) {
  const MPoly& den = v == Variable::x ? eq.n() : eq.m();
  if (den.is_zero()) return std::nullopt;
  auto other = [v](const MPoly& f) { return v == Variable::x ? f.dy() : f.dx(); };
  const MPoly s0 = divergence(eq);
  const std::size_t k = pairs.size();

  // Stage 1: S/den must not depend on the other variable.
  const MPoly den_o = other(den);
  auto cross = [&](const MPoly& s) { return other(s) * den - s * den_o; };
  Rows r1;
  std::vector<MPoly> cols;
  for (const auto& pr : pairs) cols.push_back(cross(pr.g));
  match_coefficients(cols, -cross(s0), r1);
  auto space = solve_parametric(r1.a, r1.b, k);
  if (!space) return std::nullopt;

  // Stage 2: on that space S/den = T_0 + sum t_j T_j is univariate; its
  // integral must be rational.
  std::vector<MPoly> comps;
  MPoly t0 = s0;
  for (std::size_t i = 0; i < k; ++i) t0 += pairs[i].g.scaled(space->particular[i]);
  comps.push_back(std::move(t0));
  for (const Vector& dir : space->basis) {
    MPoly t;
    for (std::size_t i = 0; i < k; ++i) t += pairs[i].g.scaled(dir[i]);
    comps.push_back(std::move(t));
  }
  std::vector<RatFunc> fs;
  UniPoly l(Coeff(1));
  for (const MPoly& t : comps) {
    RatFunc f(t, den);
    if (v == Variable::x ? f.depends_on_y() : f.depends_on_x()) return std::nullopt;
    l = lcm(l, restrict_to(f.den(), v));
    fs.push_back(std::move(f));
  }
  AffineRational integrand;
  integrand.var = v;
  integrand.den = l;
  integrand.num.clear();
  for (const RatFunc& f : fs)
    integrand.num.push_back(restrict_to(f.num(), v) * UniPoly::exact_div(l, restrict_to(f.den(), v)));
  HermiteResult h = hermite_reduce(integrand);
  LinearConstraints lc = rationality_constraints(h);
  auto tspace = solve_parametric(lc.rows, lc.rhs, space->dimension());
  if (!tspace) return std::nullopt;
  const Vector& t = tspace->particular;

  IntegratingFactor r = assemble(-integrate_rational_part(h, t), pairs, space->point(t), 0);
  if (!verify_integrating_factor(eq, r)) return std::nullopt;
  return r;
}

std::vector<Mono> monomials_up_to(int degree) {
  std::vector<Mono> out;
  for (int d = 0; d <= degree; ++d)
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
  return out;
}

}  // namespace

std::optional<IntegratingFactor> classic_ps(const FOODE& eq, const std::vector<DarbouxPair>& pairs) {
  Rows rows;
  std::vector<MPoly> cols;
  for (const auto& pr : pairs) cols.push_back(pr.g);
  match_coefficients(cols, divergence_source(eq), rows);
  auto space = solve_parametric(rows.a, rows.b, pairs.size());
  if (!space) return std::nullopt;
  IntegratingFactor r = assemble(RatFunc(), pairs, space->particular, 0);
  if (!verify_integrating_factor(eq, r)) return std::nullopt;
  return r;
}

std::optional<IntegratingFactor> liouvillian_case_x(const FOODE& eq, const std::vector<DarbouxPair>& pairs) {
  return single_variable_case(eq, pairs, Variable::x);
}

std::optional<IntegratingFactor> liouvillian_case_y(const FOODE& eq, const std::vector<DarbouxPair>& pairs) {
  return single_variable_case(eq, pairs, Variable::y);
}

CaseOutcome liouvillian_case_xy(const FOODE& eq, const std::vector<DarbouxPair>& pairs, const AnsatzOptions& ansatz) {
  const int slack = ansatz.slack.value_or(eq.degree());
  const MPoly& m = eq.m();
  const MPoly& n = eq.n();
  const UniPoly qx = content_in_y(n);
  const UniPoly wy = m.is_zero() ? UniPoly(Coeff(1)) : content_in_x(m);
  const MPoly s0 = divergence(eq);
  const MPoly x = MPoly::x(), y = MPoly::y();

  for (int k = 1; k <= ansatz.multiplicity; ++k) {
    const UniPoly q = qx.pow(static_cast<unsigned>(k));
    const UniPoly w = wy.pow(static_cast<unsigned>(k));
    const MPoly qm = MPoly::from_x(q), wm = MPoly::from_y(w);
    const int da = q.degree() + slack;
    const int db = m.is_zero() ? -1 : w.degree() + slack;
    // N w a(x) + M q b(y) + q w sum c_i g_i = -q w (N_x + M_y)
    std::vector<MPoly> cols;
    for (int j = 0; j <= da; ++j) cols.push_back(n * wm * x.pow(static_cast<unsigned>(j)));
    for (int j = 0; j <= db; ++j) cols.push_back(m * qm * y.pow(static_cast<unsigned>(j)));
    for (const auto& pr : pairs) cols.push_back(qm * wm * pr.g);
    const std::size_t unknowns = cols.size();
    Rows rows;
    match_coefficients(cols, -(qm * wm * s0), rows);
    auto space = solve_parametric(rows.a, rows.b, unknowns);
    if (!space) continue;

    AffineRational ax, by;
    ax.var = Variable::x;
    ax.den = q;
    ax.num.assign(unknowns + 1, UniPoly());
    for (int j = 0; j <= da; ++j) ax.num[1 + j] = UniPoly::monomial(Coeff(1), j);
    by.var = Variable::y;
    by.den = w;
    by.num.assign(unknowns + 1, UniPoly());
    for (int j = 0; j <= db; ++j) by.num[1 + da + 1 + j] = UniPoly::monomial(Coeff(1), j);
    HermiteResult hx = hermite_reduce(ax), hy = hermite_reduce(by);
    LinearConstraints cx = rationality_constraints(hx), cy = rationality_constraints(hy);
    cx.rows.insert(cx.rows.end(), cy.rows.begin(), cy.rows.end());
    cx.rhs.insert(cx.rhs.end(), cy.rhs.begin(), cy.rhs.end());
    auto narrowed = intersect_constraints(*space, cx.rows, cx.rhs);
    if (!narrowed) continue;
    const Vector& values = narrowed->particular;
    RatFunc rx = integrate_rational_part(hx, values);
    RatFunc sy = integrate_rational_part(hy, values);
    IntegratingFactor r = assemble(rx + sy, pairs, values, static_cast<std::size_t>(da + 1 + db + 1));
    if (verify_integrating_factor(eq, r)) return {r, rx, sy, false};
  }
  return {std::nullopt, RatFunc(), RatFunc(), true};
}

bool verify_integrating_factor(const FOODE& eq, const IntegratingFactor& r) {
  try {
    MPoly poly = divergence(eq);
    for (const Factor& f : r.factors) {
      if (f.p.is_constant()) return false;
      auto g = cofactor(eq, f.p);
      if (!g) return false;
      poly += g->scaled(f.exponent);
    }
    return (d_operator(eq, r.r0) + RatFunc(poly)).is_zero();
  } catch (const Error&) {
    return false;
  }
}

// First integrals -------------------------------------------------------------

namespace {

std::optional<RatFunc> rational_part_of(const IntegratingFactor& r) {
  RatFunc out(1);
  for (const Factor& f : r.factors) {
    if (!f.exponent.is_rational() || !is_integer(f.exponent.rational())) return std::nullopt;
    const long e = f.exponent.rational().get_num().get_si();
    const RatFunc base(f.p);
    for (long i = 0; i < std::abs(e); ++i) out = e > 0 ? out * base : out / base;
  }
  return out;
}

}  // namespace

FirstIntegral first_integral(const FOODE& eq, const IntegratingFactor& r) {
  FirstIntegral out;
  out.factor = r;
  out.m = eq.m();
  out.n = eq.n();
  auto rr = rational_part_of(r);
  if (!rr) return out;  // algebraic factor: outside the table
  const RatFunc u = *rr * RatFunc(eq.m());
  const RatFunc v = -(*rr * RatFunc(eq.n()));
  const bool has_exp = !r.r0.is_zero();
  const RatFunc ex = r.r0.dx(), ey = r.r0.dy();

  const MPoly d = poly_lcm(u.den(), v.den());
  const MPoly g = poly_gcd(poly_gcd(d, d.dx()), d.dy());
  std::vector<MPoly> candidates{g};
  if (!(d.normalized() == g)) candidates.push_back(d);
  std::vector<MPoly> logs;
  if (!has_exp) {
    std::vector<MPoly> seeds{d};
    for (const Factor& f : r.factors) seeds.push_back(f.p);
    logs = coprime_basis(seeds);
  }
  auto excess = [](const RatFunc& f) { return f.is_zero() ? 0 : f.num().total_degree() - f.den().total_degree(); };
  const int extra = std::max({excess(u), excess(v), 0});

  for (const MPoly& b : candidates) {
    const std::vector<Mono> monos = monomials_up_to(b.total_degree() + extra + 1);
    std::vector<RatFunc> cx, cy;
    for (Mono mo : monos) {
      const RatFunc t(MPoly::monomial(Coeff(1), mo), b);
      cx.push_back(ex * t + t.dx());
      cy.push_back(ey * t + t.dy());
    }
    for (const MPoly& q : logs) {
      cx.push_back(RatFunc(q.dx(), q));
      cy.push_back(RatFunc(q.dy(), q));
    }
    Rows rows;
    match_rational(cx, u, rows);
    match_rational(cy, v, rows);
    auto space = solve_parametric(rows.a, rows.b, cx.size());
    if (!space) continue;
    const Vector& sol = space->particular;
    MPoly a;
    for (std::size_t i = 0; i < monos.size(); ++i) a.add_term(monos[i], sol[i]);
    FirstIntegral f = out;
    f.closed = true;
    f.exp_arg = r.r0;
    f.rational = RatFunc(a, b);
    for (std::size_t j = 0; j < logs.size(); ++j)
      if (!sol[monos.size() + j].is_zero()) f.logs.emplace_back(logs[j], sol[monos.size() + j]);
    if (verify_first_integral(eq, r, f)) return f;
  }
  return out;
}

bool verify_first_integral(const FOODE& eq, const IntegratingFactor& r, const FirstIntegral& f) {
  if (!f.closed) return false;
  auto rr = rational_part_of(r);
  if (!rr || !(f.exp_arg == r.r0)) return false;
  if (!f.exp_arg.is_zero() && !f.logs.empty()) return false;
  RatFunc fx = f.exp_arg.dx() * f.rational + f.rational.dx();
  RatFunc fy = f.exp_arg.dy() * f.rational + f.rational.dy();
  for (const auto& [q, k] : f.logs) {
    fx += RatFunc(q.dx().scaled(k), q);
    fy += RatFunc(q.dy().scaled(k), q);
  }
  return fx == *rr * RatFunc(eq.m()) && fy == -(*rr * RatFunc(eq.n()));
}

std::string FirstIntegral::to_string(const RenderOptions& opts) const {
  const bool compact = opts.style == RenderStyle::json_embeddable;
  const std::string times = compact ? "*" : " * ";
  auto wrap = [](const std::string& s, bool bare) { return bare ? s : "(" + s + ")"; };
  if (!closed) {
    const std::string lhs = wrap(render(m, opts), m.size() <= 1);
    const std::string rhs = wrap(render(n, opts), n.size() <= 1);
    auto differential = [](const std::string& coeff, const char* d) { return coeff == "1" ? std::string(d) : coeff + " " + d; };
    std::string form = differential(lhs, "dx") + (compact ? "-" : " - ") + differential(rhs, "dy");
    if (factor.r0.is_zero() && factor.factors.empty()) return form;
    return render(factor, opts) + times + "(" + form + ")";
  }
  std::string out;
  if (!exp_arg.is_zero()) {
    out = "exp(" + render(exp_arg, opts) + ")";
    if (!(rational == RatFunc(1))) out += times + wrap(render(rational, opts), rational.num().size() <= 1 && rational.is_polynomial());
  } else if (!rational.is_zero()) {
    out = render(rational, opts);
  }
  for (const auto& [q, k] : logs) {
    std::string term = "log(" + render(q, opts) + ")";
    Coeff mag = k.sign_hint() < 0 ? -k : k;
    if (!mag.is_one()) term = wrap(render(mag, opts), !mag.is_compound()) + (compact ? "*" : "*") + term;
    if (out.empty())
      out = (k.sign_hint() < 0 ? "-" : "") + term;
    else
      out += (k.sign_hint() < 0 ? (compact ? "-" : " - ") : (compact ? "+" : " + ")) + term;
  }
  return out.empty() ? "0" : out;
}

// Orchestration ---------------------------------------------------------------

SolveReport solve(const FOODE& eq, const SolveConfig& config) {
  using Clock = std::chrono::steady_clock;
  SolveReport rep;
  rep.degree_bound = config.max_degree;
  const Deadline deadline = Deadline::after(std::chrono::duration<double>(config.timeout_seconds));
  auto time_stage = [&](const std::string& stage, auto&& fn) {
    const auto t0 = Clock::now();
    auto result = fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    auto it = std::find_if(rep.timings_ms.begin(), rep.timings_ms.end(), [&](const auto& e) { return e.first == stage; });
    if (it == rep.timings_ms.end())
      rep.timings_ms.emplace_back(stage, ms);
    else
      it->second += ms;
    return result;
  };
  auto note = [&](std::string s) {
    if (std::find(rep.notes.begin(), rep.notes.end(), s) == rep.notes.end()) rep.notes.push_back(std::move(s));
  };

  std::vector<Method> order;
  switch (config.cases) {
    case CaseSelection::automatic:
      order = {Method::classic_ps, Method::liouvillian_x, Method::liouvillian_y, Method::liouvillian_xy};
      break;
    case CaseSelection::ps: order = {Method::classic_ps}; break;
    case CaseSelection::x: order = {Method::liouvillian_x}; break;
    case CaseSelection::y: order = {Method::liouvillian_y}; break;
    case CaseSelection::xy: order = {Method::liouvillian_xy}; break;
  }

  DarbouxOptions dopt;
  dopt.system.deadline = deadline;
  DarbouxSearch search;
  std::size_t tried_with = static_cast<std::size_t>(-1);
  try {
    for (int d = 1; d <= config.max_degree && rep.status != Status::solved; ++d) {
      time_stage("darboux", [&] {
        extend_darboux(eq, search, d, dopt);
        return 0;
      });
      rep.darboux = search.pairs;
      if (search.timed_out) {
        rep.status = Status::timeout;
        break;
      }
      // Nothing new at this degree: the cases would repeat the last attempt.
      if (search.pairs.size() == tried_with) continue;
      tried_with = search.pairs.size();
      for (Method method : order) {
        deadline.check();
        std::optional<IntegratingFactor> f;
        switch (method) {
          case Method::classic_ps:
            f = time_stage("classic_ps", [&] { return classic_ps(eq, search.pairs); });
            break;
          case Method::liouvillian_x:
            f = time_stage("liouvillian_x", [&] { return liouvillian_case_x(eq, search.pairs); });
            break;
          case Method::liouvillian_y:
            f = time_stage("liouvillian_y", [&] { return liouvillian_case_y(eq, search.pairs); });
            break;
          case Method::liouvillian_xy: {
            CaseOutcome o = time_stage("liouvillian_xy", [&] { return liouvillian_case_xy(eq, search.pairs, config.ansatz); });
            if (o.ansatz_exhausted)
              note("liouvillian_xy: ansatz exhausted (raise --ansatz-mult or --ansatz-slack)");
            if (o.factor) rep.r0_split = std::make_pair(o.r, o.s);
            f = std::move(o.factor);
            break;
          }
          case Method::none: break;
        }
        if (!f) continue;
        rep.verified = time_stage("verify", [&] { return verify_integrating_factor(eq, *f); });
        if (!rep.verified) {
          note(std::string(to_string(method)) + ": candidate failed verification");
          continue;
        }
        rep.status = Status::solved;
        rep.method = method;
        rep.factor = std::move(f);
        rep.degree_used = d;
        break;
      }
    }
  } catch (const Timeout&) {
    rep.status = Status::timeout;
  }
  for (const auto& n : search.notes) note(n);
  if (rep.status == Status::solved && config.want_first_integral)
    rep.first_integral = time_stage("first_integral", [&] { return first_integral(eq, *rep.factor); });
  if (rep.status != Status::solved) rep.verified = false;
  return rep;
}

}  // namespace liouville
