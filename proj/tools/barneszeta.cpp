// barneszeta: command-line front end for the multiple (Barnes) Hurwitz zeta
// library. Subcommands: reduce | eval | deriv | find-zero | grid |
// kummer-check | stieltjes.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (pole, bad bracket,
// malformed input, unapproximable value), 3 convergence/overflow failure.
//
// All floating-point output uses 17 significant digits; identical invocations
// produce identical bytes (fixed summation orders, ordered containers).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "barnes/barnes.hpp"

using namespace barnes;

namespace {

struct CliConfig {
  double tol = 1e-10;
  long terms = -1;  // -1: module default
  long max_den = 1000000;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "target tolerance");
  sub->add_option("--terms", cfg.terms,
                  "series length override (meaning depends on subcommand)");
  sub->add_option("--max-den", cfg.max_den,
                  "max denominator when rationalizing real inputs");
  sub->add_option("--format", cfg.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", cfg.out, "write output to FILE instead of stdout");
}

void emit(const CliConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + cfg.out);
  f << payload;
}

// "a/b", integer, or decimal; decimals whose exact form exceeds max_den are
// replaced by the best rational approximation with denominator <= max_den.
Rational parse_x(const std::string& text, long max_den) {
  const Rational exact = parse_rational(text);
  if (exact.den() <= BigInt(max_den)) return exact;
  return best_rational(exact.as_double(), max_den);
}

PeriodVector parse_periods(const std::string& csv, long max_den) {
  std::vector<Rational> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(parse_x(item, max_den));
  if (parts.empty()) throw DomainError("empty period list");
  return PeriodVector(std::move(parts));
}

// "re" or "re,im"
Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)),
                   std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw DomainError("malformed complex number: " + text +
                      " (expected re or re,im)");
  }
}

std::string fmt(double v) { return format_double17(v); }

std::string fmt_complex(const Complex& z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

// ---------------------------------------------------------------------------
// Stieltjes cache persistence (BARNES_ZETA_CACHE_DIR)
// ---------------------------------------------------------------------------

std::string stieltjes_cache_path() {
  const char* dir = std::getenv("BARNES_ZETA_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/stieltjes.cache";
}

void load_stieltjes_cache(const EvalContext& ctx) {
  const std::string path = stieltjes_cache_path();
  if (path.empty()) return;
  std::ifstream f(path);
  if (!f) return;
  std::string header;
  if (!std::getline(f, header) || header != "BZCACHE v1") return;
  int n = 0;
  long num = 0, den = 0;
  double value = 0.0;
  std::lock_guard<std::mutex> lock(ctx.stieltjes_mutex);
  while (f >> n >> num >> den >> value)
    ctx.stieltjes_cache.emplace(EvalContext::StieltjesKey{n, num, den}, value);
}

void save_stieltjes_cache(const EvalContext& ctx) {
  const std::string path = stieltjes_cache_path();
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) return;  // cache is best-effort
  f << "BZCACHE v1\n";
  std::lock_guard<std::mutex> lock(ctx.stieltjes_mutex);
  for (const auto& [key, value] : ctx.stieltjes_cache)
    f << std::get<0>(key) << ' ' << std::get<1>(key) << ' '
      << std::get<2>(key) << ' ' << fmt(value) << '\n';
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

std::string render_symbolic(const SymbolicHurwitzDecomposition& d) {
  std::string body;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    const auto& t = d.terms[i];
    if (i > 0) body += " + ";
    const RationalPolynomial arg =
        RationalPolynomial::linear(t.shift, Rational(1) / d.w);
    const bool unit_coeff = t.coeff.degree() == 0 &&
                            t.coeff.coeff(0) == Rational(1);
    if (!unit_coeff) body += "(" + t.coeff.str("x") + ")*";
    body += "zeta(s";
    if (t.k > 0) body += "-" + std::to_string(t.k);
    body += ", " + arg.str("x") + ")";
  }
  if (d.w == Rational(1)) return body;
  return d.w.str() + "^(-s)*(" + body + ")";
}

Json symbolic_to_json(const SymbolicHurwitzDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    Json coeffs = Json::array();
    for (long i = 0; i <= t.coeff.degree(); ++i)
      coeffs.push_back(rational_to_json(t.coeff.coeff(i)));
    terms.push_back(Json{{"k", t.k},
                         {"shift", rational_to_json(t.shift)},
                         {"coeff", coeffs}});
  }
  return Json{{"N", d.N},
              {"w", rational_to_json(d.w)},
              {"symbolic", true},
              {"terms", terms}};
}

int cmd_reduce(unsigned N, const std::string& x_text, const std::string& w_text,
               const CliConfig& cfg) {
  const PeriodVector w = parse_periods(w_text, cfg.max_den);
  if (x_text == "sym") {
    const SymbolicHurwitzDecomposition d = decompose_symbolic(N, w);
    if (cfg.format == "json")
      emit(cfg, symbolic_to_json(d).dump(2) + "\n");
    else if (cfg.format == "csv")
      throw DomainError("csv format is not defined for symbolic reduce");
    else
      emit(cfg, render_symbolic(d) + "\n");
    return 0;
  }
  const Rational x = parse_x(x_text, cfg.max_den);
  const HurwitzDecomposition d = decompose(N, x, w);
  if (cfg.format == "json") {
    emit(cfg, decomposition_to_json(d).dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::string out = "k,y,coeff\n";
    for (const auto& t : d.terms)
      out += std::to_string(t.k) + "," + t.y.str() + "," + t.coeff.str() + "\n";
    emit(cfg, out);
  } else {
    std::string out = "w = " + d.w.str() + "\n";
    for (const auto& t : d.terms)
      out += "k=" + std::to_string(t.k) + "  y=" + t.y.str() +
             "  coeff=" + t.coeff.str() + "\n";
    emit(cfg, out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(unsigned N, const std::string& s_text, const std::string& x_text,
             const std::string& w_text, const CliConfig& cfg) {
  EvalContext ctx;
  ctx.target_tol = cfg.tol;
  if (cfg.terms > 0) ctx.em_terms = static_cast<int>(cfg.terms);
  const Complex s = parse_complex(s_text);
  const Rational x = parse_x(x_text, cfg.max_den);
  const PeriodVector w = parse_periods(w_text, cfg.max_den);
  const HurwitzDecomposition d = decompose(N, x, w);
  detail::guard_barnes_poles(s, N);

  Complex acc(0.0, 0.0);
  double abs_sum = 0.0;
  for (const auto& t : d.terms) {
    const Complex z = hurwitz_zeta(
        s - Complex(static_cast<double>(t.k), 0.0), t.y.as_double(), ctx);
    acc += t.coeff.as_double() * z;
    abs_sum += std::abs(t.coeff.as_double() * z);
  }
  const Complex prefactor = std::exp(-s * std::log(d.w.as_double()));
  const Complex value = prefactor * acc;
  const double est_error =
      std::abs(prefactor) * abs_sum * 5e-15 + 1e-16;

  if (cfg.format == "json") {
    Json j{{"N", N},
           {"s", Json{{"re", s.real()}, {"im", s.imag()}}},
           {"x", rational_to_json(x)},
           {"value", Json{{"re", value.real()}, {"im", value.imag()}}},
           {"est_error", est_error}};
    emit(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, "s,x,value\n" + fmt(s.real()) + "," + fmt(x.as_double()) + "," +
                  fmt(value.real()) + "\n");
  } else {
    emit(cfg, "value = " + fmt_complex(value) +
                  "\nestimated_error = " + fmt(est_error) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// deriv
// ---------------------------------------------------------------------------

int cmd_deriv(unsigned N, int n, int ell, const std::string& x_text,
              const std::string& w_text, const CliConfig& cfg) {
  EvalContext ctx;
  ctx.target_tol = cfg.tol;
  if (cfg.terms > 0) ctx.stieltjes_terms = cfg.terms;
  load_stieltjes_cache(ctx);
  const Rational x = parse_x(x_text, cfg.max_den);
  const PeriodVector w = parse_periods(w_text, cfg.max_den);
  const double value = barnes_deriv_nonpos(n, ell, N, x, w, ctx);
  const bool have_exact = (n == 0);
  Rational exact;
  if (have_exact) exact = barnes_value_nonpos(N, ell, x, w);
  save_stieltjes_cache(ctx);

  if (cfg.format == "json") {
    Json j{{"N", N}, {"n", n}, {"l", ell}, {"value", value}};
    if (have_exact) j["exact"] = rational_to_json(exact);
    emit(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, "n,l,value\n" + std::to_string(n) + "," + std::to_string(ell) +
                  "," + fmt(value) + "\n");
  } else {
    std::string out = "value = " + fmt(value) + "\n";
    if (have_exact) out += "exact = " + exact.str() + "\n";
    emit(cfg, out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// find-zero
// ---------------------------------------------------------------------------

int cmd_find_zero(unsigned N, const std::string& x_text,
                  const std::string& w_text, double s_lo, double s_hi,
                  const CliConfig& cfg) {
  EvalContext ctx;
  ctx.target_tol = cfg.tol;
  for (unsigned j = 1; j <= N; ++j)
    if (s_lo <= static_cast<double>(j) && static_cast<double>(j) <= s_hi)
      throw PoleError("bracket [" + fmt(s_lo) + ", " + fmt(s_hi) +
                      "] contains the pole s = " + std::to_string(j));
  const Rational x = parse_x(x_text, cfg.max_den);
  const PeriodVector w = parse_periods(w_text, cfg.max_den);
  const HurwitzDecomposition d = decompose(N, x, w);
  const auto f = [&](double s) {
    return eval_decomposition(d, Complex(s, 0.0), ctx).real();
  };
  const RootResult r = brent_find_root(f, s_lo, s_hi, cfg.tol);
  if (!(std::fabs(r.residual) <= std::max(cfg.tol, 1e-9)))
    throw ConvergenceError("root residual " + fmt(r.residual) +
                               " exceeds tolerance",
                           std::fabs(r.residual));

  if (cfg.format == "json") {
    Json j{{"s_root", r.root},
           {"residual", r.residual},
           {"bracket", Json::array({s_lo, s_hi})},
           {"iterations", r.iterations}};
    emit(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    emit(cfg, "s_root,residual,iterations\n" + fmt(r.root) + "," +
                  fmt(r.residual) + "," + std::to_string(r.iterations) + "\n");
  } else {
    emit(cfg, "s_root = " + fmt(r.root) + "\nresidual = " + fmt(r.residual) +
                  "\nbracket = [" + fmt(s_lo) + ", " + fmt(s_hi) +
                  "]\niterations = " + std::to_string(r.iterations) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// grid
// ---------------------------------------------------------------------------

int cmd_grid(const std::string& kind, const std::string& x_text, double lo1,
             double hi1, double lo2, double hi2, int steps1, int steps2,
             const CliConfig& cfg) {
  EvalContext ctx;
  ctx.target_tol = cfg.tol;

  if (kind == "zeta2_at0" || kind == "zeta2_deriv_at0") {
    const Rational x = parse_x(x_text, cfg.max_den);
    const int order = (kind == "zeta2_at0") ? 0 : 1;
    const Zeta0Grid g = barnes_zeta0_grid(order, x, lo1, hi1, lo2, hi2,
                                          steps1, steps2, cfg.max_den, ctx);
    if (cfg.format == "json")
      emit(cfg, grid_to_json(g).dump(2) + "\n");
    else
      emit(cfg, grid_to_csv(g));  // csv and text coincide for grids
    return 0;
  }

  if (kind != "zeta2_surface" && kind != "zeta3_surface")
    throw DomainError(
        "grid kind must be one of zeta2_surface, zeta2_at0, "
        "zeta2_deriv_at0, zeta3_surface");

  // Surfaces over (s, x) at fixed periods (1, 1/2[, 1/3]).
  const unsigned N = (kind == "zeta2_surface") ? 2 : 3;
  const PeriodVector w =
      (N == 2) ? PeriodVector{Rational(1), Rational(1, 2)}
               : PeriodVector{Rational(1), Rational(1, 2), Rational(1, 3)};
  std::vector<double> s_nodes(steps1), x_nodes(steps2);
  for (int i = 0; i < steps1; ++i)
    s_nodes[i] = lo1 + (i + 0.5) * (hi1 - lo1) / steps1;
  for (int j = 0; j < steps2; ++j)
    x_nodes[j] = lo2 + (j + 0.5) * (hi2 - lo2) / steps2;

  std::vector<std::vector<double>> values(steps2,
                                          std::vector<double>(steps1));
  for (int j = 0; j < steps2; ++j) {
    const Rational xr = best_rational(x_nodes[j], cfg.max_den);
    const HurwitzDecomposition d = decompose(N, xr, w);
    for (int i = 0; i < steps1; ++i)
      values[j][i] =
          eval_decomposition(d, Complex(s_nodes[i], 0.0), ctx).real();
  }

  if (cfg.format == "json") {
    Json rows = Json::array();
    for (int j = 0; j < steps2; ++j) {
      Json row = Json::array();
      for (int i = 0; i < steps1; ++i) row.push_back(values[j][i]);
      rows.push_back(std::move(row));
    }
    emit(cfg,
         Json{{"s", s_nodes}, {"x", x_nodes}, {"values", rows}}.dump(2) +
             "\n");
  } else {
    std::string out = "s,x,value\n";
    for (int j = 0; j < steps2; ++j)
      for (int i = 0; i < steps1; ++i)
        out += fmt(s_nodes[i]) + "," + fmt(x_nodes[j]) + "," +
               fmt(values[j][i]) + "\n";
    emit(cfg, out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// kummer-check
// ---------------------------------------------------------------------------

int cmd_kummer_check(unsigned N, const std::string& x_text, bool allow_n1,
                     bool tol_given, const CliConfig& cfg) {
  if (N == 1 && !allow_n1) {
    std::cerr << "error: N=1 is conditionally convergent at desk scale; "
                 "pass --allow-n1 to run it anyway\n";
    return 1;
  }
  EvalContext ctx;
  // Fourier tails decay like log(T)/T^(N-1): 1e-10 is not reachable, so the
  // gate tolerance defaults to 1e-4 here unless --tol was given explicitly.
  const double tol = tol_given ? cfg.tol : 1e-4;
  ctx.target_tol = tol;
  load_stieltjes_cache(ctx);
  const std::size_t terms =
      cfg.terms > 0 ? static_cast<std::size_t>(cfg.terms) : 1000000u;
  const double x = parse_x(x_text, cfg.max_den).as_double();
  const double lhs = kummer_lhs(N, x, ctx);
  const KummerSum rhs = kummer_rhs(N, x, terms, ctx);
  save_stieltjes_cache(ctx);
  const double defect = std::fabs(lhs - rhs.value);
  const bool pass = rhs.tail_bound <= tol && defect <= rhs.tail_bound + tol;

  if (cfg.format == "json") {
    Json j{{"N", N},           {"lhs", lhs},
           {"rhs", rhs.value}, {"tail_bound", rhs.tail_bound},
           {"defect", defect}, {"pass", pass}};
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, "lhs = " + fmt(lhs) + "\nrhs = " + fmt(rhs.value) +
                  "\ntail_bound = " + fmt(rhs.tail_bound) +
                  "\ndefect = " + fmt(defect) + "\nstatus = " +
                  (pass ? "PASS" : "FAIL") + "\n");
  }
  if (!pass)
    std::cerr << "kummer-check failed: defect " << fmt(defect)
              << " vs tail bound " << fmt(rhs.tail_bound) << " + tol "
              << fmt(tol) << "\n";
  return pass ? 0 : 3;
}

// ---------------------------------------------------------------------------
// stieltjes
// ---------------------------------------------------------------------------

int cmd_stieltjes(int n_max, const std::string& x_text, const CliConfig& cfg) {
  EvalContext ctx;
  ctx.target_tol = cfg.tol;
  if (cfg.terms > 0) ctx.stieltjes_terms = cfg.terms;
  load_stieltjes_cache(ctx);
  const Rational x = parse_x(x_text, cfg.max_den);
  std::vector<double> values(n_max + 1);
  for (int n = 0; n <= n_max; ++n) values[n] = stieltjes(n, x, ctx);
  save_stieltjes_cache(ctx);

  if (cfg.format == "json") {
    emit(cfg,
         Json{{"x", rational_to_json(x)}, {"values", values}}.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::string out = "n,value\n";
    for (int n = 0; n <= n_max; ++n)
      out += std::to_string(n) + "," + fmt(values[n]) + "\n";
    emit(cfg, out);
  } else {
    std::string out;
    for (int n = 0; n <= n_max; ++n)
      out += "gamma_" + std::to_string(n) + "(" + x.str() +
             ") = " + fmt(values[n]) + "\n";
    emit(cfg, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "multiple (Barnes) Hurwitz zeta calculator: rational periods, exact "
      "values and s-derivatives at non-positive integers, Stieltjes "
      "constants, multiple gamma functions"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::function<int()> run;

  // reduce
  {
    auto* sub = app.add_subcommand(
        "reduce", "decompose zeta_N(s, x | w) into ordinary Hurwitz zetas");
    auto N = std::make_shared<unsigned>(1);
    auto x = std::make_shared<std::string>("sym");
    auto w = std::make_shared<std::string>();
    sub->add_option("-N", *N, "number of periods")->required();
    sub->add_option("-x", *x, "rational x, or 'sym' for symbolic coefficients");
    sub->add_option("-w", *w, "comma-separated periods")->required();
    add_common(sub, cfg);
    sub->callback([&, N, x, w] {
      run = [&, N, x, w] { return cmd_reduce(*N, *x, *w, cfg); };
    });
  }

  // eval
  {
    auto* sub = app.add_subcommand(
        "eval", "evaluate zeta_N(s, x | w) at a (possibly complex) point");
    auto N = std::make_shared<unsigned>(1);
    auto s = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    sub->add_option("-N", *N, "number of periods")->required();
    sub->add_option("-s", *s, "evaluation point: re or re,im")->required();
    sub->add_option("-x", *x, "shift parameter x > 0")->required();
    sub->add_option("-w", *w, "comma-separated periods")->required();
    add_common(sub, cfg);
    sub->callback([&, N, s, x, w] {
      run = [&, N, s, x, w] { return cmd_eval(*N, *s, *x, *w, cfg); };
    });
  }

  // deriv
  {
    auto* sub = app.add_subcommand(
        "deriv", "d^n/ds^n zeta_N(s, x | w) at s = -l (exact lane for n=0)");
    auto N = std::make_shared<unsigned>(1);
    auto n = std::make_shared<int>(0);
    auto ell = std::make_shared<int>(0);
    auto x = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    sub->add_option("-N", *N, "number of periods")->required();
    sub->add_option("-n", *n, "derivative order (0..5)");
    sub->add_option("-l", *ell, "evaluate at s = -l (0..4)");
    sub->add_option("-x", *x, "shift parameter x > 0")->required();
    sub->add_option("-w", *w, "comma-separated periods")->required();
    add_common(sub, cfg);
    sub->callback([&, N, n, ell, x, w] {
      run = [&, N, n, ell, x, w] {
        return cmd_deriv(*N, *n, *ell, *x, *w, cfg);
      };
    });
  }

  // find-zero
  {
    auto* sub = app.add_subcommand(
        "find-zero", "locate a real zero of zeta_N(s, x | w) in a bracket");
    auto N = std::make_shared<unsigned>(1);
    auto x = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    auto lo = std::make_shared<double>(0.0);
    auto hi = std::make_shared<double>(0.0);
    sub->add_option("-N", *N, "number of periods")->required();
    sub->add_option("-x", *x, "shift parameter x > 0")->required();
    sub->add_option("-w", *w, "comma-separated periods")->required();
    sub->add_option("--s-lo", *lo, "bracket lower end")->required();
    sub->add_option("--s-hi", *hi, "bracket upper end")->required();
    add_common(sub, cfg);
    sub->callback([&, N, x, w, lo, hi] {
      run = [&, N, x, w, lo, hi] {
        return cmd_find_zero(*N, *x, *w, *lo, *hi, cfg);
      };
    });
  }

  // grid
  {
    auto* sub = app.add_subcommand(
        "grid",
        "emit grid data: zeta2_surface/zeta3_surface over (s, x), or "
        "zeta2_at0/zeta2_deriv_at0 over (w1, w2); rows grouped by the "
        "second axis");
    auto kind = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>("1/10");
    auto lo1 = std::make_shared<double>(std::nan(""));
    auto hi1 = std::make_shared<double>(std::nan(""));
    auto lo2 = std::make_shared<double>(std::nan(""));
    auto hi2 = std::make_shared<double>(std::nan(""));
    auto st1 = std::make_shared<int>(0);
    auto st2 = std::make_shared<int>(0);
    sub->add_option("--kind", *kind,
                    "zeta2_surface | zeta2_at0 | zeta2_deriv_at0 | "
                    "zeta3_surface")
        ->required();
    sub->add_option("-x", *x, "shift parameter (at0 kinds; default 1/10)");
    sub->add_option("--lo1", *lo1, "first-axis lower bound");
    sub->add_option("--hi1", *hi1, "first-axis upper bound");
    sub->add_option("--lo2", *lo2, "second-axis lower bound");
    sub->add_option("--hi2", *hi2, "second-axis upper bound");
    sub->add_option("--steps1", *st1, "first-axis steps");
    sub->add_option("--steps2", *st2, "second-axis steps");
    add_common(sub, cfg);
    sub->callback([&, kind, x, lo1, hi1, lo2, hi2, st1, st2] {
      run = [&, kind, x, lo1, hi1, lo2, hi2, st1, st2] {
        const bool surface = kind->find("surface") != std::string::npos;
        // defaults: surfaces s in (-2,1) x in (0,1) 50x50;
        //           w-grids (0,1)^2 25x25
        const double d_lo1 = surface ? -2.0 : 0.0;
        const double d_hi1 = 1.0;
        const double d_lo2 = 0.0;
        const double d_hi2 = 1.0;
        const int d_steps = surface ? 50 : 25;
        return cmd_grid(*kind, *x, std::isnan(*lo1) ? d_lo1 : *lo1,
                        std::isnan(*hi1) ? d_hi1 : *hi1,
                        std::isnan(*lo2) ? d_lo2 : *lo2,
                        std::isnan(*hi2) ? d_hi2 : *hi2,
                        *st1 > 0 ? *st1 : d_steps, *st2 > 0 ? *st2 : d_steps,
                        cfg);
      };
    });
  }

  // kummer-check
  {
    auto* sub = app.add_subcommand(
        "kummer-check",
        "verify the multiple-gamma log identity: alternating gamma sum vs "
        "Fourier series");
    auto N = std::make_shared<unsigned>(2);
    auto x = std::make_shared<std::string>("1/2");
    auto allow_n1 = std::make_shared<bool>(false);
    sub->add_option("-N", *N, "identity depth (>= 2; N=1 needs --allow-n1)")
        ->required();
    sub->add_option("-x", *x, "argument in (0, 1]");
    sub->add_flag("--allow-n1", *allow_n1,
                  "run the conditionally convergent N=1 identity");
    add_common(sub, cfg);
    auto* tol_opt = sub->get_option_no_throw("--tol");
    sub->callback([&, N, x, allow_n1, tol_opt] {
      run = [&, N, x, allow_n1, tol_opt] {
        const bool tol_given = tol_opt != nullptr && tol_opt->count() > 0;
        return cmd_kummer_check(*N, *x, *allow_n1, tol_given, cfg);
      };
    });
  }

  // stieltjes
  {
    auto* sub = app.add_subcommand(
        "stieltjes", "table of generalized Stieltjes constants gamma_n(x)");
    auto n = std::make_shared<int>(0);
    auto x = std::make_shared<std::string>("1");
    sub->add_option("-n", *n, "largest order (0..10)");
    sub->add_option("-x", *x, "argument in (0, 1]");
    add_common(sub, cfg);
    sub->callback([&, n, x] {
      run = [&, n, x] { return cmd_stieltjes(*n, *x, cfg); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return run ? run() : 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
