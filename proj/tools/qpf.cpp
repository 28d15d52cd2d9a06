// qpf: command-line front end. Exit codes: 0 pass, 1 check failed, 2 usage.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpf/commutant.hpp"
#include "qpf/functors.hpp"
#include "qpf/pairs.hpp"
#include "qpf/verify/acceptance.hpp"

using namespace qpf;
using json = nlohmann::json;

namespace {

struct Config {
  std::string q = "generic";
  int root = 0;
  bool exact = false;
  bool as_json = false;
  unsigned long long seed = 0;
  bool timing = false;
  bool q_given = false;
};

constexpr Index kYbeCheckMaxDim = 16;

struct UsageError : Error {
  using Error::Error;
};

// Field actually used, and whether it is a random specialization of ℚ(q).
struct Resolved {
  FieldSpec field;
  bool probabilistic = false;
  std::string point;
};

FieldSpec requested_field(const Config& c) {
  if (c.root != 0) {
    if (c.q_given) throw UsageError("--q and --root-of-unity are exclusive");
    return FieldSpec::root_of_unity(c.root);
  }
  if (c.q == "generic") return FieldSpec::generic();
  return parse_field_spec("q=" + c.q);
}

// Dimension queries honour --exact: without it a generic field is replaced by
// the seeded rational point. Other commands always run exactly.
Resolved resolve(const Config& c, bool allow_probabilistic) {
  Resolved r{requested_field(c)};
  if (allow_probabilistic && !c.exact && r.field.kind == FieldSpec::Kind::GenericQ) {
    const mpq_class p = specialization_point(c.seed);
    r.field = FieldSpec::numeric(p);
    r.probabilistic = true;
    r.point = p.get_str();
  }
  return r;
}

template <class Fn>
auto dispatch(const FieldSpec& f, Fn&& fn) {
  switch (f.kind) {
    case FieldSpec::Kind::GenericQ: return fn.template operator()<RatFunc>();
    case FieldSpec::Kind::RootOfUnity: return fn.template operator()<Cyclotomic>();
    case FieldSpec::Kind::NumericQ: break;
  }
  return fn.template operator()<Rational>();
}

struct Report {
  json body = json::object();
  bool ok = true;
  std::vector<std::string> lines;  // human output

  void line(const std::string& s) { lines.push_back(s); }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

template <class F>
json blocks_json(const JordanData<F>& jd) {
  json out = json::array();
  for (const auto& b : jd.blocks) out.push_back({{"eigenvalue", b.eigenvalue.to_string()}, {"sizes", b.sizes}});
  return out;
}

template <class F>
std::string blocks_text(const JordanData<F>& jd) {
  std::string s;
  for (const auto& b : jd.blocks) {
    s += (s.empty() ? "" : "; ") + b.eigenvalue.to_string() + ":";
    for (int k : b.sizes) s += " " + std::to_string(k);
  }
  return s;
}

std::string label_text(const SignedPower& l) {
  return std::string(l.sign > 0 ? "+" : "-") + "q^" + std::to_string(l.exponent);
}

json ses_json(const SesCheck& s) {
  return {{"dim_sub", s.dim_sub},           {"dim_mid", s.dim_mid},       {"dim_quot", s.dim_quot},
          {"composite_zero", s.composite_zero}, {"injective", s.injective}, {"surjective", s.surjective},
          {"middle_exact", s.middle_exact}, {"ok", s.ok()}};
}

template <class F>
SpMat<F> random_element(const HomSpaceBasis<F>& h, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<F> coords;
  for (Index k = 0; k < h.dim(); ++k) coords.push_back(F(c(rng)));
  return h.combine(coords);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Hecke pairs and quantum polynomial functors"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  auto* q_opt = app.add_option("--q", cfg.q, "generic, or a rational value for q")->capture_default_str();
  app.add_option("--root-of-unity", cfg.root, "work over Q(zeta_l)")->check(CLI::Range(1, 1000));
  app.add_flag("--exact", cfg.exact, "exact arithmetic for dimension queries at generic q");
  app.add_flag("--json", cfg.as_json, "machine-readable output");
  app.add_option("--seed", cfg.seed, "specialization point and random samples")->capture_default_str();
  app.add_flag("--timing", cfg.timing, "report elapsed time");

  std::string pair_desc = "std(2)", from_desc, to_desc, functor, f_expr = "tensor(1)", g_expr = "tensor(2)",
              h_expr = "qext(2)";
  int d = 2, e = 1, n = 2, fmax = 10, samples = 2;
  bool basis = false, matrix = false;
  std::vector<int> only;

  auto pair_opt = [&](CLI::App* s) { s->add_option("--pair,-p", pair_desc, "pair descriptor")->capture_default_str(); };
  auto from_to = [&](CLI::App* s) {
    s->add_option("--from", from_desc, "source pair")->required();
    s->add_option("--to", to_desc, "target pair")->required();
    s->add_option("-d", d, "degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  };

  auto* pair_info = app.add_subcommand("pair-info", "dimension, degree, checks and eigenvalue census");
  pair_opt(pair_info);
  pair_info->add_flag("--matrix", matrix, "include the R-matrix");
  auto* ybe = app.add_subcommand("ybe-check", "Yang-Baxter residual");
  pair_opt(ybe);
  auto* hom = app.add_subcommand("hom-dim", "dimension of the commutant Hom_{B_d}(V^d, W^d)");
  from_to(hom);
  hom->add_flag("--basis", basis, "include the basis matrices");
  auto* schur = app.add_subcommand("schur-dim", "commutant dimension against the RTT quotient dimension");
  schur->alias("a-dim");
  from_to(schur);
  auto* eh = app.add_subcommand("ehecke-dim", "dimension of the e-Hecke algebra H(d,e) acting on V_n");
  eh->add_option("-d", d, "strands")->capture_default_str()->check(CLI::PositiveNumber);
  eh->add_option("-e", e, "cabling degree")->capture_default_str()->check(CLI::PositiveNumber);
  eh->add_option("-n", n, "dimension of the standard pair")->capture_default_str()->check(CLI::PositiveNumber);
  auto* gen = app.add_subcommand("generates", "whether --from generates --to in degree d");
  from_to(gen);
  auto* fe = app.add_subcommand("functor-eval", "evaluate a functor expression on a pair");
  fe->add_option("--functor,-f", functor, "functor expression")->required();
  pair_opt(fe);
  fe->add_flag("--matrix", matrix, "include the induced R-matrix");
  auto* br = app.add_subcommand("braiding-check", "hexagon identities and naturality");
  br->add_option("-F", f_expr)->capture_default_str();
  br->add_option("-G", g_expr)->capture_default_str();
  br->add_option("-H", h_expr)->capture_default_str();
  br->add_option("--samples", samples, "random commutant elements for naturality")->capture_default_str();
  pair_opt(br);
  auto* ses = app.add_subcommand("ses-check", "degree-two exact sequences");
  pair_opt(ses);
  auto* dual = app.add_subcommand("dual-check", "symmetric/divided duality");
  pair_opt(dual);
  dual->add_option("-n", n, "degree")->capture_default_str()->check(CLI::PositiveNumber);
  auto* jd = app.add_subcommand("jordan", "Jordan structure of R");
  pair_opt(jd);
  auto* wit = app.add_subcommand("witness", "the scalars q^(f^2) and their collisions");
  wit->add_option("-d", d, "strands")->capture_default_str()->check(CLI::Range(2, 64));
  wit->add_option("--fmax", fmax, "largest f")->capture_default_str()->check(CLI::Range(1, 1000));
  auto* va = app.add_subcommand("verify-all", "run the acceptance criteria");
  va->add_option("--only", only, "criterion ids")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  cfg.q_given = q_opt->count() > 0;
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  Resolved res;

  try {
    const bool dim_query = cmd == hom || cmd == schur || cmd == eh;
    res = resolve(cfg, dim_query);
    rep.body["query"] = json::object();
    auto& query = rep.body["query"];

    if (cmd == eh) {
      query = {{"d", d}, {"e", e}, {"n", n}};
      if (res.field.kind == FieldSpec::Kind::RootOfUnity || (res.field.kind == FieldSpec::Kind::NumericQ && !res.probabilistic))
        throw UsageError("ehecke-dim works over Q(q) or a random specialization of it");
      const EHeckeResult r = ehecke_dim(d, e, n, !res.probabilistic, cfg.seed);
      rep.body["dimension"] = r.dim;
      rep.body["undercount_warning"] = r.undercount_warning;
      if (r.exact) rep.body["specialization_check"] = {{"point", r.point}, {"dimension", r.probabilistic_dim}};
      if (r.undercount_warning) std::cerr << "warning: n < d e, the dimension may be undercounted\n";
      rep.line(std::to_string(r.dim));
    } else if (cmd == va) {
      query = {{"only", only}};
      AcceptanceOptions opt{only, cfg.seed};
      json crit = json::array();
      int passed = 0;
      for (const auto& r : run_acceptance(opt)) {
        json c = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
        if (cfg.timing) c["elapsed"] = r.seconds;
        crit.push_back(std::move(c));
        passed += r.pass;
        rep.ok = rep.ok && r.pass;
        std::string l = std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
        if (cfg.timing) l += " (" + str(r.seconds) + " s)";
        rep.line(l);
      }
      rep.body["criteria"] = std::move(crit);
      rep.body["passed"] = passed;
      rep.body["total"] = static_cast<int>(rep.body["criteria"].size());
    } else {
      dispatch(res.field, [&]<class F>() {
        auto pair = [&](const std::string& s) { return parse_pair<F>(s, res.field); };
        if (cmd == pair_info) {
          query = {{"pair", pair_desc}};
          const auto p = pair(pair_desc);
          rep.body["dim"] = p.dim();
          rep.body["degree_e"] = p.degree_e();
          rep.body["provenance"] = p.provenance().to_string();
          const bool ybe_ok = is_zero(check_ybe(p)), hecke_ok = check_hecke(p);
          rep.body["ybe"] = ybe_ok;
          rep.body["hecke"] = hecke_ok;
          rep.line("pair " + p.provenance().to_string() + ": dim " + std::to_string(p.dim()) + ", degree " +
                   std::to_string(p.degree_e()));
          rep.line("Yang-Baxter: " + yes(ybe_ok) + ", Hecke relation: " + yes(hecke_ok));
          const int range = 2 * p.degree_e() * p.degree_e() + 1;
          json eig = json::array();
          try {
            const auto c = eigen_census(p.R(), p.field(), range);
            for (const auto& ent : c.eigenvalues) {
              json labels = json::array();
              std::string lt;
              for (const auto& l : ent.labels) {
                labels.push_back(label_text(l));
                lt += (lt.empty() ? "" : "=") + label_text(l);
              }
              eig.push_back({{"value", ent.value.to_string()},
                             {"labels", labels},
                             {"multiplicity", ent.multiplicity},
                             {"generalized_dim", ent.gen_dim()}});
              rep.line("  eigenvalue " + ent.value.to_string() + " (" + lt + "): generalized dim " +
                       std::to_string(ent.gen_dim()) + ", minimal polynomial multiplicity " +
                       std::to_string(ent.multiplicity));
            }
            rep.body["eigenvalues"] = std::move(eig);
          } catch (const MinPolyDoesNotSplit& ex) {
            rep.body["eigenvalues"] = nullptr;
            rep.line(std::string("  eigenvalues: ") + ex.what());
          }
          if (matrix) rep.body["R"] = matrix_to_json(p.R());
        } else if (cmd == ybe) {
          query = {{"pair", pair_desc}};
          const auto p = pair(pair_desc);
          const Index nnz = nonzeros(check_ybe(p));
          rep.body["residual_nonzeros"] = nnz;
          rep.ok = nnz == 0;
          rep.line(nnz == 0 ? "residual zero" : "residual has " + std::to_string(nnz) + " nonzero entries");
        } else if (cmd == hom || cmd == schur || cmd == gen) {
          query = {{"from", from_desc}, {"to", to_desc}, {"d", d}};
          const auto V = pair(from_desc), W = pair(to_desc);
          if (cmd == gen) {
            const bool g = generates(V, W, d);
            rep.body["generates"] = g;
            rep.line(g ? "true" : "false");
            return;
          }
          const auto h = hom_basis(V, W, d);
          rep.body["dimension"] = h->dim();
          if (cmd == hom) {
            rep.line(std::to_string(h->dim()));
            if (basis) {
              json b = json::array();
              for (const auto& x : h->basis()) b.push_back(matrix_to_json(x));
              rep.body["basis"] = std::move(b);
            }
          } else {
            const Index a = a_dim(V, W, d);
            rep.body["a_dim"] = a;
            rep.ok = a == h->dim();
            rep.line("commutant " + std::to_string(h->dim()) + ", RTT quotient " + std::to_string(a) +
                     (rep.ok ? ", equal" : ", DIFFERENT"));
          }
        } else if (cmd == fe) {
          query = {{"functor", functor}, {"pair", pair_desc}};
          const FunctorExpr ex = FunctorExpr::parse(functor);
          const auto input = pair(pair_desc);
          const auto r = eval_obj(ex, input);
          rep.body["expr"] = ex.to_string();
          rep.body["input_pair"] = input.provenance().to_string();
          rep.body["degree"] = ex.degree();
          rep.body["dim"] = r.space_dim();
          rep.body["ambient_dim"] = r.ambient().dim();
          rep.body["sub_dim"] = r.frame().sub().dim();
          rep.body["quot_dim"] = r.frame().quot().dim();
          rep.line(ex.to_string() + " of " + pair_desc + ": dim " + std::to_string(r.space_dim()) + " (degree " +
                   std::to_string(ex.degree()) + ", subquotient " + std::to_string(r.frame().sub().dim()) + "/" +
                   std::to_string(r.frame().quot().dim()) + " of " + std::to_string(r.ambient().dim()) + ")");
          if (r.has_pair()) {
            const auto& p = r.induced_pair();
            rep.body["degree_e"] = p.degree_e();
            json pj = {{"dim", p.dim()}, {"degree_e", p.degree_e()}, {"provenance", p.provenance().to_string()}};
            if (matrix) pj["R"] = matrix_to_json(p.R());
            rep.body["pair"] = std::move(pj);
            // V^{⊗3} of a larger value is too big to form
            if (p.dim() <= kYbeCheckMaxDim) {
              const bool ok = is_zero(check_ybe(p));
              rep.body["checks"] = {{"ybe", ok}};
              rep.ok = ok;
              rep.line("induced pair: degree " + std::to_string(p.degree_e()) + ", Yang-Baxter " + yes(ok));
            } else {
              rep.line("induced pair: degree " + std::to_string(p.degree_e()) + ", Yang-Baxter not checked");
            }
          } else {
            rep.body["pair"] = nullptr;
            rep.line("no induced pair (repdiv value)");
          }
        } else if (cmd == br) {
          query = {{"F", f_expr}, {"G", g_expr}, {"H", h_expr}, {"pair", pair_desc}, {"samples", samples}};
          const auto v = pair(pair_desc);
          const FunctorExpr Fx = FunctorExpr::parse(f_expr), Gx = FunctorExpr::parse(g_expr),
                            Hx = FunctorExpr::parse(h_expr);
          const Index nf = eval_obj(Fx, v).space_dim(), ng = eval_obj(Gx, v).space_dim(),
                      nh = eval_obj(Hx, v).space_dim();
          const auto fh = braiding(Fx, Hx, v), gh = braiding(Gx, Hx, v), fg = braiding(Fx, Gx, v);
          const bool hex1 = equal(braiding(FunctorExpr::tensor_prod(Fx, Gx), Hx, v),
                                  mul(kron(fh, identity<F>(ng)), kron(identity<F>(nf), gh)));
          const bool hex2 = equal(braiding(Fx, FunctorExpr::tensor_prod(Gx, Hx), v),
                                  mul(kron(identity<F>(ng), fh), kron(fg, identity<F>(nh))));
          std::mt19937 rng(static_cast<std::mt19937::result_type>(cfg.seed));
          const FunctorExpr fgx = FunctorExpr::tensor_prod(Fx, Gx), gfx = FunctorExpr::tensor_prod(Gx, Fx);
          const auto h = hom_basis(v, v, fgx.degree());
          bool nat = true;
          for (int k = 0; k < samples; ++k) {
            const SpMat<F> x = random_element(*h, rng);
            nat = nat && equal(mul(fg, eval_mor(fgx, x, v, v)), mul(eval_mor(gfx, x, v, v), fg));
          }
          rep.body["hexagon_1"] = hex1;
          rep.body["hexagon_2"] = hex2;
          rep.body["naturality"] = nat;
          rep.ok = hex1 && hex2 && nat;
          rep.line("hexagon (F G, H): " + yes(hex1));
          rep.line("hexagon (F, G H): " + yes(hex2));
          rep.line("naturality of F G -> G F on " + std::to_string(samples) + " samples: " + yes(nat));
        } else if (cmd == ses) {
          query = {{"pair", pair_desc}};
          const SesReport r = verify_ses(pair(pair_desc));
          rep.body["ext_sym"] = ses_json(r.ext_sym);
          rep.body["div_ext"] = ses_json(r.div_ext);
          rep.body["N"] = r.N;
          rep.body["jordan"] = r.eigenvalues;
          rep.ok = r.ok();
          auto row = [](const char* nm, const SesCheck& s) {
            return std::string(nm) + ": " + std::to_string(s.dim_sub) + " -> " + std::to_string(s.dim_mid) + " -> " +
                   std::to_string(s.dim_quot) + (s.ok() ? ", exact" : ", NOT exact");
          };
          rep.line(row("0 -> ext -> tensor -> sym -> 0", r.ext_sym));
          rep.line(row("0 -> div -> tensor -> ext -> 0", r.div_ext));
          rep.line("N = " + std::to_string(r.N));
        } else if (cmd == dual) {
          query = {{"pair", pair_desc}, {"n", n}};
          const DualReport r = dual_check(n, pair(pair_desc));
          rep.body = {{"query", query},
                      {"ext", r.ext},
                      {"ext_dual", r.ext_dual},
                      {"sym", r.sym},
                      {"div_dual", r.div_dual},
                      {"div", r.div},
                      {"sym_dual", r.sym_dual},
                      {"ext_pairs_agree", r.ext_pairs_agree},
                      {"sym_div_pairs_agree", r.sym_div_pairs_agree}};
          rep.ok = r.ok();
          rep.line("ext " + std::to_string(r.ext) + " / dual " + std::to_string(r.ext_dual));
          rep.line("sym " + std::to_string(r.sym) + " / divided of dual " + std::to_string(r.div_dual));
          rep.line("divided " + std::to_string(r.div) + " / sym of dual " + std::to_string(r.sym_dual));
          rep.line("pairs agree: " + yes(r.ext_pairs_agree && r.sym_div_pairs_agree));
        } else if (cmd == jd) {
          query = {{"pair", pair_desc}};
          const auto data = pair_jordan(pair(pair_desc));
          rep.body["blocks"] = blocks_json(data);
          rep.line(blocks_text(data));
        } else if (cmd == wit) {
          query = {{"d", d}, {"fmax", fmax}};
          const auto w = nongeneration_witness<F>(d, fmax, res.field);
          json vals = json::array(), coll = json::array();
          for (const auto& x : w.values) vals.push_back(x.to_string());
          for (const auto& [a, b] : w.collisions) coll.push_back({a, b});
          rep.body["values"] = std::move(vals);
          rep.body["collisions"] = std::move(coll);
          rep.body["distinct"] = w.distinct();
          for (std::size_t f = 0; f < w.values.size(); ++f)
            rep.line("f=" + std::to_string(f + 1) + ": " + w.values[f].to_string());
          for (const auto& [a, b] : w.collisions)
            rep.line("collision: f=" + std::to_string(a) + " and f=" + std::to_string(b));
        }
      });
    }
  } catch (const ParseError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    if (cfg.as_json)
      std::cout << json{{"command", name}, {"error", ex.what()}, {"position", ex.position}, {"token", ex.token}}.dump(2)
                << "\n";
    return 2;
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const DegreeMismatch& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const FieldMismatch& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const InvalidPair& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    if (cfg.as_json) std::cout << json{{"command", name}, {"error", ex.what()}}.dump(2) << "\n";
    return 1;
  }

  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cfg.as_json) {
    json out = rep.body;
    out["command"] = name;
    out["field"] = requested_field(cfg).to_string();
    out["mode"] = res.probabilistic ? "probabilistic" : "exact";
    if (res.probabilistic) out["point"] = res.point;
    out["ok"] = rep.ok;
    if (cfg.timing) out["elapsed"] = elapsed;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& l : rep.lines) std::cout << l << "\n";
    if (res.probabilistic) std::cout << "(probabilistic: q = " << res.point << ")\n";
    if (cfg.timing) std::cout << "elapsed " << elapsed << " s\n";
  }
  return rep.ok ? 0 : 1;
}
