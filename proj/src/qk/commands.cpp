#include "quotkit/qk/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "quotkit/grassmann.hpp"
#include "quotkit/qk/cache.hpp"
#include "quotkit/qk/parser.hpp"
#include "quotkit/quotgrass.hpp"
#include "quotkit/regularity.hpp"

namespace quotkit::qk {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string module_name, matrix_name, family_name, point_name;
  std::string order = "grevlex";
  std::string to_subset;
  std::string hp_coeffs;
  int degree = std::numeric_limits<int>::min();
  bool saturated_agreement = false;
  int twist_r = std::numeric_limits<int>::min();
  int rank_p = 1;
  int dim_n = -1;
  int fit_k = -1;
  int strand_N = std::numeric_limits<int>::min();
  int refine_cap = -1;  // default: fiber dim + 5
  int cech_cap = 20;
  int max_degree = -1;
  int lo = -3, hi = 3;
  bool no_cache = false;
  bool verify_cache = false;
  bool pretty = false;
};

TermOrder term_order(const Options& o) {
  if (o.order == "grevlex") return TermOrder::GrevLex;
  if (o.order == "lex") return TermOrder::Lex;
  throw PreconditionError("unknown monomial order '" + o.order + "'");
}

long long as_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer result out of the CLI's int64 range");
  return z.get_si();
}

json np_json(const NumericalPolynomial& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(as_ll(c));
  return a;
}

json rational_matrix_json(const Mat<Rational>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json subset_json(const SubsetIndex& s) {
  json a = json::array();
  for (int v : s) a.push_back(v);
  return a;
}

json vec_json(const FreeModule&, const Vec& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.str());
  return a;
}

json ideal_json(const Ideal& I) {
  json a = json::array();
  if (I.gens.empty()) return a;
  for (const auto& g : ideal_gb(I)) a.push_back(g.str());
  return a;
}

json stratum_json(const StratumDescriptor& s) {
  json j;
  if (s.hp_label) j["label"] = np_json(*s.hp_label);
  if (s.rank_label) j["rank"] = *s.rank_label;
  j["closed"] = ideal_json(s.closed);
  json ex = json::array();
  for (const auto& E : s.excluded) ex.push_back(ideal_json(E));
  j["excluded"] = ex;
  if (s.refine_capped) j["refine_capped"] = true;
  return j;
}

NumericalPolynomial parse_hp(const std::string& csv) {
  std::vector<mpz_class> coeffs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    coeffs.emplace_back(item);
  }
  return NumericalPolynomial(std::move(coeffs));
}

SubsetIndex parse_subset(const std::string& csv) {
  SubsetIndex out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

const ModuleDef& need_module(const InputDocument& doc, const Options& o) {
  if (o.module_name.empty()) throw PreconditionError("--module NAME is required");
  const ModuleDef* m = doc.find_module(o.module_name);
  if (!m) throw PreconditionError("no module named '" + o.module_name + "'");
  return *m;
}

const MatrixDef& need_matrix(const InputDocument& doc, const Options& o) {
  if (o.matrix_name.empty()) throw PreconditionError("--matrix NAME is required");
  const MatrixDef* m = doc.find_matrix(o.matrix_name);
  if (!m) throw PreconditionError("no matrix named '" + o.matrix_name + "'");
  return *m;
}

// Matrix over the base variables only, for the fitting-ideal commands.
PolyMatrix base_matrix(const InputDocument& doc, const MatrixDef& def) {
  RingPtr base = doc.ring->base_subring();
  PolyMatrix raw = def.as_polymatrix();
  PolyMatrix out(base, raw.rows(), raw.cols());
  for (int i = 0; i < raw.rows(); ++i)
    for (int j = 0; j < raw.cols(); ++j) {
      if (raw(i, j).fiber_degree() > 0)
        throw PreconditionError("matrix entry uses a fiber variable; this command expects "
                                "entries over the base variables only");
      out(i, j) = raw(i, j).map_to_ring(base);
    }
  return out;
}

struct CommandResult {
  json value;
  int exit_code = 0;
};

using Handler = std::function<CommandResult(const InputDocument*, const Options&)>;

CommandResult grass_normalize(const InputDocument* doc, const Options& o) {
  auto p = normalize(need_matrix(*doc, o).as_rational_matrix());
  return {{{"chart", subset_json(p.chart)}, {"matrix", rational_matrix_json(p.X)}}, 0};
}

CommandResult grass_transition(const InputDocument* doc, const Options& o) {
  if (o.to_subset.empty()) throw PreconditionError("--to I,J,.. is required");
  auto p = normalize(need_matrix(*doc, o).as_rational_matrix());
  auto q = transition(p, parse_subset(o.to_subset));
  return {{{"chart", subset_json(q.chart)}, {"matrix", rational_matrix_json(q.X)}}, 0};
}

CommandResult grass_plucker(const InputDocument* doc, const Options& o) {
  auto p = normalize(need_matrix(*doc, o).as_rational_matrix());
  auto pl = plucker(p);
  json coords;
  for (const auto& [K, v] : pl.coords) {
    std::string key;
    for (std::size_t i = 0; i < K.size(); ++i) key += (i ? "," : "") + std::to_string(K[i]);
    coords[key] = v.str();
  }
  bool relations_ok = p.d != 2 || plucker_relation_check(pl);
  json out{{"coords", coords}, {"count", static_cast<int>(pl.coords.size())}};
  if (p.d == 2) out["relations_ok"] = relations_ok;
  return {out, 0};
}

CommandResult grass_limit(const InputDocument* doc, const Options& o) {
  auto m = need_matrix(*doc, o).as_ratfunc_matrix();
  DvrLimit lim = dvr_limit(m);
  json integral = json::array();
  for (int i = 0; i < lim.integral.X.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < lim.integral.X.cols(); ++j) row.push_back(lim.integral.X(i, j).str());
    integral.push_back(std::move(row));
  }
  return {{{"chart", subset_json(lim.chart)},
           {"integral", integral},
           {"limit_t0", rational_matrix_json(lim.special_fiber.X)}},
          0};
}

CommandResult gb_basis(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  GroebnerBasis gb = buchberger(P.F0, P.relations, term_order(o));
  json elems = json::array();
  for (const auto& e : gb.elems) elems.push_back(vec_json(P.F0, e));
  return {{{"twists", P.F0.twists}, {"basis", elems}}, 0};
}

CommandResult gb_resolve(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  Resolution R = free_resolution(P, term_order(o));
  json modules = json::array();
  for (const auto& M : R.modules) modules.push_back(M.twists);
  json maps = json::array();
  for (std::size_t i = 0; i < R.maps.size(); ++i) {
    json cols = json::array();
    for (const auto& c : R.maps[i]) cols.push_back(vec_json(R.modules[i], c));
    maps.push_back(std::move(cols));
  }
  return {{{"modules", modules}, {"maps", maps}, {"length", R.length()}}, 0};
}

CommandResult gb_betti(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  BettiTable t = betti_table(free_resolution(P, term_order(o)));
  json entries = json::array();
  for (const auto& [ij, b] : t.beta)
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", b}});
  return {{{"betti", entries}, {"regularity_bound", t.regularity_bound()}}, 0};
}

CommandResult gb_hilb(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  if (o.degree != std::numeric_limits<int>::min()) {
    GradedModule M(P, term_order(o));
    return {{{"degree", o.degree}, {"dim", M.hilbert_function(o.degree)}}, 0};
  }
  return {{{"hp", np_json(hilbert_polynomial(P, term_order(o)))}}, 0};
}

CommandResult gb_saturate(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  Presentation S = saturate(P, term_order(o));
  GroebnerBasis gb = buchberger(S.F0, S.relations, term_order(o));
  json elems = json::array();
  for (const auto& e : gb.elems) elems.push_back(vec_json(S.F0, e));
  return {{{"twists", S.F0.twists}, {"basis", elems}}, 0};
}

CommandResult reg_cohomology(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  CohomologyEngine E(std::make_shared<GradedModule>(P, term_order(o)), o.cech_cap);
  CohomologyTable t = E.table(o.lo, o.hi);
  json cells = json::array();
  for (const auto& [id, h] : t.h)
    cells.push_back({{"i", id.first}, {"d", id.second}, {"h", h}});
  return {{{"n", t.n}, {"table", cells}}, 0};
}

CommandResult reg_regularity(const InputDocument* doc, const Options& o) {
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  CohomologyEngine E(std::make_shared<GradedModule>(P, term_order(o)), o.cech_cap);
  return {{{"regularity", E.regularity()}}, 0};
}

CommandResult reg_mumford(const InputDocument*, const Options& o) {
  if (o.dim_n < 0) throw PreconditionError("-n N (ambient dimension) is required");
  if (o.hp_coeffs.empty()) throw PreconditionError("--hp a0,a1,.. is required");
  return {{{"bound", mumford_bound(o.rank_p, o.dim_n, parse_hp(o.hp_coeffs))}}, 0};
}

CommandResult reg_check(const InputDocument* doc, const Options& o) {
  if (o.twist_r == std::numeric_limits<int>::min())
    throw PreconditionError("-r TWIST is required");
  Presentation P = need_module(*doc, o).presentation(doc->fiber_ring());
  CohomologyEngine E(std::make_shared<GradedModule>(P, term_order(o)), o.cech_cap);
  CastelnuovoResult c = E.castelnuovo_checks(o.twist_r);
  return {{{"r", o.twist_r},
           {"mult_surjective", c.mult_surjective},
           {"globally_generated", c.globally_generated},
           {"higher_vanishing", c.higher_vanishing},
           {"is_m_regular", E.is_m_regular(o.twist_r)}},
          0};
}

CommandResult flat_fitting(const InputDocument* doc, const Options& o) {
  if (o.fit_k < 0) throw PreconditionError("-k RANK is required");
  PolyMatrix psi = base_matrix(*doc, need_matrix(*doc, o));
  return {{{"k", o.fit_k}, {"gens", ideal_json(fitting_ideal(psi, o.fit_k))}}, 0};
}

CommandResult flat_strata(const InputDocument* doc, const Options& o) {
  PolyMatrix psi = base_matrix(*doc, need_matrix(*doc, o));
  json strata = json::array();
  for (const auto& s : rank_strata(psi, term_order(o))) strata.push_back(stratum_json(s));
  return {{{"strata", strata}}, 0};
}

CommandResult flat_stratify(const InputDocument* doc, const Options& o) {
  if (o.family_name.empty()) throw PreconditionError("--family NAME is required");
  const ModuleDef* f = doc->find_module(o.family_name);
  if (!f) throw PreconditionError("no family named '" + o.family_name + "'");
  if (o.strand_N == std::numeric_limits<int>::min())
    throw PreconditionError("-N STRAND (start degree) is required");
  FamilyPresentation F = f->family_presentation();
  int cap = o.refine_cap >= 0 ? o.refine_cap : doc->ring->fiber_count() + 4;
  StratificationResult res = hilbert_stratification(F, o.strand_N, cap, term_order(o));
  json strata = json::array();
  for (const auto& s : res.strata) strata.push_back(stratum_json(s));
  json out{{"strata", strata}, {"refine_capped", res.refine_capped},
           {"last_strand", res.last_strand}};
  return {out, res.refine_capped ? 4 : 0};
}

CommandResult quot_embed(const InputDocument* doc, const Options& o) {
  if (o.twist_r == std::numeric_limits<int>::min())
    throw PreconditionError("-r TWIST is required");
  const ModuleDef& m = need_module(*doc, o);
  for (int tw : m.target_twists)
    if (tw != 0)
      throw PreconditionError("quot embed requires a quotient of (+)^p S (all twists zero)");
  Presentation P = m.presentation(doc->fiber_ring());
  QuotientDatum q = make_quotient(P.F0.rank(), P.F0.ring, P.relations, term_order(o));
  GrassSectionPoint g = grass_point_of_quotient(q, o.twist_r, term_order(o));
  json kernel = json::array();
  for (const auto& v : g.kernel_basis) {
    json row = json::array();
    for (const auto& c : v) row.push_back(c.str());
    kernel.push_back(std::move(row));
  }
  json out{{"r", g.r},
           {"ambient", g.ambient_dim},
           {"rank", g.quotient.rows()},
           {"hp", np_json(q.hp)},
           {"quotient", rational_matrix_json(g.quotient)},
           {"kernel", kernel}};
  // Roundtrip self-check through the cokernel construction; --max-degree
  // bounds the verification window above r.
  int window = o.max_degree >= 0 ? o.max_degree : 3;
  QuotientDatum back = quotient_from_grass_point(g, P.F0.ring, term_order(o));
  out["roundtrip_ok"] = quotients_agree(q, back, o.twist_r, window, o.saturated_agreement);
  return {out, 0};
}

CommandResult quot_recover(const InputDocument* doc, const Options& o) {
  if (o.point_name.empty()) throw PreconditionError("--point NAME is required");
  const GrassDef* g = doc->find_grass(o.point_name);
  if (!g) throw PreconditionError("no grasspoint named '" + o.point_name + "'");
  if (o.twist_r == std::numeric_limits<int>::min())
    throw PreconditionError("-r TWIST is required");
  RingPtr fiber = doc->fiber_ring();
  const int n = fiber->fiber_count() - 1;
  GrassSectionPoint pt;
  pt.p = o.rank_p;
  pt.n = n;
  pt.r = o.twist_r;
  pt.ambient_dim = g->r;
  FreeModule F0{fiber, std::vector<int>(o.rank_p, 0)};
  if (F0.degree_dim(o.twist_r) != g->r)
    throw PreconditionError("grasspoint width " + std::to_string(g->r) +
                            " differs from p*C(n+r,n)");
  Mat<Rational> X(g->d, g->r);
  for (int i = 0; i < g->d; ++i)
    for (int j = 0; j < g->r; ++j) {
      if (!g->entries[i][j].is_constant())
        throw PreconditionError("grasspoint entries must be rational constants");
      X(i, j) = g->entries[i][j].constant_term();
    }
  pt.quotient = X;
  pt.kernel_basis = X.kernel_basis();
  QuotientDatum q = quotient_from_grass_point(pt, fiber, term_order(o));
  json kernel = json::array();
  for (const auto& e : q.kernel_gb.elems) kernel.push_back(vec_json(q.pres.F0, e));
  return {{{"p", q.p}, {"n", q.n}, {"hp", np_json(q.hp)}, {"kernel_basis", kernel}}, 0};
}

CommandResult quot_stratum(const InputDocument* doc, const Options& o) {
  const MatrixDef& K = need_matrix(*doc, o);
  if (o.twist_r == std::numeric_limits<int>::min())
    throw PreconditionError("-r TWIST is required");
  if (o.hp_coeffs.empty()) throw PreconditionError("--hp a0,a1,.. is required");
  int N = o.strand_N == std::numeric_limits<int>::min() ? o.twist_r : o.strand_N;
  int cap = o.refine_cap >= 0 ? o.refine_cap : doc->ring->fiber_count() + 4;
  PolyMatrix raw = K.as_polymatrix();
  std::vector<std::vector<MultiPoly>> family(raw.rows());
  for (int i = 0; i < raw.rows(); ++i)
    for (int j = 0; j < raw.cols(); ++j) {
      if (raw(i, j).fiber_degree() > 0)
        throw PreconditionError("kernel family entries must lie in Q[y] (ambient coordinates)");
      family[i].push_back(raw(i, j));
    }
  const int n = doc->ring->fiber_count() - 1;
  StratumDescriptor s = quotkit::quot_stratum(o.rank_p, n, o.twist_r, family,
                                              parse_hp(o.hp_coeffs), N, cap, term_order(o));
  return {stratum_json(s), s.refine_capped ? 4 : 0};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quotkit: exact machinery behind the Hilbert/Quot construction"};
  app.require_subcommand(1);
  Options o;

  app.fallthrough();
  app.add_option("--order", o.order, "monomial order: grevlex|lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--cech-cap", o.cech_cap, "Cech truncation cap");
  app.add_flag("--no-cache", o.no_cache, "bypass the result cache");
  app.add_flag("--verify-cache", o.verify_cache, "recompute on cache hits and compare bytes");
  app.add_flag("--pretty", o.pretty, "indent JSON output");

  std::map<std::string, Handler> handlers;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc,
                  Handler h, bool needs_input = true) {
    CLI::App* cmd = group->add_subcommand(name, desc);
    cmd->fallthrough();
    if (needs_input) cmd->add_option("-i,--input", o.input, "input .qk file")->required();
    handlers[group->get_name() + " " + name] = std::move(h);
    return cmd;
  };

  CLI::App* grass = app.add_subcommand("grass", "Grassmannian chart atlas");
  leaf(grass, "normalize", "canonical chart form of a rank-d matrix", grass_normalize)
      ->add_option("--matrix", o.matrix_name, "matrix name");
  leaf(grass, "transition", "chart transition theta_{I,J}", grass_transition)
      ->add_option("--matrix", o.matrix_name, "matrix name");
  leaf(grass, "plucker", "Plucker coordinates of a point", grass_plucker)
      ->add_option("--matrix", o.matrix_name, "matrix name");
  leaf(grass, "limit", "valuative-criterion limit over Q(t)", grass_limit)
      ->add_option("--matrix", o.matrix_name, "matrix name");
  grass->get_subcommand("transition")->add_option("--to", o.to_subset, "target chart, e.g. 1,3");

  CLI::App* gb = app.add_subcommand("gb", "Groebner engine");
  leaf(gb, "basis", "reduced Groebner basis of the relation module", gb_basis)
      ->add_option("--module", o.module_name, "module name");
  leaf(gb, "resolve", "minimal free resolution", gb_resolve)
      ->add_option("--module", o.module_name, "module name");
  leaf(gb, "betti", "Betti table", gb_betti)
      ->add_option("--module", o.module_name, "module name");
  CLI::App* hilb = leaf(gb, "hilb", "Hilbert function or polynomial", gb_hilb);
  hilb->add_option("--module", o.module_name, "module name");
  hilb->add_option("-d,--degree", o.degree, "degree (omit for the Hilbert polynomial)");
  leaf(gb, "saturate", "saturation with respect to the irrelevant ideal", gb_saturate)
      ->add_option("--module", o.module_name, "module name");

  CLI::App* reg = app.add_subcommand("reg", "regularity and sheaf cohomology");
  CLI::App* coh = leaf(reg, "cohomology", "Cech cohomology table", reg_cohomology);
  coh->add_option("--module", o.module_name, "module name");
  coh->add_option("--lo", o.lo, "lowest twist");
  coh->add_option("--hi", o.hi, "highest twist");
  leaf(reg, "regularity", "Castelnuovo-Mumford regularity", reg_regularity)
      ->add_option("--module", o.module_name, "module name");
  CLI::App* mb = leaf(reg, "mumford-bound", "Mumford's recursive bound F_{p,n}", reg_mumford,
                      /*needs_input=*/false);
  mb->add_option("-p", o.rank_p, "ambient free rank p");
  mb->add_option("-n", o.dim_n, "projective dimension n");
  mb->add_option("--hp", o.hp_coeffs, "binomial-basis coefficients a0,a1,..");
  CLI::App* chk = leaf(reg, "check", "Castelnuovo lemma checks at a twist", reg_check);
  chk->add_option("--module", o.module_name, "module name");
  chk->add_option("-r", o.twist_r, "twist");

  CLI::App* flat = app.add_subcommand("flat", "fitting ideals and flattening");
  CLI::App* fit = leaf(flat, "fitting", "fitting ideal of a presentation matrix", flat_fitting);
  fit->add_option("--matrix", o.matrix_name, "matrix name (entries over base variables)");
  fit->add_option("-k", o.fit_k, "target fiber dimension");
  leaf(flat, "strata", "rank stratification of a presentation matrix", flat_strata)
      ->add_option("--matrix", o.matrix_name, "matrix name");
  CLI::App* strat = leaf(flat, "stratify", "Hilbert-polynomial flattening stratification",
                         flat_stratify);
  strat->add_option("--family", o.family_name, "family name");
  strat->add_option("-N", o.strand_N, "first strand degree (>= fiber regularities)");
  strat->add_option("--refine-cap", o.refine_cap, "extra strands before giving up");

  CLI::App* quot = app.add_subcommand("quot", "Quot <-> Grassmannian");
  CLI::App* emb = leaf(quot, "embed", "degree-r section point of a quotient", quot_embed);
  emb->add_option("--module", o.module_name, "module name (quotient of (+)^p S)");
  emb->add_option("-r", o.twist_r, "twist r (at or above the regularity bound)");
  emb->add_option("--max-degree", o.max_degree, "roundtrip verification window above r");
  emb->add_flag("--saturated", o.saturated_agreement,
                "require saturated-kernel equality in the roundtrip check");
  CLI::App* rec = leaf(quot, "recover", "cokernel quotient of a Grassmannian point",
                       quot_recover);
  rec->add_option("--point", o.point_name, "grasspoint name");
  rec->add_option("-p", o.rank_p, "ambient free rank p");
  rec->add_option("-r", o.twist_r, "twist r");
  CLI::App* qs = leaf(quot, "stratum", "Quot stratum of a kernel family over the base",
                      quot_stratum);
  qs->add_option("--matrix", o.matrix_name, "kernel family: rows = spanning vectors over Q[y]");
  qs->add_option("-p", o.rank_p, "ambient free rank p");
  qs->add_option("-r", o.twist_r, "twist r");
  qs->add_option("--hp", o.hp_coeffs, "target Hilbert polynomial a0,a1,..");
  qs->add_option("-N", o.strand_N, "first strand degree (default r)");
  qs->add_option("--refine-cap", o.refine_cap, "extra strands before giving up");
  (void)coh;
  (void)chk;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  // Locate the selected leaf command.
  std::string command;
  for (CLI::App* group : app.get_subcommands())
    for (CLI::App* sub : group->get_subcommands())
      command = group->get_name() + " " + sub->get_name();
  auto handler = handlers.find(command);
  if (handler == handlers.end()) {
    err << "error: missing subcommand\n";
    return 2;
  }

  try {
    InputDocument doc;
    std::string canonical;
    const InputDocument* doc_ptr = nullptr;
    if (!o.input.empty()) {
      std::ifstream in(o.input, std::ios::binary);
      if (!in) {
        err << "error: cannot open input file '" << o.input << "'\n";
        return 2;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      doc = parse(ss.str());
      canonical = print(doc);
      doc_ptr = &doc;
    }

    // Cache key: command + relevant parameters + canonical input.
    std::ostringstream params;
    params << "order=" << o.order << ";module=" << o.module_name << ";matrix=" << o.matrix_name
           << ";family=" << o.family_name << ";point=" << o.point_name << ";to=" << o.to_subset
           << ";hp=" << o.hp_coeffs << ";d=" << o.degree << ";r=" << o.twist_r
           << ";p=" << o.rank_p << ";n=" << o.dim_n << ";k=" << o.fit_k << ";N=" << o.strand_N
           << ";refine_cap=" << o.refine_cap << ";cech_cap=" << o.cech_cap
           << ";max_degree=" << o.max_degree << ";saturated=" << o.saturated_agreement << ";lo=" << o.lo << ";hi=" << o.hi
           << ";pretty=" << o.pretty;

    ResultCache cache;
    std::string key = cache.key_for(command, canonical, params.str());
    if (!o.no_cache) {
      if (auto hit = cache.lookup(key)) {
        if (o.verify_cache) {
          CommandResult fresh = handler->second(doc_ptr, o);
          std::string recomputed = (o.pretty ? fresh.value.dump(2) : fresh.value.dump()) + "\n";
          if (fresh.exit_code == 0 && recomputed != *hit) {
            err << "error: cache verification failed for key " << key << "\n";
            return 1;
          }
        }
        out << *hit;
        return 0;
      }
    }

    CommandResult res = handler->second(doc_ptr, o);
    std::string payload = (o.pretty ? res.value.dump(2) : res.value.dump()) + "\n";
    if (!o.no_cache && res.exit_code == 0) cache.store(key, payload);
    out << payload;
    return res.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace quotkit::qk
