#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "barbell/classes.hpp"
#include "barbell/serialize.hpp"

namespace barbell::cli {

std::string format_structure(const QuotientStructure& q) {
  std::vector<std::string> parts;
  if (q.free_rank > 0) parts.push_back(q.free_rank == 1 ? "Z" : "Z^" + std::to_string(q.free_rank));
  for (const auto& t : q.torsion) parts.push_back("Z_" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

struct Output {
  json data;
  std::string text;
  std::optional<std::string> csv;
};

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& s) {
  const auto comma = s.find(',');
  require(comma != std::string::npos, "window must be LO,HI, got '" + s + "'");
  const std::int64_t lo = to_int64(parse_decimal(s.substr(0, comma)));
  const std::int64_t hi = to_int64(parse_decimal(s.substr(comma + 1)));
  require(lo <= hi, "window must satisfy LO <= HI");
  return {lo, hi};
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_decimal(item));
  return out;
}

void require_n(int n) { require(n >= 3, "n must be >= 3, got " + std::to_string(n)); }

json point_json(const Point& p) { return json::array({p[0], p[1]}); }

std::string lines(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) s += r + "\n";
  return s;
}

// ---- lambda / cover ----------------------------------------------------------

Output lambda_reduce_cmd(std::int64_t w0, int n, const std::string& poly) {
  const LambdaContext ctx(w0, n);
  const LambdaElement x = lambda_reduce(decode_text<LaurentPoly1>(poly), ctx);
  return {encode(x), lines({"W0=" + std::to_string(w0) + " n=" + std::to_string(n) + ": " + to_string(x)}), {}};
}

Output lambda_structure_cmd(std::int64_t w0, int n, const std::string& window) {
  const auto [lo, hi] = parse_window(window);
  const LambdaContext ctx(w0, n);
  const LambdaStructure s = lambda_structure(ctx, {lo, hi});
  json data = {{"w0", w0}, {"n", n}, {"window", {lo, hi}}, {"window_size", s.window_size},
               {"structure", encode(s.quotient)}};
  std::string text = "window [" + std::to_string(lo) + "," + std::to_string(hi) + "] (" +
                     std::to_string(s.window_size) + " monomials): " + format_structure(s.quotient);
  return {data, lines({text}), {}};
}

Output cover_apply_cmd(std::int64_t m, const std::string& alpha) {
  const AlphaCombination y = cover_pullback(m, decode_text<AlphaCombination>(alpha));
  return {encode(y), lines({to_string(y)}), {}};
}

Output cover_kernel_cmd(std::int64_t m, std::int64_t depth, const std::string& alpha) {
  const bool in_kernel = cover_kernel_iterate(decode_text<AlphaCombination>(alpha), m, depth);
  json data = {{"m", m}, {"depth", depth}, {"in_kernel", in_kernel}};
  return {data, lines({std::string("in kernel: ") + (in_kernel ? "yes" : "no")}), {}};
}

// ---- whitehead ----------------------------------------------------------------

Output whitehead_facet_cmd(const std::string& facet, std::int64_t alpha, std::int64_t beta, int n,
                           std::int64_t velocity) {
  require_n(n);
  const Facet f = parse_facet(facet);
  const BracketElem img = facet_map(f, LaurentPoly2::monomial({alpha, beta}), n, velocity);
  json data = {{"facet", facet_name(f)}, {"alpha", alpha}, {"beta", beta}, {"n", n}, {"image", encode(img)}};
  return {data, lines({facet_name(f) + ": " + to_string(img)}), {}};
}

Output whitehead_relators_cmd(int n, const std::string& window) {
  require_n(n);
  const auto [lo, hi] = parse_window(window);
  json rels = json::array();
  std::vector<std::string> rows;
  for (const auto& r : derive_R_relators(n, lo, hi)) {
    if (r.relator.is_zero()) continue;
    rels.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"relator", encode(r.relator)}});
    rows.push_back("(" + std::to_string(r.alpha) + "," + std::to_string(r.beta) + "): (" +
                   to_string(r.relator, "t1", "t3") + ")*[w12,w23]");
  }
  return {json{{"n", n}, {"window", {lo, hi}}, {"relators", rels}}, lines(rows), {}};
}

// ---- hexagon ------------------------------------------------------------------

Output orbit_cmd(std::int64_t a, std::int64_t b) {
  const HexOrbit o = orbit_of(a, b);
  std::string elems;
  for (std::size_t i = 0; i < o.elements.size(); ++i)
    elems += (i ? " " : "") + std::string("(") + std::to_string(o.elements[i][0]) + "," +
             std::to_string(o.elements[i][1]) + ")";
  std::string text = "rep (" + std::to_string(o.rep[0]) + "," + std::to_string(o.rep[1]) + ") type " +
                     orbit_type_name(o.type) + " size " + std::to_string(o.elements.size()) + "\n" + elems;
  return {encode(o), lines({text}), {}};
}

Output orbit_structure_cmd(std::int64_t a, std::int64_t b, int n) {
  require_n(n);
  const HexOrbit o = orbit_of(a, b);
  const IntMatrix R = orbit_relators(o, n);
  const QuotientStructure q = cokernel_structure(R);
  json data = encode(o);
  data["n"] = n;
  data["structure"] = encode(q);
  data["relators"] = encode(R);
  std::string text = "orbit (" + std::to_string(o.rep[0]) + "," + std::to_string(o.rep[1]) + ") " +
                     orbit_type_name(o.type) + ", n=" + std::to_string(n) + ": " + format_structure(q);
  return {data, lines({text}), {}};
}

Output hex_reduce_cmd(int n, const std::string& poly) {
  require_n(n);
  const HexNormalForm nf = hex_normal_form({decode_text<LaurentPoly2>(poly), n});
  return {encode(nf), lines({to_string(nf)}), {}};
}

Output hex_change_basis_cmd(const std::string& dir, const std::string& poly) {
  const LaurentPoly2 x = decode_text<LaurentPoly2>(poly);
  LaurentPoly2 y;
  std::string vars1, vars2;
  if (dir == "13to12") {
    y = basis_change_13_to_12(x);
    vars1 = "t1";
    vars2 = "t2";
  } else if (dir == "12to13") {
    y = basis_change_12_to_13(x);
    vars1 = "t1";
    vars2 = "t3";
  } else {
    throw ValidationError("--dir must be 13to12 or 12to13, got '" + dir + "'");
  }
  return {encode(y), lines({to_string(y, vars1, vars2)}), {}};
}

// ---- classes -----------------------------------------------------------------

Output fk_cmd(std::int64_t k, bool per_level, bool check_skew, bool sum) {
  require(k >= 2, "k must be >= 2, got " + std::to_string(k));
  const std::vector<GClass> F = f_matrix(k);
  const std::size_t side = static_cast<std::size_t>(k - 1);
  auto at = [&](std::int64_t p, std::int64_t q) -> const GClass& {
    return F[static_cast<std::size_t>(p - 1) * side + static_cast<std::size_t>(q - 1)];
  };

  json data = {{"k", k}};
  std::vector<std::string> text;
  std::string csv = "level,p,q,gp,gq,coefficient\n";
  auto csv_rows = [&](const std::string& level, std::int64_t p, std::int64_t q, const GClass& x) {
    for (const auto& [pq, c] : x.terms())
      csv += level + "," + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(pq[0]) + "," +
             std::to_string(pq[1]) + "," + c.get_str() + "\n";
  };

  json matrix = json::array();
  for (std::int64_t p = 1; p < k; ++p)
    for (std::int64_t q = 1; q < k; ++q) {
      matrix.push_back({{"p", p}, {"q", q}, {"class", encode(at(p, q))}});
      text.push_back("F(" + std::to_string(p) + "," + std::to_string(q) + ") = " + to_string(at(p, q)));
      csv_rows("closed", p, q, at(p, q));
    }
  data["matrix"] = matrix;

  if (per_level) {
    json levels = json::array();
    for (std::int64_t L = 1; L < k; ++L)
      for (std::int64_t p = 1; p < k; ++p)
        for (std::int64_t q = 1; q < k; ++q) {
          const GClass x = f_level(k, L, p, q);
          levels.push_back({{"level", L}, {"p", p}, {"q", q}, {"class", encode(x)}});
          text.push_back("F^" + std::to_string(L) + "(" + std::to_string(p) + "," + std::to_string(q) +
                         ") = " + to_string(x));
          csv_rows(std::to_string(L), p, q, x);
        }
    data["levels"] = levels;
  }

  if (check_skew) {
    for (std::int64_t p = 1; p < k; ++p)
      for (std::int64_t q = p; q < k; ++q)
        ensure((at(p, q) + at(q, p)).is_zero(),
               "skew symmetry fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    data["skew"] = "OK";
    text.push_back("skew: OK");
  }

  if (sum) {
    GClass total;
    for (const auto& x : F) total += x;
    data["sum"] = encode(total);
    text.push_back("sum: " + to_string(total));
  }
  return {data, lines(text), csv};
}

Output delta_cmd(std::int64_t k, bool expand, bool with_w3, std::optional<int> n) {
  const GClass x = delta(k);
  json data = encode(x);
  data["k"] = k;
  std::vector<std::string> text;
  if (expand) {
    text.push_back("delta_" + std::to_string(k) + " = " + to_string(x));
  } else {
    const std::string p = std::to_string(k - 1), q = std::to_string(k - 2);
    text.push_back("delta_" + std::to_string(k) + " = F_" + std::to_string(k) + "(" + p + "," + q + ") = IIr(" + p +
                   "," + q + ") + " + std::to_string(k - 2) + "*I(" + p + "," + q + ")");
    text.push_back("G-terms: " + std::to_string(x.size()));
  }
  if (with_w3) {
    require(n.has_value(), "--w3 requires --n");
    require_n(*n);
    const HexNormalForm nf = hex_normal_form(w3(x, *n));
    data["w3"] = encode(nf);
    text.push_back(std::string("W3 (n=") + std::to_string(*n) + "): " + (nf.is_zero() ? "zero" : "nonzero"));
    if (!nf.is_zero()) text.push_back(to_string(nf));
  }
  return {data, lines(text), {}};
}

Output twist_cmd(std::int64_t k, const std::string& v, const std::string& w) {
  const GClass x = twist_class(k, parse_int_list(v), parse_int_list(w));
  json data = encode(x);
  data["k"] = k;
  return {data, lines({to_string(x)}), {}};
}

Output independence_cmd(std::int64_t kmin, std::int64_t kmax, int n) {
  require(kmin >= 3, "kmin must be >= 3, got " + std::to_string(kmin));
  require(kmax >= kmin, "kmax must be >= kmin");
  require_n(n);
  std::vector<GClass> deltas;
  for (std::int64_t k = kmin; k <= kmax; ++k) deltas.push_back(delta(k));
  const IndependenceReport r = independence_rank(deltas, n);
  const bool independent = r.rank == deltas.size();
  json reps = json::array();
  for (const auto& p : r.orbit_reps) reps.push_back(point_json(p));
  json data = {{"kmin", kmin},        {"kmax", kmax},       {"n", n},
               {"rank", r.rank},      {"count", deltas.size()}, {"independent", independent},
               {"orbits", reps},      {"block_sizes", r.block_sizes}, {"certificate", encode(r.certificate)}};
  std::string text = "rank " + std::to_string(r.rank) + " / " + std::to_string(deltas.size()) + ": " +
                     (independent ? "independent" : "dependent");
  return {data, lines({text}), {}};
}

Output selfcheck_cmd(const SelfcheckOptions& opts, bool& failed, std::string& failed_name) {
  const auto results = run_selfcheck(opts);
  json checks = json::array();
  std::vector<std::string> text;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    text.push_back((r.ok ? "ok    " : "FAIL  ") + r.name + (r.detail.empty() ? "" : ": " + r.detail));
    if (!r.ok && !failed) {
      failed = true;
      failed_name = r.name;
    }
  }
  if (!failed) text.push_back("selfcheck: " + std::to_string(results.size()) + " checks passed");
  return {json{{"kmax", opts.kmax}, {"passed", !failed}, {"checks", checks}}, lines(text), {}};
}

void emit(const Output& o, const std::string& format, const std::string& path, std::ostream& out) {
  std::string body;
  if (format == "json") {
    body = o.data.dump(2) + "\n";
  } else if (format == "csv") {
    require(o.csv.has_value(), "csv output is only available for the fk matrix");
    body = *o.csv;
  } else {
    body = o.text;
  }
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), "cannot open output file '" + path + "'");
  f << body;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const SelfcheckOptions& selfcheck_defaults) {
  CLI::App app{"Exact W2/W3 invariant calculator", "barbell"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  std::int64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "Write the report to FILE instead of stdout");
  app.add_option("--seed", seed, "Accepted for harness compatibility; ignored");

  std::int64_t w0 = 0, m = 1, depth = 1, k = 0, kmin = 0, kmax = 0, alpha = 0, beta = 0, velocity = 0;
  int n = 3;
  std::optional<int> n_opt;
  std::string poly, window, alpha_json, facet, dir, v_csv, w_csv;
  bool per_level = false, check_skew = false, sum = false, expand = false, with_w3 = false;

  auto* lambda_cmd = app.add_subcommand("lambda", "Lambda^{W0}_n quotient");
  lambda_cmd->require_subcommand(1);
  auto* lam_reduce = lambda_cmd->add_subcommand("reduce", "Normal form of a Laurent polynomial");
  lam_reduce->add_option("--w0", w0)->required();
  lam_reduce->add_option("--n", n)->required();
  lam_reduce->add_option("--poly", poly, "JSON one-variable polynomial")->required();
  auto* lam_struct = lambda_cmd->add_subcommand("structure", "Brute-force quotient structure on a window");
  lam_struct->add_option("--w0", w0)->required();
  lam_struct->add_option("--n", n)->required();
  lam_struct->add_option("--window", window, "LO,HI")->required();

  auto* cover = app.add_subcommand("cover", "Finite-cover endomorphism on alpha generators");
  cover->require_subcommand(1);
  auto* cover_apply = cover->add_subcommand("apply", "Apply the pullback once");
  cover_apply->add_option("--m", m)->required();
  cover_apply->add_option("--alpha", alpha_json, "JSON alpha combination")->required();
  auto* cover_kernel = cover->add_subcommand("kernel", "Is x killed by depth iterates?");
  cover_kernel->add_option("--m", m)->required();
  cover_kernel->add_option("--depth", depth)->required();
  cover_kernel->add_option("--alpha", alpha_json, "JSON alpha combination")->required();

  auto* wh = app.add_subcommand("whitehead", "Whitehead bracket model on three points");
  wh->require_subcommand(1);
  auto* wh_facet = wh->add_subcommand("facet", "Image of [t1^A w12, t1^B w12] under a facet map");
  wh_facet->add_option("--facet", facet, "t1=0 | t1=t2 | t2=t3 | t3=1")->required();
  wh_facet->add_option("--alpha", alpha)->required();
  wh_facet->add_option("--beta", beta)->required();
  wh_facet->add_option("--n", n)->required();
  wh_facet->add_option("--a", velocity, "Velocity degree a1/a2");
  auto* wh_rel = wh->add_subcommand("relators", "Derived relators over a square window");
  wh_rel->add_option("--n", n)->required();
  wh_rel->add_option("--window", window, "LO,HI")->required();

  auto* orbit = app.add_subcommand("orbit", "Hexagon orbit of a lattice point");
  orbit->require_subcommand(0, 1);
  orbit->add_option("--alpha", alpha);
  orbit->add_option("--beta", beta);
  auto* orbit_struct = orbit->add_subcommand("structure", "Quotient structure of one orbit");
  orbit_struct->add_option("--alpha", alpha)->required();
  orbit_struct->add_option("--beta", beta)->required();
  orbit_struct->add_option("--n", n)->required();

  auto* hex = app.add_subcommand("hex", "Hexagon quotient");
  hex->require_subcommand(1);
  auto* hex_reduce = hex->add_subcommand("reduce", "Normal form in the hexagon quotient");
  hex_reduce->add_option("--n", n)->required();
  hex_reduce->add_option("--poly", poly, "JSON two-variable polynomial")->required();
  auto* hex_cb = hex->add_subcommand("change-basis", "Switch between the [w12,w23] and [w13,w23] charts");
  hex_cb->add_option("--dir", dir, "13to12 | 12to13")->required();
  hex_cb->add_option("--poly", poly, "JSON two-variable polynomial")->required();

  auto* fk = app.add_subcommand("fk", "The F_k matrix");
  fk->add_option("--k", k)->required();
  fk->add_flag("--per-level", per_level);
  fk->add_flag("--check-skew", check_skew);
  fk->add_flag("--sum", sum);

  auto* dl = app.add_subcommand("delta", "The class delta_k");
  dl->add_option("--k", k)->required();
  dl->add_flag("--expand", expand);
  dl->add_flag("--w3", with_w3);
  dl->add_option("--n", n_opt);

  auto* tw = app.add_subcommand("twist", "Twisted class sum v_p w_q F_k(p,q)");
  tw->add_option("--k", k)->required();
  tw->add_option("--v", v_csv, "comma-separated integers")->required();
  tw->add_option("--w", w_csv, "comma-separated integers")->required();

  auto* ind = app.add_subcommand("independence", "Rank of W3(delta_kmin..delta_kmax)");
  ind->add_option("--kmin", kmin)->required();
  ind->add_option("--kmax", kmax)->required();
  ind->add_option("--n", n)->required();

  SelfcheckOptions sc = selfcheck_defaults;
  auto* self = app.add_subcommand("selfcheck", "Run the invariant suite");
  self->add_option("--kmax", sc.kmax);

  std::vector<std::string> argv_store{"barbell"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Name the offending token when the subcommand itself is unknown.
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--format" || a == "--output" || a == "--seed") {
        ++i;
        continue;
      }
      if (a.rfind("-", 0) == 0) continue;
      if (app.get_subcommands([&](CLI::App* sub) { return sub->get_name() == a; }).empty()) {
        err << "error: unknown subcommand '" << a << "'\n";
        return kValidation;
      }
      break;
    }
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    Output result;
    bool selfcheck_failed = false;
    std::string failed_name;
    if (lam_reduce->parsed()) {
      result = lambda_reduce_cmd(w0, n, poly);
    } else if (lam_struct->parsed()) {
      result = lambda_structure_cmd(w0, n, window);
    } else if (cover_apply->parsed()) {
      result = cover_apply_cmd(m, alpha_json);
    } else if (cover_kernel->parsed()) {
      result = cover_kernel_cmd(m, depth, alpha_json);
    } else if (wh_facet->parsed()) {
      result = whitehead_facet_cmd(facet, alpha, beta, n, velocity);
    } else if (wh_rel->parsed()) {
      result = whitehead_relators_cmd(n, window);
    } else if (orbit_struct->parsed()) {
      result = orbit_structure_cmd(alpha, beta, n);
    } else if (orbit->parsed()) {
      require(orbit->count("--alpha") && orbit->count("--beta"), "orbit requires --alpha and --beta");
      result = orbit_cmd(alpha, beta);
    } else if (hex_reduce->parsed()) {
      result = hex_reduce_cmd(n, poly);
    } else if (hex_cb->parsed()) {
      result = hex_change_basis_cmd(dir, poly);
    } else if (fk->parsed()) {
      result = fk_cmd(k, per_level, check_skew, sum);
    } else if (dl->parsed()) {
      result = delta_cmd(k, expand, with_w3, n_opt);
    } else if (tw->parsed()) {
      result = twist_cmd(k, v_csv, w_csv);
    } else if (ind->parsed()) {
      result = independence_cmd(kmin, kmax, n);
    } else if (self->parsed()) {
      require(sc.kmax >= 4, "selfcheck --kmax must be >= 4");
      result = selfcheck_cmd(sc, selfcheck_failed, failed_name);
    } else {
      throw ValidationError("no subcommand given");
    }
    emit(result, format, output, out);
    if (selfcheck_failed) {
      err << "selfcheck failed: " << failed_name << "\n";
      return kInvariant;
    }
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}

}  // namespace barbell::cli
