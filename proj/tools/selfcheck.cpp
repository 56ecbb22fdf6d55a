#include <functional>
#include <optional>
#include <random>
#include <set>

#include "barbell/classes.hpp"
#include "barbell/lambda.hpp"
#include "barbell/serialize.hpp"
#include "barbell/whitehead.hpp"
#include "cli.hpp"

namespace barbell::cli {

namespace {

using Failure = std::optional<std::string>;
using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

LaurentPoly1 random_poly1(Rng& rng, std::int64_t lo, std::int64_t hi, int max_terms = 6) {
  LaurentPoly1 p;
  const int terms = static_cast<int>(uniform(rng, 0, max_terms));
  for (int i = 0; i < terms; ++i) p.add_term(uniform(rng, lo, hi), make_int(uniform(rng, -5, 5)));
  return p;
}

LaurentPoly2 random_poly2(Rng& rng, std::int64_t lo, std::int64_t hi, int max_terms = 6) {
  LaurentPoly2 p;
  const int terms = static_cast<int>(uniform(rng, 0, max_terms));
  for (int i = 0; i < terms; ++i)
    p.add_term({uniform(rng, lo, hi), uniform(rng, lo, hi)}, make_int(uniform(rng, -5, 5)));
  return p;
}

template <typename Exp>
bool has_zero_coefficient(const LaurentPoly<Exp>& p) {
  for (const auto& [e, c] : p.terms())
    if (c == 0) return true;
  return false;
}

std::string pt(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<Int> to_row(const LaurentPoly1& p, const ExponentWindow& w) {
  std::vector<Int> row(w.size());
  for (const auto& [e, c] : p.terms()) row[static_cast<std::size_t>(e - w.lo)] = c;
  return row;
}

// ---- laurent / intlat ---------------------------------------------------------

Failure laurent_algebra() {
  Rng rng(11);
  const AffineMap2 r = AffineMap2::hex_rotation();
  for (int it = 0; it < 200; ++it) {
    const auto a = random_poly2(rng, -6, 6), b = random_poly2(rng, -6, 6), c = random_poly2(rng, -6, 6);
    if ((a + b) + c != a + (b + c)) return "addition not associative";
    if (a + b != b + a) return "addition not commutative";
    if (has_zero_coefficient(a + b) || has_zero_coefficient(a - a)) return "zero coefficient stored";
    if (reindex(reindex(a, r), r.inverse()) != a) return "reindex inverse is not the identity";
    LaurentPoly2 six = a;
    for (int i = 0; i < 6; ++i) six = reindex(six, r);
    if (six != a) return "r^6 is not the identity";
    const auto p = random_poly1(rng, -9, 9);
    if (bar(bar(p)) != p) return "bar is not an involution";
  }
  return {};
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = make_int(uniform(rng, -9, 9));
  if (rows >= 3) M.add_row_multiple(rows - 1, 0, make_int(uniform(rng, -3, 3)));
  return M;
}

Failure smith_certificate() {
  Rng rng(12);
  for (int it = 0; it < 120; ++it) {
    const IntMatrix M =
        random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), static_cast<std::size_t>(uniform(rng, 1, 7)));
    const SmithForm s = smith_normal_form(M);
    if (s.U * M * s.V != s.D) return "U*M*V != D";
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return "transform is not unimodular";
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j && s.D(i, j) != 0) return "D is not diagonal";
    const std::size_t r = s.rank();
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (!mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t())) return "divisibility chain broken";
    if (rank_over_rationals(M) != r) return "rational rank disagrees with SNF rank";
  }
  return {};
}

Failure cokernel_invariance() {
  Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    IntMatrix M = random_matrix(rng, 4, 5);
    const QuotientStructure before = cokernel_structure(M);
    M.swap_rows(0, static_cast<std::size_t>(uniform(rng, 0, 3)));
    M.negate_row(static_cast<std::size_t>(uniform(rng, 0, 3)));
    M.add_row_multiple(1, 2, make_int(uniform(rng, -4, 4)));
    if (cokernel_structure(M) != before) return "structure changed under row operations";
  }
  return {};
}

// ---- lambda -------------------------------------------------------------------

Failure lambda_oracle() {
  Rng rng(14);
  const ExponentWindow win{-20, 20};
  for (std::int64_t w0 = -6; w0 <= 6; ++w0)
    for (int n = 3; n <= 6; ++n) {
      const LambdaContext ctx(w0, n);
      const IntMatrix R = lambda_relator_matrix(ctx, win);
      const RowLattice lattice(R);
      for (int it = 0; it < 40; ++it) {
        LaurentPoly1 p = random_poly1(rng, -10, 10);
        if (it % 2 == 0) {
          p = LaurentPoly1();
          for (int j = 0; j < 4; ++j) {
            const std::int64_t k = uniform(rng, -10, 10);
            p.add_term(k, make_int(uniform(rng, -3, 3)));
            p.add_term(w0 - 1 - k, make_int(parity_sign(n)) * p.coefficient(k));
          }
          if (it % 4 == 0) p.add_term(uniform(rng, -10, 10), 1);
        }
        const bool zero = lambda_reduce(p, ctx).is_zero();
        if (zero != lattice.contains(to_row(p, win)))
          return "W0=" + std::to_string(w0) + " n=" + std::to_string(n) + " p=" + to_string(p);
      }
    }
  return {};
}

Failure lambda_linearity() {
  Rng rng(15);
  for (int it = 0; it < 300; ++it) {
    const LambdaContext ctx(uniform(rng, -6, 6), static_cast<int>(uniform(rng, 3, 6)));
    const auto p = random_poly1(rng, -12, 12), q = random_poly1(rng, -12, 12);
    const LambdaElement rp = lambda_reduce(p, ctx);
    LaurentPoly1 back = rp.free_part;
    if (rp.torsion_bit) back.add_term(*ctx.fixed_exponent(), 1);
    if (lambda_reduce(back, ctx) != rp) return "reduce is not idempotent";
    if (lambda_reduce(p + q, ctx) != rp + lambda_reduce(q, ctx)) return "reduce is not additive";
  }
  return {};
}

Failure theta_span() {
  for (std::int64_t w0 = -6; w0 <= 6; ++w0)
    for (int n = 3; n <= 6; ++n) {
      const LambdaContext ctx(w0, n);
      std::vector<LaurentPoly1> imgs;
      for (std::int64_t k = -15; k <= 15; ++k) imgs.push_back(w2_theta(k, ctx).free_part);
      const ExponentWindow win{-40, 40};
      IntMatrix M(0, win.size());
      for (const auto& x : imgs) M.append_row(to_row(x, win));
      const RowLattice span(M);
      for (std::int64_t g = -14; g <= 14; ++g) {
        const LambdaElement unit = lambda_reduce(LaurentPoly1::monomial(g), ctx);
        if (unit.free_part != LaurentPoly1::monomial(g)) continue;  // not a surviving free generator
        if (!span.contains(to_row(unit.free_part, win)))
          return "t^" + std::to_string(g) + " missing for W0=" + std::to_string(w0) + " n=" + std::to_string(n);
      }
    }
  return {};
}

Failure cover_composition() {
  Rng rng(16);
  for (std::int64_t m1 = 1; m1 <= 6; ++m1)
    for (std::int64_t m2 = 1; m2 <= 6; ++m2)
      for (int it = 0; it < 10; ++it) {
        AlphaCombination x;
        for (int j = 0; j < 5; ++j) x.add_term(uniform(rng, 1, 72), make_int(uniform(rng, -4, 4)));
        if (cover_pullback(m1 * m2, x) != cover_pullback(m1, cover_pullback(m2, x)))
          return "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2);
      }
  return {};
}

// ---- whitehead ----------------------------------------------------------------

Failure facet_velocity() {
  for (int n = 3; n <= 4; ++n)
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b) {
        const auto x = LaurentPoly2::monomial({a, b});
        for (Facet f : {Facet::double_first, Facet::double_second}) {
          const BracketElem base = facet_map(f, x, n, 0);
          for (std::int64_t v = -3; v <= 3; ++v) {
            const BracketElem img = facet_map(f, x, n, v);
            // n even: v^2 [w,w] lands in the w12/w23 pair summands, which R kills
            const bool same = n % 2 != 0 ? img == base : modulo_end_pairs(img) == modulo_end_pairs(base);
            if (!same) return facet_name(f) + " depends on velocity at " + pt(a, b);
          }
        }
      }
  return {};
}

Failure cyclic_identity() {
  for (int n = 3; n <= 6; ++n) {
    const Monomial3 one{0, 0, 0};
    const BracketElem a = bracket(deg_n_normalize(1, 2, one, n), deg_n_normalize(2, 3, one, n));
    const BracketElem b = bracket(deg_n_normalize(2, 3, one, n), deg_n_normalize(3, 1, one, n));
    const BracketElem c = bracket(deg_n_normalize(3, 1, one, n), deg_n_normalize(1, 2, one, n));
    if (a != b || b != c) return "n=" + std::to_string(n);
  }
  return {};
}

DegNElem random_degn(Rng& rng, int n) {
  DegNElem x(n);
  for (int t = 0; t < 3; ++t) {
    const int i = static_cast<int>(uniform(rng, 1, 3));
    const int j = static_cast<int>(uniform(rng, 1, 3));
    x.add_raw(i, j, {uniform(rng, -4, 4), uniform(rng, -4, 4), uniform(rng, -4, 4)}, make_int(uniform(rng, -3, 3)));
  }
  return x;
}

Failure t_action() {
  Rng rng(17);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(uniform(rng, 3, 6));
    const DegNElem x = random_degn(rng, n), y = random_degn(rng, n);
    const Monomial3 mu{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)};
    if (bracket(act(mu, x), act(mu, y)) != act(mu, bracket(x, y))) return "bracket(mu x, mu y) != mu bracket(x, y)";
  }
  return {};
}

// ---- hexagon ------------------------------------------------------------------

bool on_six_line(const Point& p) {
  const auto [a, b] = p;
  return a + b == 0 || a - b == 0 || a == 0 || b == 0 || 2 * a == b || 2 * b == a;
}

Failure orbit_partition() {
  Rng rng(18);
  for (int it = 0; it < 1000; ++it) {
    const Point x{uniform(rng, -30, 30), uniform(rng, -30, 30)};
    Point y = x;
    for (int i = 0; i < 6; ++i) y = hex_rotate(y);
    if (y != x) return "r^6 != id at " + pt(x[0], x[1]);
    if (hex_reflect(hex_reflect(x)) != x) return "s^2 != id";
    if (hex_reflect(hex_rotate(hex_reflect(hex_rotate(x)))) != x) return "srs != r^-1";
    const HexOrbit o = orbit_of(x[0], x[1]);
    const bool expect_six = (x != Point{0, 0}) && on_six_line(x);
    if ((o.type == OrbitType::six) != expect_six) return "orbit type mismatch at " + pt(x[0], x[1]);
    const Point z{uniform(rng, -4, 4), uniform(rng, -4, 4)};
    const Point w = uniform(rng, 0, 1) ? z : o.elements[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(o.elements.size()) - 1))];
    if ((orbit_rep(w) == o.rep) != o.contains(w)) return "orbits neither coincide nor are disjoint";
  }
  return {};
}

Failure relator_locality(const RelatorSource& source) {
  for (int n = 3; n <= 4; ++n)
    for (std::int64_t p = -10; p <= 10; ++p)
      for (std::int64_t q = -10; q <= 10; ++q) {
        const HexOrbit o = orbit_of(p, q);
        const LaurentPoly2 rel = source({p, q}, n);
        for (const auto& [e, c] : rel.terms())
          if (!o.contains(e)) return "relator at " + pt(p, q) + " touches " + pt(e[0], e[1]);
      }
  return {};
}

// Derived relators (pushed to the [w13,w23] chart) against orbit_relators, per
// orbit entirely inside the window.
Failure relator_family(const RelatorSource& source, std::int64_t radius) {
  for (int n = 3; n <= 4; ++n) {
    std::map<Point, std::vector<LaurentPoly2>> by_orbit;
    for (const auto& r : derive_R_relators(n, -radius, radius)) {
      const LaurentPoly2 moved = basis_change_13_to_12(r.relator);
      if (moved.is_zero()) continue;
      by_orbit[orbit_rep(moved.terms().begin()->first)].push_back(moved);
    }
    std::set<Point> reps;
    for (std::int64_t a = -radius; a <= radius; ++a)
      for (std::int64_t b = -radius; b <= radius; ++b) reps.insert(orbit_rep({a, b}));
    for (const Point& rep : reps) {
      const HexOrbit o = orbit_of(rep[0], rep[1]);
      // the derived relator at (a,b) is +-K(a,b) after the chart change
      bool inside = true;
      for (const Point& e : o.elements)
        if (e[0] < -radius || e[0] > radius || e[1] < -radius || e[1] > radius) inside = false;
      if (!inside) continue;
      IntMatrix D(0, o.elements.size());
      for (const auto& rel : by_orbit[rep]) {
        std::vector<Int> row(o.elements.size());
        for (const auto& [e, c] : rel.terms()) {
          if (!o.contains(e)) return "derived relator leaves orbit " + pt(rep[0], rep[1]);
          row[o.index_of(e)] = c;
        }
        D.append_row(row);
      }
      const IntMatrix K = orbit_relators(o, n, source);
      if (!(RowLattice(D) == RowLattice(K)))
        return "span mismatch on orbit " + pt(rep[0], rep[1]) + " n=" + std::to_string(n);
    }
  }
  return {};
}

Failure normal_form_soundness() {
  Rng rng(19);
  for (int it = 0; it < 150; ++it) {
    const int n = static_cast<int>(uniform(rng, 3, 4));
    const LaurentPoly2 x = random_poly2(rng, -5, 5);
    LaurentPoly2 y = x;
    for (int j = 0; j < 3; ++j)
      y += hexagon_relator({uniform(rng, -5, 5), uniform(rng, -5, 5)}, n).scaled(make_int(uniform(rng, -3, 3)));
    if (it % 3 == 0) y.add_term({uniform(rng, -5, 5), uniform(rng, -5, 5)}, make_int(uniform(rng, 1, 2)));
    const bool same = hex_normal_form({x, n}) == hex_normal_form({y, n});
    const LaurentPoly2 diff = x - y;
    bool member = true;
    std::set<Point> reps;
    for (const auto& [e, c] : diff.terms()) reps.insert(orbit_rep(e));
    for (const Point& rep : reps) {
      const HexOrbit o = orbit_of(rep[0], rep[1]);
      std::vector<Int> v(o.elements.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = diff.coefficient(o.elements[i]);
      if (!RowLattice(orbit_relators(o, n)).contains(v)) member = false;
    }
    if (same != member) return "normal form disagrees with lattice membership";
  }
  return {};
}

Failure torsion_only_two() {
  std::set<Point> reps;
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b) reps.insert(orbit_rep({a, b}));
  for (int n = 3; n <= 4; ++n)
    for (const Point& rep : reps)
      for (const Int& t : orbit_structure(orbit_of(rep[0], rep[1]), n).torsion)
        if (t != 2) return "torsion factor " + t.get_str() + " on orbit " + pt(rep[0], rep[1]);
  return {};
}

// ---- classes ------------------------------------------------------------------

Failure skew_symmetry(std::int64_t kmax) {
  for (std::int64_t k = 2; k <= kmax; ++k) {
    const auto F = f_matrix(k);
    const std::size_t s = static_cast<std::size_t>(k - 1);
    for (std::size_t p = 0; p < s; ++p)
      for (std::size_t q = 0; q < s; ++q)
        if (!(F[p * s + q] + F[q * s + p]).is_zero()) return "k=" + std::to_string(k);
  }
  return {};
}

Failure theta_hat(std::int64_t kmax) {
  for (std::int64_t k = 2; k <= kmax; ++k) {
    GClass total;
    for (const auto& x : f_matrix(k)) total += x;
    if (!total.is_zero()) return "k=" + std::to_string(k);
  }
  return {};
}

Failure per_level(std::int64_t kmax) {
  for (std::int64_t k = 2; k <= std::min<std::int64_t>(kmax, 20); ++k)
    for (std::int64_t p = 1; p < k; ++p)
      for (std::int64_t q = 1; q < k; ++q) {
        GClass total;
        for (std::int64_t L = 1; L < k; ++L) total += f_level(k, L, p, q);
        if (total != f_closed(k, p, q)) return "k=" + std::to_string(k) + " " + pt(p, q);
      }
  return {};
}

Failure symmetric_g() {
  for (std::int64_t p = -8; p <= 8; ++p)
    for (std::int64_t q = -8; q <= 8; ++q) {
      const GClass diff = e(p, q) - (-gstar(-q, p) + gstar(p, -q));
      if (!hex_normal_form(w3(diff, 3)).is_zero()) return "at " + pt(p, q);
    }
  return {};
}

Failure w3_hexagon() {
  Rng rng(20);
  for (int it = 0; it < 200; ++it) {
    const std::int64_t p = uniform(rng, -12, 12), q = uniform(rng, -12, 12);
    const GClass hex = g(p, q) + g(p, p - q) - g(q, p) - g(q, q - p);
    if (!hex_normal_form(w3(hex, 3)).is_zero()) return "hexagon combination survives at " + pt(p, q);
    for (int n = 3; n <= 4; ++n) {
      const int s = parity_sign(n - 1);
      const GClass k = g(p, q) - g(q, q - p) + (g(p, p - q) - g(q, p)).scaled(s);
      if (!hex_normal_form(w3(k, n)).is_zero()) return "signed relator survives at " + pt(p, q);
    }
  }
  return {};
}

Failure basis_change_sign() {
  Rng rng(21);
  std::optional<int> eps;
  for (int it = 0; it < 100; ++it) {
    const std::int64_t p = uniform(rng, -20, 20), q = uniform(rng, -20, 20);
    const LaurentPoly2 img = basis_change_13_to_12(LaurentPoly2::monomial({p - q, -q}));
    const Int c = img.coefficient({p, q});
    if (img.size() != 1 || abs(c) != 1) return "image is not a signed monomial at " + pt(p, q);
    const int s = c > 0 ? 1 : -1;
    if (eps && *eps != s) return "sign depends on (p,q)";
    eps = s;
    const Monomial3 mu{p, q, 0};
    const BracketElem model = bracket(deg_n_normalize(1, 3, mu, 3), deg_n_normalize(2, 3, mu, 3));
    if (model.triple() != basis_change_12_to_13(LaurentPoly2::monomial({p, q})))
      return "bracket model disagrees with the chart change at " + pt(p, q);
  }
  return {};
}

Failure delta_expansion_check(std::int64_t kmax) {
  for (std::int64_t k = 3; k <= kmax; ++k) {
    if (delta(k) != delta_expansion(k)) return "eight-term expansion differs at k=" + std::to_string(k);
    std::vector<Int> v(static_cast<std::size_t>(k - 1)), w(static_cast<std::size_t>(k - 1));
    v[static_cast<std::size_t>(k - 2)] = 1;
    w[static_cast<std::size_t>(k - 3)] = 1;
    if (twist_class(k, v, w) != delta(k)) return "twist differs at k=" + std::to_string(k);
  }
  return {};
}

Failure delta_independence(std::int64_t kmax) {
  if (!hex_normal_form(w3(delta(3), 3)).is_zero()) return "W3(delta_3) is nonzero";
  std::vector<GClass> ds;
  for (std::int64_t k = 4; k <= kmax; ++k) ds.push_back(delta(k));
  const auto r = independence_rank(ds, 3);
  if (r.rank != ds.size()) return "rank " + std::to_string(r.rank) + " of " + std::to_string(ds.size());
  return {};
}

Failure json_round_trip() {
  Rng rng(22);
  for (int it = 0; it < 100; ++it) {
    GClass x;
    for (int j = 0; j < 5; ++j) x.add_term(uniform(rng, -9, 9), uniform(rng, -9, 9), make_int(uniform(rng, -9, 9)));
    x.add_term(0, 0, Int("123456789012345678901234567890"));
    if (decode_text<GClass>(encode(x).dump()) != x) return "GClass";
    const auto p1 = random_poly1(rng, -9, 9);
    if (decode_text<LaurentPoly1>(encode(p1).dump()) != p1) return "LaurentPoly1";
    const auto p2 = random_poly2(rng, -9, 9);
    if (decode_text<LaurentPoly2>(encode(p2).dump()) != p2) return "LaurentPoly2";
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts) {
  const std::int64_t kmax = opts.kmax;
  const std::vector<std::pair<std::string, std::function<Failure()>>> checks = {
      {"laurent algebra", laurent_algebra},
      {"smith certificate", smith_certificate},
      {"cokernel row-operation invariance", cokernel_invariance},
      {"lambda oracle", lambda_oracle},
      {"lambda idempotent and additive", lambda_linearity},
      {"theta span", theta_span},
      {"cover composition", cover_composition},
      {"facet velocity independence", facet_velocity},
      {"bracket cyclic identity", cyclic_identity},
      {"bracket t-action", t_action},
      {"orbit partition", orbit_partition},
      {"relator orbit-locality", [&] { return relator_locality(opts.relators); }},
      {"relator family equivalence", [&] { return relator_family(opts.relators, 6); }},
      {"normal-form soundness", normal_form_soundness},
      {"torsion only 2", torsion_only_two},
      {"skew symmetry", [&] { return skew_symmetry(kmax); }},
      {"theta-hat triviality", [&] { return theta_hat(kmax); }},
      {"per-level agreement", [&] { return per_level(kmax); }},
      {"symmetric-G compatibility", symmetric_g},
      {"w3 hexagon factoring", w3_hexagon},
      {"basis-change sign", basis_change_sign},
      {"delta expansion", [&] { return delta_expansion_check(kmax); }},
      {"delta independence", [&] { return delta_independence(kmax); }},
      {"json round trip", json_round_trip},
  };

  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, true, {}};
    try {
      if (auto failure = fn()) {
        r.ok = false;
        r.detail = *failure;
      }
    } catch (const std::exception& ex) {
      r.ok = false;
      r.detail = ex.what();
    }
    results.push_back(r);
    if (!r.ok) break;
  }
  return results;
}

}  // namespace barbell::cli
