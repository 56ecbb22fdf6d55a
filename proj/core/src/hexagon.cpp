#include "barbell/hexagon.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace barbell {

Point hex_rotate(const Point& x) { return {x[0] - x[1], x[0]}; }
Point hex_reflect(const Point& x) { return {-x[1], -x[0]}; }

std::string orbit_type_name(OrbitType t) {
  switch (t) {
    case OrbitType::origin: return "origin";
    case OrbitType::six: return "six";
    case OrbitType::twelve: return "twelve";
  }
  return "?";
}

std::size_t HexOrbit::index_of(const Point& p) const {
  auto it = std::find(elements.begin(), elements.end(), p);
  ensure(it != elements.end(), "point is not in this orbit");
  return static_cast<std::size_t>(it - elements.begin());
}

bool HexOrbit::contains(const Point& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

namespace {

std::vector<Point> traverse(const Point& start) {
  std::vector<Point> out;
  auto push = [&](const Point& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  Point cur = start;
  for (int i = 0; i < 6; ++i, cur = hex_rotate(cur)) push(cur);
  const std::size_t rotations = out.size();
  for (std::size_t i = 0; i < rotations; ++i) push(hex_reflect(out[i]));
  return out;
}

}  // namespace

Point orbit_rep(const Point& p) {
  const auto pts = traverse(p);
  return *std::min_element(pts.begin(), pts.end());
}

HexOrbit orbit_of(std::int64_t alpha, std::int64_t beta) {
  HexOrbit o;
  o.rep = orbit_rep({alpha, beta});
  o.elements = traverse(o.rep);
  switch (o.elements.size()) {
    case 1: o.type = OrbitType::origin; break;
    case 6: o.type = OrbitType::six; break;
    case 12: o.type = OrbitType::twelve; break;
    default: throw InvariantViolation("hexagon orbit of unexpected size " + std::to_string(o.elements.size()));
  }
  return o;
}

LaurentPoly2 hexagon_relator(const Point& pq, int n) {
  const auto [p, q] = pq;
  const int s = parity_sign(n - 1);
  LaurentPoly2 k;
  k.add_term({p, q}, 1).add_term({q, q - p}, -1).add_term({p, p - q}, s).add_term({q, p}, -s);
  return k;
}

IntMatrix orbit_relators(const HexOrbit& orbit, int n, const RelatorSource& source) {
  const std::size_t m = orbit.elements.size();
  IntMatrix R(0, m);
  std::set<std::vector<Int>> seen;
  for (const Point& at : orbit.elements) {
    const LaurentPoly2 rel = source(at, n);
    if (rel.is_zero()) continue;
    std::vector<Int> row(m);
    for (const auto& [e, c] : rel.terms()) {
      ensure(orbit.contains(e), "relator orbit-locality: relator at (" + std::to_string(at[0]) + "," +
                                    std::to_string(at[1]) + ") leaves its orbit");
      row[orbit.index_of(e)] = c;
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Int& v) { return v != 0; });
    if (*lead < 0)
      for (auto& v : row) v = -v;
    if (seen.insert(row).second) R.append_row(row);
  }
  return R;
}

QuotientStructure orbit_structure(const HexOrbit& orbit, int n) {
  return cokernel_structure(orbit_relators(orbit, n));
}

bool OrbitCoordinates::is_zero() const {
  auto zero = [](const Int& v) { return v == 0; };
  return std::all_of(free.begin(), free.end(), zero) && std::all_of(torsion.begin(), torsion.end(), zero);
}

OrbitNormalizer::OrbitNormalizer(HexOrbit orbit, int n)
    : orbit_(std::move(orbit)), relators_(orbit_relators(orbit_, n)), snf_(smith_normal_form(relators_)) {
  rank_ = snf_.rank();
  structure_.free_rank = orbit_.elements.size() - rank_;
  for (std::size_t i = 0; i < rank_; ++i)
    if (snf_.D(i, i) > 1) structure_.torsion.push_back(snf_.D(i, i));
}

OrbitCoordinates OrbitNormalizer::coordinates(const LaurentPoly2& x) const {
  const std::size_t m = orbit_.elements.size();
  std::vector<Int> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = x.coefficient(orbit_.elements[i]);
  OrbitCoordinates out;
  for (std::size_t col = 0; col < m; ++col) {
    Int y = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (v[i] != 0) y += v[i] * snf_.V(i, col);
    if (col >= rank_) {
      out.free.push_back(y);
    } else if (snf_.D(col, col) > 1) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), snf_.D(col, col).get_mpz_t());
      out.torsion.push_back(r);
      out.moduli.push_back(snf_.D(col, col));
    }
  }
  return out;
}

HexNormalForm hex_normal_form(const HexElement& x) {
  HexNormalForm nf;
  nf.n = x.n;
  std::set<Point> reps;
  for (const auto& [e, c] : x.poly.terms()) reps.insert(orbit_rep(e));
  for (const Point& rep : reps) {
    OrbitNormalizer norm(orbit_of(rep[0], rep[1]), x.n);
    OrbitCoordinates coords = norm.coordinates(x.poly);
    if (!coords.is_zero()) nf.orbits.emplace(rep, std::move(coords));
  }
  return nf;
}

namespace {

AffineMap2 chart_13_to_12() {
  AffineMap2 a;
  a.linear = {{{1, -1}, {0, -1}}};
  return a;
}

}  // namespace

LaurentPoly2 basis_change_13_to_12(const LaurentPoly2& x) {
  return reindex(x, chart_13_to_12(), kBasisChangeSign);
}

LaurentPoly2 basis_change_12_to_13(const LaurentPoly2& x) {
  return reindex(x, chart_13_to_12().inverse(), kBasisChangeSign);
}

std::string to_string(const HexNormalForm& nf) {
  if (nf.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rep, c] : nf.orbits) {
    if (!first) os << '\n';
    first = false;
    os << "orbit (" << rep[0] << "," << rep[1] << "): free [";
    for (std::size_t i = 0; i < c.free.size(); ++i) os << (i ? "," : "") << c.free[i].get_str();
    os << "]";
    if (!c.torsion.empty()) {
      os << " torsion [";
      for (std::size_t i = 0; i < c.torsion.size(); ++i)
        os << (i ? "," : "") << c.torsion[i].get_str() << " mod " << c.moduli[i].get_str();
      os << "]";
    }
  }
  return os.str();
}

}  // namespace barbell
