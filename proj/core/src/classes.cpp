#include "barbell/classes.hpp"

#include <set>
#include <sstream>

#include "barbell/parallel.hpp"

namespace barbell {

GClass GClass::generator(std::int64_t p, std::int64_t q, const Int& c) {
  GClass x;
  x.add_term(p, q, c);
  return x;
}

GClass& GClass::add_term(std::int64_t p, std::int64_t q, const Int& c) {
  coeffs_.add_term({p, q}, c);
  return *this;
}

GClass GClass::scaled(const Int& s) const {
  GClass r;
  r.coeffs_ = coeffs_.scaled(s);
  return r;
}

GClass& GClass::operator+=(const GClass& o) {
  coeffs_ += o.coeffs_;
  return *this;
}

GClass& GClass::operator-=(const GClass& o) {
  coeffs_ -= o.coeffs_;
  return *this;
}

GClass g(std::int64_t p, std::int64_t q) { return GClass::generator(p, q); }

GClass gstar(std::int64_t p, std::int64_t q) { return GClass::generator(p, p - q, -1); }

GClass e(std::int64_t p, std::int64_t q) {
  GClass x;
  x.add_term(-q, p, -1).add_term(p, -q, 1);
  return x;
}

GClass d(std::int64_t p, std::int64_t q) {
  GClass x;
  x.add_term(q, -p, -1).add_term(-q, p, 1).add_term(p, -q, -1).add_term(-p, q, 1);
  return x;
}

RomanForm parse_roman(std::string_view tag) {
  if (tag == "I") return RomanForm::I;
  if (tag == "IIb") return RomanForm::IIb;
  if (tag == "IIbe") return RomanForm::IIbe;
  if (tag == "IIr") return RomanForm::IIr;
  if (tag == "IIre") return RomanForm::IIre;
  throw ValidationError("unknown roman form '" + std::string(tag) + "'");
}

std::string roman_name(RomanForm f) {
  switch (f) {
    case RomanForm::I: return "I";
    case RomanForm::IIb: return "IIb";
    case RomanForm::IIbe: return "IIbe";
    case RomanForm::IIr: return "IIr";
    case RomanForm::IIre: return "IIre";
  }
  return "?";
}

GClass roman(RomanForm form, std::int64_t p, std::int64_t q) {
  switch (form) {
    case RomanForm::I: return d(p, -q);
    case RomanForm::IIb: return d(-q, p) - d(p - q, -p);
    case RomanForm::IIbe: return d(-q, p) - d(-p - q, p) - d(p - q, -p) + d(-q, -p);
    case RomanForm::IIr: return d(p, -q) - d(p - q, q);
    case RomanForm::IIre: return d(p, -q) - d(p + q, -q) - d(p - q, q) + d(p, q);
  }
  throw ValidationError("unknown roman form");
}

namespace {

void check_kpq(std::int64_t k, std::int64_t p, std::int64_t q) {
  require(k >= 2, "k must be >= 2, got " + std::to_string(k));
  require(p >= 1 && p <= k - 1, "p must satisfy 1 <= p <= k-1, got p=" + std::to_string(p));
  require(q >= 1 && q <= k - 1, "q must satisfy 1 <= q <= k-1, got q=" + std::to_string(q));
}

}  // namespace

GClass f_level(std::int64_t k, std::int64_t L, std::int64_t p, std::int64_t q) {
  check_kpq(k, p, q);
  require(L >= 1 && L <= k - 1, "level L must satisfy 1 <= L <= k-1, got L=" + std::to_string(L));
  const bool p_big = p >= k - L;
  const bool q_big = q >= L;
  const bool wraps = p + q >= k;
  if (p_big && q_big) return d(p, -q);
  if (p_big) {  // q < L
    GClass s = wraps ? d(p, -q) : d(p, -q) - d(p + q, -q);
    GClass r = wraps ? -d(p - q, q) : d(p, q) - d(p - q, q);
    return s + r;
  }
  if (q_big) {  // p < k-L
    GClass s = wraps ? d(-q, p) : d(-q, p) - d(-p - q, p);
    GClass r = wraps ? -d(p - q, -p) : d(-q, -p) - d(p - q, -p);
    return s + r;
  }
  return {};
}

GClass f_closed(std::int64_t k, std::int64_t p, std::int64_t q) {
  check_kpq(k, p, q);
  if (p + q < k)
    return roman(RomanForm::IIre, p, q).scaled(make_int(p)) + roman(RomanForm::IIbe, p, q).scaled(make_int(q));
  return roman(RomanForm::IIb, p, q).scaled(make_int(k - p - 1)) +
         roman(RomanForm::IIr, p, q).scaled(make_int(k - q - 1)) +
         roman(RomanForm::I, p, q).scaled(make_int(p + q + 1 - k));
}

std::vector<GClass> f_matrix(std::int64_t k) {
  require(k >= 2, "k must be >= 2, got " + std::to_string(k));
  const std::size_t side = static_cast<std::size_t>(k - 1);
  std::vector<GClass> out(side * side);
  parallel_for(side, [&](std::size_t row) {
    for (std::size_t col = 0; col < side; ++col)
      out[row * side + col] = f_closed(k, static_cast<std::int64_t>(row) + 1, static_cast<std::int64_t>(col) + 1);
  });
  return out;
}

GClass twist_class(std::int64_t k, const std::vector<Int>& v, const std::vector<Int>& w) {
  require(k >= 2, "k must be >= 2, got " + std::to_string(k));
  const std::size_t len = static_cast<std::size_t>(k - 1);
  require(v.size() == len && w.size() == len,
          "twist vectors must have length k-1 = " + std::to_string(len));
  GClass out;
  for (std::size_t p = 0; p < len; ++p) {
    if (v[p] == 0) continue;
    for (std::size_t q = 0; q < len; ++q) {
      if (w[q] == 0) continue;
      out += f_closed(k, static_cast<std::int64_t>(p) + 1, static_cast<std::int64_t>(q) + 1).scaled(v[p] * w[q]);
    }
  }
  return out;
}

GClass delta(std::int64_t k) {
  require(k >= 3, "delta requires k >= 3, got " + std::to_string(k));
  return f_closed(k, k - 1, k - 2);
}

GClass delta_expansion(std::int64_t k) {
  require(k >= 3, "delta requires k >= 3, got " + std::to_string(k));
  GClass head;
  head.add_term(k - 2, k - 1, 1).add_term(k - 1, k - 2, -1).add_term(1 - k, 2 - k, 1).add_term(2 - k, 1 - k, -1);
  GClass tail;
  tail.add_term(k - 2, -1, -1).add_term(2 - k, 1, 1).add_term(1, 2 - k, -1).add_term(-1, k - 2, 1);
  return head.scaled(make_int(k - 1)) - tail;
}

HexElement w3(const GClass& x, int n) {
  HexElement h;
  h.n = n;
  for (const auto& [pq, c] : x.terms()) h.poly.add_term(pq, c);
  return h;
}

IndependenceReport independence_rank(const std::vector<GClass>& classes, int n) {
  require(!classes.empty(), "independence_rank needs at least one class");
  std::set<Point> rep_set;
  for (const auto& x : classes)
    for (const auto& [pq, c] : x.terms()) rep_set.insert(orbit_rep(pq));

  IndependenceReport report;
  report.orbit_reps.assign(rep_set.begin(), rep_set.end());
  const std::size_t blocks = report.orbit_reps.size();
  std::vector<std::vector<OrbitCoordinates>> coords(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const Point& rep = report.orbit_reps[b];
    OrbitNormalizer norm(orbit_of(rep[0], rep[1]), n);
    coords[b].reserve(classes.size());
    for (const auto& x : classes) coords[b].push_back(norm.coordinates(w3(x, n).poly));
  });

  std::size_t width = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    report.block_sizes.push_back(coords[b].front().free.size());
    width += report.block_sizes.back();
  }
  report.certificate = IntMatrix(classes.size(), width);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::size_t col = 0;
    for (std::size_t b = 0; b < blocks; ++b)
      for (const Int& v : coords[b][i].free) report.certificate(i, col++) = v;
  }
  report.rank = rank_over_rationals(report.certificate);
  return report;
}

GClass project_first_index(const GClass& x, std::int64_t p0) {
  GClass out;
  for (const auto& [pq, c] : x.terms())
    if (pq[0] == p0) out.add_term(pq[0], pq[1], c);
  return out;
}

std::string to_string(const GClass& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pq, c] : x.terms()) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    Int mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << "G(" << pq[0] << "," << pq[1] << ")";
    first = false;
  }
  return os.str();
}

}  // namespace barbell
