#include "barbell/whitehead.hpp"

#include <mutex>
#include <sstream>

#include "barbell/parallel.hpp"

namespace barbell {

namespace {

int swap_sign(int n) { return parity_sign(n + 1); }  // w_ji = (-1)^(n+1) w_ij

bool cyclic(int x, int y, int z) {
  return (x == 1 && y == 2 && z == 3) || (x == 2 && y == 3 && z == 1) || (x == 3 && y == 1 && z == 2);
}

template <typename Map, typename Key>
void accumulate(Map& m, const Key& k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

DegNElem::DegNElem(int n) : n_(n) { require(n >= 1, "degree n must be positive"); }

void DegNElem::add_canonical(const DegNGen& g, const Int& c) { accumulate(terms_, g, c); }

DegNElem& DegNElem::add_raw(int i, int j, const Monomial3& exps, const Int& c) {
  require(i >= 1 && i <= 3 && j >= 1 && j <= 3,
          "point index out of range: w" + std::to_string(i) + std::to_string(j));
  if (i == j) return *this;
  const std::int64_t e = exps[i - 1] - exps[j - 1];
  if (i < j)
    add_canonical({i, j, e}, c);
  else
    add_canonical({j, i, -e}, c * swap_sign(n_));
  return *this;
}

DegNElem DegNElem::scaled(const Int& s) const {
  DegNElem r(n_);
  if (s != 0)
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, c * s);
  return r;
}

DegNElem operator+(DegNElem a, const DegNElem& b) {
  require(a.n_ == b.n_, "degree-n elements with different n");
  for (const auto& [g, c] : b.terms_) a.add_canonical(g, c);
  return a;
}

DegNElem operator-(DegNElem a, const DegNElem& b) { return a + b.scaled(-1); }

DegNElem deg_n_normalize(int i, int j, const Monomial3& exps, int n) {
  DegNElem x(n);
  x.add_raw(i, j, exps);
  return x;
}

void BracketElem::add_triple(std::int64_t a, std::int64_t b, const Int& c) { triple_.add_term({a, b}, c); }

void BracketElem::add_pair(int i, int j, std::int64_t c, std::int64_t l, const Int& coef) {
  Int k = coef;
  if (l < 0) {
    // t^c [w, t^l w] = (-1)^n t^(c+l) [w, t^-l w]
    k *= parity_sign(n_);
    c += l;
    l = -l;
  }
  if (l == 0 && n_ % 2 != 0) return;  // [w,w] = -[w,w]
  accumulate(pairs_, PairKey{i, j, c, l}, k);
}

BracketElem BracketElem::pairs_on(int i, int j) const {
  BracketElem r(n_);
  for (const auto& [key, c] : pairs_)
    if (key.i == i && key.j == j) r.pairs_.emplace(key, c);
  return r;
}

BracketElem BracketElem::without_pairs_on(int i, int j) const {
  BracketElem r(n_);
  r.triple_ = triple_;
  for (const auto& [key, c] : pairs_)
    if (!(key.i == i && key.j == j)) r.pairs_.emplace(key, c);
  return r;
}

BracketElem BracketElem::scaled(const Int& s) const {
  BracketElem r(n_);
  r.triple_ = triple_.scaled(s);
  if (s != 0)
    for (const auto& [key, c] : pairs_) r.pairs_.emplace(key, c * s);
  return r;
}

BracketElem& BracketElem::operator+=(const BracketElem& o) {
  require(n_ == o.n_, "bracket elements with different n");
  triple_ += o.triple_;
  for (const auto& [key, c] : o.pairs_) accumulate(pairs_, key, c);
  return *this;
}

namespace {

void bracket_generators(const DegNGen& g, const DegNGen& h, const Int& coef, BracketElem& out) {
  const int n = out.n();
  if (g.i == h.i && g.j == h.j) {
    out.add_pair(g.i, g.j, g.e, h.e - g.e, coef);
    return;
  }
  Monomial3 u{0, 0, 0}, v{0, 0, 0};
  u[g.i - 1] = g.e;
  v[h.i - 1] = h.e;

  const int s = (g.i == h.i || g.i == h.j) ? g.i : g.j;
  Int sign = coef;
  int x, z;
  if (g.j == s) {
    x = g.i;
  } else {
    x = g.j;
    sign *= swap_sign(n);
  }
  if (h.i == s) {
    z = h.j;
  } else {
    z = h.i;
    sign *= swap_sign(n);
  }
  // [w_xs, w_sz] is [w12,w23] for a cyclic (x,s,z); otherwise reverse it.
  if (!cyclic(x, s, z)) sign *= parity_sign(n);

  Monomial3 mu{0, 0, 0};
  mu[x - 1] = u[x - 1] - u[s - 1];
  mu[z - 1] = v[z - 1] - v[s - 1];
  out.add_triple(mu[0] - mu[1], mu[2] - mu[1], sign);
}

}  // namespace

BracketElem bracket(const DegNElem& x, const DegNElem& y) {
  require(x.n() == y.n(), "bracket of elements with different n");
  BracketElem out(x.n());
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, d] : y.terms()) bracket_generators(g, h, c * d, out);
  return out;
}

DegNElem act(const Monomial3& mu, const DegNElem& x) {
  DegNElem r(x.n());
  for (const auto& [g, c] : x.terms()) {
    Monomial3 raw{0, 0, 0};
    raw[g.i - 1] = g.e + mu[g.i - 1];
    raw[g.j - 1] = mu[g.j - 1];
    r.add_raw(g.i, g.j, raw, c);
  }
  return r;
}

BracketElem act(const Monomial3& mu, const BracketElem& x) {
  BracketElem r(x.n());
  for (const auto& [e, c] : x.triple().terms()) r.add_triple(e[0] + mu[0] - mu[1], e[1] + mu[2] - mu[1], c);
  for (const auto& [key, c] : x.pairs())
    r.add_pair(key.i, key.j, key.c + mu[key.i - 1] - mu[key.j - 1], key.l, c);
  return r;
}

Facet parse_facet(std::string_view name) {
  if (name == "t1=0" || name == "1") return Facet::first_at_zero;
  if (name == "t1=t2" || name == "2") return Facet::double_first;
  if (name == "t2=t3" || name == "3") return Facet::double_second;
  if (name == "t3=1" || name == "4") return Facet::last_at_one;
  throw ValidationError("unknown facet id '" + std::string(name) + "' (expected t1=0, t1=t2, t2=t3 or t3=1)");
}

std::string facet_name(Facet f) {
  switch (f) {
    case Facet::first_at_zero: return "t1=0";
    case Facet::double_first: return "t1=t2";
    case Facet::double_second: return "t2=t3";
    case Facet::last_at_one: return "t3=1";
  }
  return "?";
}

namespace {

DegNElem facet_generator(Facet f, std::int64_t e, const Int& c, int n, std::int64_t a) {
  DegNElem r(n);
  switch (f) {
    case Facet::first_at_zero:
      r.add_raw(2, 3, {0, e, 0}, c);
      break;
    case Facet::double_first: {
      const Monomial3 mu{e, e, 0};
      r.add_raw(1, 3, mu, c).add_raw(2, 3, mu, c).add_raw(2, 1, mu, c * make_int(a));
      break;
    }
    case Facet::double_second: {
      const Monomial3 mu{e, 0, 0};
      r.add_raw(1, 2, mu, c).add_raw(1, 3, mu, c).add_raw(2, 3, mu, c * make_int(a));
      break;
    }
    case Facet::last_at_one:
      r.add_raw(1, 2, {e, 0, 0}, c);
      break;
  }
  return r;
}

}  // namespace

DegNElem facet_map(Facet f, const LaurentPoly1& x, int n, std::int64_t velocity) {
  DegNElem r(n);
  for (const auto& [e, c] : x.terms()) r = r + facet_generator(f, e, c, n, velocity);
  return r;
}

BracketElem facet_map(Facet f, const LaurentPoly2& brackets, int n, std::int64_t velocity) {
  BracketElem r(n);
  for (const auto& [e, c] : brackets.terms())
    r += bracket(facet_generator(f, e[0], c, n, velocity), facet_generator(f, e[1], 1, n, velocity));
  return r;
}

std::vector<DerivedRelator> derive_R_relators(int n, std::int64_t lo, std::int64_t hi) {
  require(lo <= hi, "relator window must satisfy lo <= hi");
  const std::size_t side = static_cast<std::size_t>(hi - lo + 1);
  std::vector<DerivedRelator> out(side * side);
  parallel_for(side, [&](std::size_t ia) {
    const std::int64_t alpha = lo + static_cast<std::int64_t>(ia);
    for (std::size_t ib = 0; ib < side; ++ib) {
      const std::int64_t beta = lo + static_cast<std::int64_t>(ib);
      const auto x = LaurentPoly2::monomial({alpha, beta});
      const BracketElem d = facet_map(Facet::double_second, x, n) - facet_map(Facet::double_first, x, n);
      for (const auto& [key, c] : d.pairs())
        ensure(!(key.i == 1 && key.j == 3),
               "facet difference leaves a [w13, t1^l w13] term at (" + std::to_string(alpha) + "," +
                   std::to_string(beta) + ")");
      out[ia * side + ib] = {alpha, beta, d.triple()};
    }
  });
  return out;
}

std::string to_string(const DegNElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    Int mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << 't' << g.i << '^' << g.e << "*w" << g.i << g.j;
    first = false;
  }
  return os.str();
}

std::string to_string(const BracketElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (!x.triple().is_zero()) {
    os << '(' << to_string(x.triple(), "t1", "t3") << ")*[w12,w23]";
    first = false;
  }
  for (const auto& [k, c] : x.pairs()) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    Int mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << 't' << k.i << '^' << k.c << "*[w" << k.i << k.j << ",t" << k.i << '^' << k.l << "*w" << k.i << k.j << ']';
    first = false;
  }
  return os.str();
}

}  // namespace barbell
