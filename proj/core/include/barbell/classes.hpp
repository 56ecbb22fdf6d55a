#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "barbell/hexagon.hpp"
#include "barbell/intlat.hpp"
#include "barbell/laurent.hpp"

namespace barbell {

// Integer combination of the primitive generators G(p,q).
class GClass {
 public:
  GClass() = default;
  static GClass generator(std::int64_t p, std::int64_t q, const Int& c = 1);

  const LaurentPoly2::container& terms() const& { return coeffs_.terms(); }
  LaurentPoly2::container terms() && { return std::move(coeffs_).terms(); }
  Int coefficient(std::int64_t p, std::int64_t q) const { return coeffs_.coefficient({p, q}); }
  bool is_zero() const { return coeffs_.is_zero(); }
  std::size_t size() const { return coeffs_.size(); }

  GClass& add_term(std::int64_t p, std::int64_t q, const Int& c);
  GClass scaled(const Int& s) const;
  GClass& operator+=(const GClass& o);
  GClass& operator-=(const GClass& o);
  GClass operator-() const { return scaled(-1); }

  friend GClass operator+(GClass a, const GClass& b) { return a += b; }
  friend GClass operator-(GClass a, const GClass& b) { return a -= b; }
  friend GClass operator*(const Int& s, const GClass& x) { return x.scaled(s); }
  friend bool operator==(const GClass&, const GClass&) = default;

 private:
  LaurentPoly2 coeffs_;
};

GClass g(std::int64_t p, std::int64_t q);
GClass gstar(std::int64_t p, std::int64_t q);  // -G(p, p-q)
GClass e(std::int64_t p, std::int64_t q);      // -G(-q,p) + G(p,-q)
GClass d(std::int64_t p, std::int64_t q);      // -G(q,-p) + G(-q,p) - G(p,-q) + G(-p,q)

enum class RomanForm { I, IIb, IIbe, IIr, IIre };
RomanForm parse_roman(std::string_view tag);
std::string roman_name(RomanForm f);
GClass roman(RomanForm form, std::int64_t p, std::int64_t q);

GClass f_level(std::int64_t k, std::int64_t L, std::int64_t p, std::int64_t q);
GClass f_closed(std::int64_t k, std::int64_t p, std::int64_t q);

// Row-major (k-1)x(k-1) table of f_closed(k, p, q), p and q from 1.
std::vector<GClass> f_matrix(std::int64_t k);

GClass twist_class(std::int64_t k, const std::vector<Int>& v, const std::vector<Int>& w);

GClass delta(std::int64_t k);            // f_closed(k, k-1, k-2)
GClass delta_expansion(std::int64_t k);  // the eight-term closed expansion

// G(p,q) -> t1^p t2^q [w13,w23], global sign +1
HexElement w3(const GClass& x, int n);

struct IndependenceReport {
  std::size_t rank = 0;
  IntMatrix certificate;          // one row per input class
  std::vector<Point> orbit_reps;  // column blocks, in order
  std::vector<std::size_t> block_sizes;
};

IndependenceReport independence_rank(const std::vector<GClass>& classes, int n);

// Diagnostic only: keep the G(p0, q) terms.
GClass project_first_index(const GClass& x, std::int64_t p0);

std::string to_string(const GClass& x);

}  // namespace barbell
