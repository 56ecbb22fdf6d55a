#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "barbell/errors.hpp"
#include "barbell/integer.hpp"

namespace barbell {

using Exp1 = std::int64_t;
using Exp2 = std::array<std::int64_t, 2>;

// Sparse Laurent polynomial with big-integer coefficients. Keys are held in
// lexicographic order and zero coefficients are never stored, so equality is
// structural.
template <typename Exp>
class LaurentPoly {
 public:
  using exponent_type = Exp;
  using container = std::map<Exp, Int>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const Exp& e, const Int& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const container& terms() const& { return terms_; }
  container terms() && { return std::move(terms_); }  // safe in range-for over temporaries

  Int coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Builder primitive: accumulates c onto e and prunes zeros.
  LaurentPoly& add_term(const Exp& e, const Int& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly operator-() const { return scaled(-1); }

  LaurentPoly scaled(const Int& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  template <typename F>
  LaurentPoly map_exponents(F&& f, const Int& sign = 1) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(f(e), c * sign);
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const Int& s, const LaurentPoly& p) { return p.scaled(s); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

using LaurentPoly1 = LaurentPoly<Exp1>;
using LaurentPoly2 = LaurentPoly<Exp2>;

inline LaurentPoly1 add(const LaurentPoly1& p, const LaurentPoly1& q) { return p + q; }
inline LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }

// t^k -> t^-k
LaurentPoly1 bar(const LaurentPoly1& p);

// x -> linear * x + offset on Z^2
struct AffineMap2 {
  std::array<std::array<std::int64_t, 2>, 2> linear{{{1, 0}, {0, 1}}};
  Exp2 offset{0, 0};

  Exp2 apply(const Exp2& x) const {
    return {linear[0][0] * x[0] + linear[0][1] * x[1] + offset[0],
            linear[1][0] * x[0] + linear[1][1] * x[1] + offset[1]};
  }
  std::int64_t determinant() const {
    return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0];
  }
  bool invertible() const { return determinant() == 1 || determinant() == -1; }
  AffineMap2 inverse() const;
  AffineMap2 then(const AffineMap2& next) const;  // next after this

  static AffineMap2 hex_rotation();    // (a,b) -> (a-b, a)
  static AffineMap2 hex_reflection();  // (a,b) -> (-b, -a)

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;
};

// Sends each monomial (a,b) to A(a,b), multiplying coefficients by sign.
LaurentPoly2 reindex(const LaurentPoly2& p, const AffineMap2& A, int sign = 1);

std::string to_string(const LaurentPoly1& p, const std::string& var = "t");
std::string to_string(const LaurentPoly2& p, const std::string& var1 = "t1",
                      const std::string& var2 = "t2");

}  // namespace barbell
