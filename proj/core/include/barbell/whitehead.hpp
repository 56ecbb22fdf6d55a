#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>
#include <utility>

#include "barbell/laurent.hpp"

namespace barbell {

using Monomial3 = std::array<std::int64_t, 3>;  // exponents of t1, t2, t3

// t_i^e * w_ij with 1 <= i < j <= 3
struct DegNGen {
  int i = 1;
  int j = 2;
  std::int64_t e = 0;
  auto operator<=>(const DegNGen&) const = default;
};

class DegNElem {
 public:
  explicit DegNElem(int n = 3);

  int n() const { return n_; }
  const std::map<DegNGen, Int>& terms() const& { return terms_; }
  std::map<DegNGen, Int> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  // Raw generator t^exps * w_ij with any i, j in {1,2,3}, brought to canonical form.
  DegNElem& add_raw(int i, int j, const Monomial3& exps, const Int& c = 1);

  DegNElem scaled(const Int& s) const;
  friend DegNElem operator+(DegNElem a, const DegNElem& b);
  friend DegNElem operator-(DegNElem a, const DegNElem& b);
  friend bool operator==(const DegNElem&, const DegNElem&) = default;

 private:
  void add_canonical(const DegNGen& g, const Int& c);

  int n_;
  std::map<DegNGen, Int> terms_;
};

DegNElem deg_n_normalize(int i, int j, const Monomial3& exps, int n);

// t_i^c * [w_ij, t_i^l w_ij]
struct PairKey {
  int i = 1;
  int j = 2;
  std::int64_t c = 0;
  std::int64_t l = 0;
  auto operator<=>(const PairKey&) const = default;
};

// Degree 2n-1 element: triple part on t1^a t3^b [w12,w23] plus pair brackets.
class BracketElem {
 public:
  explicit BracketElem(int n = 3) : n_(n) {}

  int n() const { return n_; }
  const LaurentPoly2& triple() const& { return triple_; }
  LaurentPoly2 triple() && { return std::move(triple_); }
  const std::map<PairKey, Int>& pairs() const& { return pairs_; }
  std::map<PairKey, Int> pairs() && { return std::move(pairs_); }
  bool is_zero() const { return triple_.is_zero() && pairs_.empty(); }

  void add_triple(std::int64_t a, std::int64_t b, const Int& c);
  // Accepts any l; rewrites it into the l >= 0 (n even) / l >= 1 (n odd) range.
  void add_pair(int i, int j, std::int64_t c, std::int64_t l, const Int& coef);

  BracketElem pairs_on(int i, int j) const;
  BracketElem without_pairs_on(int i, int j) const;

  BracketElem scaled(const Int& s) const;
  BracketElem& operator+=(const BracketElem& o);
  friend BracketElem operator+(BracketElem a, const BracketElem& b) { return a += b; }
  friend BracketElem operator-(BracketElem a, const BracketElem& b) { return a += b.scaled(-1); }
  friend bool operator==(const BracketElem&, const BracketElem&) = default;

 private:
  int n_;
  LaurentPoly2 triple_;
  std::map<PairKey, Int> pairs_;
};

BracketElem bracket(const DegNElem& x, const DegNElem& y);

DegNElem act(const Monomial3& mu, const DegNElem& x);
BracketElem act(const Monomial3& mu, const BracketElem& x);

enum class Facet { first_at_zero, double_first, double_second, last_at_one };

Facet parse_facet(std::string_view name);
std::string facet_name(Facet f);

// Two-point inputs: sum of c_e t1^e w12, and sum of c_{a,b} [t1^a w12, t1^b w12].
DegNElem facet_map(Facet f, const LaurentPoly1& x, int n, std::int64_t velocity = 0);
BracketElem facet_map(Facet f, const LaurentPoly2& brackets, int n, std::int64_t velocity = 0);

struct DerivedRelator {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  LaurentPoly2 relator;  // (t1, t3) chart, coefficient of [w12,w23]
};

// Facet (t1=t2) minus facet (t2=t3) on [t1^alpha w12, t1^beta w12] for each
// (alpha, beta) in window^2. Throws InvariantViolation if anything other than
// [w12,.]/[w23,.] pair brackets survives besides the triple part.
// Drops the [w12,.] and [w23,.] pair brackets (the summands facets t1=0 and t3=1 kill).
inline BracketElem modulo_end_pairs(const BracketElem& x) { return x.without_pairs_on(1, 2).without_pairs_on(2, 3); }

std::vector<DerivedRelator> derive_R_relators(int n, std::int64_t lo, std::int64_t hi);

std::string to_string(const DegNElem& x);
std::string to_string(const BracketElem& x);

}  // namespace barbell
