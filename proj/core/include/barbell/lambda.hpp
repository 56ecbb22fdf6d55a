#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "barbell/intlat.hpp"
#include "barbell/laurent.hpp"

namespace barbell {

struct LambdaContext {
  std::int64_t w0 = 0;
  int n = 3;

  LambdaContext(std::int64_t w0_, int n_) : w0(w0_), n(n_) {
    require(n >= 3, "lambda context: n must be >= 3");
  }

  // (W0-1)/2 when W0 is odd.
  std::optional<std::int64_t> fixed_exponent() const;
  // The fixed exponent carries 2-torsion (n even, W0 odd, |W0| > 2).
  bool has_torsion() const;

  friend bool operator==(const LambdaContext&, const LambdaContext&) = default;
};

struct LambdaElement {
  LambdaContext ctx;
  LaurentPoly1 free_part;
  bool torsion_bit = false;

  bool is_zero() const { return free_part.is_zero() && !torsion_bit; }

  friend LambdaElement operator+(const LambdaElement& a, const LambdaElement& b);
  friend LambdaElement operator-(const LambdaElement& a, const LambdaElement& b);
  friend bool operator==(const LambdaElement&, const LambdaElement&) = default;
};

LambdaElement lambda_reduce(const LaurentPoly1& p, const LambdaContext& ctx);

struct ExponentWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(std::int64_t k) const { return lo <= k && k <= hi; }
};

// Rows: t^0, t^-1 and every t^k + (-1)^n t^(W0-1-k) with both ends inside the
// window. Columns are the exponents lo..hi.
IntMatrix lambda_relator_matrix(const LambdaContext& ctx, const ExponentWindow& window);

struct LambdaStructure {
  QuotientStructure quotient;
  std::size_t window_size = 0;
};

LambdaStructure lambda_structure(const LambdaContext& ctx, const ExponentWindow& window);

LambdaElement w2_theta(std::int64_t k, const LambdaContext& ctx);
LambdaElement w2_gamma(std::int64_t k, const LambdaContext& ctx);
LambdaElement w2_alpha(std::int64_t i, const LambdaContext& ctx);

// Drops the t^0 term: the arc target Z[t^+-1]/<t^0>.
LaurentPoly1 w2_arc_reduce(const LaurentPoly1& p);

// Integer combination of the alpha_i generators, i >= 1.
class AlphaCombination {
 public:
  AlphaCombination() = default;
  static AlphaCombination generator(std::int64_t i, const Int& c = 1);

  AlphaCombination& add_term(std::int64_t i, const Int& c);
  const std::map<std::int64_t, Int>& terms() const& { return terms_; }
  std::map<std::int64_t, Int> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  friend AlphaCombination operator+(AlphaCombination a, const AlphaCombination& b);
  friend bool operator==(const AlphaCombination&, const AlphaCombination&) = default;

 private:
  std::map<std::int64_t, Int> terms_;
};

AlphaCombination cover_pullback(std::int64_t m, const AlphaCombination& x);
bool cover_kernel_iterate(const AlphaCombination& x, std::int64_t m, std::int64_t depth);

std::string to_string(const LambdaElement& x);
std::string to_string(const AlphaCombination& x);

}  // namespace barbell
