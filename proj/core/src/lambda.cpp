#include "barbell/lambda.hpp"

#include <sstream>

namespace barbell {

std::optional<std::int64_t> LambdaContext::fixed_exponent() const {
  if ((w0 - 1) % 2 != 0) return std::nullopt;
  return (w0 - 1) / 2;
}

bool LambdaContext::has_torsion() const {
  return n % 2 == 0 && fixed_exponent().has_value() && (w0 > 2 || w0 < -2);
}

namespace {

void check_same_ctx(const LambdaElement& a, const LambdaElement& b) {
  require(a.ctx == b.ctx, "lambda elements live in different contexts");
}

}  // namespace

LambdaElement operator+(const LambdaElement& a, const LambdaElement& b) {
  check_same_ctx(a, b);
  return {a.ctx, a.free_part + b.free_part, a.torsion_bit != b.torsion_bit};
}

LambdaElement operator-(const LambdaElement& a, const LambdaElement& b) {
  check_same_ctx(a, b);
  return {a.ctx, a.free_part - b.free_part, a.torsion_bit != b.torsion_bit};
}

LambdaElement lambda_reduce(const LaurentPoly1& p, const LambdaContext& ctx) {
  LambdaElement out{ctx, {}, false};
  const std::int64_t w0 = ctx.w0;
  const int fold_sign = -parity_sign(ctx.n);
  for (const auto& [k, c] : p.terms()) {
    if (k == 0 || k == -1 || k == w0 || k == w0 - 1) continue;
    const std::int64_t mirror = w0 - 1 - k;
    if (2 * k < w0 - 1) {
      out.free_part.add_term(mirror, c * fold_sign);
    } else if (2 * k == w0 - 1 && ctx.n % 2 == 0) {
      // t^k + t^k = 0: the coefficient only matters mod 2
      if (mpz_odd_p(c.get_mpz_t())) out.torsion_bit = !out.torsion_bit;
    } else {
      out.free_part.add_term(k, c);
    }
  }
  return out;
}

IntMatrix lambda_relator_matrix(const LambdaContext& ctx, const ExponentWindow& window) {
  const std::size_t cols = window.size();
  IntMatrix R(0, cols);
  std::vector<Int> row(cols);
  auto emit_unit = [&](std::int64_t k) {
    if (!window.contains(k)) return;
    std::fill(row.begin(), row.end(), Int(0));
    row[static_cast<std::size_t>(k - window.lo)] = 1;
    R.append_row(row);
  };
  emit_unit(0);
  emit_unit(-1);
  const int s = parity_sign(ctx.n);
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    const std::int64_t m = ctx.w0 - 1 - k;
    if (m < k || !window.contains(m)) continue;
    std::fill(row.begin(), row.end(), Int(0));
    row[static_cast<std::size_t>(k - window.lo)] += 1;
    row[static_cast<std::size_t>(m - window.lo)] += s;
    if (row[static_cast<std::size_t>(k - window.lo)] == 0) continue;
    R.append_row(row);
  }
  return R;
}

LambdaStructure lambda_structure(const LambdaContext& ctx, const ExponentWindow& window) {
  const std::int64_t reach = (ctx.w0 < 0 ? -ctx.w0 : ctx.w0) + 2;
  require(window.lo <= -reach && window.hi >= reach,
          "window too small: must contain [" + std::to_string(-reach) + "," + std::to_string(reach) + "]");
  return {cokernel_structure(lambda_relator_matrix(ctx, window)), window.size()};
}

LambdaElement w2_theta(std::int64_t k, const LambdaContext& ctx) {
  LaurentPoly1 p;
  p.add_term(k, 1).add_term(k - 1, -1);
  return lambda_reduce(p, ctx);
}

LambdaElement w2_gamma(std::int64_t k, const LambdaContext& ctx) { return w2_theta(k, ctx); }

LambdaElement w2_alpha(std::int64_t i, const LambdaContext& ctx) {
  require(ctx.w0 == 1, "w2_alpha requires W0 = 1");
  LaurentPoly1 p;
  p.add_term(i + 1, 1).add_term(i, -2).add_term(i - 1, 1);
  return lambda_reduce(p, ctx);
}

LaurentPoly1 w2_arc_reduce(const LaurentPoly1& p) {
  LaurentPoly1 out;
  for (const auto& [k, c] : p.terms())
    if (k != 0) out.add_term(k, c);
  return out;
}

AlphaCombination AlphaCombination::generator(std::int64_t i, const Int& c) {
  AlphaCombination a;
  a.add_term(i, c);
  return a;
}

AlphaCombination& AlphaCombination::add_term(std::int64_t i, const Int& c) {
  require(i >= 1, "alpha index must be >= 1, got " + std::to_string(i));
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

AlphaCombination operator+(AlphaCombination a, const AlphaCombination& b) {
  for (const auto& [i, c] : b.terms_) a.add_term(i, c);
  return a;
}

AlphaCombination cover_pullback(std::int64_t m, const AlphaCombination& x) {
  require(m >= 1, "cover degree m must be >= 1");
  AlphaCombination out;
  for (const auto& [i, c] : x.terms())
    if (i % m == 0) out.add_term(i / m, c * make_int(m));
  return out;
}

bool cover_kernel_iterate(const AlphaCombination& x, std::int64_t m, std::int64_t depth) {
  require(depth >= 1, "depth must be >= 1");
  AlphaCombination y = x;
  for (std::int64_t d = 0; d < depth && !y.is_zero(); ++d) y = cover_pullback(m, y);
  return y.is_zero();
}

std::string to_string(const LambdaElement& x) {
  std::string s = to_string(x.free_part);
  if (x.torsion_bit) {
    const std::string tor = "t^" + std::to_string(*x.ctx.fixed_exponent()) + " (mod 2)";
    s = x.free_part.is_zero() ? tor : s + " + " + tor;
  }
  return s;
}

std::string to_string(const AlphaCombination& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x.terms()) {
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    Int mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << "a" << i;
    first = false;
  }
  return os.str();
}

}  // namespace barbell
