#include "barbell/laurent.hpp"

#include <cctype>
#include <sstream>

namespace barbell {

Int parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  bool digits = i < text.size();
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) digits = false;
  if (!digits) throw ValidationError("not a decimal integer: '" + std::string(text) + "'");
  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  return Int(body, 10);
}

std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) throw ValidationError("integer out of 64-bit range: " + to_decimal(v));
  return static_cast<std::int64_t>(v.get_si());
}

LaurentPoly1 bar(const LaurentPoly1& p) {
  return p.map_exponents([](Exp1 k) { return -k; });
}

AffineMap2 AffineMap2::inverse() const {
  if (!invertible()) throw ValidationError("affine map is not invertible over Z");
  const std::int64_t d = determinant();
  AffineMap2 inv;
  inv.linear = {{{linear[1][1] * d, -linear[0][1] * d}, {-linear[1][0] * d, linear[0][0] * d}}};
  Exp2 shifted = inv.apply(offset);
  inv.offset = {-shifted[0], -shifted[1]};
  return inv;
}

AffineMap2 AffineMap2::then(const AffineMap2& next) const {
  AffineMap2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.linear[i][j] = next.linear[i][0] * linear[0][j] + next.linear[i][1] * linear[1][j];
  r.offset = next.apply(offset);
  return r;
}

AffineMap2 AffineMap2::hex_rotation() {
  AffineMap2 r;
  r.linear = {{{1, -1}, {1, 0}}};
  return r;
}

AffineMap2 AffineMap2::hex_reflection() {
  AffineMap2 s;
  s.linear = {{{0, -1}, {-1, 0}}};
  return s;
}

LaurentPoly2 reindex(const LaurentPoly2& p, const AffineMap2& A, int sign) {
  if (!A.invertible()) throw ValidationError("reindex: affine map is not invertible over Z");
  if (sign != 1 && sign != -1) throw ValidationError("reindex: sign must be +1 or -1");
  return p.map_exponents([&](const Exp2& e) { return A.apply(e); }, sign);
}

namespace {

template <typename Exp, typename MonoFn>
std::string format_terms(const LaurentPoly<Exp>& p, MonoFn mono) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    Int mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << mono(e);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const LaurentPoly1& p, const std::string& var) {
  return format_terms(p, [&](Exp1 k) { return var + "^" + std::to_string(k); });
}

std::string to_string(const LaurentPoly2& p, const std::string& var1, const std::string& var2) {
  return format_terms(p, [&](const Exp2& e) {
    return var1 + "^" + std::to_string(e[0]) + "*" + var2 + "^" + std::to_string(e[1]);
  });
}

}  // namespace barbell
