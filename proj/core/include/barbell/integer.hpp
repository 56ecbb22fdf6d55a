#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace barbell {

using Int = mpz_class;

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");

inline Int make_int(std::int64_t v) { return Int(static_cast<long>(v)); }

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// Throws ValidationError on anything that is not an optional sign followed by digits.
Int parse_decimal(std::string_view text);

inline bool fits_int64(const Int& v) {
  static const Int lo = make_int(INT64_MIN);
  static const Int hi = make_int(INT64_MAX);
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const Int& v);

inline int sign_of(const Int& v) { return sgn(v); }

// (-1)^e for an integer exponent.
constexpr int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace barbell
