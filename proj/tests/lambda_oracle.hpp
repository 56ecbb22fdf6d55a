// Brute-force membership in the Lambda relator lattice on a finite window.
#pragma once

#include "barbell/intlat.hpp"
#include "barbell/lambda.hpp"

namespace oracle {

struct LambdaWindowOracle {
  barbell::LambdaContext ctx;
  barbell::ExponentWindow window;
  barbell::RowLattice lattice;

  LambdaWindowOracle(const barbell::LambdaContext& c, barbell::ExponentWindow w)
      : ctx(c), window(w), lattice(barbell::lambda_relator_matrix(c, w)) {}

  std::vector<barbell::Int> vec(const barbell::LaurentPoly1& p) const {
    std::vector<barbell::Int> v(window.size());
    for (const auto& [k, c] : p.terms()) v.at(static_cast<std::size_t>(k - window.lo)) += c;
    return v;
  }

  bool in_relators(const barbell::LaurentPoly1& p) const { return lattice.contains(vec(p)); }

  // The element's chosen representative as a polynomial.
  static barbell::LaurentPoly1 lift(const barbell::LambdaElement& x) {
    auto p = x.free_part;
    if (x.torsion_bit) p.add_term(*x.ctx.fixed_exponent(), 1);
    return p;
  }
};

}  // namespace oracle
