#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "barbell/intlat.hpp"
#include "barbell/laurent.hpp"

namespace barbell {

using Point = Exp2;

Point hex_rotate(const Point& x);   // r: (a,b) -> (a-b, a)
Point hex_reflect(const Point& x);  // s: (a,b) -> (-b, -a)

enum class OrbitType { origin, six, twelve };
std::string orbit_type_name(OrbitType t);

struct HexOrbit {
  Point rep;                    // lexicographic minimum
  std::vector<Point> elements;  // r^0..r^5 of rep, then their s-images, first occurrence kept
  OrbitType type = OrbitType::origin;

  std::size_t index_of(const Point& p) const;  // throws if p is not in the orbit
  bool contains(const Point& p) const;
};

HexOrbit orbit_of(std::int64_t alpha, std::int64_t beta);
Point orbit_rep(const Point& p);

// K(p,q) = t1^p t2^q - t1^q t2^(q-p) + (-1)^(n-1) (t1^p t2^(p-q) - t1^q t2^p)
LaurentPoly2 hexagon_relator(const Point& pq, int n);

using RelatorSource = std::function<LaurentPoly2(const Point&, int)>;

// Rows: K at every orbit element, zero rows dropped, one row per sign class.
// Columns follow orbit.elements. Monomials outside the orbit raise InvariantViolation.
IntMatrix orbit_relators(const HexOrbit& orbit, int n, const RelatorSource& source = hexagon_relator);

QuotientStructure orbit_structure(const HexOrbit& orbit, int n);

struct HexElement {
  LaurentPoly2 poly;  // coefficients of t1^p t2^q [w13,w23]
  int n = 3;
};

struct OrbitCoordinates {
  std::vector<Int> free;     // SNF coordinates past the relator rank
  std::vector<Int> torsion;  // residues mod each invariant factor > 1
  std::vector<Int> moduli;

  bool is_zero() const;
  friend bool operator==(const OrbitCoordinates&, const OrbitCoordinates&) = default;
};

// Cokernel coordinates for one orbit. Fixed basis: the SNF column transform of
// the orbit relator matrix, on the deterministic element order.
class OrbitNormalizer {
 public:
  OrbitNormalizer(HexOrbit orbit, int n);

  const HexOrbit& orbit() const { return orbit_; }
  const QuotientStructure& structure() const { return structure_; }
  const IntMatrix& relators() const { return relators_; }

  // Uses only the terms of x that lie in this orbit.
  OrbitCoordinates coordinates(const LaurentPoly2& x) const;

 private:
  HexOrbit orbit_;
  IntMatrix relators_;
  SmithForm snf_;
  std::size_t rank_ = 0;
  QuotientStructure structure_;
};

struct HexNormalForm {
  int n = 3;
  std::map<Point, OrbitCoordinates> orbits;  // keyed by representative; zero orbits omitted

  bool is_zero() const { return orbits.empty(); }
  friend bool operator==(const HexNormalForm&, const HexNormalForm&) = default;
};

HexNormalForm hex_normal_form(const HexElement& x);

// t1^m t3^k [w12,w23] = -t1^(m-k) t2^(-k) [w13,w23]
LaurentPoly2 basis_change_13_to_12(const LaurentPoly2& x);  // (t1,t3) chart -> (t1,t2) chart
LaurentPoly2 basis_change_12_to_13(const LaurentPoly2& x);  // inverse
constexpr int kBasisChangeSign = -1;

std::string to_string(const HexNormalForm& nf);

}  // namespace barbell
