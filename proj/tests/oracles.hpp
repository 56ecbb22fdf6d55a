// Independent reference computations used to pin derived values in the tests.
// Nothing here calls the library's elimination or normal-form code.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "barbell/classes.hpp"
#include "barbell/hexagon.hpp"
#include "barbell/laurent.hpp"

namespace oracle {

using barbell::Int;
using Mat = std::vector<std::vector<Int>>;

inline Int laplace_det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    const Int term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Smith invariants from determinantal divisors: d_k = gcd of k x k minors, s_k = d_k / d_{k-1}.
inline std::vector<Int> smith_invariants(const Mat& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(rows, k, 0, cur, rs);
    combinations(cols, k, 0, cur, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Mat sub;
        for (auto i : r) {
          std::vector<Int> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        Int d = laplace_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Rank by Gaussian elimination over Q.
inline std::size_t rational_rank(const Mat& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) {
    std::vector<mpq_class> r;
    for (const auto& v : row) r.emplace_back(v);
    a.push_back(r);
  }
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Orbit under r and s by fixpoint closure.
inline std::set<barbell::Point> orbit_closure(barbell::Point start) {
  std::set<barbell::Point> seen{start};
  std::vector<barbell::Point> todo{start};
  while (!todo.empty()) {
    const auto p = todo.back();
    todo.pop_back();
    const barbell::Point r{p[0] - p[1], p[0]};
    const barbell::Point s{-p[1], -p[0]};
    for (const auto& q : {r, s})
      if (seen.insert(q).second) todo.push_back(q);
  }
  return seen;
}

// The hexagon relator written out longhand, parity sign (-1)^(n-1).
inline barbell::LaurentPoly2 k_relator(std::int64_t p, std::int64_t q, int n) {
  const int s = (n % 2 == 0) ? -1 : 1;
  barbell::LaurentPoly2 k;
  k.add_term({p, q}, 1);
  k.add_term({q, q - p}, -1);
  k.add_term({p, p - q}, s);
  k.add_term({q, p}, -s);
  return k;
}

// Triple parts of the facet (t1=t2) and (t2=t3) images of [t1^a w12, t1^b w12],
// (t1, t3) chart.
inline barbell::LaurentPoly2 facet2_triple(std::int64_t a, std::int64_t b, int n) {
  barbell::LaurentPoly2 x;
  x.add_term({a - b, -b}, -1);
  x.add_term({b - a, -a}, (n % 2 == 0) ? -1 : 1);  // (-1)^(n-1)
  return x;
}

inline barbell::LaurentPoly2 facet3_triple(std::int64_t a, std::int64_t b, int n) {
  barbell::LaurentPoly2 x;
  x.add_term({a, a - b}, -1);
  x.add_term({b, b - a}, (n % 2 == 0) ? -1 : 1);  // (-1)^(n+1)
  return x;
}

// t1^(a-b) t3^-b - t1^a t3^(a-b) + (-1)^(n-1) (t1^b t3^(b-a) - t1^(b-a) t3^-a)
inline barbell::LaurentPoly2 r_relator(std::int64_t a, std::int64_t b, int n) {
  const int s = (n % 2 == 0) ? -1 : 1;
  barbell::LaurentPoly2 x;
  x.add_term({a - b, -b}, 1);
  x.add_term({a, a - b}, -1);
  x.add_term({b, b - a}, s);
  x.add_term({b - a, -a}, -s);
  return x;
}

// Rational rank of the images of `classes` in Z[t1,t2]/K: rank[K; X] - rank[K]
// over a single global column set, with K instances at every touched point's orbit.
inline std::size_t quotient_rank(const std::vector<barbell::GClass>& classes, int n) {
  std::set<barbell::Point> support;
  for (const auto& x : classes)
    for (const auto& [pq, c] : x.terms())
      for (const auto& e : orbit_closure(pq)) support.insert(e);
  std::map<barbell::Point, std::size_t> col;
  for (const auto& e : support) col.emplace(e, col.size());
  Mat relators;
  for (const auto& e : support) {
    std::vector<Int> row(col.size());
    for (const auto& [m, c] : k_relator(e[0], e[1], n).terms()) row[col.at(m)] += c;
    relators.push_back(row);
  }
  Mat stacked = relators;
  for (const auto& x : classes) {
    std::vector<Int> row(col.size());
    for (const auto& [pq, c] : x.terms()) row[col.at(pq)] += c;
    stacked.push_back(row);
  }
  return rational_rank(stacked) - rational_rank(relators);
}

}  // namespace oracle
