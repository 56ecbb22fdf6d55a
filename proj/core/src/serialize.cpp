#include "barbell/serialize.hpp"

namespace barbell {

namespace {

const json& terms_of(const json& j) {
  require(j.is_object() && j.contains("terms") && j.at("terms").is_array(),
          "expected an object with a \"terms\" array");
  return j.at("terms");
}

std::int64_t exponent(const json& term, const char* key) {
  require(term.contains(key), std::string("term is missing \"") + key + "\"");
  const json& v = term.at(key);
  require(v.is_number_integer(), std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

void only_keys(const json& term, std::initializer_list<const char*> keys) {
  require(term.is_object(), "each term must be an object");
  for (const auto& item : term.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    require(known, "unexpected key \"" + item.key() + "\" in term (variable arity mismatch?)");
  }
}

json encode_free(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

}  // namespace

json encode(const Int& v) { return to_decimal(v); }

template <>
Int decode<Int>(const json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return make_int(j.get<std::int64_t>());
  throw ValidationError("coefficient must be a decimal string or an integer");
}

json encode(const LaurentPoly1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", encode(c)}});
  return {{"terms", terms}};
}

json encode(const LaurentPoly2& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e1", e[0]}, {"e2", e[1]}, {"c", encode(c)}});
  return {{"terms", terms}};
}

template <>
LaurentPoly1 decode<LaurentPoly1>(const json& j) {
  LaurentPoly1 p;
  for (const auto& t : terms_of(j)) {
    only_keys(t, {"e", "c"});
    require(t.contains("c"), "term is missing \"c\"");
    p.add_term(exponent(t, "e"), decode<Int>(t.at("c")));
  }
  return p;
}

template <>
LaurentPoly2 decode<LaurentPoly2>(const json& j) {
  LaurentPoly2 p;
  for (const auto& t : terms_of(j)) {
    only_keys(t, {"e1", "e2", "c"});
    require(t.contains("c"), "term is missing \"c\"");
    p.add_term({exponent(t, "e1"), exponent(t, "e2")}, decode<Int>(t.at("c")));
  }
  return p;
}

json encode(const GClass& x) {
  json terms = json::array();
  for (const auto& [pq, c] : x.terms()) terms.push_back({{"p", pq[0]}, {"q", pq[1]}, {"c", encode(c)}});
  return {{"terms", terms}};
}

template <>
GClass decode<GClass>(const json& j) {
  GClass x;
  for (const auto& t : terms_of(j)) {
    only_keys(t, {"p", "q", "c"});
    require(t.contains("c"), "term is missing \"c\"");
    x.add_term(exponent(t, "p"), exponent(t, "q"), decode<Int>(t.at("c")));
  }
  return x;
}

json encode(const AlphaCombination& x) {
  json terms = json::array();
  for (const auto& [i, c] : x.terms()) terms.push_back({{"i", i}, {"c", encode(c)}});
  return {{"terms", terms}};
}

template <>
AlphaCombination decode<AlphaCombination>(const json& j) {
  AlphaCombination x;
  for (const auto& t : terms_of(j)) {
    only_keys(t, {"i", "c"});
    require(t.contains("c"), "term is missing \"c\"");
    x.add_term(exponent(t, "i"), decode<Int>(t.at("c")));
  }
  return x;
}

json encode(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& v : m.row(r)) row.push_back(encode(v));
    rows.push_back(row);
  }
  return rows;
}

template <>
IntMatrix decode<IntMatrix>(const json& j) {
  require(j.is_array(), "matrix must be a list of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) {
    require(r.is_array(), "matrix row must be a list");
    std::vector<Int> row;
    for (const auto& v : r) row.push_back(decode<Int>(v));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

json encode(const QuotientStructure& q) {
  return {{"free_rank", q.free_rank}, {"torsion", encode_free(q.torsion)}};
}

json encode(const LambdaElement& x) {
  return {{"w0", x.ctx.w0}, {"n", x.ctx.n}, {"free_part", encode(x.free_part)}, {"torsion_bit", x.torsion_bit ? 1 : 0}};
}

json encode(const DegNElem& x) {
  json terms = json::array();
  for (const auto& [gen, c] : x.terms())
    terms.push_back({{"i", gen.i}, {"j", gen.j}, {"e", gen.e}, {"c", encode(c)}});
  return {{"n", x.n()}, {"terms", terms}};
}

json encode(const BracketElem& x) {
  json pairs = json::array();
  for (const auto& [k, c] : x.pairs())
    pairs.push_back({{"i", k.i}, {"j", k.j}, {"c", k.c}, {"l", k.l}, {"coef", encode(c)}});
  return {{"n", x.n()}, {"triple", encode(x.triple())}, {"pairs", pairs}};
}

json encode(const HexOrbit& o) {
  json elems = json::array();
  for (const auto& p : o.elements) elems.push_back({p[0], p[1]});
  return {{"rep", {o.rep[0], o.rep[1]}}, {"type", orbit_type_name(o.type)}, {"size", o.elements.size()}, {"elements", elems}};
}

json encode(const HexNormalForm& nf) {
  json orbits = json::array();
  for (const auto& [rep, c] : nf.orbits)
    orbits.push_back({{"rep", {rep[0], rep[1]}},
                      {"free", encode_free(c.free)},
                      {"torsion", encode_free(c.torsion)},
                      {"moduli", encode_free(c.moduli)}});
  return {{"n", nf.n}, {"zero", nf.is_zero()}, {"orbits", orbits}};
}

}  // namespace barbell
