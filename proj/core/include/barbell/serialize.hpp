#pragma once

#include <nlohmann/json.hpp>

#include "barbell/classes.hpp"
#include "barbell/hexagon.hpp"
#include "barbell/intlat.hpp"
#include "barbell/lambda.hpp"
#include "barbell/laurent.hpp"
#include "barbell/whitehead.hpp"

namespace barbell {

using json = nlohmann::json;

// Coefficients are written as decimal strings; decoding also accepts JSON integers.
json encode(const Int& v);
json encode(const LaurentPoly1& p);
json encode(const LaurentPoly2& p);
json encode(const GClass& x);
json encode(const AlphaCombination& x);
json encode(const IntMatrix& m);
json encode(const QuotientStructure& q);
json encode(const LambdaElement& x);
json encode(const DegNElem& x);
json encode(const BracketElem& x);
json encode(const HexOrbit& o);
json encode(const HexNormalForm& nf);

template <typename T>
T decode(const json& j);

template <> Int decode<Int>(const json& j);
template <> LaurentPoly1 decode<LaurentPoly1>(const json& j);
template <> LaurentPoly2 decode<LaurentPoly2>(const json& j);
template <> GClass decode<GClass>(const json& j);
template <> AlphaCombination decode<AlphaCombination>(const json& j);
template <> IntMatrix decode<IntMatrix>(const json& j);

// Parses text then decodes; any syntax or shape problem becomes ValidationError.
template <typename T>
T decode_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return decode<T>(j);
}

}  // namespace barbell
