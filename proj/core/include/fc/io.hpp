#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fc/boundary.hpp"
#include "fc/chains.hpp"
#include "fc/chords.hpp"
#include "fc/diagram.hpp"
#include "fc/integrability.hpp"
#include "fc/lincomb.hpp"
#include "fc/noncrossing.hpp"
#include "fc/paths.hpp"
#include "fc/rings.hpp"

namespace fc::io {

using json = nlohmann::json;

json to_json(const Rational& x);
Rational rational_from_json(const json& j);

// [{"exp":[e_q,e_qn,e_q0,e_t],"coef":"<int>"}, ...]
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const QuadExt& x);

json to_json(const RDyckPath& p);
RDyckPath path_from_json(const json& j);
json to_json(const RYoungTableau& t);

// {"points", "arches", "right_ends", "left_ends", "dots"}
json to_json(const ChordDiagram& c);
ChordDiagram chord_from_json(const json& j);
json to_json(const GenChordDiagram& g);

json to_json(const NcPartition& p);
NcPartition partition_from_json(const json& j);
json to_json(const RChain& c);
RChain chain_from_json(const json& j);
json to_json(const PrimedPartition& p);
PrimedPartition primed_from_json(const json& j);
json to_json(const PrimedChain& c);
PrimedChain primed_chain_from_json(const json& j);

// Chord schema on 2N points (bottom 1..N, top N+1..2N) plus "bottom_stubs"/"top_stubs".
json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);
json to_json(const LaurentElement& x);
LaurentElement element_from_json(const json& j);

json to_json(const CoverExclusiveTiling& t);

json to_json(const VerifyReport& r);
json to_json(const IsoReport& r, const std::string& name);
json to_json(const RelationReport& r, const std::string& name);

inline std::string text(const NcPartition& p) { return p.to_string(); }
inline std::string text(const RChain& c) { return c.to_string(); }
inline std::string text(const PrimedPartition& p) { return p.to_string(); }
inline std::string text(const PrimedChain& c) { return c.to_string(); }
inline std::string text(const RDyckPath& p) { return p.word(); }
inline std::string text(const Diagram& d) { return d.to_string(); }
std::string text(const ChordDiagram& c);
std::string text(const VerifyReport& r);

// "(coef) obj + (coef) obj"; "0" when empty.
template <class K>
std::string text(const LinComb<K, LaurentPoly>& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (c == LaurentPoly::constant(1))
      out += text(k);
    else
      out += "(" + c.to_string() + ") " + text(k);
  }
  return out;
}

template <class K>
json to_json(const LinComb<K, LaurentPoly>& s) {
  json out = json::array();
  for (const auto& [k, c] : s.terms())
    out.push_back({{"object", to_json(k)}, {"text", text(k)}, {"coef", to_json(c)}, {"coef_text", c.to_string()}});
  return out;
}

}  // namespace fc::io
