#include "fc/io.hpp"

#include <algorithm>
#include <sstream>

namespace fc::io {

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exp = json::array();
    for (int v : e) exp.push_back(v);
    out.push_back({{"exp", exp}, {"coef", c.str()}});
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& t : j) {
    Exponent e{};
    const auto& exp = t.at("exp");
    if (exp.size() != e.size()) throw DomainError("exponent vector has wrong length");
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = exp[k].get<int>();
    const auto& c = t.at("coef");
    p += LaurentPoly::monomial(e, c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>()));
  }
  return p;
}

json to_json(const QuadExt& x) { return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", to_json(x.d())}}; }

json to_json(const RDyckPath& p) { return {{"word", p.word()}, {"r", p.r()}, {"n", p.size()}}; }

RDyckPath path_from_json(const json& j) {
  return RDyckPath(expand_word(j.at("word").get<std::string>()), j.value("r", 1));
}

json to_json(const RYoungTableau& t) {
  return {{"r", t.r}, {"first_row", t.first_row}, {"second_row", t.second_row}};
}

namespace {

json arch_list(const auto& arches) {
  json out = json::array();
  for (const auto& [a, b] : arches) out.push_back({a, b});
  return out;
}

std::vector<Arch> arches_from(const json& j) {
  std::vector<Arch> out;
  for (const auto& a : j) out.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  return out;
}

std::set<int> int_set(const json& j) {
  std::set<int> out;
  for (const auto& x : j) out.insert(x.get<int>());
  return out;
}

}  // namespace

json to_json(const ChordDiagram& c) {
  auto arches = c.arches();
  std::sort(arches.begin(), arches.end());
  return {{"points", c.num_points()},
          {"arches", arch_list(arches)},
          {"right_ends", c.right_ends()},
          {"left_ends", c.left_ends()},
          {"dots", arch_list(c.dots())}};
}

ChordDiagram chord_from_json(const json& j) {
  std::set<Arch> dots;
  if (j.contains("dots"))
    for (const auto& a : arches_from(j["dots"])) dots.insert(a);
  return ChordDiagram(j.at("points").get<int>(), arches_from(j.at("arches")),
                      j.contains("right_ends") ? int_set(j["right_ends"]) : std::set<int>{},
                      j.contains("left_ends") ? int_set(j["left_ends"]) : std::set<int>{}, dots);
}

json to_json(const GenChordDiagram& g) { return {{"n", g.n}, {"r", g.r}, {"blocks", g.blocks}}; }

json to_json(const NcPartition& p) { return {{"n", p.n()}, {"blocks", p.blocks()}}; }

NcPartition partition_from_json(const json& j) {
  if (j.is_string()) return NcPartition::parse(j.get<std::string>());
  return NcPartition(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
}

json to_json(const RChain& c) {
  json parts = json::array();
  for (const auto& p : c.parts()) parts.push_back(to_json(p));
  return {{"r", c.r()}, {"parts", parts}};
}

RChain chain_from_json(const json& j) {
  if (j.is_string()) return RChain::parse(j.get<std::string>());
  std::vector<NcPartition> parts;
  for (const auto& p : j.at("parts")) parts.push_back(partition_from_json(p));
  return RChain(std::move(parts));
}

json to_json(const PrimedPartition& p) {
  return {{"n", p.n()}, {"blocks", p.base().blocks()}, {"primed", p.primed()}};
}

PrimedPartition primed_from_json(const json& j) {
  if (j.is_string()) return PrimedPartition::parse(j.get<std::string>());
  return PrimedPartition(partition_from_json(j), j.contains("primed") ? int_set(j["primed"]) : std::set<int>{});
}

json to_json(const PrimedChain& c) {
  json parts = json::array();
  for (const auto& p : c.parts()) parts.push_back(to_json(p));
  return {{"r", c.r()}, {"parts", parts}};
}

PrimedChain primed_chain_from_json(const json& j) {
  if (j.is_string()) return PrimedChain::parse(j.get<std::string>());
  std::vector<PrimedPartition> parts;
  for (const auto& p : j.at("parts")) parts.push_back(primed_from_json(p));
  return PrimedChain(std::move(parts));
}

json to_json(const Diagram& d) {
  const int N = d.slots();
  std::vector<Arch> arches;
  std::set<int> right, left;
  json bottom = json::array(), top = json::array();
  for (int v = 0; v < d.num_nodes(); ++v) {
    const int l = d.link(v);
    if (!is_stub(l)) {
      if (v < l) arches.push_back({v + 1, l + 1});
      continue;
    }
    (stub_left(l) ? left : right).insert(v + 1);
    json s = {{"point", v + 1}, {"wall", stub_left(l) ? "left" : "right"}, {"parity", stub_odd(l) ? "odd" : "even"}};
    (v < N ? bottom : top).push_back(s);
  }
  return {{"m", d.m()},
          {"r", d.r()},
          {"boundary", to_string(d.boundary())},
          {"has_top", d.has_top()},
          {"points", d.num_nodes()},
          {"arches", arch_list(arches)},
          {"right_ends", right},
          {"left_ends", left},
          {"dots", json::array()},
          {"bottom_stubs", bottom},
          {"top_stubs", top},
          {"lr_strands", d.lr_strands()}};
}

Diagram diagram_from_json(const json& j) {
  std::vector<int> links(j.at("points").get<int>(), 0);
  const int N = j.at("m").get<int>() * j.at("r").get<int>();
  std::vector<char> seen(links.size(), 0);
  auto slot = [&](int p) {
    if (p < 1 || p > static_cast<int>(links.size()) || seen[p - 1]) throw DomainError("bad diagram point");
    seen[p - 1] = 1;
    return p - 1;
  };
  for (const auto& [a, b] : arches_from(j.at("arches"))) {
    const int x = slot(a), y = slot(b);
    links[x] = y;
    links[y] = x;
  }
  for (const char* key : {"bottom_stubs", "top_stubs"}) {
    if (!j.contains(key)) continue;
    for (const auto& s : j[key]) {
      const int v = slot(s.at("point").get<int>());
      if ((v < N) != (std::string(key) == "bottom_stubs")) throw DomainError("stub on the wrong edge");
      links[v] = stub_code(s.at("wall") == "left", s.at("parity") == "odd");
    }
  }
  for (char c : seen)
    if (!c) throw DomainError("diagram point left unassigned");
  return Diagram(j.at("m").get<int>(), j.at("r").get<int>(), parse_boundary(j.at("boundary").get<std::string>()),
                 j.at("has_top").get<bool>(), std::move(links), j.value("lr_strands", 0));
}

json to_json(const LaurentElement& x) {
  json out = json::array();
  for (const auto& [d, c] : x.terms()) out.push_back({{"diagram", to_json(d)}, {"coef", to_json(c)}});
  return out;
}

LaurentElement element_from_json(const json& j) {
  LaurentElement x;
  for (const auto& t : j) x.add(diagram_from_json(t.at("diagram")), laurent_from_json(t.at("coef")));
  return x;
}

json to_json(const CoverExclusiveTiling& t) {
  json a = json::array();
  for (const auto& [d, u] : t.anchors) a.push_back({d, u});
  return {{"anchors", a}, {"tiles", t.anchors.size()}, {"top_path", tiling_top_path(t)}};
}

json to_json(const VerifyReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json params = json::object();
    for (const auto& [k, v] : s.params) params[k] = v;
    samples.push_back({{"index", s.index}, {"params", params}, {"pass", s.pass}});
  }
  return {{"name", r.name}, {"passed", r.passed()}, {"total", r.samples.size()}, {"ok", r.ok()}, {"samples", samples}};
}

json to_json(const IsoReport& r, const std::string& name) {
  return {{"name", name}, {"checked", r.checked}, {"ok", r.ok()}, {"failures", r.failures}};
}

json to_json(const RelationReport& r, const std::string& name) {
  return {{"name", name}, {"checked", r.checked}, {"ok", r.ok()}, {"failures", r.failures}};
}

std::string text(const ChordDiagram& c) {
  std::ostringstream out;
  out << c.num_points() << ":";
  auto arches = c.arches();
  std::sort(arches.begin(), arches.end());
  for (const auto& [a, b] : arches) out << " (" << a << "," << b << ")" << (c.dots().count({a, b}) ? "*" : "");
  for (int x : c.right_ends()) out << " " << x << "R";
  for (int x : c.left_ends()) out << " " << x << "L";
  return out.str();
}

std::string text(const VerifyReport& r) {
  std::ostringstream out;
  out << r.name << " " << r.passed() << "/" << r.samples.size() << (r.ok() ? " pass" : " FAIL") << "\n";
  for (const auto& s : r.samples) {
    out << "  #" << s.index << (s.pass ? " ok  " : " fail");
    for (const auto& [k, v] : s.params) out << " " << k << "=" << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace fc::io
