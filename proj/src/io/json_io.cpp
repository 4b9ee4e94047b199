#include "cssplit/json_io.hpp"

#include <fstream>
#include <limits>

#include "cssplit/error.hpp"

namespace cssplit::io {

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) {
    throw ParseError(where + ": expected a JSON object");
  }
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(where + ": missing field '" + name + "'");
  }
  return *it;
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw ParseError(what + ": expected an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(what + ": integer out of range");
  }
  return static_cast<int>(v);
}

double as_double(const json& j, const std::string& what) {
  if (!j.is_number()) {
    throw ParseError(what + ": expected a number");
  }
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) {
    throw ParseError(what + ": expected a string");
  }
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) {
    throw ParseError(what + ": expected an array");
  }
  return j;
}

std::vector<int> int_list(const json& j, const std::string& what) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(j, what).size(); ++i) {
    out.push_back(as_int(j[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json phase_json(const ExactPhase& p) {
  const auto z = p.to_complex();
  return {{"numerator", p.numerator()},
          {"denominator", p.denominator()},
          {"phase_re", z.real()},
          {"phase_im", z.imag()}};
}

} // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

PDCode parse_link(const json& j) {
  const std::string format = as_string(field(j, "format", "link"), "link.format");
  if (format == "braid") {
    const json& word = field(j, "word", "link");
    std::optional<int> strands;
    if (j.contains("strands")) {
      strands = as_int(j["strands"], "link.strands");
    }
    if (word.is_string()) {
      return braid_closure(parse_braid(word.get<std::string>(), strands));
    }
    std::vector<int> letters = int_list(word, "link.word");
    int needed = 1;
    for (int l : letters) {
      needed = std::max(needed, std::abs(l) + 1);
    }
    return braid_closure(BraidWord(strands.value_or(needed), std::move(letters)));
  }
  if (format == "pd") {
    std::vector<Crossing> crossings;
    const json& xs = as_array(field(j, "crossings", "link"), "link.crossings");
    for (std::size_t c = 0; c < xs.size(); ++c) {
      const std::string what = "link.crossings[" + std::to_string(c) + "]";
      const std::vector<int> v = int_list(xs[c], what);
      if (v.size() != 5) {
        throw ParseError(what + ": expected [a, b, c, d, sign]");
      }
      crossings.push_back(Crossing{{v[0], v[1], v[2], v[3]}, v[4]});
    }
    std::vector<std::vector<int>> components;
    const json& cs = as_array(field(j, "components", "link"), "link.components");
    for (std::size_t c = 0; c < cs.size(); ++c) {
      components.push_back(
          int_list(cs[c], "link.components[" + std::to_string(c) + "]"));
    }
    try {
      return PDCode(std::move(crossings), std::move(components));
    } catch (const DomainError& e) {
      // an inconsistent code is malformed input
      throw ParseError(std::string("link: ") + e.what());
    }
  }
  throw ParseError("link.format: expected \"braid\" or \"pd\", got \"" + format +
                   "\"");
}

TorusLoop parse_torus_loop(const json& j) {
  const std::vector<int> w = int_list(field(j, "winding", "loop"), "loop.winding");
  if (w.size() != 2) {
    throw ParseError("loop.winding: expected [p, q]");
  }
  std::vector<Point2> vertices;
  const json& segs = as_array(field(j, "segments", "loop"), "loop.segments");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string what = "loop.segments[" + std::to_string(i) + "]";
    if (!segs[i].is_array() || segs[i].size() != 2) {
      throw ParseError(what + ": expected [x, y]");
    }
    vertices.push_back({as_double(segs[i][0], what), as_double(segs[i][1], what)});
  }
  return TorusLoop({w[0], w[1]}, std::move(vertices));
}

WordFile parse_word(const json& j) {
  std::vector<WordEntry> entries;
  const json& es = as_array(field(j, "entries", "word"), "word.entries");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string what = "word.entries[" + std::to_string(i) + "]";
    const std::string kind = as_string(field(es[i], "kind", what), what + ".kind");
    if (kind != "W" && kind != "T") {
      throw ParseError(what + ".kind: expected \"W\" or \"T\"");
    }
    WordEntry e;
    e.kind = kind == "W" ? LoopKind::W : LoopKind::T;
    e.curve = as_string(field(es[i], "curve", what), what + ".curve");
    if (es[i].contains("charge")) {
      e.charge = as_int(es[i]["charge"], what + ".charge");
    }
    entries.push_back(std::move(e));
  }
  std::vector<std::vector<int>> inter;
  const json& rows = as_array(field(j, "intersections", "word"), "word.intersections");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    inter.push_back(int_list(rows[r], "word.intersections[" + std::to_string(r) + "]"));
  }
  WordFile out{LoopOperatorWord(std::move(entries), std::move(inter)), {}};
  if (j.contains("curves")) {
    const json& curves = j["curves"];
    if (!curves.is_object()) {
      throw ParseError("word.curves: expected an object of link definitions");
    }
    for (const auto& [id, link] : curves.items()) {
      out.curves.emplace(id, parse_link(link));
    }
  }
  return out;
}

json to_json(const RootOfUnityScalar& v) { return v.coefficients(); }

json to_json(const CSExpectation& e) {
  return {{"level", e.level},
          {"normalization", to_string(e.normalization)},
          {"representation", "fundamental"},
          {"cyclotomic_order", e.value.order()},
          {"value_exact", to_json(e.value)},
          {"value_re", e.rendered.real()},
          {"value_im", e.rendered.imag()}};
}

json to_json(const SplitExpectation& e) {
  json prov = json::array();
  for (const auto& p : e.provenance) {
    prov.push_back({{"kind", std::string(1, to_char(p.kind))},
                    {"curve", p.curve},
                    {"cs_expectation", to_json(p.value)}});
  }
  json corr = {{"order", e.correction.order}};
  if (e.correction.bound_coefficient) {
    corr["bound"] = *e.correction.bound_coefficient;
  }
  return {{"tmym_level", e.tmym_level},
          {"cs_level", e.cs_level},
          {"normalization", to_string(e.normalization)},
          {"cyclotomic_order", e.value.order()},
          {"value_exact", to_json(e.value)},
          {"value_re", e.rendered.real()},
          {"value_im", e.rendered.imag()},
          {"provenance", prov},
          {"correction", corr}};
}

json to_json(const LoopOperatorWord& w) {
  json entries = json::array();
  for (const auto& e : w.entries()) {
    entries.push_back({{"kind", std::string(1, to_char(e.kind))},
                       {"curve", e.curve},
                       {"charge", e.charge}});
  }
  return {{"entries", entries}, {"intersections", w.intersections()}};
}

json to_json(const ReorderedWord& r) {
  return {{"word", to_json(r.word)}, {"phase", phase_json(r.phase)}};
}

json to_json(const InnerProductForm& f) {
  json factors = json::array();
  for (const auto& x : f.factors) {
    factors.push_back({{"theory", to_string(x.theory)},
                       {"level", x.level.to_string()},
                       {"wzw_coefficient", x.coefficient.to_string()}});
  }
  json out = {{"theory", to_string(f.source.theory())},
              {"level", f.source.k()},
              {"factors", factors},
              {"level_sum", f.level_sum().to_string()},
              {"identity_map", f.identity_map},
              {"observable_mapping_available", f.observable_mapping_available}};
  if (f.source.mass()) {
    out["mass"] = *f.source.mass();
  }
  out["correction"] =
      f.correction ? json{{"order", f.correction->order}} : json(nullptr);
  return out;
}

json to_json(const VerificationReport& r) {
  json residuals = json::array();
  for (const auto& x : r.residuals) {
    json e = {{"quantity", x.quantity},
              {"coarse", x.coarse},
              {"tolerance", x.tolerance},
              {"passed", x.passed}};
    e["fine"] = x.fine ? json(*x.fine) : json(nullptr);
    e["ratio"] = x.ratio ? json(*x.ratio) : json(nullptr);
    residuals.push_back(std::move(e));
  }
  return {{"suite", r.suite},
          {"grid", r.grid},
          {"residuals", residuals},
          {"converged", r.converged}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

} // namespace cssplit::io
