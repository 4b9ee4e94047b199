#pragma once

// JSON readers and writers for the CLI. Readers throw ParseError naming the
// offending field; domain checks happen in the constructors they call.
//
// Link:        {"format": "braid", "strands": n, "word": [1, -2, ...]}
//              {"format": "pd", "crossings": [[a,b,c,d,sign], ...],
//               "components": [[arcs...], ...]}
// Torus loop:  {"winding": [p, q], "segments": [[x, y], ...]}
// Word:        {"entries": [{"kind": "W", "curve": "c1", "charge": 1}, ...],
//               "intersections": [[0, 1], [-1, 0]],
//               "curves": {"c1": <link>, ...}}        ("curves" optional)

#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "cssplit/linkmodel.hpp"
#include "cssplit/splitting.hpp"
#include "cssplit/wzwlab.hpp"

namespace cssplit::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);

PDCode parse_link(const json& j);
TorusLoop parse_torus_loop(const json& j);

struct WordFile {
  LoopOperatorWord word;
  std::map<std::string, PDCode> curves;
};
WordFile parse_word(const json& j);

json to_json(const RootOfUnityScalar& v);
json to_json(const CSExpectation& e);
json to_json(const SplitExpectation& e);
json to_json(const ReorderedWord& r);
json to_json(const InnerProductForm& f);
json to_json(const VerificationReport& r);
json to_json(const LoopOperatorWord& w);

/// Two-space indented dump with a trailing newline.
std::string render(const json& j);

} // namespace cssplit::io
