#include "cssplit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11/CLI11.hpp>

#include "cssplit/error.hpp"
#include "cssplit/json_io.hpp"

namespace cssplit::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

struct Options {
  int level = 0;
  std::string input;
  std::string word;
  std::string normalization = "writhe_corrected";
  std::optional<double> mass;
  std::optional<double> length_scale;
  std::vector<std::string> curves;
  std::string theory;
  std::string suite;
  int grid = 32;
  double amplitude = 0.3;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string fixture = "random";
  std::string output;
};

// Writes through a temporary file in the target directory and renames it
// into place, so readers never see a partial document.
void write_atomically(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw ParseError("cannot write '" + tmp.string() + "'");
    }
    f << text;
    if (!f.flush()) {
      throw ParseError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ParseError("cannot move output into '" + path.string() +
                     "': " + ec.message());
  }
}

void emit(const json& j, const Options& o, std::ostream& out) {
  const std::string text = io::render(j);
  if (o.output.empty()) {
    out << text;
  } else {
    write_atomically(o.output, text);
  }
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const PDCode pd = io::parse_link(io::read_json_file(o.input));
  const Normalization n = parse_normalization(o.normalization);
  emit(io::to_json(cs_expectation(pd, o.level, n)), o, out);
  return kOk;
}

int cmd_tmym(const Options& o, std::ostream& out) {
  io::WordFile wf = io::parse_word(io::read_json_file(o.word));
  for (const std::string& arg : o.curves) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("--curve expects id=file, got '" + arg + "'");
    }
    wf.curves.insert_or_assign(arg.substr(0, eq),
                               io::parse_link(io::read_json_file(arg.substr(eq + 1))));
  }
  const TheoryLevel t(Theory::TMYM, o.level, o.mass);
  emit(io::to_json(tmym_expectation(wf.word, t, wf.curves,
                                    parse_normalization(o.normalization),
                                    o.length_scale)),
       o, out);
  return kOk;
}

int cmd_algebra(const Options& o, std::ostream& out) {
  const io::WordFile wf = io::parse_word(io::read_json_file(o.word));
  const ReorderedWord r = normal_order(wf.word, o.level);
  json j = io::to_json(r);
  j["level"] = o.level;
  j["input"] = io::to_json(wf.word);
  emit(j, o, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Suite suite = parse_suite(o.suite);
  if (o.fixture != "random" && o.fixture != "constant") {
    throw ParseError("--fixture must be random or constant");
  }
  SuiteConfig c;
  c.grid = o.grid;
  c.amplitude = o.amplitude;
  c.level = o.level;
  c.tol = o.tol;
  c.constant_fixture = o.fixture == "constant";
  const bool randomized = !c.constant_fixture || suite == Suite::gauss ||
                          suite == Suite::symplectic || suite == Suite::all;
  if (randomized && !o.seed) {
    throw ParseError("--seed is required for randomized suites");
  }
  c.seed = o.seed.value_or(0);
  const VerificationReport rep = run_suite(suite, c);
  emit(io::to_json(rep), o, out);
  return rep.converged ? kOk : kVerificationFailure;
}

int cmd_split(const Options& o, std::ostream& out) {
  const TheoryLevel t(parse_theory(o.theory), o.level, o.mass);
  emit(io::to_json(split_inner_product(t)), o, out);
  return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chern-Simons splitting toolkit", "cssplit"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariant", "Wilson-loop expectation value of a link");
  inv->add_option("--level", o.level, "CS level k")->required();
  inv->add_option("--input", o.input, "link JSON file")->required();
  inv->add_option("--normalization", o.normalization,
                  "bracket or writhe_corrected (default)");

  auto* tm = app.add_subcommand("tmym", "TMYM loop expectation via CS at level k/2");
  tm->add_option("--level", o.level, "TMYM level k (even)")->required();
  tm->add_option("--m", o.mass, "mass parameter")->required();
  tm->add_option("--word", o.word, "word JSON file")->required();
  tm->add_option("--length-scale", o.length_scale, "length scale L for the 1/(mL)^2 bound");
  tm->add_option("--curve", o.curves, "curve definition id=link.json (repeatable)");
  tm->add_option("--normalization", o.normalization,
                 "bracket or writhe_corrected (default)");

  auto* alg = app.add_subcommand("algebra", "normal-order a W/T word");
  alg->add_option("--level", o.level, "level k")->required();
  alg->add_option("--word", o.word, "word JSON file")->required();

  auto* ver = app.add_subcommand("verify", "run lattice verification suites");
  ver->add_option("--suite", o.suite, "flatness, pw, gauss, symplectic or all")->required();
  ver->add_option("--grid", o.grid, "base grid size N (refined to 2N)");
  ver->add_option("--amplitude", o.amplitude, "field amplitude in (0, 1]");
  ver->add_option("--seed", o.seed, "RNG seed (required for random fields)");
  ver->add_option("--level", o.level, "level k (gauss suite)");
  ver->add_option("--tol", o.tol, "relative residual threshold");
  ver->add_option("--fixture", o.fixture, "random (default) or constant");

  auto* sp = app.add_subcommand("split", "inner-product splitting of a theory");
  sp->add_option("--theory", o.theory, "CS, TMYM or YM")->required();
  sp->add_option("--level", o.level, "level k")->required();
  sp->add_option("--m", o.mass, "mass parameter (TMYM, YM)");

  for (auto* sub : {inv, tm, alg, ver, sp}) {
    sub->add_option("--output", o.output, "write JSON here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    // --help
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (inv->parsed()) {
      return cmd_invariant(o, out);
    }
    if (tm->parsed()) {
      return cmd_tmym(o, out);
    }
    if (alg->parsed()) {
      return cmd_algebra(o, out);
    }
    if (ver->parsed()) {
      if (ver->count("--level") == 0) {
        o.level = 2;
      }
      return cmd_verify(o, out);
    }
    return cmd_split(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

} // namespace cssplit::cli
