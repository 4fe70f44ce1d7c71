#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "chroma/braid.hpp"
#include "chroma/diagram.hpp"
#include "chroma/fuzz.hpp"
#include "chroma/oracle.hpp"
#include "chroma/poly.hpp"
#include "chroma/skein.hpp"
#include "chroma/verify.hpp"

namespace {

using namespace chroma;

constexpr int kExitInput = 2;
constexpr int kExitFail = 1;

struct InputOpts {
  std::string file;
  std::string braid;
  std::string colors;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("file", in.file, "diagram JSON file");
  cmd->add_option("--braid", in.braid, "braid word, e.g. \"s1^-1 s1^-1\"");
  cmd->add_option("--colors", in.colors, "strand colors for --braid, e.g. a,b");
}

ColoredDiagram load_diagram(const InputOpts& in) {
  if (!in.braid.empty()) {
    if (in.colors.empty())
      throw DiagramError("--braid requires --colors");
    std::vector<Color> cols;
    std::string item;
    std::istringstream is(in.colors);
    while (std::getline(is, item, ',')) cols.push_back(item);
    return braid_closure(parse_braid_word(in.braid), cols).diagram;
  }
  if (in.file.empty())
    throw DiagramError("expected a diagram file or --braid/--colors");
  std::ifstream f(in.file);
  if (!f) throw DiagramError("cannot open '" + in.file + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_diagram(buf.str());
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw DiagramError("bad rational '" + s + "'");
  }
}

// "x=2,w=1/3,t=-4" -> three exact rationals
std::map<std::string, Rational> parse_eval_point(const std::string& s) {
  std::map<std::string, Rational> vals;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw DiagramError("bad --eval assignment '" + item + "'");
    vals[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  for (const char* v : {"x", "w", "t"})
    if (!vals.count(v))
      throw DiagramError(std::string("--eval is missing ") + v);
  return vals;
}

std::string partition_string(const std::vector<int>& rgs) {
  int blocks = 0;
  for (int b : rgs) blocks = std::max(blocks, b + 1);
  std::ostringstream os;
  for (int b = 0; b < blocks; ++b) {
    os << '{';
    bool first = true;
    for (size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] != b) continue;
      if (!first) os << ' ';
      os << i + 1;
      first = false;
    }
    os << '}';
  }
  return os.str();
}

int cmd_compute(const InputOpts& in, bool with_jones, const std::string& eval_at) {
  ColoredDiagram d = load_diagram(in);
  SkeinValue f = evaluate_F(d);
  std::cout << render(f) << "\n";
  if (with_jones)
    std::cout << "jones: " << render(f.substitute_half()) << "\n";
  if (!eval_at.empty()) {
    auto p = parse_eval_point(eval_at);
    std::cout << "value: " << f.eval(p.at("x"), p.at("w"), p.at("t")) << "\n";
  }
  return 0;
}

int cmd_colorations(const InputOpts& in) {
  ColoredDiagram d = load_diagram(in);
  auto table = all_colorations_F(d);
  // finest partitions first, then lexicographic
  std::vector<std::pair<std::vector<int>, SkeinValue>> rows(table.begin(), table.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    auto blocks = [](const std::vector<int>& r) {
      int m = 0;
      for (int v : r) m = std::max(m, v + 1);
      return m;
    };
    int ra = blocks(a.first), rb = blocks(b.first);
    if (ra != rb) return ra > rb;
    return a.first < b.first;
  });
  for (const auto& [rgs, value] : rows)
    std::cout << partition_string(rgs) << " -> " << render(value) << "\n";
  return 0;
}

int cmd_jones(const InputOpts& in) {
  ColoredDiagram d = load_diagram(in);
  std::cout << render_s_poly(jones(d)) << "\n";
  return 0;
}

int cmd_verify(bool inject_bug) {
  auto checks = verify_reference_example(inject_bug);
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
    if (!c.pass) {
      std::cout << "      expected: " << render(c.expected) << "\n";
      std::cout << "      actual:   " << render(c.actual) << "\n";
    }
  }
  bool ok = all_passed(checks);
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_fuzz(int max_crossings, int cases, std::uint64_t seed, bool inject_bug) {
  FuzzConfig cfg;
  cfg.max_crossings = max_crossings;
  cfg.cases = cases;
  cfg.seed = seed;
  cfg.inject_bug = inject_bug;
  FuzzReport r = run_invariance_fuzz(cfg);
  std::cout << format_report(r);
  return r.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein-relation invariant of colored links"};
  app.require_subcommand(1);

  InputOpts in_compute, in_color, in_jones;
  bool with_jones = false;
  std::string eval_at;
  bool inject_verify = false, inject_fuzz = false;
  int fuzz_max = 8, fuzz_cases = 200;
  std::uint64_t fuzz_seed = 42;

  auto* compute = app.add_subcommand("compute", "evaluate the invariant");
  add_input_options(compute, in_compute);
  compute->add_flag("--jones", with_jones, "also print the w=t^(1/2) specialization");
  compute->add_option("--eval", eval_at, "exact evaluation, e.g. x=2,w=1/3,t=-4");

  auto* colorations =
      app.add_subcommand("colorations", "evaluate every coloration class");
  add_input_options(colorations, in_color);

  auto* jones_cmd =
      app.add_subcommand("jones", "Jones polynomial via the Kauffman bracket");
  add_input_options(jones_cmd, in_jones);

  auto* verify = app.add_subcommand("verify-paper", "check the built-in worked example");
  verify->add_flag("--inject-bug", inject_verify,
                   "negative control: corrupt one fixture")
      ->group("");

  auto* fuzz = app.add_subcommand("fuzz", "random invariance campaign");
  fuzz->add_option("--max-crossings", fuzz_max, "crossing bound per case");
  fuzz->add_option("--cases", fuzz_cases, "number of random diagrams");
  fuzz->add_option("--seed", fuzz_seed, "RNG seed");
  fuzz->add_flag("--inject-bug", inject_fuzz,
                 "negative control: check a writhe-sensitive statistic")
      ->group("");

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return cmd_compute(in_compute, with_jones, eval_at);
    if (colorations->parsed()) return cmd_colorations(in_color);
    if (jones_cmd->parsed()) return cmd_jones(in_jones);
    if (verify->parsed()) return cmd_verify(inject_verify);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_max, fuzz_cases, fuzz_seed, inject_fuzz);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const DiagramError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BraidError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
