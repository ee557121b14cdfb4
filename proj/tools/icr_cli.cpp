#include "icr/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace icr;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInput = 3 };

std::string join(const VecPlus& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

/// "[0,2]x[0,1] U [0,1]x[0,3] generators: (2,1) (1,3)"; the origin prints
/// as "{0} generators: (0,...)".
std::string render(const BoxUnion& c) {
  std::string boxes, gens;
  for (const auto& g : c.generators()) {
    if (!boxes.empty()) boxes += " U ";
    for (std::size_t i = 0; i < g.dim(); ++i) boxes += (i ? "x[0," : "[0,") + g[i].str() + "]";
    gens += " " + g.str();
  }
  if (c.generators().size() == 1 && c.generators()[0].is_zero()) boxes = "{0}";
  return boxes + " generators:" + gens;
}

void warn(const Diagnostics& d) {
  for (const auto& w : d.warnings) std::cerr << "warning: " << w << "\n";
}

BoxUnion load_set(const std::string& path) {
  Diagnostics d;
  BoxUnion c = set_from_json(read_json_file(path), &d);
  warn(d);
  return c;
}

Mapping load_mapping(const std::string& path) {
  Diagnostics d;
  Mapping f = mapping_from_json(read_json_file(path), &d);
  warn(d);
  return f;
}

VecPlus point(const std::string& text, std::size_t dim, const char* what) {
  VecPlus x = parse_point(text);
  if (x.dim() != dim)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) + " coordinates, got " +
                         std::to_string(x.dim()));
  return x;
}

int run(const std::string& suite, const std::optional<std::string>& config_path, std::optional<std::uint64_t> seed,
        const std::optional<std::string>& tol, const std::optional<std::string>& dims,
        const std::optional<std::string>& out) {
  Config cfg;
  if (config_path) cfg = config_from_json(read_json_file(*config_path));
  if (seed) cfg.seed = *seed;
  if (tol) {
    cfg.tol = Rat::parse(*tol);
    if (cfg.tol.sign() <= 0) throw ParseError("--tol: tolerance must be positive");
  }
  if (dims) {
    auto comma = dims->find(',');
    auto cap = [](const std::string& v, const char* name) -> std::size_t {
      if (v == "1" || v == "2" || v == "3") return static_cast<std::size_t>(v[0] - '0');
      throw ParseError(std::string("--dims: ") + name + " must be 1, 2 or 3");
    };
    if (comma == std::string::npos) throw ParseError("--dims: expected n,m");
    cfg.n_max = cap(dims->substr(0, comma), "n");
    cfg.m_max = cap(dims->substr(comma + 1), "m");
  }
  Report rep = run_suite(suite, cfg);
  std::string text = dump(rep.to_json());
  if (out) {
    std::ofstream f(*out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + *out);
    f << text;
  } else {
    std::cout << text;
  }
  for (const auto& c : rep.cases)
    if (c.verdict != Verdict::Pass) std::cerr << verdict_name(c.verdict) << " " << c.id << "\n";
  std::cerr << suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.cases.size() << " cases)\n";
  return exit_status(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tools for increasing co-radiant set-valued mappings"};
  app.require_subcommand(1);
  std::string set_file, map_file, tset_file, x_text, y_text;

  auto* member = app.add_subcommand("member", "Is x in the normal set? Prints true or false");
  member->add_option("set", set_file, "BoxUnion file")->required();
  member->add_option("x", x_text, "Point p/q,...")->required();

  auto* supp = app.add_subcommand("support", "Support function value at a dual vector");
  supp->add_option("set", set_file, "BoxUnion file")->required();
  supp->add_option("l", x_text, "Dual vector p/q,...")->required();

  auto* sep = app.add_subcommand("separate", "Separating dual l with support <= 1 < <l,x>");
  sep->add_option("set", set_file, "BoxUnion file")->required();
  sep->add_option("x", x_text, "Point outside the set")->required();

  auto* hull = app.add_subcommand("hull", "Co-radiant hull of a step mapping at x");
  hull->add_option("map", map_file, "Step or hull mapping file")->required();
  hull->add_option("x", x_text, "Point")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a mapping at x");
  eval->add_option("map", map_file, "Mapping file")->required();
  eval->add_option("x", x_text, "Point")->required();

  auto* dist = app.add_subcommand("dist", "Exact Chebyshev distance from (x,y) to the graph");
  dist->add_option("map", map_file, "Step or hull mapping file")->required();
  dist->add_option("x", x_text, "Domain point")->required();
  dist->add_option("y", y_text, "Value point")->required();

  auto* gap = app.add_subcommand("gap", "Hausdorff gap between F(x) and the Delta intersection over T");
  gap->add_option("map", map_file, "Mapping file")->required();
  gap->add_option("tset", tset_file, "Triple set file")->required();
  gap->add_option("x", x_text, "Point")->required();

  std::string suite;
  std::optional<std::string> config_path, tol, dims, out;
  std::optional<std::uint64_t> seed;
  auto* runc = app.add_subcommand("run", "Run a verification suite and write its report");
  runc->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  runc->add_option("--seed", seed, "64-bit seed (default 0)");
  runc->add_option("--config", config_path, "Config JSON file");
  runc->add_option("--out", out, "Report path (default stdout)");
  runc->add_option("--tol", tol, "Tolerance p/q");
  runc->add_option("--dims", dims, "Dimension caps n,m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*member) {
      BoxUnion c = load_set(set_file);
      std::cout << (icr::member(c, point(x_text, c.dim(), "x")) ? "true" : "false") << "\n";
    } else if (*supp) {
      BoxUnion c = load_set(set_file);
      std::cout << support(c, point(x_text, c.dim(), "l")).str() << "\n";
    } else if (*sep) {
      BoxUnion c = load_set(set_file);
      VecPlus l = separate(c, point(x_text, c.dim(), "x"));
      std::cout << "l = " << join(l) << "\n";
    } else if (*hull) {
      Mapping f = load_mapping(map_file);
      VecPlus x = point(x_text, f.n(), "x");
      if (const auto* s = std::get_if<StepMapping>(&f.node())) std::cout << render(HullMapping(*s).eval(x)) << "\n";
      else if (std::holds_alternative<HullMapping>(f.node())) std::cout << render(f.eval(x)) << "\n";
      else throw ParseError("/kind: hull expects a step or hull mapping, got " + f.kind());
    } else if (*eval) {
      Mapping f = load_mapping(map_file);
      std::cout << render(f.eval(point(x_text, f.n(), "x"))) << "\n";
    } else if (*dist) {
      Mapping f = load_mapping(map_file);
      VecPlus x = point(x_text, f.n(), "x"), y = point(y_text, f.m(), "y");
      if (const auto* s = std::get_if<StepMapping>(&f.node())) std::cout << dist_to_graph(*s, x, y).str() << "\n";
      else if (const auto* h = std::get_if<HullMapping>(&f.node())) std::cout << dist_to_graph(*h, x, y).str() << "\n";
      else throw ParseError("/kind: dist expects a step or hull mapping, got " + f.kind());
    } else if (*gap) {
      Mapping f = load_mapping(map_file);
      Diagnostics d;
      TSet t = tset_from_json(read_json_file(tset_file), &d);
      warn(d);
      GapResult g = intersection_gap(f, t, point(x_text, f.n(), "x"));
      std::cout << "gap = " << g.gap.str() << " inclusion = " << (g.inclusion ? "true" : "false") << "\n";
    } else if (*runc) {
      return run(suite, config_path, seed, tol, dims, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kPass;
}
