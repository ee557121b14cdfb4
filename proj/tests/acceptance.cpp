// Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion and
// exits non-zero if any selected criterion fails.
//
//   acceptance [--criterion N] --cli <path to icr> --fixtures <dir>

#include "icr/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace icr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::map<std::string, Report> cache;

const Report& report(const std::string& suite) {
  auto it = cache.find(suite);
  if (it == cache.end()) it = cache.emplace(suite, run_suite(suite, Config{})).first;
  return it->second;
}

const Case& case_of(const Report& r, const std::string& id) {
  for (const auto& c : r.cases)
    if (c.id == id) return c;
  throw std::runtime_error("missing case " + r.suite + "/" + id);
}

// Every listed case must have the wanted verdict; an empty list means all
// cases of the suite must pass.
Outcome cases(const std::string& suite, const std::vector<std::string>& ids,
              const std::map<std::string, Verdict>& special = {}) {
  const Report& r = report(suite);
  std::vector<const Case*> sel;
  if (ids.empty())
    for (const auto& c : r.cases) sel.push_back(&c);
  else
    for (const auto& id : ids) sel.push_back(&case_of(r, id));
  Outcome o;
  std::size_t checks = 0;
  std::ostringstream bad;
  for (const Case* c : sel) {
    checks += c->checks;
    auto sp = special.find(c->id);
    Verdict want = sp == special.end() ? Verdict::Pass : sp->second;
    if (c->verdict != want) {
      o.pass = false;
      bad << " " << c->id << "=" << verdict_name(c->verdict) << "(" << c->failures << "/" << c->checks << ")";
    }
  }
  o.detail = o.pass ? std::to_string(sel.size()) + " cases, " + std::to_string(checks) + " exact checks"
                    : "failing:" + bad.str();
  return o;
}

Outcome both(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

Config reduced(Fault f) {
  Config c;
  c.t1_mappings = 5;
  c.t1_points = 4;
  c.t2_mappings = 3;
  c.t2_samples = 4;
  c.t2_converse = 0;
  c.bridge_instances = 0;
  c.fault = f;
  return c;
}

Outcome fault_run(const std::string& suite, Fault f) {
  Report r = run_suite(suite, reduced(f));
  Outcome o;
  o.pass = !r.pass() && exit_status(r) == 1;
  o.detail = std::string("fault-injected run ") + (r.pass() ? "PASSED (not detected)" : "FAILS as required");
  return o;
}

struct CliResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

CliResult cli(const std::string& exe, const std::string& args, const std::filesystem::path& out) {
  std::string cmd = "\"" + exe + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

Outcome reproducibility(const std::string& exe, const std::string& fixtures) {
  Outcome o;
  if (exe.empty()) return {false, "no --cli given"};
  auto dir = std::filesystem::temp_directory_path() / ("icr-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ostringstream d;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) o.pass = false;
    d << (d.tellp() ? "; " : "") << what << (ok ? " ok" : " MISMATCH");
  };
  // Default config, one suite, and a reduced config over every suite.
  for (const std::string& args : {std::string("run --suite theorem1 --seed 0"),
                                  "run --suite all --seed 5 --config \"" + fixtures + "/small.config\""}) {
    CliResult a = cli(exe, args + " --out \"" + (dir / "a.json").string() + "\"", dir / "a.log");
    CliResult b = cli(exe, args + " --out \"" + (dir / "b.json").string() + "\"", dir / "b.log");
    std::string ra = slurp(dir / "a.json"), rb = slurp(dir / "b.json");
    bool verdict_pass = ra.find("\"verdict\": \"PASS\"\n}") != std::string::npos;
    expect(!ra.empty() && ra == rb && a.code == b.code && a.code == (verdict_pass ? 0 : 1),
           "byte-identical [" + args.substr(0, args.find(" --config")) + "]");
  }
  CliResult pass = cli(exe, "run --suite limits --config \"" + fixtures + "/small.config\"", dir / "p.json");
  expect(pass.code == 0 && pass.out.find("\"verdict\": \"PASS\"\n}") != std::string::npos, "exit 0 on PASS");
  CliResult fail = cli(exe, "run --suite theorem2 --config \"" + fixtures + "/lower_c.config\"", dir / "f.json");
  expect(fail.code == 1 && fail.out.find("\"verdict\": \"FAIL\"\n}") != std::string::npos, "exit 1 on FAIL");
  expect(cli(exe, "run --suite nonsense", dir / "u.log").code == 2, "exit 2 on usage");
  expect(cli(exe, "run --suite limits --config \"" + fixtures + "/bad.config\"", dir / "i.log").code == 3,
         "exit 3 on input error");
  std::filesystem::remove_all(dir);
  o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string exe, fixtures;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_option("--cli", exe, "Path to the icr executable");
  app.add_option("--fixtures", fixtures, "Fixture directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"support laws (i),(ii),(iii),(vi),(vii) and the superadditivity counterexample",
       [] { return cases("sigma-props", {"support-laws", "superadditivity-counterexample"}); }},
      {"separation on 1000 pairs", [] { return cases("sigma-props", {"separation"}); }},
      {"inclusion equivalence on 1000 pairs", [] { return cases("sigma-props", {"inclusion-equivalence"}); }},
      {"set algebra vs grid membership oracle", [] { return cases("normal-set-oracle", {}); }},
      {"hull exactness, co-radiance and minimality", [] { return cases("hull", {}); }},
      {"graph characterizations", [] { return cases("graph-chars", {}); }},
      {"theorem 1 witnesses and radius fault injection",
       [] { return both(cases("theorem1", {}), fault_run("theorem1", Fault::Radius)); }},
      {"theorem 2 inclusion, anchor gaps, refinement, converse, lowered-c fault",
       [] {
         return both(cases("theorem2", {"forward-inclusion", "anchor-gap", "refinement", "converse",
                                        "fault-injection-lower-c"}),
                     fault_run("theorem2", Fault::LowerC));
       }},
      {"scalar bridge", [] { return cases("theorem2", {"scalar-bridge"}); }},
      {"set and mapping limits vs truncated distances", [] { return cases("limits", {}); }},
      {"regularity and Lipschitz probes",
       [] { return cases("regularity", {}, {{"step-threshold-lsc", Verdict::ExpectedFail}}); }},
      {"reproducibility and exit codes", [&] { return reproducibility(exe, fixtures); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %2zu: %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
