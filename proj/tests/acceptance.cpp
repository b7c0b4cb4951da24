// Acceptance run: one line per criterion with verdict, runtime and limit.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dlab/additive.hpp"
#include "dlab/dist.hpp"
#include "dlab/dsl.hpp"

using namespace dlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
  void need(const Report& r, const std::string& what) {
    for (const auto& c : r.checks)
      if (c.skipped) need(false, what + ": " + c.name + " skipped " + std::to_string(c.skipped) + " samples");
    if (r.passed()) return;
    for (const auto& c : r.checks)
      if (!c.passed) need(false, what + ": " + c.name + (c.witnesses.empty() ? "" : " (" + c.witnesses[0] + ")"));
  }
};

const CheckResult* find_check(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

std::vector<CatPtr> small_family() {
  std::vector<CatPtr> out;
  for (const auto& s : default_shape_family())
    if (s->num_objects() <= 3) out.push_back(s);
  return out;
}

// the CLI as a subprocess
struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(DLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (auto i = s.find(from); i != std::string::npos; i = s.find(from, i + to.size())) s.replace(i, from.size(), to);
  return s;
}

Outcome criterion1() {
  Outcome o;
  auto fam = default_shape_family();
  o.need(axioms_report(KanEngine<FinSetBase>{FinSetBase()}, fam), "finset");
  o.need(axioms_report(KanEngine<MatBase>{MatBase(2)}, fam), "mat2");
  auto bad = axioms_report(KanEngine<FinSetBase>{FinSetBase(), KanWiring::LanFromRan}, fam);
  auto* d4 = find_check(bad, "Der4");
  o.need(d4 && !d4->passed, "corrupted engine passes Der4");
  o.need(d4 && !d4->witnesses.empty() && d4->witnesses[0].find("u=") != std::string::npos,
         "corrupted engine failure has no named witness");
  for (const char* base : {"finset", "mat"})
    o.need(run_cli(std::string("--base ") + base + " check-axioms").code == 0, std::string("check-axioms --base ") + base);
  auto broken = run_cli("check-axioms --engine lan-from-ran");
  o.need(broken.code == 1 && broken.out.find("u=") != std::string::npos, "check-axioms --engine lan-from-ran");
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto fam = default_shape_family();
  for (auto r : {bimorphism_report(KanEngine<FinSetBase>{FinSetBase()}, fam),
                 bimorphism_report(KanEngine<MatBase>{MatBase(2)}, fam)}) {
    auto* lr = find_check(r, "l o r");
    o.need(lr && lr->passed && lr->cases == 20, "l o r = id on 20 fixtures (" + r.parameters[0].second + ")");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  KanEngine<FinSetBase> f{FinSetBase()};
  KanEngine<MatBase> m{MatBase(2)};
  auto small = small_family();
  std::vector<CatPtr> kl{poset_chain(1), discrete(2)};
  for (const auto& r : {coend_report(f, small), coend_report(m, small)}) {
    o.need(r, "coend");
    auto* pw = find_check(r, "pointwise");
    o.need(pw && pw->cases == 100, "100 pointwise samples");
  }
  auto ef = end_report(f, default_shape_family());
  o.need(ef, "end");
  for (const auto& r : {fubini_report(f, kl), fubini_report(m, kl)}) {
    o.need(r, "fubini");
    o.need(r.checks.size() == 4, "four (K, L) pairs");
    for (const auto& c : r.checks) o.need(c.cases == 100, c.name + " has 100 samples");
  }
  auto e = terminal_category(), one = poset_chain(1);
  auto h = hom_diagram(one);
  o.need(coend(f, e, one, e, h).value().at(0).size == 2, "coend of hom over [1] is a 2-element set");
  o.need(end(f, e, one, e, h).value().at(0).size == 1, "end of hom over [1] is a 1-element set");
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto r = adjunction_report(KanEngine<FinSetBase>{FinSetBase()});
  o.need(r, "adjunction");
  auto* adj = find_check(r, "hom(X * Y, Z)");
  o.need(adj && adj->cases >= 50, "50 adjunction samples");
  auto g = evaluation_gap_witness(evaluation_gap_preset().x, evaluation_gap_preset().z, evaluation_gap_preset().k);
  o.need(g.nat == 2 && g.hom == 1 && !g.injective && !g.iso(), "evaluation gap: " + g.describe());
  o.need(eval_gap_report(evaluation_gap_preset(), true), "eval-gap report");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto fam = default_shape_family();
  for (const auto& r : {dist_report(KanEngine<FinSetBase>{FinSetBase()}, fam),
                        dist_report(KanEngine<MatBase>{MatBase(2)}, fam)}) {
    o.need(r, "dist " + r.parameters[0].second);
    o.need(r.checks.size() == 5, "five distributor checks");
    for (const auto& [prefix, n] : std::vector<std::pair<std::string, std::size_t>>{
             {"associator", 50}, {"trace cyclicity", 50}, {"trace monoidality", 50}, {"unit laws", 30}}) {
      auto* c = find_check(r, prefix);
      o.need(c && c->cases >= n, prefix + " has " + std::to_string(n) + " samples");
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto fam = default_shape_family();
  for (const auto& r : {weighted_report(KanEngine<FinSetBase>{FinSetBase()}, fam),
                        weighted_report(KanEngine<MatBase>{MatBase(2)}, fam)}) {
    o.need(r, "weighted " + r.parameters[0].second);
    auto* t = find_check(r, "unit weight");
    auto* y = find_check(r, "representable weight");
    o.need(t && t->cases == 30, "30 terminal-weight samples");
    o.need(y && y->cases == 20, "20 representable-weight samples");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto small = small_family();
  o.need(additivity_report(KanEngine<MatBase>{MatBase(2)}, small), "additive mat2");
  o.need(additivity_report(KanEngine<MatBase>{MatBase(3)}, small), "additive mat3");
  auto fs = additivity_report(KanEngine<FinSetBase>{FinSetBase()}, small);
  o.need(!fs.passed() && !fs.checks.empty() && fs.checks[0].name == "pointed" && !fs.checks[0].passed,
         "finite sets fail at pointedness");
  for (Scalar p : {2u, 3u}) {
    MatBase b(p);
    KanEngine<MatBase> eng{b};
    auto c = center(b);
    o.need(c.ring == "F_" + std::to_string(p) && c.elements.size() == p, "center is F_" + std::to_string(p));
    o.need(center_report(eng, small), "center certificates over F_" + std::to_string(p));
    auto ls = sigma_from_unit(b);
    auto laws = make_check("laws"), inj = make_check("injective");
    certify_sigma(b, ls, 3, laws, inj);
    o.need(laws.passed && inj.passed && laws.cases > 0, "sigma is an injective ring map over F_" + std::to_string(p));
    auto lin = linearity_report(eng, small);
    o.need(lin, "linearity over F_" + std::to_string(p));
    o.need(!lin.checks.empty() && lin.checks[0].cases == 50, "50 linearity triples");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const fs::path dir = DLAB_FIXTURES;
  ::setenv("DERIVATOR_LAB_SHAPEDIR", (dir / "shapes").c_str(), 1);

  std::ifstream manifest(dir / "commands.txt");
  std::string line;
  std::size_t commands = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    int expect = std::stoi(line.substr(0, bar));
    auto args = replace_all(line.substr(bar + 1), "{}", dir.string());
    auto a = run_cli(args), b = run_cli(args);
    ++commands;
    o.need(a.code == expect, "exit " + std::to_string(a.code) + " (expected " + std::to_string(expect) + "):" + args);
    o.need(a.code == b.code && a.out == b.out, "output differs between runs:" + args);
  }
  o.need(commands >= 40, "fixture manifest too small");

  for (const auto& ent : fs::recursive_directory_iterator(dir)) {
    auto path = ent.path();
    auto ext = path.extension().string();
    if (ext != ".fincat" && ext != ".diag") continue;
    bool bad = path.filename().string().rfind("bad_", 0) == 0;
    auto text = read_file(path.string());
    auto r = run_cli("format " + path.string());
    if (bad) {
      o.need(r.code == 3, "malformed fixture accepted: " + path.filename().string());
      continue;
    }
    o.need(r.code == 0 && r.out == text, "format does not reproduce " + path.filename().string());
    // parse ∘ serialize in process
    if (ext == ".fincat") {
      auto c = parse_category(text);
      o.need(same_category(parse_category(serialize(*c)), c), "category round trip: " + path.filename().string());
    } else {
      auto h = read_diag_header(text);
      bool same = false;
      if (h.base == "finset") {
        FinSetBase b;
        auto x = parse_diagram(text, b);
        same = parse_diagram(serialize(b, x), b) == x;
      } else {
        MatBase b(h.p);
        auto x = parse_diagram(text, b);
        same = parse_diagram(serialize(b, x), b) == x;
      }
      o.need(same, "diagram round trip: " + path.filename().string());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "derivator axioms Der1-Der4 (finset, Mat(F2)); corrupted engine caught", 60, criterion1},
      {2, "bimorphism correspondence l o r = id on 20 fixtures", 10, criterion2},
      {3, "coend calculus: pointwise, Fubini, hom oracles", 120, criterion3},
      {4, "two-variable adjunction and the evaluation gap", 60, criterion4},
      {5, "distributors: associator, trace, unit laws, hom o hom", 300, criterion5},
      {6, "weighted (co)limits: unit and representable weights", 60, criterion6},
      {7, "additivity, center and linearity", 120, criterion7},
      {8, "determinism, CLI round trip and exit codes", 10, criterion8},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && secs < c.limit;
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, c.limit);
    for (std::size_t i = 0; i < o.problems.size() && i < 5; ++i) std::printf("       %s\n", o.problems[i].c_str());
    if (o.ok && secs >= c.limit) std::printf("       over the time limit\n");
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
