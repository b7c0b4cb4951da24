// derivator-lab: command-line driver for the checkers.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 unknown command,
// 3 bad input (flags, files, shapes).

#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "dlab/additive.hpp"
#include "dlab/dist.hpp"
#include "dlab/dsl.hpp"

using namespace dlab;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string shapes;
  unsigned p = 2;
  std::string format = "text";
  std::string base;
  std::size_t samples = 0;  // 0 keeps each command's defaults
};

std::vector<CatPtr> parse_shapes(const std::string& list, std::vector<CatPtr> fallback) {
  if (list.empty()) return fallback;
  std::vector<CatPtr> out;
  std::size_t b = 0;
  while (b <= list.size()) {
    auto e = list.find(',', b);
    auto name = list.substr(b, e == std::string::npos ? std::string::npos : e - b);
    try {
      out.push_back(resolve_shape_expr(name));
    } catch (const CategoryError& ex) {
      throw InputError(ex.what());
    }
    if (e == std::string::npos) break;
    b = e + 1;
  }
  return out;
}

std::vector<CatPtr> small_family() {
  std::vector<CatPtr> out;
  for (const auto& s : default_shape_family())
    if (s->num_objects() <= 3) out.push_back(s);
  return out;
}

std::string base_or(const Globals& g, const std::string& fallback) { return g.base.empty() ? fallback : g.base; }

void require_base(const std::string& base, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (base == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InputError("base '" + base + "' not supported here (expected one of: " + list + ")");
}

MatBase mat_base(unsigned p) {
  if (!is_prime(p) || p > 65521) throw InputError("--p " + std::to_string(p) + " is not a supported prime");
  return MatBase(static_cast<Scalar>(p));
}

/// Calls f with a KanEngine over finite sets or over Mat(F_p).
template <typename F>
Report with_engine(const std::string& base, const Globals& g, F&& f, KanWiring wiring = KanWiring::Correct) {
  require_base(base, {"finset", "mat"});
  if (base == "finset") return f(KanEngine<FinSetBase>{FinSetBase(), wiring});
  return f(KanEngine<MatBase>{mat_base(g.p), wiring});
}

// -- file inputs ------------------------------------------------------------

struct LoadedDiag {
  DiagHeader header;
  std::string text;
};

LoadedDiag load_diag(const std::string& path) {
  LoadedDiag d;
  try {
    d.text = read_file(path);
    d.header = read_diag_header(d.text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return d;
}

template <typename B>
Diagram<B> diagram_from(const LoadedDiag& d, const B& b, const std::string& path) {
  try {
    return parse_diagram(d.text, b);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Runs f on the diagram in `path`, over the base named in its header.
template <typename F>
Report with_file(const std::string& path, const Globals& g, F&& f) {
  auto d = load_diag(path);
  if (!g.base.empty() && g.base != d.header.base)
    throw InputError(path + ": file is over '" + d.header.base + "' but --base is '" + g.base + "'");
  if (d.header.base == "finset") {
    KanEngine<FinSetBase> eng{FinSetBase()};
    return f(eng, diagram_from(d, eng.base(), path), d.header);
  }
  KanEngine<MatBase> eng{MatBase(d.header.p)};
  return f(eng, diagram_from(d, eng.base(), path), d.header);
}

std::vector<CatPtr> header_factors(const DiagHeader& h, std::size_t n, const std::string& what) {
  const auto& fs = h.shape->factors();
  if (fs.size() != n) throw InputError("expected a " + what + " header, got '" + h.shape_expr + "'");
  return fs;
}

// -- commands ----------------------------------------------------------------

Report cmd_axioms(const Globals& g, const std::string& engine) {
  AxiomOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.der1_samples = opt.der2_samples = g.samples;
  if (engine != "correct" && engine != "lan-from-ran")
    throw InputError("--engine must be 'correct' or 'lan-from-ran'");
  auto shapes = parse_shapes(g.shapes, default_shape_family());
  return with_engine(
      base_or(g, "finset"), g, [&](const auto& eng) { return axioms_report(eng, shapes, opt); },
      engine == "correct" ? KanWiring::Correct : KanWiring::LanFromRan);
}

Report cmd_kan(const Globals& g, bool left, const std::string& file, const std::string& to, const std::string& spec) {
  CatPtr K;
  try {
    K = resolve_shape_expr(to);
  } catch (const CategoryError& e) {
    throw InputError(e.what());
  }
  return with_file(file, g, [&](const auto& eng, const auto& x, const DiagHeader&) {
    Functor u;
    try {
      u = parse_functor(spec, x.shape, K);
    } catch (const CategoryError& e) {
      throw InputError(e.what());
    }
    auto rep = kan_report(eng, u, x, left);
    auto v = left ? eng.lan(u, x).value : eng.ran(u, x).value;
    rep.outputs.emplace_back("value", serialize(eng.base(), v));
    return rep;
  });
}

Report cmd_coend(const Globals& g, bool co, const std::string& file) {
  CoendOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.pointwise_samples = opt.end_samples = g.samples;
  if (file.empty()) {
    return with_engine(base_or(g, "finset"), g, [&](const auto& eng) {
      return co ? coend_report(eng, parse_shapes(g.shapes, small_family()), opt)
                : end_report(eng, parse_shapes(g.shapes, default_shape_family()), opt);
    });
  }
  return with_file(file, g, [&](const auto& eng, const auto& x, const DiagHeader& h) {
    auto fs = header_factors(h, 4, "J x K^op x K x L");
    const auto &J = fs[0], &K = fs[2], &L = fs[3];
    const auto& b = eng.base();
    Report rep;
    rep.command = co ? "coend" : "end";
    rep.parameters.emplace_back("base", b.name());
    rep.parameters.emplace_back("input", file);
    auto wf = make_check("well-formed", "the value is a diagram over J x L");
    if (co) {
      auto c = coend(eng, J, K, L, x);
      wf.expect(validate(b, c.value()).empty(), "value is not a diagram");
      auto pw = make_check("pointwise", "coend of X(j,-,-,l) -> (coend of X)(j,l) is invertible");
      auto o = pointwise_coend_failure(eng, c);
      pw.expect_with(o == npos, [&] { return "at " + c.shape.jl->object_id(o); });
      rep.checks.push_back(std::move(wf));
      rep.checks.push_back(std::move(pw));
      rep.outputs.emplace_back("value", serialize(b, c.value()));
    } else {
      auto en = end(eng, J, K, L, x);
      wf.expect(validate(b, en.value()).empty() && en.ran.counit.has_value(), "value is not a diagram");
      rep.checks.push_back(std::move(wf));
      rep.outputs.emplace_back("value", serialize(b, en.value()));
    }
    return rep;
  });
}

Report cmd_fubini(const Globals& g) {
  CoendOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.fubini_samples = g.samples;
  auto shapes = parse_shapes(g.shapes, {poset_chain(1), discrete(2)});
  return with_engine(base_or(g, "finset"), g, [&](const auto& eng) { return fubini_report(eng, shapes, opt); });
}

MonoidalOptions monoidal_options(const Globals& g) {
  MonoidalOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.lr_fixtures = opt.adjunction_samples = opt.structure_samples = g.samples;
  return opt;
}

Report cmd_eval_gap(const std::string& preset, const std::vector<std::string>& files, const std::string& at) {
  if (!preset.empty()) {
    if (preset != "paper") throw InputError("unknown preset '" + preset + "' (known: paper)");
    if (!files.empty()) throw InputError("--preset takes no diagram files");
    return eval_gap_report(evaluation_gap_preset(), true);
  }
  if (files.size() != 2) throw InputError("eval-gap needs --preset paper or two .diag files X Z");
  FinSetBase b;
  auto dx = load_diag(files[0]), dz = load_diag(files[1]);
  auto x = diagram_from(dx, b, files[0]), z = diagram_from(dz, b, files[1]);
  if (!same_category(x.shape, z.shape)) throw InputError("X and Z have different shapes");
  std::size_t k = npos;
  try {
    k = x.shape->find_object(at);
  } catch (const std::exception&) {
  }
  if (k == npos || k >= x.shape->num_objects()) throw InputError("--at: no object '" + at + "' in " + x.shape->name());
  return eval_gap_report({x, z, k}, false);
}

template <typename B>
Distributor<B> load_distributor(const LoadedDiag& d, const B& b, const std::string& path) {
  auto fs = header_factors(d.header, 2, "J x K^op");
  auto x = diagram_from(d, b, path);
  return make_distributor(fs[0], opposite(fs[1]), std::move(x));
}

Report cmd_dist(const Globals& g, const std::string& what, const std::vector<std::string>& files) {
  DistOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.associator_samples = opt.trace_samples = opt.unit_samples = g.samples;
  if (what != "assoc") opt.associator_samples = 0;
  if (what != "trace") opt.trace_samples = 0;
  if (what != "unit-laws") opt.unit_samples = 0;
  opt.hom_hom = what == "compose";
  if (files.empty()) {
    auto shapes = parse_shapes(g.shapes, default_shape_family());
    return with_engine(base_or(g, "finset"), g, [&](const auto& eng) {
      auto r = dist_report(eng, shapes, opt);
      r.command = "dist " + what;
      return r;
    });
  }
  std::size_t want = what == "compose" ? 2 : what == "trace" ? 1 : 0;
  if (files.size() != want)
    throw InputError("dist " + what + " takes " + std::to_string(want) + " distributor file(s), got " +
                     std::to_string(files.size()));
  std::vector<LoadedDiag> ds;
  for (const auto& f : files) ds.push_back(load_diag(f));
  for (const auto& d : ds)
    if (d.header.base != ds[0].header.base || d.header.p != ds[0].header.p)
      throw InputError("distributor files are over different bases");
  auto go = [&](const auto& eng) {
    const auto& b = eng.base();
    Report rep;
    rep.command = "dist " + what;
    rep.parameters.emplace_back("base", b.name());
    for (const auto& f : files) rep.parameters.emplace_back("input", f);
    auto wf = make_check("well-formed", what == "compose" ? "the composite is a distributor" : "the trace is defined");
    auto x = load_distributor(ds[0], b, files[0]);
    if (what == "compose") {
      auto y = load_distributor(ds[1], b, files[1]);
      if (!same_category(x.target, y.source)) throw InputError("distributors do not compose");
      auto c = compose_dist(eng, x, y);
      wf.expect(validate(b, c.value.payload).empty(), "composite is not a diagram");
      rep.outputs.emplace_back("value", serialize(b, c.value.payload));
    } else {
      if (!same_category(x.source, x.target)) throw InputError("trace needs an endo-distributor J x J^op");
      auto t = trace(eng, x);
      wf.expect(true, "");
      rep.outputs.emplace_back("value", b.describe(t.value));
    }
    rep.checks.push_back(std::move(wf));
    return rep;
  };
  if (ds[0].header.base == "finset") return go(KanEngine<FinSetBase>{FinSetBase()});
  return go(KanEngine<MatBase>{MatBase(ds[0].header.p)});
}

Report cmd_weighted(const Globals& g, const std::string& side) {
  DistOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.weighted_samples = opt.representable_samples = g.samples;
  opt.colimits = side == "colim";
  opt.limits = side == "lim";
  auto shapes = parse_shapes(g.shapes, default_shape_family());
  return with_engine(base_or(g, "finset"), g, [&](const auto& eng) {
    auto r = weighted_report(eng, shapes, opt);
    r.command = "weighted " + side;
    return r;
  });
}

AdditiveOptions additive_options(const Globals& g) {
  AdditiveOptions opt;
  opt.seed = g.seed;
  if (g.samples) opt.functor_samples = opt.linearity_samples = opt.samples_per_shape = g.samples;
  return opt;
}

using Mat2x3 = ProductBase<MatBase, MatBase>;

Report cmd_additive(const Globals& g) {
  auto shapes = parse_shapes(g.shapes, small_family());
  auto opt = additive_options(g);
  auto base = base_or(g, "mat");
  require_base(base, {"finset", "mat", "zero", "product"});
  if (base == "zero") return additivity_report(KanEngine<ZeroBase>{ZeroBase()}, shapes, opt);
  if (base == "product")
    return additivity_report(KanEngine<Mat2x3>{Mat2x3(MatBase(2), MatBase(3))}, shapes, opt);
  return with_engine(base, g, [&](const auto& eng) { return additivity_report(eng, shapes, opt); });
}

Report cmd_center(const Globals& g) {
  auto shapes = parse_shapes(g.shapes, small_family());
  auto opt = additive_options(g);
  return with_engine(base_or(g, "mat"), g, [&](const auto& eng) { return center_report(eng, shapes, opt); });
}

Report cmd_linearity(const Globals& g) {
  auto shapes = parse_shapes(g.shapes, small_family());
  auto opt = additive_options(g);
  auto base = base_or(g, "mat");
  require_base(base, {"finset", "mat", "product"});
  if (base == "finset") {
    Report rep;
    rep.command = "linearity";
    rep.seed = g.seed;
    rep.parameters.emplace_back("base", "finset");
    auto c = make_check("base is additive", "End(S) acts linearly only on an additive base");
    c.expect(false, is_additive_category(FinSetBase()).witness);
    rep.checks.push_back(std::move(c));
    return rep;
  }
  if (base == "product") return linearity_report(KanEngine<Mat2x3>{Mat2x3(MatBase(2), MatBase(3))}, shapes, opt);
  return linearity_report(KanEngine<MatBase>{mat_base(g.p)}, shapes, opt);
}

std::string canonical_text(const std::string& path) {
  auto text = read_file(path);
  if (path.size() >= 7 && path.compare(path.size() - 7, 7, ".fincat") == 0) return serialize(*parse_category(text));
  auto h = read_diag_header(text);
  if (h.base == "finset") return serialize(FinSetBase(), parse_diagram(text, FinSetBase()));
  MatBase b(h.p);
  return serialize(b, parse_diagram(text, b));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derivator-lab: checks for represented derivators of finite categories"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized checks")->default_val(0);
  app.add_option("--shapes", g.shapes, "comma-separated shape names (built-ins or files in $DERIVATOR_LAB_SHAPEDIR)");
  app.add_option("--p", g.p, "prime for Mat(F_p)")->default_val(2);
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--base", g.base, "finset, mat, zero or product (mat2 x mat3), where supported");
  app.add_option("--samples", g.samples, "override the number of random samples per check");

  std::function<Report()> action;
  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string engine = "correct";
  auto* ax = sub("check-axioms", "Der1-Der4 over the shape family");
  ax->add_option("--engine", engine, "correct or lan-from-ran (a deliberately broken engine)");
  ax->callback([&] { action = [&] { return cmd_axioms(g, engine); }; });

  std::string kan_file, kan_to, kan_functor;
  auto* kan = sub("kan", "left or right Kan extension of a diagram file");
  kan->require_subcommand(1);
  for (const char* side : {"lan", "ran"}) {
    auto* k = kan->add_subcommand(side, std::string(side) + " along a functor");
    k->fallthrough();
    k->add_option("diagram", kan_file, ".diag file")->required();
    k->add_option("--to", kan_to, "target shape")->required();
    k->add_option("--functor", kan_functor, "object (and morphism) images, e.g. \"0->*, 1->*\"")->required();
    bool left = std::string(side) == "lan";
    k->callback([&, left] { action = [&, left] { return cmd_kan(g, left, kan_file, kan_to, kan_functor); }; });
  }

  std::string co_file;
  for (const char* name : {"coend", "end"}) {
    auto* c = sub(name, name == std::string("coend") ? "coends: oracles and pointwise property, or a given diagram"
                                                     : "ends: oracles and products, or a given diagram");
    c->add_option("diagram", co_file, ".diag over J x K^op x K x L");
    bool co = std::string(name) == "coend";
    c->callback([&, co] { action = [&, co] { return cmd_coend(g, co, co_file); }; });
  }

  sub("fubini", "iterated coends against the coend over K x L")->callback([&] {
    action = [&] { return cmd_fubini(g); };
  });
  sub("bimorphism-roundtrip", "l/r correspondence of bimorphisms and the external tensor")->callback([&] {
    action = [&] {
      auto shapes = parse_shapes(g.shapes, default_shape_family());
      return with_engine(base_or(g, "finset"), g,
                         [&](const auto& eng) { return bimorphism_report(eng, shapes, monoidal_options(g)); });
    };
  });
  sub("adjunction2", "two-variable adjunction between tensor and Hom_l, Hom_r")->callback([&] {
    action = [&] {
      return with_engine(base_or(g, "finset"), g,
                         [&](const auto& eng) { return adjunction_report(eng, monoidal_options(g)); });
    };
  });

  std::string preset, at;
  std::vector<std::string> gap_files;
  auto* gap = sub("eval-gap", "nat(X, Z) -> hom(X(k), Z(k)) for finite-set diagrams");
  gap->add_option("--preset", preset, "named example (paper)");
  gap->add_option("diagrams", gap_files, "X.diag Z.diag");
  gap->add_option("--at", at, "object k");
  gap->callback([&] { action = [&] { return cmd_eval_gap(preset, gap_files, at); }; });

  std::vector<std::string> dist_files;
  auto* dist = sub("dist", "distributors");
  dist->require_subcommand(1);
  for (const char* what : {"compose", "trace", "unit-laws", "assoc"}) {
    auto* d = dist->add_subcommand(what, std::string("distributor ") + what);
    d->fallthrough();
    if (std::string(what) == "compose" || std::string(what) == "trace")
      d->add_option("files", dist_files, "distributor .diag files (header J x K^op)");
    std::string w = what;
    d->callback([&, w] { action = [&, w] { return cmd_dist(g, w, dist_files); }; });
  }

  auto* weighted = sub("weighted", "weighted colimits and limits");
  weighted->require_subcommand(1);
  for (const char* side : {"colim", "lim"}) {
    auto* w = weighted->add_subcommand(side, std::string("weighted ") + side);
    w->fallthrough();
    std::string s = side;
    w->callback([&, s] { action = [&, s] { return cmd_weighted(g, s); }; });
  }

  sub("additive", "zero objects, biproducts and their preservation")->callback([&] {
    action = [&] { return cmd_additive(g); };
  });
  sub("center", "the center and its certificates")->callback([&] { action = [&] { return cmd_center(g); }; });
  sub("linearity", "End(S)-linearity of restriction and Kan extensions")->callback([&] {
    action = [&] { return cmd_linearity(g); };
  });

  std::string fmt_file;
  bool fmt_only = false;
  auto* fmt = sub("format", "parse a .fincat or .diag file and print it in canonical form");
  fmt->add_option("file", fmt_file, "input file")->required();
  fmt->callback([&] { fmt_only = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    bool usage = dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr ||
                 (dynamic_cast<const CLI::RequiredError*>(&e) != nullptr &&
                  std::string(e.what()).find("subcommand") != std::string::npos);
    std::string unknown;
    for (int i = 1; i < argc; ++i) {
      std::string a = argv[i];
      if (a.rfind("--", 0) == 0) {
        if (a.find('=') == std::string::npos) ++i;  // every global flag takes a value
        continue;
      }
      if (!app.get_subcommand_no_throw(a)) unknown = a;
      break;
    }
    if (usage && !unknown.empty())
      std::cerr << "error: unknown command '" << unknown << "'\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    if (usage) {
      std::cerr << app.help();
      return 2;
    }
    return 3;
  }

  if (fmt_only) {
    try {
      std::cout << canonical_text(fmt_file);
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << fmt_file << ": " << e.what() << "\n";
      return 3;
    }
  }
  try {
    auto rep = action();
    rep.seed = g.seed;
    if (g.format == "json")
      std::cout << rep.to_json().dump(2) << "\n";
    else
      std::cout << rep.to_text();
    return rep.passed() ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
