#include <ostream>

#include "CLI11.hpp"
#include "taudiff_cli/cli.hpp"

namespace taudiff::cli {

namespace {

struct Flags {
  std::string file;
  std::string poly;
  std::string suite;
  std::string morphism;
  std::string base, v, w;
  unsigned degree_bound = 3;
  std::size_t max_pairs = 10000;
  std::size_t samples = 20;
  std::uint64_t seed = 20240501;
  bool canonical = false;
  std::string order = "degrevlex";
};

ProblemFile load(const Flags& f) {
  ParseOptions o;
  o.order = f.order == "lex" ? MonomialOrder::lex : MonomialOrder::degrevlex;
  o.limits.max_pairs = f.max_pairs;
  return load_problem(f.file, o);
}

std::string join_polys(const std::vector<Poly>& ps) {
  if (ps.empty()) return "(none)";
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ", ") + to_string(p);
  return out;
}

int cmd_tau(const Flags& f, std::ostream& out) {
  const ProblemFile p = load(f);
  TauForm w = tau_of(parse_poly(f.poly, p.ring()));
  if (f.canonical) w = w.reduced(p.algebra);
  out << to_string(w) << "\n";
  return kOk;
}

int cmd_rank(const Flags& f, std::ostream& out) {
  const ProblemFile p = load(f);
  const std::size_t tau = module_rank(omega_tau_presentation(p.algebra));
  const std::size_t rel = module_rank(omega_kahler_presentation(p.algebra));
  out << "omega_tau: " << tau << ", omega_rel: " << rel << "\n";
  return kOk;
}

int cmd_presentation(const Flags& f, std::ostream& out) {
  const ProblemFile p = load(f);
  out << "tau: " << print_presentation(omega_tau_presentation(p.algebra), f.canonical) << "\n";
  out << "kahler: " << print_presentation(omega_kahler_presentation(p.algebra), f.canonical) << "\n";
  return kOk;
}

int cmd_lift(const Flags& f, std::ostream& out) {
  const ProblemFile p = load(f);
  if (p.morphisms.empty()) {
    out << "no morphisms declared\n";
    return kOk;
  }
  bool found = false;
  for (const auto& decl : p.morphisms) {
    if (!f.morphism.empty() && decl.name != f.morphism) continue;
    found = true;
    const ConeLift lift = lift_morphism(p.morphism(decl));
    out << "lift " << decl.name << ":";
    const auto& names = lift.target.cone_ctx->vars();
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << (i == 0 ? " " : ", ") << names[i] << " -> " << to_string(lift.images[i]);
    }
    out << "\n";
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "no morphism named '" + f.morphism + "'");
  return kOk;
}

int cmd_act(const Flags& f, std::ostream& out) {
  const ProblemFile p = load(f);
  const auto base = parse_point(f.base, p.field);
  const FiberPoint v{base, parse_point(f.v, p.field)};
  const FiberPoint w{base, parse_point(f.w, p.field)};
  const ConeAlgebra cone = prolongation_cone(p.algebra);
  const FiberPoint r = torsor_act(slice_cone(cone, Slice::tangent), slice_cone(cone, Slice::prolongation), v, w);
  out << "base: " << format_point(*p.field, r.base_point) << "; fiber: " << format_point(*p.field, r.fiber) << "\n";
  return kOk;
}

int cmd_check(const Flags& f, std::ostream& out) {
  const ProblemFile p = load(f);
  const SuiteOptions o{f.degree_bound, f.samples, f.seed};
  std::vector<std::string> names;
  if (f.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(f.suite);
  }
  bool failed = false;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, p, o);
    out << format(r);
    failed = failed || r.status == Status::fail;
  }
  return failed ? kVerificationFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Modules of tau-differentials, prolongations and their checks", "taudiff"};
  app.require_subcommand(1);
  app.add_option("--degree-bound", f.degree_bound, "degree bound for the split section search");
  app.add_option("--max-pairs", f.max_pairs, "bound on Groebner S-pairs");
  app.add_option("--samples", f.samples, "random samples per property check");
  app.add_option("--seed", f.seed, "seed for random samples");
  app.add_flag("--canonical", f.canonical, "canonical printing");
  app.add_option("--order", f.order, "monomial order")->check(CLI::IsMember({"lex", "degrevlex"}));

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", f.file, "problem file")->required();
    return c;
  };
  CLI::App* tau = file_cmd("tau", "print the tau-differential of a polynomial");
  tau->add_option("--poly", f.poly, "polynomial in the ring of the file")->required();
  CLI::App* cone = file_cmd("cone", "print the prolongation cone");
  CLI::App* prolong = file_cmd("prolong", "print the prolongation (tau_e = 1)");
  CLI::App* tangent = file_cmd("tangent", "print the tangent variety (tau_e = 0)");
  CLI::App* rank = file_cmd("rank", "generic ranks of the tau and Kahler differentials");
  CLI::App* pres = file_cmd("presentation", "print the module presentations");
  CLI::App* gb = file_cmd("gb", "print the reduced Groebner basis");
  CLI::App* lift = file_cmd("lift", "print lifts of the declared morphisms");
  lift->add_option("--name", f.morphism, "only this morphism");
  CLI::App* act = file_cmd("act", "act by a tangent vector on a prolongation point");
  act->add_option("--base", f.base, "base point, comma separated")->required();
  act->add_option("--v", f.v, "tangent fiber coordinates")->required();
  act->add_option("--w", f.w, "prolongation fiber coordinates")->required();
  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("suite", f.suite, "suite name or all")->required()->check(CLI::IsMember(suites));
  check->add_option("file", f.file, "problem file")->required();

  std::vector<std::string> argv_store{"taudiff"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (tau->parsed()) return cmd_tau(f, out);
    if (rank->parsed()) return cmd_rank(f, out);
    if (pres->parsed()) return cmd_presentation(f, out);
    if (lift->parsed()) return cmd_lift(f, out);
    if (act->parsed()) return cmd_act(f, out);
    if (check->parsed()) return cmd_check(f, out);
    const ProblemFile p = load(f);
    if (cone->parsed()) out << print_cone(prolongation_cone(p.algebra), f.canonical) << "\n";
    if (prolong->parsed()) out << print_slice(prolongation(p.algebra), f.canonical) << "\n";
    if (tangent->parsed()) out << print_slice(tangent_variety(p.algebra), f.canonical) << "\n";
    if (gb->parsed()) out << "gb: " << join_polys(p.algebra.groebner_basis()) << "\n";
    return kOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit:
        return kResourceLimit;
      case ErrorKind::NotADomainSuspected:
      case ErrorKind::NotAMorphism:
      case ErrorKind::NotOnVariety:
      case ErrorKind::BasePointMismatch:
      case ErrorKind::NotAnAlgebraMap:
        return kVerificationFailed;
      default:
        return kUsage;
    }
  }
}

}  // namespace taudiff::cli
