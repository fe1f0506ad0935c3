#include "transit/commands.hpp"

#include "transit/error.hpp"
#include "transit/gds.hpp"
#include "transit/harness.hpp"
#include "transit/invariance.hpp"
#include "transit/morphism.hpp"
#include "transit/orbit.hpp"
#include "transit/transitivity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace transit {

namespace {

bool symbolic(const SystemDocument& doc, const CommandOptions& opt) {
  const bool sym = doc.backend == SystemDocument::Backend::Symbolic;
  if (opt.backend == "finite" && sym) throw Error(ErrorCode::FlagConflict, "--backend finite on a symbolic document");
  if (opt.backend == "symbolic" && !sym) throw Error(ErrorCode::FlagConflict, "--backend symbolic on a finite document");
  if (opt.backend != "auto" && opt.backend != "finite" && opt.backend != "symbolic") {
    throw Error(ErrorCode::FlagConflict, "--backend must be auto, finite or symbolic");
  }
  return sym;
}

void finite_only(const SystemDocument& doc, const CommandOptions& opt, const std::string& cmd) {
  if (symbolic(doc, opt)) throw Error(ErrorCode::BackendMismatch, cmd + " needs a finite document");
}

SymbolicConfig config(const CommandOptions& opt) {
  SymbolicConfig c;
  c.depth = opt.depth;
  c.horizon = opt.horizon;
  return c;
}

std::string with_k(const Decision& d) {
  std::string w = d.witness;
  if (d.k && w.find("k=") == std::string::npos) w += (w.empty() ? "" : " ") + std::string("k=") + std::to_string(*d.k);
  return w;
}

std::vector<PropertyId> properties(const CommandOptions& opt) {
  if (opt.prop.empty()) return {std::begin(kAllProperties), std::end(kAllProperties)};
  return {parse_property(opt.prop)};
}

std::vector<std::string> chosen_variants(PropertyId p, const CommandOptions& opt, bool sym) {
  if (opt.variant != "all") return {opt.variant};
  std::vector<std::string> out;
  for (const auto& v : variants(p))
    if (sym || opt.allow_imperfect || !perfect_only(p, v)) out.push_back(v);
  return out;
}

PointMap parse_pi(const std::string& text, std::size_t codomain) {
  std::vector<Point> t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      auto v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      t.push_back(static_cast<Point>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--pi entry '" + item + "' is not a point");
    }
  }
  return PointMap(std::move(t), codomain);
}

Report orbit_command(const SystemDocument& doc, const CommandOptions& opt) {
  Report r("orbit");
  if (symbolic(doc, opt)) {
    if (opt.word.empty()) throw Error(ErrorCode::FlagConflict, "symbolic orbit needs --word");
    auto sys = doc.shift_ndds();
    auto x = parse_block(opt.word);
    r.add("orbit", "x=" + opt.word, Verdict::yes_up_to(opt.horizon),
          partial_orbit(sys, x, opt.horizon, opt.depth).to_string(), "depth=" + std::to_string(opt.depth));
    r.add("negative-orbit", "x=" + opt.word, Verdict::yes_up_to(opt.horizon),
          partial_negative_orbit(sys, x, opt.horizon).to_string());
    return r;
  }
  auto sys = doc.ndds();
  std::vector<Point> pts;
  if (opt.point) {
    sys.space().check_point(*opt.point);
    pts.push_back(*opt.point);
  } else {
    for (Point x = 0; x < sys.size(); ++x) pts.push_back(x);
  }
  const std::vector<std::string> kinds = {"orbit", "negative", "extended", "extended-negative", "omega",
                                          "extended-omega", "recurrent"};
  if (!opt.kind.empty() && std::find(kinds.begin(), kinds.end(), opt.kind) == kinds.end()) {
    throw Error(ErrorCode::FlagConflict, "unknown orbit kind '" + opt.kind + "'");
  }
  for (auto x : pts) {
    const std::string v = "x=" + std::to_string(x);
    auto want = [&](const char* k) { return opt.kind.empty() || opt.kind == k; };
    if (want("orbit")) r.add("orbit", v, Verdict::yes(), orbit(sys, x).points.to_string());
    if (want("negative")) r.add("negative-orbit", v, Verdict::yes(), negative_orbit(sys, x).points.to_string());
    if (want("extended")) r.add("extended-orbit", v, Verdict::yes(), extended_orbit(sys, x).points.to_string());
    if (want("extended-negative"))
      r.add("extended-negative-orbit", v, Verdict::yes(), extended_negative_orbit(sys, x).points.to_string());
    if (want("omega")) r.add("omega", v, Verdict::yes(), omega_limit(sys, x).points.to_string());
    if (want("extended-omega")) r.add("extended-omega", v, Verdict::yes(), extended_omega_limit(sys, x).points.to_string());
    if (want("recurrent")) r.add("recurrent", v, is_recurrent(sys, x));
  }
  return r;
}

Report invariance_command(const SystemDocument& doc, const CommandOptions& opt) {
  if (opt.set.empty()) throw Error(ErrorCode::FlagConflict, "invariance needs --set LABEL");
  Report r("invariance");
  std::vector<InvarianceKind> kinds;
  if (opt.kind.empty()) kinds.assign(std::begin(kAllInvariance), std::end(kAllInvariance));
  else kinds.push_back(parse_invariance(opt.kind));
  if (symbolic(doc, opt)) {
    auto sys = doc.shift_ndds();
    auto a = doc.cylinder_set(opt.set);
    for (auto k : kinds) r.add(std::string(to_string(k)), opt.set, check_invariance(sys, a, k, opt.horizon), a.to_string());
    return r;
  }
  auto sys = doc.ndds();
  auto a = doc.point_set(opt.set);
  for (auto k : kinds) r.add(std::string(to_string(k)), opt.set, check_invariance(sys, a, k), a.to_string());
  return r;
}

Report check_command(const SystemDocument& doc, const CommandOptions& opt) {
  Report r("check");
  const bool sym = symbolic(doc, opt);
  DecideOptions dopt{opt.allow_imperfect};
  for (auto p : properties(opt)) {
    for (const auto& v : chosen_variants(p, opt, sym)) {
      Decision d = sym ? decide(doc.shift_ndds(), p, v, config(opt)) : decide(doc.ndds(), p, v, dopt);
      r.add(std::string(to_string(p)), v, d.verdict, with_k(d));
    }
  }
  return r;
}

Report equiv_command(const SystemDocument& doc, const CommandOptions& opt) {
  Report r("equiv-suite");
  const bool sym = symbolic(doc, opt);
  for (auto p : properties(opt)) {
    if (sym) r.append(equivalence_suite(doc.shift_ndds(), p, config(opt)));
    else r.append(equivalence_suite(doc.ndds(), p));
  }
  if (!sym && opt.prop.empty()) {
    auto sys = doc.ndds();
    if (sys.all_surjective()) r.append(vst_open_map_suite(sys));
  }
  return r;
}

Report gds_command(const SystemDocument& doc, const CommandOptions& opt) {
  finite_only(doc, opt, "gds");
  auto sys = doc.ndds();
  if (opt.family_mode != "family" && opt.family_mode != "iterate") {
    throw Error(ErrorCode::FlagConflict, "--family-mode must be family or iterate");
  }
  auto f = opt.family_mode == "iterate" ? GdsFamily::iterate_family(sys)
                                        : GdsFamily::explicit_family(sys.space(), sys.family());
  Report r("gds");
  GdsOptions gopt{opt.allow_degenerate};
  std::vector<GdsProperty> props;
  if (!opt.prop.empty()) {
    props.push_back(parse_gds_property(opt.prop));
  } else {
    for (auto p : kAllGdsProperties) {
      const bool topo = p == GdsProperty::VST || p == GdsProperty::TM || p == GdsProperty::LEO;
      if (!topo || f.kind() == GdsFamily::Kind::Iterate || opt.allow_degenerate) props.push_back(p);
    }
  }
  for (auto p : props) {
    auto d = gds_decide(f, p, gopt);
    r.add(std::string(to_string(p)), opt.family_mode, d.verdict, with_k(d));
  }
  if (opt.prop.empty()) {
    r.append(gds_theorem_suites(f));
    if (!opt.set.empty()) r.append(f_transitive_suite(f, doc.point_set(opt.set)));
  }
  return r;
}

}  // namespace

SystemDocument load_document(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::ParseError, "no document given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Report run_command(const std::string& command, const SystemDocument& doc, const CommandOptions& opt) {
  Report r;
  if (command == "orbit") {
    r = orbit_command(doc, opt);
  } else if (command == "invariance") {
    r = invariance_command(doc, opt);
  } else if (command == "check") {
    r = check_command(doc, opt);
  } else if (command == "equiv-suite") {
    r = equiv_command(doc, opt);
  } else if (command == "lattice") {
    finite_only(doc, opt, command);
    auto sys = doc.ndds();
    r = implication_lattice_check(sys);
    r.append(corollary_checks(sys));
  } else if (command == "morphism") {
    finite_only(doc, opt, command);
    auto target = load_document(opt.target);
    finite_only(target, opt, command);
    if (opt.mode != "semi" && opt.mode != "strong") throw Error(ErrorCode::FlagConflict, "--mode must be semi or strong");
    MorphismSpec m{doc.ndds(), target.ndds(), parse_pi(opt.pi, target.ndds().size()),
                   opt.mode == "semi" ? MorphismMode::Semi : MorphismMode::Strong};
    r = Report("morphism");
    auto v = verify_morphism(m);
    r.add("morphism", std::string(to_string(m.mode)), v, "pi=" + m.pi.to_string());
    if (v.is_true()) r.append(preservation_suite(m));
  } else if (command == "product") {
    finite_only(doc, opt, command);
    auto other = load_document(opt.target);
    finite_only(other, opt, command);
    r = product_suite(doc.ndds(), other.ndds());
  } else if (command == "rearrange") {
    finite_only(doc, opt, command);
    Rearrangement rho;
    rho.kind = opt.block ? Rearrangement::Kind::Block : Rearrangement::Kind::Finite;
    rho.perm = opt.perm;
    rho.offset = opt.offset;
    r = rearrangement_suite(doc.ndds(), rho);
  } else if (command == "gds") {
    r = gds_command(doc, opt);
  } else if (command == "associate") {
    finite_only(doc, opt, command);
    auto sys = doc.ndds();
    r = association_suite(sys, sys.all_surjective());
    r.append(word_family_suite(sys));
  } else {
    throw Error(ErrorCode::UnknownCommand, "unknown command '" + command + "'");
  }
  r.set_command(command);
  return r;
}

Report run_command(const std::string& command, const CommandOptions& opt) {
  if (command == "cross-validate") {
    HarnessOptions h;
    h.seed = opt.seed;
    h.samples = opt.samples;
    h.threads = opt.threads;
    h.exhaustive = !opt.no_exhaustive;
    return cross_validate(h);
  }
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    throw Error(ErrorCode::UnknownCommand, "unknown command '" + command + "'");
  }
  return run_command(command, load_document(opt.document), opt);
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transitivity, minimality and mixing deciders for non-autonomous and generic dynamical systems"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  CommandOptions opt;
  std::string format = "table";
  app.add_option("--backend", opt.backend, "auto, finite or symbolic")->check(CLI::IsMember({"auto", "finite", "symbolic"}));
  app.add_option("--horizon", opt.horizon, "largest n examined on the symbolic backend");
  app.add_option("--depth", opt.depth, "cylinder depth of open sets on the symbolic backend");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--samples", opt.samples, "random instances");
  app.add_flag("--allow-imperfect", opt.allow_imperfect, "run conditions that need a perfect space");
  app.add_option("--format", format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--threads", opt.threads, "worker threads, 0 for all cores");

  std::string point;
  auto doc_arg = [&](CLI::App* s) { s->add_option("document", opt.document, "system document")->required(); };

  auto* orbit = app.add_subcommand("orbit", "orbits, negative and extended orbits, limit sets");
  doc_arg(orbit);
  orbit->add_option("--point", point, "point (finite)");
  orbit->add_option("--word", opt.word, "cylinder word (symbolic)");
  orbit->add_option("--kind", opt.kind, "orbit kind");

  auto* inv = app.add_subcommand("invariance", "invariance notions of a named set");
  doc_arg(inv);
  inv->add_option("--set", opt.set, "label from the SETS section")->required();
  inv->add_option("--kind", opt.kind, "invariance kind");

  auto* check = app.add_subcommand("check", "decide properties");
  doc_arg(check);
  check->add_option("--prop", opt.prop, "property, all when omitted");
  check->add_option("--variant", opt.variant, "condition id or 'all'");

  auto* equiv = app.add_subcommand("equiv-suite", "run each characterization's conditions and compare");
  doc_arg(equiv);
  equiv->add_option("--prop", opt.prop, "property, all when omitted");

  auto* lattice = app.add_subcommand("lattice", "implication diagram between properties");
  doc_arg(lattice);

  auto* morph = app.add_subcommand("morphism", "verify a semiconjugacy and its preservation list");
  doc_arg(morph);
  morph->add_option("--target", opt.target, "codomain document")->required();
  morph->add_option("--pi", opt.pi, "comma-separated table of pi")->required();
  morph->add_option("--mode", opt.mode, "semi or strong");

  auto* prod = app.add_subcommand("product", "product system suite");
  doc_arg(prod);
  prod->add_option("--with", opt.target, "second factor document")->required();

  auto* rearr = app.add_subcommand("rearrange", "rearrangement suite for commuting families");
  doc_arg(rearr);
  rearr->add_option("--perm", opt.perm, "0-based permutation")->required()->delimiter(',');
  rearr->add_flag("--block", opt.block, "repeat the permutation on consecutive blocks");
  rearr->add_option("--offset", opt.offset, "positions left in place before the first block");

  auto* gds = app.add_subcommand("gds", "generic dynamical system of the family");
  doc_arg(gds);
  gds->add_option("--prop", opt.prop, "TT, ST, VST, Minimal, TM or LEO");
  gds->add_option("--family-mode", opt.family_mode, "family or iterate");
  gds->add_option("--set", opt.set, "F-transitive check for a named set");
  gds->add_flag("--allow-degenerate", opt.allow_degenerate, "VST, TM and LEO on an explicit family");

  auto* assoc = app.add_subcommand("associate", "compare the system with its associated generic systems");
  doc_arg(assoc);

  auto* cv = app.add_subcommand("cross-validate", "exhaustive and seeded random cross-validation");
  cv->add_flag("--no-exhaustive", opt.no_exhaustive, "skip the exhaustive corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: flag-conflict: " << e.what() << "\n";
    return 3;
  }
  opt.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Table;

  try {
    if (!point.empty()) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(point, &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != point.size()) throw Error(ErrorCode::ParseError, "--point '" + point + "' is not a point");
      opt.point = static_cast<Point>(v);
    }
    const std::string command = app.get_subcommands().front()->get_name();
    Report r = run_command(command, opt);
    out << (opt.format == OutputFormat::Structured ? r.structured() : r.table());
    return r.exit_code();
  } catch (const DocumentError& e) {
    err << "error: " << e.diagnostic() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace transit
