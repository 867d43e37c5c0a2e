#include "cli_app.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "refinv/json_io.hpp"

namespace refinv::cli {

namespace {

struct Options {
  std::vector<std::string> builtin;  // name followed by numeric args
  std::string input_path;
  std::string format = "text";
  bool trace = false;
  bool exhaustive = false;
  std::uint64_t order_cap = kDefaultOrderCap;
};

struct LoadedGroup {
  std::string label;
  GroupSpec spec;
  std::vector<Matrix> elements;
  std::optional<std::vector<MultiPoly>> supplied_invariants;
  std::optional<Fixture> fixture;
};

LoadedGroup load_group(const Options& opt) {
  if (!opt.builtin.empty() && !opt.input_path.empty())
    throw InputError("give either --builtin or an input file, not both");
  if (opt.builtin.empty() && opt.input_path.empty())
    throw InputError("no group given: use --builtin NAME ARGS or a file");

  if (!opt.builtin.empty()) {
    std::vector<std::uint64_t> args;
    for (std::size_t i = 1; i < opt.builtin.size(); ++i) {
      const std::string& s = opt.builtin[i];
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("builtin arguments must be nonnegative integers");
      args.push_back(std::stoull(s));
    }
    Fixture fx = fixture_by_name(opt.builtin[0], args);
    fx.spec.order_cap = opt.order_cap;
    return LoadedGroup{fx.name, fx.spec, enumerate_group(fx.spec),
                       std::nullopt, fx};
  }

  std::ifstream in(opt.input_path);
  if (!in) throw InputError("cannot open input file " + opt.input_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  GroupInput gi = group_input_from_json(j);
  gi.spec.order_cap = opt.order_cap;
  return LoadedGroup{gi.label.value_or(opt.input_path), gi.spec,
                     enumerate_group(gi.spec), gi.invariants, std::nullopt};
}

struct StabilizerSummary {
  Hyperplane hyperplane;
  StabilizerDecomposition dec;
};

struct Analysis {
  std::size_t order = 0;
  std::size_t reflections = 0;
  std::size_t transvections = 0;
  bool reflection_generated = false;
  std::vector<StabilizerSummary> stabilizers;
};

Analysis analyze_group(const FieldSpec& f, const std::vector<Matrix>& elems) {
  Analysis a;
  a.order = elems.size();
  for (const ReflectionInfo& r : classify_reflections(f, elems)) {
    ++a.reflections;
    if (r.is_transvection) ++a.transvections;
  }
  a.reflection_generated = is_reflection_generated(f, elems);
  for (const Hyperplane& h : reflecting_arrangement(f, elems)) {
    auto stab = pointwise_stabilizer(f, elems, h);
    a.stabilizers.push_back({h, stabilizer_decomposition(f, stab, h)});
  }
  return a;
}

Json analysis_to_json(const Analysis& a) {
  Json j;
  j["order"] = a.order;
  j["reflections"] = {{"total", a.reflections},
                      {"transvections", a.transvections},
                      {"diagonalizable", a.reflections - a.transvections}};
  j["reflection_generated"] = a.reflection_generated;
  Json stabs = Json::array();
  for (const StabilizerSummary& s : a.stabilizers) {
    Json js;
    js["hyperplane"] = hyperplane_to_json(s.hyperplane);
    js["order"] = s.dec.group_order;
    js["e"] = s.dec.e;
    js["omega"] = scalar_to_json(s.dec.omega);
    js["subfield_order"] = s.dec.subfield.size();
    js["d"] = s.dec.d;
    stabs.push_back(std::move(js));
  }
  j["stabilizers"] = std::move(stabs);
  return j;
}

std::string form_to_text(const FieldSpec& f, const Vec& form) {
  std::string s = "(";
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i) s += ",";
    s += f.to_string(form[i]);
  }
  return s + ")";
}

void print_analysis(std::ostream& out, const FieldSpec& f, const Analysis& a,
                    const std::string& label) {
  out << "group " << label << ": order " << a.order << "\n";
  out << "reflections: " << a.reflections << " (" << a.transvections
      << " transvections, " << (a.reflections - a.transvections)
      << " diagonalizable)\n";
  out << "reflection-generated: " << (a.reflection_generated ? "yes" : "no")
      << "\n";
  out << "reflecting hyperplanes: " << a.stabilizers.size() << "\n";
  for (const StabilizerSummary& s : a.stabilizers) {
    out << "  l_H " << form_to_text(f, s.hyperplane.form)
        << "  |G_H| = " << s.dec.group_order << " = " << s.dec.e << " * "
        << s.dec.subfield.size() << "^" << s.dec.d << "\n";
  }
}

// Which invariants the jacobian/verify commands should use.
BasicInvariants resolve_basics(const LoadedGroup& g) {
  if (g.supplied_invariants) {
    BasicInvariants b;
    b.polys = *g.supplied_invariants;
    for (const MultiPoly& p : b.polys) {
      if (p.is_zero() || !p.is_homogeneous())
        throw InputError("supplied invariants must be nonzero homogeneous");
      b.degrees.push_back(p.degree());
    }
    return b;
  }
  if (g.fixture) return fixture_invariants(*g.fixture, g.elements);
  auto h = common_fixed_hyperplane(g.spec.field, g.elements);
  if (h)
    return construct_hyperplane_invariants(g.spec.field, g.elements, *h)
        .first;
  throw InputError(
      "no basic invariants available: the group neither fixes a hyperplane "
      "pointwise nor is a builtin family; supply an \"invariants\" list in "
      "the input file");
}

int finish(const Options& opt, std::ostream& out, Json doc, bool pass,
           const std::string& text) {
  doc["schema"] = kSchemaVersion;
  doc["pass"] = pass;
  if (opt.format == "json")
    out << doc.dump(2) << "\n";
  else
    out << text;
  return pass ? 0 : 2;
}

int cmd_builtin(const Options& opt, std::ostream& out) {
  Json doc;
  doc["command"] = "builtin";
  doc["fixtures"] = fixture_catalog();
  std::ostringstream text;
  text << "builtin fixtures:\n";
  for (const std::string& line : fixture_catalog())
    text << "  " << line << "\n";
  return finish(opt, out, std::move(doc), true, text.str());
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  LoadedGroup g = load_group(opt);
  const FieldSpec& f = g.spec.field;
  Analysis a = analyze_group(f, g.elements);
  Json doc;
  doc["command"] = "analyze";
  doc["group"] = group_to_json(g.spec);
  doc["label"] = g.label;
  doc["analysis"] = analysis_to_json(a);
  std::ostringstream text;
  print_analysis(text, f, a, g.label);
  text << "overall: PASS\n";
  return finish(opt, out, std::move(doc), true, text.str());
}

int cmd_invariants(const Options& opt, std::ostream& out) {
  LoadedGroup g = load_group(opt);
  const FieldSpec& f = g.spec.field;

  BasicInvariants basics;
  std::optional<ConstructionTrace> trace;
  if (g.fixture && (g.fixture->family == Fixture::Family::GL ||
                    g.fixture->family == Fixture::Family::SL)) {
    basics = fixture_invariants(*g.fixture, g.elements);
  } else {
    auto h = common_fixed_hyperplane(f, g.elements);
    if (!h)
      throw InputError(
          "invariants are only constructed for groups fixing a hyperplane "
          "pointwise");
    auto [b, t] = construct_hyperplane_invariants(f, g.elements, *h);
    basics = std::move(b);
    trace = std::move(t);
  }
  VerifyReport report = verify_basic_invariants(f, g.elements, basics.polys);

  Json doc;
  doc["command"] = "invariants";
  doc["group"] = group_to_json(g.spec);
  doc["label"] = g.label;
  doc["invariants"] = basics_to_json(basics);
  doc["kemper"] = verify_report_to_json(report);
  if (opt.trace && trace) doc["trace"] = trace_to_json(f, *trace);

  std::ostringstream text;
  text << "group " << g.label << ": order " << g.elements.size() << "\n";
  text << "basic invariants (degrees";
  for (std::uint64_t d : basics.degrees) text << " " << d;
  text << "):\n";
  for (const MultiPoly& p : basics.polys)
    text << "  " << poly_to_string(f, p) << "\n";
  text << "kemper: " << (report.pass ? "PASS" : "FAIL") << "\n";
  if (opt.trace && trace) {
    text << "construction steps: " << trace->steps.size() << "\n";
    for (std::size_t k = 0; k < trace->steps.size(); ++k) {
      const TraceStep& s = trace->steps[k];
      text << "  step " << (k + 1) << ": pivot " << s.pivot
           << ", |A| = " << s.additive_set.size() << ", jacobian exponent "
           << s.jacobian_exponent << "\n";
    }
  }
  return finish(opt, out, std::move(doc), report.pass, text.str());
}

int cmd_jacobian(const Options& opt, std::ostream& out, bool with_ram) {
  LoadedGroup g = load_group(opt);
  const FieldSpec& f = g.spec.field;
  BasicInvariants basics = resolve_basics(g);
  VerifyReport kemper = verify_basic_invariants(f, g.elements, basics.polys);

  Json doc;
  doc["command"] = with_ram ? "verify" : "jacobian";
  doc["group"] = group_to_json(g.spec);
  doc["label"] = g.label;
  doc["kemper"] = verify_report_to_json(kemper);

  std::ostringstream text;
  if (with_ram) {
    Analysis a = analyze_group(f, g.elements);
    doc["analysis"] = analysis_to_json(a);
    print_analysis(text, f, a, g.label);
  } else {
    text << "group " << g.label << ": order " << g.elements.size() << "\n";
  }
  text << "kemper: " << (kemper.pass ? "PASS" : "FAIL") << " (degrees";
  for (std::uint64_t d : kemper.degrees) text << " " << d;
  text << ", product " << kemper.degree_product << ", |G| "
       << kemper.group_order << ")\n";

  bool pass = kemper.pass;
  if (kemper.pass) {
    FactorizationReport fact =
        jacobian_factorization(f, g.elements, basics.polys);
    bool degree_ok = degree_identity_check(f, g.elements, basics.polys);
    doc["factorization"] = factorization_report_to_json(fact);
    doc["degree_identity"] = degree_ok;
    text << "jacobian factorization: " << (fact.pass ? "PASS" : "FAIL")
         << " (unit " << f.to_string(fact.unit) << ")\n";
    for (const HyperplaneFactor& factor : fact.factors)
      text << "  l_H " << form_to_text(f, factor.hyperplane.form)
           << " multiplicity " << factor.multiplicity
           << (factor.divides ? "" : "  (does not divide)") << "\n";
    text << "degree identity: " << (degree_ok ? "PASS" : "FAIL")
         << " (deg J = " << fact.jacobian.degree() << ")\n";
    pass = pass && fact.pass && degree_ok;

    if (with_ram) {
      RamificationReport ram =
          ramification_check(f, g.elements, basics.polys, opt.exhaustive);
      doc["ramification"] = ramification_report_to_json(ram);
      text << "ramification: " << (ram.pass ? "PASS" : "FAIL") << " ("
           << ram.lhs.to_string() << " = " << ram.rhs.to_string() << ")\n";
      pass = pass && ram.pass;
    }
  }
  text << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
  return finish(opt, out, std::move(doc), pass, text.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact invariant rings of finite matrix groups and their "
               "Jacobian factorizations"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_trace, bool with_exhaustive) {
    sub->add_option("input", opt.input_path,
                    "JSON group file {field,n,generators,...}");
    sub->add_option("--builtin", opt.builtin,
                    "builtin fixture name and numeric arguments")
        ->expected(-1);
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--order-cap", opt.order_cap,
                    "abort enumeration past this many elements");
    if (with_trace)
      sub->add_flag("--trace", opt.trace, "emit the construction trace");
    if (with_exhaustive)
      sub->add_flag("--exhaustive", opt.exhaustive,
                    "sum the ramification formula over every hyperplane");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "group order, reflection census, arrangement, stabilizers");
  add_common(analyze, false, false);
  CLI::App* invariants = app.add_subcommand(
      "invariants", "construct basic invariants for a hyperplane-fixing "
                    "group or a builtin family");
  add_common(invariants, true, false);
  CLI::App* jacobian_cmd = app.add_subcommand(
      "jacobian", "factor the Jacobian determinant over the arrangement");
  add_common(jacobian_cmd, false, false);
  CLI::App* verify = app.add_subcommand(
      "verify", "run every check: census, Kemper criterion, factorization, "
                "degree identity, ramification");
  add_common(verify, true, true);
  CLI::App* builtin_cmd =
      app.add_subcommand("builtin", "list the builtin fixture registry");
  builtin_cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> argvec(args.rbegin(), args.rend());
    app.parse(argvec);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (builtin_cmd->parsed()) return cmd_builtin(opt, out);
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (invariants->parsed()) return cmd_invariants(opt, out);
    if (jacobian_cmd->parsed()) return cmd_jacobian(opt, out, false);
    if (verify->parsed()) return cmd_jacobian(opt, out, true);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace refinv::cli
