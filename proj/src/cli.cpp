#include "modrad/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace modrad::cli {

using fgmod::FinPresModule;
using fgmod::PropertyCertificate;
using fgmod::Submodule;
using harness::InstanceGenerator;
using json_io::json;
using rings::IdealDescriptor;
using rings::RingDescriptor;
using symmod::SymbolicModule;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModuleHandle load_module(const std::string& input) {
  std::string text = input;
  if (!input.empty() && input[0] != '{') text = slurp(input);
  return json_io::module_from_string(text);
}

RingDescriptor ring_of(const ModuleHandle& m) {
  if (std::holds_alternative<FinPresModule>(m)) return std::get<FinPresModule>(m).ring();
  return std::get<SymbolicModule>(m).ring();
}

std::string module_summary(const ModuleHandle& m) {
  if (std::holds_alternative<FinPresModule>(m)) {
    const auto& fp = std::get<FinPresModule>(m);
    std::string s = "finpres gens=" + std::to_string(fp.n_gens()) + " invariants=[";
    bool first = true;
    for (const Int& d : fp.torsion_invariants()) {
      if (d.is_one()) continue;
      if (!first) s += ",";
      s += d.str();
      first = false;
    }
    s += "] free_rank=" + std::to_string(fp.free_rank());
    return s;
  }
  const auto& sm = std::get<SymbolicModule>(m);
  std::string s = "symbolic free_rank=";
  s += sm.free_rank().infinite ? "inf" : std::to_string(sm.free_rank().count);
  s += " cyclics=[";
  for (std::size_t i = 0; i < sm.cyclics().size(); ++i) {
    if (i) s += ",";
    const auto& c = sm.cyclics()[i];
    s += c.prime.str() + "^" + std::to_string(c.exponent);
    if (c.multiplicity > 1) s += "x" + std::to_string(c.multiplicity);
  }
  s += "] families=[";
  for (std::size_t i = 0; i < sm.families().size(); ++i) {
    if (i) s += ",";
    s += sm.families()[i].primes.str();
  }
  s += "] pruefer=[";
  for (std::size_t i = 0; i < sm.pruefer().size(); ++i) {
    if (i) s += ",";
    s += sm.pruefer()[i].prime.str();
    if (sm.pruefer()[i].multiplicity > 1) s += "x" + std::to_string(sm.pruefer()[i].multiplicity);
  }
  return s + "]";
}

std::string render_generators(const exactlin::IntegerLattice& l) {
  if (l.rank() == 0) return "[]";
  std::string s = "[";
  for (exactlin::Index j = 0; j < l.rank(); ++j) {
    if (j) s += ",";
    s += "[";
    for (exactlin::Index i = 0; i < l.ambient_rank(); ++i) {
      if (i) s += ",";
      s += l.basis()(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

void render_certificate(std::ostream& out, const PropertyCertificate& cert) {
  for (const auto& e : cert.per_prime) {
    out << "  " << e.prime.str() << ": " << (e.ok ? "ok" : "FAIL") << " — " << e.detail << "\n";
  }
  if (!cert.note.empty()) out << "  note: " << cert.note << "\n";
}

const std::vector<std::string>& all_properties() {
  static const std::vector<std::string> props = {
      "primeful", "pradical", "mradical", "fullsemisimple", "primeless", "multiplication"};
  return props;
}

struct PropertyResult {
  bool applicable = false;
  bool verdict = false;
  PropertyCertificate certificate;  // empty for plain booleans
  std::string detail;
};

PropertyResult evaluate_property(const ModuleHandle& m, const std::string& prop,
                                 std::int64_t bound) {
  PropertyResult r;
  if (std::holds_alternative<FinPresModule>(m)) {
    const auto& fp = std::get<FinPresModule>(m);
    if (prop == "primeful") {
      r = {true, false, fgmod::check_primeful(fp), ""};
      r.verdict = r.certificate.verdict;
    } else if (prop == "pradical") {
      r = {true, false, fgmod::check_p_radical(fp), ""};
      r.verdict = r.certificate.verdict;
    } else if (prop == "mradical") {
      r = {true, false, fgmod::check_m_radical(fp), ""};
      r.verdict = r.certificate.verdict;
    } else if (prop == "primeless") {
      r.applicable = true;
      r.verdict = fp.is_zero_module();  // nonzero presented modules have primes
      r.detail = r.verdict ? "zero module, Spec(M) empty" : "Spec(M) nonempty";
    } else if (prop == "multiplication") {
      r.applicable = fp.is_cyclic() || fp.is_finite();
      if (r.applicable) r.verdict = fgmod::is_multiplication(fp, bound);
    } else if (prop == "fullsemisimple") {
      bool semisimple =
          fp.is_finite() && fp.torsion_exponent() == rings::squarefree_kernel(fp.torsion_exponent());
      r.applicable = semisimple;
      // A finitely generated semisimple module always embeds every R/m over
      // its annihilator: the support equals the primes of the exponent.
      if (semisimple) r.verdict = true;
    }
    return r;
  }
  const auto& sm = std::get<SymbolicModule>(m);
  if (prop == "primeful") {
    r = {true, false, symmod::check_primeful(sm), ""};
    r.verdict = r.certificate.verdict;
  } else if (prop == "pradical") {
    r = {true, false, symmod::check_p_radical(sm), ""};
    r.verdict = r.certificate.verdict;
  } else if (prop == "mradical") {
    r = {true, false, symmod::check_m_radical(sm), ""};
    r.verdict = r.certificate.verdict;
  } else if (prop == "primeless") {
    r.applicable = true;
    r.verdict = symmod::is_primeless(sm);
    if (r.verdict && sm.is_zero_module()) r.detail = "zero module, Spec(M) empty";
  } else if (prop == "fullsemisimple") {
    r.applicable = sm.is_semisimple();
    if (r.applicable) r.verdict = symmod::is_full_semisimple(sm);
  } else if (prop == "multiplication") {
    r.applicable = false;  // undecidable for the symbolic representation
  }
  return r;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& input, std::vector<std::string> props, bool as_json,
                std::int64_t bound, std::ostream& out) {
  ModuleHandle m = load_module(input);
  bool explicit_request = !props.empty();
  if (props.empty()) props = all_properties();
  for (const auto& p : props) {
    if (std::find(all_properties().begin(), all_properties().end(), p) ==
        all_properties().end()) {
      throw ParseError("unknown property: " + p);
    }
  }

  json report{{"module", json_io::module_to_json(m)}, {"properties", json::object()}};
  std::ostringstream text;
  text << "ring: " << ring_of(m).label() << "\n";
  text << "module: " << module_summary(m) << "\n";
  for (const auto& p : props) {
    PropertyResult r = evaluate_property(m, p, bound);
    if (!r.applicable) {
      if (explicit_request) {
        throw UnsupportedError("property \"" + p + "\" does not apply to this module");
      }
      text << std::left << std::setw(16) << p << "n/a\n";
      report["properties"][p] = nullptr;
      continue;
    }
    text << std::left << std::setw(16) << p << (r.verdict ? "true" : "false") << "\n";
    if (!r.detail.empty()) text << "  " << r.detail << "\n";
    render_certificate(text, r.certificate);
    json entry = json_io::certificate_to_json(r.certificate);
    entry["verdict"] = r.verdict;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    report["properties"][p] = std::move(entry);
  }
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

FinPresModule require_finpres(const ModuleHandle& m, const char* what) {
  if (!std::holds_alternative<FinPresModule>(m)) {
    throw UnsupportedError(std::string(what) + " requires a finitely presented module");
  }
  return std::get<FinPresModule>(m);
}

int cmd_radical(const std::string& input, const std::string& submodule_json,
                const std::string& ideal_gen, std::ostream& out) {
  FinPresModule m = require_finpres(load_module(input), "radical");
  Submodule n = Submodule::zero(m);
  IdealDescriptor formula_ideal = fgmod::ann(m);
  if (!ideal_gen.empty()) {
    formula_ideal = IdealDescriptor::from_generator(m.ring(), Int(ideal_gen));
    n = Submodule::ideal_multiple(m, formula_ideal);
  } else if (!submodule_json.empty()) {
    n = json_io::submodule_from_json(m, json_io::parse(submodule_json));
    formula_ideal = fgmod::colon(n);
  }
  Submodule rad = fgmod::prime_radical(n);
  IdealDescriptor rad_colon = fgmod::colon(rad);
  IdealDescriptor colon_radical = rings::radical_ideal(m.ring(), fgmod::colon(n));
  out << "N generators:        " << render_generators(n.lattice()) << "\n";
  out << "sqrt[p](N):          " << render_generators(rad.lattice()) << "\n";
  out << "(sqrt[p](N) : M):    " << rad_colon.str() << "\n";
  out << "sqrt((N : M)):       " << colon_radical.str() << "\n";
  bool holds = fgmod::check_radical_formula(m, formula_ideal);
  Submodule rhs = Submodule::ideal_multiple(m, rings::radical_ideal(m.ring(), formula_ideal));
  out << "radical formula at I=" << formula_ideal.str() << ": "
      << (holds ? "holds" : "fails: sqrt(I)M = " + render_generators(rhs.lattice())) << "\n";
  return kExitOk;
}

int cmd_colon(const std::string& input, const std::string& submodule_json, std::ostream& out) {
  ModuleHandle handle = load_module(input);
  if (std::holds_alternative<SymbolicModule>(handle)) {
    if (!submodule_json.empty()) {
      throw UnsupportedError("colon with a submodule requires a finitely presented module");
    }
    const auto& sm = std::get<SymbolicModule>(handle);
    out << "Ann(M) = " << symmod::ann(sm).str() << "\n";
    return kExitOk;
  }
  const auto& m = std::get<FinPresModule>(handle);
  Submodule n = submodule_json.empty()
                    ? Submodule::zero(m)
                    : json_io::submodule_from_json(m, json_io::parse(submodule_json));
  out << "(N : M) = " << fgmod::colon(n).str() << "\n";
  out << "Ann(M)  = " << fgmod::ann(m).str() << "\n";
  return kExitOk;
}

int cmd_spec(const std::string& input, const std::string& submodule_json,
             const std::string& ideal_gen, bool dot, std::int64_t bound, std::ostream& out) {
  ModuleHandle m = load_module(input);
  RingDescriptor ring = ring_of(m);
  if (dot) {
    FinPresModule fp = require_finpres(m, "psi DOT emission");
    if (!fp.is_finite()) throw UnsupportedError("psi DOT emission requires a finite module");
    out << spectop::psi_dot(fp, bound);
    return kExitOk;
  }
  auto target = spectop::v_of_annihilator(m);
  auto image = spectop::psi_image(m);
  out << "Spec(R/Ann M) = V(Ann M) = " << target.str() << "\n";
  out << "psi image: maximal colons " << image.maximals.str() << ", (0) "
      << (image.zero_prime ? "realized" : "not realized") << "\n";
  bool primeful = std::holds_alternative<FinPresModule>(m)
                      ? fgmod::check_primeful(std::get<FinPresModule>(m)).verdict
                      : symmod::check_primeful(std::get<SymbolicModule>(m)).verdict;
  out << "primeful (psi surjective): " << (primeful ? "true" : "false") << "\n";
  if (!ideal_gen.empty()) {
    auto i = IdealDescriptor::from_generator(ring, Int(ideal_gen));
    out << "V(" << i.str() << ") = " << spectop::v_ideal(ring, i).str() << "\n";
  }
  if (!submodule_json.empty()) {
    FinPresModule fp = require_finpres(m, "V(N)");
    Submodule n = json_io::submodule_from_json(fp, json_io::parse(submodule_json));
    auto closed = spectop::v_submodule(n);
    out << "V(N): defining radical colon " << closed.radical_colon().str() << "\n";
    if (fp.is_finite()) {
      out << "members of V(N) in Spec(M):";
      bool any = false;
      for (const auto& p : fgmod::prime_submodules_oracle(fp, bound)) {
        if (closed.member(fgmod::colon(p))) {
          out << " " << render_generators(p.lattice());
          any = true;
        }
      }
      out << (any ? "" : " (none)") << "\n";
    }
  }
  return kExitOk;
}

int cmd_gallery(bool as_json, std::ostream& out) {
  auto checks = harness::run_gallery();
  bool all_ok = std::all_of(checks.begin(), checks.end(),
                            [](const harness::GalleryCheck& c) { return c.ok; });
  if (as_json) {
    json rows = json::array();
    for (const auto& c : checks) {
      rows.push_back(json{{"instance", c.name},
                          {"property", c.property},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"ok", c.ok}});
    }
    out << json{{"checks", rows}, {"pass", all_ok}}.dump(2) << "\n";
  } else {
    out << render_gallery();
    if (!all_ok) {
      for (const auto& c : checks) {
        if (!c.ok) {
          out << "MISMATCH " << c.name << "/" << c.property << ": computed " << c.computed
              << ", expected " << c.expected << "\n";
        }
      }
    }
  }
  return all_ok ? kExitOk : kExitAssertion;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, std::int64_t bound,
               bool as_json, std::ostream& out) {
  std::vector<std::string> ids =
      suite == "all" ? harness::suite_ids() : std::vector<std::string>{suite};
  for (const auto& id : ids) {
    if (!harness::is_suite_id(id)) {
      throw ParseError("unknown suite: " + id);  // usage error, exit 2
    }
  }
  bool all_pass = true;
  json reports = json::array();
  for (const auto& id : ids) {
    InstanceGenerator gen = InstanceGenerator::with_seed(seed);
    harness::SuiteReport report = harness::run_suite(id, gen, trials, bound);
    all_pass = all_pass && report.passed();
    if (as_json) {
      reports.push_back(report.to_json());
    } else {
      out << std::left << std::setw(16) << report.suite
          << (report.passed() ? "pass" : "FAIL") << "  trials=" << report.trials
          << " failures=" << report.failures.size() << " covers=";
      for (std::size_t i = 0; i < report.covers.size(); ++i) {
        out << (i ? "," : "") << report.covers[i];
      }
      out << "\n";
      for (const auto& f : report.failures) {
        out << "  failure: " << f.reason << "\n";
        if (f.shrunk) out << "  shrunk instance: " << f.shrunk->dump() << "\n";
      }
    }
  }
  if (as_json) out << (ids.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_pass ? kExitOk : kExitAssertion;
}

int cmd_oracle(const std::string& input, const std::string& submodule_json, std::int64_t bound,
               std::ostream& out) {
  FinPresModule m = require_finpres(load_module(input), "oracle");
  if (!m.is_finite()) throw UnsupportedError("oracle requires a finite module");
  auto subs = fgmod::enumerate_submodules(m, bound);
  out << "submodules: " << subs.size() << "\n";
  out << "prime submodules:\n";
  for (const auto& p : fgmod::prime_submodules_oracle(m, bound)) {
    out << "  " << render_generators(p.lattice()) << "  colon " << fgmod::colon(p).str() << "\n";
  }
  Submodule n = submodule_json.empty()
                    ? Submodule::zero(m)
                    : json_io::submodule_from_json(m, json_io::parse(submodule_json));
  Submodule closed_form = fgmod::prime_radical(n);
  Submodule oracle = fgmod::prime_radical_oracle(n, bound);
  out << "sqrt[p](N) closed form: " << render_generators(closed_form.lattice()) << "\n";
  out << "sqrt[p](N) oracle:      " << render_generators(oracle.lattice()) << "\n";
  bool agree = closed_form == oracle;
  out << "agreement: " << (agree ? "yes" : "NO") << "\n";
  return agree ? kExitOk : kExitAssertion;
}

}  // namespace

std::string render_gallery() {
  auto checks = harness::run_gallery();
  std::ostringstream out;
  out << "gallery verdicts (frozen acceptance table)\n";
  out << std::left << std::setw(18) << "instance" << std::setw(10) << "primeful" << std::setw(10)
      << "pradical" << std::setw(10) << "mradical" << std::setw(16) << "fullsemisimple"
      << "primeless\n";
  for (const std::string& name : harness::gallery_names()) {
    out << std::left << std::setw(18) << name;
    for (const char* prop : {"primeful", "pradical", "mradical", "fullsemisimple", "primeless"}) {
      for (const auto& c : checks) {
        if (c.name == name && c.property == prop) {
          bool last = prop == std::string("primeless");
          if (last) {
            out << c.computed;
          } else {
            out << std::left << std::setw(prop == std::string("fullsemisimple") ? 16 : 10)
                << c.computed;
          }
        }
      }
    }
    out << "\n";
  }
  out << "extra checks\n";
  for (const auto& c : checks) {
    if (c.property == "primeful" || c.property == "pradical" || c.property == "mradical" ||
        c.property == "fullsemisimple" || c.property == "primeless") {
      continue;
    }
    out << c.name << "/" << c.property << ": " << c.computed << "\n";
  }
  bool all_ok = std::all_of(checks.begin(), checks.end(),
                            [](const harness::GalleryCheck& c) { return c.ok; });
  out << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modrad: module-theoretic property decisions over Z, Z/n, Z_(p), F_p"};
  app.require_subcommand(1);

  std::string input, submodule_json, ideal_gen, suite;
  std::vector<std::string> props;
  bool as_json = false, dot = false;
  std::uint64_t seed = 7;
  int trials = 200;
  std::int64_t bound = fgmod::kDefaultEnumerationBound;

  auto* analyze = app.add_subcommand("analyze", "decide properties of a module");
  analyze->add_option("input", input, "module JSON (inline or a file path)")->required();
  analyze->add_option("--props", props, "subset of properties to check")->delimiter(',');
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_option("--bound", bound, "enumeration size bound");

  auto* radical = app.add_subcommand("radical", "prime radical of a submodule or of IM");
  radical->add_option("input", input, "module JSON (inline or a file path)")->required();
  radical->add_option("--submodule", submodule_json, "submodule generators JSON");
  radical->add_option("--ideal", ideal_gen, "ideal generator (decimal)");

  auto* colon = app.add_subcommand("colon", "colon ideal (N : M)");
  colon->add_option("input", input, "module JSON (inline or a file path)")->required();
  colon->add_option("--submodule", submodule_json, "submodule generators JSON");

  auto* spec = app.add_subcommand("spec", "Zariski data: V(Ann), psi image, closed sets");
  spec->add_option("input", input, "module JSON (inline or a file path)")->required();
  spec->add_option("--submodule", submodule_json, "submodule generators JSON");
  spec->add_option("--ideal", ideal_gen, "ideal generator (decimal)");
  spec->add_flag("--dot", dot, "emit psi as a DOT bipartite graph");
  spec->add_option("--bound", bound, "enumeration size bound");

  auto* gallery = app.add_subcommand("gallery", "named instances with frozen verdicts");
  gallery->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite id or \"all\"")->required();
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "number of generated instances");
  verify->add_option("--bound", bound, "enumeration size bound");
  verify->add_flag("--json", as_json, "JSON report");

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration cross-check");
  oracle->add_option("input", input, "module JSON (inline or a file path)")->required();
  oracle->add_option("--submodule", submodule_json, "submodule generators JSON");
  oracle->add_option("--bound", bound, "enumeration size bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, props, as_json, bound, out);
    if (radical->parsed()) return cmd_radical(input, submodule_json, ideal_gen, out);
    if (colon->parsed()) return cmd_colon(input, submodule_json, out);
    if (spec->parsed()) return cmd_spec(input, submodule_json, ideal_gen, dot, bound, out);
    if (gallery->parsed()) return cmd_gallery(as_json, out);
    if (verify->parsed()) return cmd_verify(suite, seed, trials, bound, as_json, out);
    if (oracle->parsed()) return cmd_oracle(input, submodule_json, bound, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const exactlin::SizeBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace modrad::cli
