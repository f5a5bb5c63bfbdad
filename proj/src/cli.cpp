#include "hyperforge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperforge/budget.hpp"
#include "hyperforge/explore.hpp"
#include "hyperforge/ideals.hpp"
#include "hyperforge/structure_file.hpp"
#include "hyperforge/verify.hpp"

namespace hyperforge {

namespace {

using Json = nlohmann::ordered_json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

[[noreturn]] void usage(const std::string& msg) { throw std::invalid_argument(msg); }

std::optional<Flavor> parse_flavor(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "ordered") return Flavor::kOrdered;
  if (text == "plain") return Flavor::kPlain;
  usage("flavor must be ordered or plain");
}

Flavor default_flavor(const HyperStructure& s, const std::optional<Flavor>& requested) {
  if (requested) return *requested;
  return s.has_order() ? Flavor::kOrdered : Flavor::kPlain;
}

IdealKind parse_kind(const std::string& text) {
  for (IdealKind k : {IdealKind::kRight, IdealKind::kLeft, IdealKind::kTwoSided, IdealKind::kBi, IdealKind::kQuasi}) {
    if (to_string(k) == text) return k;
  }
  usage("kind must be right, left, two-sided, bi or quasi");
}

std::vector<TheoremId> parse_theorems(const std::string& text) {
  if (text.empty() || lower(text) == "all") return {all_theorems().begin(), all_theorems().end()};
  std::vector<TheoremId> out;
  for (const std::string& part : split(text)) {
    std::optional<TheoremId> id;
    for (TheoremId t : all_theorems()) {
      if (lower(std::string(to_string(t))) == lower(part)) id = t;
    }
    if (!id) usage("unknown theorem '" + part + "'");
    out.push_back(*id);
  }
  return out;
}

Requirements parse_requirements(const std::string& text) {
  Requirements r;
  for (const std::string& part : split(text)) {
    const std::string p = lower(part);
    if (p == "total") {
      r.total = true;
    } else if (p == "partial") {
      r.total = false;
    } else if (p == "assoc" || p == "associative") {
      r.associative = true;
    } else if (p == "ordered") {
      r.ordered = true;
    } else if (p == "compatible") {
      r.compatible = true;
    } else {
      usage("unknown requirement '" + part + "'");
    }
  }
  return r;
}

struct Common {
  std::string format = "text";
  int threads = 1;
  bool records() const { return format == "records"; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

// ---- subcommands

int cmd_validate(const std::string& path, const Common& c, std::ostream& out) {
  StructureFile f = load_structure(path);
  const ValidationReport r = validate(f.structure);
  if (c.records()) {
    Json j;
    j["record"] = "validation";
    j["n"] = r.size;
    j["total"] = r.total;
    j["associative"] = r.associativity && r.associativity->associative;
    j["order_present"] = r.order_present;
    j["order_axioms"] = !r.order_present || (r.order_axioms && r.order_axioms->ok);
    j["compatible"] = !r.order_present || (r.compatibility && r.compatibility->compatible);
    j["passed"] = r.passed();
    out << j.dump() << '\n';
  } else {
    out << r.to_text();
  }
  return r.passed() ? kExitOk : kExitFail;
}

std::string realizer_text(const Realizer& r, const std::vector<std::string>& names) {
  std::string out = names[r.element] + " via (";
  for (size_t i = 0; i < r.factors.size(); ++i) out += (i ? "," : "") + names[r.factors[i]];
  return out + ") -> " + names[r.target];
}

int cmd_classify(const std::string& path, const std::string& flavor_text, const Common& c, std::ostream& out) {
  const StructureFile f = load_structure(path);
  const Flavor flavor = default_flavor(f.structure, parse_flavor(flavor_text));
  const ClassVector v = classify_all(f.structure, flavor);
  if (!c.records()) out << "flavor: " << to_string(flavor) << '\n';
  for (RegularityClass cls : kAllClasses) {
    const ClassResult r = classify(f.structure, cls, flavor);
    if (c.records()) {
      Json j;
      j["record"] = "class";
      j["class"] = std::string(to_string(cls));
      j["flavor"] = std::string(to_string(flavor));
      j["holds"] = r.holds;
      if (r.failing) j["failing"] = f.elements[*r.failing];
      Json realizers = Json::array();
      for (const Realizer& z : r.realizers) realizers.push_back(realizer_text(z, f.elements));
      j["realizers"] = realizers;
      out << j.dump() << '\n';
    } else {
      out << to_string(cls) << ": " << (r.holds ? "yes" : "no");
      if (r.failing) out << " failing=" << f.elements[*r.failing];
      for (const Realizer& z : r.realizers) out << " [" << realizer_text(z, f.elements) << "]";
      out << '\n';
    }
  }
  if (!c.records()) out << "vector: " << v.bits() << '\n';
  for (const std::string& violation : v.violations) out << "violation: " << violation << '\n';
  return v.violations.empty() ? kExitOk : kExitFail;
}

std::string named(ElementSet set, const std::vector<std::string>& names) {
  std::string out = "{";
  for (Element e : set) out += (out.size() > 1 ? "," : "") + names[e];
  return out + "}";
}

std::string named(const Partition& p, const std::vector<std::string>& names) {
  std::string out;
  for (ElementSet block : p.blocks()) out += (out.empty() ? "" : "|") + named(block, names);
  return out;
}

int cmd_ideals(const std::string& path, const std::string& kind_text, const std::string& flavor_text,
               const Common& c, std::ostream& out) {
  const StructureFile f = load_structure(path);
  const IdealKind kind = parse_kind(kind_text);
  const Flavor flavor = default_flavor(f.structure, parse_flavor(flavor_text));
  const std::vector<ElementSet> ideals = enumerate_ideals(f.structure, kind, flavor);
  for (ElementSet A : ideals) {
    if (c.records()) {
      Json j;
      j["record"] = "ideal";
      j["kind"] = std::string(to_string(kind));
      j["flavor"] = std::string(to_string(flavor));
      j["set"] = named(A, f.elements);
      out << j.dump() << '\n';
    } else {
      out << named(A, f.elements) << '\n';
    }
  }
  if (!c.records()) out << "count: " << ideals.size() << '\n';
  return kExitOk;
}

int cmd_congruences(const std::string& path, bool semilattice, bool complete, const std::string& flavor_text,
                    std::uint64_t budget, const Common& c, std::ostream& out) {
  const StructureFile f = load_structure(path);
  const HyperStructure& s = f.structure;
  const Flavor flavor = default_flavor(s, parse_flavor(flavor_text));
  if (bell_number(s.size()) > budget) {
    throw Error(ErrorKind::kBudgetExceeded, "Bell(" + std::to_string(s.size()) + ") exceeds budget");
  }
  std::vector<Partition> listed;
  for_each_partition(s.size(), [&](const Partition& p) {
    if (!is_congruence(s, p)) return true;
    if (semilattice && !is_semilattice_congruence(s, p)) return true;
    if (complete && !is_complete(s, p)) return true;
    listed.push_back(p);
    return true;
  });
  const Partition n_rel = relation_N(s, flavor);
  const Partition least = least_semilattice_congruence(s, budget);
  if (c.records()) {
    for (const Partition& p : listed) {
      Json j;
      j["record"] = "congruence";
      j["partition"] = named(p, f.elements);
      out << j.dump() << '\n';
    }
    Json j;
    j["record"] = "congruence-summary";
    j["flavor"] = std::string(to_string(flavor));
    j["N"] = named(n_rel, f.elements);
    j["least"] = named(least, f.elements);
    out << j.dump() << '\n';
  } else {
    for (const Partition& p : listed) out << named(p, f.elements) << '\n';
    out << "count: " << listed.size() << '\n';
    out << "N (" << to_string(flavor) << "): " << named(n_rel, f.elements) << '\n';
    for (Element x = 0; x < s.size(); ++x) {
      out << "N(" << f.elements[x] << "): " << named(generated_filter(s, x, flavor), f.elements) << '\n';
    }
    out << "least semilattice congruence: " << named(least, f.elements) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& theorems, const std::string& grid,
               std::optional<std::uint64_t> budget, bool micros, const Common& c, std::ostream& out) {
  StructureFile f = load_structure(path);
  const ValidationReport r = validate(f.structure);
  VerifyConfig cfg;
  if (!grid.empty()) cfg.grid = parse_grid(grid);
  if (budget) cfg.budget = *budget;
  const std::vector<TheoremId> ids = parse_theorems(theorems);
  const std::vector<TheoremReport> reports = run_suite(f.structure, ids, cfg, c.threads);
  for (const TheoremReport& rep : reports) {
    out << (c.records() ? rep.to_record(micros) : rep.to_text(micros)) << '\n';
  }
  // A fail on a structure passing every axiom is a finding about the
  // statement rather than about the input.
  if (r.passed()) {
    for (const TheoremReport& rep : reports) {
      if (rep.verdict != TheoremVerdict::kFails) continue;
      if (c.records()) {
        Json j;
        j["record"] = "FINDING";
        j["id"] = std::string(to_string(rep.id));
        j["witness"] = rep.witness;
        j["structure"] = Json::parse(print_structure(f));
        out << j.dump() << '\n';
      } else {
        out << "FINDING " << to_string(rep.id) << ": " << rep.witness << '\n';
      }
    }
  }
  return any_fails(reports) ? kExitFail : kExitOk;
}

struct EnumOptions {
  int n = 2;
  std::string require;
  bool canonical = false;
  std::optional<std::uint64_t> random;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
};

EnumSpec make_spec(const EnumOptions& o) {
  EnumSpec spec;
  spec.n = o.n;
  spec.require = parse_requirements(o.require);
  spec.canonical_only = o.canonical;
  if (o.random) {
    spec.mode = EnumMode::kRandom;
    spec.count = *o.random;
  }
  spec.seed = o.seed;
  if (o.budget) spec.budget = *o.budget;
  return spec;
}

int cmd_enumerate(const EnumOptions& o, const std::optional<std::string>& census_targets,
                  const std::string& flavor_text, const Common& c, std::ostream& out) {
  const EnumSpec spec = make_spec(o);
  if (!census_targets) {
    std::uint64_t count = 0;
    enumerate(spec, [&](const HyperStructure&) {
      ++count;
      return true;
    });
    if (c.records()) {
      Json j;
      j["record"] = "enumerate";
      j["n"] = spec.n;
      j["count"] = count;
      out << j.dump() << '\n';
    } else {
      out << "structures: " << count << '\n';
    }
    return kExitOk;
  }
  std::vector<TheoremId> targets;
  if (lower(*census_targets) != "classes") {
    for (const std::string& part : split(*census_targets)) {
      const std::vector<TheoremId> one = parse_theorems(lower(part) == "prop60" ? "P60" : lower(part) == "t83" ? "T83" : part);
      targets.insert(targets.end(), one.begin(), one.end());
    }
  }
  const bool ordered = spec.require.ordered || spec.require.compatible;
  const Flavor flavor = parse_flavor(flavor_text).value_or(ordered ? Flavor::kOrdered : Flavor::kPlain);
  const Census census = classify_corpus(spec, flavor, targets, c.threads);
  if (c.records()) {
    for (const std::string& line : census.to_records()) out << line << '\n';
  } else {
    out << census.to_text();
  }
  bool failed = census.implication_violations > 0;
  for (const auto& [id, counts] : census.verdicts) failed = failed || counts[1] > 0;
  return failed ? kExitFail : kExitOk;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::kParse, "cannot write " + path.string());
  file << text;
}

int cmd_search(const EnumOptions& o, const std::string& out_dir, const Common& c, std::ostream& out) {
  const EnumSpec spec = make_spec(o);
  const SearchResult result = search_p85(spec);
  if (c.records()) {
    Json head;
    head["record"] = "search";
    head["n"] = spec.n;
    head["examined"] = result.examined;
    head["findings"] = result.findings.size();
    out << head.dump() << '\n';
    for (const SearchFinding& f : result.findings) out << f.to_record() << '\n';
    if (result.certificate) {
      Json cert;
      cert["record"] = "certificate";
      cert["text"] = *result.certificate;
      out << cert.dump() << '\n';
    }
  } else {
    out << "examined: " << result.examined << '\n';
    out << "findings: " << result.findings.size() << '\n';
    for (size_t i = 0; i < result.findings.size(); ++i) {
      out << "finding " << i + 1 << ":\n" << print_structure(with_default_names(result.findings[i].structure));
      out << result.findings[i].to_text();
    }
    if (result.certificate) out << "certificate:\n" << *result.certificate;
  }
  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    std::string index;
    for (size_t i = 0; i < result.findings.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "finding-%04zu.json", i + 1);
      write_file(dir / name, print_structure(with_default_names(result.findings[i].structure)));
      Json j = Json::parse(result.findings[i].to_record());
      j["file"] = name;
      index += j.dump() + '\n';
    }
    write_file(dir / "findings.jsonl", index);
    if (result.certificate) write_file(dir / "certificate.txt", *result.certificate);
  }
  return result.findings.empty() ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ordered hyperstructure toolkit", "hyperforge"};
  app.require_subcommand(1);

  Common common;
  std::string path;
  std::string flavor;
  std::string kind;
  std::string theorems;
  std::string grid;
  std::optional<std::uint64_t> budget;
  bool micros = false;
  bool semilattice = false;
  bool complete = false;
  std::optional<std::string> census;
  std::string out_dir;
  EnumOptions enum_opts;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a structure file");
  validate_cmd->add_option("file", path)->required();
  add_common(validate_cmd, common);

  auto* classify_cmd = app.add_subcommand("classify", "the seven regularity classes with realizers");
  classify_cmd->add_option("file", path)->required();
  classify_cmd->add_option("--flavor", flavor, "ordered or plain");
  add_common(classify_cmd, common);

  auto* ideals_cmd = app.add_subcommand("ideals", "list every ideal of a kind");
  ideals_cmd->add_option("file", path)->required();
  ideals_cmd->add_option("--kind", kind, "right, left, two-sided, bi or quasi")->required();
  ideals_cmd->add_option("--flavor", flavor, "ordered or plain");
  add_common(ideals_cmd, common);

  auto* congruences_cmd = app.add_subcommand("congruences", "congruences, N and the least semilattice congruence");
  congruences_cmd->add_option("file", path)->required();
  congruences_cmd->add_flag("--semilattice", semilattice, "only semilattice congruences");
  congruences_cmd->add_flag("--complete", complete, "only complete congruences");
  congruences_cmd->add_option("--flavor", flavor, "flavor used for N");
  congruences_cmd->add_option("--budget", budget, "partition budget");
  add_common(congruences_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("--theorems", theorems, "comma separated ids or all");
  verify_cmd->add_option("--grid", grid, "grade grid, e.g. 0,1/2,1");
  verify_cmd->add_option("--budget", budget, "quantifier work budget");
  verify_cmd->add_flag("--micros", micros, "append per-theorem timings");
  add_common(verify_cmd, common);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "corpus sweeps and censuses");
  enumerate_cmd->add_option("--n", enum_opts.n)->required();
  enumerate_cmd->add_option("--require", enum_opts.require, "total,associative,ordered,compatible");
  enumerate_cmd->add_flag("--canonical", enum_opts.canonical, "one structure per isomorphism class");
  enumerate_cmd->add_option("--random", enum_opts.random, "draw this many random structures");
  enumerate_cmd->add_option("--seed", enum_opts.seed);
  enumerate_cmd->add_option("--budget", enum_opts.budget);
  enumerate_cmd->add_option("--census", census, "theorem ids (prop60, t83, ...) or 'classes'");
  enumerate_cmd->add_option("--flavor", flavor, "classification flavor");
  add_common(enumerate_cmd, common);

  auto* search_cmd = app.add_subcommand("search-p85", "ordered N versus the least semilattice congruence");
  search_cmd->add_option("--n", enum_opts.n)->required();
  search_cmd->add_option("--random", enum_opts.random, "draw this many random structures");
  search_cmd->add_option("--seed", enum_opts.seed);
  search_cmd->add_option("--budget", enum_opts.budget);
  search_cmd->add_option("--out", out_dir, "directory for findings and certificate");
  bool search_canonical = true;
  search_cmd->add_flag("--canonical,!--labeled", search_canonical, "one structure per isomorphism class");
  add_common(search_cmd, common);

  std::vector<const char*> argv{"hyperforge"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(path, common, out);
    if (*classify_cmd) return cmd_classify(path, flavor, common, out);
    if (*ideals_cmd) return cmd_ideals(path, kind, flavor, common, out);
    if (*congruences_cmd) {
      return cmd_congruences(path, semilattice, complete, flavor, budget.value_or(budget_or_env(1'000'000)), common,
                             out);
    }
    if (*verify_cmd) return cmd_verify(path, theorems, grid, budget, micros, common, out);
    if (*enumerate_cmd) return cmd_enumerate(enum_opts, census, flavor, common, out);
    if (*search_cmd) {
      enum_opts.canonical = search_canonical;
      return cmd_search(enum_opts, out_dir, common, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kBudgetExceeded ? kExitBudget : kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperforge
