#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ccs/algebraic_iso.hpp"
#include "ccs/automorphism.hpp"
#include "ccs/serialize.hpp"
#include "ccs/verify.hpp"

namespace ccs::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  int p = 0;
  std::string fusion;
  std::string out = "ccs-out";
  long long budget = kDefaultSearchBudget;
  bool override_max_p = false;
  std::string lemma;
  std::string in;
  std::string lines;
  std::string involutions;
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a,b;c,d;e,f" -> three pairs
std::array<std::array<int, 2>, 3> parse_triple(const std::string& text, const char* what) {
  std::array<std::array<int, 2>, 3> out{};
  std::istringstream in(text);
  std::string item;
  int k = 0;
  while (std::getline(in, item, ';')) {
    if (k == 3) throw UsageError(std::string(what) + ": expected three pairs");
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream pair(item);
    if (!(pair >> a >> comma >> b) || comma != ',') throw UsageError(std::string(what) + ": malformed pair '" + item + "'");
    out[k++] = {a, b};
  }
  if (k != 3) throw UsageError(std::string(what) + ": expected three pairs");
  return out;
}

PaperGroupOptions group_options(const Config& c) {
  PaperGroupOptions o;
  o.override_max_p = c.override_max_p;
  if (!c.lines.empty()) o.lines = parse_triple(c.lines, "--lines");
  if (!c.involutions.empty()) o.involutions = parse_triple(c.involutions, "--involutions");
  return o;
}

FusionLevel level_of(const Config& c) { return c.fusion.empty() ? FusionLevel::full() : parse_fusion_level(c.fusion); }

std::string suffix(FusionLevel l) { return l.kind == FusionLevel::Kind::full ? "" : "-" + l.name(); }

fs::path output_dir(const Config& c) {
  std::error_code ec;
  fs::create_directories(c.out, ec);
  if (ec || !fs::is_directory(c.out)) throw UsageError("cannot create output directory " + c.out);
  return c.out;
}

void write(const fs::path& path, const Json& j, std::ostream& out) {
  try {
    write_json_file(path, j);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  out << "wrote " << path.string() << "\n";
}

void require_p(const Config& c) {
  if (c.p == 0) throw UsageError("--p is required");
}

struct Source {
  std::optional<PaperGroupBundle> bundle;
  std::optional<Scheme> scheme;
  std::string name;
};

// The scheme named by --in, or the (fusion) Cayley scheme for --p.
Source load_scheme(const Config& c) {
  Source s;
  if (!c.in.empty()) {
    if (c.p != 0 || !c.fusion.empty()) throw UsageError("--in cannot be combined with --p or --fusion");
    s.scheme = scheme_from_json(read_json_file(c.in));
    s.name = c.in;
    return s;
  }
  require_p(c);
  s.bundle = build_paper_group(c.p, group_options(c));
  const FusionLevel l = level_of(c);
  s.scheme = cayley_scheme(fusion_partition(*s.bundle, l));
  s.name = l.kind == FusionLevel::Kind::full ? "X" : "X" + l.name();
  return s;
}

int cmd_generate(const Config& c, std::ostream& out) {
  require_p(c);
  const auto b = build_paper_group(c.p, group_options(c));
  const fs::path dir = output_dir(c);
  auto emit = [&](FusionLevel l) {
    const auto part = fusion_partition(b, l);
    const Scheme x = cayley_scheme(part);
    const auto t = intersection_tensor(x);
    write(dir / ("partition" + suffix(l) + ".json"), partition_to_json(part, "group.json"), out);
    write(dir / ("constants" + suffix(l) + ".json"), constants_to_json(structure_constants(part)), out);
    write(dir / ("scheme" + suffix(l) + ".json"), scheme_to_json(x), out);
    write(dir / ("tensor" + suffix(l) + ".json"), tensor_to_json(t), out);
    out << (l.kind == FusionLevel::Kind::full ? "X" : "X" + l.name()) << ": degree " << x.degree() << ", rank "
        << x.rank() << ", basic sets " << part.size() << "\n";
  };
  write(dir / "group.json", group_to_json(*b.group), out);
  emit(FusionLevel::full());
  if (!c.fusion.empty()) emit(level_of(c));
  return kPass;
}

int cmd_verify(const Config& c, std::ostream& out) {
  require_p(c);
  VerifyOptions o;
  o.p = c.p;
  o.group = group_options(c);
  if (!c.fusion.empty()) o.fusion = parse_fusion_level(c.fusion);
  o.lemma = c.lemma;
  o.budget = c.budget;
  const fs::path dir = output_dir(c);
  out << "verifying " << (o.fusion ? "X" + o.fusion->name() : std::string("X")) << " for p = " << c.p << "\n";
  const auto result = run_verification(o, [&](const StageResult& s) {
    const char* status = s.passed() ? "PASS" : s.inconclusive ? "INCONCLUSIVE" : "FAIL";
    out << "  " << std::left << std::setw(15) << s.name << std::setw(13) << status << std::right << std::fixed
        << std::setprecision(2) << std::setw(8) << s.seconds << " s  " << s.title << "\n";
    if (!s.error.empty()) out << "      error: " << s.error << "\n";
    for (const auto& chk : s.report.checks())
      if (!chk.passed) out << "      failed: " << chk.name << (chk.detail.empty() ? "" : " (" + chk.detail + ")") << "\n";
    for (const auto& [k, v] : s.facts) out << "      " << k << " = " << v.dump() << "\n";
  });
  write(dir / "report.json", verification_to_json(result, o, c.timings), out);
  for (const auto& s : result.stages)
    if (s.artifact) write(dir / "audit.json", *s.artifact, out);
  if (result.passed()) {
    out << "PASS\n";
    return kPass;
  }
  if (result.inconclusive()) {
    out << "INCONCLUSIVE (search budget exhausted; raise --budget)\n";
    return kInconclusive;
  }
  out << "FAIL\n";
  return kFailure;
}

int cmd_aut(const Config& c, std::ostream& out) {
  const Source s = load_scheme(c);
  std::optional<PermGroup> seed;
  if (s.bundle) seed = right_translations(*s.bundle->group);
  SearchStats stats;
  const PermGroup g = automorphism_group(*s.scheme, seed ? &*seed : nullptr, c.budget, &stats);
  const fs::path dir = output_dir(c);
  write(dir / "aut.json", perm_group_to_json(g), out);
  out << "Aut(" << s.name << "): order " << g.order() << ", " << regularity_name(regularity_class(g)) << ", "
      << g.generators().size() << " generators, " << stats.nodes << " search nodes\n";
  return kPass;
}

int cmd_tensor(const Config& c, std::ostream& out) {
  const Source s = load_scheme(c);
  const auto t = intersection_tensor(*s.scheme);
  const auto identities = t.check_identities();
  const fs::path dir = output_dir(c);
  write(dir / "tensor.json", tensor_to_json(t), out);
  out << "tensor(" << s.name << "): rank " << t.rank() << ", " << t.entries().size() << " nonzero entries, "
      << (t.is_commutative() ? "commutative" : "noncommutative") << ", identities "
      << (identities.ok() ? "hold" : "FAIL: " + identities.first_failure()) << "\n";
  return identities.ok() ? kPass : kFailure;
}

int cmd_wl(const Config& c, std::ostream& out) {
  RawColoring raw;
  std::string name;
  if (!c.in.empty()) {
    if (c.p != 0 || !c.fusion.empty()) throw UsageError("--in cannot be combined with --p or --fusion");
    raw = coloring_from_json(read_json_file(c.in));
    name = c.in;
  } else {
    const Source s = load_scheme(c);
    raw.degree = s.scheme->degree();
    raw.colors.assign(s.scheme->colors().begin(), s.scheme->colors().end());
    name = s.name;
  }
  WlStats stats;
  const Scheme x = wl_stabilize(raw.degree, raw.colors, &stats);
  const fs::path dir = output_dir(c);
  write(dir / "wl.json", scheme_to_json(x), out);
  out << "wl(" << name << "): rank " << stats.initial_rank << " -> " << stats.final_rank << " (delta "
      << stats.final_rank - stats.initial_rank << ") after " << stats.rounds << " rounds\n";
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent configurations and Schur rings of degree 4p^2", "ccs"};
  app.set_version_flag("--version", std::string(CCS_VERSION));
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool with_in) {
    sub->add_option("--p", c.p, "prime p >= 5")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--fusion", c.fusion, "fusion level")
        ->check(CLI::IsMember({"1", "2", "3", "12", "13", "23", "0"}));
    sub->add_option("--out", c.out, "output directory")->capture_default_str();
    sub->add_flag("--override-max-p", c.override_max_p, "allow p above 13");
    sub->add_option("--lines", c.lines, "generators of the three lines in Z_p^2, as 'a,b;c,d;e,f'");
    sub->add_option("--involutions", c.involutions, "the three involutions of Z_2^2, as 'a,b;c,d;e,f'");
    if (with_in) sub->add_option("--in", c.in, "input JSON file");
  };
  auto* gen = app.add_subcommand("generate", "write the group, partitions, scheme and tensor files");
  common(gen, false);
  auto* ver = app.add_subcommand("verify", "run the verification battery");
  common(ver, false);
  ver->add_option("--budget", c.budget, "node budget of each search")->capture_default_str()->check(CLI::PositiveNumber);
  ver->add_option("--lemma", c.lemma, "run a single stage");
  ver->add_flag("--timings", c.timings, "record stage timings in report.json");
  auto* aut = app.add_subcommand("aut", "automorphism group of a scheme");
  common(aut, true);
  aut->add_option("--budget", c.budget, "node budget of the search")->capture_default_str()->check(CLI::PositiveNumber);
  auto* ten = app.add_subcommand("tensor", "intersection numbers of a scheme");
  common(ten, true);
  auto* wl = app.add_subcommand("wl", "Weisfeiler-Leman stabilization of a coloring");
  common(wl, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << CCS_VERSION << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(c, out);
    if (ver->parsed()) return cmd_verify(c, out);
    if (aut->parsed()) return cmd_aut(c, out);
    if (ten->parsed()) return cmd_tensor(c, out);
    if (wl->parsed()) return cmd_wl(c, out);
  } catch (const SearchBudgetExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ccs::cli
