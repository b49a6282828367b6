#include "burchlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "burchlab/burch.hpp"
#include "burchlab/errors.hpp"
#include "burchlab/families.hpp"
#include "burchlab/paper_suite.hpp"
#include "burchlab/session.hpp"
#include "burchlab/testing_hooks.hpp"

namespace burchlab {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string file;
  std::string format = "machine";
  std::string name;
  std::optional<int> steps;

  bool machine() const { return format == "machine"; }
};

std::optional<int> cap_from_env() {
  const char* raw = std::getenv("BURCHLAB_CAP");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 10000) throw UsageError(std::string("bad BURCHLAB_CAP '") + raw + "'");
  return static_cast<int>(value);
}

Session load_session(const Common& common) {
  if (common.file.empty()) throw UsageError("--file is required");
  std::stringstream text;
  if (common.file == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(common.file);
    if (!in) throw UsageError("cannot read '" + common.file + "'");
    text << in.rdbuf();
  }
  return parse_session(text.str(), cap_from_env());
}

const IdealHandle& lookup_ideal(const Session& s, const std::string& name) {
  if (s.has_ideal(name)) return s.ideal(name);
  auto q = s.quotients.find(name);
  if (q != s.quotients.end()) return s.ideal(q->second);
  throw UsageError("unknown ideal '" + name + "'");
}

/// Modules are taken as declared; an ideal I stands for S/I.
ModulePresentation lookup_quotient_module(const Session& s, const std::string& name) {
  if (s.has_module(name)) return s.module(name);
  const IdealHandle& i = lookup_ideal(s, name);
  return ModulePresentation::cyclic(i.ring(), std::nullopt, i.generators());
}

std::string join_bools(const std::vector<bool>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::string(values[i] ? "true" : "false");
  return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

void print_comment_block(std::ostream& out, const std::string& text) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
}

int cmd_gb(const Common& c, std::ostream& out) {
  Session s = load_session(c);
  std::vector<std::string> lines;
  if (s.has_module(c.name)) {
    const ModulePresentation& m = s.module(c.name);
    SubmodulePresentation sub{m.ring(), m.target_shifts(), m.columns()};
    for (const auto& g : sub.gb().generators()) lines.push_back(g.to_string());
  } else {
    for (const auto& g : lookup_ideal(s, c.name).gb().polynomials()) lines.push_back(g.to_string());
  }
  if (c.machine()) {
    out << "gb.size=" << lines.size() << "\n";
    for (std::size_t i = 0; i < lines.size(); ++i) out << "gb." << i + 1 << "=" << lines[i] << "\n";
  } else {
    out << "reduced Groebner basis of " << c.name << " (grevlex), " << lines.size() << " elements\n";
    for (const auto& line : lines) out << "  " << line << "\n";
  }
  return kExitOk;
}

int cmd_resolve(const Common& c, std::ostream& out) {
  Session s = load_session(c);
  ModulePresentation m = lookup_quotient_module(s, c.name);
  ResolutionSlice slice = resolve(m, c.steps.value_or(s.options.steps));
  check_resolution(slice);
  if (c.machine()) {
    out << "steps=" << slice.betti.steps() << "\n";
    out << "projdim=" << (slice.projdim ? std::to_string(*slice.projdim) : std::string("unknown")) << "\n";
    out << slice.betti.to_machine();
  } else {
    out << slice.betti.to_human();
    if (slice.projdim) out << "projective dimension " << *slice.projdim << "\n";
  }
  return kExitOk;
}

int cmd_burch(const Common& c, std::ostream& out, std::optional<std::size_t> trials, std::optional<std::uint64_t> seed,
              bool exact_depth0) {
  Session s = load_session(c);
  const IdealHandle& ideal = lookup_ideal(s, c.name);
  std::optional<BurchReport> report;
  if (exact_depth0) {
    if (!ideal.is_zero() && !ideal.is_unit()) {
      int depth = depth_of_quotient(ideal).depth;
      if (depth > 0) {
        out << (c.machine() ? "# " : "") << "refused: depth " << depth << " > 0 with --exact-depth0\n";
        return kExitMath;
      }
    }
    report.emplace(burch_index_depth0(ideal));
  } else {
    report.emplace(burch_index_graded(ideal, trials.value_or(s.options.trials), seed.value_or(s.options.seed)));
  }
  if (c.machine()) {
    if (!report->note.empty()) out << "# " << report->note << "\n";
    out << report->serialize();
    if (!report->witness.empty()) {
      std::vector<std::string> forms;
      for (const auto& f : report->witness) forms.push_back(f.to_string());
      out << "burch.witness=" << join(forms) << "\n";
    }
  } else {
    out << "Burch index of S/" << c.name << ": " << report->index << "\n";
    out << "depth: " << report->depth << "\n";
    if (report->burch_ideal) out << "Burch ideal: " << report->burch_ideal->to_string(true) << "\n";
    if (report->method == BurchMethod::kSampled)
      out << "sampled over " << report->trials << " linear sequences (seed " << report->seed << "), "
          << report->accepted_trials << " regular\n";
    if (report->shortcut) out << "socle-degree criterion applies\n";
    if (!report->note.empty()) out << "note: " << report->note << "\n";
  }
  return kExitOk;
}

int cmd_lin(const Common& c, std::ostream& out) {
  Session s = load_session(c);
  ModulePresentation m =
      s.has_module(c.name) ? s.module(c.name) : ModulePresentation::from_ideal(lookup_ideal(s, c.name));
  auto lin = lin_profile(m, c.steps.value_or(2));
  if (c.machine()) {
    out << "lin=" << join(lin) << "\n";
  } else {
    for (std::size_t i = 0; i < lin.size(); ++i) out << "lin_" << i + 1 << " = " << lin[i] << "\n";
  }
  return kExitOk;
}

int cmd_summands(const Common& c, std::ostream& out) {
  Session s = load_session(c);
  if (!s.has_module(c.name)) throw UsageError("unknown module '" + c.name + "'");
  auto profile = summand_profile(s.module(c.name), c.steps.value_or(s.options.steps));
  out << (c.machine() ? "summands=" : "") << join_bools(profile) << "\n";
  return kExitOk;
}

int cmd_depth(const Common& c, std::ostream& out) {
  Session s = load_session(c);
  DepthReport report = depth_of_module(lookup_quotient_module(s, c.name));
  if (c.machine()) {
    out << "projdim=" << report.projdim << "\ndepth=" << report.depth << "\n";
  } else {
    out << "projective dimension " << report.projdim << ", depth " << report.depth << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, std::ostream& out, const std::optional<std::string>& only, const std::string& fault) {
  std::optional<testing::ScopedFault> guard;
  if (fault == "broken-colon") {
    guard.emplace(testing::Fault::kBrokenColon);
  } else if (!fault.empty()) {
    throw UsageError("unknown fault '" + fault + "'");
  }
  std::vector<GoldenOutcome> outcomes;
  try {
    outcomes = run_golden(only);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    if (only) throw UsageError(e.what());
    throw;
  }
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed();
    if (c.machine()) {
      out << "case." << o.id << "=" << (o.passed() ? "pass" : "fail") << "\n";
      for (const auto& m : o.mismatches) out << "mismatch." << o.id << "=" << m << "\n";
    } else {
      out << (o.passed() ? "PASS " : "FAIL ") << o.id << ": " << o.description << "\n";
      for (const auto& m : o.mismatches) out << "  - " << m << "\n";
    }
  }
  out << (c.machine() ? "passed=" : "passed ") << passed << "/" << outcomes.size() << "\n";
  return passed == outcomes.size() ? kExitOk : kExitMath;
}

int cmd_random(const Common& c, std::ostream& out, const std::string& family_text, std::size_t trials,
               std::uint64_t seed, std::size_t points) {
  auto family = parse_family(family_text);
  if (!family) throw UsageError("unknown family '" + family_text + "'");
  FamilyOptions options;
  options.points = points;
  std::size_t passed = 0;
  for (std::size_t t = 1; t <= trials; ++t) {
    TrialResult result;
    try {
      result = run_trial(*family, seed, t, options);
    } catch (const DegreeCapExceeded&) {
      throw;
    } catch (const Error& e) {
      result.passed = false;
      result.line = std::string("error: ") + e.what();
    }
    passed += result.passed;
    if (c.machine()) {
      out << "trial." << t << "=" << (result.passed ? "pass" : "fail") << " " << result.line << "\n";
      if (!result.passed) print_comment_block(out, result.session);
    } else {
      out << "trial " << t << ": " << (result.passed ? "PASS " : "FAIL ") << result.line << "\n";
      if (!result.passed && !result.session.empty()) out << result.session;
    }
  }
  if (c.machine()) {
    out << "family=" << family_name(*family) << "\nseed=" << seed << "\npassed=" << passed << "/" << trials << "\n";
  } else {
    out << family_name(*family) << ": " << passed << "/" << trials << " passed (seed " << seed << ")\n";
  }
  return passed == trials ? kExitOk : kExitMath;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"burchlab: Burch ideals, resolutions and syzygy profiles over prime fields", "burchlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--file", common.file, "session file ('-' for stdin)");
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"human", "machine"}));

  auto named = [&](const std::string& cmd, const std::string& help, const std::string& what) {
    CLI::App* sub = app.add_subcommand(cmd, help);
    sub->add_option("name", common.name, what)->required();
    return sub;
  };
  auto with_steps = [&](CLI::App* sub) {
    sub->add_option("--steps", common.steps, "number of syzygy steps")->check(CLI::Range(1, 64));
    return sub;
  };

  CLI::App* gb = named("gb", "reduced Groebner basis of an ideal or module", "ideal or module name");
  CLI::App* res = with_steps(named("resolve", "Betti table of a minimal resolution", "module, or ideal I for S/I"));
  CLI::App* burch = named("burch", "Burch index of S/I", "ideal name");
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  bool exact = false;
  burch->add_option("--trials", trials, "sampled linear sequences for positive depth");
  burch->add_option("--seed", seed, "seed for the sampled sequences");
  burch->add_flag("--exact-depth0", exact, "refuse positive depth instead of sampling");
  CLI::App* lin = with_steps(named("lin", "linearity profile lin_1..lin_steps", "module or ideal name"));
  CLI::App* summands = with_steps(named("summands", "whether k splits off syz_i, i = 1..steps", "module name"));
  CLI::App* depth = named("depth", "depth and projective dimension over S", "module, or ideal I for S/I");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in golden suite");
  std::optional<std::string> only;
  std::string fault;
  verify->add_option("--only", only, "run a single case");
  verify->add_option("--inject-fault", fault, "deliberate engine fault (broken-colon)");

  CLI::App* random = app.add_subcommand("random", "random instance families");
  std::string family;
  std::size_t random_trials = 10, points = 5;
  std::uint64_t random_seed = 0;
  random->add_option("--family", family, "jn|fibre|torind|points|dim2|mainthm|extension")->required();
  random->add_option("--trials", random_trials, "number of trials");
  random->add_option("--seed", random_seed, "seed");
  random->add_option("--points", points, "number of points (points family)")->check(CLI::Range(2, 30));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (common.machine()) {
    out << "# burchlab";
    for (const auto& a : args) out << " " << a;
    out << "\n";
  }
  try {
    if (gb->parsed()) return cmd_gb(common, out);
    if (res->parsed()) return cmd_resolve(common, out);
    if (burch->parsed()) return cmd_burch(common, out, trials, seed, exact);
    if (lin->parsed()) return cmd_lin(common, out);
    if (summands->parsed()) return cmd_summands(common, out);
    if (depth->parsed()) return cmd_depth(common, out);
    if (verify->parsed()) return cmd_verify(common, out, only, fault);
    if (random->parsed()) return cmd_random(common, out, family, random_trials, random_seed, points);
  } catch (const DegreeCapExceeded& e) {
    err << "burchlab: resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::bad_alloc&) {
    err << "burchlab: out of memory\n";
    return kExitCap;
  } catch (const UsageError& e) {
    err << "burchlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "burchlab: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotArtinian& e) {
    err << "burchlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "burchlab: check failed: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}

}  // namespace burchlab
