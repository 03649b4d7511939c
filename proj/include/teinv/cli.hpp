#pragma once

/**
 * @brief Command-line front door: products, inverses, law checks, solvers,
 *        and the Poisson demo over the tensor JSON interchange format.
 *
 * Every command writes its primary artifact to stdout (or to --out) and
 * reports failures as a single JSON object {"error":{"kind","message"}} on
 * stderr. Exit codes: 0 on success, 1 on numerical failure (index too high,
 * rank ambiguous, inconsistent system, violated law), 2 on usage or IO
 * errors. Output for fixed inputs and a fixed --seed is byte-stable.
 */

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "teinv/errors.hpp"
#include "teinv/gen_inverse.hpp"
#include "teinv/mls_solver.hpp"
#include "teinv/poisson.hpp"
#include "teinv/rol_laws.hpp"
#include "teinv/tensor.hpp"
#include "teinv/tensor_json.hpp"

namespace teinv {
namespace cli {

namespace cli_detail {

inline const char* kUsage =
    "usage: teinv <command> [arguments] [flags]\n"
    "\n"
    "commands:\n"
    "  mul A.json B.json                     Einstein product A*B\n"
    "  pinv A.json                           Moore-Penrose inverse\n"
    "  core A.json                           core inverse (needs index 1)\n"
    "  group A.json                          group inverse (needs index 1)\n"
    "  drazin A.json                         Drazin inverse\n"
    "  index A.json                          index and matricized rank sequence\n"
    "  check-law LAW A.json [B.json]         evaluate one law on given tensors\n"
    "  check-law LAW --random N [--seed S]   evaluate N generated instances\n"
    "  solve one-sided A.json B.json         solve A*X = B via the core inverse\n"
    "  solve two-sided C.json D.json B.json  solve C*X*D = B\n"
    "  poisson --m M [--rhs f.json]          Neumann grid solve, CSV output\n"
    "  convert A.json                        re-emit canonical tensor JSON\n"
    "\n"
    "flags:\n"
    "  --tol <float>     decision tolerance: rank factor for inverse/index,\n"
    "                    conclusion tolerance for check-law, consistency\n"
    "                    tolerance for solve/poisson\n"
    "  --seed <u64>      generator seed for --random (default 0)\n"
    "  --trials <n>      synonym for --random <n>\n"
    "  --out <path>      write the primary artifact to a file, not stdout\n"
    "  --reverse         check the converse direction of an equivalence law\n"
    "  --m <n>           poisson grid points per axis\n"
    "  --rhs <path>      poisson right-hand side grid (default: centered\n"
    "                    sine bump)\n"
    "  --heatmap <path>  also write gnuplot-style i,j,value triples\n";

struct Parsed {
  std::string command;
  std::vector<std::string> positionals;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> m;
  std::optional<std::string> rhs;
  std::optional<std::string> heatmap;
  bool reverse = false;
  bool help = false;
};

inline std::string error_json(const std::string& kind, const std::string& message) {
  nlohmann::json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j.dump();
}

inline double parse_double(const std::string& flag, const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects a number, got '" + text + "'");
  }
  if (pos != text.size()) {
    throw UsageError(flag + " expects a number, got '" + text + "'");
  }
  return value;
}

inline std::uint64_t parse_u64(const std::string& flag, const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects a non-negative integer, got '" + text + "'");
  }
  if (pos != text.size() || (!text.empty() && text[0] == '-')) {
    throw UsageError(flag + " expects a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

inline Parsed parse_args(const std::vector<std::string>& args) {
  Parsed p;
  std::size_t i = 0;
  auto value_of = [&](const std::string& flag) -> std::string {
    if (i + 1 >= args.size()) {
      throw UsageError(flag + " expects a value");
    }
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok == "--help" || tok == "-h" || tok == "help") {
      p.help = true;
    } else if (tok == "--tol") {
      p.tol = parse_double(tok, value_of(tok));
    } else if (tok == "--seed") {
      p.seed = parse_u64(tok, value_of(tok));
    } else if (tok == "--out") {
      p.out = value_of(tok);
    } else if (tok == "--trials" || tok == "--random") {
      p.trials = static_cast<std::size_t>(parse_u64(tok, value_of(tok)));
    } else if (tok == "--m") {
      p.m = static_cast<std::size_t>(parse_u64(tok, value_of(tok)));
    } else if (tok == "--rhs") {
      p.rhs = value_of(tok);
    } else if (tok == "--heatmap") {
      p.heatmap = value_of(tok);
    } else if (tok == "--reverse") {
      p.reverse = true;
    } else if (tok.size() >= 2 && tok[0] == '-' && tok[1] == '-') {
      throw UsageError("unknown flag '" + tok + "'");
    } else if (p.command.empty()) {
      p.command = tok;
    } else {
      p.positionals.push_back(tok);
    }
  }
  return p;
}

inline void emit(const Parsed& p, const std::string& text, std::ostream& out) {
  if (!p.out) {
    out << text;
    return;
  }
  std::ofstream file(*p.out, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + *p.out + "' for writing");
  }
  file << text;
  if (!file) {
    throw IoError("failed writing '" + *p.out + "'");
  }
}

inline void require_positionals(const Parsed& p, std::size_t n, const std::string& hint) {
  if (p.positionals.size() != n) {
    throw UsageError(p.command + " expects " + std::to_string(n) + " argument" +
                     (n == 1 ? "" : "s") + " (" + hint + "), got " +
                     std::to_string(p.positionals.size()));
  }
}

/** @brief Formats a tolerance like 1e-8 without zero-padded exponents. */
inline std::string format_tol(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", tol);
  std::string s(buf);
  const std::size_t e = s.find('e');
  if (e != std::string::npos) {
    std::size_t digits = e + 1;
    if (digits < s.size() && (s[digits] == '+' || s[digits] == '-')) ++digits;
    std::size_t first = digits;
    while (first + 1 < s.size() && s[first] == '0') ++first;
    s.erase(digits, first - digits);
  }
  return s;
}

inline InverseOptions inverse_options(const Parsed& p) {
  InverseOptions opts;
  if (p.tol) {
    opts.rank_tol_factor = *p.tol;
  }
  return opts;
}

inline int run_unary_inverse(const Parsed& p, std::ostream& out,
                             DenseTensor (*op)(const DenseTensor&, const InverseOptions&)) {
  require_positionals(p, 1, "A.json");
  const DenseTensor a = load_tensor(p.positionals[0]);
  emit(p, write_tensor_json(op(a, inverse_options(p))) + "\n", out);
  return 0;
}

inline int run_mul(const Parsed& p, std::ostream& out) {
  require_positionals(p, 2, "A.json B.json");
  const DenseTensor a = load_tensor(p.positionals[0]);
  const DenseTensor b = load_tensor(p.positionals[1]);
  emit(p, write_tensor_json(a * b) + "\n", out);
  return 0;
}

inline int run_index(const Parsed& p, std::ostream& out) {
  require_positionals(p, 1, "A.json");
  const IndexResult r = index(load_tensor(p.positionals[0]), inverse_options(p));
  nlohmann::json j;
  j["index"] = r.k;
  j["ranks"] = r.ranks;
  emit(p, j.dump() + "\n", out);
  return 0;
}

inline int run_check_law(const Parsed& p, std::ostream& out, std::ostream& err) {
  if (p.positionals.empty()) {
    throw UsageError("check-law expects a law id");
  }
  const LawId law = law_from_string(p.positionals[0]);
  if (p.reverse && !law_is_iff(law)) {
    throw UsageError("law " + to_string(law) + " is not an equivalence; only " +
                     "T3_3, T3_6, T4_1, T4_2, T4_3, T4_4 can be reversed");
  }
  LawOptions opts;
  if (p.tol) {
    opts.residual_tol = *p.tol;
  }
  const std::size_t files = p.positionals.size() - 1;

  if (p.trials) {
    if (files > 0) {
      throw UsageError("check-law takes tensor files or --random, not both");
    }
    if (*p.trials == 0) {
      throw UsageError("--random expects at least one trial");
    }
    const TensorShape shape{{2, 2}, {2, 2}};
    std::size_t ok = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < *p.trials; ++t) {
      const testkit::Generated g = generate_law_pair(law, shape, p.seed + t);
      const LawReport rep =
          p.reverse ? check_law_reverse(law, g.a, *g.b, opts)
                    : (g.b ? check_law(law, g.a, *g.b, opts) : check_law(law, g.a, opts));
      if (rep.implication_ok) ++ok;
      if (rep.conclusion_residual > worst && std::isfinite(rep.conclusion_residual)) {
        worst = rep.conclusion_residual;
      }
    }
    nlohmann::json j;
    j["all_ok"] = ok == *p.trials;
    j["implication_ok"] = ok;
    j["law"] = to_string(law);
    j["reversed"] = p.reverse;
    j["seed"] = p.seed;
    j["trials"] = *p.trials;
    j["worst_conclusion_residual"] = worst;
    emit(p, j.dump() + "\n", out);
    if (ok != *p.trials) {
      err << error_json("law_violation",
                        to_string(law) + " failed on " + std::to_string(*p.trials - ok) +
                            " of " + std::to_string(*p.trials) + " instances")
          << "\n";
      return 1;
    }
    return 0;
  }

  LawReport rep;
  if (law_arity(law) == 1) {
    if (files != 1) {
      throw UsageError("check-law " + to_string(law) + " expects 1 tensor file, got " +
                       std::to_string(files));
    }
    rep = check_law(law, load_tensor(p.positionals[1]), opts);
  } else {
    if (files != 2) {
      throw UsageError("check-law " + to_string(law) + " expects 2 tensor files, got " +
                       std::to_string(files));
    }
    const DenseTensor a = load_tensor(p.positionals[1]);
    const DenseTensor b = load_tensor(p.positionals[2]);
    rep = p.reverse ? check_law_reverse(law, a, b, opts) : check_law(law, a, b, opts);
  }
  emit(p, law_report_to_json(rep) + "\n", out);
  if (!rep.implication_ok) {
    err << error_json("law_violation", to_string(law) + " implication failed") << "\n";
    return 1;
  }
  return 0;
}

inline int run_solve(const Parsed& p, std::ostream& out, std::ostream& err) {
  if (p.positionals.empty() ||
      (p.positionals[0] != "one-sided" && p.positionals[0] != "two-sided")) {
    throw UsageError("solve expects 'one-sided' or 'two-sided' first");
  }
  SolveOptions opts;
  if (p.tol) {
    opts.solve_tol = *p.tol;
  }
  SolveOutcome outcome;
  if (p.positionals[0] == "one-sided") {
    require_positionals(p, 3, "one-sided A.json B.json");
    outcome = solve_one_sided(load_tensor(p.positionals[1]), load_tensor(p.positionals[2]),
                              opts);
  } else {
    require_positionals(p, 4, "two-sided C.json D.json B.json");
    outcome = solve_two_sided(load_tensor(p.positionals[1]), load_tensor(p.positionals[2]),
                              load_tensor(p.positionals[3]), opts);
  }
  emit(p, solve_outcome_to_json(outcome) + "\n", out);
  if (!outcome.solvable) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", outcome.certificate_residual);
    err << error_json("not_consistent",
                      "system is not solvable; certificate residual " + std::string(buf))
        << "\n";
    return 1;
  }
  return 0;
}

inline int run_poisson(const Parsed& p, std::ostream& out, std::ostream& err) {
  if (!p.m) {
    throw UsageError("poisson expects --m <grid points>");
  }
  require_positionals(p, 0, "poisson takes only flags");
  SolveOptions opts;
  if (p.tol) {
    opts.solve_tol = *p.tol;
  }
  const GridSpec spec{*p.m};
  const DenseTensor f = p.rhs ? load_tensor(*p.rhs) : centered_sine_rhs(*p.m);
  const PoissonSolution sol = solve_poisson(spec, f, opts);
  std::string text = grid_csv(sol.solution);
  text += sol.within_tol ? "residual<=" : "residual>";
  text += format_tol(opts.solve_tol);
  text += "\n";
  emit(p, text, out);
  if (p.heatmap) {
    std::ofstream file(*p.heatmap, std::ios::binary);
    if (!file) {
      throw IoError("cannot open '" + *p.heatmap + "' for writing");
    }
    char buf[64];
    for (std::size_t k = 0; k < *p.m; ++k) {
      for (std::size_t l = 0; l < *p.m; ++l) {
        std::snprintf(buf, sizeof(buf), "%.17g", sol.solution.at({k}, {l}).real());
        file << k << ',' << l << ',' << buf << '\n';
      }
      file << '\n';
    }
  }
  if (!sol.within_tol) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", sol.residual);
    err << error_json("residual", "poisson residual " + std::string(buf) +
                                      " exceeds tolerance " + format_tol(opts.solve_tol))
        << "\n";
    return 1;
  }
  return 0;
}

inline int run_convert(const Parsed& p, std::ostream& out) {
  require_positionals(p, 1, "A.json");
  emit(p, write_tensor_json(load_tensor(p.positionals[0])) + "\n", out);
  return 0;
}

inline DenseTensor cmd_pinv(const DenseTensor& a, const InverseOptions& o) {
  return moore_penrose(a, o);
}
inline DenseTensor cmd_core(const DenseTensor& a, const InverseOptions& o) {
  return core_inverse(a, o);
}
inline DenseTensor cmd_group(const DenseTensor& a, const InverseOptions& o) {
  return group_inverse(a, o);
}
inline DenseTensor cmd_drazin(const DenseTensor& a, const InverseOptions& o) {
  return drazin(a, o);
}

}  // namespace cli_detail

/** @brief Dispatches one invocation; returns the process exit code. */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  try {
    const Parsed p = parse_args(args);
    if (p.help || (p.command == "help" && p.positionals.empty())) {
      out << kUsage;
      return 0;
    }
    if (p.command.empty()) {
      throw UsageError("no subcommand given");
    }
    if (p.command == "mul") return run_mul(p, out);
    if (p.command == "pinv") return run_unary_inverse(p, out, &cmd_pinv);
    if (p.command == "core") return run_unary_inverse(p, out, &cmd_core);
    if (p.command == "group") return run_unary_inverse(p, out, &cmd_group);
    if (p.command == "drazin") return run_unary_inverse(p, out, &cmd_drazin);
    if (p.command == "index") return run_index(p, out);
    if (p.command == "check-law") return run_check_law(p, out, err);
    if (p.command == "solve") return run_solve(p, out, err);
    if (p.command == "poisson") return run_poisson(p, out, err);
    if (p.command == "convert") return run_convert(p, out);
    throw UsageError("unknown command '" + p.command + "'; run 'teinv help'");
  } catch (const Error& e) {
    err << cli_detail::error_json(e.kind(), e.what()) << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << cli_detail::error_json("internal", e.what()) << "\n";
    return 2;
  }
}

/** @brief Adapter for main(). */
inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cli
}  // namespace teinv
