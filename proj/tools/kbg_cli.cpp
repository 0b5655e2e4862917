// kbg: exact arithmetic and equation solving for the Klein bottle group K,
// the infinite dihedral group, a concrete ambient group containing K, and
// Z x Dinf; plus the solution-transfer, probe and certification engines.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "kbg/closure.hpp"
#include "kbg/corpus.hpp"
#include "kbg/parse.hpp"
#include "kbg/report.hpp"
#include "kbg/selfcheck.hpp"

namespace {

using namespace kbg;

void emit(const Report& rep, bool json) {
  if (json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
}

// Dispatch a generic callable over the runtime group id.
template <class F>
auto with_group(GroupId gid, F&& f) {
  switch (gid) {
    case GroupId::K: return f(Klein{});
    case GroupId::D: return f(Dihedral{});
    case GroupId::G: return f(Ambient{});
    default: return f(ZxD{});
  }
}

KleinElt parse_elt(Klein, const std::string& s) { return parse_klein(s); }
DihedralElt parse_elt(Dihedral, const std::string& s) { return parse_dihedral(s); }
GElt parse_elt(Ambient, const std::string& s) { return parse_g(s); }
ZxDElt parse_elt(ZxD, const std::string& s) { return parse_zxd(s); }

std::string print_elt(const KleinElt& e) { return print_klein(e); }
std::string print_elt(const DihedralElt& e) { return print_dihedral(e); }
std::string print_elt(const GElt& e) { return print_g(e); }
std::string print_elt(const ZxDElt& e) { return print_zxd(e); }

int emit_value(const std::string& command, const Json& inputs, const std::string& value,
               bool json) {
  if (!json) {
    std::cout << value << "\n";
    return 0;
  }
  Report rep;
  rep.command = command;
  rep.inputs = inputs;
  rep.result = Json{{"value", value}};
  emit(rep, true);
  return rep.exit_status();
}

struct CommonFlags {
  bool json = false;
  std::string group = "K";
  i64 lmax = 2;
  i64 kmax = 2;
  i64 maxlen = 4;
  int vars = 0;  // 0: use the word arity
};

std::vector<GElt> parse_g_tuple(const std::vector<std::string>& texts) {
  std::vector<GElt> tuple;
  tuple.reserve(texts.size());
  for (const std::string& t : texts) tuple.push_back(parse_g(t));
  return tuple;
}

int run_transfer(const std::string& word_text, const std::vector<std::string>& assigns,
                 bool json) {
  const FreeWord word = parse_word(word_text);
  const std::vector<GElt> tuple = parse_g_tuple(assigns);
  const TransferReport transfer = transfer_solution(word, tuple);
  Report rep;
  rep.command = "transfer";
  rep.inputs = Json{{"word", word_text}, {"assign", assigns}};
  rep.result = json_of(transfer);
  rep.checks.push_back({"transfer-verified", transfer.verified,
                        "K-solution evaluates exactly to the target"});
  emit(rep, json);
  return rep.exit_status();
}

int run_nielsen(const std::string& word_text, bool json) {
  const FreeWord word = parse_word(word_text);
  const NielsenNormalForm nf = nielsen_normalize(word);
  const bool postcondition =
      nf.alpha.apply(word) == FreeWord::generator(word.arity(), 0, nf.m) * nf.u &&
      nf.u.in_commutator_subgroup();
  Report rep;
  rep.command = "nielsen";
  rep.inputs = Json{{"word", word_text}};
  rep.result = Json{{"m", nf.m}, {"u", print_word(nf.u)}, {"alpha", json_of(nf.alpha)}};
  rep.checks.push_back({"normal-form-postcondition", postcondition,
                        "alpha(w) = x1^m*u with u in the commutator subgroup"});
  emit(rep, json);
  return rep.exit_status();
}

int run_probe(i64 maxlen, int vars, const BallBounds& g_ball, bool with_oracle, bool json) {
  ProbeConfig cfg;
  cfg.max_word_len = maxlen;
  cfg.nvars = vars > 0 ? vars : 2;
  cfg.g_ball = g_ball;
  cfg.k_ball = {maxlen, 2 * maxlen};
  cfg.run_oracle = with_oracle;
  const ProbeReport probe = probe_verbal_closedness(cfg);
  Report rep;
  rep.command = "probe";
  rep.inputs = Json{{"maxlen", cfg.max_word_len}, {"vars", cfg.nvars},
                    {"lmax", cfg.g_ball.lmax},   {"kmax", cfg.g_ball.kmax},
                    {"oracle_lmax", cfg.k_ball.lmax}, {"oracle_kmax", cfg.k_ball.kmax}};
  rep.result = json_of(probe);
  rep.checks.push_back({"transfer-soundness", probe.transfer_failures == 0,
                        std::to_string(probe.transfers_run) + " transfers"});
  rep.checks.push_back({"deg-f-bookkeeping", probe.bookkeeping_failures == 0,
                        std::to_string(probe.bookkeeping_checks) + " checks"});
  if (with_oracle) {
    rep.checks.push_back({"oracle-agreement", probe.oracle_misses == 0,
                          std::to_string(probe.oracle_queries) + " brute-force queries"});
  }
  emit(rep, json);
  return rep.exit_status();
}

int run_certify(bool json) {
  const Certificate cert = no_retraction_certificate();
  Report rep;
  rep.command = "certify-no-retraction";
  rep.result = json_of(cert);
  rep.checks.push_back({"certificate-verified", cert.verify(),
                        std::to_string(cert.steps().size()) + " steps"});
  if (json) {
    emit(rep, true);
  } else {
    std::cout << "command: certify-no-retraction\n";
    const auto& steps = cert.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::cout << "  step " << i + 1 << (steps[i].pass ? " [pass] " : " [FAIL] ")
                << steps[i].claim << "\n"
                << "         check: " << steps[i].check_id
                << "; witness: " << steps[i].witness << "\n";
    }
    std::cout << (cert.verify() ? "certificate verified\n" : "certificate FAILED\n");
  }
  return rep.exit_status();
}

int cmd_selfcheck(const std::string& profile_name, bool json) {
  const Profile profile = profile_name == "full" ? Profile::Full : Profile::Quick;
  const std::vector<SuiteResult> suites = run_selfcheck(profile);
  bool all_pass = true;
  i64 total_checks = 0;
  for (const SuiteResult& s : suites) {
    all_pass = all_pass && s.pass;
    total_checks += s.checks;
  }
  if (json) {
    Report rep;
    rep.command = "selfcheck";
    rep.inputs = Json{{"profile", profile_name}};
    rep.result = Json{{"conventions", conventions_note()}, {"total_checks", total_checks}};
    for (const SuiteResult& s : suites) {
      rep.checks.push_back({s.name, s.pass,
                            s.pass ? std::to_string(s.checks) + " checks" : s.detail});
    }
    emit(rep, true);
    return rep.exit_status();
  }
  std::cout << conventions_note() << "\n";
  for (const SuiteResult& s : suites) {
    std::cout << (s.pass ? "[pass] " : "[FAIL] ") << s.name << " (" << s.checks
              << " checks)";
    if (!s.pass) std::cout << " -- " << s.detail;
    std::cout << "\n";
  }
  std::cout << "selfcheck: " << (all_pass ? "all suites passed" : "FAILURES PRESENT")
            << ", " << total_checks << " checks total\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the Klein bottle group and its ambient group"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string lhs, rhs, word_text, target_text, elem_text, corpus_path;
  std::string profile = "quick";
  i64 exponent = 1;
  std::vector<std::string> assigns;
  bool no_oracle = false;

  const auto add_group_flag = [&flags](CLI::App* cmd) {
    cmd->add_option("--group", flags.group, "carrier: K, D, G or ZD")
        ->check(CLI::IsMember({"K", "D", "G", "ZD"}));
  };
  const auto add_json_flag = [&flags](CLI::App* cmd) {
    cmd->add_flag("--json", flags.json, "emit a JSON report");
  };
  const auto add_ball_flags = [&flags](CLI::App* cmd) {
    cmd->add_option("--lmax", flags.lmax, "bound on |l| (and |i|)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--kmax", flags.kmax, "bound on each |k_i|")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* c_mul = app.add_subcommand("mul", "product of two elements");
  c_mul->add_option("lhs", lhs, "left factor")->required();
  c_mul->add_option("rhs", rhs, "right factor")->required();
  add_group_flag(c_mul);
  add_json_flag(c_mul);

  CLI::App* c_inv = app.add_subcommand("inv", "inverse of an element");
  c_inv->add_option("elem", elem_text, "element")->required();
  add_group_flag(c_inv);
  add_json_flag(c_inv);

  CLI::App* c_pow = app.add_subcommand("pow", "integer power of an element");
  c_pow->add_option("elem", elem_text, "element")->required();
  c_pow->add_option("n", exponent, "exponent")->required();
  add_group_flag(c_pow);
  add_json_flag(c_pow);

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a word at a tuple");
  c_eval->add_option("--word", word_text, "word in x1..x9")->required();
  c_eval->add_option("--assign", assigns, "one element per variable")->required();
  add_group_flag(c_eval);
  add_json_flag(c_eval);

  CLI::App* c_solve = app.add_subcommand("solve", "brute-force equation search in a ball");
  c_solve->add_option("--word", word_text)->required();
  c_solve->add_option("--target", target_text)->required();
  c_solve->add_option("--vars", flags.vars, "number of unknowns (default: word arity)")
      ->check(CLI::NonNegativeNumber);
  add_group_flag(c_solve);
  add_json_flag(c_solve);
  add_ball_flags(c_solve);

  CLI::App* c_dsolve = app.add_subcommand("dihedral-solve",
                                          "case analysis solver over the dihedral group");
  c_dsolve->add_option("--word", word_text)->required();
  c_dsolve->add_option("--target", target_text)->required();
  c_dsolve->add_option("--vars", flags.vars)->check(CLI::NonNegativeNumber);
  add_json_flag(c_dsolve);
  add_ball_flags(c_dsolve);

  CLI::App* c_transfer = app.add_subcommand(
      "transfer", "carry a G-solution of w = h (h in K) to a K-solution");
  c_transfer->add_option("--word", word_text)->required();
  c_transfer->add_option("--assign", assigns, "G elements, one per variable")->required();
  add_json_flag(c_transfer);

  CLI::App* c_nielsen =
      app.add_subcommand("nielsen", "change of variables to the x1^m*u normal form");
  c_nielsen->add_option("--word", word_text)->required();
  add_json_flag(c_nielsen);

  CLI::App* c_phi = app.add_subcommand("phi", "image in Z x Dinf of a G element");
  c_phi->add_option("elem", elem_text)->required();
  add_json_flag(c_phi);

  CLI::App* c_retract =
      app.add_subcommand("retract", "retraction H -> K on the index-two subgroup");
  c_retract->add_option("elem", elem_text)->required();
  add_json_flag(c_retract);

  CLI::App* c_probe = app.add_subcommand(
      "probe", "exhaustive transfer probe over words and G-ball tuples");
  i64 probe_lmax = 1, probe_kmax = 1;
  c_probe->add_option("--maxlen", flags.maxlen, "word length bound")
      ->check(CLI::NonNegativeNumber);
  c_probe->add_option("--vars", flags.vars, "number of variables (default 2)")
      ->check(CLI::NonNegativeNumber);
  c_probe->add_flag("--no-oracle", no_oracle, "skip the brute-force cross-check");
  c_probe->add_option("--lmax", probe_lmax, "G-ball bound on |l|")
      ->check(CLI::NonNegativeNumber);
  c_probe->add_option("--kmax", probe_kmax, "G-ball bound on each |k_i|")
      ->check(CLI::NonNegativeNumber);
  add_json_flag(c_probe);

  CLI::App* c_certify =
      app.add_subcommand("certify-no-retraction", "machine-checked no-retraction chain");
  add_json_flag(c_certify);

  CLI::App* c_corpus = app.add_subcommand("run-corpus", "solve a JSON-lines equation file");
  c_corpus->add_option("path", corpus_path, "corpus file")->required();
  add_json_flag(c_corpus);
  add_ball_flags(c_corpus);

  CLI::App* c_selfcheck = app.add_subcommand("selfcheck", "run every invariant suite");
  c_selfcheck->add_option("--profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  add_json_flag(c_selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const GroupId gid = parse_group_id(flags.group);
    if (app.got_subcommand(c_mul)) {
      return with_group(gid, [&](auto tag) {
        using G = decltype(tag);
        const auto value = G::mul(parse_elt(tag, lhs), parse_elt(tag, rhs));
        return emit_value("mul", Json{{"group", flags.group}, {"lhs", lhs}, {"rhs", rhs}},
                          print_elt(value), flags.json);
      });
    }
    if (app.got_subcommand(c_inv)) {
      return with_group(gid, [&](auto tag) {
        using G = decltype(tag);
        return emit_value("inv", Json{{"group", flags.group}, {"elem", elem_text}},
                          print_elt(G::inv(parse_elt(tag, elem_text))), flags.json);
      });
    }
    if (app.got_subcommand(c_pow)) {
      return with_group(gid, [&](auto tag) {
        using G = decltype(tag);
        return emit_value(
            "pow", Json{{"group", flags.group}, {"elem", elem_text}, {"n", exponent}},
            print_elt(G::pow(parse_elt(tag, elem_text), exponent)), flags.json);
      });
    }
    if (app.got_subcommand(c_eval)) {
      const FreeWord word = parse_word(word_text);
      return with_group(gid, [&](auto tag) {
        using G = decltype(tag);
        std::vector<typename G::Elt> tuple;
        for (const std::string& a : assigns) tuple.push_back(parse_elt(tag, a));
        return emit_value("eval",
                          Json{{"group", flags.group}, {"word", word_text}, {"assign", assigns}},
                          print_elt(evaluate_word<G>(word, tuple)), flags.json);
      });
    }
    if (app.got_subcommand(c_solve)) {
      const FreeWord word = parse_word(word_text);
      const int nvars = flags.vars > 0 ? flags.vars : std::max(word.arity(), 1);
      return with_group(gid, [&](auto tag) {
        using G = decltype(tag);
        const Equation<G> eq{word, parse_elt(tag, target_text)};
        const auto solution = brute_force_solve<G>(eq, {flags.lmax, flags.kmax}, nvars);
        Report rep;
        rep.command = "solve";
        rep.inputs = Json{{"group", flags.group}, {"word", word_text},
                          {"target", target_text}, {"vars", nvars},
                          {"lmax", flags.lmax},    {"kmax", flags.kmax}};
        if (solution) {
          Json tuple = Json::array();
          for (const auto& e : *solution) tuple.push_back(print_elt(e));
          rep.result = Json{{"status", "found"}, {"solution", tuple}};
        } else {
          rep.result = Json{{"status", "not_found"}, {"solution", nullptr}};
        }
        if (flags.json) {
          emit(rep, true);
        } else if (solution) {
          Json tuple = rep.result["solution"];
          std::string line;
          for (const auto& s : tuple) line += (line.empty() ? "" : " ") + s.get<std::string>();
          std::cout << line << "\n";
        } else {
          std::cout << "not found in the ball\n";
        }
        return 0;  // NotFound is a result, not a failure
      });
    }
    if (app.got_subcommand(c_dsolve)) {
      const FreeWord word = parse_word(word_text);
      const int nvars = flags.vars > 0 ? flags.vars : std::max(word.arity(), 1);
      const Equation<Dihedral> eq{word, parse_dihedral(target_text)};
      const DihedralSolution sol = dihedral_solve(eq, {flags.lmax, flags.kmax}, nvars);
      Report rep;
      rep.command = "dihedral-solve";
      rep.inputs = Json{{"word", word_text}, {"target", target_text}, {"vars", nvars},
                        {"kmax", flags.kmax}};
      const std::string method = sol.method == DihedralMethod::TrivialTarget
                                     ? "trivial_target"
                                 : sol.method == DihedralMethod::OddSumInvolution
                                     ? "odd_sum_involution"
                                     : "ball_search";
      Json solution = nullptr;
      if (sol.tuple) {
        solution = Json::array();
        for (const DihedralElt& e : *sol.tuple) solution.push_back(print_dihedral(e));
      }
      rep.result = Json{{"status", sol.tuple ? "found" : "not_found"},
                        {"method", method},
                        {"solution", solution}};
      if (flags.json) {
        emit(rep, true);
      } else if (sol.tuple) {
        std::string line;
        for (const auto& s : rep.result["solution"]) {
          line += (line.empty() ? "" : " ") + s.get<std::string>();
        }
        std::cout << line << "  (" << method << ")\n";
      } else {
        std::cout << "not found (" << method << ")\n";
      }
      return 0;
    }
    if (app.got_subcommand(c_transfer)) return run_transfer(word_text, assigns, flags.json);
    if (app.got_subcommand(c_nielsen)) return run_nielsen(word_text, flags.json);
    if (app.got_subcommand(c_phi)) {
      return emit_value("phi", Json{{"elem", elem_text}},
                        print_zxd(phi(parse_g(elem_text))), flags.json);
    }
    if (app.got_subcommand(c_retract)) {
      return emit_value("retract", Json{{"elem", elem_text}},
                        print_klein(rho_retract(parse_g(elem_text))), flags.json);
    }
    if (app.got_subcommand(c_probe)) {
      return run_probe(flags.maxlen, flags.vars, {probe_lmax, probe_kmax}, !no_oracle,
                       flags.json);
    }
    if (app.got_subcommand(c_certify)) return run_certify(flags.json);
    if (app.got_subcommand(c_corpus)) {
      const Report rep = run_corpus_file(corpus_path, {{flags.lmax, flags.kmax}});
      emit(rep, flags.json);
      return rep.exit_status();
    }
    if (app.got_subcommand(c_selfcheck)) return cmd_selfcheck(profile, flags.json);
  } catch (const kbg::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const kbg::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}
