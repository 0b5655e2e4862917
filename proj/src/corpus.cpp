#include "kbg/corpus.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "kbg/parse.hpp"

namespace kbg {

namespace {

template <class G, class Printer>
void solve_line(const FreeWord& word, const typename G::Elt& target, int nvars,
                const BallBounds& ball, Printer print, Json& entry) {
  Equation<G> eq{word, target};
  const auto solution = brute_force_solve<G>(eq, ball, nvars);
  if (solution) {
    entry["status"] = "found";
    Json tuple = Json::array();
    for (const auto& e : *solution) tuple.push_back(print(e));
    entry["solution"] = tuple;
  } else {
    entry["status"] = "not_found";
    entry["solution"] = nullptr;
  }
}

Json process_line(const std::string& line, std::size_t line_no, const CorpusOptions& options) {
  Json entry;
  entry["line"] = line_no;
  try {
    const Json obj = Json::parse(line);
    const std::string word_text = obj.at("word").get<std::string>();
    const std::string group_text = obj.at("group").get<std::string>();
    const std::string target_text = obj.at("target").get<std::string>();
    const FreeWord word = parse_word(word_text);
    int nvars = obj.value("vars", word.arity());
    if (nvars < word.arity()) {
      throw DomainError("ArityMismatch", "vars smaller than the word arity");
    }
    entry["word"] = word_text;
    entry["group"] = group_text;
    entry["target"] = target_text;
    entry["vars"] = nvars;

    const GroupId gid = parse_group_id(group_text);
    switch (gid) {
      case GroupId::K:
        solve_line<Klein>(word, parse_klein(target_text), nvars, options.ball, print_klein,
                          entry);
        break;
      case GroupId::D: {
        const DihedralElt target = parse_dihedral(target_text);
        const DihedralSolution sol = dihedral_solve({word, target}, options.ball, nvars);
        entry["method"] = sol.method == DihedralMethod::TrivialTarget ? "trivial_target"
                          : sol.method == DihedralMethod::OddSumInvolution
                              ? "odd_sum_involution"
                              : "ball_search";
        if (sol.tuple) {
          entry["status"] = "found";
          Json tuple = Json::array();
          for (const DihedralElt& e : *sol.tuple) tuple.push_back(print_dihedral(e));
          entry["solution"] = tuple;
        } else {
          entry["status"] = "not_found";
          entry["solution"] = nullptr;
        }
        break;
      }
      case GroupId::G: {
        const GElt target = parse_g(target_text);
        solve_line<Ambient>(word, target, nvars, options.ball, print_g, entry);
        if (entry["status"] == "found" && decompose_K(target)) {
          std::vector<GElt> tuple;
          for (const auto& text : entry["solution"]) {
            tuple.push_back(parse_g(text.get<std::string>()));
          }
          entry["transfer"] = json_of(transfer_solution(word, tuple));
        }
        break;
      }
      case GroupId::ZD:
        throw DomainError("CarrierMismatch", "corpus lines cover K, D and G only");
    }
  } catch (const Json::exception& e) {
    entry["status"] = "error";
    entry["error"] = std::string("malformed JSON: ") + e.what();
  } catch (const Error& e) {
    entry["status"] = "error";
    entry["error"] = e.kind() + ": " + e.what();
  }
  return entry;
}

}  // namespace

Report run_corpus(std::istream& input, const CorpusOptions& options) {
  Report report;
  report.command = "run-corpus";
  report.inputs = Json{{"lmax", options.ball.lmax}, {"kmax", options.ball.kmax}};

  Json lines = Json::array();
  std::size_t found = 0, not_found = 0, errors = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json entry = process_line(line, line_no, options);
    const std::string status = entry["status"].get<std::string>();
    if (status == "found") ++found;
    if (status == "not_found") ++not_found;
    if (status == "error") ++errors;
    lines.push_back(std::move(entry));
  }

  report.result = Json{{"lines", std::move(lines)},
                       {"summary", Json{{"total", found + not_found + errors},
                                        {"found", found},
                                        {"not_found", not_found},
                                        {"errors", errors}}}};
  report.checks.push_back(
      {"corpus-well-formed", errors == 0, std::to_string(errors) + " malformed line(s)"});
  return report;
}

Report run_corpus_file(const std::string& path, const CorpusOptions& options) {
  std::ifstream in(path);
  if (!in) {
    Report report;
    report.command = "run-corpus";
    report.inputs = Json{{"path", path}};
    report.checks.push_back({"corpus-readable", false, "cannot open " + path});
    return report;
  }
  Report report = run_corpus(in, options);
  report.inputs["path"] = path;
  return report;
}

}  // namespace kbg
