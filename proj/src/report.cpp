#include "kbg/report.hpp"

#include <algorithm>
#include <sstream>

#include "kbg/parse.hpp"

namespace kbg {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  Json check_list = Json::array();
  for (const Check& c : checks) {
    check_list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = check_list;
  j["witness"] = witness;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  if (!inputs.empty()) out << "inputs: " << inputs.dump() << "\n";
  if (!result.empty()) out << "result: " << result.dump() << "\n";
  for (const Check& c : checks) {
    out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  if (!witness.is_null()) out << "witness: " << witness.dump() << "\n";
  return out.str();
}

Json json_of(const FreeWord& w) { return print_word(w); }

Json json_of(const FreeAut& alpha) {
  Json moves = Json::array();
  for (const NielsenMove& move : alpha.moves()) {
    switch (move.kind) {
      case NielsenMove::Kind::Swap:
        moves.push_back(Json{{"move", "swap"}, {"i", move.i + 1}, {"j", move.j + 1}});
        break;
      case NielsenMove::Kind::Invert:
        moves.push_back(Json{{"move", "invert"}, {"i", move.i + 1}});
        break;
      case NielsenMove::Kind::RightMult:
        moves.push_back(
            Json{{"move", "right_mult"}, {"i", move.i + 1}, {"j", move.j + 1}, {"sign", move.sign}});
        break;
    }
  }
  Json images = Json::array();
  for (int i = 0; i < alpha.arity(); ++i) {
    images.push_back(print_word(alpha.generator_image(i)));
  }
  return Json{{"arity", alpha.arity()}, {"moves", moves}, {"images", images}};
}

namespace {

template <class Elt, class Printer>
Json tuple_json(const std::vector<Elt>& tuple, Printer print) {
  Json arr = Json::array();
  for (const Elt& e : tuple) arr.push_back(print(e));
  return arr;
}

}  // namespace

Json json_of(const TransferReport& rep) {
  Json j;
  j["word"] = print_word(rep.word);
  j["g_tuple"] = tuple_json(rep.input_tuple, print_g);
  j["value"] = print_g(rep.value_in_G);
  j["target"] = print_klein(rep.target);
  j["m"] = rep.m;
  j["u"] = print_word(rep.u);
  j["alpha"] = json_of(rep.alpha);
  j["pulled_tuple"] = tuple_json(rep.pulled_tuple, print_g);
  if (rep.renaming) {
    j["renaming"] = Json::array({rep.renaming->image()[0] + 1, rep.renaming->image()[1] + 1,
                                 rep.renaming->image()[2] + 1});
  } else {
    j["renaming"] = nullptr;
  }
  j["renamed_tuple"] = tuple_json(rep.renamed_tuple, print_g);
  j["hat_tuple"] = tuple_json(rep.hat_tuple, print_klein);
  j["k_solution"] = tuple_json(rep.k_solution, print_klein);
  j["verified"] = rep.verified;
  return j;
}

Json json_of(const Certificate& cert) {
  Json steps = Json::array();
  for (const CertStep& step : cert.steps()) {
    steps.push_back(Json{{"claim", step.claim},
                         {"check_id", step.check_id},
                         {"pass", step.pass},
                         {"witness", step.witness},
                         {"refs", step.refs}});
  }
  return Json{{"steps", steps}, {"verified", cert.verify()}};
}

Json json_of(const ProbeReport& rep) {
  Json witnesses = Json::array();
  for (const ProbeWitness& w : rep.sample_witnesses) {
    witnesses.push_back(Json{{"word", print_word(w.word)},
                             {"g_tuple", tuple_json(w.tuple, print_g)},
                             {"target", print_klein(w.target)},
                             {"k_solution", tuple_json(w.k_solution, print_klein)}});
  }
  return Json{{"words_enumerated", rep.words_enumerated},
              {"tuples_per_word", rep.tuples_per_word},
              {"evaluations", rep.evaluations},
              {"targets_in_K", rep.targets_in_K},
              {"transfers_run", rep.transfers_run},
              {"transfer_failures", rep.transfer_failures},
              {"bookkeeping_checks", rep.bookkeeping_checks},
              {"bookkeeping_failures", rep.bookkeeping_failures},
              {"oracle_queries", rep.oracle_queries},
              {"oracle_hits", rep.oracle_hits},
              {"oracle_misses", rep.oracle_misses},
              {"sample_witnesses", witnesses}};
}

Json json_of(const B2ClosureReport& rep) {
  Json cap = Json::array();
  for (const KleinElt& e : rep.closure_cap_K) cap.push_back(print_klein(e));
  return Json{{"centrality_checks", rep.centrality_checks},
              {"b2_central", rep.b2_central},
              {"closure_cap_K", cap},
              {"cap_is_even_b_powers", rep.cap_is_even_b_powers}};
}

}  // namespace kbg
