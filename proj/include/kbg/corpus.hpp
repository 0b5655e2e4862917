#ifndef KBG_CORPUS_HPP_
#define KBG_CORPUS_HPP_

#include <iosfwd>
#include <string>

#include "kbg/report.hpp"

namespace kbg {

// Equation corpus: JSON lines of the form
//   {"word": <word grammar>, "group": "K"|"D"|"G", "target": <element grammar>, "vars": n}
// Each line is solved over the ball (dihedral case analysis for D, brute
// force otherwise); for G lines whose target lies in the embedded K and
// which have a ball solution, the transfer pipeline runs as well.
// Malformed lines become per-line error entries and fail the report.

struct CorpusOptions {
  BallBounds ball{2, 2};
};

Report run_corpus(std::istream& input, const CorpusOptions& options);
Report run_corpus_file(const std::string& path, const CorpusOptions& options);

}  // namespace kbg

#endif  // KBG_CORPUS_HPP_
