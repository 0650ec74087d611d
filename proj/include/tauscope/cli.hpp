#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "tauscope/localise.hpp"

namespace tauscope::cli {

using nlohmann::ordered_json;

// Line-oriented presentation format:
//   algebra <name>
//   vertices <id> <id> ...
//   arrow <name> : <src> -> <tgt>
//   relation <coeff>*<arrow>*<arrow> [+|- ...]
// Paths are written left-factor-last, so b*a is "a then b".  Lines after the
// header may come in any order; '#' starts a comment.  Throws ParseError
// with "line L, column C" diagnostics.
algebra::AlgebraPresentation parsePresentation(const std::string& text);
algebra::AlgebraPresentation loadPresentation(const std::string& path);
// Canonical text of a parsed presentation.
std::string normalisedText(const algebra::AlgebraPresentation& p);

struct SessionConfig {
  std::string input;
  std::string command;
  std::size_t dimCap = 60;
  std::size_t countCap = 512;
  std::size_t lengthCap = 64;
  unsigned long prime = 0;  // 0: rationals
  std::string out;
  std::string dot;
  std::string cacheDir;
  std::uint64_t seed = 0x5eed;
};

enum ExitCode : int { Ok = 0, InvariantFailed = 1, ParseFailed = 2, RepInfinite = 3, NonSplit = 4 };

// Census from the cache directory when present, else computed and stored.
census::Census loadOrComputeCensus(const algebra::AlgebraPtr& a, const algebra::AlgebraPresentation& p,
                                   const census::Caps& caps, const std::string& cacheDir);

ordered_json algebraJson(const algebra::Algebra& a);
ordered_json censusJson(const census::Census& c);
ordered_json complexJson(const census::Census& c, const silting::TwoTermComplex& s);
ordered_json classJson(const census::Census& c, const torsion::IdSet& t);
ordered_json localisationJson(const census::Census& c, const localise::ClassRecord& r);
ordered_json verifyJson(const census::Census& c, std::uint64_t seed, bool& ok);
// DOT digraph of the torsion lattice: edges are covering relations.
std::string hasseDot(const census::Census& c, const std::vector<torsion::IdSet>& classes);

// Runs one command, writing JSON (or DOT for hasse) to `out` unless the
// config names an output file.  Returns an ExitCode.
int runCommand(const SessionConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tauscope::cli
