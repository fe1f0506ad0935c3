#pragma once

#include "transit/document.hpp"
#include "transit/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace transit {

enum class OutputFormat { Table, Structured };

struct CommandOptions {
  // Global flags.
  std::string backend = "auto";  // auto | finite | symbolic
  std::size_t horizon = 16;
  std::size_t depth = 4;
  std::uint64_t seed = 7;
  std::size_t samples = 1000;
  bool allow_imperfect = false;
  OutputFormat format = OutputFormat::Table;
  unsigned threads = 0;

  // Inputs.
  std::string document;  // path of the system document
  std::string target;    // second document: morphism codomain, product factor
  std::optional<Point> point;
  std::string word;      // symbolic point as a cylinder word
  std::string set;       // label in the SETS section
  std::string kind;      // orbit or invariance kind, empty for all
  std::string prop;      // property, empty for all
  std::string variant = "i";  // "all" for every condition
  std::string pi;        // "0,1,0,1"
  std::string mode = "semi";
  std::vector<std::size_t> perm;
  bool block = false;
  std::size_t offset = 0;
  std::string family_mode = "family";  // family | iterate
  bool allow_degenerate = false;
  bool no_exhaustive = false;
};

// The subcommands.
inline const std::vector<std::string> kCommands = {"orbit",   "invariance", "check",     "equiv-suite",
                                                   "lattice", "morphism",   "product",   "rearrange",
                                                   "gds",     "associate",  "cross-validate"};

// Runs one subcommand on documents loaded from the option paths. Throws
// Error (input errors, including DocumentError) for the caller to report.
Report run_command(const std::string& command, const CommandOptions& opt);
// Same with the document already parsed.
Report run_command(const std::string& command, const SystemDocument& doc, const CommandOptions& opt);

SystemDocument load_document(const std::string& path);

// Full command line. Exit codes: 0 all True, 1 some False, 2 some Unknown and
// no False, 3 input error.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace transit
