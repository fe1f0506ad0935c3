#pragma once

#include "transit/verdict.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace transit {

// One line of a report. For property checks the verdict is the property's
// value; for suite checks True means the asserted relation held and False
// means it was violated.
struct Record {
  std::string property;
  std::string variant;
  Verdict verdict = Verdict::yes();
  std::string witness;
  // Free-form tag without spaces, e.g. the condition group or "interpretation".
  std::string note;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t unknown = 0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const noexcept { return command_; }
  void set_command(std::string c) { command_ = std::move(c); }
  const std::vector<Record>& records() const noexcept { return records_; }

  void add(Record r) { records_.push_back(std::move(r)); }
  void add(std::string property, std::string variant, Verdict v, std::string witness = {}, std::string note = {});
  // Records a suite assertion: pass when `holds`, fail otherwise.
  void check(std::string property, std::string variant, bool holds, std::string witness = {}, std::string note = {});
  // Appends all records of `other`, prefixing their notes with `tag` when given.
  void append(const Report& other, const std::string& tag = {});

  Summary summary() const;
  bool all_pass() const { return summary().fail == 0; }
  std::size_t failures() const { return summary().fail; }
  // Records with a False verdict.
  std::vector<Record> failed() const;

  // command:/record:/summary: lines; byte-stable for identical content.
  std::string structured() const;
  std::string table() const;

  // 0 all True, 1 some False, 2 some Unknown and none False.
  int exit_code() const;

 private:
  std::string command_;
  std::vector<Record> records_;
};

}  // namespace transit
