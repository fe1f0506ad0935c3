#pragma once

#include "transit/error.hpp"
#include "transit/rational.hpp"
#include "transit/space.hpp"
#include "transit/system.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace transit {

// A system description in the line-oriented text format (docs/format.md).
struct SystemDocument {
  enum class Backend { Finite, Symbolic };
  enum class Metric { Discrete, Cyclic, Rows };

  Backend backend = Backend::Finite;

  // Finite backend.
  std::size_t points = 0;
  Metric metric = Metric::Discrete;
  std::vector<std::vector<Rational>> distance;  // only for Metric::Rows
  std::vector<std::vector<Point>> maps;

  // Symbolic backend.
  unsigned alphabet = 0;
  struct Code {
    std::size_t window = 1;
    std::vector<Symbol> rule;
    friend bool operator==(const Code&, const Code&) = default;
  };
  std::vector<Code> codes;

  SequenceSpec sequence;

  // Named sets: point lists (finite) or cylinder words (symbolic).
  std::vector<std::pair<std::string, std::vector<Point>>> point_sets;
  std::vector<std::pair<std::string, std::vector<Block>>> cylinder_sets;

  FiniteSpace space() const;
  Ndds ndds() const;            // Throws Error(BackendMismatch) on a symbolic document.
  ShiftNdds shift_ndds() const; // Throws Error(BackendMismatch) on a finite document.
  // Throws Error(ParseError) for an unknown label.
  PointSet point_set(std::string_view label) const;
  CylinderSet cylinder_set(std::string_view label) const;

  friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

// A parse or validation failure at a 1-based line and column. `kind` is one of
// ParseError, MetricViolation, InvalidMap, InvalidSequence.
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode kind, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // "line:column: kind: message"
  std::string diagnostic() const;

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Never throws anything but DocumentError.
SystemDocument parse_document(std::string_view text);
std::string serialize(const SystemDocument& doc);

// Documents for systems built in code.
SystemDocument to_document(const Ndds& sys);

}  // namespace transit
