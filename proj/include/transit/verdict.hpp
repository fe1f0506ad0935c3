#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace transit {

// Three-valued answer for properties quantified over infinite index sets.
//
// A verdict without a horizon is exact. A True verdict carrying a horizon is
// evidence gathered up to that horizon (bounded search, no counterexample).
// Unknown always carries the horizon at which the search stopped. False is
// only ever returned when a counterexample is certain.
class Verdict {
 public:
  enum class Value { True, False, Unknown };

  static Verdict yes() { return Verdict(Value::True, std::nullopt); }
  static Verdict no() { return Verdict(Value::False, std::nullopt); }
  static Verdict from(bool b) { return b ? yes() : no(); }
  static Verdict yes_up_to(std::size_t horizon) { return Verdict(Value::True, horizon); }
  static Verdict unknown(std::size_t horizon) { return Verdict(Value::Unknown, horizon); }

  Value value() const noexcept { return value_; }
  const std::optional<std::size_t>& horizon() const noexcept { return horizon_; }

  bool is_true() const noexcept { return value_ == Value::True; }
  bool is_false() const noexcept { return value_ == Value::False; }
  bool is_unknown() const noexcept { return value_ == Value::Unknown; }
  bool exact() const noexcept { return !horizon_.has_value(); }

  // Two verdicts contradict when one is True and the other False.
  bool contradicts(const Verdict& other) const noexcept {
    return (is_true() && other.is_false()) || (is_false() && other.is_true());
  }

  // "True", "False", "True@16", "Unknown@16".
  std::string to_string() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(Value v, std::optional<std::size_t> h) : value_(v), horizon_(h) {}

  Value value_;
  std::optional<std::size_t> horizon_;
};

inline std::string Verdict::to_string() const {
  std::string s = value_ == Value::True ? "True" : value_ == Value::False ? "False" : "Unknown";
  if (horizon_) s += "@" + std::to_string(*horizon_);
  return s;
}

}  // namespace transit
