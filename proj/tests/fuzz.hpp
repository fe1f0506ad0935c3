#pragma once

// Document mutators for the parser fuzz tests. Each targeted mutator turns a
// valid document into an invalid one; byte_flip may or may not.

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fuzz {

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

inline std::string join(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

// Lines carrying tokens (not blank, not comment-only).
inline std::vector<std::size_t> live_lines(const std::vector<std::string>& lines) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto code = lines[i].substr(0, lines[i].find('#'));
    if (code.find_first_not_of(" \t\r") != std::string::npos) out.push_back(i);
  }
  return out;
}

inline std::string strip_comment(const std::string& l) { return l.substr(0, l.find('#')); }

// Targeted mutation `op` (0..5) of a valid document.
inline std::string mutate(const std::string& text, unsigned op, std::mt19937_64& rng) {
  auto lines = lines_of(text);
  auto live = live_lines(lines);
  auto pick = [&](const std::vector<std::size_t>& v) { return v[rng() % v.size()]; };
  auto with_prefix = [&](const std::string& key) {
    std::vector<std::size_t> v;
    for (auto i : live)
      if (strip_comment(lines[i]).find(key) != std::string::npos) v.push_back(i);
    return v;
  };
  switch (op % 6) {
    case 0: {  // junk token appended to a live line
      auto i = pick(live);
      lines[i] = strip_comment(lines[i]) + " @junk";
      break;
    }
    case 1: {  // unknown keyword
      auto i = pick(live);
      lines.insert(lines.begin() + static_cast<std::ptrdiff_t>(i) + 1, "frobnicate 3");
      break;
    }
    case 2: {  // duplicated section header
      auto v = with_prefix("SEQUENCE");
      lines.push_back(v.empty() ? "SPACE" : "SEQUENCE");
      break;
    }
    case 3: {  // drop the period line
      auto v = with_prefix("period");
      if (!v.empty()) lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(v.front()));
      else lines.push_back("period");
      break;
    }
    case 4: {  // out-of-range sequence index
      auto v = with_prefix("period");
      if (!v.empty()) lines[v.front()] = "period 0 97";
      break;
    }
    default: {  // truncate a map/code/row line to its keyword
      auto v = with_prefix("map");
      auto w = with_prefix("code");
      v.insert(v.end(), w.begin(), w.end());
      if (v.empty()) v = live;
      auto i = pick(v);
      auto l = strip_comment(lines[i]);
      auto sp = l.find_first_not_of(" \t");
      auto end = l.find_first_of(" \t", sp);
      lines[i] = l.substr(0, end) + " 1 2 3 4 5 6 7 8 9";
      break;
    }
  }
  return join(lines);
}

// Random byte-level damage: replace, insert or delete a few bytes.
inline std::string byte_flip(std::string text, std::mt19937_64& rng) {
  static const std::string alphabet = "0123456789 \n#-/abcxyzSPACEFAMILYmap*@\t";
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int e = 0; e < edits && !text.empty(); ++e) {
    auto pos = rng() % text.size();
    char c = alphabet[rng() % alphabet.size()];
    switch (rng() % 3) {
      case 0: text[pos] = c; break;
      case 1: text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), c); break;
      default: text.erase(pos, 1); break;
    }
  }
  return text;
}

}  // namespace fuzz
