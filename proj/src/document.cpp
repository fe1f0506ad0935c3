#include "transit/document.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <optional>

namespace transit {

namespace {

constexpr std::size_t kMaxPoints = 4096;
constexpr std::size_t kMaxEntries = std::size_t{1} << 22;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(ErrorCode kind, std::size_t line, std::size_t column, const std::string& msg) {
  throw DocumentError(kind, line, column, msg);
}

std::size_t to_count(const Line& l, const Token& t, std::size_t max) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
    fail(ErrorCode::ParseError, l.number, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  if (v > max) {
    fail(ErrorCode::ParseError, l.number, t.column, "value " + std::string(t.text) + " exceeds " + std::to_string(max));
  }
  return v;
}

std::vector<std::size_t> counts(const Line& l, std::size_t from, std::size_t max) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < l.tokens.size(); ++i) v.push_back(to_count(l, l.tokens[i], max));
  return v;
}

std::string lower(std::string_view s) {
  std::string t(s);
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return t;
}

enum class Section { None, Space, Family, Sequence, Sets };

// Positions of items for validation diagnostics.
struct Where {
  Where() = default;
  Where(std::size_t l, std::size_t c, std::vector<std::size_t> it = {}) : line(l), column(c), items(std::move(it)) {}
  std::size_t line = 0, column = 1;
  std::vector<std::size_t> items;  // columns of the value tokens
};

std::vector<std::size_t> columns(const Line& l, std::size_t from) {
  std::vector<std::size_t> c;
  for (std::size_t i = from; i < l.tokens.size(); ++i) c.push_back(l.tokens[i].column);
  return c;
}

std::size_t item_column(const Where& w, std::size_t i) { return i < w.items.size() ? w.items[i] : w.column; }

}  // namespace

DocumentError::DocumentError(ErrorCode kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

std::string DocumentError::diagnostic() const {
  return std::to_string(line_) + ":" + std::to_string(column_) + ": " + std::string(to_string(code())) + ": " + message_;
}

SystemDocument parse_document(std::string_view text) {
  SystemDocument doc;
  Section section = Section::None;
  std::map<std::string, Where> seen_keys;  // "section/key" for single-use keys
  std::map<Section, Where> headers;
  std::vector<Where> map_at, code_at, row_at;
  Where prefix_at, period_at;
  bool have_period = false, have_backend = false, have_points = false, have_alphabet = false, have_metric = false;
  std::vector<std::pair<Where, std::vector<std::string_view>>> raw_sets;

  auto once = [&](const Line& l, const char* key) {
    std::string k = std::to_string(static_cast<int>(section)) + "/" + key;
    if (seen_keys.count(k)) fail(ErrorCode::ParseError, l.number, 1, std::string("duplicate '") + key + "'");
    seen_keys[k] = {l.number, 1};
  };
  auto arity = [&](const Line& l, std::size_t n) {
    if (l.tokens.size() != n) {
      fail(ErrorCode::ParseError, l.number, l.tokens.back().column,
           "'" + std::string(l.tokens[0].text) + "' takes " + std::to_string(n - 1) + " value(s)");
    }
  };

  for (const auto& l : tokenize(text)) {
    const auto& head = l.tokens[0];
    if (head.text == "SPACE" || head.text == "FAMILY" || head.text == "SEQUENCE" || head.text == "SETS") {
      if (l.tokens.size() != 1) fail(ErrorCode::ParseError, l.number, l.tokens[1].column, "section header takes no values");
      section = head.text == "SPACE" ? Section::Space
                : head.text == "FAMILY" ? Section::Family
                : head.text == "SEQUENCE" ? Section::Sequence
                                          : Section::Sets;
      if (headers.count(section)) fail(ErrorCode::ParseError, l.number, 1, "duplicate section " + std::string(head.text));
      headers[section] = {l.number, 1};
      continue;
    }
    const std::string key(head.text);
    switch (section) {
      case Section::None:
        fail(ErrorCode::ParseError, l.number, head.column, "expected a section header (SPACE, FAMILY, SEQUENCE, SETS)");
      case Section::Space:
        if (key == "backend") {
          once(l, "backend");
          arity(l, 2);
          auto v = lower(l.tokens[1].text);
          if (v == "finite") doc.backend = SystemDocument::Backend::Finite;
          else if (v == "symbolic") doc.backend = SystemDocument::Backend::Symbolic;
          else fail(ErrorCode::ParseError, l.number, l.tokens[1].column, "backend must be finite or symbolic");
          have_backend = true;
        } else if (key == "points") {
          once(l, "points");
          arity(l, 2);
          doc.points = to_count(l, l.tokens[1], kMaxPoints);
          if (doc.points == 0) fail(ErrorCode::MetricViolation, l.number, l.tokens[1].column, "space must have at least one point");
          have_points = true;
        } else if (key == "metric") {
          once(l, "metric");
          arity(l, 2);
          auto v = lower(l.tokens[1].text);
          if (v == "discrete") doc.metric = SystemDocument::Metric::Discrete;
          else if (v == "cyclic") doc.metric = SystemDocument::Metric::Cyclic;
          else if (v == "rows") doc.metric = SystemDocument::Metric::Rows;
          else fail(ErrorCode::ParseError, l.number, l.tokens[1].column, "metric must be discrete, cyclic or rows");
          have_metric = true;
        } else if (key == "row") {
          std::vector<Rational> row;
          for (std::size_t i = 1; i < l.tokens.size(); ++i) {
            try {
              row.push_back(parse_rational(l.tokens[i].text));
            } catch (const std::exception& e) {
              fail(ErrorCode::ParseError, l.number, l.tokens[i].column, e.what());
            }
          }
          if (row.size() > kMaxPoints) fail(ErrorCode::ParseError, l.number, 1, "row too long");
          doc.distance.push_back(std::move(row));
          row_at.push_back({l.number, 1});
        } else if (key == "alphabet") {
          once(l, "alphabet");
          arity(l, 2);
          doc.alphabet = static_cast<unsigned>(to_count(l, l.tokens[1], 10));
          if (doc.alphabet < 2) fail(ErrorCode::ParseError, l.number, l.tokens[1].column, "alphabet must be in [2,10]");
          have_alphabet = true;
        } else {
          fail(ErrorCode::ParseError, l.number, head.column, "unknown SPACE key '" + key + "'");
        }
        break;
      case Section::Family:
        if (key == "map") {
          if (l.tokens.size() - 1 > kMaxPoints) fail(ErrorCode::InvalidMap, l.number, 1, "map table too long");
          std::vector<Point> t;
          for (auto v : counts(l, 1, std::numeric_limits<Point>::max())) t.push_back(static_cast<Point>(v));
          doc.maps.push_back(std::move(t));
          map_at.push_back({l.number, 1, columns(l, 1)});
        } else if (key == "code") {
          if (l.tokens.size() < 2) fail(ErrorCode::ParseError, l.number, head.column, "'code' needs a window and a rule");
          if (l.tokens.size() - 2 > kMaxEntries) fail(ErrorCode::InvalidMap, l.number, 1, "rule too long");
          SystemDocument::Code c;
          c.window = to_count(l, l.tokens[1], 22);
          for (auto v : counts(l, 2, 255)) c.rule.push_back(static_cast<Symbol>(v));
          doc.codes.push_back(std::move(c));
          code_at.push_back({l.number, 1});
        } else {
          fail(ErrorCode::ParseError, l.number, head.column, "unknown FAMILY key '" + key + "'");
        }
        break;
      case Section::Sequence:
        if (key == "prefix") {
          once(l, "prefix");
          doc.sequence.prefix = counts(l, 1, kMaxEntries);
          prefix_at = {l.number, 1, columns(l, 1)};
        } else if (key == "period") {
          once(l, "period");
          doc.sequence.period = counts(l, 1, kMaxEntries);
          period_at = {l.number, 1, columns(l, 1)};
          have_period = true;
        } else {
          fail(ErrorCode::ParseError, l.number, head.column, "unknown SEQUENCE key '" + key + "'");
        }
        break;
      case Section::Sets:
        if (key != "set") fail(ErrorCode::ParseError, l.number, head.column, "unknown SETS key '" + key + "'");
        if (l.tokens.size() < 2) fail(ErrorCode::ParseError, l.number, head.column, "'set' needs a label");
        {
          // Label first, then the members.
          std::vector<std::string_view> vals;
          for (std::size_t i = 1; i < l.tokens.size(); ++i) vals.push_back(l.tokens[i].text);
          raw_sets.push_back({{l.number, l.tokens[1].column}, vals});
        }
        break;
    }
  }

  // Structural validation.
  auto head_line = [&](Section s) { return headers.count(s) ? headers[s].line : 1; };
  if (!headers.count(Section::Space)) fail(ErrorCode::ParseError, 1, 1, "missing SPACE section");
  if (!headers.count(Section::Family)) fail(ErrorCode::ParseError, head_line(Section::Space), 1, "missing FAMILY section");
  if (!headers.count(Section::Sequence)) fail(ErrorCode::ParseError, head_line(Section::Family), 1, "missing SEQUENCE section");
  if (!have_backend) fail(ErrorCode::ParseError, head_line(Section::Space), 1, "SPACE needs 'backend'");
  if (!have_period) fail(ErrorCode::InvalidSequence, head_line(Section::Sequence), 1, "SEQUENCE needs 'period'");

  std::size_t family_size = 0;
  if (doc.backend == SystemDocument::Backend::Finite) {
    if (!have_points) fail(ErrorCode::ParseError, head_line(Section::Space), 1, "finite SPACE needs 'points'");
    if (have_alphabet) fail(ErrorCode::ParseError, head_line(Section::Space), 1, "'alphabet' belongs to symbolic documents");
    if (!doc.codes.empty()) fail(ErrorCode::InvalidMap, code_at[0].line, 1, "'code' belongs to symbolic documents");
    if (!have_metric && !doc.distance.empty()) doc.metric = SystemDocument::Metric::Rows;
    if (doc.metric == SystemDocument::Metric::Rows) {
      if (doc.distance.size() != doc.points) {
        fail(ErrorCode::MetricViolation, row_at.empty() ? head_line(Section::Space) : row_at.back().line, 1,
             "expected " + std::to_string(doc.points) + " distance rows, got " + std::to_string(doc.distance.size()));
      }
      for (std::size_t i = 0; i < doc.distance.size(); ++i)
        if (doc.distance[i].size() != doc.points) {
          fail(ErrorCode::MetricViolation, row_at[i].line, 1,
               "distance row " + std::to_string(i) + " has " + std::to_string(doc.distance[i].size()) +
                   " entries, expected " + std::to_string(doc.points));
        }
      try {
        FiniteSpace check(doc.distance);
      } catch (const std::exception& e) {
        fail(ErrorCode::MetricViolation, row_at.front().line, 1, e.what());
      }
    } else if (!doc.distance.empty()) {
      fail(ErrorCode::ParseError, row_at.front().line, 1, "'row' needs 'metric rows'");
    }
    if (doc.maps.empty()) fail(ErrorCode::InvalidMap, head_line(Section::Family), 1, "FAMILY needs at least one 'map'");
    for (std::size_t m = 0; m < doc.maps.size(); ++m) {
      if (doc.maps[m].size() != doc.points) {
        fail(ErrorCode::InvalidMap, map_at[m].line, item_column(map_at[m], doc.points),
             "map " + std::to_string(m) + " has " + std::to_string(doc.maps[m].size()) + " entries, expected " +
                 std::to_string(doc.points));
      }
      for (std::size_t i = 0; i < doc.maps[m].size(); ++i)
        if (doc.maps[m][i] >= doc.points) {
          fail(ErrorCode::InvalidMap, map_at[m].line, item_column(map_at[m], i),
               "map " + std::to_string(m) + " sends " + std::to_string(i) + " to " + std::to_string(doc.maps[m][i]) +
                   ", outside the space");
        }
    }
    family_size = doc.maps.size();
  } else {
    if (!have_alphabet) fail(ErrorCode::ParseError, head_line(Section::Space), 1, "symbolic SPACE needs 'alphabet'");
    if (have_points || have_metric || !doc.distance.empty()) {
      fail(ErrorCode::ParseError, head_line(Section::Space), 1, "points/metric/row belong to finite documents");
    }
    if (!doc.maps.empty()) fail(ErrorCode::InvalidMap, map_at[0].line, 1, "'map' belongs to finite documents");
    if (doc.codes.empty()) fail(ErrorCode::InvalidMap, head_line(Section::Family), 1, "FAMILY needs at least one 'code'");
    for (std::size_t m = 0; m < doc.codes.size(); ++m) {
      try {
        BlockCode check(doc.alphabet, doc.codes[m].window, doc.codes[m].rule);
      } catch (const std::exception& e) {
        fail(ErrorCode::InvalidMap, code_at[m].line, 1, "code " + std::to_string(m) + ": " + e.what());
      }
    }
    family_size = doc.codes.size();
  }

  if (doc.sequence.period.empty()) fail(ErrorCode::InvalidSequence, period_at.line, 1, "period must be nonempty");
  for (std::size_t j = 0; j < doc.sequence.prefix.size(); ++j)
    if (auto i = doc.sequence.prefix[j]; i >= family_size) {
      fail(ErrorCode::InvalidSequence, prefix_at.line, item_column(prefix_at, j),
           "prefix index " + std::to_string(i) + " outside a family of " + std::to_string(family_size));
    }
  for (std::size_t j = 0; j < doc.sequence.period.size(); ++j)
    if (auto i = doc.sequence.period[j]; i >= family_size) {
      fail(ErrorCode::InvalidSequence, period_at.line, item_column(period_at, j),
           "period index " + std::to_string(i) + " outside a family of " + std::to_string(family_size));
    }

  // Sets.
  std::map<std::string, bool> labels;
  for (const auto& [where, vals] : raw_sets) {
    std::string label(vals[0]);
    if (labels.count(label)) fail(ErrorCode::ParseError, where.line, where.column, "duplicate set label '" + label + "'");
    labels[label] = true;
    if (doc.backend == SystemDocument::Backend::Finite) {
      std::vector<Point> pts;
      for (std::size_t i = 1; i < vals.size(); ++i) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(vals[i].data(), vals[i].data() + vals[i].size(), v);
        if (ec != std::errc{} || p != vals[i].data() + vals[i].size() || v >= doc.points) {
          fail(ErrorCode::ParseError, where.line, where.column,
               "set '" + label + "': '" + std::string(vals[i]) + "' is not a point of the space");
        }
        pts.push_back(static_cast<Point>(v));
      }
      doc.point_sets.emplace_back(label, std::move(pts));
    } else {
      std::vector<Block> blocks;
      for (std::size_t i = 1; i < vals.size(); ++i) {
        Block b;
        if (vals[i] != "*") {
          for (char c : vals[i]) {
            if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= doc.alphabet) {
              fail(ErrorCode::ParseError, where.line, where.column,
                   "set '" + label + "': '" + std::string(vals[i]) + "' is not a word over the alphabet");
            }
            b.push_back(static_cast<Symbol>(c - '0'));
          }
          if (b.size() > 24) fail(ErrorCode::ParseError, where.line, where.column, "cylinder word longer than 24");
        }
        blocks.push_back(std::move(b));
      }
      doc.cylinder_sets.emplace_back(label, std::move(blocks));
    }
  }
  return doc;
}

std::string serialize(const SystemDocument& doc) {
  std::string out = "SPACE\n";
  auto join = [](const auto& v, auto f) {
    std::string s;
    for (const auto& x : v) s += " " + f(x);
    return s;
  };
  auto num = [](auto x) { return std::to_string(x); };
  if (doc.backend == SystemDocument::Backend::Finite) {
    out += "backend finite\npoints " + std::to_string(doc.points) + "\n";
    switch (doc.metric) {
      case SystemDocument::Metric::Discrete: out += "metric discrete\n"; break;
      case SystemDocument::Metric::Cyclic: out += "metric cyclic\n"; break;
      case SystemDocument::Metric::Rows:
        out += "metric rows\n";
        for (const auto& row : doc.distance)
          out += "row" + join(row, [](const Rational& r) { return to_string(r); }) + "\n";
        break;
    }
    out += "FAMILY\n";
    for (const auto& m : doc.maps) out += "map" + join(m, num) + "\n";
  } else {
    out += "backend symbolic\nalphabet " + std::to_string(doc.alphabet) + "\nFAMILY\n";
    for (const auto& c : doc.codes)
      out += "code " + std::to_string(c.window) + join(c.rule, [](Symbol s) { return std::to_string(int(s)); }) + "\n";
  }
  out += "SEQUENCE\nprefix" + join(doc.sequence.prefix, num) + "\nperiod" + join(doc.sequence.period, num) + "\n";
  if (!doc.point_sets.empty() || !doc.cylinder_sets.empty()) {
    out += "SETS\n";
    for (const auto& [label, pts] : doc.point_sets) out += "set " + label + join(pts, num) + "\n";
    for (const auto& [label, blocks] : doc.cylinder_sets)
      out += "set " + label + join(blocks, [](const Block& b) { return b.empty() ? std::string("*") : to_string(b); }) + "\n";
  }
  return out;
}

FiniteSpace SystemDocument::space() const {
  if (backend != Backend::Finite) throw Error(ErrorCode::BackendMismatch, "document is symbolic");
  switch (metric) {
    case Metric::Discrete: return FiniteSpace::discrete(points);
    case Metric::Cyclic: return FiniteSpace::cyclic(points);
    case Metric::Rows: return FiniteSpace(distance);
  }
  return FiniteSpace::discrete(points);
}

Ndds SystemDocument::ndds() const {
  std::vector<FiniteMap> fam;
  for (const auto& m : maps) fam.emplace_back(m);
  return Ndds(space(), std::move(fam), sequence);
}

ShiftNdds SystemDocument::shift_ndds() const {
  if (backend != Backend::Symbolic) throw Error(ErrorCode::BackendMismatch, "document is finite");
  std::vector<BlockCode> fam;
  for (const auto& c : codes) fam.emplace_back(alphabet, c.window, c.rule);
  return ShiftNdds(ShiftSpace(alphabet), std::move(fam), sequence);
}

PointSet SystemDocument::point_set(std::string_view label) const {
  for (const auto& [l, pts] : point_sets)
    if (l == label) return PointSet(points, std::span<const Point>(pts));
  throw Error(ErrorCode::ParseError, "no point set labelled '" + std::string(label) + "'");
}

CylinderSet SystemDocument::cylinder_set(std::string_view label) const {
  for (const auto& [l, blocks] : cylinder_sets)
    if (l == label) return CylinderSet(alphabet, blocks);
  throw Error(ErrorCode::ParseError, "no cylinder set labelled '" + std::string(label) + "'");
}

SystemDocument to_document(const Ndds& sys) {
  SystemDocument doc;
  doc.backend = SystemDocument::Backend::Finite;
  doc.points = sys.size();
  if (sys.space() == FiniteSpace::discrete(sys.size())) {
    doc.metric = SystemDocument::Metric::Discrete;
  } else if (sys.space() == FiniteSpace::cyclic(sys.size())) {
    doc.metric = SystemDocument::Metric::Cyclic;
  } else {
    doc.metric = SystemDocument::Metric::Rows;
    doc.distance = sys.space().distances();
  }
  for (const auto& m : sys.family()) doc.maps.push_back(m.table());
  doc.sequence = sys.sequence();
  return doc;
}

}  // namespace transit
