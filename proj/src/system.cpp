#include "transit/system.hpp"

#include "transit/error.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace transit {

// ---------------------------------------------------------------------------
// FiniteMap

FiniteMap::FiniteMap(std::vector<Point> table) : table_(std::move(table)) {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= table_.size()) {
      throw Error(ErrorCode::InvalidMap, "entry " + std::to_string(i) + " -> " + std::to_string(table_[i]) +
                                             " outside space of size " + std::to_string(table_.size()));
    }
  }
}

FiniteMap FiniteMap::identity(std::size_t n) {
  std::vector<Point> t(n);
  std::iota(t.begin(), t.end(), Point{0});
  return FiniteMap(std::move(t));
}

FiniteMap FiniteMap::constant(std::size_t n, Point value) { return FiniteMap(std::vector<Point>(n, value)); }

FiniteMap FiniteMap::rotation(std::size_t n, std::size_t k) {
  std::vector<Point> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Point>((i + k) % n);
  return FiniteMap(std::move(t));
}

PointSet FiniteMap::image(const PointSet& a) const {
  PointSet out(size());
  a.for_each([&](Point x) { out.insert(table_[x]); });
  return out;
}

PointSet FiniteMap::preimage(const PointSet& b) const {
  PointSet out(size());
  for (Point x = 0; x < size(); ++x)
    if (b.contains(table_[x])) out.insert(x);
  return out;
}

bool FiniteMap::is_surjective() const {
  std::vector<bool> hit(size());
  for (auto y : table_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string FiniteMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(table_[i]);
  }
  return s + "]";
}

FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner) {
  std::vector<Point> t(inner.size());
  for (Point x = 0; x < inner.size(); ++x) t[x] = outer(inner(x));
  return FiniteMap(std::move(t));
}

std::size_t FiniteMapHash::operator()(const FiniteMap& f) const noexcept {
  return boost::hash_range(f.table().begin(), f.table().end());
}

Verdict is_surjective(const FiniteMap& f) { return Verdict::from(f.is_surjective()); }
Verdict is_injective(const FiniteMap& f) { return Verdict::from(f.is_injective()); }
Verdict is_open(const FiniteMap&) { return Verdict::yes(); }

// ---------------------------------------------------------------------------
// SequenceSpec and Word

std::size_t SequenceSpec::index_at(std::size_t n) const {
  if (n < 1) throw Error(ErrorCode::InvalidIndex, "sequence index must be >= 1");
  if (n <= prefix.size()) return prefix[n - 1];
  return period[(n - prefix.size() - 1) % period.size()];
}

void SequenceSpec::validate(std::size_t family_size) const {
  if (period.empty()) throw Error(ErrorCode::InvalidSequence, "period must be nonempty");
  auto check = [&](std::size_t i, const char* where) {
    if (i >= family_size) {
      throw Error(ErrorCode::InvalidSequence, std::string(where) + " refers to map " + std::to_string(i) +
                                                  " but the family has " + std::to_string(family_size));
    }
  };
  for (auto i : prefix) check(i, "prefix");
  for (auto i : period) check(i, "period");
}

std::vector<std::size_t> SequenceSpec::used_indices() const {
  std::vector<std::size_t> out(prefix);
  out.insert(out.end(), period.begin(), period.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> SequenceSpec::recurring_indices() const {
  std::vector<std::size_t> out(period);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Word::validate() const {
  if (letters.empty()) throw Error(ErrorCode::InvalidWord, "word must be nonempty");
  for (auto l : letters)
    if (l == 0) throw Error(ErrorCode::InvalidWord, "word letters must be >= 1");
}

Word Word::then(const Word& other) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

std::string Word::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// CompositionTrace

CompositionTrace::CompositionTrace(std::vector<FiniteMap> maps, std::size_t preperiod, std::size_t cycle)
    : maps_(std::move(maps)), s_(preperiod), p_(cycle) {
  if (p_ == 0 || maps_.size() != s_ + p_) {
    throw Error(ErrorCode::PreconditionViolated, "trace length must equal preperiod + cycle");
  }
}

std::size_t CompositionTrace::slot(std::size_t n) const {
  if (n < 1) throw Error(ErrorCode::InvalidIndex, "iterate index must be >= 1");
  if (n <= s_ + p_) return n - 1;
  return s_ + (n - s_ - 1) % p_;
}

std::vector<std::size_t> CompositionTrace::cycle_indices() const {
  std::vector<std::size_t> out(p_);
  std::iota(out.begin(), out.end(), s_ + 1);
  return out;
}

CompositionTrace composition_trace(const std::vector<FiniteMap>& family, const SequenceSpec& seq,
                                   std::size_t max_length) {
  const std::size_t L = seq.prefix.size();
  const std::size_t P = seq.period.size();
  std::vector<FiniteMap> g;  // g[n-1] = f_1^n
  g.push_back(family.at(seq.index_at(1)));
  std::map<std::pair<std::size_t, std::vector<Point>>, std::size_t> seen;
  std::size_t n1 = 0, n2 = 0;
  for (std::size_t n = 1;; ++n) {
    if (n >= std::max<std::size_t>(1, L)) {
      auto [it, fresh] = seen.try_emplace({(n - L) % P, g[n - 1].table()}, n);
      if (!fresh) {
        n1 = it->second;
        n2 = n;
        break;
      }
    }
    if (n >= max_length) throw Error(ErrorCode::TooLarge, "composition trace longer than " + std::to_string(max_length));
    g.push_back(compose(family[seq.index_at(n + 1)], g[n - 1]));
  }
  // g is periodic from n1 with period p0 = n2 - n1; find the least period.
  const std::size_t p0 = n2 - n1;
  auto at = [&](std::size_t m) -> const FiniteMap& {  // m >= 1
    if (m < n1) return g[m - 1];
    return g[n1 - 1 + (m - n1) % p0];
  };
  std::size_t p = p0;
  for (std::size_t d = 1; d < p0; ++d) {
    if (p0 % d) continue;
    bool ok = true;
    for (std::size_t i = 0; i < p0 && ok; ++i) ok = at(n1 + i) == at(n1 + i + d);
    if (ok) {
      p = d;
      break;
    }
  }
  std::size_t s = n1 - 1;
  while (s >= 1 && at(s) == at(s + p)) --s;
  std::vector<FiniteMap> maps;
  maps.reserve(s + p);
  for (std::size_t m = 1; m <= s + p; ++m) maps.push_back(at(m));
  return CompositionTrace(std::move(maps), s, p);
}

// ---------------------------------------------------------------------------
// Ndds

Ndds::Ndds(FiniteSpace space, std::vector<FiniteMap> family, SequenceSpec seq)
    : space_(std::move(space)), family_(std::move(family)), seq_(std::move(seq)) {
  if (family_.empty()) throw Error(ErrorCode::InvalidMap, "family must be nonempty");
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (family_[i].size() != space_.size()) {
      throw Error(ErrorCode::InvalidMap, "map " + std::to_string(i) + " has " + std::to_string(family_[i].size()) +
                                             " entries, space has " + std::to_string(space_.size()) + " points");
    }
  }
  seq_.validate(family_.size());
  used_ = seq_.used_indices();
  trace_ = std::make_shared<const CompositionTrace>(composition_trace(family_, seq_));
}

Ndds Ndds::autonomous(FiniteSpace space, FiniteMap f) {
  return Ndds(std::move(space), {std::move(f)}, SequenceSpec{{}, {0}});
}

const FiniteMap& Ndds::map_at(std::size_t n) const { return family_[seq_.index_at(n)]; }

std::vector<FiniteMap> Ndds::used_maps() const {
  std::vector<FiniteMap> out;
  for (auto i : used_) out.push_back(family_[i]);
  return out;
}

std::size_t Ndds::first_position(std::size_t family_index) const {
  for (std::size_t n = 1; n <= seq_.prefix.size() + seq_.period.size(); ++n)
    if (seq_.index_at(n) == family_index) return n;
  throw Error(ErrorCode::InvalidIndex, "map " + std::to_string(family_index) + " never occurs in the sequence");
}

std::vector<std::size_t> Ndds::representative_positions() const {
  std::vector<std::size_t> out;
  for (auto i : used_) out.push_back(first_position(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool Ndds::all_surjective() const {
  return std::all_of(used_.begin(), used_.end(), [&](std::size_t i) { return family_[i].is_surjective(); });
}

FiniteMap Ndds::word_map(const Word& alpha, WordMode mode) const {
  alpha.validate();
  FiniteMap out = FiniteMap::identity(size());
  for (auto letter : alpha.letters) {
    const FiniteMap* f = nullptr;
    if (mode == WordMode::Position) {
      f = &map_at(letter);
    } else {
      if (letter > family_.size()) {
        throw Error(ErrorCode::InvalidIndex, "family index " + std::to_string(letter) + " out of range");
      }
      f = &family_[letter - 1];
    }
    out = compose(*f, out);
  }
  return out;
}

Ndds Ndds::shifted(std::size_t m) const {
  SequenceSpec s;
  if (m < seq_.prefix.size()) {
    s.prefix.assign(seq_.prefix.begin() + static_cast<std::ptrdiff_t>(m), seq_.prefix.end());
    s.period = seq_.period;
  } else {
    auto r = (m - seq_.prefix.size()) % seq_.period.size();
    s.period.assign(seq_.period.begin() + static_cast<std::ptrdiff_t>(r), seq_.period.end());
    s.period.insert(s.period.end(), seq_.period.begin(), seq_.period.begin() + static_cast<std::ptrdiff_t>(r));
  }
  return Ndds(space_, family_, std::move(s));
}

}  // namespace transit
