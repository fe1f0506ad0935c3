#include "transit/report.hpp"

#include <algorithm>
#include <sstream>

namespace transit {

void Report::add(std::string property, std::string variant, Verdict v, std::string witness, std::string note) {
  records_.push_back({std::move(property), std::move(variant), v, std::move(witness), std::move(note)});
}

void Report::check(std::string property, std::string variant, bool holds, std::string witness, std::string note) {
  add(std::move(property), std::move(variant), Verdict::from(holds), std::move(witness), std::move(note));
}

void Report::append(const Report& other, const std::string& tag) {
  for (auto r : other.records_) {
    if (!tag.empty()) r.note = r.note.empty() ? tag : tag + "/" + r.note;
    records_.push_back(std::move(r));
  }
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records_) {
    if (r.verdict.is_true()) ++s.pass;
    else if (r.verdict.is_false()) ++s.fail;
    else ++s.unknown;
  }
  return s;
}

std::vector<Record> Report::failed() const {
  std::vector<Record> out;
  std::copy_if(records_.begin(), records_.end(), std::back_inserter(out),
               [](const Record& r) { return r.verdict.is_false(); });
  return out;
}

std::string Report::structured() const {
  std::ostringstream os;
  os << "command: " << command_ << '\n';
  for (const auto& r : records_) {
    os << "record: property=" << r.property << " variant=" << (r.variant.empty() ? "-" : r.variant)
       << " verdict=" << r.verdict.to_string();
    if (!r.note.empty()) os << " note=" << r.note;
    os << " witness=" << (r.witness.empty() ? "-" : r.witness) << '\n';
  }
  auto s = summary();
  os << "summary: pass=" << s.pass << " fail=" << s.fail << " unknown=" << s.unknown << '\n';
  return os.str();
}

std::string Report::table() const {
  std::size_t wp = 8, wv = 7, wd = 7, wn = 4;
  for (const auto& r : records_) {
    wp = std::max(wp, r.property.size());
    wv = std::max(wv, r.variant.size());
    wd = std::max(wd, r.verdict.to_string().size());
    wn = std::max(wn, r.note.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream os;
  os << "# " << command_ << '\n';
  os << pad("property", wp) << pad("variant", wv) << pad("verdict", wd) << pad("note", wn) << "witness\n";
  for (const auto& r : records_) {
    os << pad(r.property, wp) << pad(r.variant, wv) << pad(r.verdict.to_string(), wd) << pad(r.note, wn)
       << r.witness << '\n';
  }
  auto s = summary();
  os << "pass " << s.pass << ", fail " << s.fail << ", unknown " << s.unknown << '\n';
  return os.str();
}

int Report::exit_code() const {
  auto s = summary();
  if (s.fail) return 1;
  if (s.unknown) return 2;
  return 0;
}

}  // namespace transit
