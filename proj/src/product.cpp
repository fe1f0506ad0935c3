#include "transit/morphism.hpp"

#include "transit/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace transit {

PointMap::PointMap(std::vector<Point> t, std::size_t codomain_size) : table(std::move(t)), codomain(codomain_size) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= codomain) {
      throw Error(ErrorCode::InvalidMap, "pi(" + std::to_string(i) + ")=" + std::to_string(table[i]) +
                                             " is outside a space of " + std::to_string(codomain) + " points");
    }
}

bool PointMap::is_surjective() const {
  std::vector<bool> hit(codomain, false);
  for (auto y : table) hit[y] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

PointSet PointMap::image(const PointSet& a) const {
  PointSet out(codomain);
  a.for_each([&](Point x) { out.insert(table[x]); });
  return out;
}

PointSet PointMap::preimage(const PointSet& b) const {
  PointSet out(table.size());
  for (Point x = 0; x < table.size(); ++x)
    if (b.contains(table[x])) out.insert(x);
  return out;
}

std::string PointMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < table.size(); ++i) s += (i ? "," : "") + std::to_string(table[i]);
  return s + "]";
}

namespace {

ProductSystem build_product(const Ndds& a, const Ndds& b, FiniteSpace space) {
  const std::size_t na = a.size(), nb = b.size();
  const auto& sa = a.sequence();
  const auto& sb = b.sequence();
  const std::size_t L = std::max(sa.prefix.size(), sb.prefix.size());
  const std::size_t P = std::lcm(sa.period.size(), sb.period.size());

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<FiniteMap> family;
  auto member = [&](std::size_t n) {
    auto key = std::pair{sa.index_at(n), sb.index_at(n)};
    auto [it, fresh] = index.try_emplace(key, family.size());
    if (fresh) {
      const auto& f = a.family()[key.first];
      const auto& g = b.family()[key.second];
      std::vector<Point> t(na * nb);
      for (Point x = 0; x < na; ++x)
        for (Point y = 0; y < nb; ++y) t[x * nb + y] = static_cast<Point>(f(x) * nb + g(y));
      family.emplace_back(std::move(t));
    }
    return it->second;
  };
  SequenceSpec seq;
  for (std::size_t n = 1; n <= L; ++n) seq.prefix.push_back(member(n));
  for (std::size_t n = L + 1; n <= L + P; ++n) seq.period.push_back(member(n));

  std::vector<Point> pl(na * nb), pr(na * nb);
  for (Point x = 0; x < na; ++x)
    for (Point y = 0; y < nb; ++y) {
      pl[x * nb + y] = x;
      pr[x * nb + y] = y;
    }
  return ProductSystem{Ndds(std::move(space), std::move(family), std::move(seq)), na, nb, PointMap(pl, na),
                       PointMap(pr, nb)};
}

}  // namespace

ProductSystem product(const Ndds& a, const Ndds& b) {
  return build_product(a, b, FiniteSpace::max_product(a.space(), b.space()));
}

ProductSystem product_discrete(const Ndds& a, const Ndds& b) {
  return build_product(a, b, FiniteSpace::max_product(FiniteSpace::discrete(a.size()), FiniteSpace::discrete(b.size())));
}

}  // namespace transit
