#include "tss/space.hpp"

#include <algorithm>
#include <cmath>

#include "tss/error.hpp"

namespace tss {

bool is_finite(const PACoordinate& c) {
  return std::isfinite(c.pleasure) && std::isfinite(c.arousal);
}

const char* to_string(MajorCategory c) {
  switch (c) {
    case MajorCategory::engaging: return "engaging";
    case MajorCategory::gentle: return "gentle";
    case MajorCategory::intense: return "intense";
    case MajorCategory::detached: return "detached";
  }
  throw Error("invalid major category");
}

MajorCategory category_from_string(const std::string& s) {
  if (s == "engaging") return MajorCategory::engaging;
  if (s == "gentle") return MajorCategory::gentle;
  if (s == "intense") return MajorCategory::intense;
  if (s == "detached") return MajorCategory::detached;
  throw Error("unknown major category: " + s);
}

MajorCategory category_of(const PACoordinate& c) {
  if (c.pleasure >= 0.0) {
    return c.arousal >= 0.0 ? MajorCategory::engaging : MajorCategory::gentle;
  }
  return c.arousal >= 0.0 ? MajorCategory::intense : MajorCategory::detached;
}

const AdjectiveEntry* AdjectiveLexicon::find(int id) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), id,
                             [](const AdjectiveEntry& e, int v) { return e.id < v; });
  if (it == entries.end() || it->id != id) return nullptr;
  return &*it;
}

void validate(const AdjectiveLexicon& lexicon) {
  require(!lexicon.entries.empty(), "empty lexicon");
  int prev = 0;
  bool first = true;
  for (const auto& e : lexicon.entries) {
    require(!e.label.empty(), "lexicon entry with empty label");
    require(is_finite(e.coord), "lexicon entry with non-finite coordinate");
    require(first || e.id > prev, "lexicon ids must be strictly increasing");
    prev = e.id;
    first = false;
  }
}

std::vector<Neighbor> nearest_adjectives(const PACoordinate& coord,
                                         const AdjectiveLexicon& lexicon,
                                         std::size_t k) {
  require(is_finite(coord), "non-finite query coordinate");
  require(!lexicon.entries.empty(), "empty lexicon");
  require(k >= 1 && k <= lexicon.size(), "k out of range for lexicon");

  std::vector<Neighbor> all;
  all.reserve(lexicon.size());
  for (const auto& e : lexicon.entries) {
    double dp = coord.pleasure - e.coord.pleasure;
    double da = coord.arousal - e.coord.arousal;
    all.push_back({e, std::sqrt(dp * dp + da * da)});
  }
  auto by_distance_then_id = [](const Neighbor& a, const Neighbor& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.entry.id < b.entry.id;
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(),
                    by_distance_then_id);
  all.resize(k);
  return all;
}

PACoordinate centroid(std::span<const PACoordinate> coords) {
  require(!coords.empty(), "centroid of empty coordinate list");
  double sp = 0.0, sa = 0.0;
  for (const auto& c : coords) {
    require(is_finite(c), "non-finite coordinate in centroid input");
    sp += c.pleasure;
    sa += c.arousal;
  }
  double n = static_cast<double>(coords.size());
  return {sp / n, sa / n};
}

}  // namespace tss
