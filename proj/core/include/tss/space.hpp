#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tss {

/// A point in the two-dimensional pleasure-arousal style space.
/// Both components are z-scored, dimensionless reals.
struct PACoordinate {
  double pleasure = 0.0;
  double arousal = 0.0;
};

bool is_finite(const PACoordinate& c);

/// The four major style groups the adjectives fall into, one per rough
/// quadrant of the space.
enum class MajorCategory { engaging, gentle, intense, detached };

const char* to_string(MajorCategory c);
MajorCategory category_from_string(const std::string& s);

/// Category of a coordinate by quadrant; used when an adjective catalog
/// does not supply one.
MajorCategory category_of(const PACoordinate& c);

struct AdjectiveEntry {
  int id = 0;
  std::string label;
  MajorCategory category = MajorCategory::engaging;
  PACoordinate coord;
};

/// Ordered adjective inventory of the style space. Ids strictly increasing.
struct AdjectiveLexicon {
  std::vector<AdjectiveEntry> entries;

  std::size_t size() const { return entries.size(); }
  const AdjectiveEntry* find(int id) const;
};

/// Throws if the lexicon is empty, has empty labels, non-finite coordinates
/// or non-increasing ids.
void validate(const AdjectiveLexicon& lexicon);

struct Neighbor {
  AdjectiveEntry entry;
  double distance = 0.0;
};

/// The k lexicon entries closest to coord in Euclidean distance, ascending;
/// ties broken by ascending id.
std::vector<Neighbor> nearest_adjectives(const PACoordinate& coord,
                                         const AdjectiveLexicon& lexicon,
                                         std::size_t k);

/// Component-wise arithmetic mean of a non-empty coordinate list.
PACoordinate centroid(std::span<const PACoordinate> coords);

/// One utterance prepared for the regression models: per-path feature
/// vectors plus optional ground-truth label and class metadata.
struct UtteranceRecord {
  std::string id;
  std::vector<std::vector<double>> feature_groups;
  std::optional<PACoordinate> label;
  std::string teacher_id;
  std::string course_id;
  double t_seconds = 0.0;
};

}  // namespace tss
