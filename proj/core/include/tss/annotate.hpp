#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tss/space.hpp"

namespace tss::annotate {

/// One annotator's answers to the four style questions, each in [-2, 2].
/// Questions 1 and 4 probe arousal, questions 2 and 3 probe pleasure.
struct QuestionnaireResponse {
  int q1 = 0;
  int q2 = 0;
  int q3 = 0;
  int q4 = 0;
};

struct AnnotationRecord {
  std::string utterance_id;
  std::string annotator_id;
  QuestionnaireResponse response;
  std::set<int> adjective_votes;
};

/// Raw pleasure/arousal scores: p = -q2 + q3, a = -q1 + q4. Both in [-4, 4].
std::pair<double, double> score_response(const QuestionnaireResponse& r);

/// Standardize to mean 0 and population variance 1. Requires length >= 2
/// and a non-constant input.
std::vector<double> zscore_normalize(const std::vector<double>& values);

/// Per-utterance label: mean of the annotators' raw scores, then z-scored
/// across the whole batch independently for pleasure and arousal.
std::map<std::string, PACoordinate> aggregate_labels(const std::vector<AnnotationRecord>& records);

/// Cronbach's alpha over an items x raters matrix, population variances.
double cronbach_alpha(const std::vector<std::vector<double>>& items_by_raters);

/// Rebuild adjective coordinates from annotator votes: an utterance maps to
/// an adjective once at least agreement_threshold annotators voted for it,
/// and the adjective lands on the centroid of its mapped utterances.
/// Adjectives that attract no utterance are dropped. Labels and categories
/// come from the catalog when provided; otherwise labels are synthesized
/// and categories assigned by quadrant.
AdjectiveLexicon build_lexicon(const std::vector<AnnotationRecord>& records,
                               const std::map<std::string, PACoordinate>& labels,
                               int agreement_threshold = 3,
                               int annotators_per_utterance = 5,
                               const AdjectiveLexicon* catalog = nullptr);

}  // namespace tss::annotate
