#include "tss/annotate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tss/error.hpp"

namespace tss::annotate {

namespace {

void check_question(int q) {
  require(q >= -2 && q <= 2, "question value out of [-2, 2]");
}

double population_variance(const std::vector<double>& v) {
  double n = static_cast<double>(v.size());
  double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return acc / n;
}

}  // namespace

std::pair<double, double> score_response(const QuestionnaireResponse& r) {
  check_question(r.q1);
  check_question(r.q2);
  check_question(r.q3);
  check_question(r.q4);
  double p = static_cast<double>(-r.q2 + r.q3);
  double a = static_cast<double>(-r.q1 + r.q4);
  return {p, a};
}

std::vector<double> zscore_normalize(const std::vector<double>& values) {
  require(values.size() >= 2, "z-score needs at least 2 values");
  for (double x : values) require(std::isfinite(x), "non-finite value in z-score input");

  double n = static_cast<double>(values.size());
  double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double var = 0.0;
  for (double x : values) var += (x - mean) * (x - mean);
  var /= n;
  require(var > 0.0, "zero variance");

  double sd = std::sqrt(var);
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / sd;
  return out;
}

std::map<std::string, PACoordinate> aggregate_labels(const std::vector<AnnotationRecord>& records) {
  require(!records.empty(), "no annotation records");

  // (utterance, annotator) must be unique within the batch.
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::vector<std::pair<double, double>>> raw;
  for (const auto& rec : records) {
    require(seen.insert({rec.utterance_id, rec.annotator_id}).second,
            "duplicate (utterance, annotator) pair: " + rec.utterance_id + "/" + rec.annotator_id);
    raw[rec.utterance_id].push_back(score_response(rec.response));
  }

  std::vector<std::string> ids;
  std::vector<double> p_raw, a_raw;
  ids.reserve(raw.size());
  for (const auto& [id, scores] : raw) {
    double sp = 0.0, sa = 0.0;
    for (const auto& [p, a] : scores) {
      sp += p;
      sa += a;
    }
    double n = static_cast<double>(scores.size());
    ids.push_back(id);
    p_raw.push_back(sp / n);
    a_raw.push_back(sa / n);
  }

  std::vector<double> p_norm = zscore_normalize(p_raw);
  std::vector<double> a_norm = zscore_normalize(a_raw);

  std::map<std::string, PACoordinate> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = {p_norm[i], a_norm[i]};
  return out;
}

double cronbach_alpha(const std::vector<std::vector<double>>& items_by_raters) {
  std::size_t items = items_by_raters.size();
  require(items >= 2, "cronbach alpha needs at least 2 items");
  std::size_t raters = items_by_raters.front().size();
  require(raters >= 2, "cronbach alpha needs at least 2 raters");
  for (const auto& row : items_by_raters)
    require(row.size() == raters, "ragged ratings matrix");

  std::vector<double> totals(items, 0.0);
  double sum_rater_var = 0.0;
  for (std::size_t r = 0; r < raters; ++r) {
    std::vector<double> column(items);
    for (std::size_t i = 0; i < items; ++i) {
      require(std::isfinite(items_by_raters[i][r]), "non-finite rating");
      column[i] = items_by_raters[i][r];
      totals[i] += column[i];
    }
    sum_rater_var += population_variance(column);
  }

  double total_var = population_variance(totals);
  require(total_var > 0.0, "zero total-score variance");

  double k = static_cast<double>(raters);
  return k / (k - 1.0) * (1.0 - sum_rater_var / total_var);
}

AdjectiveLexicon build_lexicon(const std::vector<AnnotationRecord>& records,
                               const std::map<std::string, PACoordinate>& labels,
                               int agreement_threshold,
                               int annotators_per_utterance,
                               const AdjectiveLexicon* catalog) {
  require(!records.empty(), "no annotation records");
  require(agreement_threshold >= 1, "agreement threshold must be positive");
  require(annotators_per_utterance >= agreement_threshold,
          "agreement threshold exceeds annotators per utterance");

  // Distinct annotators voting each (utterance, adjective).
  std::map<std::string, std::set<std::string>> annotators_of;
  std::map<std::pair<std::string, int>, std::set<std::string>> votes;
  for (const auto& rec : records) {
    auto& pool = annotators_of[rec.utterance_id];
    require(pool.insert(rec.annotator_id).second,
            "duplicate (utterance, annotator) pair: " + rec.utterance_id + "/" + rec.annotator_id);
    for (int adj : rec.adjective_votes) votes[{rec.utterance_id, adj}].insert(rec.annotator_id);
  }
  for (const auto& [id, pool] : annotators_of)
    require(static_cast<int>(pool.size()) <= annotators_per_utterance,
            "utterance " + id + " has more annotators than declared");

  std::map<int, std::vector<PACoordinate>> mapped;
  for (const auto& [key, who] : votes) {
    if (static_cast<int>(who.size()) < agreement_threshold) continue;
    auto it = labels.find(key.first);
    require(it != labels.end(), "no label for voted utterance " + key.first);
    mapped[key.second].push_back(it->second);
  }
  require(!mapped.empty(), "empty lexicon");

  AdjectiveLexicon out;
  for (const auto& [adj_id, coords] : mapped) {
    AdjectiveEntry e;
    e.id = adj_id;
    e.coord = centroid(coords);
    if (catalog != nullptr) {
      const AdjectiveEntry* base = catalog->find(adj_id);
      require(base != nullptr, "voted adjective " + std::to_string(adj_id) + " not in catalog");
      e.label = base->label;
      e.category = base->category;
    } else {
      e.label = "adjective-" + std::to_string(adj_id);
      e.category = category_of(e.coord);
    }
    out.entries.push_back(std::move(e));
  }
  validate(out);
  return out;
}

}  // namespace tss::annotate
