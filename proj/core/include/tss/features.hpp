#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tss/rng.hpp"
#include "tss/space.hpp"

namespace tss::features {

enum class Modality { acoustic, visual, textual };

const char* to_string(Modality m);
Modality modality_from_string(const std::string& s);

/// Frame-level low-level descriptor stream: T frames by d descriptor dims.
struct LLDSequence {
  std::vector<std::vector<double>> frames;
  Modality modality = Modality::acoustic;
};

/// Number of statistical functionals applied per descriptor dimension.
inline constexpr std::size_t kFunctionalCount = 14;

/// Summarize a frame stream into a fixed-length vector of 14 statistics per
/// descriptor dimension, dimension-major. Order per dimension: mean, std,
/// disp, max, min, range, q1, q2, q3, iqr12, iqr23, iqr13, skewness,
/// excess kurtosis. std and the higher moments use population convention;
/// disp is the mean absolute deviation from the mean; quartiles interpolate
/// linearly between closest ranks; skewness and kurtosis are 0 when std is 0.
std::vector<double> functionals(const LLDSequence& seq);

/// Half-open index range within one modality's feature vector.
struct Slice {
  Modality modality = Modality::acoustic;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Path {
  std::vector<Slice> slices;
  std::size_t dim() const;
};

enum class PathKind { acoustic, other, mixed };
PathKind path_kind(const Path& p);

struct ModalityDims {
  std::size_t acoustic = 0;
  std::size_t visual = 0;
  std::size_t textual = 0;
  std::size_t total() const { return acoustic + visual + textual; }
  std::size_t of(Modality m) const;
};

/// Partition of the three modality vectors into N model paths. Every input
/// dimension is covered by exactly one slice of exactly one path.
struct GroupingConfig {
  ModalityDims dims;
  std::vector<Path> paths;

  std::size_t path_count() const { return paths.size(); }
  std::vector<std::size_t> path_dims() const;
};

/// Throws unless paths are disjoint and cover each declared modality range
/// exactly once.
void validate(const GroupingConfig& cfg);

/// Canonical 64-bit hash of a grouping config (order-sensitive).
std::uint64_t grouping_hash(const GroupingConfig& cfg);
std::string grouping_hash_hex(const GroupingConfig& cfg);

/// Even contiguous split: acoustic into acoustic_paths ranges whose sizes
/// differ by at most one, then one visual path and one textual path.
/// Modalities with zero dims contribute no path.
GroupingConfig make_grouping(std::size_t acoustic_dim, std::size_t visual_dim,
                             std::size_t textual_dim, std::size_t acoustic_paths = 5);

/// Collapse a config into a single path covering everything, preserving
/// slice order. Used by the single-path regressor variant.
GroupingConfig merge_to_single_path(const GroupingConfig& cfg);

/// Keep only the selected modalities (paths of dropped modalities removed,
/// dims zeroed). Paths mixing kept and dropped modalities are rejected.
GroupingConfig mask_modalities(const GroupingConfig& cfg, bool keep_visual, bool keep_textual);

/// Scatter the three modality vectors into the configured path vectors.
std::vector<std::vector<double>> group_features(std::span<const double> acoustic,
                                                std::span<const double> visual,
                                                std::span<const double> textual,
                                                const GroupingConfig& cfg);

/// One utterance as stored on disk: per-modality feature vectors plus
/// metadata, before any path grouping.
struct RawUtterance {
  std::string id;
  std::string teacher_id;
  std::string course_id;
  double t_seconds = 0.0;
  std::vector<double> acoustic;
  std::vector<double> visual;
  std::vector<double> textual;
  std::optional<PACoordinate> label;
};

/// Strip dropped modality vectors from a record (for ablation runs).
RawUtterance strip_modalities(const RawUtterance& r, bool keep_visual, bool keep_textual);

/// Apply the grouping to a batch of raw records.
std::vector<UtteranceRecord> group_records(std::span<const RawUtterance> raw,
                                           const GroupingConfig& cfg);

/// Which modalities feed the planted label map of a synthetic dataset.
enum class SignalDeps { all_modalities, acoustic_only };

const char* to_string(SignalDeps d);
SignalDeps deps_from_string(const std::string& s);

/// The ground truth behind a synthetic dataset: a low-rank linear map into
/// a tanh latent, then linear readouts for pleasure and arousal.
struct PlantedMap {
  ModalityDims dims;
  std::size_t rank = 0;
  SignalDeps deps = SignalDeps::all_modalities;
  std::vector<double> latent;        // rank x dims.total(), row-major
  std::vector<double> pleasure_out;  // rank
  std::vector<double> arousal_out;   // rank

  PACoordinate apply(std::span<const double> acoustic, std::span<const double> visual,
                     std::span<const double> textual) const;
  PACoordinate apply(const RawUtterance& r) const;
};

struct SynthConfig {
  std::size_t count = 0;
  double noise_sd = 0.0;
  std::uint64_t seed = 0;
  SignalDeps deps = SignalDeps::all_modalities;
  std::size_t rank = 3;
};

struct SynthDataset {
  std::vector<RawUtterance> records;
  PlantedMap truth;
};

/// Deterministic synthetic dataset: features are standard normal draws,
/// labels come from a planted map of the features plus Gaussian noise.
/// Identical (cfg, sc) always produces identical bytes.
SynthDataset synth_raw(const GroupingConfig& cfg, const SynthConfig& sc);

/// Grouped view of synth_raw for direct model consumption.
std::vector<UtteranceRecord> synth_dataset(std::size_t n, const GroupingConfig& cfg,
                                           double noise_sd, std::uint64_t seed,
                                           SignalDeps deps = SignalDeps::all_modalities);

/// Small three-modality config used by the synthetic pipeline unless the
/// caller supplies one: 10 acoustic dims over 5 paths, 4 visual, 6 textual.
GroupingConfig default_synth_grouping(std::size_t acoustic_paths = 5);

}  // namespace tss::features
