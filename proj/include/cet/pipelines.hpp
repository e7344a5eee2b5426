#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cet/entropies.hpp"

namespace cet {

// Labeled numeric dataset. Classes are indexed in order of first appearance.
struct Dataset {
  std::vector<std::string> attributes;
  std::vector<std::string> classes;
  std::vector<std::vector<double>> features;  // one row per record
  std::vector<int> labels;                    // class index per record

  int rows() const noexcept { return static_cast<int>(features.size()); }
  int n_attributes() const noexcept { return static_cast<int>(attributes.size()); }
  int n_classes() const noexcept { return static_cast<int>(classes.size()); }
};

// CSV with a header row; the label column is named, every other column must
// be numeric. Throws MissingLabel / NonNumericFeature / EmptyDataset.
Dataset ingest_csv(const std::string& path, const std::string& label_column);
Dataset ingest_csv_text(const std::string& text, const std::string& label_column);

struct ClassAttrStats {
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;     // sample standard deviation (ddof = 1)
  bool degenerate = true;  // fewer than 2 members
  bool constant = false;   // stddev == 0 with enough members
};

// Per-class, per-attribute sample statistics over a subset of rows.
struct ClassStats {
  Frame class_frame;  // one element per dataset class
  std::vector<std::vector<ClassAttrStats>> per_class;  // [class][attribute]
};

ClassStats class_stats(const Dataset& d, std::span<const int> subset);

// Initial CBBA of a sample for one attribute: for each class k the mass on
// {class k} is exp(-|d_stddev|) * exp(i |d_mean|), where the deltas are the
// stat changes caused by appending the sample to that class; the masses are
// then normalized by their complex sum. Throws DegenerateStats when a class
// has fewer than 2 members for the attribute.
Cbba cbba_from_sample(std::span<const double> x, const ClassStats& stats, int attr);

enum class Aggregate {
  SumEntropyDiffs,     // per-attribute CBBAs, entropy differences summed
  CombineThenMeasure,  // per-attribute CBBAs folded with the combination rule
};

Aggregate aggregate_from_id(const std::string& id);

struct ClassifierConfig {
  EntropyMethod entropy = EntropyMethod::from_id("fcb");
  Aggregate aggregate = Aggregate::SumEntropyDiffs;
};

// The training member of one class whose entropy profile has the smallest
// total absolute difference from the other members (ties to the lowest index).
struct OptimalMass {
  int member_position = 0;          // position within the class member list
  int dataset_row = 0;
  std::vector<Cbba> per_attribute;  // single entry in CombineThenMeasure mode
  std::vector<double> entropies;
};

OptimalMass select_optimal_mass(const Dataset& d, std::span<const int> class_members,
                                const ClassStats& stats, const ClassifierConfig& cfg);

// Stage-3 assignment: the class whose optimal entropy profile is closest to
// the sample's, summed over attributes; deterministic ties to the lowest class.
int classify(std::span<const double> x, const std::vector<OptimalMass>& per_class,
             const ClassStats& stats, const ClassifierConfig& cfg);

struct SweepCell {
  double ratio = 0.0;
  std::string method;
  double accuracy = 0.0;
  int n_train = 0;
  int n_test = 0;
  bool missing = false;  // some class had too few training members
};

struct SweepConfig {
  double test_fraction = 0.2;  // held out once; constant across ratios
  Aggregate aggregate = Aggregate::SumEntropyDiffs;
};

// Deterministic accuracy table over training ratios and entropy methods.
// The test split is fixed by the seed; training sets are nested prefixes of
// the remaining pool so the ratio axis is monotone in data.
std::vector<SweepCell> accuracy_sweep(const Dataset& d, std::span<const double> ratios,
                                      std::span<const std::string> methods,
                                      std::uint64_t seed, const SweepConfig& cfg = {});

std::string sweep_to_csv(std::span<const SweepCell> cells);

// ---------------------------------------------------------------------------
// Iterative fusion decision engine.

struct FusionConfig {
  double sigma = 0.5;    // belief threshold on the best singleton modulus
  double epsilon = 2.0;  // entropy threshold in bits
};

enum class Verdict { Undetermined, Potential, Accepted, Conflict };

const char* verdict_name(Verdict v) noexcept;

struct FusionStep {
  int step = 0;           // 1-based fold index
  int combined_with = 0;  // 1-based ordinal of the evidence folded in
  Complex conflict;       // K of this fold
  std::map<FocalSet, double> singleton_magnitudes;
  FocalSet target = 0;    // argmax singleton (ties to the lowest index)
  double entropy_bits = 0.0;
  Verdict verdict = Verdict::Undetermined;
};

struct DecisionTrace {
  std::vector<FusionStep> steps;
  Verdict final_verdict = Verdict::Undetermined;
  FocalSet accepted_target = 0;  // meaningful when final_verdict == Accepted
  Cbba final_cbba;
};

// Left fold of the evidence with the complex combination rule. After each
// fold the verdict is accepted when the best singleton modulus reaches sigma
// and the FCB entropy is at most epsilon; folding stops there. Total conflict
// terminates the trace with a Conflict verdict.
DecisionTrace fuse_until_decision(std::span<const Cbba> evidence,
                                  const FusionConfig& cfg = {});

std::string trace_to_json(const DecisionTrace& trace, const FusionConfig& cfg,
                          int indent = 2);

}  // namespace cet
