#include "cet/pipelines.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cet/json_io.hpp"
#include "cet/random.hpp"

namespace cet {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell += ch;
    }
  }
  out.push_back(cell);
  return out;
}

double parse_feature(const std::string& cell, int row, const std::string& column) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    fail(Errc::NonNumericFeature, "row " + std::to_string(row) + ", column '" +
                                      column + "': not a number: '" + cell + "'");
  }
  return value;
}

}  // namespace

Dataset ingest_csv_text(const std::string& text, const std::string& label_column) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(Errc::EmptyDataset, "no header row");
  const auto header = split_csv_line(line);
  int label_idx = -1;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == label_column) label_idx = static_cast<int>(i);
  }
  if (label_idx < 0) {
    fail(Errc::MissingLabel, "label column '" + label_column + "' not found");
  }

  Dataset d;
  for (size_t i = 0; i < header.size(); ++i) {
    if (static_cast<int>(i) != label_idx) d.attributes.push_back(header[i]);
  }

  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    ++row;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      fail(Errc::NonNumericFeature, "row " + std::to_string(row) + ": expected " +
                                        std::to_string(header.size()) + " cells, got " +
                                        std::to_string(cells.size()));
    }
    std::vector<double> feats;
    feats.reserve(d.attributes.size());
    std::string label;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (static_cast<int>(i) == label_idx) {
        label = cells[i];
      } else {
        feats.push_back(parse_feature(cells[i], row, header[i]));
      }
    }
    int cls = -1;
    for (size_t k = 0; k < d.classes.size(); ++k) {
      if (d.classes[k] == label) cls = static_cast<int>(k);
    }
    if (cls < 0) {
      cls = static_cast<int>(d.classes.size());
      d.classes.push_back(label);
    }
    d.features.push_back(std::move(feats));
    d.labels.push_back(cls);
  }
  if (d.features.empty()) fail(Errc::EmptyDataset, "no data rows");
  return d;
}

Dataset ingest_csv(const std::string& path, const std::string& label_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_csv_text(buf.str(), label_column);
}

ClassStats class_stats(const Dataset& d, std::span<const int> subset) {
  ClassStats out;
  out.class_frame = Frame(d.classes);
  out.per_class.assign(static_cast<size_t>(d.n_classes()),
                       std::vector<ClassAttrStats>(static_cast<size_t>(d.n_attributes())));
  for (int k = 0; k < d.n_classes(); ++k) {
    std::vector<int> members;
    for (int idx : subset) {
      if (d.labels[static_cast<size_t>(idx)] == k) members.push_back(idx);
    }
    for (int a = 0; a < d.n_attributes(); ++a) {
      ClassAttrStats& s = out.per_class[k][a];
      s.count = static_cast<int>(members.size());
      if (s.count < 2) continue;  // stays flagged degenerate
      double mean = 0.0;
      for (int idx : members) mean += d.features[static_cast<size_t>(idx)][a];
      mean /= s.count;
      double m2 = 0.0;
      for (int idx : members) {
        const double dv = d.features[static_cast<size_t>(idx)][a] - mean;
        m2 += dv * dv;
      }
      s.mean = mean;
      s.stddev = std::sqrt(m2 / (s.count - 1));
      s.degenerate = false;
      s.constant = s.stddev == 0.0;
    }
  }
  return out;
}

Cbba cbba_from_sample(std::span<const double> x, const ClassStats& stats, int attr) {
  Cbba c;
  c.frame = stats.class_frame;
  Complex total;
  for (size_t k = 0; k < stats.per_class.size(); ++k) {
    const ClassAttrStats& s = stats.per_class[k][static_cast<size_t>(attr)];
    if (s.degenerate) {
      fail(Errc::DegenerateStats,
           "class '" + stats.class_frame.label(static_cast<int>(k)) +
               "' has fewer than 2 members for attribute " + std::to_string(attr));
    }
    // Append x to the class sample and record how the statistics move.
    const double n = s.count;
    const double new_mean = (n * s.mean + x[static_cast<size_t>(attr)]) / (n + 1);
    const double m2 = s.stddev * s.stddev * (n - 1);
    const double new_m2 =
        m2 + (x[static_cast<size_t>(attr)] - s.mean) * (x[static_cast<size_t>(attr)] - new_mean);
    const double new_sd = std::sqrt(std::max(0.0, new_m2) / n);
    const double d_mean = std::abs(new_mean - s.mean);
    const double d_sd = std::abs(new_sd - s.stddev);
    const Complex z = std::polar(std::exp(-d_sd), d_mean);
    c.masses[focal::singleton(static_cast<int>(k))] = z;
    total += z;
  }
  if (magnitude(total) < 1e-300) {
    fail(Errc::DegenerateMass, "sample masses cancel; cannot normalize");
  }
  for (auto& [s, z] : c.masses) z /= total;
  return c;
}

Aggregate aggregate_from_id(const std::string& id) {
  if (id == "sum") return Aggregate::SumEntropyDiffs;
  if (id == "combine") return Aggregate::CombineThenMeasure;
  fail(Errc::InvalidArgument, "unknown aggregate mode '" + id + "'");
}

namespace {

// Entropy profile of one sample: one value per attribute, or a single value
// for the combined CBBA in CombineThenMeasure mode.
std::pair<std::vector<Cbba>, std::vector<double>> sample_profile(
    std::span<const double> x, const ClassStats& stats, const ClassifierConfig& cfg) {
  const int n_attr = static_cast<int>(stats.per_class.empty()
                                          ? 0
                                          : stats.per_class.front().size());
  std::vector<Cbba> cbbas;
  cbbas.reserve(static_cast<size_t>(n_attr));
  for (int a = 0; a < n_attr; ++a) {
    cbbas.push_back(cbba_from_sample(x, stats, a));
  }
  if (cfg.aggregate == Aggregate::CombineThenMeasure && n_attr > 1) {
    Cbba folded = cbbas.front();
    for (int a = 1; a < n_attr; ++a) folded = combine(folded, cbbas[a]).combined;
    std::vector<double> e{evaluate(cfg.entropy, folded)};
    return {{std::move(folded)}, std::move(e)};
  }
  std::vector<double> e;
  e.reserve(cbbas.size());
  for (const auto& c : cbbas) e.push_back(evaluate(cfg.entropy, c));
  return {std::move(cbbas), std::move(e)};
}

}  // namespace

OptimalMass select_optimal_mass(const Dataset& d, std::span<const int> class_members,
                                const ClassStats& stats, const ClassifierConfig& cfg) {
  if (class_members.size() < 2) {
    fail(Errc::DegenerateStats, "a class needs at least 2 training members");
  }
  std::vector<std::vector<double>> profiles;
  std::vector<std::vector<Cbba>> cbbas;
  profiles.reserve(class_members.size());
  for (int row : class_members) {
    auto [cs, es] = sample_profile(d.features[static_cast<size_t>(row)], stats, cfg);
    cbbas.push_back(std::move(cs));
    profiles.push_back(std::move(es));
  }
  int best = 0;
  double best_score = 0.0;
  for (size_t ci = 0; ci < profiles.size(); ++ci) {
    double score = 0.0;
    for (size_t cj = 0; cj < profiles.size(); ++cj) {
      if (cj == ci) continue;
      for (size_t a = 0; a < profiles[ci].size(); ++a) {
        score += std::abs(profiles[ci][a] - profiles[cj][a]);
      }
    }
    if (ci == 0 || score < best_score) {  // strict < keeps the lowest index on ties
      best = static_cast<int>(ci);
      best_score = score;
    }
  }
  OptimalMass out;
  out.member_position = best;
  out.dataset_row = class_members[static_cast<size_t>(best)];
  out.per_attribute = std::move(cbbas[static_cast<size_t>(best)]);
  out.entropies = std::move(profiles[static_cast<size_t>(best)]);
  return out;
}

int classify(std::span<const double> x, const std::vector<OptimalMass>& per_class,
             const ClassStats& stats, const ClassifierConfig& cfg) {
  const auto [cbbas, profile] = sample_profile(x, stats, cfg);
  int best = -1;
  double best_score = 0.0;
  for (size_t k = 0; k < per_class.size(); ++k) {
    double score = 0.0;
    for (size_t a = 0; a < profile.size(); ++a) {
      score += std::abs(profile[a] - per_class[k].entropies[a]);
    }
    if (best < 0 || score < best_score) {
      best = static_cast<int>(k);
      best_score = score;
    }
  }
  return best;
}

std::vector<SweepCell> accuracy_sweep(const Dataset& d, std::span<const double> ratios,
                                      std::span<const std::string> methods,
                                      std::uint64_t seed, const SweepConfig& cfg) {
  if (d.rows() < 2) fail(Errc::EmptyDataset, "sweep needs at least 2 rows");
  std::vector<int> order(static_cast<size_t>(d.rows()));
  for (int i = 0; i < d.rows(); ++i) order[static_cast<size_t>(i)] = i;
  Rng rng(seed);
  for (size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(i + 1)]);
  }
  const int n_test = std::max(1, static_cast<int>(std::lround(
                                     cfg.test_fraction * d.rows())));
  const std::vector<int> test(order.begin(), order.begin() + n_test);
  const std::vector<int> pool(order.begin() + n_test, order.end());

  std::vector<SweepCell> cells;
  for (double ratio : ratios) {
    const int n_train = std::clamp(
        static_cast<int>(std::lround(ratio * static_cast<double>(pool.size()))), 1,
        static_cast<int>(pool.size()));
    const std::span<const int> train(pool.data(), static_cast<size_t>(n_train));

    const ClassStats stats = class_stats(d, train);
    bool undersized = false;
    std::vector<std::vector<int>> members(static_cast<size_t>(d.n_classes()));
    for (int row : train) {
      members[static_cast<size_t>(d.labels[static_cast<size_t>(row)])].push_back(row);
    }
    for (const auto& m : members) {
      if (m.size() < 2) undersized = true;
    }

    for (const auto& method : methods) {
      SweepCell cell;
      cell.ratio = ratio;
      cell.method = method;
      cell.n_train = n_train;
      cell.n_test = n_test;
      if (undersized) {
        cell.missing = true;
        cell.accuracy = std::numeric_limits<double>::quiet_NaN();
        cells.push_back(std::move(cell));
        continue;
      }
      ClassifierConfig ccfg;
      ccfg.entropy = EntropyMethod::from_id(method);
      ccfg.aggregate = cfg.aggregate;
      std::vector<OptimalMass> optimal;
      optimal.reserve(members.size());
      for (const auto& m : members) {
        optimal.push_back(select_optimal_mass(d, m, stats, ccfg));
      }
      int correct = 0;
      for (int row : test) {
        const int predicted =
            classify(d.features[static_cast<size_t>(row)], optimal, stats, ccfg);
        if (predicted == d.labels[static_cast<size_t>(row)]) ++correct;
      }
      cell.accuracy = static_cast<double>(correct) / n_test;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string sweep_to_csv(std::span<const SweepCell> cells) {
  std::string out = "ratio,method,accuracy,n_train,n_test\n";
  char buf[160];
  for (const auto& c : cells) {
    if (c.missing) {
      std::snprintf(buf, sizeof(buf), "%.17g,%s,nan,%d,%d\n", c.ratio,
                    c.method.c_str(), c.n_train, c.n_test);
    } else {
      std::snprintf(buf, sizeof(buf), "%.17g,%s,%.17g,%d,%d\n", c.ratio,
                    c.method.c_str(), c.accuracy, c.n_train, c.n_test);
    }
    out += buf;
  }
  return out;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Undetermined: return "undetermined";
    case Verdict::Potential: return "potential";
    case Verdict::Accepted: return "accepted";
    case Verdict::Conflict: return "conflict";
  }
  return "undetermined";
}

DecisionTrace fuse_until_decision(std::span<const Cbba> evidence,
                                  const FusionConfig& cfg) {
  if (evidence.size() < 2) {
    fail(Errc::InvalidArgument, "fusion needs at least 2 evidence sources");
  }
  for (size_t i = 1; i < evidence.size(); ++i) {
    if (evidence[i].frame != evidence[0].frame) {
      fail(Errc::FrameMismatch, "evidence sources must share one frame");
    }
  }
  DecisionTrace trace;
  Cbba state = evidence[0];
  for (size_t j = 1; j < evidence.size(); ++j) {
    FusionStep step;
    step.step = static_cast<int>(j);
    step.combined_with = static_cast<int>(j) + 1;
    try {
      CombineResult r = combine(state, evidence[j]);
      state = std::move(r.combined);
      step.conflict = r.conflict;
    } catch (const Error& e) {
      if (e.code() != Errc::TotalConflict) throw;
      step.verdict = Verdict::Conflict;
      trace.steps.push_back(std::move(step));
      trace.final_verdict = Verdict::Conflict;
      trace.final_cbba = state;
      return trace;
    }
    double best_mag = -1.0;
    for (int i = 0; i < state.frame.size(); ++i) {
      const FocalSet e = focal::singleton(i);
      const double m = magnitude(state.at(e));
      step.singleton_magnitudes[e] = m;
      if (m > best_mag) {  // strict > keeps the lowest index on ties
        best_mag = m;
        step.target = e;
      }
    }
    step.entropy_bits = fcb(state);
    if (best_mag >= cfg.sigma) {
      step.verdict = step.entropy_bits <= cfg.epsilon ? Verdict::Accepted
                                                      : Verdict::Potential;
    } else {
      step.verdict = Verdict::Undetermined;
    }
    trace.steps.push_back(step);
    if (step.verdict == Verdict::Accepted) {
      trace.final_verdict = Verdict::Accepted;
      trace.accepted_target = step.target;
      trace.final_cbba = state;
      return trace;
    }
  }
  trace.final_verdict = trace.steps.back().verdict;
  trace.final_cbba = state;
  return trace;
}

std::string trace_to_json(const DecisionTrace& trace, const FusionConfig& cfg,
                          int indent) {
  nlohmann::json doc;
  doc["sigma"] = cfg.sigma;
  doc["epsilon"] = cfg.epsilon;
  doc["verdict"] = verdict_name(trace.final_verdict);
  if (trace.final_verdict == Verdict::Accepted) {
    doc["target"] = focal::to_string(trace.accepted_target, trace.final_cbba.frame);
  }
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    nlohmann::json row;
    row["step"] = s.step;
    row["combined_with"] = s.combined_with;
    row["verdict"] = verdict_name(s.verdict);
    row["conflict"] = {{"re", s.conflict.real()}, {"im", s.conflict.imag()}};
    if (s.verdict != Verdict::Conflict) {
      nlohmann::json mags;
      for (const auto& [e, m] : s.singleton_magnitudes) {
        // Frame labels are unique, so this is loss-free.
        int idx = 0;
        while (!(e & focal::singleton(idx))) ++idx;
        mags[trace.final_cbba.frame.label(idx)] = m;
      }
      row["singletons"] = mags;
      row["target"] = focal::to_string(s.target, trace.final_cbba.frame);
      row["entropy_bits"] = s.entropy_bits;
    }
    steps.push_back(row);
  }
  doc["steps"] = steps;
  return doc.dump(indent);
}

}  // namespace cet
