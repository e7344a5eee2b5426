#include "cet/cet.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "cet/json_io.hpp"
#include "cet/pipelines.hpp"
#include "cet/random.hpp"

namespace {

thread_local int g_last_status = CET_OK;
thread_local std::string g_last_message;

cet_status status_of(cet::Errc code) {
  using cet::Errc;
  switch (code) {
    case Errc::InvalidArgument: return CET_ERR_INVALID_ARGUMENT;
    case Errc::InvalidFrame: return CET_ERR_INVALID_FRAME;
    case Errc::FrameMismatch: return CET_ERR_FRAME_MISMATCH;
    case Errc::FrameTooLarge: return CET_ERR_FRAME_TOO_LARGE;
    case Errc::EmptyFocal: return CET_ERR_EMPTY_FOCAL;
    case Errc::ZeroPhaseUndefined: return CET_ERR_ZERO_PHASE_UNDEFINED;
    case Errc::DegenerateMass: return CET_ERR_DEGENERATE_MASS;
    case Errc::InvalidSpeed: return CET_ERR_INVALID_SPEED;
    case Errc::TotalConflict: return CET_ERR_TOTAL_CONFLICT;
    case Errc::InvalidDistribution: return CET_ERR_INVALID_DISTRIBUTION;
    case Errc::UnknownModel: return CET_ERR_UNKNOWN_MODEL;
    case Errc::MissingLabel: return CET_ERR_MISSING_LABEL;
    case Errc::NonNumericFeature: return CET_ERR_NON_NUMERIC_FEATURE;
    case Errc::EmptyDataset: return CET_ERR_EMPTY_DATASET;
    case Errc::DegenerateStats: return CET_ERR_DEGENERATE_STATS;
    case Errc::BadDocument: return CET_ERR_BAD_DOCUMENT;
    case Errc::DuplicateSet: return CET_ERR_DUPLICATE_SET;
    case Errc::UnknownLabel: return CET_ERR_UNKNOWN_LABEL;
    case Errc::EmptySetMass: return CET_ERR_EMPTY_SET_MASS;
    case Errc::SumViolation: return CET_ERR_SUM_VIOLATION;
    case Errc::MagnitudeViolation: return CET_ERR_MAGNITUDE_VIOLATION;
    case Errc::FocalOutOfRange: return CET_ERR_FOCAL_OUT_OF_RANGE;
  }
  return CET_ERR_INTERNAL;
}

void clear_status() {
  g_last_status = CET_OK;
  g_last_message.clear();
}

int record_error(const std::exception& e) {
  if (const auto* err = dynamic_cast<const cet::Error*>(&e)) {
    g_last_status = status_of(err->code());
  } else {
    g_last_status = CET_ERR_INTERNAL;
  }
  g_last_message = e.what();
  return g_last_status;
}

int record_invalid(const char* message) {
  g_last_status = CET_ERR_INVALID_ARGUMENT;
  g_last_message = message;
  return g_last_status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const cet::Cbba& unwrap(const cet_cbba* c) {
  return *reinterpret_cast<const cet::Cbba*>(c);
}

cet_cbba* wrap(cet::Cbba value) {
  return reinterpret_cast<cet_cbba*>(new cet::Cbba(std::move(value)));
}

const cet::Dataset& unwrap(const cet_dataset* d) {
  return *reinterpret_cast<const cet::Dataset*>(d);
}

// Runs fn and converts exceptions to the thread-local status; F yields T*.
template <typename F>
auto guarded_ptr(F&& fn) -> decltype(fn()) {
  clear_status();
  try {
    return fn();
  } catch (const std::exception& e) {
    record_error(e);
    return nullptr;
  }
}

template <typename F>
int guarded_status(F&& fn) {
  clear_status();
  try {
    fn();
    return CET_OK;
  } catch (const std::exception& e) {
    return record_error(e);
  }
}

std::string iterate_csv(const cet::Cbba& c, int p, int steps) {
  const auto seq = cet::cpbt_iterate(c, p, steps);
  std::string out = "step,focal,re,im,modulus,commitment\n";
  char buf[256];
  for (size_t t = 0; t < seq.size(); ++t) {
    double total = 0.0;
    for (const auto& [s, z] : seq[t].masses) total += cet::magnitude(z);
    for (const auto& [s, z] : seq[t].masses) {
      std::string focal_label;
      for (int i = 0; i < c.frame.size(); ++i) {
        if (s & cet::focal::singleton(i)) {
          if (!focal_label.empty()) focal_label += '|';
          focal_label += c.frame.label(i);
        }
      }
      const double m = cet::magnitude(z);
      std::snprintf(buf, sizeof(buf), "%zu,%s,%.17g,%.17g,%.17g,%.17g\n", t,
                    focal_label.c_str(), z.real(), z.imag(), m,
                    total > 0 ? m / total : 0.0);
      out += buf;
    }
  }
  return out;
}

std::string decomposition_csv(int grid_points) {
  if (grid_points < 2) cet::fail(cet::Errc::InvalidArgument, "grid needs >= 2 points");
  const cet::Frame frame({"e1", "e2"});
  std::string out = "x,y,fcb,discord,nonspecificity\n";
  char buf[256];
  for (int xi = 0; xi < grid_points; ++xi) {
    for (int yi = 0; yi < grid_points; ++yi) {
      const double x = static_cast<double>(xi) / (grid_points - 1);
      const double y = static_cast<double>(yi) / (grid_points - 1);
      if (std::hypot(x, y) > 1.0 || std::hypot(1.0 - x, y) > 1.0) continue;
      cet::Cbba c;
      c.frame = frame;
      const cet::Complex m1{1.0 - x, -y};
      const cet::Complex m12{x, y};
      if (cet::magnitude(m1) > 0.0) c.masses[0b01] = m1;
      if (cet::magnitude(m12) > 0.0) c.masses[0b11] = m12;
      if (c.masses.empty()) continue;
      const double total = cet::fcb(c);
      const double discord = cet::fcb_discord(c);
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", x, y,
                    total, discord, total - discord);
      out += buf;
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* cet_version(void) { return "0.1.0"; }

const char* cet_status_name(int code) {
  switch (static_cast<cet_status>(code)) {
    case CET_OK: return "Ok";
    case CET_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case CET_ERR_INVALID_FRAME: return "InvalidFrame";
    case CET_ERR_FRAME_MISMATCH: return "FrameMismatch";
    case CET_ERR_FRAME_TOO_LARGE: return "FrameTooLarge";
    case CET_ERR_EMPTY_FOCAL: return "EmptyFocal";
    case CET_ERR_ZERO_PHASE_UNDEFINED: return "ZeroPhaseUndefined";
    case CET_ERR_DEGENERATE_MASS: return "DegenerateMass";
    case CET_ERR_INVALID_SPEED: return "InvalidSpeed";
    case CET_ERR_TOTAL_CONFLICT: return "TotalConflict";
    case CET_ERR_INVALID_DISTRIBUTION: return "InvalidDistribution";
    case CET_ERR_UNKNOWN_MODEL: return "UnknownModel";
    case CET_ERR_MISSING_LABEL: return "MissingLabel";
    case CET_ERR_NON_NUMERIC_FEATURE: return "NonNumericFeature";
    case CET_ERR_EMPTY_DATASET: return "EmptyDataset";
    case CET_ERR_DEGENERATE_STATS: return "DegenerateStats";
    case CET_ERR_BAD_DOCUMENT: return "BadDocument";
    case CET_ERR_DUPLICATE_SET: return "DuplicateSet";
    case CET_ERR_UNKNOWN_LABEL: return "UnknownLabel";
    case CET_ERR_EMPTY_SET_MASS: return "EmptySetMass";
    case CET_ERR_SUM_VIOLATION: return "SumViolation";
    case CET_ERR_MAGNITUDE_VIOLATION: return "MagnitudeViolation";
    case CET_ERR_FOCAL_OUT_OF_RANGE: return "FocalOutOfRange";
    case CET_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownError";
}

int cet_last_status(void) { return g_last_status; }

const char* cet_last_message(void) { return g_last_message.c_str(); }

void cet_string_free(char* s) { std::free(s); }

void cet_cbba_free(cet_cbba* c) { delete reinterpret_cast<cet::Cbba*>(c); }

void cet_dataset_free(cet_dataset* d) { delete reinterpret_cast<cet::Dataset*>(d); }

cet_cbba* cet_cbba_from_json(const char* text, int enforce, double tolerance) {
  return guarded_ptr([&]() -> cet_cbba* {
    if (!text) {
      record_invalid("text must not be NULL");
      return nullptr;
    }
    const double tol = tolerance > 0 ? tolerance : cet::kDefaultTolerance;
    return wrap(cet::cbba_from_json(text, enforce != 0, tol));
  });
}

char* cet_cbba_to_json(const cet_cbba* c) {
  return guarded_ptr([&]() -> char* {
    if (!c) {
      record_invalid("cbba must not be NULL");
      return nullptr;
    }
    return dup_string(cet::cbba_to_json(unwrap(c)));
  });
}

char* cet_cbba_validate_json(const cet_cbba* c, double tolerance) {
  return guarded_ptr([&]() -> char* {
    if (!c) {
      record_invalid("cbba must not be NULL");
      return nullptr;
    }
    const double tol = tolerance > 0 ? tolerance : cet::kDefaultTolerance;
    return dup_string(cet::validation_report_to_json(cet::validate(unwrap(c), tol)));
  });
}

int cet_cbba_frame_size(const cet_cbba* c) {
  return c ? unwrap(c).frame.size() : 0;
}

char* cet_cbba_frame_label(const cet_cbba* c, int index) {
  return guarded_ptr([&]() -> char* {
    if (!c || index < 0 || index >= unwrap(c).frame.size()) {
      record_invalid("label index out of range");
      return nullptr;
    }
    return dup_string(unwrap(c).frame.label(index));
  });
}

cet_cbba* cet_cbba_random(const char* const* labels, int n_labels,
                          unsigned long long seed, const char* profile) {
  return guarded_ptr([&]() -> cet_cbba* {
    if (!labels || n_labels < 1 || !profile) {
      record_invalid("labels and profile are required");
      return nullptr;
    }
    std::vector<std::string> ls(labels, labels + n_labels);
    return wrap(cet::random_cbba(cet::Frame(std::move(ls)), seed,
                                 cet::random_profile_from_id(profile)));
  });
}

cet_cbba* cet_combine(const cet_cbba* a, const cet_cbba* b, double* k_re,
                      double* k_im) {
  return guarded_ptr([&]() -> cet_cbba* {
    if (!a || !b) {
      record_invalid("both operands are required");
      return nullptr;
    }
    cet::CombineResult r = cet::combine(unwrap(a), unwrap(b));
    if (k_re) *k_re = r.conflict.real();
    if (k_im) *k_im = r.conflict.imag();
    return wrap(std::move(r.combined));
  });
}

cet_cbba* cet_joint(const cet_cbba* x, const cet_cbba* y) {
  return guarded_ptr([&]() -> cet_cbba* {
    if (!x || !y) {
      record_invalid("both operands are required");
      return nullptr;
    }
    return wrap(cet::joint(unwrap(x), unwrap(y)));
  });
}

cet_cbba* cet_exp_negation(const cet_cbba* c, int include_empty) {
  return guarded_ptr([&]() -> cet_cbba* {
    if (!c) {
      record_invalid("cbba must not be NULL");
      return nullptr;
    }
    return wrap(cet::exp_negation(unwrap(c), include_empty != 0));
  });
}

char* cet_cpbt_json(const cet_cbba* c) {
  return guarded_ptr([&]() -> char* {
    if (!c) {
      record_invalid("cbba must not be NULL");
      return nullptr;
    }
    return dup_string(cet::mass_map_to_json(unwrap(c).frame, cet::cpbt(unwrap(c))));
  });
}

char* cet_cpbt_iterate_csv(const cet_cbba* c, int p, int steps) {
  return guarded_ptr([&]() -> char* {
    if (!c) {
      record_invalid("cbba must not be NULL");
      return nullptr;
    }
    return dup_string(iterate_csv(unwrap(c), p, steps));
  });
}

char* cet_fcbba_json(const cet_cbba* c) {
  return guarded_ptr([&]() -> char* {
    if (!c) {
      record_invalid("cbba must not be NULL");
      return nullptr;
    }
    return dup_string(cet::fcbba_to_json(cet::fcbba(unwrap(c))));
  });
}

char* cet_joint_fcbba_json(const cet_cbba* x, const cet_cbba* y) {
  return guarded_ptr([&]() -> char* {
    if (!x || !y) {
      record_invalid("both operands are required");
      return nullptr;
    }
    return dup_string(cet::fcbba_to_json(cet::joint_fcbba(unwrap(x), unwrap(y))));
  });
}

int cet_entropy_bits(const cet_cbba* c, const char* method, double* out_bits) {
  return guarded_status([&]() {
    if (!c || !method || !out_bits) {
      cet::fail(cet::Errc::InvalidArgument, "cbba, method and out pointer required");
    }
    *out_bits = cet::evaluate(cet::EntropyMethod::from_id(method), unwrap(c));
  });
}

int cet_fcb_max_bits(int frame_size, double* out_bits) {
  return guarded_status([&]() {
    if (!out_bits) cet::fail(cet::Errc::InvalidArgument, "out pointer required");
    *out_bits = cet::fcb_max(frame_size);
  });
}

char* cet_entropy_sweep_csv(int grid_points) {
  return guarded_ptr([&]() -> char* { return dup_string(decomposition_csv(grid_points)); });
}

cet_dataset* cet_dataset_load_csv(const char* path, const char* label_column) {
  return guarded_ptr([&]() -> cet_dataset* {
    if (!path || !label_column) {
      record_invalid("path and label column are required");
      return nullptr;
    }
    return reinterpret_cast<cet_dataset*>(
        new cet::Dataset(cet::ingest_csv(path, label_column)));
  });
}

cet_dataset* cet_dataset_from_csv_text(const char* text, const char* label_column) {
  return guarded_ptr([&]() -> cet_dataset* {
    if (!text || !label_column) {
      record_invalid("text and label column are required");
      return nullptr;
    }
    return reinterpret_cast<cet_dataset*>(
        new cet::Dataset(cet::ingest_csv_text(text, label_column)));
  });
}

int cet_dataset_rows(const cet_dataset* d) { return d ? unwrap(d).rows() : 0; }

int cet_dataset_attributes(const cet_dataset* d) {
  return d ? unwrap(d).n_attributes() : 0;
}

int cet_dataset_classes(const cet_dataset* d) {
  return d ? unwrap(d).n_classes() : 0;
}

char* cet_classify_csv(const cet_dataset* d, double ratio,
                       unsigned long long seed, const char* method,
                       const char* aggregate, double test_fraction,
                       double* accuracy_out) {
  return guarded_ptr([&]() -> char* {
    if (!d || !method) {
      record_invalid("dataset and method are required");
      return nullptr;
    }
    const cet::Dataset& data = unwrap(d);
    std::vector<double> ratios{ratio};
    std::vector<std::string> methods{method};
    cet::SweepConfig cfg;
    if (test_fraction > 0) cfg.test_fraction = test_fraction;
    cfg.aggregate = cet::aggregate_from_id(aggregate ? aggregate : "sum");

    // Re-run the single-cell sweep split so classify output matches sweep cells.
    std::vector<int> order(static_cast<size_t>(data.rows()));
    for (int i = 0; i < data.rows(); ++i) order[static_cast<size_t>(i)] = i;
    cet::Rng rng(seed);
    for (size_t i = order.size() - 1; i > 0; --i) {
      std::swap(order[i], order[rng.below(i + 1)]);
    }
    const int n_test = std::max(
        1, static_cast<int>(std::lround(cfg.test_fraction * data.rows())));
    const std::vector<int> test(order.begin(), order.begin() + n_test);
    const std::vector<int> pool(order.begin() + n_test, order.end());
    const int n_train =
        std::clamp(static_cast<int>(std::lround(ratio * static_cast<double>(pool.size()))),
                   1, static_cast<int>(pool.size()));
    const std::span<const int> train(pool.data(), static_cast<size_t>(n_train));

    const cet::ClassStats stats = cet::class_stats(data, train);
    std::vector<std::vector<int>> members(static_cast<size_t>(data.n_classes()));
    for (int row : train) {
      members[static_cast<size_t>(data.labels[static_cast<size_t>(row)])].push_back(row);
    }
    cet::ClassifierConfig ccfg;
    ccfg.entropy = cet::EntropyMethod::from_id(method);
    ccfg.aggregate = cfg.aggregate;
    std::vector<cet::OptimalMass> optimal;
    for (const auto& m : members) {
      optimal.push_back(cet::select_optimal_mass(data, m, stats, ccfg));
    }
    std::string out = "row,truth,predicted\n";
    int correct = 0;
    char buf[128];
    for (int row : test) {
      const int truth = data.labels[static_cast<size_t>(row)];
      const int predicted =
          cet::classify(data.features[static_cast<size_t>(row)], optimal, stats, ccfg);
      if (predicted == truth) ++correct;
      std::snprintf(buf, sizeof(buf), "%d,%s,%s\n", row,
                    data.classes[static_cast<size_t>(truth)].c_str(),
                    data.classes[static_cast<size_t>(predicted)].c_str());
      out += buf;
    }
    if (accuracy_out) *accuracy_out = static_cast<double>(correct) / n_test;
    return dup_string(out);
  });
}

char* cet_accuracy_sweep_csv(const cet_dataset* d, const double* ratios,
                             int n_ratios, const char* const* methods,
                             int n_methods, unsigned long long seed,
                             double test_fraction, const char* aggregate) {
  return guarded_ptr([&]() -> char* {
    if (!d || !ratios || n_ratios < 1 || !methods || n_methods < 1) {
      record_invalid("dataset, ratios and methods are required");
      return nullptr;
    }
    std::vector<double> rs(ratios, ratios + n_ratios);
    std::vector<std::string> ms(methods, methods + n_methods);
    cet::SweepConfig cfg;
    if (test_fraction > 0) cfg.test_fraction = test_fraction;
    cfg.aggregate = cet::aggregate_from_id(aggregate ? aggregate : "sum");
    const auto cells = cet::accuracy_sweep(unwrap(d), rs, ms, seed, cfg);
    return dup_string(cet::sweep_to_csv(cells));
  });
}

char* cet_fuse_json(const cet_cbba* const* evidence, int n_evidence,
                    double sigma, double epsilon) {
  return guarded_ptr([&]() -> char* {
    if (!evidence || n_evidence < 2) {
      record_invalid("at least 2 evidence sources are required");
      return nullptr;
    }
    std::vector<cet::Cbba> ev;
    ev.reserve(static_cast<size_t>(n_evidence));
    for (int i = 0; i < n_evidence; ++i) {
      if (!evidence[i]) {
        record_invalid("evidence entries must not be NULL");
        return nullptr;
      }
      ev.push_back(unwrap(evidence[i]));
    }
    cet::FusionConfig cfg;
    cfg.sigma = sigma;
    cfg.epsilon = epsilon;
    const cet::DecisionTrace trace = cet::fuse_until_decision(ev, cfg);
    return dup_string(cet::trace_to_json(trace, cfg));
  });
}

}  // extern "C"
