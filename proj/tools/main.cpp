// cet: command-line frontend of the complex-evidence-theory toolkit.
// Talks to the library exclusively through the C API in cet/cet.h.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cet/cet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct CbbaDeleter {
  void operator()(cet_cbba* c) const { cet_cbba_free(c); }
};
struct DatasetDeleter {
  void operator()(cet_dataset* d) const { cet_dataset_free(d); }
};
using CbbaPtr = std::unique_ptr<cet_cbba, CbbaDeleter>;
using DatasetPtr = std::unique_ptr<cet_dataset, DatasetDeleter>;

struct StringDeleter {
  void operator()(char* s) const { cet_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die_domain() {
  std::cerr << "error: " << cet_status_name(cet_last_status()) << ": "
            << cet_last_message() << "\n";
  std::exit(kExitDomainError);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: InvalidArgument: cannot open '" << path << "'\n";
    std::exit(kExitDomainError);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: InvalidArgument: cannot write '" << out_path << "'\n";
    std::exit(kExitDomainError);
  }
  out << content;
}

double env_tolerance() {
  const char* v = std::getenv("CET_TOLERANCE");
  if (!v || !*v) return 0.0;  // 0 selects the library default
  return std::atof(v);
}

CbbaPtr load_cbba(const std::string& path, bool force) {
  const std::string text = read_file(path);
  CbbaPtr c(cet_cbba_from_json(text.c_str(), force ? 0 : 1, env_tolerance()));
  if (!c) die_domain();
  return c;
}

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::vector<double> parse_ratios(const std::string& spec) {
  std::vector<double> out;
  // start:end:count sweeps linearly; otherwise a comma list.
  const auto c1 = spec.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      std::cerr << "error: ratios range must be start:end:count\n";
      std::exit(kExitUsageError);
    }
    const double start = std::atof(spec.substr(0, c1).c_str());
    const double end = std::atof(spec.substr(c1 + 1, c2 - c1 - 1).c_str());
    const int count = std::atoi(spec.substr(c2 + 1).c_str());
    if (count < 1) {
      std::cerr << "error: ratios count must be >= 1\n";
      std::exit(kExitUsageError);
    }
    for (int i = 0; i < count; ++i) {
      out.push_back(count == 1 ? start
                               : start + (end - start) * i / (count - 1));
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::atof(tok.c_str()));
  }
  if (out.empty()) {
    std::cerr << "error: empty ratios list\n";
    std::exit(kExitUsageError);
  }
  return out;
}

std::vector<std::string> parse_list(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex evidence theory toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string in_path, in_a, in_b, out_path, method = "fcb", model;
  std::string data_path, label_column, ratios_spec = "0.5", methods_spec = "fcb";
  std::string aggregate = "sum";
  std::vector<std::string> evidence_paths;
  bool force = false, exclude_empty = false;
  int p = 3, steps = 50, grid = 21, precision = 6;
  double sigma = 0.5, epsilon = 2.0, ratio = 0.5, test_fraction = 0.2;
  unsigned long long seed = 7;

  auto* validate_cmd = app.add_subcommand("validate", "check a CBBA document");
  validate_cmd->add_option("--in", in_path, "CBBA JSON file")->required();

  auto* entropy_cmd = app.add_subcommand("entropy", "entropy of a CBBA in bits");
  entropy_cmd->add_option("--in", in_path, "CBBA JSON file")->required();
  entropy_cmd->add_option("--method", method, "entropy method id");
  entropy_cmd->add_option("--model", model, "h-model for --method generalized");
  entropy_cmd->add_option("--precision", precision, "significant digits");
  entropy_cmd->add_flag("--force", force, "load without invariant checks");

  auto* sweep_e_cmd =
      app.add_subcommand("entropy-sweep", "decomposition surface CSV");
  sweep_e_cmd->add_option("--grid", grid, "grid points per axis");
  sweep_e_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* cpbt_cmd = app.add_subcommand("cpbt", "pignistic transform");
  cpbt_cmd->add_option("--in", in_path, "CBBA JSON file")->required();
  cpbt_cmd->add_option("--out", out_path, "output file");
  cpbt_cmd->add_flag("--force", force, "load without invariant checks");

  auto* iterate_cmd =
      app.add_subcommand("cpbt-iterate", "fractal allocation time series");
  iterate_cmd->add_option("--in", in_path, "CBBA JSON file")->required();
  iterate_cmd->add_option("--p", p, "allocation speed");
  iterate_cmd->add_option("--steps", steps, "iteration count");
  iterate_cmd->add_option("--out", out_path, "output file");

  auto* fcbba_cmd = app.add_subcommand("fcbba", "fractal redistribution");
  fcbba_cmd->add_option("--in", in_path, "CBBA JSON file")->required();
  fcbba_cmd->add_option("--out", out_path, "output file");
  fcbba_cmd->add_flag("--force", force, "load without invariant checks");

  auto* negate_cmd = app.add_subcommand("negate", "exponential negation");
  negate_cmd->add_option("--in", in_path, "CBBA JSON file")->required();
  negate_cmd->add_flag("--exclude-empty", exclude_empty,
                       "drop B = empty from the negation sums");
  negate_cmd->add_option("--out", out_path, "output file");

  auto* combine_cmd = app.add_subcommand("combine", "complex combination rule");
  combine_cmd->add_option("--a", in_a, "first CBBA JSON file")->required();
  combine_cmd->add_option("--b", in_b, "second CBBA JSON file")->required();
  combine_cmd->add_option("--out", out_path, "output file");
  combine_cmd->add_option("--precision", precision, "significant digits");

  auto* joint_cmd = app.add_subcommand("joint", "joint CBBA on a product frame");
  joint_cmd->add_option("--a", in_a, "first CBBA JSON file")->required();
  joint_cmd->add_option("--b", in_b, "second CBBA JSON file")->required();
  joint_cmd->add_option("--out", out_path, "output file");

  auto* classify_cmd = app.add_subcommand("classify", "entropy-change classifier");
  classify_cmd->add_option("--data", data_path, "dataset CSV")->required();
  classify_cmd->add_option("--label", label_column, "label column")->required();
  classify_cmd->add_option("--ratio", ratio, "training ratio of the pool");
  classify_cmd->add_option("--seed", seed, "split seed");
  classify_cmd->add_option("--method", method, "entropy method id");
  classify_cmd->add_option("--aggregate", aggregate, "sum | combine");
  classify_cmd->add_option("--test-fraction", test_fraction, "held-out fraction");
  classify_cmd->add_option("--precision", precision, "significant digits");
  classify_cmd->add_option("--out", out_path, "predictions CSV file");

  auto* sweep_cmd = app.add_subcommand("sweep", "accuracy over training ratios");
  sweep_cmd->add_option("--data", data_path, "dataset CSV")->required();
  sweep_cmd->add_option("--label", label_column, "label column")->required();
  sweep_cmd->add_option("--ratios", ratios_spec, "comma list or start:end:count");
  sweep_cmd->add_option("--methods", methods_spec, "comma list of entropy ids");
  sweep_cmd->add_option("--seed", seed, "split seed");
  sweep_cmd->add_option("--aggregate", aggregate, "sum | combine");
  sweep_cmd->add_option("--test-fraction", test_fraction, "held-out fraction");
  sweep_cmd->add_option("--out", out_path, "output CSV file");

  auto* fuse_cmd = app.add_subcommand("fuse", "iterative fusion decision");
  fuse_cmd->add_option("--evidence", evidence_paths, "CBBA JSON files, in order")
      ->required()
      ->expected(-2);
  fuse_cmd->add_option("--sigma", sigma, "belief threshold");
  fuse_cmd->add_option("--epsilon", epsilon, "entropy threshold (bits)");
  fuse_cmd->add_option("--out", out_path, "trace JSON file");
  fuse_cmd->add_flag("--force", force, "load without invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  }

  if (validate_cmd->parsed()) {
    CbbaPtr c = load_cbba(in_path, /*force=*/true);
    StringPtr report(cet_cbba_validate_json(c.get(), env_tolerance()));
    if (!report) die_domain();
    std::cout << report.get() << "\n";
    return std::strstr(report.get(), "\"ok\": true") ? kExitOk : kExitDomainError;
  }

  if (entropy_cmd->parsed()) {
    CbbaPtr c = load_cbba(in_path, force);
    std::string method_id = method;
    if (method == "generalized") {
      method_id += ":" + (model.empty() ? std::string("unit") : model);
    }
    double bits = 0.0;
    if (cet_entropy_bits(c.get(), method_id.c_str(), &bits) != CET_OK) die_domain();
    std::cout << "{\"method\": \"" << method_id << "\", \"bits\": "
              << format_number(bits, precision) << "}\n";
    return kExitOk;
  }

  if (sweep_e_cmd->parsed()) {
    StringPtr csv(cet_entropy_sweep_csv(grid));
    if (!csv) die_domain();
    write_output(out_path, csv.get());
    return kExitOk;
  }

  if (cpbt_cmd->parsed()) {
    CbbaPtr c = load_cbba(in_path, force);
    StringPtr doc(cet_cpbt_json(c.get()));
    if (!doc) die_domain();
    write_output(out_path, doc.get());
    return kExitOk;
  }

  if (iterate_cmd->parsed()) {
    CbbaPtr c = load_cbba(in_path, force);
    StringPtr csv(cet_cpbt_iterate_csv(c.get(), p, steps));
    if (!csv) die_domain();
    write_output(out_path, csv.get());
    return kExitOk;
  }

  if (fcbba_cmd->parsed()) {
    CbbaPtr c = load_cbba(in_path, force);
    StringPtr doc(cet_fcbba_json(c.get()));
    if (!doc) die_domain();
    write_output(out_path, doc.get());
    return kExitOk;
  }

  if (negate_cmd->parsed()) {
    CbbaPtr c = load_cbba(in_path, force);
    CbbaPtr negated(cet_exp_negation(c.get(), exclude_empty ? 0 : 1));
    if (!negated) die_domain();
    StringPtr doc(cet_cbba_to_json(negated.get()));
    if (!doc) die_domain();
    write_output(out_path, doc.get());
    return kExitOk;
  }

  if (combine_cmd->parsed()) {
    CbbaPtr a = load_cbba(in_a, force);
    CbbaPtr b = load_cbba(in_b, force);
    double k_re = 0.0, k_im = 0.0;
    CbbaPtr combined(cet_combine(a.get(), b.get(), &k_re, &k_im));
    if (!combined) die_domain();
    StringPtr doc(cet_cbba_to_json(combined.get()));
    if (!doc) die_domain();
    std::cerr << "conflict K = " << format_number(k_re, precision) << " + "
              << format_number(k_im, precision) << "i\n";
    write_output(out_path, doc.get());
    return kExitOk;
  }

  if (joint_cmd->parsed()) {
    CbbaPtr a = load_cbba(in_a, force);
    CbbaPtr b = load_cbba(in_b, force);
    CbbaPtr j(cet_joint(a.get(), b.get()));
    if (!j) die_domain();
    StringPtr doc(cet_cbba_to_json(j.get()));
    if (!doc) die_domain();
    write_output(out_path, doc.get());
    return kExitOk;
  }

  if (classify_cmd->parsed()) {
    DatasetPtr d(cet_dataset_load_csv(data_path.c_str(), label_column.c_str()));
    if (!d) die_domain();
    double accuracy = 0.0;
    StringPtr csv(cet_classify_csv(d.get(), ratio, seed, method.c_str(),
                                   aggregate.c_str(), test_fraction, &accuracy));
    if (!csv) die_domain();
    std::cout << "accuracy: " << format_number(accuracy, precision) << "\n";
    if (!out_path.empty()) write_output(out_path, csv.get());
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    DatasetPtr d(cet_dataset_load_csv(data_path.c_str(), label_column.c_str()));
    if (!d) die_domain();
    const auto ratios = parse_ratios(ratios_spec);
    const auto methods = parse_list(methods_spec);
    std::vector<const char*> method_ptrs;
    for (const auto& m : methods) method_ptrs.push_back(m.c_str());
    StringPtr csv(cet_accuracy_sweep_csv(
        d.get(), ratios.data(), static_cast<int>(ratios.size()),
        method_ptrs.data(), static_cast<int>(method_ptrs.size()), seed,
        test_fraction, aggregate.c_str()));
    if (!csv) die_domain();
    write_output(out_path, csv.get());
    return kExitOk;
  }

  if (fuse_cmd->parsed()) {
    std::vector<CbbaPtr> owned;
    std::vector<const cet_cbba*> handles;
    for (const auto& path : evidence_paths) {
      owned.push_back(load_cbba(path, force));
      handles.push_back(owned.back().get());
    }
    StringPtr doc(cet_fuse_json(handles.data(),
                                static_cast<int>(handles.size()), sigma, epsilon));
    if (!doc) die_domain();
    write_output(out_path, doc.get());
    return kExitOk;
  }

  return kExitUsageError;
}
