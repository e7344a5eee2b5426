#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cet/cet.h"
#include "fixtures.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Cleanup {
  std::vector<cet_cbba*> cbbas;
  std::vector<char*> strings;
  ~Cleanup() {
    for (auto* c : cbbas) cet_cbba_free(c);
    for (auto* s : strings) cet_string_free(s);
  }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("cbba json round-trip through the C surface") {
  Cleanup gc;
  const std::string text = slurp(fixtures::data_dir() + "/example2_mx.json");
  cet_cbba* c = cet_cbba_from_json(text.c_str(), 1, 0.0);
  REQUIRE(c != nullptr);
  gc.cbbas.push_back(c);
  CHECK(cet_cbba_frame_size(c) == 2);
  char* label = cet_cbba_frame_label(c, 0);
  REQUIRE(label != nullptr);
  gc.strings.push_back(label);
  CHECK(std::string(label) == "x1");

  char* out = cet_cbba_to_json(c);
  REQUIRE(out != nullptr);
  gc.strings.push_back(out);
  cet_cbba* back = cet_cbba_from_json(out, 1, 0.0);
  REQUIRE(back != nullptr);
  gc.cbbas.push_back(back);

  char* report = cet_cbba_validate_json(c, 0.0);
  REQUIRE(report != nullptr);
  gc.strings.push_back(report);
  CHECK(std::string(report).find("\"ok\": true") != std::string::npos);
}

TEST_CASE("the additivity anchor holds through the C surface") {
  Cleanup gc;
  cet_cbba* mx = cet_cbba_from_json(
      slurp(fixtures::data_dir() + "/example2_mx.json").c_str(), 1, 0.0);
  cet_cbba* my = cet_cbba_from_json(
      slurp(fixtures::data_dir() + "/example2_my.json").c_str(), 1, 0.0);
  REQUIRE(mx);
  REQUIRE(my);
  gc.cbbas.push_back(mx);
  gc.cbbas.push_back(my);
  cet_cbba* j = cet_joint(mx, my);
  REQUIRE(j);
  gc.cbbas.push_back(j);

  double ex = 0, ey = 0, ej = 0;
  REQUIRE(cet_entropy_bits(mx, "fcb", &ex) == CET_OK);
  REQUIRE(cet_entropy_bits(my, "fcb", &ey) == CET_OK);
  REQUIRE(cet_entropy_bits(j, "fcb", &ej) == CET_OK);
  CHECK(std::abs(ej - (ex + ey)) < 1e-12);
  CHECK(ej == doctest::Approx(2.8317).epsilon(1e-3));

  double cap = 0;
  REQUIRE(cet_fcb_max_bits(2, &cap) == CET_OK);
  CHECK(cap == doctest::Approx(std::log2(3.0)));
  CHECK(cet_fcb_max_bits(0, &cap) != CET_OK);
  CHECK(std::string(cet_status_name(cet_last_status())) == "InvalidFrame");
}

TEST_CASE("errors carry stable names and messages") {
  Cleanup gc;
  cet_cbba* a = cet_cbba_from_json(
      slurp(fixtures::data_dir() + "/conflict_a.json").c_str(), 1, 0.0);
  cet_cbba* b = cet_cbba_from_json(
      slurp(fixtures::data_dir() + "/conflict_b.json").c_str(), 1, 0.0);
  REQUIRE(a);
  REQUIRE(b);
  gc.cbbas.push_back(a);
  gc.cbbas.push_back(b);
  double kre = 0, kim = 0;
  cet_cbba* combined = cet_combine(a, b, &kre, &kim);
  CHECK(combined == nullptr);
  CHECK(cet_last_status() == CET_ERR_TOTAL_CONFLICT);
  CHECK(std::string(cet_status_name(cet_last_status())) == "TotalConflict");
  CHECK(std::strlen(cet_last_message()) > 0);

  CHECK(cet_cbba_from_json("{", 1, 0.0) == nullptr);
  CHECK(cet_last_status() == CET_ERR_BAD_DOCUMENT);

  CHECK(cet_cbba_from_json(nullptr, 1, 0.0) == nullptr);
  CHECK(cet_last_status() == CET_ERR_INVALID_ARGUMENT);

  // success clears the sticky status
  cet_cbba* ok = cet_cbba_from_json(
      slurp(fixtures::data_dir() + "/example1.json").c_str(), 1, 0.0);
  REQUIRE(ok);
  gc.cbbas.push_back(ok);
  CHECK(cet_last_status() == CET_OK);
}

TEST_CASE("transform surfaces produce parseable artifacts") {
  Cleanup gc;
  cet_cbba* c = cet_cbba_from_json(
      slurp(fixtures::data_dir() + "/example1.json").c_str(), 1, 0.0);
  REQUIRE(c);
  gc.cbbas.push_back(c);

  char* cpbt = cet_cpbt_json(c);
  REQUIRE(cpbt);
  gc.strings.push_back(cpbt);
  CHECK(std::string(cpbt).find("\"masses\"") != std::string::npos);

  char* csv = cet_cpbt_iterate_csv(c, 3, 5);
  REQUIRE(csv);
  gc.strings.push_back(csv);
  CHECK(std::string(csv).rfind("step,focal,re,im,modulus,commitment", 0) == 0);

  CHECK(cet_cpbt_iterate_csv(c, 2, 5) == nullptr);
  CHECK(cet_last_status() == CET_ERR_INVALID_SPEED);

  char* fc = cet_fcbba_json(c);
  REQUIRE(fc);
  gc.strings.push_back(fc);

  cet_cbba* neg = cet_exp_negation(c, 1);
  REQUIRE(neg);
  gc.cbbas.push_back(neg);

  char* sweep = cet_entropy_sweep_csv(11);
  REQUIRE(sweep);
  gc.strings.push_back(sweep);
  CHECK(std::string(sweep).rfind("x,y,fcb,discord,nonspecificity", 0) == 0);
}

TEST_CASE("random cbbas via the C surface are reproducible") {
  Cleanup gc;
  const char* labels[] = {"e1", "e2", "e3"};
  cet_cbba* a = cet_cbba_random(labels, 3, 42, "complex-general");
  cet_cbba* b = cet_cbba_random(labels, 3, 42, "complex-general");
  REQUIRE(a);
  REQUIRE(b);
  gc.cbbas.push_back(a);
  gc.cbbas.push_back(b);
  char* ja = cet_cbba_to_json(a);
  char* jb = cet_cbba_to_json(b);
  gc.strings.push_back(ja);
  gc.strings.push_back(jb);
  CHECK(std::string(ja) == std::string(jb));
  CHECK(cet_cbba_random(labels, 3, 1, "nope") == nullptr);
}

TEST_CASE("fusion and classification through the C surface") {
  Cleanup gc;
  std::vector<cet_cbba*> ev;
  for (int i = 1; i <= 5; ++i) {
    cet_cbba* c = cet_cbba_from_json(
        slurp(fixtures::data_dir() + "/fusion_d" + std::to_string(i) + ".json").c_str(),
        1, 0.0);
    REQUIRE(c);
    gc.cbbas.push_back(c);
    ev.push_back(c);
  }
  char* trace = cet_fuse_json(ev.data(), static_cast<int>(ev.size()), 0.5, 2.0);
  REQUIRE(trace);
  gc.strings.push_back(trace);
  CHECK(std::string(trace).find("\"verdict\": \"accepted\"") != std::string::npos);
  CHECK(std::string(trace).find("\"target\": \"{T1}\"") != std::string::npos);

  const std::string csv = fixtures::two_gauss_csv(2024, 120);
  cet_dataset* d = cet_dataset_from_csv_text(csv.c_str(), "label");
  REQUIRE(d);
  CHECK(cet_dataset_rows(d) == 120);
  CHECK(cet_dataset_attributes(d) == 8);
  CHECK(cet_dataset_classes(d) == 2);

  double accuracy = 0.0;
  char* pred = cet_classify_csv(d, 0.5, 7, "fcb", "sum", 0.2, &accuracy);
  REQUIRE(pred);
  gc.strings.push_back(pred);
  CHECK(accuracy >= 0.8);
  CHECK(std::string(pred).rfind("row,truth,predicted", 0) == 0);

  const double ratios[] = {0.4, 0.8};
  const char* methods[] = {"fcb"};
  char* sweep = cet_accuracy_sweep_csv(d, ratios, 2, methods, 1, 7, 0.2, "sum");
  REQUIRE(sweep);
  gc.strings.push_back(sweep);
  CHECK(std::string(sweep).rfind("ratio,method,accuracy,n_train,n_test", 0) == 0);
  cet_dataset_free(d);

  CHECK(cet_dataset_load_csv("/nonexistent/file.csv", "label") == nullptr);
}

}  // TEST_SUITE
