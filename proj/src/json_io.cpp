#include "cet/json_io.hpp"

#include <json.hpp>

namespace cet {

namespace {

using nlohmann::json;

json set_to_labels(FocalSet s, const Frame& frame) {
  json arr = json::array();
  for (int i = 0; i < frame.size(); ++i) {
    if (s & focal::singleton(i)) arr.push_back(frame.label(i));
  }
  return arr;
}

json masses_to_array(const Frame& frame, const MassMap& masses) {
  json arr = json::array();
  for (const auto& [s, z] : masses) {
    arr.push_back({{"set", set_to_labels(s, frame)},
                   {"re", z.real()},
                   {"im", z.imag()}});
  }
  return arr;
}

Errc violation_code(const std::string& name) {
  if (name == "EmptySetMass") return Errc::EmptySetMass;
  if (name == "SumViolation") return Errc::SumViolation;
  if (name == "MagnitudeViolation") return Errc::MagnitudeViolation;
  if (name == "FocalOutOfRange") return Errc::FocalOutOfRange;
  return Errc::BadDocument;
}

}  // namespace

std::string cbba_to_json(const Cbba& c, int indent) {
  json doc;
  doc["frame"] = json(c.frame.labels());
  doc["masses"] = masses_to_array(c.frame, c.masses);
  if (c.product_dims) {
    doc["product"] = {{"rows", c.product_dims->first},
                      {"cols", c.product_dims->second}};
  }
  return doc.dump(indent);
}

Cbba cbba_from_json(const std::string& text, bool enforce, double tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::BadDocument, std::string("JSON parse failure: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("frame") || !doc.contains("masses")) {
    fail(Errc::BadDocument, "document needs 'frame' and 'masses'");
  }
  if (!doc["frame"].is_array()) fail(Errc::BadDocument, "'frame' must be an array");

  std::vector<std::string> labels;
  for (const auto& l : doc["frame"]) {
    if (!l.is_string()) fail(Errc::BadDocument, "frame labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  Cbba c;
  c.frame = Frame(std::move(labels));

  if (!doc["masses"].is_array()) fail(Errc::BadDocument, "'masses' must be an array");
  for (const auto& entry : doc["masses"]) {
    if (!entry.is_object() || !entry.contains("set") || !entry["set"].is_array()) {
      fail(Errc::BadDocument, "each mass entry needs a 'set' label array");
    }
    FocalSet s = 0;
    for (const auto& l : entry["set"]) {
      if (!l.is_string()) fail(Errc::BadDocument, "set members must be strings");
      const int idx = c.frame.index_of(l.get<std::string>());
      if (idx < 0) {
        fail(Errc::UnknownLabel,
             "label '" + l.get<std::string>() + "' is not in the frame");
      }
      s |= focal::singleton(idx);
    }
    if (c.masses.count(s)) {
      fail(Errc::DuplicateSet,
           "duplicate focal set " + focal::to_string(s, c.frame));
    }
    double re = 0.0, im = 0.0;
    if (entry.contains("re")) {
      if (!entry["re"].is_number()) fail(Errc::BadDocument, "'re' must be a number");
      re = entry["re"].get<double>();
    }
    if (entry.contains("im")) {
      if (!entry["im"].is_number()) fail(Errc::BadDocument, "'im' must be a number");
      im = entry["im"].get<double>();
    }
    c.masses[s] = Complex{re, im};
  }

  if (doc.contains("product")) {
    const auto& p = doc["product"];
    if (!p.is_object() || !p.contains("rows") || !p.contains("cols") ||
        !p["rows"].is_number_integer() || !p["cols"].is_number_integer()) {
      fail(Errc::BadDocument, "'product' needs integer 'rows' and 'cols'");
    }
    const int rows = p["rows"].get<int>();
    const int cols = p["cols"].get<int>();
    if (rows < 1 || cols < 1 || rows * cols != c.frame.size()) {
      fail(Errc::BadDocument, "product dims must multiply to the frame size");
    }
    for (const auto& [s, z] : c.masses) {
      if (s != 0 && !product::decompose(s, rows, cols).exact) {
        fail(Errc::BadDocument,
             "product-tagged document has the non-product focal set " +
                 focal::to_string(s, c.frame));
      }
    }
    c.product_dims = std::pair{rows, cols};
  }

  if (enforce) {
    const ValidationReport report = validate(c, tol);
    if (!report.ok) {
      fail(violation_code(report.violation),
           report.detail + " (residual " + std::to_string(report.residual) + ")");
    }
  }
  return c;
}

std::string fcbba_to_json(const Fcbba& f, int indent) {
  Cbba view;
  view.frame = f.frame;
  view.masses = f.masses;
  view.product_dims = f.product_dims;
  return cbba_to_json(view, indent);
}

std::string validation_report_to_json(const ValidationReport& report, int indent) {
  json doc;
  doc["ok"] = report.ok;
  if (!report.ok) {
    doc["violation"] = report.violation;
    doc["residual"] = report.residual;
    doc["detail"] = report.detail;
  }
  return doc.dump(indent);
}

std::string mass_map_to_json(const Frame& frame,
                             const std::map<FocalSet, Complex>& masses,
                             int indent) {
  json doc;
  doc["frame"] = json(frame.labels());
  json arr = json::array();
  for (const auto& [s, z] : masses) {
    arr.push_back({{"set", set_to_labels(s, frame)},
                   {"re", z.real()},
                   {"im", z.imag()}});
  }
  doc["masses"] = arr;
  return doc.dump(indent);
}

}  // namespace cet
