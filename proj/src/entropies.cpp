#include "cet/entropies.hpp"

#include <cmath>

namespace cet {

namespace {

double pow2m1(int cardinality) {
  return static_cast<double>((std::uint64_t{1} << cardinality) - 1);
}

void require_bba(const Cbba& c, const char* where) {
  if (!is_bba(c)) {
    fail(Errc::InvalidDistribution,
         std::string(where) + " requires a real non-negative BBA");
  }
}

double shannon_terms(const std::map<FocalSet, double>& weights) {
  double e = 0.0;
  for (const auto& [s, w] : weights) {
    if (w > kEntropyFloor) e -= w * std::log2(w);
  }
  return e;
}

// Catalog entry h(A) of the generalized entropy; cui-factor depends on the
// other focal sets of the mass function, the rest only on |A|.
double h_value(HModel model, const Cbba& c, FocalSet a) {
  const int k = focal::cardinality(a);
  switch (model) {
    case HModel::Unit:
      return 1.0;
    case HModel::Cardinality:
      return static_cast<double>(k);
    case HModel::DengDenominator:
      return pow2m1(k);
    case HModel::ZhouFactor:
      return pow2m1(k) * std::exp(-static_cast<double>(k - 1) / c.frame.size());
    case HModel::CuiFactor: {
      double overlap = 0.0;
      for (const auto& [b, z] : c.masses) {
        if (b != a && magnitude(z) > 0.0) {
          overlap += focal::cardinality(a & b);
        }
      }
      overlap /= pow2m1(c.frame.size());
      return pow2m1(k) * std::exp(-overlap);
    }
  }
  fail(Errc::UnknownModel, "unhandled h-model");
}

}  // namespace

double shannon(std::span<const double> p, double tol) {
  double total = 0.0;
  for (double v : p) {
    if (v < 0.0) {
      fail(Errc::InvalidDistribution, "probabilities must be non-negative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol) {
    fail(Errc::InvalidDistribution, "probabilities must sum to 1");
  }
  double e = 0.0;
  for (double v : p) {
    if (v > kEntropyFloor) e -= v * std::log2(v);
  }
  return e;
}

double weighted_hartley(const Cbba& bba) {
  require_bba(bba, "weighted_hartley");
  double e = 0.0;
  for (const auto& [s, z] : bba.masses) {
    const double m = z.real();
    if (s != 0 && m > kEntropyFloor) {
      e += m * std::log2(static_cast<double>(focal::cardinality(s)));
    }
  }
  return e;
}

double pal(const Cbba& bba) {
  require_bba(bba, "pal");
  double e = 0.0;
  for (const auto& [s, z] : bba.masses) {
    const double m = z.real();
    if (m > kEntropyFloor) {
      e -= m * std::log2(m / h_value(HModel::Cardinality, bba, s));
    }
  }
  return e;
}

double deng(const Cbba& bba) {
  require_bba(bba, "deng");
  double e = 0.0;
  for (const auto& [s, z] : bba.masses) {
    const double m = z.real();
    if (m > kEntropyFloor) {
      e -= m * std::log2(m / h_value(HModel::DengDenominator, bba, s));
    }
  }
  return e;
}

double zhou(const Cbba& bba) {
  require_bba(bba, "zhou");
  double e = 0.0;
  for (const auto& [s, z] : bba.masses) {
    const double m = z.real();
    if (m > kEntropyFloor) {
      e -= m * std::log2(m / h_value(HModel::ZhouFactor, bba, s));
    }
  }
  return e;
}

double cui(const Cbba& bba) {
  require_bba(bba, "cui");
  double e = 0.0;
  for (const auto& [s, z] : bba.masses) {
    const double m = z.real();
    if (m > kEntropyFloor) {
      e -= m * std::log2(m / h_value(HModel::CuiFactor, bba, s));
    }
  }
  return e;
}

double fb(const Cbba& bba) {
  require_bba(bba, "fb");
  const Fcbba f = fcbba(bba);
  double e = 0.0;
  for (const auto& [s, z] : f.masses) {
    const double m = z.real();
    if (m > kEntropyFloor) e -= m * std::log2(m);
  }
  return e;
}

HModel h_model_from_id(const std::string& id) {
  if (id == "unit") return HModel::Unit;
  if (id == "cardinality") return HModel::Cardinality;
  if (id == "deng-denominator") return HModel::DengDenominator;
  if (id == "zhou-factor") return HModel::ZhouFactor;
  if (id == "cui-factor") return HModel::CuiFactor;
  fail(Errc::UnknownModel, "unknown h-model '" + id + "'");
}

const char* h_model_id(HModel model) noexcept {
  switch (model) {
    case HModel::Unit: return "unit";
    case HModel::Cardinality: return "cardinality";
    case HModel::DengDenominator: return "deng-denominator";
    case HModel::ZhouFactor: return "zhou-factor";
    case HModel::CuiFactor: return "cui-factor";
  }
  return "unit";
}

double generalized(const Cbba& c, HModel model) {
  const auto com = commitments(c);
  double e = 0.0;
  for (const auto& [s, w] : com) {
    if (s != 0 && w > kEntropyFloor) {
      e -= w * std::log2(w / h_value(model, c, s));
    }
  }
  return e;
}

double complex_deng(const Cbba& c) {
  Complex total;
  for (const auto& [s, z] : c.masses) {
    const double m = magnitude(z);
    if (s == 0 || m <= kEntropyFloor) continue;
    const Complex log_term{std::log(m / pow2m1(focal::cardinality(s))), phase(z)};
    total += m * log_term;
  }
  return magnitude(-total) / std::log(2.0);
}

ComFDistribution com_f(const Cbba& c) {
  const Fcbba f = fcbba(c);
  double total = 0.0;
  for (const auto& [s, z] : f.masses) total += magnitude(z);
  if (total == 0.0) {
    fail(Errc::DegenerateMass, "all fractal masses have zero modulus");
  }
  ComFDistribution out;
  out.frame = c.frame;
  for (const auto& [s, z] : f.masses) out.weights[s] = magnitude(z) / total;
  return out;
}

double fcb(const Cbba& c) { return shannon_terms(com_f(c).weights); }

double fcb_max(int frame_size) {
  if (frame_size < 1) {
    fail(Errc::InvalidFrame, "frame size must be at least 1");
  }
  return std::log2(std::pow(2.0, frame_size) - 1.0);
}

double fcb_discord(const Cbba& c) {
  const auto cb = cpbt(c);
  double total = 0.0;
  for (const auto& [e, z] : cb) total += magnitude(z);
  if (total == 0.0) {
    fail(Errc::DegenerateMass, "all pignistic values have zero modulus");
  }
  std::map<FocalSet, double> weights;
  for (const auto& [e, z] : cb) weights[e] = magnitude(z) / total;
  return shannon_terms(weights);
}

double fcb_nonspecificity(const Cbba& c) { return fcb(c) - fcb_discord(c); }

EntropyMethod EntropyMethod::from_id(const std::string& id) {
  EntropyMethod m;
  if (id.rfind("generalized:", 0) == 0) {
    m.kind = Kind::Generalized;
    m.model = h_model_from_id(id.substr(12));
    return m;
  }
  if (id == "shannon") m.kind = Kind::Shannon;
  else if (id == "weighted-hartley") m.kind = Kind::WeightedHartley;
  else if (id == "pal") m.kind = Kind::Pal;
  else if (id == "deng") m.kind = Kind::Deng;
  else if (id == "zhou") m.kind = Kind::Zhou;
  else if (id == "cui") m.kind = Kind::Cui;
  else if (id == "fb") m.kind = Kind::Fb;
  else if (id == "complex-deng") m.kind = Kind::ComplexDeng;
  else if (id == "fcb") m.kind = Kind::Fcb;
  else if (id == "fcb-discord") m.kind = Kind::FcbDiscord;
  else if (id == "fcb-nonspecificity") m.kind = Kind::FcbNonspecificity;
  else if (id == "fcb-max") m.kind = Kind::FcbMax;
  else fail(Errc::UnknownModel, "unknown entropy method '" + id + "'");
  return m;
}

std::string EntropyMethod::id() const {
  switch (kind) {
    case Kind::Shannon: return "shannon";
    case Kind::WeightedHartley: return "weighted-hartley";
    case Kind::Pal: return "pal";
    case Kind::Deng: return "deng";
    case Kind::Zhou: return "zhou";
    case Kind::Cui: return "cui";
    case Kind::Fb: return "fb";
    case Kind::Generalized: return std::string("generalized:") + h_model_id(model);
    case Kind::ComplexDeng: return "complex-deng";
    case Kind::Fcb: return "fcb";
    case Kind::FcbDiscord: return "fcb-discord";
    case Kind::FcbNonspecificity: return "fcb-nonspecificity";
    case Kind::FcbMax: return "fcb-max";
  }
  return "fcb";
}

double evaluate(const EntropyMethod& method, const Cbba& c) {
  using Kind = EntropyMethod::Kind;
  switch (method.kind) {
    case Kind::Shannon: {
      // Interpret a Bayesian real BBA as the probability vector.
      if (!is_bba(c) || !is_bayesian(c)) {
        fail(Errc::InvalidDistribution,
             "shannon requires a Bayesian real BBA");
      }
      std::vector<double> p;
      for (const auto& [s, z] : c.masses) {
        if (s != 0) p.push_back(std::max(0.0, z.real()));
      }
      return shannon(p);
    }
    case Kind::WeightedHartley: return weighted_hartley(c);
    case Kind::Pal: return pal(c);
    case Kind::Deng: return deng(c);
    case Kind::Zhou: return zhou(c);
    case Kind::Cui: return cui(c);
    case Kind::Fb: return fb(c);
    case Kind::Generalized: return generalized(c, method.model);
    case Kind::ComplexDeng: return complex_deng(c);
    case Kind::Fcb: return fcb(c);
    case Kind::FcbDiscord: return fcb_discord(c);
    case Kind::FcbNonspecificity: return fcb_nonspecificity(c);
    case Kind::FcbMax: return fcb_max(c.frame.size());
  }
  fail(Errc::UnknownModel, "unhandled entropy method");
}

}  // namespace cet
