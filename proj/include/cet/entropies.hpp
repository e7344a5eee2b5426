#pragma once

#include <span>
#include <string>

#include "cet/transforms.hpp"

namespace cet {

// All measures report bits (base-2 logs). complex_deng evaluates its complex
// logarithm in nats per its definition and is converted at the boundary.

// Shannon entropy of a probability vector. Throws InvalidDistribution on
// negative entries or a sum away from 1.
double shannon(std::span<const double> p, double tol = kDefaultTolerance);

// Classical belief entropies; all require a real non-negative BBA and throw
// InvalidDistribution otherwise.
double weighted_hartley(const Cbba& bba);  // sum m(A) log|A|
double pal(const Cbba& bba);               // -sum m(A) log(m(A)/|A|)
double deng(const Cbba& bba);              // -sum m(A) log(m(A)/(2^|A|-1))
double zhou(const Cbba& bba);              // Deng form with exp((|A|-1)/n) factor
double cui(const Cbba& bba);               // Deng form with intersection factor
double fb(const Cbba& bba);                // -sum m_F log m_F after the fractal rule

// h-function catalog for the generalized entropy -sum Com(A) log(Com(A)/h(A)).
// Each entry reproduces its real-BBA counterpart: unit -> Shannon,
// cardinality -> Pal, deng-denominator -> Deng, zhou-factor -> Zhou,
// cui-factor -> Cui.
enum class HModel { Unit, Cardinality, DengDenominator, ZhouFactor, CuiFactor };

HModel h_model_from_id(const std::string& id);  // UnknownModel on bad ids
const char* h_model_id(HModel model) noexcept;

double generalized(const Cbba& c, HModel model);

// || -sum |M(A)| ln( M(A)/(2^|A|-1) ) || with the principal complex log,
// converted from nats to bits.
double complex_deng(const Cbba& c);

// Normalized moduli of the fractal-redistributed masses.
struct ComFDistribution {
  Frame frame;
  std::map<FocalSet, double> weights;  // sums to 1
};
ComFDistribution com_f(const Cbba& c);

// FCB entropy: Shannon form over Com_F. Range [0, log2(2^n - 1)].
double fcb(const Cbba& c);

// log2(2^n - 1), attained exactly when Com_F is uniform.
double fcb_max(int frame_size);

// Discord part: Shannon form over the normalized pignistic moduli |CBet(e)|.
double fcb_discord(const Cbba& c);

// Non-specificity part: fcb - fcb_discord.
double fcb_nonspecificity(const Cbba& c);

// Parsed entropy selector for CLI and pipeline use. Accepts: shannon,
// weighted-hartley, pal, deng, zhou, cui, fb, complex-deng, fcb, fcb-discord,
// fcb-nonspecificity, fcb-max, and generalized:<h-model>.
struct EntropyMethod {
  enum class Kind {
    Shannon, WeightedHartley, Pal, Deng, Zhou, Cui, Fb,
    Generalized, ComplexDeng, Fcb, FcbDiscord, FcbNonspecificity, FcbMax,
  };
  Kind kind = Kind::Fcb;
  HModel model = HModel::Unit;  // only for Kind::Generalized

  static EntropyMethod from_id(const std::string& id);
  std::string id() const;
};

double evaluate(const EntropyMethod& method, const Cbba& c);

}  // namespace cet
