#pragma once

#include <string>

#include "cet/cbba.hpp"
#include "cet/transforms.hpp"

namespace cet {

// CBBA document:
//   {"frame": ["x1","x2"],
//    "masses": [{"set": ["x1"], "re": 0.1, "im": -0.1}, ...],
//    "product": {"rows": 2, "cols": 2}}        // only on joint CBBAs
// Focal sets are sorted label arrays; "im" defaults to 0. Doubles are emitted
// at full round-trip precision.
std::string cbba_to_json(const Cbba& c, int indent = 2);

// Parses and (by default) enforces the CBBA invariants, throwing the named
// violation (EmptySetMass, SumViolation, ...). Structural problems throw
// BadDocument / UnknownLabel / DuplicateSet. enforce=false loads diagnostically.
Cbba cbba_from_json(const std::string& text, bool enforce = true,
                    double tol = kDefaultTolerance);

std::string fcbba_to_json(const Fcbba& f, int indent = 2);

std::string validation_report_to_json(const ValidationReport& report,
                                      int indent = 2);

// Maps a mass-document shape onto a plain CBBA for singleton distributions
// such as the pignistic transform output.
std::string mass_map_to_json(const Frame& frame, const std::map<FocalSet, Complex>& masses,
                             int indent = 2);

}  // namespace cet
