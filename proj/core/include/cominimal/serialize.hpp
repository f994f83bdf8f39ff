#pragma once

#include <string>
#include <vector>

#include "cominimal/families.hpp"
#include "cominimal/lattice.hpp"
#include "cominimal/lattice_set.hpp"
#include "cominimal/refine.hpp"
#include "cominimal/runtime.hpp"
#include "cominimal/sumset.hpp"
#include "cominimal/verify.hpp"
#include "cominimal/window.hpp"

namespace cominimal {

// JSON wire formats. Sets round-trip bit-exactly through either the
// element form {"window":[lo,hi],"elements":[...]} or the run-length form
// {"window":[lo,hi],"runs":[[start,len],...]}.

std::string set_to_json(const WindowedSet& s);
std::string set_to_json_runs(const WindowedSet& s);
WindowedSet set_from_json(const std::string& text);

std::string family_to_json(const FamilySpec& f);
FamilySpec family_from_json(const std::string& text);

std::string representation_report_to_json(const RepresentationReport& r);
std::string claim_result_to_json(const ClaimResult& r);
std::string witness_report_to_json(const WitnessReport& r);
std::string refinement_result_to_json(const RefinementResult& r);

std::string lattice_set_to_json(const LatticeSet& s);
LatticeSet lattice_set_from_json(const std::string& text);
std::string lattice_pair_report_to_json(const LatticePairReport& r);

/// Loads config overrides from a JSON object file; unknown keys error.
RunConfig config_from_json_file(const std::string& path);

}  // namespace cominimal
