#pragma once

#include <string>
#include <vector>

#include "mingen/factors.hpp"

namespace mingen {

// One predicted chief factor of the extra-large subgroup H <= E wr Sym_t.
struct XlargePrediction {
  BigNat order;
  bool central = false;
  bool central_known = false;  // is centrality pinned by the analysis?
  enum class Layer { exists, frattini_required } layer = Layer::exists;
  // `exists` factors may be Frattini or not; `frattini_required` ones are the
  // p | t diagonals, which must come out Frattini.
  bool must_be_nonfrattini = false;  // set for factors whose non-Frattini-ness
                                     // the analysis pins (none today; computed
                                     // non-Frattini factors must match anyway)
  std::string source;  // "case 1", "case 2a", "case 2b", "case 3a", "case 3b", "top"
};

struct XlargeFactorSummary {
  BigNat order;
  bool central = false;
  bool frattini = false;
};

struct XlargeReport {
  std::string description;
  BigNat h_order;
  std::vector<XlargePrediction> predictions;
  std::vector<XlargeFactorSummary> computed;
  std::vector<std::string> mismatches;
  bool ok = false;
  std::string error;
};

// Builds H <= E wr Sym_t with H meet B = {x : prod x_i trivial in E/F}
// extended by the top Sym_t, computes its chief series, derives the
// chief-factor predictions from E's series through F, and compares.
XlargeReport extra_large_check(const PermGroup& e, const std::vector<Perm>& f_gens,
                               int t, std::uint64_t seed = 0);

struct XlargeInstance {
  std::string name;
  std::string e_expr;
  std::string f_gens;  // ';'-separated cycle lists in E's degree
  int t;
};
// The instances exercised by the acceptance suite (E/F of order 2 with
// t = 2 and t = 3, the p | t Frattini diagonal, and a trivial quotient).
std::vector<XlargeInstance> bundled_xlarge_instances();
XlargeReport run_xlarge_instance(const XlargeInstance& inst, std::uint64_t seed = 0);

}  // namespace mingen
