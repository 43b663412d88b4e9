#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "mingen/perm_group.hpp"

namespace mingen {

// A homomorphism given on generators, realized as an action on target points.
// Construction verifies the generator map extends to a homomorphism (the
// order identity |source| = |kernel| * |image| is checked exactly) and
// computes kernel generators from the sifted relators of the image's chain.
class ActionHom {
 public:
  ActionHom(PermGroup source, std::vector<Perm> gen_images, int target_degree);

  const PermGroup& source() const { return source_; }
  const PermGroup& image() const { return image_; }
  const PermGroup& kernel() const { return kernel_; }
  const std::vector<Perm>& gen_images() const { return gen_images_; }
  int target_degree() const { return target_degree_; }

  // Some preimage of an element of the image; throws input_error otherwise.
  Perm lift(const Perm& image_elem) const;
  // Preimage of a subgroup S <= image; |result| = |kernel| * |S|.
  PermGroup preimage(const PermGroup& sub_of_image) const;

 private:
  struct PairChain;
  PermGroup source_;
  std::vector<Perm> gen_images_;
  int target_degree_;
  PermGroup image_;
  PermGroup kernel_;
  std::shared_ptr<PairChain> chain_;
};

// Right cosets of `lower` inside `upper` (same ambient degree), indexed by
// canonical representative. reps[i] is the canonical element of its coset.
struct CosetTable {
  std::shared_ptr<const PermGroup> lower;
  std::vector<Perm> reps;
  std::unordered_map<Perm, int, PermHash> index;
  int find(const Perm& x) const;  // coset point of lower*x
  int size() const { return static_cast<int>(reps.size()); }
};
CosetTable enumerate_cosets(const PermGroup& lower, const PermGroup& upper,
                            long long cap);

// G acting on the right cosets of H <= G. Kernel is the core of H in G; for
// normal H the image is a faithful regular copy of G/H.
ActionHom coset_action(const PermGroup& g, const PermGroup& h);

// G acting by conjugation on the cosets of `lower` inside `upper`
// (lower and upper normal in G). Kernel is the centralizer C_G(upper/lower).
struct FactorActionResult {
  CosetTable table;
  ActionHom hom;
};
FactorActionResult conjugation_action(const PermGroup& g, const PermGroup& upper,
                                      const PermGroup& lower, long long cap);

}  // namespace mingen
