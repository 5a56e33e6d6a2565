#pragma once

#include <vector>

#include "quasikit/limits.hpp"
#include "quasikit/presheaf.hpp"

namespace quasikit {

/// The exponential (B,beta)^(A,alpha).  Carrier elements at i are the
/// natural transformations y(i) x A -> B, kept with their component tables
/// so that currying and evaluation can look inside them.
class ExponentialObject {
 public:
  static ExponentialObject build(FP A, FP B, EnumBudget& budget);

  const FP& object() const { return object_; }
  const FP& operand() const { return A_; }
  const FP& target() const { return B_; }

  // Component table of carrier element k at object i: for every object j and
  // every element of (y(i) x A)(j), the image in B(j).
  const std::vector<std::vector<int>>& transform(int i, int k) const {
    return transforms_.at(i).at(k);
  }
  // Element index of the pair (sigma : i -> j, a) inside (y(i) x A)(j).
  int pair_index(int i, int j, int sigma, int a) const;
  // Find the carrier element of the exponential at i with this table.
  int find_transform(int i, const std::vector<std::vector<int>>& table) const;

 private:
  FP A_, B_, object_;
  std::vector<std::vector<std::vector<std::vector<int>>>> transforms_;  // [i][k][j][elem]
  std::vector<std::vector<std::vector<int>>> hom_pos_;  // [i][j]: morphism -> y(i)(j) index
  std::vector<std::vector<std::vector<std::vector<int>>>> pair_at_;  // [i][j][yIdx][aIdx]
};

// phi: a morphism h : C x A -> B becomes phi(h) : C -> B^A with
// phi(h)_i(c)_j(sigma, a) = h_j(C(sigma)(c), a).
FuzzyMorphism curry(const ExponentialObject& exp, const FuzzyMorphism& h, const FP& C);

// psi: k : C -> B^A becomes psi(k) : C x A -> B with
// psi(k)_i(c, a) = k_i(c)_i(id_i, a).
FuzzyMorphism uncurry(const ExponentialObject& exp, const FuzzyMorphism& k);

// Counit: eval = uncurry(identity) : B^A x A -> B.
FuzzyMorphism eval_morphism(const ExponentialObject& exp);

// Functorial action of (-)^(A,alpha) on g : B -> B', i.e. postcomposition;
// used by the adjunction-naturality checks.
FuzzyMorphism exponential_on_morphism(const ExponentialObject& expB,
                                      const ExponentialObject& expBp,
                                      const FuzzyMorphism& g);

}  // namespace quasikit
