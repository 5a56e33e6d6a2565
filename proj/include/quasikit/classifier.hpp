#pragma once

#include <string>
#include <vector>

#include "quasikit/limits.hpp"
#include "quasikit/presheaf.hpp"

namespace quasikit {

/// A sieve at `at`: for every object j, a subset of hom(at, j), closed under
/// post-composition.  (The paper's sieves precompose; the drawn category is
/// the dual, so closure runs the other way here.)
struct Sieve {
  int at = -1;
  std::vector<std::vector<int>> members;  // per object: sorted morphism indices

  std::string name(const FiniteCategory& C) const;  // "{id_E,s,t}"-style
  bool is_maximal(const FiniteCategory& C) const;
};

// All sieves at `obj`, sorted by canonical name.
std::vector<Sieve> enumerate_sieves(const CategoryPtr& base, int obj, EnumBudget& budget);

// Pull a sieve at `i` back along sigma : i -> j, giving a sieve at j:
// kappa is a member iff kappa . sigma was one.
Sieve sieve_action(const FiniteCategory& C, const Sieve& n, int sigma);

/// The regular-subobject classifier: Omega's carrier at i is every sieve at
/// i with full membership, True picks the maximal sieve.
struct Classifier {
  FP omega;
  FP terminal;
  FuzzyMorphism true_arrow;
  std::vector<std::vector<Sieve>> sieves;  // per object, in carrier order

  int sieve_index(int obj, const Sieve& s) const;
  int maximal_index(int obj) const;
};

Classifier build_classifier(const CategoryPtr& base, const LabelFamily& labels,
                            EnumBudget& budget);

// Characteristic morphism of a regular subobject: element b at i goes to the
// sieve of arrows whose action lands inside the subobject.
FuzzyMorphism chi(const Classifier& cls, const Subobject& sub);

// Inverse direction: the regular subobject carried by the preimage of the
// maximal sieves.
Subobject pullback_true(const Classifier& cls, const FuzzyMorphism& candidate);

// Exhaustively counts natural transformations ambient -> Omega whose
// True-pullback equals `sub`; the classifier lemma says exactly one.
int count_classifying_maps(const Classifier& cls, const Subobject& sub, EnumBudget& budget);

}  // namespace quasikit
