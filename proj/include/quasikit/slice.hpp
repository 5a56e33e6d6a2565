#pragma once

#include <vector>

#include "quasikit/exponential.hpp"
#include "quasikit/presheaf.hpp"

namespace quasikit {

/// The category of elements of D, as drawn: objects are pairs (i|d) with
/// d in D(i), one arrow (sigma|d) : (i|d) -> (j|D(sigma)(d)) per drawn arrow
/// sigma : i -> j and element d.  Labels are the down-set algebras
/// L(i) restricted below the membership of d.
struct ElementsCategory {
  FP base_object;  // D
  CategoryPtr category;
  LabelFamily labels;
  std::vector<std::pair<int, int>> object_pairs;    // elements-object -> (i, d)
  std::vector<std::vector<int>> object_of;          // [i][d] -> elements-object
  std::vector<std::pair<int, int>> morphism_pairs;  // elements-morphism -> (sigma, d)
};

ElementsCategory category_of_elements(const FP& D);

/// An object of the slice over (D, delta): a fuzzy presheaf with an anchor
/// morphism into D.
struct SliceObject {
  FP total;
  FuzzyMorphism anchor;
};

SliceObject make_slice_object(FP total, FuzzyMorphism anchor);

// F: fibers of the anchor, with restricted actions and memberships.
FP slice_to_elements(const ElementsCategory& el, const SliceObject& x);
// F on morphisms: the fiberwise restriction of a slice morphism.
FuzzyMorphism slice_morphism_to_elements(const ElementsCategory& el, const SliceObject& x,
                                         const SliceObject& y, const FuzzyMorphism& f);
// G: tagged disjoint union of fibers "(d|a)", anchored by the first tag.
SliceObject elements_to_slice(const ElementsCategory& el, const FP& tilde);

struct IsoPair {
  FuzzyMorphism fwd, bwd;
};

// sigma : GF(x) -> x, the de-partitioning (d|a) -> a, with its inverse.
IsoPair sigma_witness(const ElementsCategory& el, const SliceObject& x);
// tau : FG(~A) -> ~A, the second projection, with its inverse.
IsoPair tau_witness(const ElementsCategory& el, const FP& tilde);

// Exponential in the slice, computed through the equivalence:
// G(exponential(F(p), F(q))).
SliceObject slice_exponential(const ElementsCategory& el, const SliceObject& p,
                              const SliceObject& q, EnumBudget& budget);

// All slice morphisms x -> y: fuzzy morphisms commuting with the anchors.
std::vector<FuzzyMorphism> enumerate_slice_homs(const SliceObject& x, const SliceObject& y,
                                                EnumBudget& budget);

}  // namespace quasikit
