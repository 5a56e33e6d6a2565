#pragma once

#include <string>
#include <vector>

#include "quasikit/presheaf.hpp"

namespace quasikit {

/// A constructed (co)limit: the universal object plus its projection or
/// injection legs in diagram order.
struct ConeResult {
  FP object;
  std::vector<FuzzyMorphism> legs;
};

// Terminal object: one element of full membership per object.
FP extremal_terminal(CategoryPtr base, const LabelFamily& labels);
// Initial object: empty carriers.
FP extremal_initial(CategoryPtr base, const LabelFamily& labels);

// Product carrier is the pointwise cartesian product, membership the meet.
ConeResult binary_product(const FP& A, const FP& B);
// Coproduct is the tagged disjoint union with memberships preserved.
ConeResult binary_coproduct(const FP& A, const FP& B);

// Pullback of f : B -> D and g : C -> D; legs [P -> B, P -> C].
ConeResult pullback(const FuzzyMorphism& f, const FuzzyMorphism& g);
// Pushout of f : D -> B and g : D -> C; legs [B -> Q, C -> Q].  Classes are
// union-find quotients named by their sorted member lists; membership of a
// class is the join of its members.
ConeResult pushout(const FuzzyMorphism& f, const FuzzyMorphism& g);

// Equalizer of a parallel pair A => B; the single leg is a regular mono.
ConeResult equalizer(const FuzzyMorphism& f, const FuzzyMorphism& g);
// Coequalizer; the single leg is the quotient map.
ConeResult coequalizer(const FuzzyMorphism& f, const FuzzyMorphism& g);

// n-ary tagged disjoint union ("0:a", "1:b", ...) with injections.
ConeResult disjoint_union(const std::vector<FP>& parts);

struct OracleReport {
  bool ok = true;
  std::string detail;                 // counterexample description when !ok
  std::uint64_t test_objects = 0;     // instrumentation
  std::uint64_t cones_checked = 0;
  std::uint64_t candidates_explored = 0;
};

// Every representable presheaf equipped with every membership assignment.
// Jointly these detect any failure of a limit candidate.
std::vector<FP> fuzzy_representables(const CategoryPtr& base, const LabelFamily& labels,
                                     EnumBudget& budget);

// Brute-force universal-property checks.  Limit checks quantify competing
// cones over all fuzzy representables; colimit checks quantify cocones over
// all quotient objects of the feet's disjoint union plus the candidate
// itself.  Both families are large enough to be decisive at this scale: a
// candidate passing every check is isomorphic to the true (co)limit.
OracleReport verify_terminal(const FP& candidate, EnumBudget& budget);
OracleReport verify_initial(const FP& candidate, EnumBudget& budget);
OracleReport verify_product(const FP& A, const FP& B, const FP& apex,
                            const FuzzyMorphism& pa, const FuzzyMorphism& pb,
                            EnumBudget& budget);
OracleReport verify_pullback(const FuzzyMorphism& f, const FuzzyMorphism& g, const FP& apex,
                             const FuzzyMorphism& pa, const FuzzyMorphism& pb,
                             EnumBudget& budget);
OracleReport verify_equalizer(const FuzzyMorphism& f, const FuzzyMorphism& g, const FP& apex,
                              const FuzzyMorphism& inclusion, EnumBudget& budget);
OracleReport verify_coproduct(const FP& A, const FP& B, const FP& coapex,
                              const FuzzyMorphism& ia, const FuzzyMorphism& ib,
                              EnumBudget& budget);
OracleReport verify_pushout(const FuzzyMorphism& f, const FuzzyMorphism& g, const FP& coapex,
                            const FuzzyMorphism& qb, const FuzzyMorphism& qc,
                            EnumBudget& budget);
OracleReport verify_coequalizer(const FuzzyMorphism& f, const FuzzyMorphism& g,
                                const FP& coapex, const FuzzyMorphism& q,
                                EnumBudget& budget);

}  // namespace quasikit
