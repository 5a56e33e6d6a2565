#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quasikit/category.hpp"
#include "quasikit/lattice.hpp"

namespace quasikit {

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

/// Counts enumeration work and aborts with EnumerationCap when exhausted.
struct EnumBudget {
  std::uint64_t remaining = kDefaultEnumCap;
  std::uint64_t spent = 0;
  void spend(std::uint64_t amount = 1) {
    if (amount > remaining)
      fail("EnumerationCap", "candidate space exceeds the configured bound");
    remaining -= amount;
    spent += amount;
  }
};

/// A finite presheaf stored as one carrier per object and one tabulated
/// function per base morphism.  The base category is kept as drawn, so the
/// action is covariant on the drawn arrows: for s : E -> V the table maps
/// edge elements to their source vertices.
class Presheaf {
 public:
  using ActionMap = std::map<std::string, std::string>;  // per morphism, by element name

  static Presheaf validate(CategoryPtr base, std::vector<std::vector<std::string>> carriers,
                           const std::vector<ActionMap>& actions);

  const FiniteCategory& base() const { return *base_; }
  const CategoryPtr& base_ptr() const { return base_; }
  int size(int obj) const { return static_cast<int>(carrier_.at(obj).size()); }
  int total_size() const;
  const std::vector<std::string>& carrier(int obj) const { return carrier_.at(obj); }
  const std::string& element_name(int obj, int k) const { return carrier_.at(obj).at(k); }
  int element_index(int obj, const std::string& name) const;  // ActionGap on miss
  int apply(int morph, int elem) const { return action_.at(morph).at(elem); }
  const std::vector<std::vector<int>>& actions() const { return action_; }

  bool operator==(const Presheaf& other) const;

 private:
  friend Presheaf presheaf_product(const Presheaf&, const Presheaf&,
                                   std::vector<std::pair<int, int>>* pairs_out);
  friend class PresheafBuilder;
  Presheaf() = default;

  CategoryPtr base_;
  std::vector<std::vector<std::string>> carrier_;  // sorted per object
  std::vector<std::vector<int>> action_;           // [morph][elem of dom] -> elem of cod
};

/// Direct, already-indexed construction used by the derived constructions;
/// still runs the full functoriality validation.
class PresheafBuilder {
 public:
  explicit PresheafBuilder(CategoryPtr base);
  // Elements must be added in sorted name order per object.
  int add_element(int obj, std::string name);
  void set_action(int morph, int dom_elem, int cod_elem);
  Presheaf finish() &&;

 private:
  Presheaf p_;
};

// The Yoneda presheaf y(i): carrier at j is hom(i, j) by morphism id, the
// action along sigma : j -> k post-composes.
Presheaf yoneda(CategoryPtr base, int obj);

// Carrier-wise product with "(a|b)" element names; `pairs_out`, when given,
// receives per-object (left,right) index pairs parallel to the carrier.
Presheaf presheaf_product(const Presheaf& A, const Presheaf& B,
                          std::vector<std::pair<int, int>>* pairs_out = nullptr);

std::string pair_name(const std::string& a, const std::string& b);

/// One Heyting algebra per base object.  Two families are compatible when
/// they are pointwise structurally equal, which makes membership indices
/// interchangeable.
class LabelFamily {
 public:
  LabelFamily() = default;
  explicit LabelFamily(std::vector<LatticePtr> per_object);
  static LabelFamily uniform(const FiniteCategory& base, LatticePtr lattice);

  int count() const { return static_cast<int>(per_object_.size()); }
  const HeytingAlgebra& at(int obj) const { return *per_object_.at(obj); }
  const LatticePtr& ptr(int obj) const { return per_object_.at(obj); }
  bool compatible(const LabelFamily& other) const;

 private:
  std::vector<LatticePtr> per_object_;
};

/// A presheaf with one membership value per element, drawn from the label
/// algebra of its object.
class FuzzyPresheaf {
 public:
  using MembershipMap = std::map<std::string, std::string>;  // element -> lattice element

  static FuzzyPresheaf validate(Presheaf shape, LabelFamily labels,
                                const std::vector<MembershipMap>& membership);
  static FuzzyPresheaf from_indices(Presheaf shape, LabelFamily labels,
                                    std::vector<std::vector<int>> membership);

  const Presheaf& shape() const { return shape_; }
  const LabelFamily& labels() const { return labels_; }
  const FiniteCategory& base() const { return shape_.base(); }
  const CategoryPtr& base_ptr() const { return shape_.base_ptr(); }
  int size(int obj) const { return shape_.size(obj); }
  const std::string& element_name(int obj, int k) const { return shape_.element_name(obj, k); }
  int membership(int obj, int k) const { return membership_.at(obj).at(k); }
  const std::vector<std::vector<int>>& membership_table() const { return membership_; }

  bool operator==(const FuzzyPresheaf& other) const;

 private:
  FuzzyPresheaf() = default;

  Presheaf shape_;
  LabelFamily labels_;
  std::vector<std::vector<int>> membership_;
};

using FP = std::shared_ptr<const FuzzyPresheaf>;

FP make_fp(FuzzyPresheaf value);

/// A natural transformation whose components never decrease membership.
class FuzzyMorphism {
 public:
  using ComponentMap = std::map<std::string, std::string>;

  // Errors: NotNatural, MembershipDecreases, LabelMismatch, ObjectMismatch.
  static FuzzyMorphism validate(FP src, FP dst, const std::vector<ComponentMap>& components);
  static FuzzyMorphism from_indices(FP src, FP dst, std::vector<std::vector<int>> components);
  static FuzzyMorphism identity(FP a);

  const FP& src() const { return src_; }
  const FP& dst() const { return dst_; }
  int apply(int obj, int elem) const { return comp_.at(obj).at(elem); }
  const std::vector<std::vector<int>>& components() const { return comp_; }
  bool equal_components(const FuzzyMorphism& other) const { return comp_ == other.comp_; }

 private:
  FuzzyMorphism() = default;

  FP src_, dst_;
  std::vector<std::vector<int>> comp_;
};

FuzzyMorphism compose(const FuzzyMorphism& g, const FuzzyMorphism& f);

enum class MonoClass { NotMono, Mono, RegularMono };

MonoClass classify_mono(const FuzzyMorphism& f);

/// Canonical pointwise-subset form of a subobject: which ambient elements
/// are present, with what (possibly lowered) membership.  `regular` records
/// whether the membership is exactly the ambient restriction.
struct Subobject {
  FP ambient;
  std::vector<std::vector<int>> elems;       // sorted ambient indices per object
  std::vector<std::vector<int>> membership;  // parallel to elems
  bool regular = false;

  bool contains(int obj, int ambient_elem) const;
  int membership_of(int obj, int ambient_elem) const;  // requires contains
};

// Image of a mono with membership transported from its domain.
Subobject canonical_subobject(const FuzzyMorphism& m);
Subobject full_subobject(FP ambient);
Subobject empty_subobject(FP ambient);
// Validates closure under the ambient action and membership bounds.
Subobject make_subobject(FP ambient, std::vector<std::vector<int>> elems,
                         std::vector<std::vector<int>> membership);

bool subobject_eq(const Subobject& a, const Subobject& b);
bool subobject_leq(const Subobject& a, const Subobject& b);

FP subobject_presheaf(const Subobject& s);
FuzzyMorphism subobject_inclusion(const Subobject& s);

// The Sub functor on morphisms: pull a subobject of f's codomain back to a
// subobject of f's domain.
Subobject pullback_subobject(const FuzzyMorphism& f, const Subobject& m);

// All natural transformations src -> dst (no membership constraint).
std::vector<std::vector<std::vector<int>>> enumerate_natural_transformations(
    const Presheaf& src, const Presheaf& dst, EnumBudget& budget);

// Natural transformations whose value on element x of carrier(obj) is
// restricted to candidates[obj][x].  Stops early after `stop_after` results.
std::vector<std::vector<std::vector<int>>> enumerate_constrained_transformations(
    const Presheaf& src, const Presheaf& dst,
    const std::vector<std::vector<std::vector<int>>>& candidates, EnumBudget& budget,
    std::size_t stop_after = SIZE_MAX);

// All valid fuzzy morphisms src -> dst.
std::vector<FuzzyMorphism> enumerate_fuzzy_morphisms(const FP& src, const FP& dst,
                                                     EnumBudget& budget);

}  // namespace quasikit
