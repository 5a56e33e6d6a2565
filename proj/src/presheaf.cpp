#include "quasikit/presheaf.hpp"

#include <algorithm>
#include <array>

namespace quasikit {

int Presheaf::total_size() const {
  int n = 0;
  for (const auto& c : carrier_) n += static_cast<int>(c.size());
  return n;
}

int Presheaf::element_index(int obj, const std::string& name) const {
  const auto& c = carrier_.at(obj);
  auto it = std::lower_bound(c.begin(), c.end(), name);
  if (it == c.end() || *it != name)
    fail("ActionGap", "no element '" + name + "' in carrier of '" +
                          base_->object_name(obj) + "'");
  return static_cast<int>(it - c.begin());
}

bool Presheaf::operator==(const Presheaf& other) const {
  return base_->equivalent(*other.base_) && carrier_ == other.carrier_ &&
         action_ == other.action_;
}

namespace {

void check_functoriality(const FiniteCategory& C, const Presheaf& p) {
  for (int o = 0; o < C.object_count(); ++o) {
    int idm = C.identity(o);
    for (int x = 0; x < p.size(o); ++x)
      require(p.apply(idm, x) == x, "IdentityViolated",
              "identity action moves '" + p.element_name(o, x) + "' at '" +
                  C.object_name(o) + "'");
  }
  for (int g = 0; g < C.morphism_count(); ++g)
    for (int f = 0; f < C.morphism_count(); ++f) {
      if (C.cod(f) != C.dom(g)) continue;
      int gf = C.compose(g, f);
      for (int x = 0; x < p.size(C.dom(f)); ++x)
        require(p.apply(gf, x) == p.apply(g, p.apply(f, x)), "CompositionViolated",
                "action of '" + C.morphism(g).id + "' after '" + C.morphism(f).id +
                    "' disagrees with the composite");
    }
}

}  // namespace

Presheaf Presheaf::validate(CategoryPtr base, std::vector<std::vector<std::string>> carriers,
                            const std::vector<ActionMap>& actions) {
  Presheaf p;
  p.base_ = std::move(base);
  const FiniteCategory& C = *p.base_;
  require(static_cast<int>(carriers.size()) == C.object_count(), "ActionGap",
          "one carrier required per object");
  require(static_cast<int>(actions.size()) == C.morphism_count(), "ActionGap",
          "one action required per morphism");

  p.carrier_ = std::move(carriers);
  for (auto& c : p.carrier_) {
    std::sort(c.begin(), c.end());
    for (size_t k = 1; k < c.size(); ++k)
      require(c[k] != c[k - 1], "ActionGap", "duplicate carrier element '" + c[k] + "'");
  }

  p.action_.resize(C.morphism_count());
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    p.action_[m].assign(p.size(d), -1);
    for (const auto& [from, to] : actions[m]) {
      int fi = p.element_index(d, from);
      p.action_[m][fi] = p.element_index(c, to);
    }
    for (int x = 0; x < p.size(d); ++x)
      require(p.action_[m][x] >= 0, "ActionGap",
              "action of '" + C.morphism(m).id + "' undefined on '" +
                  p.element_name(d, x) + "'");
  }

  check_functoriality(C, p);
  return p;
}

PresheafBuilder::PresheafBuilder(CategoryPtr base) {
  p_.base_ = std::move(base);
  p_.carrier_.resize(p_.base_->object_count());
  p_.action_.resize(p_.base_->morphism_count());
}

int PresheafBuilder::add_element(int obj, std::string name) {
  auto& c = p_.carrier_.at(obj);
  require(c.empty() || c.back() < name, "ActionGap",
          "builder elements must arrive sorted; got '" + name + "'");
  c.push_back(std::move(name));
  return static_cast<int>(c.size()) - 1;
}

void PresheafBuilder::set_action(int morph, int dom_elem, int cod_elem) {
  auto& a = p_.action_.at(morph);
  if (static_cast<int>(a.size()) <= dom_elem) a.resize(dom_elem + 1, -1);
  a[dom_elem] = cod_elem;
}

Presheaf PresheafBuilder::finish() && {
  const FiniteCategory& C = *p_.base_;
  for (int m = 0; m < C.morphism_count(); ++m) {
    p_.action_[m].resize(p_.size(C.dom(m)), -1);
    for (int x = 0; x < p_.size(C.dom(m)); ++x)
      require(p_.action_[m][x] >= 0 && p_.action_[m][x] < p_.size(C.cod(m)), "ActionGap",
              "builder left an action gap at '" + C.morphism(m).id + "'");
  }
  check_functoriality(C, p_);
  return std::move(p_);
}

Presheaf yoneda(CategoryPtr base, int obj) {
  const FiniteCategory& C = *base;
  require(obj >= 0 && obj < C.object_count(), "UnknownObject", "yoneda object out of range");
  PresheafBuilder b(base);
  // carrier at j: morphisms obj -> j, named by id (hom() is id-sorted)
  std::vector<std::vector<int>> homs(C.object_count());
  for (int j = 0; j < C.object_count(); ++j) {
    homs[j] = C.hom(obj, j);
    for (int m : homs[j]) b.add_element(j, C.morphism(m).id);
  }
  for (int s = 0; s < C.morphism_count(); ++s) {
    int j = C.dom(s), k = C.cod(s);
    for (size_t x = 0; x < homs[j].size(); ++x) {
      int composite = C.compose(s, homs[j][x]);
      auto it = std::lower_bound(homs[k].begin(), homs[k].end(), composite);
      b.set_action(s, static_cast<int>(x), static_cast<int>(it - homs[k].begin()));
    }
  }
  return std::move(b).finish();
}

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "|" + b + ")";
}

Presheaf presheaf_product(const Presheaf& A, const Presheaf& B,
                          std::vector<std::pair<int, int>>* pairs_out) {
  require(A.base().equivalent(B.base()), "ObjectMismatch",
          "product factors live over different base categories");
  const FiniteCategory& C = A.base();
  struct Item {
    std::string name;
    int a, b;
  };
  std::vector<std::vector<Item>> items(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    for (int x = 0; x < A.size(o); ++x)
      for (int y = 0; y < B.size(o); ++y)
        items[o].push_back({pair_name(A.element_name(o, x), B.element_name(o, y)), x, y});
    std::sort(items[o].begin(), items[o].end(),
              [](const Item& l, const Item& r) { return l.name < r.name; });
    for (size_t k = 1; k < items[o].size(); ++k)
      require(items[o][k].name != items[o][k - 1].name, "ActionGap",
              "element names collide under pair naming");
  }
  PresheafBuilder bld(A.base_ptr());
  std::vector<std::vector<std::vector<int>>> at(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    at[o].assign(A.size(o), std::vector<int>(B.size(o), -1));
    for (size_t k = 0; k < items[o].size(); ++k) {
      bld.add_element(o, items[o][k].name);
      at[o][items[o][k].a][items[o][k].b] = static_cast<int>(k);
    }
  }
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    for (size_t k = 0; k < items[d].size(); ++k)
      bld.set_action(m, static_cast<int>(k),
                     at[c][A.apply(m, items[d][k].a)][B.apply(m, items[d][k].b)]);
  }
  Presheaf out = std::move(bld).finish();
  if (pairs_out) {
    pairs_out->clear();
    for (int o = 0; o < C.object_count(); ++o)
      for (const Item& it : items[o]) pairs_out->push_back({it.a, it.b});
  }
  return out;
}

LabelFamily::LabelFamily(std::vector<LatticePtr> per_object)
    : per_object_(std::move(per_object)) {
  for (const auto& p : per_object_)
    require(p != nullptr, "LabelMismatch", "label family has a missing algebra");
}

LabelFamily LabelFamily::uniform(const FiniteCategory& base, LatticePtr lattice) {
  return LabelFamily(std::vector<LatticePtr>(base.object_count(), std::move(lattice)));
}

bool LabelFamily::compatible(const LabelFamily& other) const {
  if (count() != other.count()) return false;
  for (int o = 0; o < count(); ++o)
    if (per_object_[o] != other.per_object_[o] &&
        !per_object_[o]->equivalent(*other.per_object_[o]))
      return false;
  return true;
}

FuzzyPresheaf FuzzyPresheaf::validate(Presheaf shape, LabelFamily labels,
                                      const std::vector<MembershipMap>& membership) {
  const FiniteCategory& C = shape.base();
  require(labels.count() == C.object_count(), "LabelMismatch",
          "one label algebra required per object");
  require(static_cast<int>(membership.size()) == C.object_count(), "LabelMismatch",
          "one membership map required per object");
  FuzzyPresheaf fp;
  fp.membership_.resize(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    fp.membership_[o].assign(shape.size(o), -1);
    for (const auto& [elem, value] : membership[o]) {
      int x = shape.element_index(o, elem);
      fp.membership_[o][x] = labels.at(o).index_of(value);
    }
    for (int x = 0; x < shape.size(o); ++x)
      require(fp.membership_[o][x] >= 0, "LabelMismatch",
              "membership missing for '" + shape.element_name(o, x) + "' at '" +
                  C.object_name(o) + "'");
  }
  fp.shape_ = std::move(shape);
  fp.labels_ = std::move(labels);
  return fp;
}

FuzzyPresheaf FuzzyPresheaf::from_indices(Presheaf shape, LabelFamily labels,
                                          std::vector<std::vector<int>> membership) {
  const FiniteCategory& C = shape.base();
  require(labels.count() == C.object_count(), "LabelMismatch",
          "one label algebra required per object");
  require(static_cast<int>(membership.size()) == C.object_count(), "LabelMismatch",
          "membership table shape mismatch");
  for (int o = 0; o < C.object_count(); ++o) {
    require(static_cast<int>(membership[o].size()) == shape.size(o), "LabelMismatch",
            "membership table shape mismatch");
    for (int v : membership[o])
      require(v >= 0 && v < labels.at(o).size(), "UnknownElement",
              "membership index out of range");
  }
  FuzzyPresheaf fp;
  fp.shape_ = std::move(shape);
  fp.labels_ = std::move(labels);
  fp.membership_ = std::move(membership);
  return fp;
}

bool FuzzyPresheaf::operator==(const FuzzyPresheaf& other) const {
  return shape_ == other.shape_ && labels_.compatible(other.labels_) &&
         membership_ == other.membership_;
}

FP make_fp(FuzzyPresheaf value) { return std::make_shared<const FuzzyPresheaf>(std::move(value)); }

FuzzyMorphism FuzzyMorphism::validate(FP src, FP dst,
                                      const std::vector<ComponentMap>& components) {
  const FiniteCategory& C = src->base();
  require(static_cast<int>(components.size()) == C.object_count(), "NotNatural",
          "one component required per object");
  std::vector<std::vector<int>> comp(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    comp[o].assign(src->size(o), -1);
    for (const auto& [from, to] : components[o]) {
      int x = src->shape().element_index(o, from);
      comp[o][x] = dst->shape().element_index(o, to);
    }
    for (int x = 0; x < src->size(o); ++x)
      require(comp[o][x] >= 0, "NotNatural",
              "component undefined on '" + src->element_name(o, x) + "'");
  }
  return from_indices(std::move(src), std::move(dst), std::move(comp));
}

FuzzyMorphism FuzzyMorphism::from_indices(FP src, FP dst,
                                          std::vector<std::vector<int>> components) {
  require(src->base().equivalent(dst->base()), "ObjectMismatch",
          "source and target live over different base categories");
  require(src->labels().compatible(dst->labels()), "LabelMismatch",
          "source and target disagree on the label family");
  const FiniteCategory& C = src->base();
  for (int o = 0; o < C.object_count(); ++o) {
    require(static_cast<int>(components.at(o).size()) == src->size(o), "NotNatural",
            "component table shape mismatch");
    for (int v : components[o])
      require(v >= 0 && v < dst->size(o), "NotNatural", "component lands outside the target");
  }
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    for (int x = 0; x < src->size(d); ++x)
      require(components[c][src->shape().apply(m, x)] ==
                  dst->shape().apply(m, components[d][x]),
              "NotNatural",
              "naturality square fails at '" + C.morphism(m).id + "' on '" +
                  src->element_name(d, x) + "'");
  }
  for (int o = 0; o < C.object_count(); ++o) {
    const HeytingAlgebra& L = src->labels().at(o);
    for (int x = 0; x < src->size(o); ++x)
      require(L.leq(src->membership(o, x), dst->membership(o, components[o][x])),
              "MembershipDecreases",
              "membership drops at '" + src->element_name(o, x) + "' in '" +
                  C.object_name(o) + "'");
  }
  FuzzyMorphism f;
  f.src_ = std::move(src);
  f.dst_ = std::move(dst);
  f.comp_ = std::move(components);
  return f;
}

FuzzyMorphism FuzzyMorphism::identity(FP a) {
  std::vector<std::vector<int>> comp(a->base().object_count());
  for (int o = 0; o < a->base().object_count(); ++o) {
    comp[o].resize(a->size(o));
    for (int x = 0; x < a->size(o); ++x) comp[o][x] = x;
  }
  return from_indices(a, a, std::move(comp));
}

FuzzyMorphism compose(const FuzzyMorphism& g, const FuzzyMorphism& f) {
  require(*f.dst() == *g.src(), "ObjectMismatch",
          "middle objects of the composition differ");
  std::vector<std::vector<int>> comp(f.src()->base().object_count());
  for (int o = 0; o < f.src()->base().object_count(); ++o) {
    comp[o].resize(f.src()->size(o));
    for (int x = 0; x < f.src()->size(o); ++x) comp[o][x] = g.apply(o, f.apply(o, x));
  }
  return FuzzyMorphism::from_indices(f.src(), g.dst(), std::move(comp));
}

MonoClass classify_mono(const FuzzyMorphism& f) {
  const FiniteCategory& C = f.src()->base();
  for (int o = 0; o < C.object_count(); ++o) {
    std::vector<char> hit(f.dst()->size(o), 0);
    for (int x = 0; x < f.src()->size(o); ++x) {
      int y = f.apply(o, x);
      if (hit[y]) return MonoClass::NotMono;
      hit[y] = 1;
    }
  }
  for (int o = 0; o < C.object_count(); ++o)
    for (int x = 0; x < f.src()->size(o); ++x)
      if (f.src()->membership(o, x) != f.dst()->membership(o, f.apply(o, x)))
        return MonoClass::Mono;
  return MonoClass::RegularMono;
}

bool Subobject::contains(int obj, int ambient_elem) const {
  const auto& e = elems.at(obj);
  return std::binary_search(e.begin(), e.end(), ambient_elem);
}

int Subobject::membership_of(int obj, int ambient_elem) const {
  const auto& e = elems.at(obj);
  auto it = std::lower_bound(e.begin(), e.end(), ambient_elem);
  require(it != e.end() && *it == ambient_elem, "UnknownElement",
          "element not in the subobject");
  return membership.at(obj).at(static_cast<size_t>(it - e.begin()));
}

Subobject make_subobject(FP ambient, std::vector<std::vector<int>> elems,
                         std::vector<std::vector<int>> membership) {
  const FiniteCategory& C = ambient->base();
  Subobject s;
  s.ambient = std::move(ambient);
  s.elems = std::move(elems);
  s.membership = std::move(membership);
  require(static_cast<int>(s.elems.size()) == C.object_count() &&
              s.membership.size() == s.elems.size(),
          "NotMono", "subobject table shape mismatch");
  for (int o = 0; o < C.object_count(); ++o) {
    require(s.elems[o].size() == s.membership[o].size(), "NotMono",
            "subobject table shape mismatch");
    require(std::is_sorted(s.elems[o].begin(), s.elems[o].end()), "NotMono",
            "subobject element lists must be sorted");
    for (size_t k = 0; k < s.elems[o].size(); ++k) {
      int x = s.elems[o][k];
      require(x >= 0 && x < s.ambient->size(o), "UnknownElement",
              "subobject element out of range");
      require(s.ambient->labels().at(o).leq(s.membership[o][k], s.ambient->membership(o, x)),
              "MembershipDecreases", "subobject membership exceeds the ambient one");
    }
  }
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    for (int x : s.elems[d])
      require(s.contains(c, s.ambient->shape().apply(m, x)), "NotMono",
              "subobject is not closed under the action of '" + C.morphism(m).id + "'");
  }
  s.regular = true;
  for (int o = 0; o < C.object_count() && s.regular; ++o)
    for (size_t k = 0; k < s.elems[o].size(); ++k)
      if (s.membership[o][k] != s.ambient->membership(o, s.elems[o][k])) {
        s.regular = false;
        break;
      }
  return s;
}

Subobject canonical_subobject(const FuzzyMorphism& m) {
  require(classify_mono(m) != MonoClass::NotMono, "NotMono",
          "canonical subobjects exist only for monomorphisms");
  const FiniteCategory& C = m.src()->base();
  std::vector<std::vector<int>> elems(C.object_count()), memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    std::vector<std::pair<int, int>> image;  // (ambient index, membership)
    for (int x = 0; x < m.src()->size(o); ++x)
      image.push_back({m.apply(o, x), m.src()->membership(o, x)});
    std::sort(image.begin(), image.end());
    for (auto& [e, v] : image) {
      elems[o].push_back(e);
      memb[o].push_back(v);
    }
  }
  return make_subobject(m.dst(), std::move(elems), std::move(memb));
}

Subobject full_subobject(FP ambient) {
  const FiniteCategory& C = ambient->base();
  std::vector<std::vector<int>> elems(C.object_count()), memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o)
    for (int x = 0; x < ambient->size(o); ++x) {
      elems[o].push_back(x);
      memb[o].push_back(ambient->membership(o, x));
    }
  return make_subobject(std::move(ambient), std::move(elems), std::move(memb));
}

Subobject empty_subobject(FP ambient) {
  int n = ambient->base().object_count();
  return make_subobject(std::move(ambient), std::vector<std::vector<int>>(n),
                        std::vector<std::vector<int>>(n));
}

bool subobject_eq(const Subobject& a, const Subobject& b) {
  return *a.ambient == *b.ambient && a.elems == b.elems && a.membership == b.membership;
}

bool subobject_leq(const Subobject& a, const Subobject& b) {
  if (!(*a.ambient == *b.ambient)) return false;
  for (int o = 0; o < a.ambient->base().object_count(); ++o)
    for (size_t k = 0; k < a.elems[o].size(); ++k) {
      int x = a.elems[o][k];
      if (!b.contains(o, x)) return false;
      if (!a.ambient->labels().at(o).leq(a.membership[o][k], b.membership_of(o, x)))
        return false;
    }
  return true;
}

FP subobject_presheaf(const Subobject& s) {
  const FiniteCategory& C = s.ambient->base();
  PresheafBuilder b(s.ambient->base_ptr());
  // ambient carriers are sorted, so index-sorted subsets stay name-sorted
  for (int o = 0; o < C.object_count(); ++o)
    for (int x : s.elems[o]) b.add_element(o, s.ambient->element_name(o, x));
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    for (size_t k = 0; k < s.elems[d].size(); ++k) {
      int y = s.ambient->shape().apply(m, s.elems[d][k]);
      auto it = std::lower_bound(s.elems[c].begin(), s.elems[c].end(), y);
      b.set_action(m, static_cast<int>(k), static_cast<int>(it - s.elems[c].begin()));
    }
  }
  std::vector<std::vector<int>> memb = s.membership;
  std::vector<LatticePtr> fam;
  for (int o = 0; o < C.object_count(); ++o) fam.push_back(s.ambient->labels().ptr(o));
  return make_fp(FuzzyPresheaf::from_indices(std::move(b).finish(), LabelFamily(fam),
                                             std::move(memb)));
}

FuzzyMorphism subobject_inclusion(const Subobject& s) {
  FP dom = subobject_presheaf(s);
  std::vector<std::vector<int>> comp = s.elems;
  return FuzzyMorphism::from_indices(std::move(dom), s.ambient, std::move(comp));
}

Subobject pullback_subobject(const FuzzyMorphism& f, const Subobject& m) {
  require(*f.dst() == *m.ambient, "ObjectMismatch",
          "subobject must live in the codomain of the morphism");
  const FiniteCategory& C = f.src()->base();
  std::vector<std::vector<int>> elems(C.object_count()), memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    const HeytingAlgebra& L = f.src()->labels().at(o);
    for (int x = 0; x < f.src()->size(o); ++x) {
      int y = f.apply(o, x);
      if (!m.contains(o, y)) continue;
      elems[o].push_back(x);
      memb[o].push_back(L.meet(f.src()->membership(o, x), m.membership_of(o, y)));
    }
  }
  return make_subobject(f.src(), std::move(elems), std::move(memb));
}

namespace {

// Shared backtracking enumerator over component tables.  Candidate lists are
// per flattened element; naturality constraints fire as soon as both ends of
// a square are assigned.
struct NatEnumerator {
  const Presheaf& src;
  const Presheaf& dst;
  std::vector<int> offset;                         // per object
  std::vector<std::pair<int, int>> flat;           // (obj, elem)
  std::vector<std::vector<int>> candidates;        // per flat index
  // checks registered at the later endpoint: (morph, flat_x, flat_y) with
  // y = src.apply(morph, x)
  std::vector<std::vector<std::array<int, 3>>> checks;
  std::vector<int> chosen;
  std::vector<std::vector<std::vector<int>>> results;
  EnumBudget* budget;
  std::size_t stop_after = SIZE_MAX;

  NatEnumerator(const Presheaf& s, const Presheaf& d, EnumBudget& b)
      : src(s), dst(d), budget(&b) {
    const FiniteCategory& C = src.base();
    offset.resize(C.object_count());
    int pos = 0;
    for (int o = 0; o < C.object_count(); ++o) {
      offset[o] = pos;
      for (int x = 0; x < src.size(o); ++x) flat.push_back({o, x});
      pos += src.size(o);
    }
    candidates.resize(flat.size());
    checks.resize(flat.size());
    for (int m = 0; m < C.morphism_count(); ++m) {
      int d0 = C.dom(m);
      for (int x = 0; x < src.size(d0); ++x) {
        int kx = offset[d0] + x;
        int ky = offset[C.cod(m)] + src.apply(m, x);
        checks[std::max(kx, ky)].push_back({m, kx, ky});
      }
    }
    chosen.assign(flat.size(), -1);
  }

  bool ok_at(int k) const {
    for (const auto& [m, kx, ky] : checks[k]) {
      if (chosen[kx] < 0 || chosen[ky] < 0) continue;
      if (dst.apply(m, chosen[kx]) != chosen[ky]) return false;
    }
    return true;
  }

  void run(int k) {
    if (results.size() >= stop_after) return;
    if (k == static_cast<int>(flat.size())) {
      const FiniteCategory& C = src.base();
      std::vector<std::vector<int>> comp(C.object_count());
      for (size_t j = 0; j < flat.size(); ++j)
        comp[flat[j].first].push_back(chosen[j]);
      results.push_back(std::move(comp));
      return;
    }
    for (int cand : candidates[k]) {
      if (results.size() >= stop_after) break;
      budget->spend();
      chosen[k] = cand;
      if (ok_at(k)) run(k + 1);
    }
    chosen[k] = -1;
  }
};

}  // namespace

std::vector<std::vector<std::vector<int>>> enumerate_natural_transformations(
    const Presheaf& src, const Presheaf& dst, EnumBudget& budget) {
  require(src.base().equivalent(dst.base()), "ObjectMismatch",
          "transformations need a shared base category");
  NatEnumerator e(src, dst, budget);
  for (size_t k = 0; k < e.flat.size(); ++k) {
    auto [o, x] = e.flat[k];
    for (int y = 0; y < dst.size(o); ++y) e.candidates[k].push_back(y);
  }
  e.run(0);
  return std::move(e.results);
}

std::vector<std::vector<std::vector<int>>> enumerate_constrained_transformations(
    const Presheaf& src, const Presheaf& dst,
    const std::vector<std::vector<std::vector<int>>>& candidates, EnumBudget& budget,
    std::size_t stop_after) {
  require(src.base().equivalent(dst.base()), "ObjectMismatch",
          "transformations need a shared base category");
  NatEnumerator e(src, dst, budget);
  e.stop_after = stop_after;
  for (size_t k = 0; k < e.flat.size(); ++k) {
    auto [o, x] = e.flat[k];
    e.candidates[k] = candidates.at(o).at(x);
  }
  e.run(0);
  return std::move(e.results);
}

std::vector<FuzzyMorphism> enumerate_fuzzy_morphisms(const FP& src, const FP& dst,
                                                     EnumBudget& budget) {
  require(src->base().equivalent(dst->base()), "ObjectMismatch",
          "morphisms need a shared base category");
  require(src->labels().compatible(dst->labels()), "LabelMismatch",
          "morphisms need a shared label family");
  NatEnumerator e(src->shape(), dst->shape(), budget);
  for (size_t k = 0; k < e.flat.size(); ++k) {
    auto [o, x] = e.flat[k];
    const HeytingAlgebra& L = src->labels().at(o);
    for (int y = 0; y < dst->size(o); ++y)
      if (L.leq(src->membership(o, x), dst->membership(o, y)))
        e.candidates[k].push_back(y);
  }
  e.run(0);
  std::vector<FuzzyMorphism> out;
  out.reserve(e.results.size());
  for (auto& comp : e.results)
    out.push_back(FuzzyMorphism::from_indices(src, dst, std::move(comp)));
  return out;
}

}  // namespace quasikit
