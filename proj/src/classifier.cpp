#include "quasikit/classifier.hpp"

#include <algorithm>

namespace quasikit {

std::string Sieve::name(const FiniteCategory& C) const {
  // morphism ids are globally unique, so the flat sorted id list identifies
  // the sieve; the per-object split is recoverable from codomains
  std::vector<std::string> ids;
  for (const auto& per_obj : members)
    for (int m : per_obj) ids.push_back(C.morphism(m).id);
  std::sort(ids.begin(), ids.end());
  std::string out = "{";
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ",";
    out += ids[k];
  }
  return out + "}";
}

bool Sieve::is_maximal(const FiniteCategory& C) const {
  for (int j = 0; j < C.object_count(); ++j)
    if (members[j].size() != C.hom(at, j).size()) return false;
  return true;
}

std::vector<Sieve> enumerate_sieves(const CategoryPtr& base, int obj, EnumBudget& budget) {
  const FiniteCategory& C = *base;
  std::vector<int> out_set;  // all morphisms with dom == obj
  for (int m = 0; m < C.morphism_count(); ++m)
    if (C.dom(m) == obj) out_set.push_back(m);
  const size_t n = out_set.size();
  require(n < 63, "EnumerationCap", "sieve enumeration needs fewer than 63 generators");

  // postcomposition successors inside the out-set
  std::vector<int> pos(C.morphism_count(), -1);
  for (size_t k = 0; k < n; ++k) pos[out_set[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> succ(n);
  for (size_t k = 0; k < n; ++k)
    for (int s = 0; s < C.morphism_count(); ++s)
      if (C.dom(s) == C.cod(out_set[k])) succ[k].push_back(pos[C.compose(s, out_set[k])]);

  std::vector<Sieve> sieves;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    budget.spend();
    bool closed = true;
    for (size_t k = 0; k < n && closed; ++k) {
      if (!(mask & (1ull << k))) continue;
      for (int nk : succ[k])
        if (!(mask & (1ull << nk))) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    Sieve s;
    s.at = obj;
    s.members.resize(C.object_count());
    for (size_t k = 0; k < n; ++k)
      if (mask & (1ull << k)) s.members[C.cod(out_set[k])].push_back(out_set[k]);
    for (auto& per_obj : s.members) std::sort(per_obj.begin(), per_obj.end());
    sieves.push_back(std::move(s));
  }
  std::sort(sieves.begin(), sieves.end(),
            [&C](const Sieve& a, const Sieve& b) { return a.name(C) < b.name(C); });
  return sieves;
}

Sieve sieve_action(const FiniteCategory& C, const Sieve& n, int sigma) {
  require(C.dom(sigma) == n.at, "CompositionGap", "sieve action needs a matching arrow");
  Sieve out;
  out.at = C.cod(sigma);
  out.members.resize(C.object_count());
  for (int k = 0; k < C.object_count(); ++k) {
    for (int kappa : C.hom(out.at, k)) {
      int composite = C.compose(kappa, sigma);
      if (std::binary_search(n.members[k].begin(), n.members[k].end(), composite))
        out.members[k].push_back(kappa);
    }
    std::sort(out.members[k].begin(), out.members[k].end());
  }
  return out;
}

int Classifier::sieve_index(int obj, const Sieve& s) const {
  const auto& list = sieves.at(obj);
  for (size_t k = 0; k < list.size(); ++k)
    if (list[k].members == s.members) return static_cast<int>(k);
  fail("UnknownElement", "sieve not found in the classifier carrier");
}

int Classifier::maximal_index(int obj) const {
  const FiniteCategory& C = omega->base();
  for (size_t k = 0; k < sieves[obj].size(); ++k)
    if (sieves[obj][k].is_maximal(C)) return static_cast<int>(k);
  fail("UnknownElement", "no maximal sieve found");
}

Classifier build_classifier(const CategoryPtr& base, const LabelFamily& labels,
                            EnumBudget& budget) {
  const FiniteCategory& C = *base;
  Classifier cls;
  cls.sieves.resize(C.object_count());

  PresheafBuilder b(base);
  for (int i = 0; i < C.object_count(); ++i) {
    cls.sieves[i] = enumerate_sieves(base, i, budget);
    for (const Sieve& s : cls.sieves[i]) b.add_element(i, s.name(C));
  }
  auto index_of = [&](int obj, const Sieve& s) {
    const auto& list = cls.sieves[obj];
    for (size_t k = 0; k < list.size(); ++k)
      if (list[k].members == s.members) return static_cast<int>(k);
    fail("UnknownElement", "sieve image missing");
  };
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m);
    for (size_t k = 0; k < cls.sieves[d].size(); ++k)
      b.set_action(m, static_cast<int>(k), index_of(C.cod(m), sieve_action(C, cls.sieves[d][k], m)));
  }
  std::vector<std::vector<int>> memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o)
    memb[o].assign(cls.sieves[o].size(), labels.at(o).top());
  cls.omega =
      make_fp(FuzzyPresheaf::from_indices(std::move(b).finish(), labels, std::move(memb)));

  cls.terminal = extremal_terminal(base, labels);
  std::vector<std::vector<int>> comp(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) comp[o] = {cls.maximal_index(o)};
  cls.true_arrow = FuzzyMorphism::from_indices(cls.terminal, cls.omega, std::move(comp));
  return cls;
}

FuzzyMorphism chi(const Classifier& cls, const Subobject& sub) {
  require(sub.regular, "NotRegular",
          "the classifier only characterises regular subobjects");
  const FP& B = sub.ambient;
  const FiniteCategory& C = B->base();
  require(C.equivalent(cls.omega->base()), "ObjectMismatch",
          "subobject and classifier live over different bases");
  std::vector<std::vector<int>> comp(C.object_count());
  for (int i = 0; i < C.object_count(); ++i) {
    comp[i].resize(B->size(i));
    for (int x = 0; x < B->size(i); ++x) {
      Sieve s;
      s.at = i;
      s.members.resize(C.object_count());
      for (int j = 0; j < C.object_count(); ++j)
        for (int sigma : C.hom(i, j))
          if (sub.contains(j, B->shape().apply(sigma, x))) s.members[j].push_back(sigma);
      comp[i][x] = cls.sieve_index(i, s);
    }
  }
  return FuzzyMorphism::from_indices(B, cls.omega, std::move(comp));
}

Subobject pullback_true(const Classifier& cls, const FuzzyMorphism& candidate) {
  require(*candidate.dst() == *cls.omega, "ObjectMismatch",
          "candidate must land in the classifier");
  const FP& B = candidate.src();
  const FiniteCategory& C = B->base();
  std::vector<std::vector<int>> elems(C.object_count()), memb(C.object_count());
  for (int i = 0; i < C.object_count(); ++i) {
    int maximal = cls.maximal_index(i);
    for (int x = 0; x < B->size(i); ++x)
      if (candidate.apply(i, x) == maximal) {
        elems[i].push_back(x);
        memb[i].push_back(B->membership(i, x));
      }
  }
  return make_subobject(B, std::move(elems), std::move(memb));
}

int count_classifying_maps(const Classifier& cls, const Subobject& sub, EnumBudget& budget) {
  const FP& B = sub.ambient;
  auto maps = enumerate_natural_transformations(B->shape(), cls.omega->shape(), budget);
  int hits = 0;
  for (auto& comp : maps) {
    FuzzyMorphism nu = FuzzyMorphism::from_indices(B, cls.omega, std::move(comp));
    if (subobject_eq(pullback_true(cls, nu), sub)) ++hits;
  }
  return hits;
}

}  // namespace quasikit
