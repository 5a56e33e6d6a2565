#include "quasikit/exponential.hpp"

#include <algorithm>
#include <map>

namespace quasikit {

namespace {

// "[E:b0,b1;V:b2]" in carrier order; carriers are canonical, so the listing
// of images alone pins the transformation down.
std::string transform_name(const FiniteCategory& C, const Presheaf& prod, const FP& B,
                           const std::vector<std::vector<int>>& table) {
  std::string out = "[";
  bool first_obj = true;
  for (int j = 0; j < C.object_count(); ++j) {
    if (prod.size(j) == 0) continue;
    if (!first_obj) out += ";";
    first_obj = false;
    out += C.object_name(j) + ":";
    for (int e = 0; e < prod.size(j); ++e) {
      if (e) out += ",";
      out += B->element_name(j, table[j][e]);
    }
  }
  return out + "]";
}

}  // namespace

int ExponentialObject::pair_index(int i, int j, int sigma, int a) const {
  int y = hom_pos_.at(i).at(j).at(sigma);
  require(y >= 0, "CompositionGap", "arrow is not a member of the relevant hom-set");
  return pair_at_.at(i).at(j).at(y).at(a);
}

int ExponentialObject::find_transform(int i, const std::vector<std::vector<int>>& table) const {
  const auto& list = transforms_.at(i);
  for (size_t k = 0; k < list.size(); ++k)
    if (list[k] == table) return static_cast<int>(k);
  fail("NotNatural", "component table is not a natural transformation in the exponential");
}

ExponentialObject ExponentialObject::build(FP A, FP B, EnumBudget& budget) {
  require(A->base().equivalent(B->base()), "ObjectMismatch",
          "exponential needs a shared base category");
  require(A->labels().compatible(B->labels()), "LabelMismatch",
          "exponential needs a shared label family");
  const FiniteCategory& C = A->base();
  const int nobj = C.object_count();

  ExponentialObject exp;
  exp.A_ = A;
  exp.B_ = B;
  exp.transforms_.resize(nobj);
  exp.hom_pos_.resize(nobj);
  exp.pair_at_.resize(nobj);

  struct PerObject {
    Presheaf prod;                        // y(i) x A
    std::vector<std::string> names;      // canonical transform names, sorted
    std::vector<int> order;              // names index -> raw transform index
  };
  std::vector<PerObject> per(nobj);
  std::vector<std::vector<std::vector<std::vector<int>>>> raw(nobj);

  for (int i = 0; i < nobj; ++i) {
    Presheaf yi = yoneda(A->base_ptr(), i);
    // positions of morphisms inside y(i)(j)
    exp.hom_pos_[i].assign(nobj, std::vector<int>(C.morphism_count(), -1));
    for (int j = 0; j < nobj; ++j) {
      auto hom = C.hom(i, j);
      for (size_t k = 0; k < hom.size(); ++k) exp.hom_pos_[i][j][hom[k]] = static_cast<int>(k);
    }
    std::vector<std::pair<int, int>> flat_pairs;
    per[i].prod = presheaf_product(yi, A->shape(), &flat_pairs);
    exp.pair_at_[i].resize(nobj);
    size_t pos = 0;
    for (int j = 0; j < nobj; ++j) {
      exp.pair_at_[i][j].assign(yi.size(j), std::vector<int>(A->size(j), -1));
      for (int e = 0; e < per[i].prod.size(j); ++e, ++pos)
        exp.pair_at_[i][j][flat_pairs[pos].first][flat_pairs[pos].second] = e;
    }
    raw[i] = enumerate_natural_transformations(per[i].prod, B->shape(), budget);

    per[i].order.resize(raw[i].size());
    std::vector<std::pair<std::string, int>> named;
    for (size_t k = 0; k < raw[i].size(); ++k)
      named.push_back({transform_name(C, per[i].prod, B, raw[i][k]), static_cast<int>(k)});
    std::sort(named.begin(), named.end());
    for (size_t k = 1; k < named.size(); ++k)
      require(named[k].first != named[k - 1].first, "NotNatural",
              "transform names collide");
    per[i].names.clear();
    for (size_t k = 0; k < named.size(); ++k) {
      per[i].names.push_back(named[k].first);
      per[i].order[k] = named[k].second;
    }
    exp.transforms_[i].clear();
    for (size_t k = 0; k < named.size(); ++k)
      exp.transforms_[i].push_back(raw[i][per[i].order[k]]);
  }

  PresheafBuilder bld(A->base_ptr());
  for (int i = 0; i < nobj; ++i)
    for (const auto& nm : per[i].names) bld.add_element(i, nm);

  // X(sigma : i -> j)(m) = m . (y(sigma) x id_A):
  // component at k on (kappa : j -> k, a) is m_k(kappa . sigma, a)
  for (int sigma = 0; sigma < C.morphism_count(); ++sigma) {
    int i = C.dom(sigma), j = C.cod(sigma);
    for (size_t k = 0; k < exp.transforms_[i].size(); ++k) {
      const auto& m = exp.transforms_[i][k];
      std::vector<std::vector<int>> target(nobj);
      for (int kk = 0; kk < nobj; ++kk) {
        target[kk].resize(per[j].prod.size(kk));
        auto homjk = C.hom(j, kk);
        for (size_t y = 0; y < homjk.size(); ++y)
          for (int a = 0; a < A->size(kk); ++a) {
            int composite = C.compose(homjk[y], sigma);
            target[kk][exp.pair_at_[j][kk][y][a]] =
                m[kk][exp.pair_at_[i][kk][exp.hom_pos_[i][kk][composite]][a]];
          }
      }
      bld.set_action(sigma, static_cast<int>(k), exp.find_transform(j, target));
    }
  }

  // theta_i(m) = meet over a in A(i) of alpha_i(a) => beta_i(m_i(id_i, a))
  std::vector<std::vector<int>> memb(nobj);
  for (int i = 0; i < nobj; ++i) {
    const HeytingAlgebra& L = A->labels().at(i);
    int id_pos = exp.hom_pos_[i][i][C.identity(i)];
    for (const auto& m : exp.transforms_[i]) {
      int v = L.top();
      for (int a = 0; a < A->size(i); ++a)
        v = L.meet(v, L.imp(A->membership(i, a),
                            B->membership(i, m[i][exp.pair_at_[i][i][id_pos][a]])));
      memb[i].push_back(v);
    }
  }

  std::vector<LatticePtr> fam;
  for (int o = 0; o < nobj; ++o) fam.push_back(A->labels().ptr(o));
  exp.object_ = make_fp(FuzzyPresheaf::from_indices(std::move(bld).finish(),
                                                    LabelFamily(fam), std::move(memb)));
  return exp;
}

FuzzyMorphism curry(const ExponentialObject& exp, const FuzzyMorphism& h, const FP& Cfp) {
  const FP& A = exp.operand();
  ConeResult prod = binary_product(Cfp, A);
  require(*h.src() == *prod.object, "ShapeMismatch",
          "curry expects a morphism out of the product C x A");
  require(*h.dst() == *exp.target(), "ShapeMismatch",
          "curry expects a morphism into the exponential's target");

  const FiniteCategory& Cat = Cfp->base();
  const int nobj = Cat.object_count();
  // pair index table of C x A
  std::vector<std::vector<std::vector<int>>> at(nobj);
  for (int o = 0; o < nobj; ++o) {
    at[o].assign(Cfp->size(o), std::vector<int>(A->size(o), -1));
    for (int e = 0; e < prod.object->size(o); ++e)
      at[o][prod.legs[0].apply(o, e)][prod.legs[1].apply(o, e)] = e;
  }

  std::vector<std::vector<int>> comp(nobj);
  for (int i = 0; i < nobj; ++i) {
    comp[i].resize(Cfp->size(i));
    for (int c = 0; c < Cfp->size(i); ++c) {
      std::vector<std::vector<int>> table(nobj);
      for (int j = 0; j < nobj; ++j) {
        auto homij = Cat.hom(i, j);
        table[j].assign(static_cast<size_t>(homij.size()) * A->size(j), -1);
        for (size_t y = 0; y < homij.size(); ++y)
          for (int a = 0; a < A->size(j); ++a)
            table[j][exp.pair_index(i, j, homij[y], a)] =
                h.apply(j, at[j][Cfp->shape().apply(homij[y], c)][a]);
      }
      comp[i][c] = exp.find_transform(i, table);
    }
  }
  return FuzzyMorphism::from_indices(Cfp, exp.object(), std::move(comp));
}

FuzzyMorphism uncurry(const ExponentialObject& exp, const FuzzyMorphism& k) {
  require(*k.dst() == *exp.object(), "ShapeMismatch",
          "uncurry expects a morphism into the exponential");
  const FP& Cfp = k.src();
  const FP& A = exp.operand();
  ConeResult prod = binary_product(Cfp, A);
  const FiniteCategory& Cat = Cfp->base();
  const int nobj = Cat.object_count();

  std::vector<std::vector<int>> comp(nobj);
  for (int i = 0; i < nobj; ++i) {
    comp[i].resize(prod.object->size(i));
    for (int e = 0; e < prod.object->size(i); ++e) {
      int c = prod.legs[0].apply(i, e), a = prod.legs[1].apply(i, e);
      const auto& table = exp.transform(i, k.apply(i, c));
      comp[i][e] = table[i][exp.pair_index(i, i, Cat.identity(i), a)];
    }
  }
  return FuzzyMorphism::from_indices(prod.object, exp.target(), std::move(comp));
}

FuzzyMorphism eval_morphism(const ExponentialObject& exp) {
  return uncurry(exp, FuzzyMorphism::identity(exp.object()));
}

FuzzyMorphism exponential_on_morphism(const ExponentialObject& expB,
                                      const ExponentialObject& expBp,
                                      const FuzzyMorphism& g) {
  require(*g.src() == *expB.target() && *g.dst() == *expBp.target(), "ShapeMismatch",
          "postcomposition morphism must map between the exponents' targets");
  const FiniteCategory& C = g.src()->base();
  const int nobj = C.object_count();
  std::vector<std::vector<int>> comp(nobj);
  for (int i = 0; i < nobj; ++i) {
    comp[i].resize(expB.object()->size(i));
    for (int k = 0; k < expB.object()->size(i); ++k) {
      std::vector<std::vector<int>> table = expB.transform(i, k);
      for (int j = 0; j < nobj; ++j)
        for (auto& v : table[j]) v = g.apply(j, v);
      comp[i][k] = expBp.find_transform(i, table);
    }
  }
  return FuzzyMorphism::from_indices(expB.object(), expBp.object(), std::move(comp));
}

}  // namespace quasikit
