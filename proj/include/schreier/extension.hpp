// Schreier extensions of monoids: representative sets B_m, the retraction
// q with x = k(q(x)) + u_{f(x)}, the Schreier predicate, morphisms of
// extensions, cokernel checking and the standard constructions.

#ifndef SCHREIER_EXTENSION_HPP_
#define SCHREIER_EXTENSION_HPP_

#include <memory>
#include <mutex>

#include "schreier/congruence.hpp"
#include "schreier/monoid.hpp"

namespace schreier {

struct SchreierData {
  std::vector<std::vector<Elt>> reps;  // reps[m] = B_m, sorted
  std::vector<Elt> base_rep;           // u_m; base_rep[0] == 0
  std::vector<Elt> q;                  // q[x]: the unique a with x = k(a)+u_{f(x)}
};

class Extension {
 public:
  // k : K -> X injective, f : X -> M surjective, image of k = f^{-1}(0).
  Extension(Hom k, Hom f)
      : k_(std::move(k)),
        f_(std::move(f)),
        cache_(std::make_shared<Cache>()) {
    if (!(k_.cod == f_.dom))
      throw AlgebraError(Err::BadParams, "k codomain must be f domain");
    if (!k_.injective())
      throw AlgebraError(Err::NotInjective, "kernel map is not injective");
    if (!f_.surjective())
      throw AlgebraError(Err::NotSurjective, "projection is not surjective");
    std::vector<bool> in_image(X().order(), false);
    for (Elt a = 0; a < K().order(); ++a) in_image[k_(a)] = true;
    for (Elt x = 0; x < X().order(); ++x)
      if (in_image[x] != (f_(x) == 0))
        throw AlgebraError(Err::NotKernel,
                           "image of k is not exactly the fibre over 1", {x});
  }

  const FiniteMonoid& K() const { return k_.dom; }
  const FiniteMonoid& X() const { return k_.cod; }
  const FiniteMonoid& M() const { return f_.cod; }
  const Hom& k() const { return k_; }
  const Hom& f() const { return f_; }

  std::vector<Elt> fibre(Elt m) const {
    std::vector<Elt> fb;
    for (Elt x = 0; x < X().order(); ++x)
      if (f_(x) == m) fb.push_back(x);
    return fb;
  }

  // B_m, computed from scratch by testing unique solvability per element.
  std::vector<Elt> representatives(Elt m) const {
    auto fb = fibre(m);
    std::vector<Elt> bm;
    for (Elt u : fb) {
      bool ok = true;
      for (Elt x : fb) {
        int cnt = 0;
        for (Elt a = 0; a < K().order(); ++a)
          if (X().op(k_(a), u) == x) ++cnt;
        if (cnt != 1) {
          ok = false;
          break;
        }
      }
      if (ok) bm.push_back(u);
    }
    return bm;
  }

  bool is_schreier() const { return try_schreier() != nullptr; }

  // nullptr when some fibre has no representative; the first offending
  // fibre (in element order) is then reported by not_schreier_fibre().
  const SchreierData* try_schreier() const {
    std::call_once(cache_->once, [this] { compute(); });
    return cache_->data ? &*cache_->data : nullptr;
  }

  const SchreierData& schreier() const {
    const SchreierData* d = try_schreier();
    if (!d)
      throw AlgebraError(Err::NotSchreier, "extension is not Schreier",
                         {not_schreier_fibre()});
    return *d;
  }

  int not_schreier_fibre() const {
    std::call_once(cache_->once, [this] { compute(); });
    return cache_->witness;
  }

  friend bool operator==(const Extension& a, const Extension& b) {
    return a.k_ == b.k_ && a.f_ == b.f_;
  }

 private:
  friend struct CorpusFaultInjector;

  struct Cache {
    std::once_flag once;
    std::optional<SchreierData> data;
    int witness = -1;
  };

  void compute() const {
    SchreierData d;
    d.reps.resize(M().order());
    d.base_rep.assign(M().order(), -1);
    for (Elt m = 0; m < M().order(); ++m) {
      d.reps[m] = representatives(m);
      if (d.reps[m].empty()) {
        cache_->witness = m;
        return;
      }
      d.base_rep[m] = (m == 0) ? 0 : d.reps[m][0];
    }
    d.q.assign(X().order(), -1);
    for (Elt x = 0; x < X().order(); ++x) {
      Elt u = d.base_rep[f_(x)];
      for (Elt a = 0; a < K().order(); ++a)
        if (X().op(k_(a), u) == x) {
          d.q[x] = a;
          break;
        }
    }
    cache_->data = std::move(d);
  }

  Hom k_, f_;
  std::shared_ptr<Cache> cache_;
};

inline Extension make_extension(Hom k, Hom f) {
  return Extension(std::move(k), std::move(f));
}

inline Elt retraction_q(const Extension& e, Elt x) { return e.schreier().q[x]; }

// The unique a with x = k(a) + u, for u a representative of f(x).
inline Elt rep_retraction(const Extension& e, Elt u, Elt x) {
  int found = -1;
  for (Elt a = 0; a < e.K().order(); ++a)
    if (e.X().op(e.k()(a), u) == x) {
      if (found >= 0)
        throw AlgebraError(Err::RetractionNotUnique,
                           "two decompositions over the same representative",
                           {u, x});
      found = a;
    }
  if (found < 0)
    throw AlgebraError(Err::NoRetraction, "no decomposition", {u, x});
  return found;
}

// ---------------------------------------------------------------------------
// Morphisms of Schreier extensions over a fixed base M (alpha3 = id)

struct ExtMorphism {
  Extension src, dst;
  Hom alpha1;  // K -> K'
  Hom alpha2;  // X -> X'

  friend bool operator==(const ExtMorphism& a, const ExtMorphism& b) {
    return a.src == b.src && a.dst == b.dst && a.alpha1.map == b.alpha1.map &&
           a.alpha2.map == b.alpha2.map;
  }
};

// Validates the two squares and representative preservation.  Only base
// representatives are tested; the rest follow since any two representatives
// of the same m differ by a unit.
inline ExtMorphism make_ext_morphism(const Extension& src, const Extension& dst,
                                     Hom alpha1, Hom alpha2) {
  if (!(src.M() == dst.M()))
    throw AlgebraError(Err::BadParams, "extensions have different bases");
  if (!(alpha1.dom == src.K()) || !(alpha1.cod == dst.K()) ||
      !(alpha2.dom == src.X()) || !(alpha2.cod == dst.X()))
    throw AlgebraError(Err::BadParams, "morphism component domain mismatch");
  for (Elt a = 0; a < src.K().order(); ++a)
    if (dst.k()(alpha1(a)) != alpha2(src.k()(a)))
      throw AlgebraError(Err::SquareFails, "square (a) does not commute", {a});
  for (Elt x = 0; x < src.X().order(); ++x)
    if (dst.f()(alpha2(x)) != src.f()(x))
      throw AlgebraError(Err::SquareFails, "square (b) does not commute", {x});
  const auto& sd = src.schreier();
  const auto& dd = dst.schreier();
  for (Elt m = 0; m < src.M().order(); ++m) {
    Elt im = alpha2(sd.base_rep[m]);
    if (!std::binary_search(dd.reps[m].begin(), dd.reps[m].end(), im))
      throw AlgebraError(Err::RepsNotPreserved,
                         "representative not mapped to a representative", {m});
  }
  return ExtMorphism{src, dst, std::move(alpha1), std::move(alpha2)};
}

inline ExtMorphism identity_morphism(const Extension& e) {
  return make_ext_morphism(e, e, identity_hom(e.K()), identity_hom(e.X()));
}

inline ExtMorphism compose(const ExtMorphism& g, const ExtMorphism& f) {
  if (!(f.dst == g.src))
    throw AlgebraError(Err::BadParams, "morphism composition mismatch");
  return make_ext_morphism(f.src, g.dst, compose(g.alpha1, f.alpha1),
                           compose(g.alpha2, f.alpha2));
}

inline bool is_iso_morphism(const ExtMorphism& m) {
  return m.alpha1.bijective() && m.alpha2.bijective();
}

inline ExtMorphism invert_iso(const ExtMorphism& m) {
  return make_ext_morphism(m.dst, m.src, invert_iso(m.alpha1),
                           invert_iso(m.alpha2));
}

// All morphisms src -> dst, lexicographic in (alpha1, alpha2) tables.
// alpha2 is searched fibrewise: candidates for x are restricted to the
// fibre over f(x), with the kernel part forced by alpha1.  When
// `fixed_alpha1` is given only morphisms with that kernel part are listed.
inline std::vector<ExtMorphism> enumerate_ext_morphisms(
    const Extension& src, const Extension& dst,
    std::size_t limit = static_cast<std::size_t>(-1),
    const std::optional<Hom>& fixed_alpha1 = std::nullopt) {
  std::vector<ExtMorphism> out;
  if (!(src.M() == dst.M())) return out;
  const auto& sd = src.schreier();
  const auto& dd = dst.schreier();
  int nx = src.X().order();

  std::vector<Hom> alpha1s = fixed_alpha1
                                 ? std::vector<Hom>{*fixed_alpha1}
                                 : enumerate_homs(src.K(), dst.K());
  for (const Hom& a1 : alpha1s) {
    std::vector<Elt> img(nx, -1);
    for (Elt a = 0; a < src.K().order(); ++a) img[src.k()(a)] = dst.k()(a1(a));
    // kernel images must be consistent when fibres overlap the kernel
    bool base_ok = true;
    std::vector<std::vector<Elt>> cand(nx);
    for (Elt x = 0; x < nx && base_ok; ++x) {
      if (img[x] >= 0) {
        cand[x] = {img[x]};
        continue;
      }
      bool is_base_rep = sd.base_rep[src.f()(x)] == x;
      for (Elt y = 0; y < dst.X().order(); ++y) {
        if (dst.f()(y) != src.f()(x)) continue;
        if (is_base_rep &&
            !std::binary_search(dd.reps[src.f()(x)].begin(),
                                dd.reps[src.f()(x)].end(), y))
          continue;
        cand[x].push_back(y);
      }
      if (cand[x].empty()) base_ok = false;
    }
    if (!base_ok) continue;

    std::vector<Elt> cur(nx, -1);
    auto consistent = [&](int upto) {
      for (Elt a = 0; a <= upto; ++a)
        for (Elt b = 0; b <= upto; ++b) {
          Elt ab = src.X().op(a, b);
          if (ab <= upto && cur[ab] != dst.X().op(cur[a], cur[b])) return false;
        }
      return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
      if (out.size() >= limit) return true;
      if (i == nx) {
        out.push_back(ExtMorphism{src, dst, a1, Hom{src.X(), dst.X(), cur}});
        return out.size() >= limit;
      }
      for (Elt v : cand[i]) {
        cur[i] = v;
        if (consistent(i) && self(self, i + 1)) return true;
      }
      cur[i] = -1;
      return false;
    };
    cur[0] = 0;
    if (rec(rec, 1)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cokernel property and standard constructions

// True iff X / <(k(a),0)> is isomorphic to M via the map induced by f.
// Holds for every Schreier extension.
inline bool cokernel_check(const Extension& e) {
  std::vector<std::pair<Elt, Elt>> gens;
  for (Elt a = 0; a < e.K().order(); ++a) gens.emplace_back(e.k()(a), 0);
  Congruence c = congruence_closure(e.X(), gens);
  if (c.num_classes != e.M().order()) return false;
  // the induced map class -> f(representative) must be a well-defined
  // bijective homomorphism
  std::vector<Elt> to_m(c.num_classes, -1);
  for (Elt x = 0; x < e.X().order(); ++x) {
    int cl = c.class_of[x];
    if (to_m[cl] < 0)
      to_m[cl] = e.f()(x);
    else if (to_m[cl] != e.f()(x))
      return false;
  }
  std::vector<bool> hit(e.M().order(), false);
  for (Elt v : to_m) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  Quotient q = quotient_by(e.X(), c);
  return is_hom_table(q.mon, e.M(), to_m);
}

inline FiniteMonoid trivial_monoid() { return FiniteMonoid(); }

// 0 >--> M == M
inline Extension trivial_right_extension(const FiniteMonoid& M) {
  Hom k{trivial_monoid(), M, {0}};
  return Extension(std::move(k), identity_hom(M));
}

// M == M -->> 0
inline Extension trivial_left_extension(const FiniteMonoid& M) {
  Hom f{M, trivial_monoid(), std::vector<Elt>(M.order(), 0)};
  return Extension(identity_hom(M), std::move(f));
}

// K >--> K x M -->> M
inline Extension product_extension(const FiniteMonoid& K,
                                   const FiniteMonoid& M) {
  auto prod = product(K, M);
  std::vector<Elt> kmap(K.order());
  for (Elt a = 0; a < K.order(); ++a) kmap[a] = prod.pair(a, 0);
  Hom k{K, prod.mon, std::move(kmap)};
  return Extension(std::move(k), prod.p2);
}

// Ker(f) >--> X -->> M for a surjection f out of a group.
inline Extension group_extension(const Hom& f) {
  if (!f.dom.is_group())
    throw AlgebraError(Err::BadParams, "group_extension needs a group domain");
  auto ko = kernel_objects(f);
  return Extension(ko.kernel.incl, f);
}

}  // namespace schreier

#endif  // SCHREIER_EXTENSION_HPP_
