// Deterministic corpus of small monoids, Schreier extensions with
// commutative kernels (in crossed-product normal form over enumerated
// semimodule actions), and morphism samples; the input to the
// statement-check harness.

#ifndef SCHREIER_CORPUS_HPP_
#define SCHREIER_CORPUS_HPP_

#include "schreier/cofib.hpp"
#include "schreier/direction.hpp"

namespace schreier {

// All endomorphism tables of K, identity first, then lexicographic.
inline std::vector<std::vector<Elt>> endomorphisms(const FiniteMonoid& K) {
  std::vector<std::vector<Elt>> out;
  out.push_back(identity_hom(K).map);
  for (const Hom& h : enumerate_homs(K, K))
    if (h.map != out[0]) out.push_back(h.map);
  return out;
}

// End(K) as a monoid under composition (left factor applied last), with
// the identity endomorphism as element 0.
inline FiniteMonoid end_monoid(const FiniteMonoid& K,
                               std::vector<std::vector<Elt>>* ends_out) {
  auto ends = endomorphisms(K);
  int n = static_cast<int>(ends.size());
  auto find = [&](const std::vector<Elt>& t) {
    for (int i = 0; i < n; ++i)
      if (ends[i] == t) return i;
    throw AlgebraError(Err::NotWellDefined, "composite is not an endo");
  };
  std::vector<Elt> tab(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Elt> comp(K.order());
      for (Elt a = 0; a < K.order(); ++a) comp[a] = ends[i][ends[j][a]];
      tab[i * n + j] = find(comp);
    }
  if (ends_out) *ends_out = std::move(ends);
  return FiniteMonoid::from_flat(n, std::move(tab));
}

// All semimodule structures (actions of M on K), via homs M -> End(K),
// in lexicographic order; the trivial action comes first when it is the
// lexicographically least, which holds with the identity endo at index 0.
inline std::vector<Semimodule> enumerate_actions(const FiniteMonoid& M,
                                                 const FiniteMonoid& K) {
  std::vector<std::vector<Elt>> ends;
  auto endk = end_monoid(K, &ends);
  std::vector<Semimodule> out;
  for (const Hom& h : enumerate_homs(M, endk)) {
    std::vector<std::vector<Elt>> act(M.order());
    for (Elt m = 0; m < M.order(); ++m) act[m] = ends[h(m)];
    out.push_back(make_semimodule(M, K, std::move(act)));
  }
  return out;
}

// Isomorphism in SExt_M: some pair (alpha1, alpha2) of bijective
// homomorphisms commuting with the structure maps.
inline bool ext_isomorphic(const Extension& a, const Extension& b) {
  if (!(a.M() == b.M()) || a.X().order() != b.X().order() ||
      a.K().order() != b.K().order())
    return false;
  for (const Hom& h : enumerate_homs(a.K(), b.K())) {
    if (!h.bijective()) continue;
    if (!enumerate_ext_morphisms(a, b, 1, h).empty()) return true;
  }
  return false;
}

// Every Schreier extension of M by a commutative K inducing a semimodule
// is isomorphic to a crossed product; enumerate them.
inline std::vector<Extension> enumerate_extensions_over(
    const FiniteMonoid& K, const FiniteMonoid& M) {
  std::vector<Extension> out;
  for (const auto& s : enumerate_actions(M, K))
    for (const auto& fs : enumerate_factor_systems(s))
      out.push_back(crossed_product(fs));
  return out;
}

// Compact morphism sample; alpha1/alpha2 are validated homomorphism tables
// between the indexed extensions.
struct MorphSample {
  int src, dst;
  std::vector<Elt> a1, a2;
};

struct Corpus {
  int max_order = 5;
  int max_carrier = 8;
  std::vector<FiniteMonoid> monoids;  // canonical, all orders <= max_order
  std::vector<Extension> extensions;  // grouped by base, deduped
  std::vector<MorphSample> morphisms;
  std::string injected_fault;  // empty when pristine
};

inline ExtMorphism materialize(const Corpus& c, const MorphSample& m) {
  const Extension& s = c.extensions[m.src];
  const Extension& d = c.extensions[m.dst];
  return make_ext_morphism(s, d, Hom{s.K(), d.K(), m.a1},
                           Hom{s.X(), d.X(), m.a2});
}

inline Corpus build_corpus(int max_order = 5, int max_carrier = 8,
                           int morphisms_per_pair = 6) {
  if (max_order < 1 || max_order > 6 || max_carrier < 1 || max_carrier > 16)
    throw AlgebraError(Err::BoundExceeded, "corpus bounds out of range");
  Corpus c;
  c.max_order = max_order;
  c.max_carrier = max_carrier;

  std::vector<std::vector<FiniteMonoid>> by_order(max_order + 1);
  for (int n = 1; n <= max_order; ++n) {
    by_order[n] = enumerate_monoids(n, 6);
    for (const auto& m : by_order[n]) c.monoids.push_back(m);
  }

  for (int nm = 1; nm <= max_order; ++nm)
    for (const auto& M : by_order[nm])
      for (int nk = 1; nk <= max_order && nk * nm <= max_carrier; ++nk)
        for (const auto& K : by_order[nk]) {
          if (!K.is_commutative()) continue;
          std::vector<Extension> bucket;
          for (auto& e : enumerate_extensions_over(K, M)) {
            bool dup = false;
            for (const auto& seen : bucket)
              if (ext_isomorphic(e, seen)) {
                dup = true;
                break;
              }
            if (!dup) bucket.push_back(std::move(e));
          }
          for (auto& e : bucket) c.extensions.push_back(std::move(e));
        }

  for (std::size_t i = 0; i < c.extensions.size(); ++i)
    for (std::size_t j = 0; j < c.extensions.size(); ++j) {
      if (!(c.extensions[i].M() == c.extensions[j].M())) continue;
      for (auto& m : enumerate_ext_morphisms(c.extensions[i], c.extensions[j],
                                             morphisms_per_pair))
        c.morphisms.push_back(MorphSample{static_cast<int>(i),
                                          static_cast<int>(j),
                                          std::move(m.alpha1.map),
                                          std::move(m.alpha2.map)});
    }
  return c;
}

// Deliberately corrupts cached Schreier data so that the harness reports a
// named failure; used by the negative-control fixtures and the CLI flag.
struct CorpusFaultInjector {
  static void corrupt_q(Extension& e) {
    e.try_schreier();
    auto& data = e.cache_->data;
    if (!data) return;
    for (Elt x = 0; x < e.X().order(); ++x)
      if (e.K().order() >= 2) {
        data->q[x] = (data->q[x] + 1) % e.K().order();
        return;
      }
  }
};

inline void inject_fault(Corpus& c, const std::string& kind) {
  if (kind != "qtable")
    throw AlgebraError(Err::BadParams, "unknown fault kind: " + kind);
  for (auto& e : c.extensions)
    if (e.K().order() >= 2) {
      CorpusFaultInjector::corrupt_q(e);
      c.injected_fault = kind;
      return;
    }
  throw AlgebraError(Err::BadParams, "no extension eligible for fault");
}

// ---------------------------------------------------------------------------
// Open-question searches (reported by the census, asserted by nothing)

// Schreier extensions with commutative kernel whose induced pre-action
// fails A4: enumerate general tables on K x M built from arbitrary
// per-element endomorphism families (phi_1 = id) and normalized factor
// tables, keep the associative ones, and test A4.
inline std::vector<Extension> search_a4_failures(const FiniteMonoid& K,
                                                 const FiniteMonoid& M) {
  int nk = K.order(), nm = M.order(), n = nk * nm;
  auto ends = endomorphisms(K);
  std::vector<Extension> out;
  std::vector<int> phi(nm, 0);
  std::vector<std::vector<Elt>> g(nm, std::vector<Elt>(nm, 0));
  std::vector<std::pair<Elt, Elt>> gcells;
  for (Elt m = 1; m < nm; ++m)
    for (Elt m2 = 1; m2 < nm; ++m2) gcells.emplace_back(m, m2);

  auto emit = [&]() {
    std::vector<Elt> tab(n * n);
    for (Elt u = 0; u < n; ++u)
      for (Elt v = 0; v < n; ++v) {
        Elt a = u / nm, m = u % nm, b = v / nm, m2 = v % nm;
        tab[u * n + v] =
            K.op(K.op(a, ends[phi[m]][b]), g[m][m2]) * nm + M.op(m, m2);
      }
    try {
      auto X = FiniteMonoid::from_flat(n, std::move(tab));
      std::vector<Elt> kmap(nk), fmap(n);
      for (Elt a = 0; a < nk; ++a) kmap[a] = a * nm;
      for (Elt u = 0; u < n; ++u) fmap[u] = u % nm;
      if (!is_hom_table(X, M, fmap)) return;
      Extension e(make_hom(K, X, std::move(kmap)),
                  make_hom(X, M, std::move(fmap)));
      if (!induces_semimodule(e)) out.push_back(std::move(e));
    } catch (const AlgebraError&) {
    }
  };
  auto grec = [&](auto&& self, std::size_t i) -> void {
    if (i == gcells.size()) {
      emit();
      return;
    }
    for (Elt v = 0; v < nk; ++v) {
      g[gcells[i].first][gcells[i].second] = v;
      self(self, i + 1);
    }
    g[gcells[i].first][gcells[i].second] = 0;
  };
  auto prec = [&](auto&& self, Elt m) -> void {
    if (m == nm) {
      grec(grec, 0);
      return;
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      phi[m] = static_cast<int>(i);
      self(self, m + 1);
    }
    phi[m] = 0;
  };
  prec(prec, 1);
  return out;
}

// Surjections f : X ->> M that are normal epimorphisms (cokernels of their
// kernels) without being Schreier.  No finite example is known; the census
// reports whatever this finds.
inline std::vector<Extension> search_normal_non_schreier(
    const std::vector<FiniteMonoid>& monoids, int max_carrier) {
  std::vector<Extension> out;
  for (const auto& X : monoids) {
    if (X.order() > max_carrier) continue;
    for (const auto& M : monoids) {
      if (M.order() > X.order()) continue;
      for (const Hom& f : enumerate_homs(X, M, true)) {
        std::vector<Elt> ker;
        for (Elt x = 0; x < X.order(); ++x)
          if (f(x) == 0) ker.push_back(x);
        auto sub = submonoid(X, ker);
        Extension e(sub.incl, f);
        if (e.is_schreier()) continue;
        if (cokernel_check(e)) out.push_back(std::move(e));
      }
    }
  }
  return out;
}

}  // namespace schreier

#endif  // SCHREIER_CORPUS_HPP_
