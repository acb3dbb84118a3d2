// Pushforwards along semimodule maps (cocartesian lifts), products of
// extensions over a base, Baer sums, crossed products over factor systems,
// fibre classification and the resulting cohomology monoids.

#ifndef SCHREIER_COFIB_HPP_
#define SCHREIER_COFIB_HPP_

#include "schreier/action.hpp"

namespace schreier {

inline bool is_action_preserving(const Hom& h, const Semimodule& src,
                                 const Semimodule& dst) {
  if (!(h.dom == src.K) || !(h.cod == dst.K) || !(src.M == dst.M))
    return false;
  for (Elt m = 0; m < src.M.order(); ++m)
    for (Elt a = 0; a < src.K.order(); ++a)
      if (h(src.apply(m, a)) != dst.apply(m, h(a))) return false;
  return true;
}

// Extensions lying in the same fibre of the direction functor.
// A morphism whose kernel part is the identity is automatically an
// isomorphism by the Short Five Lemma.
inline bool fibre_isomorphic(const Extension& a, const Extension& b) {
  if (!(a.K() == b.K()) || !(a.M() == b.M()) ||
      a.X().order() != b.X().order())
    return false;
  return !enumerate_ext_morphisms(a, b, 1, identity_hom(a.K())).empty();
}

// ---------------------------------------------------------------------------
// Pushforward

struct PushforwardResult {
  Extension ext;       // the pushed-forward extension E'
  ExtMorphism cocart;  // the cocartesian morphism E -> E'
};

// Pushes E (inducing (K, eta)) forward along an action-preserving
// alpha1 : (K, eta) -> (K', eta').  The carrier is K' x_psi X modulo the
// relation rho identifying (a',x) with (b',y) when f(x) = f(y) and
// a' + alpha1(q(x)) = b' + alpha1(q(y)); rho is checked against the
// congruence generated by (alpha1(a), 0) ~ (0, k(a)).
inline PushforwardResult pushforward(const Extension& e, const Hom& alpha1,
                                     const Semimodule& target) {
  Semimodule src = to_semimodule(e);
  if (!(target.M == e.M()) || !(alpha1.dom == e.K()) ||
      !(alpha1.cod == target.K))
    throw AlgebraError(Err::BadParams, "pushforward target mismatch");
  if (!is_action_preserving(alpha1, src, target))
    throw AlgebraError(Err::NotActionPreserving,
                       "alpha1 does not preserve the action");

  const auto& X = e.X();
  const auto& Kp = target.K;
  int nx = X.order(), nk = Kp.order(), n = nk * nx;

  // K' x_psi X with psi(x) = eta'(f(x)); index = a' * |X| + x
  std::vector<Elt> tab(n * n);
  for (Elt u = 0; u < n; ++u)
    for (Elt v = 0; v < n; ++v) {
      Elt a = u / nx, x = u % nx, b = v / nx, y = v % nx;
      tab[u * n + v] =
          Kp.op(a, target.apply(e.f()(x), b)) * nx + X.op(x, y);
    }
  auto W = FiniteMonoid::from_flat(n, std::move(tab));

  // rho, from its direct description
  const auto& d = e.schreier();
  std::vector<int> cls(n, -1);
  {
    std::vector<std::pair<Elt, Elt>> key(n);  // (f(x), a' + alpha1(q(x)))
    for (Elt u = 0; u < n; ++u)
      key[u] = {e.f()(u % nx), Kp.op(u / nx, alpha1(d.q[u % nx]))};
    int next = 0;
    for (Elt u = 0; u < n; ++u) {
      if (cls[u] >= 0) continue;
      cls[u] = next;
      for (Elt v = u + 1; v < n; ++v)
        if (cls[v] < 0 && key[v] == key[u]) cls[v] = next;
      ++next;
    }
    Congruence rho{W, cls, next};
    std::vector<std::pair<Elt, Elt>> gens;
    for (Elt a = 0; a < e.K().order(); ++a)
      gens.emplace_back(alpha1(a) * nx + 0, 0 * nx + e.k()(a));
    Congruence generated = congruence_closure(W, gens);
    if (generated.class_of != rho.class_of)
      throw AlgebraError(Err::NotWellDefined,
                         "rho differs from the generated congruence");
    Quotient q = quotient_by(W, rho);

    std::vector<Elt> kmap(nk), fmap(q.mon.order(), -1), amap(nx);
    for (Elt a = 0; a < nk; ++a) kmap[a] = q.proj(a * nx);
    for (Elt u = 0; u < n; ++u) fmap[q.proj(u)] = e.f()(u % nx);
    for (Elt x = 0; x < nx; ++x) amap[x] = q.proj(x);
    Extension ep(make_hom(Kp, q.mon, std::move(kmap)),
                 make_hom(q.mon, e.M(), std::move(fmap)));
    ExtMorphism cocart = make_ext_morphism(
        e, ep, alpha1, make_hom(X, q.mon, std::move(amap)));

    // D(E') = (K', eta')
    if (!(to_semimodule(ep) == target))
      throw AlgebraError(Err::NotWellDefined,
                         "pushforward does not induce the target action");
    return PushforwardResult{std::move(ep), std::move(cocart)};
  }
}

// The unique beta with beta o alpha = lambda and kernel part beta1,
// beta([a',x]) = l(beta1(a')) + lambda(x).
inline ExtMorphism cocartesian_factorize(const PushforwardResult& pf,
                                         const ExtMorphism& lambda,
                                         const Hom& beta1) {
  const Extension& e = pf.cocart.src;
  const Extension& ep = pf.ext;
  const Extension& F = lambda.dst;
  if (!(lambda.src == e))
    throw AlgebraError(Err::BadParams, "lambda must start at the pushed E");
  if (compose(beta1, pf.cocart.alpha1).map != lambda.alpha1.map)
    throw AlgebraError(Err::FactorizationHypothesisFails,
                       "lambda_1 != beta_1 o alpha_1");
  if (!is_action_preserving(beta1, to_semimodule(ep), to_semimodule(F)))
    throw AlgebraError(Err::FactorizationHypothesisFails,
                       "beta_1 is not a map of semimodules");

  // every class of X' decomposes as k'(a') + alpha(x)
  int npx = ep.X().order();
  std::vector<Elt> bmap(npx, -1);
  for (Elt a = 0; a < ep.K().order(); ++a)
    for (Elt x = 0; x < e.X().order(); ++x) {
      Elt c = ep.X().op(ep.k()(a), pf.cocart.alpha2(x));
      Elt img = F.X().op(F.k()(beta1(a)), lambda.alpha2(x));
      if (bmap[c] >= 0 && bmap[c] != img)
        throw AlgebraError(Err::NotWellDefined, "beta not well defined",
                           {a, x});
      bmap[c] = img;
    }
  ExtMorphism beta =
      make_ext_morphism(ep, F, beta1, make_hom(ep.X(), F.X(), bmap));
  if (compose(beta.alpha2, pf.cocart.alpha2).map != lambda.alpha2.map)
    throw AlgebraError(Err::NotWellDefined, "beta o alpha != lambda");
  return beta;
}

// ---------------------------------------------------------------------------
// Products of extensions over the same base

struct ProductExt {
  Extension ext;  // K x K' >--> X x_M X' -->> M
  ExtMorphism pr1, pr2;
  ProductMonoid kernel_prod;
  PullbackMonoid carrier;
};

inline ProductExt product_ext(const Extension& a, const Extension& b) {
  if (!(a.M() == b.M()))
    throw AlgebraError(Err::BadParams, "extensions over different bases");
  auto carrier = pullback(a.f(), b.f());
  auto kprod = product(a.K(), b.K());
  std::vector<Elt> kmap(kprod.mon.order());
  for (Elt u = 0; u < kprod.mon.order(); ++u) {
    int idx = carrier.index(a.k()(kprod.p1(u)), b.k()(kprod.p2(u)));
    if (idx < 0)
      throw AlgebraError(Err::NotWellDefined, "kernel escapes the pullback");
    kmap[u] = idx;
  }
  Extension ext(make_hom(kprod.mon, carrier.mon, std::move(kmap)),
                compose(a.f(), carrier.p1));
  // paired representatives
  const auto& da = a.schreier();
  const auto& db = b.schreier();
  const auto& dp = ext.schreier();
  for (Elt m = 0; m < a.M().order(); ++m) {
    int u = carrier.index(da.base_rep[m], db.base_rep[m]);
    if (!std::binary_search(dp.reps[m].begin(), dp.reps[m].end(), u))
      throw AlgebraError(Err::NotWellDefined,
                         "paired representative is not a representative", {m});
  }
  ExtMorphism pr1 = make_ext_morphism(ext, a, kprod.p1, carrier.p1);
  ExtMorphism pr2 = make_ext_morphism(ext, b, kprod.p2, carrier.p2);
  return ProductExt{std::move(ext), std::move(pr1), std::move(pr2),
                    std::move(kprod), std::move(carrier)};
}

// ---------------------------------------------------------------------------
// Baer sum

// Pushforward of the product extension along the kernel addition
// (K x K, eta x eta) -> (K, eta).
inline Extension baer_sum(const Extension& a, const Extension& b) {
  Semimodule sa = to_semimodule(a), sb = to_semimodule(b);
  if (!(sa == sb))
    throw AlgebraError(Err::FibreMismatch,
                       "summands do not induce the same semimodule");
  auto prod = product_ext(a, b);
  int nk = sa.K.order();
  std::vector<Elt> add(nk * nk);
  for (Elt u = 0; u < nk * nk; ++u) add[u] = sa.K.op(u / nk, u % nk);
  Hom addition = make_hom(prod.kernel_prod.mon, sa.K, std::move(add));
  return pushforward(prod.ext, addition, sa).ext;
}

// ---------------------------------------------------------------------------
// Factor systems and crossed products

struct FactorSystem {
  Semimodule S;
  std::vector<std::vector<Elt>> g;  // g[m][m']

  Elt operator()(Elt m, Elt m2) const { return g[m][m2]; }
};

// The table of the crossed product K x M with
// (a,m) + (b,m') = (a + eta(m)(b) + g(m,m'), m.m'), index = a*|M| + m.
inline std::vector<Elt> crossed_product_table(
    const Semimodule& s, const std::vector<std::vector<Elt>>& g) {
  int nk = s.K.order(), nm = s.M.order(), n = nk * nm;
  std::vector<Elt> tab(n * n);
  for (Elt u = 0; u < n; ++u)
    for (Elt v = 0; v < n; ++v) {
      Elt a = u / nm, m = u % nm, b = v / nm, m2 = v % nm;
      tab[u * n + v] = s.K.op(s.K.op(a, s.apply(m, b)), g[m][m2]) * nm +
                       s.M.op(m, m2);
    }
  return tab;
}

inline FactorSystem make_factor_system(Semimodule s,
                                       std::vector<std::vector<Elt>> g) {
  int nk = s.K.order(), nm = s.M.order();
  if (static_cast<int>(g.size()) != nm)
    throw AlgebraError(Err::InvalidFactorSystem, "g has wrong shape");
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != nm)
      throw AlgebraError(Err::InvalidFactorSystem, "g has wrong shape");
    for (Elt v : row)
      if (v < 0 || v >= nk)
        throw AlgebraError(Err::InvalidFactorSystem, "g value out of range");
  }
  for (Elt m = 0; m < nm; ++m)
    if (g[0][m] != 0 || g[m][0] != 0)
      throw AlgebraError(Err::InvalidFactorSystem, "g is not normalized", {m});
  for (Elt m = 0; m < nm; ++m)
    for (Elt m2 = 0; m2 < nm; ++m2)
      for (Elt m3 = 0; m3 < nm; ++m3)
        if (s.K.op(s.apply(m, g[m2][m3]), g[m][s.M.op(m2, m3)]) !=
            s.K.op(g[m][m2], g[s.M.op(m, m2)][m3]))
          throw AlgebraError(Err::InvalidFactorSystem, "cocycle law fails",
                             {m, m2, m3});
  // compatibility: relevant only for non-cancellative kernels
  for (Elt m = 0; m < nm; ++m)
    for (Elt m2 = 0; m2 < nm; ++m2)
      for (Elt b = 0; b < nk; ++b)
        if (s.K.op(g[m][m2], s.apply(s.M.op(m, m2), b)) !=
            s.K.op(s.apply(m, s.apply(m2, b)), g[m][m2]))
          throw AlgebraError(Err::InvalidFactorSystem,
                             "compatibility fails", {m, m2, b});
  try {
    FiniteMonoid::from_flat(nk * nm, crossed_product_table(s, g));
  } catch (const AlgebraError& e) {
    throw AlgebraError(Err::InvalidFactorSystem,
                       "crossed product table is not a monoid", e.witness);
  }
  return FactorSystem{std::move(s), std::move(g)};
}

inline Extension crossed_product(const FactorSystem& fs) {
  const auto& s = fs.S;
  int nk = s.K.order(), nm = s.M.order(), n = nk * nm;
  auto X = FiniteMonoid::from_flat(n, crossed_product_table(s, fs.g));
  std::vector<Elt> kmap(nk), fmap(n);
  for (Elt a = 0; a < nk; ++a) kmap[a] = a * nm;
  for (Elt u = 0; u < n; ++u) fmap[u] = u % nm;
  Extension e(make_hom(s.K, X, std::move(kmap)),
              make_hom(X, s.M, std::move(fmap)));
  if (!(to_semimodule(e) == s))
    throw AlgebraError(Err::InvalidFactorSystem,
                       "crossed product does not induce its semimodule");
  return e;
}

inline FactorSystem zero_factor_system(const Semimodule& s) {
  return make_factor_system(
      s, std::vector<std::vector<Elt>>(s.M.order(),
                                       std::vector<Elt>(s.M.order(), 0)));
}

inline FactorSystem add_factor_systems(const FactorSystem& a,
                                       const FactorSystem& b) {
  if (!(a.S == b.S))
    throw AlgebraError(Err::FibreMismatch, "factor systems over different data");
  auto g = a.g;
  for (Elt m = 0; m < a.S.M.order(); ++m)
    for (Elt m2 = 0; m2 < a.S.M.order(); ++m2)
      g[m][m2] = a.S.K.op(g[m][m2], b.g[m][m2]);
  return make_factor_system(a.S, std::move(g));
}

// All valid factor systems over S, in lexicographic order of g tables.
inline std::vector<FactorSystem> enumerate_factor_systems(
    const Semimodule& s) {
  int nk = s.K.order(), nm = s.M.order();
  std::vector<std::pair<Elt, Elt>> free_cells;
  for (Elt m = 1; m < nm; ++m)
    for (Elt m2 = 1; m2 < nm; ++m2) free_cells.emplace_back(m, m2);
  std::vector<std::vector<Elt>> g(nm, std::vector<Elt>(nm, 0));
  std::vector<FactorSystem> out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == free_cells.size()) {
      try {
        out.push_back(make_factor_system(s, g));
      } catch (const AlgebraError&) {
      }
      return;
    }
    for (Elt v = 0; v < nk; ++v) {
      g[free_cells[i].first][free_cells[i].second] = v;
      self(self, i + 1);
    }
    g[free_cells[i].first][free_cells[i].second] = 0;
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Fibre classification

enum class ClassifyMode { factor_system, brute_force };

// All extensions in the fibre of S on the carrier K x M with prescribed
// kernel, projection, base representatives (0,m) and induced action S,
// found by backtracking over the undetermined table cells.
inline std::vector<Extension> brute_force_fibre(const Semimodule& s,
                                                int bound = 8) {
  int nk = s.K.order(), nm = s.M.order(), n = nk * nm;
  if (n > bound)
    throw AlgebraError(Err::BoundExceeded,
                       "carrier too large for brute force");
  std::vector<Elt> tab(n * n, -1);
  auto idx = [&](Elt a, Elt m) { return a * nm + m; };
  for (Elt u = 0; u < n; ++u) tab[u] = tab[u * n] = u;  // identity (0,1)
  for (Elt a = 0; a < nk; ++a)
    for (Elt b = 0; b < nk; ++b)
      tab[idx(a, 0) * n + idx(b, 0)] = idx(s.K.op(a, b), 0);  // k is a hom
  for (Elt a = 0; a < nk; ++a)
    for (Elt m = 0; m < nm; ++m) {
      tab[idx(a, 0) * n + idx(0, m)] = idx(a, m);  // (0,m) represents
      tab[idx(0, m) * n + idx(a, 0)] = idx(s.apply(m, a), m);  // the action
    }
  std::vector<int> cells;
  for (int c = 0; c < n * n; ++c)
    if (tab[c] < 0) cells.push_back(c);

  std::vector<Extension> out;
  auto emit = [&]() {
    auto X = FiniteMonoid::from_flat(n, tab);
    std::vector<Elt> kmap(nk), fmap(n);
    for (Elt a = 0; a < nk; ++a) kmap[a] = idx(a, 0);
    for (Elt u = 0; u < n; ++u) fmap[u] = u % nm;
    if (!is_hom_table(X, s.M, fmap)) return;
    Extension e(make_hom(s.K, X, std::move(kmap)),
                make_hom(X, s.M, std::move(fmap)));
    if (e.is_schreier() && to_semimodule(e) == s) out.push_back(std::move(e));
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      emit();
      return;
    }
    int c = cells[i], ci = c / n, cj = c % n;
    // the M component is forced by f being a homomorphism
    Elt m = s.M.op(ci % nm, cj % nm);
    for (Elt a = 0; a < nk; ++a) {
      tab[c] = idx(a, m);
      if (detail::partial_assoc_ok(tab, n, ci, cj)) self(self, i + 1);
    }
    tab[c] = -1;
  };
  rec(rec, 0);
  return out;
}

// Groups candidates into fibre-isomorphism classes; representatives are
// the first member in enumeration order.
inline std::vector<Extension> dedupe_fibre(std::vector<Extension> cands) {
  std::vector<Extension> classes;
  for (auto& e : cands) {
    bool seen = false;
    for (const auto& c : classes)
      if (fibre_isomorphic(e, c)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(std::move(e));
  }
  return classes;
}

inline std::vector<Extension> fiber_classify(const Semimodule& s,
                                             ClassifyMode mode,
                                             int bf_bound = 8,
                                             int fs_bound = 16) {
  int n = s.K.order() * s.M.order();
  if (mode == ClassifyMode::brute_force)
    return dedupe_fibre(brute_force_fibre(s, bf_bound));
  if (n > fs_bound)
    throw AlgebraError(Err::BoundExceeded, "carrier too large to classify");
  std::vector<Extension> cands;
  for (const auto& fs : enumerate_factor_systems(s))
    cands.push_back(crossed_product(fs));
  return dedupe_fibre(std::move(cands));
}

// ---------------------------------------------------------------------------
// The cohomology monoid of a fibre

struct CohomologyMonoid {
  Semimodule S;
  std::vector<Extension> classes;  // class 0 is the split class
  FiniteMonoid monoid;             // Baer-sum table on the classes
  int unit = 0;
};

// Builds the Baer-sum table on a complete set of class representatives.
// The split class is moved to position 0 so the table is a monoid table
// in the usual normalization.
inline CohomologyMonoid cohomology_monoid_from_classes(
    const Semimodule& s, std::vector<Extension> classes) {
  auto split = crossed_product(zero_factor_system(s));
  int unit = -1;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (fibre_isomorphic(classes[i], split)) {
      unit = static_cast<int>(i);
      break;
    }
  if (unit < 0)
    throw AlgebraError(Err::NotWellDefined, "no split class found");
  if (unit != 0)
    std::rotate(classes.begin(), classes.begin() + unit,
                classes.begin() + unit + 1);
  int n = static_cast<int>(classes.size());
  std::vector<std::vector<Elt>> tab(n, std::vector<Elt>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Extension sum = baer_sum(classes[i], classes[j]);
      for (int c = 0; c < n; ++c)
        if (fibre_isomorphic(sum, classes[c])) {
          tab[i][j] = c;
          break;
        }
      if (tab[i][j] < 0)
        throw AlgebraError(Err::NotWellDefined,
                           "Baer sum escapes the classification", {i, j});
    }
  auto monoid = make_monoid(tab);  // validates unit, associativity
  if (!monoid.is_commutative())
    throw AlgebraError(Err::NotWellDefined, "Baer sum is not commutative");
  return CohomologyMonoid{s, std::move(classes), std::move(monoid), 0};
}

inline CohomologyMonoid cohomology_monoid(const Semimodule& s,
                                          int fs_bound = 16) {
  return cohomology_monoid_from_classes(
      s, fiber_classify(s, ClassifyMode::factor_system, 8, fs_bound));
}

}  // namespace schreier

#endif  // SCHREIER_COFIB_HPP_
