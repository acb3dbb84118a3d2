// The direction construction: the relation R_E attached to a Schreier
// extension, its Chasles relation, the coequalizer df with its Schreier
// point, internal commutative monoid structures, and the induced map on
// morphisms of extensions.

#ifndef SCHREIER_DIRECTION_HPP_
#define SCHREIER_DIRECTION_HPP_

#include "schreier/action.hpp"

namespace schreier {

namespace detail {

inline void require(bool cond, const char* what, std::vector<int> w = {}) {
  if (!cond)
    throw AlgebraError(Err::NotWellDefined, what, std::move(w));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// R_E: (x,z) related iff z = k(a)+x for some a

struct REData {
  Relation rel;
  RelMonoid rm;
  bool unique_witness = false;      // true for cancellative kernels
  std::vector<Elt> q1;              // witness per pair, when unique
  std::optional<SchreierPoint> point;  // K >--> R_E <--> X, when unique
};

// Builds R_E and asserts the structural facts that hold for every Schreier
// extension with commutative kernel: f coequalizes (r1, r2), and Eq(f) is
// generated by R_E together with the kernel (joint extremal epimorphism).
inline REData build_RE(const Extension& e) {
  if (!e.K().is_commutative())
    throw AlgebraError(Err::BadParams, "R_E needs a commutative kernel");
  const auto& X = e.X();
  const auto& d = e.schreier();

  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x = 0; x < X.order(); ++x)
    for (Elt a = 0; a < e.K().order(); ++a)
      pairs.emplace_back(x, X.op(e.k()(a), x));
  REData re{make_relation(X, std::move(pairs)), {}, false, {}, {}};
  re.rm = relation_monoid(re.rel);
  detail::require(re.rel.reflexive(), "R_E must be reflexive");
  detail::require(re.rel.transitive(), "R_E must be transitive");

  // witnesses
  int n = static_cast<int>(re.rm.elems.size());
  re.q1.assign(n, -1);
  re.unique_witness = true;
  for (int i = 0; i < n; ++i) {
    auto [x, z] = re.rm.elems[i];
    int cnt = 0;
    for (Elt a = 0; a < e.K().order(); ++a)
      if (X.op(e.k()(a), x) == z) {
        ++cnt;
        re.q1[i] = a;
      }
    if (cnt != 1) re.unique_witness = false;
  }

  if (re.unique_witness) {
    std::vector<Elt> k1map(e.K().order());
    for (Elt a = 0; a < e.K().order(); ++a)
      k1map[a] = re.rm.index(0, e.k()(a));
    Hom k1{e.K(), re.rm.mon, std::move(k1map)};
    re.point = make_point(k1, re.rm.r1, diagonal_section(re.rm));
    detail::require(re.point->q == re.q1, "R_E retraction mismatch");
  }

  // f is a coequalizer of (r1, r2): the congruence generated by R_E is
  // exactly the kernel pair of f
  Congruence c = congruence_closure(X, re.rel.pairs);
  for (Elt x = 0; x < X.order(); ++x)
    for (Elt y = 0; y < X.order(); ++y)
      detail::require(c.same(x, y) == (e.f()(x) == e.f()(y)),
                      "R_E does not generate Eq(f)", {x, y});

  // (x,y) = k2(q(x)) + j(u_m, k(q(y)) + u_m) for every (x,y) in Eq(f)
  for (Elt x = 0; x < X.order(); ++x)
    for (Elt y = 0; y < X.order(); ++y) {
      if (e.f()(x) != e.f()(y)) continue;
      Elt u = d.base_rep[e.f()(x)];
      Elt rx = X.op(e.k()(d.q[x]), u);
      Elt ry = X.op(e.k()(d.q[y]), u);
      detail::require(rx == x && ry == y && re.rel.contains(u, ry),
                      "joint generation fails", {x, y});
    }
  return re;
}

// The unique a with z = k(a) + x, for cancellative kernels.
inline Elt re_witness(const REData& re, Elt x, Elt z) {
  return re.q1[re.rm.index(x, z)];
}

// ---------------------------------------------------------------------------
// The Chasles relation on R_E

struct ChaslesData {
  std::vector<std::array<Elt, 3>> triples;  // (x, k(a)+x, k(b)+k(a)+x), sorted
  FiniteMonoid pem;
  Hom pi1, p2;           // Chasles legs PEm -> REm (indices into re.rm.elems)
  Hom p1, pi2;           // the second S-reflexive structure
  Hom sigma0, sfrak0;    // reflexivity sections REm -> PEm
  SchreierPoint point;   // K >--> P_E <--> R_E over pi1
  SchreierPoint point2;  // over p1
  std::vector<Elt> qbar1;
};

inline ChaslesData build_chasles(const Extension& e, const REData& re) {
  if (!re.unique_witness)
    throw AlgebraError(Err::BadParams,
                       "Chasles relation needs a cancellative kernel");
  const auto& X = e.X();
  std::vector<std::array<Elt, 3>> triples;
  for (auto [x, y] : re.rel.pairs)
    for (auto [y2, z] : re.rel.pairs)
      if (y2 == y) triples.push_back({x, y, z});
  std::sort(triples.begin(), triples.end());

  int n = static_cast<int>(triples.size());
  auto find = [&](std::array<Elt, 3> t) {
    auto it = std::lower_bound(triples.begin(), triples.end(), t);
    detail::require(it != triples.end() && *it == t, "triple missing");
    return static_cast<int>(it - triples.begin());
  };
  std::vector<Elt> tab(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tab[i * n + j] = find({X.op(triples[i][0], triples[j][0]),
                             X.op(triples[i][1], triples[j][1]),
                             X.op(triples[i][2], triples[j][2])});
  auto pem = FiniteMonoid::from_flat(n, std::move(tab));

  std::vector<Elt> mpi1(n), mp2(n), mp1(n), mpi2(n), qb(n);
  for (int i = 0; i < n; ++i) {
    auto [x, y, z] = triples[i];
    Elt a = re_witness(re, x, y);  // y = k(a)+x
    Elt b = re_witness(re, y, z);  // z = k(b)+y
    qb[i] = a;
    mpi1[i] = re.rm.index(x, X.op(e.k()(b), x));
    mp2[i] = re.rm.index(y, z);
    mp1[i] = re.rm.index(x, y);
    mpi2[i] = re.rm.index(X.op(e.k()(b), x), z);
    detail::require(mpi1[i] >= 0 && mpi2[i] >= 0, "leg escapes R_E");
  }
  Hom pi1 = make_hom(pem, re.rm.mon, mpi1);
  Hom p2 = make_hom(pem, re.rm.mon, mp2);
  Hom p1 = make_hom(pem, re.rm.mon, mp1);
  Hom pi2 = make_hom(pem, re.rm.mon, mpi2);

  std::vector<Elt> msig(re.rm.mon.order()), msfrak(re.rm.mon.order());
  for (int i = 0; i < re.rm.mon.order(); ++i) {
    auto [x, y] = re.rm.elems[i];
    msig[i] = find({x, x, y});
    msfrak[i] = find({x, y, y});
  }
  Hom sigma0 = make_hom(re.rm.mon, pem, msig);
  Hom sfrak0 = make_hom(re.rm.mon, pem, msfrak);

  // kernel of pi1 is a >-> (0, k(a), k(a)); kernel of p1 is a >-> (0,0,k(a))
  std::vector<Elt> mk1(e.K().order()), mk2(e.K().order());
  for (Elt a = 0; a < e.K().order(); ++a) {
    mk1[a] = find({0, e.k()(a), e.k()(a)});
    mk2[a] = find({0, 0, e.k()(a)});
  }
  Hom kappa1{e.K(), pem, std::move(mk1)};
  Hom kappa2{e.K(), pem, std::move(mk2)};
  auto point = make_point(kappa1, pi1, sigma0);
  auto point2 = make_point(kappa2, p1, sfrak0);
  detail::require(point.q == qb, "Chasles retraction mismatch");

  // the double reflexive relation commutes with the R_E legs
  for (int i = 0; i < n; ++i) {
    auto [x, y, z] = triples[i];
    detail::require(re.rm.elems[mpi1[i]].first == x, "r1 pi1 != r1 p1");
    detail::require(re.rm.elems[mpi1[i]].second == re.rm.elems[mpi2[i]].first,
                    "r2 pi1 != r1 pi2");
    detail::require(re.rm.elems[mp1[i]].second == re.rm.elems[mp2[i]].first,
                    "r2 p1 != r1 p2");
    detail::require(re.rm.elems[mpi2[i]].second == re.rm.elems[mp2[i]].second,
                    "r2 pi2 != r2 p2");
    (void)y;
    (void)z;
  }
  return ChaslesData{std::move(triples), std::move(pem), std::move(pi1),
                     std::move(p2),      std::move(p1),  std::move(pi2),
                     std::move(sigma0),  std::move(sfrak0),
                     std::move(point),   std::move(point2), std::move(qb)};
}

// The connector of R_E with itself, with the closed formula
// p(x, k(a)+x, k(b)+k(a)+x) = k(b)+x.
inline Connector self_connector(const Extension& e, const REData& re) {
  auto c = connector(re.rel, re.rel);
  if (!c)
    throw AlgebraError(Err::NotCentral, "R_E fails to centralize itself");
  for (const auto& t : c->triples) {
    Elt b = re_witness(re, t[1], t[2]);
    detail::require(c->value(t[0], t[1], t[2]) ==
                        e.X().op(e.k()(b), t[0]),
                    "connector formula mismatch", {t[0], t[1], t[2]});
  }
  return *c;
}

// ---------------------------------------------------------------------------
// The direction point df = R_E / Chasles

struct DirectionBundle {
  Extension E;
  REData re;
  ChaslesData ch;
  Congruence cong;       // congruence on REm generated by the Chasles legs
  FiniteMonoid df;
  Hom gamma;             // REm -> df
  SchreierPoint point;   // K >--> df <--> M
  RelMonoid eqf_bar;     // kernel pair of f_bar, carrier of mu_bar
  Hom mu_bar;            // Eq(f_bar) -> df
};

inline DirectionBundle build_direction(const Extension& e) {
  REData re = build_RE(e);
  ChaslesData ch = build_chasles(e, re);
  const auto& X = e.X();
  const auto& d = e.schreier();

  std::vector<std::pair<Elt, Elt>> gens;
  for (int i = 0; i < ch.pem.order(); ++i)
    gens.emplace_back(ch.pi1(i), ch.p2(i));
  Congruence cong = congruence_closure(re.rm.mon, gens);

  // kernel pair of gamma is exactly tau: same witness and same fibre
  for (int i = 0; i < re.rm.mon.order(); ++i)
    for (int j = 0; j < re.rm.mon.order(); ++j) {
      bool tau = re.q1[i] == re.q1[j] &&
                 e.f()(re.rm.elems[i].first) == e.f()(re.rm.elems[j].first);
      detail::require(cong.same(i, j) == tau, "Eq(gamma) differs from tau",
                      {i, j});
    }

  Quotient q = quotient_by(re.rm.mon, cong);

  std::vector<Elt> kb(e.K().order()), fb(q.mon.order(), -1),
      sb(e.M().order()), qb(q.mon.order(), -1);
  for (Elt a = 0; a < e.K().order(); ++a)
    kb[a] = q.proj(re.rm.index(0, e.k()(a)));
  for (int i = 0; i < re.rm.mon.order(); ++i) {
    fb[q.proj(i)] = e.f()(re.rm.elems[i].first);
    qb[q.proj(i)] = re.q1[i];
  }
  for (Elt m = 0; m < e.M().order(); ++m)
    sb[m] = q.proj(re.rm.index(d.base_rep[m], d.base_rep[m]));
  Hom kappa{e.K(), q.mon, std::move(kb)};
  Hom fbar = make_hom(q.mon, e.M(), fb);
  Hom sbar = make_hom(e.M(), q.mon, std::move(sb));
  SchreierPoint point = make_point(kappa, fbar, sbar);
  detail::require(point.q == qb, "df retraction differs from the witness");

  // mu_bar on Eq(f_bar): mu(u,v) = kappa(q(u)) + v, and it satisfies the
  // closed formula on gamma classes
  auto eqf_bar = relation_monoid(kernel_objects(fbar).eqf);
  std::vector<Elt> mu(eqf_bar.mon.order());
  for (int i = 0; i < eqf_bar.mon.order(); ++i) {
    auto [u, v] = eqf_bar.elems[i];
    mu[i] = q.mon.op(point.k(point.q[u]), v);
  }
  Hom mu_bar = make_hom(eqf_bar.mon, q.mon, std::move(mu));
  for (int i = 0; i < re.rm.mon.order(); ++i)
    for (int j = 0; j < re.rm.mon.order(); ++j) {
      auto [x, y] = re.rm.elems[i];
      auto [x2, y2] = re.rm.elems[j];
      if (e.f()(x) != e.f()(x2)) continue;
      Elt a = re.q1[i], b = re.q1[j];
      Elt lhs = mu_bar(eqf_bar.index(q.proj(i), q.proj(j)));
      Elt rhs = q.proj(
          re.rm.index(x, X.op(e.k()(e.K().op(a, b)), x)));
      detail::require(lhs == rhs, "mu_bar formula mismatch", {i, j});
      (void)y;
      (void)y2;
    }

  // Chasles identities: gamma(x,x) is the unit over f(x), and
  // gamma(x,y).gamma(y,z) = gamma(x,z)
  for (Elt x = 0; x < X.order(); ++x)
    detail::require(q.proj(re.rm.index(x, x)) == point.s(e.f()(x)),
                    "gamma(x,x) is not the unit", {x});
  for (auto [x, y] : re.rel.pairs)
    for (auto [y2, z] : re.rel.pairs) {
      if (y2 != y) continue;
      Elt g1 = q.proj(re.rm.index(x, y)), g2 = q.proj(re.rm.index(y, z));
      detail::require(mu_bar(eqf_bar.index(g1, g2)) ==
                          q.proj(re.rm.index(x, z)),
                      "Chasles composition identity fails", {x, y, z});
    }

  return DirectionBundle{e,
                         std::move(re),
                         std::move(ch),
                         std::move(cong),
                         q.mon,
                         q.proj,
                         std::move(point),
                         std::move(eqf_bar),
                         std::move(mu_bar)};
}

inline SchreierPoint df_by_coequalizer(const Extension& e) {
  return build_direction(e).point;
}

inline SchreierPoint df_by_semidirect(const Extension& e) {
  return semidirect(to_semimodule(e));
}

// The canonical comparison gamma(x, k(a)+x) |-> (a, f(x)), an isomorphism
// of points over the identity of K.
inline Hom df_comparison(const DirectionBundle& b) {
  const auto& e = b.E;
  auto sd = df_by_semidirect(e);
  int nm = e.M().order();
  std::vector<Elt> lam(b.df.order(), -1);
  for (int i = 0; i < b.re.rm.mon.order(); ++i) {
    Elt target = b.re.q1[i] * nm + e.f()(b.re.rm.elems[i].first);
    Elt cls = b.gamma(i);
    detail::require(lam[cls] < 0 || lam[cls] == target,
                    "comparison not well defined", {i});
    lam[cls] = target;
  }
  Hom h = make_hom(b.df, sd.B(), std::move(lam));
  detail::require(h.bijective(), "comparison is not bijective");
  for (Elt a = 0; a < e.K().order(); ++a)
    detail::require(h(b.point.k(a)) == sd.k(a), "kernel leg mismatch", {a});
  for (Elt c = 0; c < b.df.order(); ++c)
    detail::require(sd.f(h(c)) == b.point.f(c), "projection mismatch", {c});
  for (Elt m = 0; m < nm; ++m)
    detail::require(h(b.point.s(m)) == sd.s(m), "section mismatch", {m});
  return h;
}

// ---------------------------------------------------------------------------
// Internal commutative monoids on Schreier extensions

struct InternalMonoid {
  Extension E;
  RelMonoid eqf;  // Eq(f) as a monoid
  Hom mu;         // Eq(f) -> X, the multiplication
  Hom unit;       // M -> X, the unit section
};

namespace detail {

inline void check_internal_laws(const InternalMonoid& im) {
  const auto& X = im.E.X();
  const auto& f = im.E.f();
  for (Elt m = 0; m < im.E.M().order(); ++m)
    if (f(im.unit(m)) != m)
      throw AlgebraError(Err::NotInternalMonoid, "unit is not a section", {m});
  for (int i = 0; i < im.eqf.mon.order(); ++i) {
    auto [x, y] = im.eqf.elems[i];
    if (f(im.mu(i)) != f(x))
      throw AlgebraError(Err::NotInternalMonoid,
                         "multiplication leaves the fibre", {x, y});
    if (im.mu(im.eqf.index(y, x)) != im.mu(i))
      throw AlgebraError(Err::NotInternalMonoid, "commutativity fails", {x, y});
    if (im.mu(im.eqf.index(im.unit(f(x)), x)) != x)
      throw AlgebraError(Err::NotInternalMonoid, "unit law fails", {x});
  }
  for (Elt x = 0; x < X.order(); ++x)
    for (Elt y = 0; y < X.order(); ++y) {
      if (f(x) != f(y)) continue;
      for (Elt z = 0; z < X.order(); ++z) {
        if (f(y) != f(z)) continue;
        Elt l = im.mu(im.eqf.index(im.mu(im.eqf.index(x, y)), z));
        Elt r = im.mu(im.eqf.index(x, im.mu(im.eqf.index(y, z))));
        if (l != r)
          throw AlgebraError(Err::NotInternalMonoid, "associativity fails",
                             {x, y, z});
      }
    }
}

}  // namespace detail

// mu(x,y) = k(q(x)) + y with unit s; the internal commutative monoid
// carried by the extension underlying a Schreier point.
inline InternalMonoid point_to_internal_monoid(const SchreierPoint& p) {
  if (!p.K().is_commutative())
    throw AlgebraError(Err::BadParams, "internal monoids need commutative K");
  Extension e = p.underlying_extension();
  auto eqf = relation_monoid(kernel_objects(p.f).eqf);
  std::vector<Elt> mu(eqf.mon.order());
  for (int i = 0; i < eqf.mon.order(); ++i) {
    auto [x, y] = eqf.elems[i];
    mu[i] = p.B().op(p.k(p.q[x]), y);
  }
  Hom mu_hom = make_hom(eqf.mon, p.B(), std::move(mu));
  InternalMonoid im{std::move(e), std::move(eqf), std::move(mu_hom), p.s};
  detail::check_internal_laws(im);
  // mu preserves the representatives of E x E, i.e. is a morphism in SExt_M
  const auto& d = im.E.schreier();
  for (Elt m = 0; m < im.E.M().order(); ++m)
    for (Elt u : d.reps[m])
      for (Elt v : d.reps[m])
        detail::require(std::binary_search(d.reps[m].begin(), d.reps[m].end(),
                                           im.mu(im.eqf.index(u, v))),
                        "mu does not preserve representatives", {m, u, v});
  return im;
}

// The internal commutative monoid carried by df, with multiplication
// mu_bar; its table agrees with the generic point construction.
inline InternalMonoid internal_monoid_structure(const DirectionBundle& b) {
  InternalMonoid im = point_to_internal_monoid(b.point);
  detail::require(im.mu.map == b.mu_bar.map,
                  "mu_bar differs from the point multiplication");
  return im;
}

// Recovers the Schreier point from an internal commutative monoid
// structure (omega, s) on E; omega is forced to equal k(q(x)) + y.
inline SchreierPoint internal_monoid_to_point(const Extension& e,
                                              const Hom& omega,
                                              const Hom& unit) {
  auto eqf = relation_monoid(kernel_objects(e.f()).eqf);
  if (!(omega.dom == eqf.mon) || !(omega.cod == e.X()))
    throw AlgebraError(Err::BadParams, "omega must act on Eq(f)");
  InternalMonoid im{e, eqf, omega, unit};
  detail::check_internal_laws(im);

  SchreierPoint p = make_point(e.k(), e.f(), unit);
  // omega restricted to the kernel pair is the kernel addition, and omega
  // agrees with the multiplication mu(x,y) = k(q(x)) + y
  for (Elt a = 0; a < e.K().order(); ++a)
    for (Elt b = 0; b < e.K().order(); ++b)
      if (omega(eqf.index(e.k()(a), e.k()(b))) != e.k()(e.K().op(a, b)))
        throw AlgebraError(Err::OmegaNotForced,
                           "omega on the kernel is not the addition", {a, b});
  for (int i = 0; i < eqf.mon.order(); ++i) {
    auto [x, y] = eqf.elems[i];
    if (omega(i) != e.X().op(p.k(p.q[x]), y))
      throw AlgebraError(Err::OmegaNotForced, "omega differs from k q(x) + y",
                         {x, y});
  }
  return p;
}

// ---------------------------------------------------------------------------
// The direction of a morphism

struct DirectionMorphism {
  Hom d_alpha;  // df -> df'
  Hom alpha1;   // the same morphism as a map of semimodules
};

inline DirectionMorphism direction_on_morphism(const ExtMorphism& al,
                                               const DirectionBundle& src,
                                               const DirectionBundle& dst) {
  detail::require(al.src == src.E && al.dst == dst.E, "bundle mismatch");
  std::vector<Elt> dmap(src.df.order(), -1);
  for (int i = 0; i < src.re.rm.mon.order(); ++i) {
    auto [x, y] = src.re.rm.elems[i];
    int j = dst.re.rm.index(al.alpha2(x), al.alpha2(y));
    detail::require(j >= 0, "image pair escapes R_E'", {x, y});
    Elt target = dst.gamma(j);
    Elt cls = src.gamma(i);
    detail::require(dmap[cls] < 0 || dmap[cls] == target,
                    "d(alpha) not well defined", {i});
    dmap[cls] = target;
  }
  Hom d_alpha = make_hom(src.df, dst.df, std::move(dmap));
  for (Elt a = 0; a < src.E.K().order(); ++a)
    detail::require(d_alpha(src.point.k(a)) == dst.point.k(al.alpha1(a)),
                    "d(alpha) kernel square fails", {a});
  for (Elt c = 0; c < src.df.order(); ++c)
    detail::require(dst.point.f(d_alpha(c)) == src.point.f(c),
                    "d(alpha) projection square fails", {c});
  for (Elt m = 0; m < src.E.M().order(); ++m)
    detail::require(d_alpha(src.point.s(m)) == dst.point.s(m),
                    "d(alpha) section square fails", {m});

  // alpha1 is action preserving for the induced semimodules
  auto sa = to_semimodule(src.E), da = to_semimodule(dst.E);
  for (Elt m = 0; m < sa.M.order(); ++m)
    for (Elt a = 0; a < sa.K.order(); ++a)
      detail::require(
          al.alpha1(sa.apply(m, a)) == da.apply(m, al.alpha1(a)),
          "alpha1 is not action preserving", {m, a});
  return DirectionMorphism{std::move(d_alpha), al.alpha1};
}

}  // namespace schreier

#endif  // SCHREIER_DIRECTION_HPP_
