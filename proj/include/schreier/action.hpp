// Monoid actions on commutative monoids (semimodules), the action induced
// by a Schreier extension, Schreier points and semidirect products,
// S-reflexive relations and connectors between centralizing relations.

#ifndef SCHREIER_ACTION_HPP_
#define SCHREIER_ACTION_HPP_

#include "schreier/extension.hpp"

namespace schreier {

struct Semimodule {
  FiniteMonoid M;
  FiniteMonoid K;  // commutative
  std::vector<std::vector<Elt>> act;  // act[m][a]

  Elt apply(Elt m, Elt a) const { return act[m][a]; }

  friend bool operator==(const Semimodule& s, const Semimodule& t) {
    return s.M == t.M && s.K == t.K && s.act == t.act;
  }
};

// Validates the four action axioms:
//   A1  1*a = a     A2  m*0 = 0     A3  m*(a+a') = m*a + m*a'
//   A4  (m'.m)*a = m'*(m*a)
inline Semimodule make_semimodule(FiniteMonoid M, FiniteMonoid K,
                                  std::vector<std::vector<Elt>> act) {
  if (!K.is_commutative())
    throw AlgebraError(Err::BadParams, "semimodule kernel must be commutative");
  if (static_cast<int>(act.size()) != M.order())
    throw AlgebraError(Err::BadParams, "action table has wrong shape");
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != K.order())
      throw AlgebraError(Err::BadParams, "action table has wrong shape");
    for (Elt v : row)
      if (v < 0 || v >= K.order())
        throw AlgebraError(Err::BadParams, "action value out of range");
  }
  for (Elt a = 0; a < K.order(); ++a)
    if (act[0][a] != a)
      throw AlgebraError(Err::AxiomViolation, "axiom A1 fails", {a});
  for (Elt m = 0; m < M.order(); ++m)
    if (act[m][0] != 0)
      throw AlgebraError(Err::AxiomViolation, "axiom A2 fails", {m});
  for (Elt m = 0; m < M.order(); ++m)
    for (Elt a = 0; a < K.order(); ++a)
      for (Elt b = 0; b < K.order(); ++b)
        if (act[m][K.op(a, b)] != K.op(act[m][a], act[m][b]))
          throw AlgebraError(Err::AxiomViolation, "axiom A3 fails", {m, a, b});
  for (Elt m2 = 0; m2 < M.order(); ++m2)
    for (Elt m = 0; m < M.order(); ++m)
      for (Elt a = 0; a < K.order(); ++a)
        if (act[M.op(m2, m)][a] != act[m2][act[m][a]])
          throw AlgebraError(Err::AxiomViolation, "axiom A4 fails", {m2, m, a});
  return Semimodule{std::move(M), std::move(K), std::move(act)};
}

inline Semimodule trivial_semimodule(const FiniteMonoid& M,
                                     const FiniteMonoid& K) {
  std::vector<std::vector<Elt>> act(M.order(), std::vector<Elt>(K.order()));
  for (Elt m = 0; m < M.order(); ++m)
    for (Elt a = 0; a < K.order(); ++a) act[m][a] = a;
  return make_semimodule(M, K, std::move(act));
}

// ---------------------------------------------------------------------------
// The action induced by a Schreier extension

// m*a = q(u_m + k(a)), computed from the base representatives.  The audit
// re-derives every entry from every alternative representative; a mismatch
// cannot happen for commutative kernels and is kept as a hard assertion.
inline std::vector<std::vector<Elt>> induced_pre_action(const Extension& e) {
  if (!e.K().is_commutative())
    throw AlgebraError(Err::BadParams, "induced action needs commutative K");
  const auto& d = e.schreier();
  std::vector<std::vector<Elt>> act(e.M().order(),
                                    std::vector<Elt>(e.K().order()));
  for (Elt m = 0; m < e.M().order(); ++m)
    for (Elt a = 0; a < e.K().order(); ++a) {
      Elt u = d.base_rep[m];
      act[m][a] = rep_retraction(e, u, e.X().op(u, e.k()(a)));
      for (Elt v : d.reps[m]) {
        Elt alt = rep_retraction(e, v, e.X().op(v, e.k()(a)));
        if (alt != act[m][a])
          throw AlgebraError(Err::NotWellDefined,
                             "induced action depends on the representative",
                             {m, a, v});
      }
    }
  return act;
}

inline Semimodule to_semimodule(const Extension& e) {
  return make_semimodule(e.M(), e.K(), induced_pre_action(e));
}

// Whether the extension induces a semimodule (A4 may fail when the kernel
// is not cancellative); membership test for smod-SExt.
inline bool induces_semimodule(const Extension& e) {
  if (!e.K().is_commutative() || !e.is_schreier()) return false;
  try {
    to_semimodule(e);
    return true;
  } catch (const AlgebraError&) {
    return false;
  }
}

// x + k(a) = k(f(x)*a) + x for all x, a.
inline bool patrick_check(const Extension& e) {
  auto act = induced_pre_action(e);
  for (Elt x = 0; x < e.X().order(); ++x)
    for (Elt a = 0; a < e.K().order(); ++a)
      if (e.X().op(x, e.k()(a)) !=
          e.X().op(e.k()(act[e.f()(x)][a]), x))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Schreier points

struct SchreierPoint {
  Hom k;  // K -> B
  Hom f;  // B -> M
  Hom s;  // M -> B, f o s = id
  std::vector<Elt> q;  // B -> K, b = k(q(b)) + s(f(b))

  const FiniteMonoid& K() const { return k.dom; }
  const FiniteMonoid& B() const { return k.cod; }
  const FiniteMonoid& M() const { return f.cod; }

  Extension underlying_extension() const { return Extension(k, f); }
};

inline std::optional<SchreierPoint> try_make_point(const Hom& k, const Hom& f,
                                                   const Hom& s,
                                                   AlgebraError* err = nullptr) {
  auto fail = [&](Err code, const std::string& msg,
                  std::vector<int> w) -> std::optional<SchreierPoint> {
    if (err) *err = AlgebraError(code, msg, std::move(w));
    return std::nullopt;
  };
  if (!(k.cod == f.dom) || !(s.dom == f.cod) || !(s.cod == f.dom))
    return fail(Err::BadParams, "point maps do not compose", {});
  for (Elt m = 0; m < f.cod.order(); ++m)
    if (f(s(m)) != m) return fail(Err::BadParams, "s is not a section of f", {m});
  if (!k.injective()) return fail(Err::NotInjective, "k not injective", {});
  std::vector<bool> in_image(f.dom.order(), false);
  for (Elt a = 0; a < k.dom.order(); ++a) in_image[k(a)] = true;
  for (Elt x = 0; x < f.dom.order(); ++x)
    if (in_image[x] != (f(x) == 0))
      return fail(Err::NotKernel, "k is not a kernel of f", {x});
  std::vector<Elt> q(f.dom.order(), -1);
  std::vector<int> count(f.dom.order(), 0);
  for (Elt b = 0; b < f.dom.order(); ++b)
    for (Elt a = 0; a < k.dom.order(); ++a)
      if (f.dom.op(k(a), s(f(b))) == b) {
        ++count[b];
        q[b] = a;
      }
  for (Elt b = 0; b < f.dom.order(); ++b)
    if (count[b] > 1)
      return fail(Err::RetractionNotUnique,
                  "two decompositions b = k(a)+s(f(b))", {b});
  for (Elt b = 0; b < f.dom.order(); ++b)
    if (count[b] == 0) return fail(Err::NoRetraction, "no decomposition", {b});
  return SchreierPoint{k, f, s, std::move(q)};
}

inline SchreierPoint make_point(const Hom& k, const Hom& f, const Hom& s) {
  AlgebraError err(Err::BadParams, "");
  auto p = try_make_point(k, f, s, &err);
  if (!p) throw err;
  return *p;
}

// m . a = q(s(m) + k(a)); always a semimodule structure for points with
// commutative kernel.
inline Semimodule point_action(const SchreierPoint& p) {
  std::vector<std::vector<Elt>> act(p.M().order(),
                                    std::vector<Elt>(p.K().order()));
  for (Elt m = 0; m < p.M().order(); ++m)
    for (Elt a = 0; a < p.K().order(); ++a)
      act[m][a] = p.q[p.B().op(p.s(m), p.k(a))];
  return make_semimodule(p.M(), p.K(), std::move(act));
}

// Carrier K x M with (a,m)+(a',m') = (a + m*a', m.m'); index = a*|M| + m.
// Associativity of the table is revalidated on construction.
inline SchreierPoint semidirect(const Semimodule& s) {
  int nk = s.K.order(), nm = s.M.order(), n = nk * nm;
  std::vector<Elt> tab(n * n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      Elt a = x / nm, m = x % nm, b = y / nm, m2 = y % nm;
      tab[x * n + y] = s.K.op(a, s.apply(m, b)) * nm + s.M.op(m, m2);
    }
  auto B = FiniteMonoid::from_flat(n, std::move(tab));
  std::vector<Elt> kmap(nk), fmap(n), smap(nm), q(n);
  for (Elt a = 0; a < nk; ++a) kmap[a] = a * nm;
  for (Elt x = 0; x < n; ++x) fmap[x] = x % nm;
  for (Elt m = 0; m < nm; ++m) smap[m] = m;
  for (Elt x = 0; x < n; ++x) q[x] = x / nm;
  Hom k{s.K, B, std::move(kmap)};
  Hom f{B, s.M, std::move(fmap)};
  Hom sm{s.M, B, std::move(smap)};
  return SchreierPoint{std::move(k), std::move(f), std::move(sm), std::move(q)};
}

// phi(a,m) = k(a) + s(m), the canonical isomorphism of points from
// semidirect(point_action(p)) onto p.  Throws if any point axiom fails.
inline Hom point_iso_semidirect(const SchreierPoint& p) {
  auto sd = semidirect(point_action(p));
  int nm = p.M().order();
  std::vector<Elt> phi(sd.B().order());
  for (Elt x = 0; x < sd.B().order(); ++x)
    phi[x] = p.B().op(p.k(x / nm), p.s(x % nm));
  Hom h = make_hom(sd.B(), p.B(), std::move(phi));
  if (!h.bijective())
    throw AlgebraError(Err::BadParams, "comparison map is not bijective");
  for (Elt a = 0; a < p.K().order(); ++a)
    if (h(sd.k(a)) != p.k(a))
      throw AlgebraError(Err::SquareFails, "kernel square fails", {a});
  for (Elt x = 0; x < sd.B().order(); ++x)
    if (p.f(h(x)) != sd.f(x))
      throw AlgebraError(Err::SquareFails, "projection square fails", {x});
  for (Elt m = 0; m < nm; ++m)
    if (h(sd.s(m)) != p.s(m))
      throw AlgebraError(Err::SquareFails, "section square fails", {m});
  return h;
}

// ---------------------------------------------------------------------------
// S-reflexive relations

struct SReflexivePoint {
  RelMonoid rm;        // the relation as a monoid
  Submonoid K1;        // kernel of the first projection, inside the base
  SchreierPoint point; // K1 >--> R <--> X with section the diagonal
};

// The split extension (k1, r1, diagonal) must be a Schreier point.  When it
// is, the relation is automatically transitive and it is symmetric exactly
// when K1 is a group; both consequences are asserted here.
inline std::optional<SReflexivePoint> s_reflexive_check(const Relation& R) {
  if (!R.reflexive()) return std::nullopt;
  auto rm = relation_monoid(R);
  std::vector<Elt> k1elems;
  for (auto [a, b] : R.pairs)
    if (a == 0) k1elems.push_back(b);
  auto K1 = submonoid(R.base, std::move(k1elems));
  std::vector<Elt> k1map(K1.mon.order());
  for (int i = 0; i < K1.mon.order(); ++i)
    k1map[i] = rm.index(0, K1.elems[i]);
  Hom k1{K1.mon, rm.mon, std::move(k1map)};
  auto pt = try_make_point(k1, rm.r1, diagonal_section(rm));
  if (!pt) return std::nullopt;
  if (!R.transitive())
    throw AlgebraError(Err::NotSReflexive,
                       "S-reflexive relation is not transitive");
  if (R.symmetric() != K1.mon.is_group())
    throw AlgebraError(Err::NotSReflexive,
                       "symmetry does not match the kernel being a group");
  return SReflexivePoint{std::move(rm), std::move(K1), std::move(*pt)};
}

// ---------------------------------------------------------------------------
// Connectors

struct Connector {
  Relation R, Rp;
  std::vector<std::array<Elt, 3>> triples;  // (x,y,z): x R y R' z, sorted
  FiniteMonoid trip_mon;
  Hom p;  // trip_mon -> X

  Elt value(Elt x, Elt y, Elt z) const {
    auto it = std::lower_bound(triples.begin(), triples.end(),
                               std::array<Elt, 3>{x, y, z});
    return p(static_cast<Elt>(it - triples.begin()));
  }
};

// Centrality criterion: q'(y, y+t) + x = x + t for every t in K' and
// (x,y) in R.  On success the connector is p(x,y,z) = q'(y,z) + x; the
// connector identities and the homomorphism property are asserted.
inline std::optional<Connector> connector(
    const Relation& R, const Relation& Rp,
    std::array<Elt, 3>* not_central_witness = nullptr) {
  if (!(R.base == Rp.base))
    throw AlgebraError(Err::BadParams, "relations on different carriers");
  if (!R.reflexive())
    throw AlgebraError(Err::BadParams, "first relation must be reflexive");
  auto sp = s_reflexive_check(Rp);
  if (!sp)
    throw AlgebraError(Err::NotSReflexive,
                       "second relation is not S-reflexive");
  const auto& X = R.base;
  auto qp = [&](Elt y, Elt z) {  // q'(y,z), as an element of X
    return sp->K1.elems[sp->point.q[sp->rm.index(y, z)]];
  };
  for (Elt t : sp->K1.elems)
    for (auto [x, y] : R.pairs)
      if (X.op(qp(y, X.op(y, t)), x) != X.op(x, t)) {
        if (not_central_witness) *not_central_witness = {t, x, y};
        return std::nullopt;
      }

  std::vector<std::array<Elt, 3>> triples;
  for (auto [x, y] : R.pairs)
    for (auto [y2, z] : Rp.pairs)
      if (y2 == y) triples.push_back({x, y, z});
  std::sort(triples.begin(), triples.end());
  int n = static_cast<int>(triples.size());
  auto find = [&](std::array<Elt, 3> t) {
    auto it = std::lower_bound(triples.begin(), triples.end(), t);
    return static_cast<int>(it - triples.begin());
  };
  std::vector<Elt> tab(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tab[i * n + j] = find({X.op(triples[i][0], triples[j][0]),
                             X.op(triples[i][1], triples[j][1]),
                             X.op(triples[i][2], triples[j][2])});
  auto trip_mon = FiniteMonoid::from_flat(n, std::move(tab));
  std::vector<Elt> pmap(n);
  for (int i = 0; i < n; ++i)
    pmap[i] = X.op(qp(triples[i][1], triples[i][2]), triples[i][0]);
  Hom p = make_hom(trip_mon, X, std::move(pmap));

  Connector c{R, Rp, std::move(triples), std::move(trip_mon), std::move(p)};
  for (auto [a, z] : Rp.pairs)
    if (c.value(a, a, z) != z)
      throw AlgebraError(Err::NotCentral, "connector identity p(a,a,z)=z fails",
                         {a, z});
  for (auto [b, y] : R.pairs)
    if (c.value(b, y, y) != b)
      throw AlgebraError(Err::NotCentral, "connector identity p(b,y,y)=b fails",
                         {b, y});
  return c;
}

}  // namespace schreier

#endif  // SCHREIER_ACTION_HPP_
