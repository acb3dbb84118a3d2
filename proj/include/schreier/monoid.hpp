// Finite monoids as multiplication tables: validation, homomorphisms,
// submonoids, products, pullbacks, isomorphism testing and enumeration
// up to isomorphism.  Element 0 is always the identity.

#ifndef SCHREIER_MONOID_HPP_
#define SCHREIER_MONOID_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace schreier {

using Elt = int;

enum class Err {
  NotAssociative,
  NoIdentityAtZero,
  BoundExceeded,
  NotAHom,
  NotInjective,
  NotSurjective,
  NotKernel,
  NotACongruence,
  NotARelation,
  SquareFails,
  RepsNotPreserved,
  NotSchreier,
  BadParams,
  NotWellDefined,
  AxiomViolation,
  NoRetraction,
  RetractionNotUnique,
  NotSReflexive,
  NotCentral,
  NotInternalMonoid,
  OmegaNotForced,
  NotActionPreserving,
  FactorizationHypothesisFails,
  FibreMismatch,
  InvalidFactorSystem,
};

// Single error type for the whole library; `witness` carries the failing
// elements (e.g. the triple breaking associativity).
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Err code, const std::string& msg, std::vector<int> witness = {})
      : std::runtime_error(msg), code(code), witness(std::move(witness)) {}

  Err code;
  std::vector<int> witness;
};

class FiniteMonoid {
 public:
  // Trivial monoid.
  FiniteMonoid() : n_(1), tab_{0} { compute_flags(); }

  static FiniteMonoid from_flat(int n, std::vector<Elt> tab) {
    FiniteMonoid m;
    m.n_ = n;
    m.tab_ = std::move(tab);
    m.validate();
    m.compute_flags();
    return m;
  }

  int order() const { return n_; }
  Elt op(Elt a, Elt b) const { return tab_[a * n_ + b]; }
  const std::vector<Elt>& table() const { return tab_; }

  bool is_commutative() const { return commutative_; }
  bool is_cancellative() const { return cancellative_; }
  bool is_group() const { return group_; }

  // -1 when a has no two-sided inverse.
  Elt inverse(Elt a) const { return inv_[a]; }
  bool is_unit(Elt a) const { return inv_[a] >= 0; }
  bool is_idempotent(Elt a) const { return op(a, a) == a; }

  std::vector<Elt> units() const {
    std::vector<Elt> u;
    for (Elt a = 0; a < n_; ++a)
      if (is_unit(a)) u.push_back(a);
    return u;
  }

  // Least (i, p) with i >= 0, p >= 1 and a^(i+p) = a^i, powers starting at
  // a^0 = 0.  Relabeling-invariant, used to prune isomorphism searches.
  std::pair<int, int> index_period(Elt a) const {
    std::vector<int> seen(n_, -1);
    Elt x = 0;
    int step = 0;
    while (seen[x] < 0) {
      seen[x] = step++;
      x = op(x, a);
    }
    return {seen[x], step - seen[x]};
  }

  std::vector<std::vector<Elt>> rows() const {
    std::vector<std::vector<Elt>> r(n_, std::vector<Elt>(n_));
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b) r[a][b] = op(a, b);
    return r;
  }

  std::string name;  // optional label, ignored by comparisons

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.n_ == b.n_ && a.tab_ == b.tab_;
  }

 private:
  void validate() const {
    if (n_ <= 0 || static_cast<int>(tab_.size()) != n_ * n_)
      throw AlgebraError(Err::BadParams, "table is not square");
    for (Elt v : tab_)
      if (v < 0 || v >= n_)
        throw AlgebraError(Err::BadParams, "table entry out of range");
    for (Elt a = 0; a < n_; ++a) {
      if (op(0, a) != a || op(a, 0) != a)
        throw AlgebraError(Err::NoIdentityAtZero,
                           "element 0 is not a two-sided identity", {a});
    }
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b)
        for (Elt c = 0; c < n_; ++c)
          if (op(op(a, b), c) != op(a, op(b, c)))
            throw AlgebraError(Err::NotAssociative, "table is not associative",
                               {a, b, c});
  }

  void compute_flags() {
    commutative_ = true;
    for (Elt a = 0; a < n_ && commutative_; ++a)
      for (Elt b = a + 1; b < n_; ++b)
        if (op(a, b) != op(b, a)) {
          commutative_ = false;
          break;
        }
    cancellative_ = true;
    for (Elt a = 0; a < n_ && cancellative_; ++a) {
      std::vector<bool> row(n_, false), col(n_, false);
      for (Elt b = 0; b < n_; ++b) {
        if (row[op(a, b)] || col[op(b, a)]) {
          cancellative_ = false;
          break;
        }
        row[op(a, b)] = col[op(b, a)] = true;
      }
    }
    inv_.assign(n_, -1);
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b)
        if (op(a, b) == 0 && op(b, a) == 0) {
          inv_[a] = b;
          break;
        }
    group_ = true;
    for (Elt a = 0; a < n_; ++a)
      if (inv_[a] < 0) group_ = false;
  }

  int n_;
  std::vector<Elt> tab_;
  bool commutative_ = false, cancellative_ = false, group_ = false;
  std::vector<Elt> inv_;
};

inline FiniteMonoid make_monoid(const std::vector<std::vector<Elt>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<Elt> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw AlgebraError(Err::BadParams, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteMonoid::from_flat(n, std::move(flat));
}

inline FiniteMonoid cyclic_group(int n) {
  std::vector<Elt> tab(n * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) tab[a * n + b] = (a + b) % n;
  auto m = FiniteMonoid::from_flat(n, std::move(tab));
  m.name = "C" + std::to_string(n);
  return m;
}

inline std::vector<Elt> units(const FiniteMonoid& m) { return m.units(); }

// ---------------------------------------------------------------------------
// Homomorphisms

struct Hom {
  FiniteMonoid dom, cod;
  std::vector<Elt> map;

  Elt operator()(Elt a) const { return map[a]; }

  bool injective() const {
    std::vector<bool> hit(cod.order(), false);
    for (Elt v : map) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  bool surjective() const {
    std::vector<bool> hit(cod.order(), false);
    for (Elt v : map) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool bijective() const { return dom.order() == cod.order() && injective(); }

  friend bool operator==(const Hom& a, const Hom& b) {
    return a.dom == b.dom && a.cod == b.cod && a.map == b.map;
  }
};

inline bool is_hom_table(const FiniteMonoid& dom, const FiniteMonoid& cod,
                         const std::vector<Elt>& map) {
  if (static_cast<int>(map.size()) != dom.order()) return false;
  if (map[0] != 0) return false;
  for (Elt v : map)
    if (v < 0 || v >= cod.order()) return false;
  for (Elt a = 0; a < dom.order(); ++a)
    for (Elt b = 0; b < dom.order(); ++b)
      if (map[dom.op(a, b)] != cod.op(map[a], map[b])) return false;
  return true;
}

inline Hom make_hom(FiniteMonoid dom, FiniteMonoid cod, std::vector<Elt> map) {
  if (!is_hom_table(dom, cod, map))
    throw AlgebraError(Err::NotAHom, "map is not a monoid homomorphism");
  return Hom{std::move(dom), std::move(cod), std::move(map)};
}

inline Hom identity_hom(const FiniteMonoid& m) {
  std::vector<Elt> id(m.order());
  for (Elt a = 0; a < m.order(); ++a) id[a] = a;
  return Hom{m, m, std::move(id)};
}

// g after f.
inline Hom compose(const Hom& g, const Hom& f) {
  if (!(f.cod == g.dom))
    throw AlgebraError(Err::BadParams, "composition mismatch");
  std::vector<Elt> map(f.dom.order());
  for (Elt a = 0; a < f.dom.order(); ++a) map[a] = g.map[f.map[a]];
  return Hom{f.dom, g.cod, std::move(map)};
}

inline Hom invert_iso(const Hom& h) {
  std::vector<Elt> inv(h.cod.order(), -1);
  for (Elt a = 0; a < h.dom.order(); ++a) inv[h.map[a]] = a;
  for (Elt v : inv)
    if (v < 0) throw AlgebraError(Err::BadParams, "hom is not bijective");
  return Hom{h.cod, h.dom, std::move(inv)};
}

// All homomorphisms M -> N in lexicographic order of their map tables.
inline std::vector<Hom> enumerate_homs(const FiniteMonoid& M,
                                       const FiniteMonoid& N,
                                       bool surjective_only = false) {
  int n = M.order();
  std::vector<Hom> out;
  std::vector<Elt> img(n, -1);
  img[0] = 0;

  auto consistent = [&](int upto) {
    for (Elt a = 0; a <= upto; ++a)
      for (Elt b = 0; b <= upto; ++b) {
        Elt ab = M.op(a, b);
        if (ab <= upto && img[ab] != N.op(img[a], img[b])) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Hom h{M, N, img};
      if (!surjective_only || h.surjective()) out.push_back(std::move(h));
      return;
    }
    for (Elt v = 0; v < N.order(); ++v) {
      img[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
    img[i] = -1;
  };
  rec(rec, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Submonoids, products, pullbacks

struct Submonoid {
  FiniteMonoid mon;
  std::vector<Elt> elems;     // ambient elements, sorted; elems[0] == 0
  std::vector<int> index_of;  // ambient -> local, -1 outside
  Hom incl;                   // mon -> ambient
};

inline Submonoid submonoid(const FiniteMonoid& M, std::vector<Elt> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0)
    throw AlgebraError(Err::BadParams, "submonoid must contain the identity");
  std::vector<int> idx(M.order(), -1);
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) idx[elems[i]] = i;
  int k = static_cast<int>(elems.size());
  std::vector<Elt> tab(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elt p = M.op(elems[i], elems[j]);
      if (idx[p] < 0)
        throw AlgebraError(Err::BadParams, "subset is not closed",
                           {elems[i], elems[j]});
      tab[i * k + j] = idx[p];
    }
  auto sub = FiniteMonoid::from_flat(k, std::move(tab));
  Hom incl{sub, M, elems};
  return Submonoid{std::move(sub), std::move(elems), std::move(idx),
                   std::move(incl)};
}

struct ProductMonoid {
  FiniteMonoid mon;  // index = a * |B| + b
  Hom p1, p2;
  int nb;
  Elt pair(Elt a, Elt b) const { return a * nb + b; }
};

inline ProductMonoid product(const FiniteMonoid& A, const FiniteMonoid& B) {
  int na = A.order(), nb = B.order(), n = na * nb;
  std::vector<Elt> tab(n * n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      tab[x * n + y] =
          A.op(x / nb, y / nb) * nb + B.op(x % nb, y % nb);
  auto mon = FiniteMonoid::from_flat(n, std::move(tab));
  std::vector<Elt> m1(n), m2(n);
  for (Elt x = 0; x < n; ++x) {
    m1[x] = x / nb;
    m2[x] = x % nb;
  }
  Hom p1{mon, A, std::move(m1)}, p2{mon, B, std::move(m2)};
  return ProductMonoid{std::move(mon), std::move(p1), std::move(p2), nb};
}

struct PullbackMonoid {
  FiniteMonoid mon;
  std::vector<std::pair<Elt, Elt>> elems;  // sorted lexicographically
  Hom p1, p2;

  int index(Elt a, Elt b) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), std::pair{a, b});
    return (it != elems.end() && *it == std::pair{a, b})
               ? static_cast<int>(it - elems.begin())
               : -1;
  }
};

// Pullback of f : A -> P and g : B -> P.
inline PullbackMonoid pullback(const Hom& f, const Hom& g) {
  if (!(f.cod == g.cod))
    throw AlgebraError(Err::BadParams, "pullback needs a shared codomain");
  const FiniteMonoid &A = f.dom, &B = g.dom;
  std::vector<std::pair<Elt, Elt>> elems;
  for (Elt a = 0; a < A.order(); ++a)
    for (Elt b = 0; b < B.order(); ++b)
      if (f(a) == g(b)) elems.emplace_back(a, b);
  int k = static_cast<int>(elems.size());
  std::vector<Elt> tab(k * k);
  auto find = [&](Elt a, Elt b) {
    auto it = std::lower_bound(elems.begin(), elems.end(), std::pair{a, b});
    return static_cast<int>(it - elems.begin());
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      tab[i * k + j] = find(A.op(elems[i].first, elems[j].first),
                            B.op(elems[i].second, elems[j].second));
  auto mon = FiniteMonoid::from_flat(k, std::move(tab));
  std::vector<Elt> m1(k), m2(k);
  for (int i = 0; i < k; ++i) {
    m1[i] = elems[i].first;
    m2[i] = elems[i].second;
  }
  Hom p1{mon, A, std::move(m1)}, p2{mon, B, std::move(m2)};
  return PullbackMonoid{std::move(mon), std::move(elems), std::move(p1),
                        std::move(p2)};
}

// ---------------------------------------------------------------------------
// Isomorphism testing

namespace detail {

// Relabeling-invariant fingerprint of an element.
inline std::array<int, 5> elt_profile(const FiniteMonoid& m, Elt a) {
  auto [idx, per] = m.index_period(a);
  int occ = 0;
  for (Elt v : m.table()) occ += (v == a);
  return {idx, per, m.is_unit(a) ? 1 : 0, m.is_idempotent(a) ? 1 : 0, occ};
}

inline std::vector<std::array<int, 5>> profiles(const FiniteMonoid& m) {
  std::vector<std::array<int, 5>> p(m.order());
  for (Elt a = 0; a < m.order(); ++a) p[a] = elt_profile(m, a);
  return p;
}

}  // namespace detail

// First isomorphism M -> N in lexicographic order of map tables, if any.
inline std::optional<Hom> is_isomorphic(const FiniteMonoid& M,
                                        const FiniteMonoid& N) {
  int n = M.order();
  if (n != N.order()) return std::nullopt;
  auto pm = detail::profiles(M), pn = detail::profiles(N);
  {
    auto sm = pm, sn = pn;
    std::sort(sm.begin(), sm.end());
    std::sort(sn.begin(), sn.end());
    if (sm != sn) return std::nullopt;
  }
  std::vector<Elt> img(n, -1);
  std::vector<bool> used(n, false);
  img[0] = 0;
  used[0] = true;

  auto ok = [&](int i) {
    for (Elt a = 0; a <= i; ++a)
      for (Elt b = 0; b <= i; ++b) {
        Elt ab = M.op(a, b);
        if (ab <= i && img[ab] != N.op(img[a], img[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (Elt v = 0; v < n; ++v) {
      if (used[v] || pn[v] != pm[i]) continue;
      img[i] = v;
      used[v] = true;
      if (ok(i) && self(self, i + 1)) return true;
      used[v] = false;
    }
    img[i] = -1;
    return false;
  };
  if (!rec(rec, 1)) return std::nullopt;
  return Hom{M, N, img};
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism

// Lexicographically minimal table over all relabelings fixing 0.
inline std::vector<Elt> canonical_table(const FiniteMonoid& m) {
  int n = m.order();
  std::vector<Elt> perm(n), best = m.table();
  for (Elt a = 0; a < n; ++a) perm[a] = a;
  std::vector<Elt> cand(n * n);
  do {
    std::vector<Elt> inv(n);
    for (Elt a = 0; a < n; ++a) inv[perm[a]] = a;
    for (Elt i = 0; i < n; ++i)
      for (Elt j = 0; j < n; ++j)
        cand[i * n + j] = perm[m.op(inv[i], inv[j])];
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

namespace detail {

// Partially-defined associativity around the cell (i,j) just assigned:
// every instance of (ab)c = a(bc) that reads the cell and is now fully
// determined must hold.  Triples touching the identity hold automatically.
inline bool partial_assoc_ok(const std::vector<Elt>& tab, int n, int i,
                             int j) {
  Elt v = tab[i * n + j];
  for (Elt c = 1; c < n; ++c) {
    Elt l = tab[v * n + c];  // (i j) c  vs  i (j c)
    Elt jc = tab[j * n + c];
    Elt r = jc < 0 ? -1 : tab[i * n + jc];
    if (l >= 0 && r >= 0 && l != r) return false;
    Elt ci = tab[c * n + i];  // (c i) j  vs  c (i j)
    Elt l2 = ci < 0 ? -1 : tab[ci * n + j];
    Elt r2 = tab[c * n + v];
    if (l2 >= 0 && r2 >= 0 && l2 != r2) return false;
  }
  for (Elt a = 1; a < n; ++a)
    for (Elt b = 1; b < n; ++b) {
      if (tab[a * n + b] == i) {  // (a b) j  vs  a (b j)
        Elt bj = tab[b * n + j];
        Elt r = bj < 0 ? -1 : tab[a * n + bj];
        if (r >= 0 && r != v) return false;
      }
      if (tab[a * n + b] == j) {  // i (a b)  vs  (i a) b
        Elt ia = tab[i * n + a];
        Elt l = ia < 0 ? -1 : tab[ia * n + b];
        if (l >= 0 && l != v) return false;
      }
    }
  return true;
}

inline std::vector<FiniteMonoid> enumerate_monoids_impl(int n,
                                                        bool commutative_only) {
  std::vector<std::vector<Elt>> canon;
  std::vector<Elt> tab(n * n, -1);
  for (Elt a = 0; a < n; ++a) tab[a] = tab[a * n] = a;

  auto assoc_ok = [&](int i, int j) { return partial_assoc_ok(tab, n, i, j); };

  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      auto m = FiniteMonoid::from_flat(n, tab);
      canon.push_back(canonical_table(m));
      return;
    }
    if (tab[cell] >= 0) {  // identity row/column, already fixed
      self(self, cell + 1);
      return;
    }
    int i = cell / n, j = cell % n;
    if (commutative_only && i > j) {
      tab[cell] = tab[j * n + i];
      if (assoc_ok(i, j)) self(self, cell + 1);
      tab[cell] = -1;
      return;
    }
    for (Elt v = 0; v < n; ++v) {
      tab[cell] = v;
      if (assoc_ok(i, j)) self(self, cell + 1);
    }
    tab[cell] = -1;
  };
  rec(rec, 0);

  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<FiniteMonoid> out;
  out.reserve(canon.size());
  for (auto& t : canon) out.push_back(FiniteMonoid::from_flat(n, std::move(t)));
  return out;
}

}  // namespace detail

// One canonical representative per isomorphism class, in lexicographic
// order of canonical tables.
inline std::vector<FiniteMonoid> enumerate_monoids(int n, int bound = 6) {
  if (n < 1 || n > bound)
    throw AlgebraError(Err::BoundExceeded,
                       "order " + std::to_string(n) + " exceeds bound " +
                           std::to_string(bound));
  return detail::enumerate_monoids_impl(n, false);
}

inline std::vector<FiniteMonoid> enumerate_commutative_monoids(int n,
                                                               int bound = 6) {
  if (n < 1 || n > bound)
    throw AlgebraError(Err::BoundExceeded, "order exceeds bound");
  return detail::enumerate_monoids_impl(n, true);
}

}  // namespace schreier

#endif  // SCHREIER_MONOID_HPP_
