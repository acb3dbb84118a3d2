// Monoid congruences (union-find closure under translations), quotients,
// and internal relations (submonoids of X x X) with their monoid views.

#ifndef SCHREIER_CONGRUENCE_HPP_
#define SCHREIER_CONGRUENCE_HPP_

#include <deque>
#include <map>

#include "schreier/monoid.hpp"

namespace schreier {

struct Congruence {
  FiniteMonoid base;
  std::vector<int> class_of;  // block ids numbered by first occurrence
  int num_classes = 0;

  bool same(Elt a, Elt b) const { return class_of[a] == class_of[b]; }

  std::vector<std::vector<Elt>> blocks() const {
    std::vector<std::vector<Elt>> bl(num_classes);
    for (Elt a = 0; a < base.order(); ++a) bl[class_of[a]].push_back(a);
    return bl;
  }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

inline Congruence congruence_from_uf(const FiniteMonoid& M, UnionFind& uf) {
  int n = M.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (Elt a = 0; a < n; ++a) {
    int r = uf.find(a);
    if (cls[r] < 0) cls[r] = next++;
    cls[a] = cls[r];
  }
  return Congruence{M, std::move(cls), next};
}

}  // namespace detail

// Smallest congruence containing the generator pairs: union-find with a
// work queue of merged pairs, closed under left and right translation.
inline Congruence congruence_closure(
    const FiniteMonoid& M, const std::vector<std::pair<Elt, Elt>>& gens) {
  int n = M.order();
  detail::UnionFind uf(n);
  std::deque<std::pair<Elt, Elt>> work(gens.begin(), gens.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.merge(a, b)) continue;
    for (Elt t = 0; t < n; ++t) {
      if (uf.find(M.op(t, a)) != uf.find(M.op(t, b)))
        work.emplace_back(M.op(t, a), M.op(t, b));
      if (uf.find(M.op(a, t)) != uf.find(M.op(b, t)))
        work.emplace_back(M.op(a, t), M.op(b, t));
    }
  }
  return detail::congruence_from_uf(M, uf);
}

inline Congruence discrete_congruence(const FiniteMonoid& M) {
  return congruence_closure(M, {});
}

// Compatibility is equivalent to the block operation being well defined:
// cls(a.b) must depend only on (cls(a), cls(b)).
inline bool is_congruence(const Congruence& c) {
  const auto& M = c.base;
  int k = c.num_classes;
  std::vector<int> block_op(k * k, -1);
  for (Elt a = 0; a < M.order(); ++a)
    for (Elt b = 0; b < M.order(); ++b) {
      int cell = c.class_of[a] * k + c.class_of[b];
      int v = c.class_of[M.op(a, b)];
      if (block_op[cell] < 0)
        block_op[cell] = v;
      else if (block_op[cell] != v)
        return false;
    }
  return true;
}

struct Quotient {
  FiniteMonoid mon;
  Hom proj;
};

// Well-definedness of the block operation is rechecked; the block of the
// identity becomes element 0 because blocks are numbered by first occurrence.
inline Quotient quotient_by(const FiniteMonoid& M, const Congruence& c) {
  if (!(c.base == M))
    throw AlgebraError(Err::BadParams, "congruence base mismatch");
  if (!is_congruence(c))
    throw AlgebraError(Err::NotACongruence,
                       "partition is not compatible with the operation");
  int k = c.num_classes;
  auto bl = c.blocks();
  std::vector<Elt> tab(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      tab[i * k + j] = c.class_of[M.op(bl[i][0], bl[j][0])];
  auto q = FiniteMonoid::from_flat(k, std::move(tab));
  Hom proj{M, q, c.class_of};
  return Quotient{std::move(q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Internal relations on a monoid

struct Relation {
  FiniteMonoid base;
  std::vector<std::pair<Elt, Elt>> pairs;  // sorted, unique

  bool contains(Elt a, Elt b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::pair{a, b});
  }

  bool reflexive() const {
    for (Elt a = 0; a < base.order(); ++a)
      if (!contains(a, a)) return false;
    return true;
  }

  bool symmetric() const {
    for (auto [a, b] : pairs)
      if (!contains(b, a)) return false;
    return true;
  }

  bool transitive() const {
    for (auto [a, b] : pairs)
      for (auto [b2, c] : pairs)
        if (b2 == b && !contains(a, c)) return false;
    return true;
  }
};

// Validates closure of the pair set under the componentwise operation.
inline Relation make_relation(FiniteMonoid base,
                              std::vector<std::pair<Elt, Elt>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Relation r{std::move(base), std::move(pairs)};
  if (!r.contains(0, 0))
    throw AlgebraError(Err::NotARelation, "relation must contain (0,0)");
  for (auto [a, b] : r.pairs)
    for (auto [c, d] : r.pairs)
      if (!r.contains(r.base.op(a, c), r.base.op(b, d)))
        throw AlgebraError(Err::NotARelation,
                           "pair set is not a submonoid of the square",
                           {a, b, c, d});
  return r;
}

inline Relation diagonal_relation(const FiniteMonoid& M) {
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt a = 0; a < M.order(); ++a) pairs.emplace_back(a, a);
  return make_relation(M, std::move(pairs));
}

inline Relation full_relation(const FiniteMonoid& M) {
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt a = 0; a < M.order(); ++a)
    for (Elt b = 0; b < M.order(); ++b) pairs.emplace_back(a, b);
  return make_relation(M, std::move(pairs));
}

// The relation as a monoid in its own right, with projection legs and,
// for reflexive relations, the diagonal section.
struct RelMonoid {
  FiniteMonoid mon;
  std::vector<std::pair<Elt, Elt>> elems;
  Hom r1, r2;

  int index(Elt a, Elt b) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), std::pair{a, b});
    return (it != elems.end() && *it == std::pair{a, b})
               ? static_cast<int>(it - elems.begin())
               : -1;
  }
};

inline RelMonoid relation_monoid(const Relation& R) {
  const auto& X = R.base;
  auto elems = R.pairs;  // already sorted; (0,0) is first
  int k = static_cast<int>(elems.size());
  auto find = [&](Elt a, Elt b) {
    auto it = std::lower_bound(elems.begin(), elems.end(), std::pair{a, b});
    return static_cast<int>(it - elems.begin());
  };
  std::vector<Elt> tab(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      tab[i * k + j] = find(X.op(elems[i].first, elems[j].first),
                            X.op(elems[i].second, elems[j].second));
  auto mon = FiniteMonoid::from_flat(k, std::move(tab));
  std::vector<Elt> m1(k), m2(k);
  for (int i = 0; i < k; ++i) {
    m1[i] = elems[i].first;
    m2[i] = elems[i].second;
  }
  Hom r1{mon, X, std::move(m1)}, r2{mon, X, std::move(m2)};
  return RelMonoid{std::move(mon), std::move(elems), std::move(r1),
                   std::move(r2)};
}

struct KernelObjects {
  Submonoid kernel;  // preimage of the identity, with inclusion
  Relation eqf;      // kernel pair {(x,y) : f(x) = f(y)}
};

inline KernelObjects kernel_objects(const Hom& f) {
  std::vector<Elt> ker;
  for (Elt x = 0; x < f.dom.order(); ++x)
    if (f(x) == 0) ker.push_back(x);
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x = 0; x < f.dom.order(); ++x)
    for (Elt y = 0; y < f.dom.order(); ++y)
      if (f(x) == f(y)) pairs.emplace_back(x, y);
  return KernelObjects{submonoid(f.dom, std::move(ker)),
                       make_relation(f.dom, std::move(pairs))};
}

inline Hom diagonal_section(const RelMonoid& rm) {
  const auto& X = rm.r1.cod;
  std::vector<Elt> d(X.order());
  for (Elt x = 0; x < X.order(); ++x) {
    int i = rm.index(x, x);
    if (i < 0)
      throw AlgebraError(Err::BadParams, "relation is not reflexive", {x});
    d[x] = i;
  }
  return Hom{X, rm.mon, std::move(d)};
}

}  // namespace schreier

#endif  // SCHREIER_CONGRUENCE_HPP_
