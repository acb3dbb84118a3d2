// Shared fixtures: small named monoids and extensions used across suites.

#ifndef SCHREIER_TESTS_FIXTURES_HPP_
#define SCHREIER_TESTS_FIXTURES_HPP_

#include "schreier/extension.hpp"
#include "schreier/monoid.hpp"

namespace fixtures {

using namespace schreier;

// {1, z} with z absorbing (the two-element non-group commutative monoid).
inline FiniteMonoid two_chain() {
  auto m = make_monoid({{0, 1}, {1, 1}});
  m.name = "M2";
  return m;
}

inline FiniteMonoid klein_four() {
  auto m = make_monoid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  m.name = "V4";
  return m;
}

// The symmetric group on three letters, built from permutation composition.
// Elements are the six permutations in lexicographic order, identity first:
// 012, 021, 102, 120, 201, 210.  Even permutations are 0, 3, 4.
inline FiniteMonoid sym3() {
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<Elt>> rows(6, std::vector<Elt>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      rows[i][j] = find(comp);
    }
  auto m = make_monoid(rows);
  m.name = "S3";
  return m;
}

// C3 >--> S3 -->> C2, kernel the rotations, projection the parity map.
inline Extension s3_extension() {
  auto s3 = sym3();
  Hom f = make_hom(s3, cyclic_group(2), {0, 1, 1, 0, 0, 1});
  Hom k = make_hom(cyclic_group(3), s3, {0, 3, 4});
  return Extension(std::move(k), std::move(f));
}

// The finite analogue of the non-Schreier example: multiplication
// M2 x M2 ->> M2 with trivial kernel; the fibre over z has no
// representative.
inline Extension mult_m2m2_extension() {
  auto m2 = two_chain();
  auto prod = product(m2, m2);
  std::vector<Elt> fmap(4);
  for (Elt a = 0; a < 2; ++a)
    for (Elt b = 0; b < 2; ++b) fmap[prod.pair(a, b)] = m2.op(a, b);
  Hom f = make_hom(prod.mon, m2, std::move(fmap));
  Hom k = make_hom(FiniteMonoid(), prod.mon, {0});
  return Extension(std::move(k), std::move(f));
}

}  // namespace fixtures

#endif  // SCHREIER_TESTS_FIXTURES_HPP_
