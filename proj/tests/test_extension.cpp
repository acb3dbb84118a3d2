#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "schreier/extension.hpp"

using namespace schreier;
using fixtures::mult_m2m2_extension;
using fixtures::s3_extension;
using fixtures::two_chain;

namespace {

Extension eprod_c2_m2() {
  return product_extension(cyclic_group(2), two_chain());
}

}  // namespace

TEST_CASE("make_extension validation") {
  CHECK_NOTHROW(eprod_c2_m2());
  CHECK_NOTHROW(trivial_right_extension(two_chain()));

  auto c2 = cyclic_group(2), c4 = cyclic_group(4);
  Hom incl = make_hom(c2, c4, {0, 2});
  Hom k = make_hom(FiniteMonoid(), c2, {0});
  CHECK_THROWS_MATCHES(
      Extension(k, incl), AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>(
          [](const AlgebraError& e) { return e.code == Err::NotSurjective; }));

  // kernel map must hit exactly the fibre over the identity
  Hom f = make_hom(c4, c2, {0, 1, 0, 1});
  Hom bad_k = make_hom(FiniteMonoid(), c4, {0});
  CHECK_THROWS_MATCHES(
      Extension(bad_k, f), AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>(
          [](const AlgebraError& e) { return e.code == Err::NotKernel; }));
}

TEST_CASE("representatives") {
  auto e = eprod_c2_m2();  // X index = a*2 + m
  CHECK(e.representatives(1) == std::vector<Elt>{1, 3});  // (0,z), (1,z)
  CHECK(e.representatives(0) == std::vector<Elt>{0, 2});

  auto m2 = two_chain();
  auto triv = trivial_right_extension(m2);
  for (Elt m = 0; m < 2; ++m)
    CHECK(triv.representatives(m) == std::vector<Elt>{m});

  // M == M ->> 0: representatives over the point are the units of M
  auto left = trivial_left_extension(cyclic_group(4));
  CHECK(left.representatives(0) == std::vector<Elt>{0, 1, 2, 3});
  auto leftm2 = trivial_left_extension(m2);
  CHECK(leftm2.representatives(0) == std::vector<Elt>{0});
}

TEST_CASE("schreier data") {
  auto e = eprod_c2_m2();
  REQUIRE(e.is_schreier());
  const auto& d = e.schreier();
  CHECK(d.base_rep == std::vector<Elt>{0, 1});  // (0,1) and (0,z)
  CHECK(retraction_q(e, 3) == 1);               // (1,z) = k(1) + (0,z)
  for (Elt a = 0; a < e.K().order(); ++a) CHECK(retraction_q(e, e.k()(a)) == a);
  for (Elt m = 0; m < e.M().order(); ++m)
    CHECK(retraction_q(e, d.base_rep[m]) == 0);

  auto es3 = s3_extension();
  REQUIRE(es3.is_schreier());
  // group kernel: every element is a representative
  for (Elt m = 0; m < 2; ++m)
    CHECK(es3.representatives(m) == es3.fibre(m));

  auto bad = mult_m2m2_extension();
  CHECK_FALSE(bad.is_schreier());
  CHECK(bad.not_schreier_fibre() == 1);  // the fibre over z
  CHECK_THROWS_MATCHES(
      bad.schreier(), AlgebraError, Catch::Matchers::Predicate<AlgebraError>([](
          const AlgebraError& e) { return e.code == Err::NotSchreier; }));
}

TEST_CASE("retraction lemma identities") {
  for (const auto& e : {eprod_c2_m2(), s3_extension()}) {
    const auto& d = e.schreier();
    // uniqueness over a representative
    for (Elt m = 0; m < e.M().order(); ++m)
      for (Elt u : d.reps[m])
        for (Elt a = 0; a < e.K().order(); ++a)
          for (Elt a2 = 0; a2 < e.K().order(); ++a2)
            if (a != a2)
              CHECK(e.X().op(e.k()(a), u) != e.X().op(e.k()(a2), u));
    // any two representatives differ by a unique unit; |B_m| = |U(K)|
    auto uk = e.K().units();
    for (Elt m = 0; m < e.M().order(); ++m) {
      CHECK(d.reps[m].size() == uk.size());
      for (Elt u : d.reps[m])
        for (Elt v : d.reps[m]) {
          Elt a = rep_retraction(e, v, u);  // u = k(a)+v
          CHECK(e.K().is_unit(a));
        }
    }
    // q(x) + q(x') = q(k(q(x)) + x')
    for (Elt x = 0; x < e.X().order(); ++x)
      for (Elt x2 = 0; x2 < e.X().order(); ++x2)
        CHECK(e.K().op(d.q[x], d.q[x2]) ==
              d.q[e.X().op(e.k()(d.q[x]), x2)]);
  }
}

TEST_CASE("group kernel trichotomy") {
  for (const auto& e :
       {eprod_c2_m2(), s3_extension(), trivial_right_extension(two_chain()),
        trivial_left_extension(two_chain())}) {
    const auto& d = e.schreier();
    bool all_reps = true;
    for (Elt m = 0; m < e.M().order(); ++m)
      if (d.reps[m] != e.fibre(m)) all_reps = false;
    bool b1_is_kernel = d.reps[0] == e.fibre(0);
    CHECK(all_reps == e.K().is_group());
    CHECK(b1_is_kernel == e.K().is_group());
  }
}

TEST_CASE("cokernel property") {
  CHECK(cokernel_check(eprod_c2_m2()));
  CHECK(cokernel_check(trivial_right_extension(two_chain())));
  CHECK(cokernel_check(s3_extension()));
}

TEST_CASE("extension morphisms") {
  auto e = eprod_c2_m2();
  CHECK_NOTHROW(identity_morphism(e));

  // unit inclusion M -> K x M, m |-> (0,m)
  auto m2 = two_chain();
  auto triv = trivial_right_extension(m2);
  std::vector<Elt> a2(2);
  for (Elt m = 0; m < 2; ++m) a2[m] = m;  // (0,m) has index m
  auto unit_mor = make_ext_morphism(triv, e, Hom{triv.K(), e.K(), {0}},
                                    make_hom(m2, e.X(), a2));
  CHECK(unit_mor.alpha2.injective());

  // constant map fails f' o alpha2 = f
  CHECK_THROWS_MATCHES(
      make_ext_morphism(e, e, identity_hom(e.K()),
                        Hom{e.X(), e.X(), {0, 0, 0, 0}}),
      AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>([](const AlgebraError& err) {
        return err.code == Err::SquareFails;
      }));
}

TEST_CASE("morphism enumeration and short five") {
  auto e = eprod_c2_m2();
  auto morphisms = enumerate_ext_morphisms(e, e);
  CHECK(!morphisms.empty());
  for (const auto& m : morphisms) {
    if (m.alpha1.injective()) CHECK(m.alpha2.injective());
    if (m.alpha1.surjective()) CHECK(m.alpha2.surjective());
  }
}
