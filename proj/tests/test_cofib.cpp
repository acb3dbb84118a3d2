#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "schreier/cofib.hpp"

using namespace schreier;
using fixtures::two_chain;

namespace {

Semimodule c2_triv_c2() {  // M = C2, K = C2
  return trivial_semimodule(cyclic_group(2), cyclic_group(2));
}

FactorSystem c4_system() {  // g(sigma,sigma) = 1
  return make_factor_system(c2_triv_c2(), {{0, 0}, {0, 1}});
}

}  // namespace

TEST_CASE("crossed products") {
  auto s = c2_triv_c2();
  auto split = crossed_product(zero_factor_system(s));
  CHECK(split.X() == semidirect(s).B());
  CHECK(is_isomorphic(split.X(), fixtures::klein_four()).has_value());

  auto c4class = crossed_product(c4_system());
  CHECK(is_isomorphic(c4class.X(), cyclic_group(4)).has_value());

  CHECK_THROWS_MATCHES(
      make_factor_system(s, {{0, 1}, {0, 0}}), AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>([](const AlgebraError& e) {
        return e.code == Err::InvalidFactorSystem;
      }));
}

TEST_CASE("factor system enumeration respects the cocycle law") {
  // inversion action of C2 on C3 admits only the zero system
  auto inv = make_semimodule(cyclic_group(2), cyclic_group(3),
                             {{0, 1, 2}, {0, 2, 1}});
  CHECK(enumerate_factor_systems(inv).size() == 1);
  // trivial action of C2 on C2 admits both
  CHECK(enumerate_factor_systems(c2_triv_c2()).size() == 2);
}

TEST_CASE("pushforward along the identity reproduces the extension") {
  auto e = crossed_product(c4_system());
  auto pf = pushforward(e, identity_hom(e.K()), to_semimodule(e));
  CHECK(fibre_isomorphic(pf.ext, e));
  CHECK(is_iso_morphism(pf.cocart));
}

TEST_CASE("pushforward of the C4 class along C2 -> 0 is trivial") {
  auto e = crossed_product(c4_system());
  auto target = trivial_semimodule(cyclic_group(2), FiniteMonoid());
  Hom collapse{e.K(), FiniteMonoid(), {0, 0}};
  auto pf = pushforward(e, collapse, target);
  CHECK(pf.ext.X().order() == 2);
  CHECK(fibre_isomorphic(pf.ext, trivial_right_extension(cyclic_group(2))));
}

TEST_CASE("pushforward of a split extension stays split") {
  auto m2 = two_chain();
  auto s = trivial_semimodule(cyclic_group(2), m2);  // K = M2 over C2
  auto e = crossed_product(zero_factor_system(s));
  // collapse M2 onto the trivial monoid is a hom; use the unique hom M2->C2
  Hom h = make_hom(m2, cyclic_group(2), {0, 0});
  auto target = trivial_semimodule(cyclic_group(2), cyclic_group(2));
  auto pf = pushforward(e, h, target);
  CHECK(fibre_isomorphic(pf.ext,
                         crossed_product(zero_factor_system(target))));
}

TEST_CASE("cocartesian factorization") {
  auto e = crossed_product(c4_system());
  auto pf = pushforward(e, identity_hom(e.K()), to_semimodule(e));

  // lambda = the cocartesian morphism itself, beta1 = id
  auto beta = cocartesian_factorize(pf, pf.cocart, identity_hom(pf.ext.K()));
  CHECK(compose(beta.alpha2, pf.cocart.alpha2).map == pf.cocart.alpha2.map);

  // a kernel map violating the hypothesis is rejected
  Hom wrong = make_hom(pf.ext.K(), pf.ext.K(), {0, 0});
  CHECK_THROWS_MATCHES(
      cocartesian_factorize(pf, pf.cocart, wrong), AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>([](const AlgebraError& err) {
        return err.code == Err::FactorizationHypothesisFails;
      }));
}

TEST_CASE("product extension") {
  auto e = product_extension(cyclic_group(2), two_chain());
  auto with_unit = product_ext(e, trivial_right_extension(two_chain()));
  CHECK(fibre_isomorphic(with_unit.ext, e));

  auto sq = product_ext(e, e);
  CHECK(sq.ext.X().order() == 8);
  CHECK(sq.ext.K().order() == 4);

  auto cp1 = crossed_product(zero_factor_system(c2_triv_c2()));
  auto cp2 = crossed_product(c4_system());
  auto pr = product_ext(cp1, cp2);
  CHECK(pr.ext.X().order() == 8);
  CHECK(is_isomorphic(pr.ext.K(), fixtures::klein_four()).has_value());
}

TEST_CASE("baer sums against the factor system oracle") {
  auto s = c2_triv_c2();
  auto systems = enumerate_factor_systems(s);
  REQUIRE(systems.size() == 2);
  for (const auto& g1 : systems)
    for (const auto& g2 : systems) {
      auto sum = baer_sum(crossed_product(g1), crossed_product(g2));
      auto expect = crossed_product(add_factor_systems(g1, g2));
      CHECK(fibre_isomorphic(sum, expect));
    }
}

TEST_CASE("baer sum unit and the C4 + C4 identity") {
  auto split = crossed_product(zero_factor_system(c2_triv_c2()));
  auto c4class = crossed_product(c4_system());
  CHECK(fibre_isomorphic(baer_sum(c4class, split), c4class));
  CHECK(fibre_isomorphic(baer_sum(c4class, c4class), split));
  CHECK_THROWS_MATCHES(
      baer_sum(c4class, trivial_right_extension(cyclic_group(2))),
      AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>([](const AlgebraError& err) {
        return err.code == Err::FibreMismatch;
      }));
}

TEST_CASE("fibre classification modes agree") {
  auto check_modes = [](const Semimodule& s, std::size_t expected) {
    auto fs = fiber_classify(s, ClassifyMode::factor_system);
    auto bf = fiber_classify(s, ClassifyMode::brute_force);
    CHECK(fs.size() == expected);
    CHECK(bf.size() == expected);
    REQUIRE(fs.size() == bf.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      bool matched = false;
      for (std::size_t j = 0; j < bf.size(); ++j)
        if (fibre_isomorphic(fs[i], bf[j])) matched = true;
      CHECK(matched);
    }
  };
  check_modes(c2_triv_c2(), 2);
  check_modes(trivial_semimodule(two_chain(), cyclic_group(2)), 1);
  check_modes(trivial_semimodule(cyclic_group(2), two_chain()), 2);
}

TEST_CASE("cohomology monoids") {
  auto h2 = cohomology_monoid(c2_triv_c2());
  CHECK(h2.classes.size() == 2);
  CHECK(h2.monoid.is_group());
  CHECK(is_isomorphic(h2.monoid, cyclic_group(2)).has_value());
  CHECK(is_isomorphic(h2.classes[1].X(), cyclic_group(4)).has_value());

  // M2 kernel over C2: a genuinely non-group cohomology monoid
  auto h2m = cohomology_monoid(trivial_semimodule(cyclic_group(2), two_chain()));
  CHECK(h2m.classes.size() == 2);
  CHECK_FALSE(h2m.monoid.is_group());
  CHECK(is_isomorphic(h2m.monoid, two_chain()).has_value());
  CHECK(h2m.monoid.op(1, 1) == 1);  // the nontrivial class is idempotent

  // C2 kernel over M2: the coboundary collapses everything
  auto h2t = cohomology_monoid(trivial_semimodule(two_chain(), cyclic_group(2)));
  CHECK(h2t.classes.size() == 1);
  CHECK(h2t.monoid.order() == 1);
}

TEST_CASE("classification bounds") {
  auto big = trivial_semimodule(cyclic_group(5), cyclic_group(2));
  CHECK_THROWS_MATCHES(
      fiber_classify(big, ClassifyMode::brute_force), AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>([](const AlgebraError& err) {
        return err.code == Err::BoundExceeded;
      }));
}
