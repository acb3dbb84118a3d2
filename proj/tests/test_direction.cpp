#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "schreier/direction.hpp"

using namespace schreier;
using fixtures::s3_extension;
using fixtures::two_chain;

namespace {

Extension eprod() { return product_extension(cyclic_group(2), two_chain()); }

}  // namespace

TEST_CASE("R_E of the trivial extension is the diagonal") {
  auto e = trivial_right_extension(two_chain());
  auto re = build_RE(e);
  CHECK(re.rel.pairs.size() == 2);
  for (auto [x, z] : re.rel.pairs) CHECK(x == z);
  CHECK(re.unique_witness);
}

TEST_CASE("R_E equals Eq(f) exactly when the kernel is a group") {
  auto e = eprod();
  auto re = build_RE(e);
  auto eqf = kernel_objects(e.f()).eqf;
  CHECK(re.rel.pairs == eqf.pairs);
  CHECK(re.rel.pairs.size() == 8);
  CHECK(re.rel.symmetric());

  auto es3 = s3_extension();
  auto re3 = build_RE(es3);
  CHECK(re3.rel.pairs == kernel_objects(es3.f()).eqf.pairs);

  // non-group commutative kernel: R_E is a proper, non-symmetric subrelation
  auto em2 = product_extension(two_chain(), cyclic_group(2));
  auto rem2 = build_RE(em2);
  auto eqm2 = kernel_objects(em2.f()).eqf;
  CHECK(rem2.rel.pairs.size() < eqm2.pairs.size());
  CHECK_FALSE(rem2.rel.symmetric());
  CHECK(rem2.rel.transitive());
}

TEST_CASE("Chasles relation sizes") {
  CHECK(build_chasles(trivial_right_extension(two_chain()),
                      build_RE(trivial_right_extension(two_chain())))
            .triples.size() == 2);
  auto e = eprod();
  CHECK(build_chasles(e, build_RE(e)).triples.size() == 16);
  auto es3 = s3_extension();
  CHECK(build_chasles(es3, build_RE(es3)).triples.size() == 54);
}

TEST_CASE("Chasles point structure") {
  auto e = eprod();
  auto re = build_RE(e);
  auto ch = build_chasles(e, re);
  // retraction picks the first witness: qbar1(x, k(a)+x, ...) = a
  for (int i = 0; i < ch.pem.order(); ++i) {
    auto [x, y, z] = ch.triples[i];
    CHECK(ch.qbar1[i] == re_witness(re, x, y));
    (void)z;
  }
}

TEST_CASE("self connector") {
  auto es3 = s3_extension();
  auto re = build_RE(es3);
  auto c = self_connector(es3, re);
  const auto& X = es3.X();
  for (const auto& t : c.triples)
    CHECK(c.value(t[0], t[1], t[2]) == X.op(X.op(t[0], X.inverse(t[1])), t[2]));

  auto triv = trivial_right_extension(two_chain());
  auto ctriv = self_connector(triv, build_RE(triv));
  for (Elt x = 0; x < 2; ++x) CHECK(ctriv.value(x, x, x) == x);

  auto e = eprod();
  CHECK_NOTHROW(self_connector(e, build_RE(e)));
}

TEST_CASE("df by coequalizer") {
  auto triv = trivial_right_extension(two_chain());
  auto b = build_direction(triv);
  CHECK(b.df.order() == 2);
  CHECK(is_isomorphic(b.df, two_chain()).has_value());
  CHECK(b.point.K().order() == 1);

  auto e = eprod();
  auto be = build_direction(e);
  CHECK(be.df.order() == 4);
  CHECK(is_isomorphic(be.df, e.X()).has_value());

  auto es3 = s3_extension();
  auto b3 = build_direction(es3);
  CHECK(b3.re.rm.mon.order() == 18);
  CHECK(b3.df.order() == 6);
  CHECK(is_isomorphic(b3.df, es3.X()).has_value());
}

TEST_CASE("df by semidirect agrees with the coequalizer") {
  for (const auto& e : {trivial_right_extension(two_chain()), eprod(),
                        s3_extension(),
                        product_extension(cyclic_group(3), two_chain())}) {
    auto b = build_direction(e);
    auto cmp = df_comparison(b);
    CHECK(cmp.bijective());
  }
}

TEST_CASE("df point action coincides with the induced action") {
  for (const auto& e : {eprod(), s3_extension()}) {
    auto b = build_direction(e);
    CHECK(point_action(b.point) == to_semimodule(e));
  }
}

TEST_CASE("internal monoid of a point") {
  auto prodpt = semidirect(trivial_semimodule(two_chain(), cyclic_group(2)));
  auto im = point_to_internal_monoid(prodpt);
  // mu((a,m),(b,m)) = (a+b, m)
  int nm = 2;
  for (Elt a = 0; a < 2; ++a)
    for (Elt b = 0; b < 2; ++b)
      for (Elt m = 0; m < 2; ++m) {
        Elt x = a * nm + m, y = b * nm + m;
        CHECK(im.mu(im.eqf.index(x, y)) == ((a + b) % 2) * nm + m);
      }

  // trivial kernel: mu is forced onto the diagonal
  auto trivpt = semidirect(trivial_semimodule(two_chain(), FiniteMonoid()));
  auto imt = point_to_internal_monoid(trivpt);
  for (Elt x = 0; x < 2; ++x) CHECK(imt.mu(imt.eqf.index(x, x)) == x);
}

TEST_CASE("internal monoid round trips") {
  auto s3 = fixtures::sym3();
  Hom f = make_hom(s3, cyclic_group(2), {0, 1, 1, 0, 0, 1});
  Hom k = make_hom(cyclic_group(3), s3, {0, 3, 4});
  Hom sec = make_hom(cyclic_group(2), s3, {0, 1});
  auto p = make_point(k, f, sec);
  auto im = point_to_internal_monoid(p);
  auto p2 = internal_monoid_to_point(im.E, im.mu, im.unit);
  CHECK(p2.q == p.q);
  CHECK(p2.s.map == p.s.map);

  // and the other way round
  auto im2 = point_to_internal_monoid(p2);
  CHECK(im2.mu.map == im.mu.map);
  CHECK(im2.unit.map == im.unit.map);
}

TEST_CASE("omega violating a law is rejected") {
  auto prodpt = semidirect(trivial_semimodule(cyclic_group(2), cyclic_group(2)));
  auto e = prodpt.underlying_extension();
  auto eqf = relation_monoid(kernel_objects(e.f()).eqf);
  // the second projection is a hom but fails commutativity
  std::vector<Elt> proj2(eqf.mon.order());
  for (int i = 0; i < eqf.mon.order(); ++i) proj2[i] = eqf.elems[i].second;
  Hom omega = make_hom(eqf.mon, e.X(), std::move(proj2));
  CHECK_THROWS_MATCHES(
      internal_monoid_to_point(e, omega, prodpt.s), AlgebraError,
      Catch::Matchers::Predicate<AlgebraError>([](const AlgebraError& err) {
        return err.code == Err::NotInternalMonoid;
      }));
}

TEST_CASE("mu_bar on df") {
  auto e = eprod();
  auto b = build_direction(e);
  // mu_bar(gamma(x,k(a)+x), gamma(y,k(b)+y)) = gamma(x, k(a)+k(b)+x) was
  // asserted during construction; the internal monoid built from the df
  // point carries the same multiplication
  auto im = internal_monoid_structure(b);
  for (int i = 0; i < b.eqf_bar.mon.order(); ++i)
    CHECK(im.mu(i) == b.mu_bar(i));
}

TEST_CASE("direction of the identity morphism is the identity") {
  auto e = eprod();
  auto b = build_direction(e);
  auto d = direction_on_morphism(identity_morphism(e), b, b);
  CHECK(d.d_alpha.map == identity_hom(b.df).map);
}

TEST_CASE("direction of a morphism between different extensions") {
  // unit inclusion of the trivial extension into the product extension
  auto m2 = two_chain();
  auto triv = trivial_right_extension(m2);
  auto e = eprod();
  std::vector<Elt> a2(2);
  for (Elt m = 0; m < 2; ++m) a2[m] = m;
  auto mor = make_ext_morphism(triv, e, Hom{triv.K(), e.K(), {0}},
                               make_hom(m2, e.X(), a2));
  auto bt = build_direction(triv), be = build_direction(e);
  auto d = direction_on_morphism(mor, bt, be);
  CHECK(d.d_alpha.injective());
}
