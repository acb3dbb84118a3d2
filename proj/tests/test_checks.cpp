#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schreier/checks.hpp"

using namespace schreier;

TEST_CASE("registry covers the numbered statements exactly once") {
  const auto& reg = statement_registry();
  std::set<std::string> ids;
  for (const auto& s : reg) CHECK(ids.insert(s.id).second);
  CHECK(reg.size() >= 44);
  for (const char* id :
       {"s2-representatives-lemma", "s2-group-structure", "s2-retraction-lemma",
        "s2-group-kernel", "s2-cokernel", "s2-rep-preservation",
        "s2-short-five", "s3-well-defined", "s3-action-axioms", "s3-patrick",
        "s4-point-retraction-lemma", "s4-point-action",
        "s4-s-reflexive-transitive", "s4-connector-criterion",
        "s5-re-coequalizer", "s5-joint-extremal-epi", "s5-re-symmetry",
        "s5-unique-witness", "s5-re-point", "s5-relation-on-e",
        "s5-self-central", "s5-chasles-point", "s5-chasles-symmetry",
        "s6-gamma-kernel-pair", "s6-gamma-classes", "s6-df-point",
        "s6-equivalence-roundtrip", "s6-mu-bar", "s6-chasles-identities",
        "s6-action-coincidence", "s6-df-semidirect", "s6-functoriality",
        "s7-conservative", "s7-mono-regepi", "s7-products", "s7-rho",
        "s7-pushforward", "s7-cofibration", "s7-cocartesian-unique",
        "s7-fibre-monoid", "s7-baer-oracle", "a-kernel-pairs", "a-mono-char",
        "a-regepi-char"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("small corpora are deterministic") {
  auto c1 = build_corpus(2, 4);
  auto c2 = build_corpus(2, 4);
  REQUIRE(c1.extensions.size() == c2.extensions.size());
  for (std::size_t i = 0; i < c1.extensions.size(); ++i)
    CHECK(c1.extensions[i] == c2.extensions[i]);
  CHECK(c1.morphisms.size() == c2.morphisms.size());
}

TEST_CASE("corpus at (1,1) is the trivial extension alone") {
  auto corpus = build_corpus(1, 1);
  REQUIRE(corpus.extensions.size() == 1);
  CHECK(corpus.extensions[0].X().order() == 1);
}

TEST_CASE("corpus at (2,4) contains the expected fibre over C2 by C2") {
  auto corpus = build_corpus(2, 4);
  int v4 = 0, c4 = 0, m2_kernel = 0;
  for (const auto& e : corpus.extensions) {
    if (e.M().order() != 2 || !e.M().is_group()) continue;
    if (e.K().order() == 2 && !e.K().is_group()) ++m2_kernel;
    if (e.K().order() != 2 || !e.K().is_group()) continue;
    if (is_isomorphic(e.X(), cyclic_group(4)).has_value()) ++c4;
    if (is_isomorphic(e.X(), product(cyclic_group(2), cyclic_group(2)).mon)
            .has_value())
      ++v4;
  }
  CHECK(v4 == 1);
  CHECK(c4 == 1);
  CHECK(m2_kernel == 2);  // both M2-kernel classes over C2
}

TEST_CASE("verify passes on a small corpus and reports instances") {
  auto corpus = build_corpus(2, 4);
  auto report = run_verify(corpus, 1);
  CHECK(report.all_pass());
  for (const auto& r : report.results) CHECK(r.instances > 0);
  auto j = report.to_json();
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == report.results.size());
}

TEST_CASE("worker count does not change the report") {
  auto corpus = build_corpus(2, 4);
  auto r1 = run_verify(corpus, 1);
  auto r3 = run_verify(corpus, 3);
  REQUIRE(r1.results.size() == r3.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) {
    CHECK(r1.results[i].pass == r3.results[i].pass);
    CHECK(r1.results[i].instances == r3.results[i].instances);
  }
}

TEST_CASE("an empty corpus passes vacuously with zero instances") {
  Corpus corpus;
  auto report = run_verify(corpus, 1);
  CHECK(report.all_pass());
  long total = 0;
  for (const auto& r : report.results) total += r.instances;
  CHECK(total == 0);
}

TEST_CASE("fault injection is detected and named") {
  auto corpus = build_corpus(2, 4);
  inject_fault(corpus, "qtable");
  CHECK(corpus.injected_fault == "qtable");
  auto report = run_verify(corpus, 1);
  CHECK_FALSE(report.all_pass());
  bool named = false;
  for (const auto& r : report.results)
    if (!r.pass && r.id == "s2-retraction-lemma") named = true;
  CHECK(named);
  CHECK_THROWS_AS(inject_fault(corpus, "nonsense"), AlgebraError);
}

TEST_CASE("open-question searches run on tiny bounds") {
  // every returned witness must genuinely have the claimed properties
  auto m2 = make_monoid({{0, 1}, {1, 1}});
  auto a4 = search_a4_failures(m2, cyclic_group(2));
  for (const auto& e : a4) {
    CHECK(e.is_schreier());
    CHECK_FALSE(induces_semimodule(e));
  }
  auto monoids = enumerate_monoids(3);
  auto nns = search_normal_non_schreier(monoids, 3);
  for (const auto& e : nns) {
    CHECK_FALSE(e.is_schreier());
    CHECK(cokernel_check(e));
  }
}

namespace {

// C2 with an absorbing element adjoined: commutative, not cancellative.
FiniteMonoid c2_plus_zero() {
  return make_monoid({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
}

}  // namespace

TEST_CASE("a normal epimorphism of order 3 that is not Schreier") {
  auto x = c2_plus_zero();
  auto m2 = make_monoid({{0, 1}, {1, 1}});
  Hom f = make_hom(x, m2, {0, 0, 1});
  Hom k = make_hom(cyclic_group(2), x, {0, 1});
  Extension e(k, f);
  CHECK_FALSE(e.is_schreier());
  CHECK(e.not_schreier_fibre() == 1);  // the singleton fibre over z
  CHECK(cokernel_check(e));            // yet f is a cokernel of its kernel
  // and the search finds it (up to relabeling of the carrier)
  std::vector<FiniteMonoid> monoids;
  for (int n = 1; n <= 3; ++n)
    for (auto& w : enumerate_monoids(n)) monoids.push_back(std::move(w));
  auto found = search_normal_non_schreier(monoids, 3);
  bool hit = false;
  for (const auto& w : found)
    if (w.X().order() == 3 && is_isomorphic(w.X(), x).has_value() &&
        is_isomorphic(w.M(), m2).has_value())
      hit = true;
  CHECK(hit);
}

TEST_CASE("a six-element extension whose pre-action fails A4") {
  // kernel K = C2 with absorbing z; phi_s is the idempotent endomorphism
  // killing the unit, g(s,s) = z; the crossed table is associative
  auto K = c2_plus_zero();
  auto M = cyclic_group(2);
  std::vector<Elt> phi{0, 0, 2};  // the non-identity endomorphism
  auto g = [&](Elt m, Elt m2) { return m == 1 && m2 == 1 ? 2 : 0; };
  int n = 6;
  std::vector<Elt> tab(n * n);
  for (Elt u = 0; u < n; ++u)
    for (Elt v = 0; v < n; ++v) {
      Elt a = u / 2, m = u % 2, b = v / 2, m2 = v % 2;
      Elt bb = m == 1 ? phi[b] : b;
      tab[u * n + v] = K.op(K.op(a, bb), g(m, m2)) * 2 + M.op(m, m2);
    }
  auto X = FiniteMonoid::from_flat(6, std::move(tab));
  Extension e(make_hom(K, X, {0, 2, 4}), make_hom(X, M, {0, 1, 0, 1, 0, 1}));
  REQUIRE(e.is_schreier());
  auto act = induced_pre_action(e);  // A1-A3 audited below, A4 must fail
  CHECK(act[1] == std::vector<Elt>{0, 0, 2});
  for (Elt a = 0; a < 3; ++a) CHECK(act[0][a] == a);
  for (Elt m = 0; m < 2; ++m) {
    CHECK(act[m][0] == 0);
    for (Elt a = 0; a < 3; ++a)
      for (Elt b = 0; b < 3; ++b)
        CHECK(act[m][K.op(a, b)] == K.op(act[m][a], act[m][b]));
  }
  // (s.s)*1 = 1 but s*(s*1) = 0
  CHECK(act[M.op(1, 1)][1] == 1);
  CHECK(act[1][act[1][1]] == 0);
  CHECK_FALSE(induces_semimodule(e));
  // the search over this kernel finds a witness
  CHECK_FALSE(search_a4_failures(K, M).empty());
}
