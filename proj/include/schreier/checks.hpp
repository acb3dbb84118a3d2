// The statement-check harness: one executable check per numbered claim,
// run exhaustively over a corpus (with deterministic sampling caps where a
// claim quantifies over pairs of morphisms).

#ifndef SCHREIER_CHECKS_HPP_
#define SCHREIER_CHECKS_HPP_

#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "schreier/corpus.hpp"
#include "schreier/io.hpp"

namespace schreier {

struct CheckResult {
  std::string id;
  bool pass = true;
  long instances = 0;
  std::string counterexample;  // empty when passing
  double ms = 0;
};

// ---------------------------------------------------------------------------
// Precomputed per-corpus data shared by the checks

struct PushforwardInstance {
  int src;
  Hom alpha1;
  Semimodule target;
  std::optional<PushforwardResult> pf;
  std::string error;
};

struct FibreData {
  Semimodule s;
  std::vector<FactorSystem> systems;
  std::vector<Extension> classes;
};

struct Analysis {
  const Corpus* corpus = nullptr;
  int jobs = 1;
  std::vector<char> is_cc;
  std::vector<std::optional<Semimodule>> sem;
  std::vector<std::optional<REData>> re;
  std::vector<std::optional<DirectionBundle>> bundle;
  std::vector<std::string> build_error;  // per extension, diagnostics
  std::vector<int> cc_exts;              // indices with cancellative kernels
  std::vector<std::size_t> cc_morphs;    // morphism indices between cc ends
  std::vector<std::vector<std::size_t>> out_edges, in_edges;  // per extension
  std::vector<PushforwardInstance> pushforwards;
  std::vector<FibreData> fibres;  // |K|*|M| <= 8, unique semimodules
};

namespace checks_detail {

// caps for the statements that quantify over pairs of morphisms
constexpr std::size_t kMorphProbeCap = 2500;
constexpr std::size_t kBetaSampleCap = 6;
constexpr std::size_t kUniqueInstanceCap = 250;
constexpr int kProductPairCap = 400;
constexpr int kConnectorHomSearchSize = 32;

inline std::string describe(const Extension& e) {
  std::ostringstream os;
  os << "K(" << e.K().order() << ")>-->X(" << e.X().order() << ")-->>M("
     << e.M().order() << ")";
  return os.str();
}

inline void fail(CheckResult& r, const std::string& msg) {
  if (r.pass) {
    r.pass = false;
    r.counterexample = msg;
  }
}

inline void fail_ext(CheckResult& r, int i, const Extension& e,
                     const std::string& msg) {
  fail(r, "extension #" + std::to_string(i) + " [" + describe(e) + "]: " + msg);
}

}  // namespace checks_detail

inline Analysis analyze(const Corpus& corpus) {
  Analysis a;
  a.corpus = &corpus;
  std::size_t n = corpus.extensions.size();
  a.is_cc.assign(n, 0);
  a.sem.resize(n);
  a.re.resize(n);
  a.bundle.resize(n);
  a.build_error.assign(n, "");

  for (std::size_t i = 0; i < n; ++i) {
    const Extension& e = corpus.extensions[i];
    a.is_cc[i] = e.K().is_cancellative() && e.K().is_commutative();
    try {
      if (induces_semimodule(e)) a.sem[i] = to_semimodule(e);
      a.re[i] = build_RE(e);
      if (a.is_cc[i]) {
        a.bundle[i] = build_direction(e);
        a.cc_exts.push_back(static_cast<int>(i));
      }
    } catch (const std::exception& ex) {
      a.build_error[i] = ex.what();
    }
  }
  a.out_edges.resize(n);
  a.in_edges.resize(n);
  for (std::size_t m = 0; m < corpus.morphisms.size(); ++m) {
    const auto& ms = corpus.morphisms[m];
    a.out_edges[ms.src].push_back(m);
    a.in_edges[ms.dst].push_back(m);
    if (a.is_cc[ms.src] && a.is_cc[ms.dst] && a.bundle[ms.src] &&
        a.bundle[ms.dst])
      a.cc_morphs.push_back(m);
  }

  // pushforward instances: identity, collapse-to-trivial, and the first
  // nontrivial action-preserving map into a nearby fibre
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.sem[i]) continue;
    const Extension& e = corpus.extensions[i];
    auto add = [&](Hom h, Semimodule target) {
      PushforwardInstance inst{static_cast<int>(i), std::move(h),
                               std::move(target), std::nullopt, ""};
      try {
        inst.pf = pushforward(e, inst.alpha1, inst.target);
      } catch (const std::exception& ex) {
        inst.error = ex.what();
      }
      a.pushforwards.push_back(std::move(inst));
    };
    add(identity_hom(e.K()), *a.sem[i]);
    add(Hom{e.K(), FiniteMonoid(), std::vector<Elt>(e.K().order(), 0)},
        trivial_semimodule(e.M(), FiniteMonoid()));
    for (std::size_t j = i + 1; j < std::min(i + 4, n); ++j) {
      if (!a.sem[j] || !(corpus.extensions[j].M() == e.M())) continue;
      bool found = false;
      for (const Hom& h : enumerate_homs(e.K(), corpus.extensions[j].K())) {
        bool zero = true;
        for (Elt v : h.map) zero = zero && v == 0;
        if (zero || !is_action_preserving(h, *a.sem[i], *a.sem[j])) continue;
        add(h, *a.sem[j]);
        found = true;
        break;
      }
      if (found) break;
    }
  }

  // fibres: unique semimodules with carrier at most 8, classified
  std::set<std::vector<Elt>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.sem[i]) continue;
    const Semimodule& s = *a.sem[i];
    if (s.K.order() * s.M.order() > 8) continue;
    std::vector<Elt> key = s.M.table();
    key.insert(key.end(), s.K.table().begin(), s.K.table().end());
    for (const auto& row : s.act) key.insert(key.end(), row.begin(), row.end());
    if (!seen.insert(key).second) continue;
    FibreData fd{s, enumerate_factor_systems(s), {}};
    std::vector<Extension> cands;
    for (const auto& fs : fd.systems) cands.push_back(crossed_product(fs));
    fd.classes = dedupe_fibre(std::move(cands));
    a.fibres.push_back(std::move(fd));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Representatives, retractions and morphisms of extensions

namespace checks {

using checks_detail::fail;
using checks_detail::fail_ext;

inline void s2_representatives_lemma(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    const SchreierData* d = e.try_schreier();
    if (!d) continue;
    ++r.instances;
    auto uk = e.K().units();
    for (Elt m = 0; m < e.M().order(); ++m)
      for (Elt u : d->reps[m]) {
        for (Elt x = 0; x < e.K().order(); ++x)
          for (Elt y = x + 1; y < e.K().order(); ++y)
            if (e.X().op(e.k()(x), u) == e.X().op(e.k()(y), u))
              return fail_ext(r, i, e, "item 1 fails at u=" + std::to_string(u));
        for (Elt v : d->reps[m]) {
          int units_found = 0;
          for (Elt x : uk)
            if (e.X().op(e.k()(x), v) == u) ++units_found;
          if (units_found != 1)
            return fail_ext(r, i, e, "item 2 fails at m=" + std::to_string(m));
        }
        for (Elt x : uk)
          if (!std::binary_search(d->reps[m].begin(), d->reps[m].end(),
                                  e.X().op(e.k()(x), u)))
            return fail_ext(r, i, e, "item 3 fails at m=" + std::to_string(m));
      }
  }
}

inline void s2_group_structure(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    const SchreierData* d = e.try_schreier();
    if (!d) continue;
    ++r.instances;
    std::size_t nu = e.K().units().size();
    for (Elt m = 0; m < e.M().order(); ++m) {
      if (d->reps[m].size() != nu)
        return fail_ext(r, i, e, "|B_m| != |U(K)| at m=" + std::to_string(m));
      // theta_{m,u} : U(K) -> B_m is a bijection for each u
      for (Elt u : d->reps[m]) {
        std::set<Elt> image;
        for (Elt x : e.K().units()) image.insert(e.X().op(e.k()(x), u));
        if (image.size() != nu ||
            !std::includes(d->reps[m].begin(), d->reps[m].end(), image.begin(),
                           image.end()))
          return fail_ext(r, i, e, "theta is not onto B_m");
      }
    }
  }
}

inline void s2_retraction_lemma(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    const SchreierData* d = e.try_schreier();
    if (!d) continue;
    ++r.instances;
    for (Elt x = 0; x < e.X().order(); ++x)
      if (e.X().op(e.k()(d->q[x]), d->base_rep[e.f()(x)]) != x)
        return fail_ext(r, i, e,
                        "x != k(q(x)) + u at x=" + std::to_string(x));
    for (Elt c = 0; c < e.K().order(); ++c)
      if (d->q[e.k()(c)] != c)
        return fail_ext(r, i, e, "q(k(a)) != a at a=" + std::to_string(c));
    for (Elt m = 0; m < e.M().order(); ++m)
      for (Elt u : d->reps[m]) {
        if (rep_retraction(e, u, u) != 0)
          return fail_ext(r, i, e, "q_u(u) != 0 at u=" + std::to_string(u));
        for (Elt c = 0; c < e.K().order(); ++c) {
          Elt lhs = e.X().op(u, e.k()(c));
          if (e.X().op(e.k()(rep_retraction(e, u, lhs)), u) != lhs)
            return fail_ext(r, i, e, "item 3 fails at u=" + std::to_string(u));
        }
      }
    for (Elt x = 0; x < e.X().order(); ++x)
      for (Elt y = 0; y < e.X().order(); ++y)
        if (e.K().op(d->q[x], d->q[y]) != d->q[e.X().op(e.k()(d->q[x]), y)])
          return fail_ext(r, i, e, "item 4 fails");
  }
}

inline void s2_group_kernel(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    const SchreierData* d = e.try_schreier();
    if (!d) continue;
    ++r.instances;
    bool all_reps = true;
    for (Elt m = 0; m < e.M().order(); ++m)
      if (d->reps[m] != e.fibre(m)) all_reps = false;
    bool b1_kernel = d->reps[0] == e.fibre(0);
    if (all_reps != e.K().is_group() || b1_kernel != e.K().is_group())
      return fail_ext(r, i, e, "trichotomy fails");
  }
}

inline void s2_cokernel(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    if (!e.is_schreier()) continue;
    ++r.instances;
    if (!cokernel_check(e))
      return fail_ext(r, i, e, "f is not a cokernel of k");
  }
}

inline void s2_rep_preservation(const Analysis& a, CheckResult& r) {
  for (const auto& ms : a.corpus->morphisms) {
    const Extension& s = a.corpus->extensions[ms.src];
    const Extension& d = a.corpus->extensions[ms.dst];
    const auto& sd = s.schreier();
    const auto& dd = d.schreier();
    ++r.instances;
    // a base representative maps to a representative by construction;
    // the proposition says all of them therefore do
    for (Elt m = 0; m < s.M().order(); ++m)
      for (Elt u : sd.reps[m])
        if (!std::binary_search(dd.reps[m].begin(), dd.reps[m].end(),
                                ms.a2[u]))
          return fail(r, "morphism " + std::to_string(ms.src) + "->" +
                             std::to_string(ms.dst) +
                             " drops a representative at m=" +
                             std::to_string(m));
  }
}

inline void s2_short_five(const Analysis& a, CheckResult& r) {
  for (const auto& ms : a.corpus->morphisms) {
    const Extension& s = a.corpus->extensions[ms.src];
    const Extension& d = a.corpus->extensions[ms.dst];
    ++r.instances;
    Hom a1{s.K(), d.K(), ms.a1}, a2{s.X(), d.X(), ms.a2};
    if (a1.injective() && !a2.injective())
      return fail(r, "injectivity not inherited by alpha2");
    if (a1.surjective() && !a2.surjective())
      return fail(r, "surjectivity not inherited by alpha2");
  }
}

// ---------------------------------------------------------------------------
// Induced actions

inline void s3_well_defined(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    ++r.instances;
    try {
      induced_pre_action(e);  // audits every alternative representative
    } catch (const AlgebraError& ex) {
      return fail_ext(r, i, e, ex.what());
    }
  }
}

inline void s3_action_axioms(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    ++r.instances;
    auto act = induced_pre_action(e);
    for (Elt c = 0; c < e.K().order(); ++c)
      if (act[0][c] != c) return fail_ext(r, i, e, "A1 fails");
    for (Elt m = 0; m < e.M().order(); ++m) {
      if (act[m][0] != 0) return fail_ext(r, i, e, "A2 fails");
      for (Elt c = 0; c < e.K().order(); ++c)
        for (Elt c2 = 0; c2 < e.K().order(); ++c2)
          if (act[m][e.K().op(c, c2)] != e.K().op(act[m][c], act[m][c2]))
            return fail_ext(r, i, e, "A3 fails");
    }
    if (a.is_cc[i]) {
      try {
        make_semimodule(e.M(), e.K(), act);
      } catch (const AlgebraError&) {
        return fail_ext(r, i, e, "A4 fails for a cancellative kernel");
      }
    }
  }
}

inline void s3_patrick(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    const Extension& e = a.corpus->extensions[i];
    ++r.instances;
    if (!patrick_check(e))
      return fail_ext(r, i, e, "x + k(a) != k(f(x)*a) + x");
  }
}

// ---------------------------------------------------------------------------
// Points, S-reflexive relations and connectors

inline void for_each_sample_point(
    const Analysis& a, const std::function<bool(int, const SchreierPoint&)>& f) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    if (!a.sem[i]) continue;
    if (!f(static_cast<int>(i), semidirect(*a.sem[i]))) return;
  }
  for (int i : a.cc_exts)
    if (a.bundle[i] && !f(i, a.bundle[i]->point)) return;
}

inline void s4_point_retraction_lemma(const Analysis& a, CheckResult& r) {
  for_each_sample_point(a, [&](int i, const SchreierPoint& p) {
    ++r.instances;
    const auto& B = p.B();
    for (Elt c = 0; c < p.K().order(); ++c)
      if (p.q[p.k(c)] != c) {
        fail_ext(r, i, a.corpus->extensions[i], "qk != id");
        return false;
      }
    for (Elt m = 0; m < p.M().order(); ++m) {
      if (p.q[p.s(m)] != 0) {
        fail_ext(r, i, a.corpus->extensions[i], "qs != 0");
        return false;
      }
      for (Elt c = 0; c < p.K().order(); ++c) {
        Elt b = B.op(p.s(m), p.k(c));
        if (B.op(p.k(p.q[b]), p.s(m)) != b) {
          fail_ext(r, i, a.corpus->extensions[i], "item 3 fails");
          return false;
        }
      }
    }
    for (Elt b = 0; b < B.order(); ++b)
      for (Elt b2 = 0; b2 < B.order(); ++b2)
        if (p.q[B.op(b, b2)] !=
            p.K().op(p.q[b], p.q[B.op(p.s(p.f(b)), p.k(p.q[b2]))])) {
          fail_ext(r, i, a.corpus->extensions[i], "item 4 fails");
          return false;
        }
    return true;
  });
}

inline void s4_point_action(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    if (!a.sem[i]) continue;
    ++r.instances;
    auto p = semidirect(*a.sem[i]);
    Semimodule back = point_action(p);
    if (!(back == *a.sem[i]))
      return fail_ext(r, i, a.corpus->extensions[i],
                      "point action round trip fails");
    for (Elt m = 0; m < p.M().order(); ++m)
      for (Elt c = 0; c < p.K().order(); ++c)
        if (back.apply(m, c) != p.q[p.B().op(p.s(m), p.k(c))])
          return fail_ext(r, i, a.corpus->extensions[i],
                          "sigma(m)(a) != q(s(m)+k(a))");
  }
}

inline void s4_s_reflexive(const Analysis& a, CheckResult& r) {
  for (const auto& m : a.corpus->monoids) {
    ++r.instances;
    auto sp = s_reflexive_check(diagonal_relation(m));
    if (!sp) return fail(r, "diagonal relation must be S-reflexive");
  }
  for (int i : a.cc_exts) {
    if (!a.re[i]) continue;
    ++r.instances;
    const auto& rel = a.re[i]->rel;
    auto sp = s_reflexive_check(rel);
    if (!sp)
      return fail_ext(r, i, a.corpus->extensions[i], "R_E not S-reflexive");
    if (!rel.transitive())
      return fail_ext(r, i, a.corpus->extensions[i],
                      "S-reflexive relation not transitive");
    if (rel.symmetric() != sp->K1.mon.is_group())
      return fail_ext(r, i, a.corpus->extensions[i],
                      "symmetry does not match kernel being a group");
  }
}

inline void s4_connector_criterion(const Analysis& a, CheckResult& r) {
  for (const auto& m : a.corpus->monoids) {
    ++r.instances;
    auto d = diagonal_relation(m);
    auto c = connector(d, d);
    if (!c) return fail(r, "diagonal relations must centralize each other");
  }
  for (int i : a.cc_exts) {
    if (!a.re[i]) continue;
    const Extension& e = a.corpus->extensions[i];
    std::array<Elt, 3> w{};
    auto c = connector(a.re[i]->rel, a.re[i]->rel, &w);
    ++r.instances;
    if (!c) return fail_ext(r, i, e, "criterion fails on (R_E, R_E)");
    if (c->trip_mon.order() > checks_detail::kConnectorHomSearchSize) continue;
    // uniqueness among all homomorphisms satisfying the identities
    int matches = 0;
    for (const Hom& h : enumerate_homs(c->trip_mon, e.X())) {
      bool ok = true;
      for (int t = 0; t < c->trip_mon.order() && ok; ++t) {
        auto [x, y, z] = c->triples[t];
        if (x == y && h(t) != z) ok = false;
        if (y == z && h(t) != x) ok = false;
      }
      if (ok) {
        ++matches;
        if (h.map != c->p.map)
          return fail_ext(r, i, e, "a second connector exists");
      }
    }
    if (matches != 1) return fail_ext(r, i, e, "connector not unique");
  }
}

// ---------------------------------------------------------------------------
// The relation R_E and its Chasles relation

inline void s5_re_coequalizer(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    if (!a.re[i]) continue;
    const Extension& e = a.corpus->extensions[i];
    ++r.instances;
    Congruence c = congruence_closure(e.X(), a.re[i]->rel.pairs);
    for (Elt x = 0; x < e.X().order(); ++x)
      for (Elt y = 0; y < e.X().order(); ++y)
        if (c.same(x, y) != (e.f()(x) == e.f()(y)))
          return fail_ext(r, i, e, "congruence of R_E is not Eq(f)");
  }
}

inline void s5_joint_extremal_epi(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    if (!a.re[i]) continue;
    const Extension& e = a.corpus->extensions[i];
    const auto& d = e.schreier();
    ++r.instances;
    for (Elt x = 0; x < e.X().order(); ++x)
      for (Elt y = 0; y < e.X().order(); ++y) {
        if (e.f()(x) != e.f()(y)) continue;
        Elt u = d.base_rep[e.f()(x)];
        Elt jy = e.X().op(e.k()(d.q[y]), u);
        if (e.X().op(e.k()(d.q[x]), u) != x || !a.re[i]->rel.contains(u, jy) ||
            jy != y)
          return fail_ext(r, i, e, "generation decomposition fails");
      }
  }
}

inline void s5_re_symmetry(const Analysis& a, CheckResult& r) {
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    if (!a.re[i]) continue;
    const Extension& e = a.corpus->extensions[i];
    ++r.instances;
    const auto& rel = a.re[i]->rel;
    bool k2_factors = true;  // (k(a), 0) in R_E for all a
    for (Elt c = 0; c < e.K().order(); ++c)
      if (!rel.contains(e.k()(c), 0)) k2_factors = false;
    bool j_iso = rel.pairs == kernel_objects(e.f()).eqf.pairs;
    bool sym = rel.symmetric();
    bool grp = e.K().is_group();
    if (k2_factors != grp || j_iso != grp || sym != grp)
      return fail_ext(r, i, e, "symmetry corollary equivalences fail");
  }
}

inline void s5_unique_witness(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.re[i]) continue;
    ++r.instances;
    if (!a.re[i]->unique_witness)
      return fail_ext(r, i, a.corpus->extensions[i],
                      "witness not unique for a cancellative kernel");
  }
}

inline void s5_re_point(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.re[i] || !a.re[i]->point) continue;
    const Extension& e = a.corpus->extensions[i];
    const auto& re = *a.re[i];
    ++r.instances;
    for (std::size_t t = 0; t < re.rm.elems.size(); ++t) {
      auto [x, z] = re.rm.elems[t];
      if (e.X().op(e.k()(re.q1[t]), x) != z)
        return fail_ext(r, i, e, "q1 is not the witness");
    }
    for (Elt c = 0; c < e.K().order(); ++c)
      if (re.point->k(c) != re.rm.index(0, e.k()(c)))
        return fail_ext(r, i, e, "k1 != <0,k>");
  }
}

inline void s5_relation_on_e(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.re[i]) continue;
    const Extension& e = a.corpus->extensions[i];
    const auto& re = *a.re[i];
    ++r.instances;
    try {
      auto kprod = product(e.K(), e.K());
      std::vector<Elt> khat(kprod.mon.order());
      for (Elt u = 0; u < kprod.mon.order(); ++u) {
        Elt x = e.k()(kprod.p1(u));
        Elt z = e.X().op(e.k()(kprod.p2(u)), x);
        int idx = re.rm.index(x, z);
        if (idx < 0) throw AlgebraError(Err::NotWellDefined, "khat escapes");
        khat[u] = idx;
      }
      Extension upper(make_hom(kprod.mon, re.rm.mon, std::move(khat)),
                      compose(e.f(), re.rm.r1));
      const auto& ud = upper.schreier();
      const auto& d = e.schreier();
      for (Elt m = 0; m < e.M().order(); ++m) {
        int u = re.rm.index(d.base_rep[m], d.base_rep[m]);
        if (!std::binary_search(ud.reps[m].begin(), ud.reps[m].end(), u))
          throw AlgebraError(Err::NotWellDefined, "(u_m, u_m) not a rep");
      }
      make_ext_morphism(upper, e, kprod.p1, re.rm.r1);
      std::vector<Elt> add(kprod.mon.order());
      for (Elt u = 0; u < kprod.mon.order(); ++u)
        add[u] = e.K().op(kprod.p1(u), kprod.p2(u));
      make_ext_morphism(upper, e, Hom{kprod.mon, e.K(), std::move(add)},
                        re.rm.r2);
    } catch (const std::exception& ex) {
      return fail_ext(r, i, e, ex.what());
    }
  }
}

inline void s5_self_central(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.re[i]) continue;
    ++r.instances;
    try {
      self_connector(a.corpus->extensions[i], *a.re[i]);
    } catch (const std::exception& ex) {
      return fail_ext(r, i, a.corpus->extensions[i], ex.what());
    }
  }
}

inline void s5_chasles_point(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) {
      if (!a.build_error[i].empty())
        return fail_ext(r, i, a.corpus->extensions[i], a.build_error[i]);
      continue;
    }
    ++r.instances;
    const auto& ch = a.bundle[i]->ch;
    const auto& re = a.bundle[i]->re;
    for (int t = 0; t < ch.pem.order(); ++t) {
      auto [x, y, z] = ch.triples[t];
      if (ch.qbar1[t] != re_witness(re, x, y))
        return fail_ext(r, i, a.corpus->extensions[i],
                        "Chasles retraction mismatch");
      (void)z;
    }
  }
}

inline void s5_chasles_symmetry(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    const auto& b = *a.bundle[i];
    ++r.instances;
    // Ch_E as a relation on the elements of R_E
    std::set<std::pair<Elt, Elt>> ch;
    for (int t = 0; t < b.ch.pem.order(); ++t)
      ch.insert({b.ch.pi1(t), b.ch.p2(t)});
    bool sym = true;
    for (auto [u, v] : ch)
      if (!ch.count({v, u})) sym = false;
    bool grp = b.E.K().is_group();
    if (sym != grp || b.re.rel.symmetric() != grp)
      return fail_ext(r, i, b.E, "Chasles symmetry corollary fails");
  }
}

// ---------------------------------------------------------------------------
// The direction point and internal monoids

inline void s6_gamma_kernel_pair(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    const auto& b = *a.bundle[i];
    ++r.instances;
    const auto& f = b.E.f();
    for (int u = 0; u < b.re.rm.mon.order(); ++u)
      for (int v = 0; v < b.re.rm.mon.order(); ++v) {
        bool tau = b.re.q1[u] == b.re.q1[v] &&
                   f(b.re.rm.elems[u].first) == f(b.re.rm.elems[v].first);
        if (b.cong.same(u, v) != tau)
          return fail_ext(r, i, b.E, "Eq(gamma) != tau");
      }
  }
}

inline void s6_gamma_classes(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    const auto& b = *a.bundle[i];
    ++r.instances;
    for (int u = 0; u < b.re.rm.mon.order(); ++u)
      for (int v = 0; v < b.re.rm.mon.order(); ++v) {
        bool same_class = b.gamma(u) == b.gamma(v);
        bool crit = b.re.q1[u] == b.re.q1[v] &&
                    b.E.f()(b.re.rm.elems[u].first) ==
                        b.E.f()(b.re.rm.elems[v].first);
        if (same_class != crit)
          return fail_ext(r, i, b.E, "gamma class criterion fails");
      }
  }
}

inline void s6_df_point(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    const auto& b = *a.bundle[i];
    const Extension& e = b.E;
    ++r.instances;
    for (Elt c = 0; c < e.K().order(); ++c)
      if (b.point.k(c) != b.gamma(b.re.rm.index(0, e.k()(c))))
        return fail_ext(r, i, e, "kappa(a) != gamma(0, k(a))");
    for (int u = 0; u < b.re.rm.mon.order(); ++u) {
      if (b.point.f(b.gamma(u)) != e.f()(b.re.rm.elems[u].first))
        return fail_ext(r, i, e, "fbar formula fails");
      if (b.point.q[b.gamma(u)] != b.re.q1[u])
        return fail_ext(r, i, e, "qbar formula fails");
    }
    const auto& d = e.schreier();
    for (Elt m = 0; m < e.M().order(); ++m)
      if (b.point.s(m) != b.gamma(b.re.rm.index(d.base_rep[m], d.base_rep[m])))
        return fail_ext(r, i, e, "sbar formula fails");
  }
}

inline void s6_equivalence_roundtrip(const Analysis& a, CheckResult& r) {
  for_each_sample_point(a, [&](int i, const SchreierPoint& p) {
    ++r.instances;
    try {
      auto im = point_to_internal_monoid(p);
      auto back = internal_monoid_to_point(im.E, im.mu, im.unit);
      if (back.q != p.q || back.s.map != p.s.map) {
        fail_ext(r, i, a.corpus->extensions[i], "point round trip fails");
        return false;
      }
      auto im2 = point_to_internal_monoid(back);
      if (im2.mu.map != im.mu.map || im2.unit.map != im.unit.map) {
        fail_ext(r, i, a.corpus->extensions[i],
                 "internal monoid round trip fails");
        return false;
      }
    } catch (const std::exception& ex) {
      fail_ext(r, i, a.corpus->extensions[i], ex.what());
      return false;
    }
    return true;
  });
}

inline void s6_mu_bar(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    const auto& b = *a.bundle[i];
    ++r.instances;
    const auto& X = b.E.X();
    for (int u = 0; u < b.re.rm.mon.order(); ++u)
      for (int v = 0; v < b.re.rm.mon.order(); ++v) {
        auto [x, y] = b.re.rm.elems[u];
        if (b.E.f()(x) != b.E.f()(b.re.rm.elems[v].first)) continue;
        Elt sum = b.E.K().op(b.re.q1[u], b.re.q1[v]);
        Elt lhs = b.mu_bar(b.eqf_bar.index(b.gamma(u), b.gamma(v)));
        Elt rhs = b.gamma(b.re.rm.index(x, X.op(b.E.k()(sum), x)));
        if (lhs != rhs) return fail_ext(r, i, b.E, "mu_bar formula fails");
        (void)y;
      }
  }
}

inline void s6_chasles_identities(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    const auto& b = *a.bundle[i];
    ++r.instances;
    for (Elt x = 0; x < b.E.X().order(); ++x)
      if (b.gamma(b.re.rm.index(x, x)) != b.point.s(b.E.f()(x)))
        return fail_ext(r, i, b.E, "gamma(x,x) is not the unit");
    for (auto [x, y] : b.re.rel.pairs)
      for (auto [y2, z] : b.re.rel.pairs) {
        if (y2 != y) continue;
        Elt g1 = b.gamma(b.re.rm.index(x, y)), g2 = b.gamma(b.re.rm.index(y, z));
        if (b.mu_bar(b.eqf_bar.index(g1, g2)) != b.gamma(b.re.rm.index(x, z)))
          return fail_ext(r, i, b.E, "gamma(x,y).gamma(y,z) != gamma(x,z)");
      }
  }
}

inline void s6_action_coincidence(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i] || !a.sem[i]) continue;
    ++r.instances;
    if (!(point_action(a.bundle[i]->point) == *a.sem[i]))
      return fail_ext(r, i, a.corpus->extensions[i],
                      "df point action differs from the induced action");
  }
}

inline void s6_df_semidirect(const Analysis& a, CheckResult& r) {
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    ++r.instances;
    try {
      df_comparison(*a.bundle[i]);
    } catch (const std::exception& ex) {
      return fail_ext(r, i, a.corpus->extensions[i], ex.what());
    }
  }
}

inline void s6_functoriality(const Analysis& a, CheckResult& r) {
  // identities
  for (int i : a.cc_exts) {
    if (!a.bundle[i]) continue;
    ++r.instances;
    auto d = direction_on_morphism(identity_morphism(a.corpus->extensions[i]),
                                   *a.bundle[i], *a.bundle[i]);
    if (d.d_alpha.map != identity_hom(a.bundle[i]->df).map)
      return fail_ext(r, i, a.corpus->extensions[i], "d(id) != id");
  }
  // composition on sampled composable pairs, grouped by middle object
  std::size_t probes = 0;
  for (std::size_t mi = 0;
       mi < a.cc_morphs.size() && probes < checks_detail::kMorphProbeCap; ++mi)
    for (std::size_t mj = 0;
         mj < a.cc_morphs.size() && probes < checks_detail::kMorphProbeCap;
         ++mj) {
      const auto& f = a.corpus->morphisms[a.cc_morphs[mi]];
      const auto& g = a.corpus->morphisms[a.cc_morphs[mj]];
      if (f.dst != g.src) continue;
      ++probes;
      ++r.instances;
      auto fm = materialize(*a.corpus, f);
      auto gm = materialize(*a.corpus, g);
      auto comp = compose(gm, fm);
      auto df = direction_on_morphism(fm, *a.bundle[f.src], *a.bundle[f.dst]);
      auto dg = direction_on_morphism(gm, *a.bundle[g.src], *a.bundle[g.dst]);
      auto dc =
          direction_on_morphism(comp, *a.bundle[f.src], *a.bundle[g.dst]);
      if (dc.d_alpha.map != compose(dg.d_alpha, df.d_alpha).map)
        return fail(r, "d(beta o alpha) != d(beta) o d(alpha)");
    }
}

// ---------------------------------------------------------------------------
// Pushforwards, Baer sums and fibres

inline void s7_conservative(const Analysis& a, CheckResult& r) {
  for (std::size_t m : a.cc_morphs) {
    const auto& ms = a.corpus->morphisms[m];
    auto al = materialize(*a.corpus, ms);
    ++r.instances;
    auto d = direction_on_morphism(al, *a.bundle[ms.src], *a.bundle[ms.dst]);
    if (d.d_alpha.bijective()) {
      if (!al.alpha1.bijective() || !al.alpha2.bijective())
        return fail(r, "d(alpha) iso but alpha is not (morphism " +
                           std::to_string(ms.src) + "->" +
                           std::to_string(ms.dst) + ")");
    }
  }
}

inline void s7_mono_regepi(const Analysis& a, CheckResult& r) {
  for (std::size_t m : a.cc_morphs) {
    const auto& ms = a.corpus->morphisms[m];
    auto al = materialize(*a.corpus, ms);
    ++r.instances;
    auto d = direction_on_morphism(al, *a.bundle[ms.src], *a.bundle[ms.dst]);
    bool mono_ext = al.alpha1.injective() && al.alpha2.injective();
    bool mono_pt = al.alpha1.injective() && d.d_alpha.injective();
    bool epi_ext = al.alpha1.surjective() && al.alpha2.surjective();
    bool epi_pt = al.alpha1.surjective() && d.d_alpha.surjective();
    if (mono_ext != mono_pt)
      return fail(r, "monomorphisms not preserved/reflected");
    if (epi_ext != epi_pt)
      return fail(r, "regular epimorphisms not preserved/reflected");
  }
}

inline void s7_products(const Analysis& a, CheckResult& r) {
  // group extensions by base; sample pairs deterministically
  std::vector<std::vector<int>> groups;
  for (std::size_t i = 0; i < a.corpus->extensions.size(); ++i) {
    if (!a.sem[i]) continue;
    bool placed = false;
    for (auto& g : groups)
      if (a.corpus->extensions[g[0]].M() == a.corpus->extensions[i].M()) {
        g.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    if (!placed) groups.push_back({static_cast<int>(i)});
  }
  for (const auto& g : groups) {
    int pairs = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = x; y < g.size(); ++y) {
        if (pairs >= checks_detail::kProductPairCap) break;
        ++pairs;
        ++r.instances;
        const Extension& e1 = a.corpus->extensions[g[x]];
        const Extension& e2 = a.corpus->extensions[g[y]];
        if (e1.X().order() * e2.X().order() > 256) continue;
        auto prod = product_ext(e1, e2);
        Semimodule ps = to_semimodule(prod.ext);
        const Semimodule &s1 = *a.sem[g[x]], &s2 = *a.sem[g[y]];
        for (Elt m = 0; m < ps.M.order(); ++m)
          for (Elt c = 0; c < ps.K.order(); ++c) {
            Elt expect = prod.kernel_prod.pair(
                s1.apply(m, prod.kernel_prod.p1(c)),
                s2.apply(m, prod.kernel_prod.p2(c)));
            if (ps.apply(m, c) != expect)
              return fail(r, "product action is not the componentwise one");
          }
      }
      if (pairs >= checks_detail::kProductPairCap) break;
    }
  }
}

inline void s7_rho(const Analysis& a, CheckResult& r) {
  // the equality of rho with the generated congruence is asserted inside
  // pushforward(); a failure surfaces as a stored per-instance error
  for (const auto& inst : a.pushforwards) {
    ++r.instances;
    if (!inst.pf)
      return fail(r, "pushforward of extension #" + std::to_string(inst.src) +
                         " failed: " + inst.error);
  }
}

inline void s7_pushforward(const Analysis& a, CheckResult& r) {
  for (const auto& inst : a.pushforwards) {
    if (!inst.pf) continue;
    ++r.instances;
    const auto& ep = inst.pf->ext;
    if (!induces_semimodule(ep))
      return fail(r, "pushforward is not in smod-SExt");
    if (!(to_semimodule(ep) == inst.target))
      return fail(r, "D(E') differs from the target semimodule");
    // the cocartesian morphism maps representatives to representatives
    const auto& sd = a.corpus->extensions[inst.src].schreier();
    const auto& dd = ep.schreier();
    for (Elt m = 0; m < ep.M().order(); ++m)
      if (!std::binary_search(dd.reps[m].begin(), dd.reps[m].end(),
                              inst.pf->cocart.alpha2(sd.base_rep[m])))
        return fail(r, "alpha(u_m) is not a representative");
  }
}

inline void s7_cofibration(const Analysis& a, CheckResult& r) {
  // existence of the factorization for every sampled hypothesis triple
  std::size_t used = 0;
  for (const auto& inst : a.pushforwards) {
    if (!inst.pf) continue;
    if (used >= checks_detail::kUniqueInstanceCap) break;
    ++used;
    const Extension& e = a.corpus->extensions[inst.src];
    std::size_t lambdas = 0;
    for (std::size_t mi : a.out_edges[inst.src]) {
      if (lambdas >= checks_detail::kBetaSampleCap) break;
      ++lambdas;
      const auto& ms = a.corpus->morphisms[mi];
      const Extension& F = a.corpus->extensions[ms.dst];
      if (!a.sem[ms.dst]) continue;
      Hom lambda1{e.K(), F.K(), ms.a1};
      for (const Hom& beta1 : enumerate_homs(inst.pf->ext.K(), F.K())) {
        if (compose(beta1, inst.alpha1).map != lambda1.map) continue;
        if (!is_action_preserving(beta1, inst.target, *a.sem[ms.dst]))
          continue;
        ++r.instances;
        try {
          cocartesian_factorize(inst.pf.value(),
                                materialize(*a.corpus, ms), beta1);
        } catch (const std::exception& ex) {
          return fail(r, std::string("factorization fails: ") + ex.what());
        }
      }
    }
  }
}

inline void s7_cocartesian_unique(const Analysis& a, CheckResult& r) {
  std::size_t used = 0;
  for (const auto& inst : a.pushforwards) {
    if (!inst.pf) continue;
    if (used >= checks_detail::kUniqueInstanceCap) break;
    ++used;
    const Extension& ep = inst.pf->ext;
    std::size_t lambdas = 0;
    for (std::size_t mi : a.out_edges[inst.src]) {
      if (lambdas >= checks_detail::kBetaSampleCap) break;
      ++lambdas;
      const auto& ms = a.corpus->morphisms[mi];
      const Extension& F = a.corpus->extensions[ms.dst];
      if (!a.sem[ms.dst]) continue;
      Hom lambda1{a.corpus->extensions[inst.src].K(), F.K(), ms.a1};
      for (const Hom& beta1 : enumerate_homs(ep.K(), F.K())) {
        if (compose(beta1, inst.alpha1).map != lambda1.map) continue;
        if (!is_action_preserving(beta1, inst.target, *a.sem[ms.dst]))
          continue;
        ++r.instances;
        int count = 0;
        for (const auto& beta : enumerate_ext_morphisms(
                 ep, F, static_cast<std::size_t>(-1), beta1))
          if (compose(beta.alpha2, inst.pf->cocart.alpha2).map == ms.a2)
            ++count;
        if (count != 1)
          return fail(r, "expected exactly one factorization, found " +
                             std::to_string(count));
      }
    }
  }
}

// Runs per_fibre over every fibre, optionally sharded across workers.
// Results do not depend on the worker count: nothing exits early and the
// reported counterexample is the one with the least fibre index.
inline void over_fibres(
    const Analysis& a, CheckResult& r,
    const std::function<void(const FibreData&, CheckResult&)>& per_fibre) {
  struct Part {
    CheckResult res;
    std::size_t fail_index = static_cast<std::size_t>(-1);
  };
  int workers = std::max(1, a.jobs);
  std::vector<Part> parts(workers);
  auto work = [&](int w) {
    for (std::size_t i = w; i < a.fibres.size();
         i += static_cast<std::size_t>(workers)) {
      CheckResult local;
      per_fibre(a.fibres[i], local);
      parts[w].res.instances += local.instances;
      if (!local.pass && parts[w].res.pass) {
        parts[w].res.pass = false;
        parts[w].res.counterexample = local.counterexample;
        parts[w].fail_index = i;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> futs;
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, work, w));
    for (auto& f : futs) f.get();
  }
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& p : parts) {
    r.instances += p.res.instances;
    if (!p.res.pass && p.fail_index < best) {
      best = p.fail_index;
      r.pass = false;
      r.counterexample = p.res.counterexample;
    }
  }
}

inline void s7_fibre_monoid(const Analysis& a, CheckResult& r) {
  over_fibres(a, r, [](const FibreData& fd, CheckResult& out) {
    if (fd.classes.empty()) return;
    ++out.instances;
    const Extension& split = fd.classes[0];
    // unit law against every class
    for (const auto& c : fd.classes)
      if (!fibre_isomorphic(baer_sum(c, split), c))
        return fail(out, "split class is not a unit for the Baer sum");
    // commutativity and associativity on leading classes
    std::size_t lim = std::min<std::size_t>(fd.classes.size(), 3);
    for (std::size_t x = 0; x < lim; ++x)
      for (std::size_t y = 0; y < lim; ++y) {
        if (!fibre_isomorphic(baer_sum(fd.classes[x], fd.classes[y]),
                              baer_sum(fd.classes[y], fd.classes[x])))
          return fail(out, "Baer sum is not commutative");
        for (std::size_t z = 0; z < std::min<std::size_t>(lim, 2); ++z)
          if (!fibre_isomorphic(
                  baer_sum(baer_sum(fd.classes[x], fd.classes[y]),
                           fd.classes[z]),
                  baer_sum(fd.classes[x],
                           baer_sum(fd.classes[y], fd.classes[z]))))
            return fail(out, "Baer sum is not associative");
      }
  });
}

inline void s7_baer_oracle(const Analysis& a, CheckResult& r) {
  over_fibres(a, r, [](const FibreData& fd, CheckResult& out) {
    for (const auto& g1 : fd.systems)
      for (const auto& g2 : fd.systems) {
        ++out.instances;
        if (!out.pass) continue;
        auto sum = baer_sum(crossed_product(g1), crossed_product(g2));
        auto expect = crossed_product(add_factor_systems(g1, g2));
        if (!fibre_isomorphic(sum, expect))
          fail(out, "baer_sum(CP(g), CP(g')) differs from CP(g+g')");
      }
  });
}

// ---------------------------------------------------------------------------
// Appendix statements

struct KernelPairData {
  Extension ebar;
  ExtMorphism pi1, pi2;
};

inline KernelPairData kernel_pair_of(const Extension& src, const Extension& dst,
                                     const Hom& a1, const Hom& a2) {
  auto eqa2 = pullback(a2, a2);
  auto eqa1 = pullback(a1, a1);
  std::vector<Elt> kk(eqa1.mon.order());
  for (int u = 0; u < eqa1.mon.order(); ++u) {
    int idx = eqa2.index(src.k()(eqa1.elems[u].first),
                         src.k()(eqa1.elems[u].second));
    if (idx < 0)
      throw AlgebraError(Err::NotWellDefined, "kernel pair kernel escapes");
    kk[u] = idx;
  }
  Extension ebar(make_hom(eqa1.mon, eqa2.mon, std::move(kk)),
                 compose(src.f(), eqa2.p1));
  ExtMorphism pi1 = make_ext_morphism(ebar, src, eqa1.p1, eqa2.p1);
  ExtMorphism pi2 = make_ext_morphism(ebar, src, eqa1.p2, eqa2.p2);
  (void)dst;
  return KernelPairData{std::move(ebar), std::move(pi1), std::move(pi2)};
}

inline void a_kernel_pairs(const Analysis& a, CheckResult& r) {
  std::size_t probes = 0;
  for (std::size_t m : a.cc_morphs) {
    if (probes >= checks_detail::kMorphProbeCap) break;
    ++probes;
    const auto& ms = a.corpus->morphisms[m];
    const Extension& src = a.corpus->extensions[ms.src];
    const Extension& dst = a.corpus->extensions[ms.dst];
    ++r.instances;
    try {
      auto kp = kernel_pair_of(src, dst, Hom{src.K(), dst.K(), ms.a1},
                               Hom{src.X(), dst.X(), ms.a2});
      if (!kp.ebar.is_schreier())
        return fail(r, "kernel pair extension is not Schreier");
      if (!kp.ebar.K().is_commutative() || !kp.ebar.K().is_cancellative())
        return fail(r, "kernel pair kernel is not cc");
      // paired base representatives
      const auto& d = src.schreier();
      const auto& bd = kp.ebar.schreier();
      for (Elt mm = 0; mm < src.M().order(); ++mm) {
        auto eqa2 = pullback(Hom{src.X(), dst.X(), ms.a2},
                             Hom{src.X(), dst.X(), ms.a2});
        int u = eqa2.index(d.base_rep[mm], d.base_rep[mm]);
        if (!std::binary_search(bd.reps[mm].begin(), bd.reps[mm].end(), u))
          return fail(r, "(u_m,u_m) is not a representative");
      }
    } catch (const std::exception& ex) {
      return fail(r, std::string("kernel pair construction: ") + ex.what());
    }
  }
}

inline void a_mono_char(const Analysis& a, CheckResult& r) {
  std::size_t probes = 0;
  for (std::size_t m : a.cc_morphs) {
    if (probes >= checks_detail::kMorphProbeCap) break;
    ++probes;
    const auto& ms = a.corpus->morphisms[m];
    const Extension& src = a.corpus->extensions[ms.src];
    const Extension& dst = a.corpus->extensions[ms.dst];
    ++r.instances;
    Hom a1{src.K(), dst.K(), ms.a1}, a2{src.X(), dst.X(), ms.a2};
    auto kp = kernel_pair_of(src, dst, a1, a2);
    bool legs_equal = kp.pi1.alpha1.map == kp.pi2.alpha1.map &&
                      kp.pi1.alpha2.map == kp.pi2.alpha2.map;
    bool injective = a1.injective() && a2.injective();
    if (legs_equal != injective)
      return fail(r, "kernel pair legs do not detect injectivity");
    // sampled witnesses: equal composites force equal morphisms
    if (injective) {
      const auto& incoming = a.in_edges[ms.src];
      std::size_t cap = std::min<std::size_t>(incoming.size(), 24);
      for (std::size_t x1 = 0; x1 < cap; ++x1)
        for (std::size_t x2 = x1 + 1; x2 < cap; ++x2) {
          const auto& f1 = a.corpus->morphisms[incoming[x1]];
          const auto& f2 = a.corpus->morphisms[incoming[x2]];
          if (f2.src != f1.src || f1.a2 == f2.a2) continue;
          std::vector<Elt> c1(f1.a2.size()), c2(f2.a2.size());
          for (std::size_t x = 0; x < f1.a2.size(); ++x) {
            c1[x] = ms.a2[f1.a2[x]];
            c2[x] = ms.a2[f2.a2[x]];
          }
          if (c1 == c2)
            return fail(r, "mono probe found distinct equalized morphisms");
        }
    }
  }
}

inline void a_regepi_char(const Analysis& a, CheckResult& r) {
  std::size_t probes = 0;
  for (std::size_t m : a.cc_morphs) {
    if (probes >= checks_detail::kMorphProbeCap) break;
    ++probes;
    const auto& ms = a.corpus->morphisms[m];
    const Extension& src = a.corpus->extensions[ms.src];
    const Extension& dst = a.corpus->extensions[ms.dst];
    ++r.instances;
    Hom a1{src.K(), dst.K(), ms.a1}, a2{src.X(), dst.X(), ms.a2};
    try {
      // (regular epi, mono) factorization through the image
      std::vector<Elt> img2, img1;
      for (Elt x = 0; x < src.X().order(); ++x) img2.push_back(a2(x));
      for (Elt c = 0; c < src.K().order(); ++c) img1.push_back(a1(c));
      auto I = submonoid(dst.X(), img2);
      auto P = submonoid(dst.K(), img1);
      std::vector<Elt> kp_map(P.mon.order());
      for (int u = 0; u < P.mon.order(); ++u)
        kp_map[u] = I.index_of[dst.k()(P.elems[u])];
      Extension image_ext(make_hom(P.mon, I.mon, std::move(kp_map)),
                          compose(dst.f(), I.incl));
      std::vector<Elt> e1(src.K().order()), e2(src.X().order());
      for (Elt c = 0; c < src.K().order(); ++c) e1[c] = P.index_of[a1(c)];
      for (Elt x = 0; x < src.X().order(); ++x) e2[x] = I.index_of[a2(x)];
      ExtMorphism e = make_ext_morphism(src, image_ext,
                                        Hom{src.K(), P.mon, e1},
                                        Hom{src.X(), I.mon, e2});
      ExtMorphism n = make_ext_morphism(image_ext, dst, P.incl, I.incl);
      (void)n;
      // the corestriction coequalizes the kernel pair of alpha: every
      // sampled beta equalized by the kernel pair factors through it,
      // and the factor is again a morphism of extensions
      std::size_t tried = 0;
      for (std::size_t bi : a.out_edges[ms.src]) {
        if (tried >= checks_detail::kBetaSampleCap) break;
        ++tried;
        const auto& beta = a.corpus->morphisms[bi];
        bool equalizes = true;
        for (Elt x = 0; x < src.X().order() && equalizes; ++x)
          for (Elt y = 0; y < src.X().order(); ++y)
            if (a2(x) == a2(y) && beta.a2[x] != beta.a2[y]) {
              equalizes = false;
              break;
            }
        for (Elt c = 0; c < src.K().order() && equalizes; ++c)
          for (Elt c2 = 0; c2 < src.K().order(); ++c2)
            if (a1(c) == a1(c2) && beta.a1[c] != beta.a1[c2]) {
              equalizes = false;
              break;
            }
        if (!equalizes) continue;
        const Extension& F = a.corpus->extensions[beta.dst];
        std::vector<Elt> g2(I.mon.order(), -1), g1(P.mon.order(), -1);
        for (Elt x = 0; x < src.X().order(); ++x) g2[e.alpha2(x)] = beta.a2[x];
        for (Elt c = 0; c < src.K().order(); ++c) g1[e.alpha1(c)] = beta.a1[c];
        make_ext_morphism(image_ext, F, Hom{P.mon, F.K(), g1},
                          Hom{I.mon, F.X(), g2});
      }
      // the characterization itself
      bool surj = a1.surjective() && a2.surjective();
      bool n_iso = I.mon.order() == dst.X().order() &&
                   P.mon.order() == dst.K().order();
      if (surj != n_iso)
        return fail(r, "image comparison does not detect surjectivity");
    } catch (const std::exception& ex) {
      return fail(r, std::string("regepi probe: ") + ex.what());
    }
  }
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Registry and runner

struct Statement {
  const char* id;
  const char* title;
  void (*fn)(const Analysis&, CheckResult&);
};

inline const std::vector<Statement>& statement_registry() {
  static const std::vector<Statement> reg = {
      {"s2-representatives-lemma", "representatives differ by unique units",
       checks::s2_representatives_lemma},
      {"s2-group-structure", "B_m is a U(K)-torsor", checks::s2_group_structure},
      {"s2-retraction-lemma", "properties of the Schreier retraction",
       checks::s2_retraction_lemma},
      {"s2-group-kernel", "B(E)=X iff B_1=Ker f iff K is a group",
       checks::s2_group_kernel},
      {"s2-cokernel", "f is a cokernel of k", checks::s2_cokernel},
      {"s2-rep-preservation", "one preserved representative forces all",
       checks::s2_rep_preservation},
      {"s2-short-five", "Short Five Lemma", checks::s2_short_five},
      {"s3-well-defined", "induced action independent of representatives",
       checks::s3_well_defined},
      {"s3-action-axioms", "A1-A3 always, A4 for cancellative kernels",
       checks::s3_action_axioms},
      {"s3-patrick", "x + k(a) = k(f(x)*a) + x", checks::s3_patrick},
      {"s4-point-retraction-lemma", "properties of point retractions",
       checks::s4_point_retraction_lemma},
      {"s4-point-action", "m.a = q(s(m)+k(a)) is an action",
       checks::s4_point_action},
      {"s4-s-reflexive-transitive", "S-reflexive relations are transitive",
       checks::s4_s_reflexive},
      {"s4-connector-criterion", "centrality criterion and uniqueness",
       checks::s4_connector_criterion},
      {"s5-re-coequalizer", "f is a coequalizer of (r1,r2)",
       checks::s5_re_coequalizer},
      {"s5-joint-extremal-epi", "j and k2 generate Eq(f)",
       checks::s5_joint_extremal_epi},
      {"s5-re-symmetry", "R_E symmetric iff K is a group",
       checks::s5_re_symmetry},
      {"s5-unique-witness", "unique witness for cancellative kernels",
       checks::s5_unique_witness},
      {"s5-re-point", "R_E is an S-reflexive relation via <0,k>",
       checks::s5_re_point},
      {"s5-relation-on-e", "R_E is a relation on E in SExt_M",
       checks::s5_relation_on_e},
      {"s5-self-central", "R_E centralizes itself", checks::s5_self_central},
      {"s5-chasles-point", "the Chasles relation is S-reflexive",
       checks::s5_chasles_point},
      {"s5-chasles-symmetry", "Chasles symmetric iff K is a group",
       checks::s5_chasles_symmetry},
      {"s6-gamma-kernel-pair", "Eq(gamma) equals tau",
       checks::s6_gamma_kernel_pair},
      {"s6-gamma-classes", "gamma classes determined by witness and fibre",
       checks::s6_gamma_classes},
      {"s6-df-point", "df carries a Schreier point over M",
       checks::s6_df_point},
      {"s6-equivalence-roundtrip", "points equal internal commutative monoids",
       checks::s6_equivalence_roundtrip},
      {"s6-mu-bar", "the closed formula for mu_bar", checks::s6_mu_bar},
      {"s6-chasles-identities", "Chasles identities for gamma",
       checks::s6_chasles_identities},
      {"s6-action-coincidence", "df point action is the induced action",
       checks::s6_action_coincidence},
      {"s6-df-semidirect", "df is isomorphic to K x| M",
       checks::s6_df_semidirect},
      {"s6-functoriality", "d preserves identities and composition",
       checks::s6_functoriality},
      {"s7-conservative", "d and D are conservative", checks::s7_conservative},
      {"s7-mono-regepi", "d preserves and reflects monos and regular epis",
       checks::s7_mono_regepi},
      {"s7-products", "d preserves finite products", checks::s7_products},
      {"s7-rho", "rho equals the generated congruence", checks::s7_rho},
      {"s7-pushforward", "the pushforward lies over the target semimodule",
       checks::s7_pushforward},
      {"s7-cofibration", "cocartesian factorizations exist",
       checks::s7_cofibration},
      {"s7-cocartesian-unique", "cocartesian factorizations are unique",
       checks::s7_cocartesian_unique},
      {"s7-fibre-monoid", "fibres are commutative monoids under Baer sum",
       checks::s7_fibre_monoid},
      {"s7-baer-oracle", "baer_sum(CP(g),CP(g')) = CP(g+g')",
       checks::s7_baer_oracle},
      {"a-kernel-pairs", "kernel pairs exist in cc-SExt_M",
       checks::a_kernel_pairs},
      {"a-mono-char", "monos are the componentwise injections",
       checks::a_mono_char},
      {"a-regepi-char", "regular epis are the componentwise surjections",
       checks::a_regepi_char},
  };
  return reg;
}

struct VerifyReport {
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }

  json to_json() const {
    json checks = json::array();
    for (const auto& r : results) {
      json c{{"id", r.id},
             {"pass", r.pass},
             {"instances", r.instances},
             {"ms", r.ms}};
      if (!r.pass) c["counterexample"] = r.counterexample;
      checks.push_back(std::move(c));
    }
    return json{{"pass", all_pass()}, {"checks", checks}};
  }
};

inline CheckResult run_statement(const Statement& s, const Analysis& a) {
  CheckResult r;
  r.id = s.id;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s.fn(a, r);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.counterexample = std::string("unexpected error: ") + ex.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
             .count();
  return r;
}

// Statements run in registry order; the fibre-quantified ones shard their
// work over `jobs` workers internally, with worker-count-independent output.
inline VerifyReport run_verify(const Corpus& corpus, int jobs = 1) {
  Analysis a = analyze(corpus);
  a.jobs = jobs;
  const auto& reg = statement_registry();
  VerifyReport report;
  report.results.reserve(reg.size());
  for (const auto& s : reg) report.results.push_back(run_statement(s, a));
  return report;
}

}  // namespace schreier

#endif  // SCHREIER_CHECKS_HPP_
