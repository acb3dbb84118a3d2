// Command-line surface: statement-check harness, fibre classification,
// direction computation, Baer sums and a small census writer.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 bound exceeded.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "schreier/checks.hpp"

namespace fs = std::filesystem;
using namespace schreier;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

json h2_document(const CohomologyMonoid& h2) {
  json witnesses = json::array();
  for (const auto& c : h2.classes) witnesses.push_back(extension_to_json(c));
  return json{{"classes", static_cast<int>(h2.classes.size())},
              {"table", h2.monoid.rows()},
              {"unit", h2.unit},
              {"witnesses", witnesses}};
}

int cmd_verify(int max_order, int max_carrier, int jobs,
               const std::string& out, const std::string& fault) {
  Corpus corpus = build_corpus(max_order, max_carrier);
  if (!fault.empty()) inject_fault(corpus, fault);
  VerifyReport report = run_verify(corpus, jobs);
  double total_ms = 0;
  for (const auto& r : report.results) {
    total_ms += r.ms;
    std::printf("%s %-26s %8ld instances %10.1f ms", r.pass ? "PASS" : "FAIL",
                r.id.c_str(), r.instances, r.ms);
    if (!r.pass) std::printf("  %s", r.counterexample.c_str());
    if (r.pass && r.instances == 0) std::printf("  (warning: no instances)");
    std::printf("\n");
  }
  std::printf("verify: %s  (%zu statements, %zu extensions, %.1f s)\n",
              report.all_pass() ? "PASS" : "FAIL", report.results.size(),
              corpus.extensions.size(), total_ms / 1000.0);
  if (!out.empty()) {
    json doc = report.to_json();
    doc["corpus"] = json{{"max_order", corpus.max_order},
                         {"max_carrier", corpus.max_carrier},
                         {"monoids", corpus.monoids.size()},
                         {"extensions", corpus.extensions.size()},
                         {"morphisms", corpus.morphisms.size()}};
    if (!corpus.injected_fault.empty())
      doc["injected_fault"] = corpus.injected_fault;
    write_text(out, canonical_dump(doc));
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_h2(const std::string& file, const std::string& mode,
           const std::string& out) {
  Semimodule s = semimodule_from_json(load_json(file));
  json doc;
  if (mode == "fs") {
    doc = h2_document(cohomology_monoid_from_classes(
        s, fiber_classify(s, ClassifyMode::factor_system)));
  } else if (mode == "bf") {
    doc = h2_document(cohomology_monoid_from_classes(
        s, fiber_classify(s, ClassifyMode::brute_force)));
  } else {
    auto fsc = fiber_classify(s, ClassifyMode::factor_system);
    auto bfc = fiber_classify(s, ClassifyMode::brute_force);
    bool agree = fsc.size() == bfc.size();
    if (agree)
      for (const auto& c : fsc) {
        bool matched = false;
        for (const auto& b : bfc)
          if (fibre_isomorphic(c, b)) matched = true;
        agree = agree && matched;
      }
    if (!agree) {
      std::fprintf(stderr, "h2: classification modes disagree\n");
      return 1;
    }
    doc = h2_document(cohomology_monoid_from_classes(s, std::move(fsc)));
    doc["modes_agree"] = true;
  }
  std::string text = canonical_dump(doc);
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text(out, text);
  return 0;
}

int cmd_direction(const std::string& file, const std::string& method,
                  const std::string& out) {
  Extension e = extension_from_json(load_json(file));
  json doc;
  if (method == "coeq" || method == "both") {
    if (!e.K().is_cancellative() || !e.K().is_commutative())
      throw AlgebraError(Err::BadParams,
                         "coequalizer route needs a cc kernel");
    auto b = build_direction(e);
    doc["coequalizer_point"] = point_to_json(b.point);
    if (method == "both") {
      doc["semidirect_point"] = point_to_json(df_by_semidirect(e));
      doc["iso_witness"] = df_comparison(b).map;
    }
  } else if (method == "semidirect") {
    doc["semidirect_point"] = point_to_json(df_by_semidirect(e));
  } else {
    throw AlgebraError(Err::BadParams, "unknown method: " + method);
  }
  doc["schreier"] = schreier_data_to_json(e.schreier());
  doc["action"] = semimodule_to_json(to_semimodule(e));
  std::string text = canonical_dump(doc);
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text(out, text);
  return 0;
}

int cmd_baer(const std::string& f1, const std::string& f2,
             const std::string& out) {
  Extension e1 = extension_from_json(load_json(f1));
  Extension e2 = extension_from_json(load_json(f2));
  Semimodule s1 = to_semimodule(e1), s2 = to_semimodule(e2);
  Extension sum = baer_sum(e1, e2);
  json doc{{"sum", extension_to_json(sum)},
           {"certificates",
            json{{"fibre", semimodule_to_json(s1)},
                 {"ext1_action_equal", s1 == s2},
                 {"sum_action_equal", to_semimodule(sum) == s1}}}};
  std::string text = canonical_dump(doc);
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text(out, text);
  return 0;
}

int cmd_census(int max_order, int max_carrier, const std::string& outdir) {
  fs::create_directories(outdir);
  std::vector<FiniteMonoid> monoids;
  std::vector<std::vector<FiniteMonoid>> by_order(max_order + 1);
  for (int n = 1; n <= max_order; ++n) {
    by_order[n] = enumerate_monoids(n, 6);
    monoids.insert(monoids.end(), by_order[n].begin(), by_order[n].end());
  }
  json index;
  index["fibres"] = json::array();
  int mi = 0;
  for (int nm = 1; nm <= max_order; ++nm)
    for (const auto& M : by_order[nm]) {
      int ki = 0;
      for (int nk = 1; nk <= max_order && nk * nm <= max_carrier; ++nk)
        for (const auto& K : by_order[nk]) {
          if (!K.is_commutative()) {
            ++ki;
            continue;
          }
          auto actions = enumerate_actions(M, K);
          for (std::size_t ai = 0; ai < actions.size(); ++ai) {
            auto classes =
                fiber_classify(actions[ai], ClassifyMode::factor_system);
            auto h2 = cohomology_monoid_from_classes(actions[ai],
                                                     std::move(classes));
            json doc = h2_document(h2);
            doc["M"] = monoid_to_json(M);
            doc["K"] = monoid_to_json(K);
            doc["act"] = actions[ai].act;
            if (nk * nm <= 8) {
              auto bf = fiber_classify(actions[ai], ClassifyMode::brute_force);
              doc["modes_agree"] =
                  bf.size() == h2.classes.size();
            }
            std::string name = "m" + std::to_string(mi) + "-k" +
                               std::to_string(ki) + "-a" + std::to_string(ai) +
                               ".json";
            write_text((fs::path(outdir) / name).string(),
                       canonical_dump(doc));
            index["fibres"].push_back(
                json{{"file", name},
                     {"classes", static_cast<int>(h2.classes.size())}});
          }
          ++ki;
        }
      ++mi;
    }

  // open-question searches: neither outcome is presupposed
  json a4 = json::array();
  for (int nm = 2; nm <= max_order; ++nm)
    for (const auto& M : by_order[nm])
      for (int nk = 2; nk <= max_order && nk * nm <= max_carrier; ++nk)
        for (const auto& K : by_order[nk]) {
          if (!K.is_commutative() || K.is_cancellative()) continue;
          for (const auto& e : search_a4_failures(K, M))
            a4.push_back(extension_to_json(e));
        }
  index["a4_failure_witnesses"] = a4;
  json nns = json::array();
  for (const auto& e : search_normal_non_schreier(monoids, max_carrier))
    nns.push_back(extension_to_json(e));
  index["normal_non_schreier_witnesses"] = nns;

  write_text((fs::path(outdir) / "index.json").string(),
             canonical_dump(index));
  std::printf("census: %zu fibres, %zu a4 witnesses, %zu normal non-Schreier "
              "witnesses -> %s\n",
              index["fibres"].size(), a4.size(), nns.size(), outdir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational engine for Schreier extensions of monoids"};
  app.require_subcommand(1);

  int max_order = 5, max_carrier = 8, jobs = 1;
  std::string out, fault, file, mode = "fs", method = "both", file2, outdir;

  auto* verify = app.add_subcommand("verify", "run the statement-check harness");
  verify->add_option("--max-order", max_order, "largest monoid order");
  verify->add_option("--max-carrier", max_carrier, "largest carrier order");
  verify->add_option("--jobs", jobs, "worker threads for fibre statements");
  verify->add_option("--out", out, "write a JSON report");
  verify->add_option("--inject-fault", fault,
                     "corrupt the corpus (testing aid); kinds: qtable");

  auto* h2 = app.add_subcommand("h2", "cohomology monoid of a semimodule");
  h2->add_option("--semimodule", file, "semimodule document")->required();
  h2->add_option("--mode", mode, "fs | bf | both");
  h2->add_option("--out", out, "output file (default stdout)");

  auto* direction = app.add_subcommand("direction", "direction of an extension");
  direction->add_option("--ext", file, "extension document")->required();
  direction->add_option("--method", method, "coeq | semidirect | both");
  direction->add_option("--out", out, "output file (default stdout)");

  auto* baer = app.add_subcommand("baer", "Baer sum of two extensions");
  baer->add_option("--ext1", file, "first extension")->required();
  baer->add_option("--ext2", file2, "second extension")->required();
  baer->add_option("--out", out, "output file (default stdout)");

  auto* census = app.add_subcommand("census", "classify all small fibres");
  census->add_option("--max-order", max_order, "largest monoid order");
  census->add_option("--max-carrier", max_carrier, "largest carrier order");
  census->add_option("--out", outdir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify(max_order, max_carrier, jobs, out, fault);
    if (h2->parsed()) return cmd_h2(file, mode, out);
    if (direction->parsed()) return cmd_direction(file, method, out);
    if (baer->parsed()) return cmd_baer(file, file2, out);
    if (census->parsed()) return cmd_census(max_order, max_carrier, outdir);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const AlgebraError& e) {
    if (e.code == Err::BoundExceeded) {
      std::fprintf(stderr, "bound exceeded: %s\n", e.what());
      return 3;
    }
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  }
  return 0;
}
