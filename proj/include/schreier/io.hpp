// JSON documents for monoids, extensions, semimodules and Schreier data.
// Unknown fields are rejected; canonical emission is stable under re-parse.

#ifndef SCHREIER_IO_HPP_
#define SCHREIER_IO_HPP_

#include <json.hpp>

#include "schreier/action.hpp"
#include "schreier/extension.hpp"

namespace schreier {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& location, const std::string& msg)
      : std::runtime_error(location + ": " + msg), location(location) {}
  std::string location;
};

namespace detail {

constexpr int kMaxOrder = 64;

inline void check_fields(const json& j, std::initializer_list<const char*> ok,
                         const std::string& loc) {
  if (!j.is_object()) throw ParseError(loc, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : ok)
      if (it.key() == k) known = true;
    if (!known) throw ParseError(loc, "unknown field \"" + it.key() + "\"");
  }
}

inline const json& field(const json& j, const char* name,
                         const std::string& loc) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(loc, std::string("missing field \"") +
                                               name + "\"");
  return *it;
}

inline std::vector<Elt> int_array(const json& j, const std::string& loc,
                                  int bound) {
  if (!j.is_array()) throw ParseError(loc, "expected an array");
  std::vector<Elt> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(loc, "expected an integer");
    long x = v.get<long>();
    if (x < 0 || x >= bound)
      throw ParseError(loc, "value " + std::to_string(x) + " out of range");
    out.push_back(static_cast<Elt>(x));
  }
  return out;
}

}  // namespace detail

// {"order": n, "table": [[int]], "name"?: str}
inline json monoid_to_json(const FiniteMonoid& m) {
  json j;
  j["order"] = m.order();
  j["table"] = m.rows();
  if (!m.name.empty()) j["name"] = m.name;
  return j;
}

inline FiniteMonoid monoid_from_json(const json& j,
                                     const std::string& loc = "$") {
  detail::check_fields(j, {"order", "table", "name"}, loc);
  const json& jo = detail::field(j, "order", loc);
  if (!jo.is_number_integer() || jo.get<long>() < 1 ||
      jo.get<long>() > detail::kMaxOrder)
    throw ParseError(loc + ".order", "order must be in [1, 64]");
  int n = jo.get<int>();
  const json& jt = detail::field(j, "table", loc);
  if (!jt.is_array() || static_cast<int>(jt.size()) != n)
    throw ParseError(loc + ".table", "table must have `order` rows");
  std::vector<Elt> flat;
  for (const auto& row : jt) {
    auto r = detail::int_array(row, loc + ".table", n);
    if (static_cast<int>(r.size()) != n)
      throw ParseError(loc + ".table", "table row has wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  auto m = FiniteMonoid::from_flat(n, std::move(flat));
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError(loc + ".name", "expected a string");
    m.name = it->get<std::string>();
  }
  return m;
}

// {"K":monoid,"X":monoid,"M":monoid,"k":[int],"f":[int]}
inline json extension_to_json(const Extension& e) {
  json j;
  j["K"] = monoid_to_json(e.K());
  j["X"] = monoid_to_json(e.X());
  j["M"] = monoid_to_json(e.M());
  j["k"] = e.k().map;
  j["f"] = e.f().map;
  return j;
}

inline Extension extension_from_json(const json& j,
                                     const std::string& loc = "$") {
  detail::check_fields(j, {"K", "X", "M", "k", "f"}, loc);
  auto K = monoid_from_json(detail::field(j, "K", loc), loc + ".K");
  auto X = monoid_from_json(detail::field(j, "X", loc), loc + ".X");
  auto M = monoid_from_json(detail::field(j, "M", loc), loc + ".M");
  auto kmap = detail::int_array(detail::field(j, "k", loc), loc + ".k",
                                X.order());
  auto fmap = detail::int_array(detail::field(j, "f", loc), loc + ".f",
                                M.order());
  if (static_cast<int>(kmap.size()) != K.order())
    throw ParseError(loc + ".k", "map has wrong length");
  if (static_cast<int>(fmap.size()) != X.order())
    throw ParseError(loc + ".f", "map has wrong length");
  if (!is_hom_table(K, X, kmap))
    throw ParseError(loc + ".k", "not a monoid homomorphism");
  if (!is_hom_table(X, M, fmap))
    throw ParseError(loc + ".f", "not a monoid homomorphism");
  return Extension(Hom{std::move(K), X, std::move(kmap)},
                   Hom{X, std::move(M), std::move(fmap)});
}

// {"reps": {"m":[x...]}, "base": {"m":x}, "q":[int]}
inline json schreier_data_to_json(const SchreierData& d) {
  json reps = json::object(), base = json::object();
  for (std::size_t m = 0; m < d.reps.size(); ++m) {
    reps[std::to_string(m)] = d.reps[m];
    base[std::to_string(m)] = d.base_rep[m];
  }
  return json{{"reps", reps}, {"base", base}, {"q", d.q}};
}

// {"M":monoid,"K":monoid,"act":[[int]]} with act[m][a]
inline json semimodule_to_json(const Semimodule& s) {
  return json{{"M", monoid_to_json(s.M)},
              {"K", monoid_to_json(s.K)},
              {"act", s.act}};
}

inline Semimodule semimodule_from_json(const json& j,
                                       const std::string& loc = "$") {
  detail::check_fields(j, {"M", "K", "act"}, loc);
  auto M = monoid_from_json(detail::field(j, "M", loc), loc + ".M");
  auto K = monoid_from_json(detail::field(j, "K", loc), loc + ".K");
  const json& ja = detail::field(j, "act", loc);
  if (!ja.is_array() || static_cast<int>(ja.size()) != M.order())
    throw ParseError(loc + ".act", "act must have |M| rows");
  std::vector<std::vector<Elt>> act;
  for (const auto& row : ja) {
    act.push_back(detail::int_array(row, loc + ".act", K.order()));
    if (static_cast<int>(act.back().size()) != K.order())
      throw ParseError(loc + ".act", "act row has wrong length");
  }
  return make_semimodule(std::move(M), std::move(K), std::move(act));
}

inline json point_to_json(const SchreierPoint& p) {
  return json{{"K", monoid_to_json(p.K())}, {"B", monoid_to_json(p.B())},
              {"M", monoid_to_json(p.M())}, {"k", p.k.map},
              {"f", p.f.map},               {"s", p.s.map},
              {"q", p.q}};
}

// nlohmann orders object keys, so emission is canonical and idempotent.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace schreier

#endif  // SCHREIER_IO_HPP_
