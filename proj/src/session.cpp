#include "seqcm/session.hpp"

#include <fstream>

namespace seqcm {

namespace {

FieldSpec parse_field(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "QQ" || s == "rationals") return FieldSpec::rationals();
    fail(ErrorKind::parse, "unknown field: " + s);
  }
  if (j.is_object() && j.contains("p")) return FieldSpec::prime_field(j["p"].get<unsigned long>());
  fail(ErrorKind::parse, "field must be \"QQ\" or {\"p\": prime}");
}

MonomialOrder parse_order(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s == "lex") return MonomialOrder::lex();
  fail(ErrorKind::parse, "unknown order: " + s);
}

std::vector<std::string> string_list(const json& j) {
  if (!j.is_array()) fail(ErrorKind::parse, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

Session load_session(const json& j) {
  Session s;
  if (!j.contains("ring") || !j["ring"].contains("vars"))
    fail(ErrorKind::parse, "session needs ring.vars");
  FieldSpec field = j["ring"].contains("field") ? parse_field(j["ring"]["field"]) : FieldSpec::rationals();
  MonomialOrder order =
      j["ring"].contains("order") ? parse_order(j["ring"]["order"]) : MonomialOrder::grevlex();
  s.ring = make_ring(string_list(j["ring"]["vars"]), field, order);

  if (!j.contains("module") || !j["module"].is_array() || j["module"].empty())
    fail(ErrorKind::parse, "session needs a nonempty module summand list");
  std::vector<IdealSubquotient> summands;
  for (const auto& entry : j["module"]) {
    if (!entry.contains("quotient")) fail(ErrorKind::parse, "summand needs quotient generators");
    Ideal bottom = Ideal::from_strings(s.ring, string_list(entry["quotient"]));
    if (is_unit_ideal(bottom)) fail(ErrorKind::parse, "summand quotient is the unit ideal");
    summands.push_back(make_subquotient(Ideal::unit(s.ring), bottom));
    if (entry.contains("decomposition")) {
      std::vector<Ideal> comps;
      std::vector<std::optional<Ideal>> primes;
      for (const auto& c : entry["decomposition"]) {
        if (c.is_array()) {
          comps.push_back(Ideal::from_strings(s.ring, string_list(c)));
          primes.push_back(std::nullopt);
        } else {
          comps.push_back(Ideal::from_strings(s.ring, string_list(c.at("component"))));
          if (c.contains("prime"))
            primes.push_back(Ideal::from_strings(s.ring, string_list(c["prime"])));
          else
            primes.push_back(std::nullopt);
        }
      }
      auto D = user_decomposition(summands.back().bottom, comps, primes);
      for (const auto& w : D.warnings) s.warnings.push_back(w);
      s.decomps.push_back(std::move(D));
    } else {
      s.decomps.push_back(std::nullopt);
    }
  }
  s.module = make_module(s.ring, std::move(summands));

  if (j.contains("ideals")) {
    for (auto it = j["ideals"].begin(); it != j["ideals"].end(); ++it)
      s.ideals.emplace(it.key(), Ideal::from_strings(s.ring, string_list(it.value())));
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (o.contains("seed")) {
      s.options.seed = o["seed"].get<uint64_t>();
      s.options.seed_from_file = true;
    }
    if (o.contains("n_max")) s.options.n_max = o["n_max"].get<int>();
    if (o.contains("coeff_bound")) s.options.coeff_bound = o["coeff_bound"].get<int>();
  }
  return s;
}

Session load_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open session file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
  return load_session(j);
}

json session_to_json(const Session& s) {
  json j;
  j["ring"]["vars"] = s.ring->vars;
  if (s.ring->field.kind == FieldSpec::Kind::prime)
    j["ring"]["field"] = json{{"p", s.ring->field.p}};
  else
    j["ring"]["field"] = "QQ";
  j["ring"]["order"] = s.ring->order.str();
  j["module"] = json::array();
  for (const auto& sq : s.module.summands) {
    json entry;
    entry["quotient"] = sq.bottom.gen_strings();
    j["module"].push_back(entry);
  }
  if (!s.ideals.empty()) {
    json ids;
    for (const auto& [name, id] : s.ideals) ids[name] = id.gen_strings();
    j["ideals"] = ids;
  }
  j["options"] = {{"seed", s.options.seed}, {"n_max", s.options.n_max}, {"coeff_bound", s.options.coeff_bound}};
  return j;
}

ModuleData session_module_data(const Session& s) {
  std::vector<PrimaryDecomposition> decomps;
  for (size_t k = 0; k < s.module.summands.size(); ++k) {
    if (s.decomps[k].has_value()) {
      decomps.push_back(*s.decomps[k]);
    } else if (is_monomial_ideal(s.module.summands[k].bottom)) {
      decomps.push_back(primary_decomposition_monomial(s.module.summands[k].bottom));
    } else {
      fail(ErrorKind::route_unavailable,
           "summand " + std::to_string(k) + " is not monomial: supply a decomposition");
    }
  }
  return analyze_module(s.module, decomps);
}

std::vector<json> fuzz_corpus(uint64_t seed, int count, int var_limit, int degree_limit) {
  if (count < 0 || var_limit < 1 || degree_limit < 1)
    fail(ErrorKind::parse, "fuzz limits must be at least 1");
  var_limit = std::min(var_limit, 4);
  static const char* kNames[4] = {"x", "y", "z", "w"};
  std::vector<json> out;
  Lcg rng(seed);
  int produced = 0;
  while (produced < count) {
    int nv = static_cast<int>(rng.range(2, var_limit < 2 ? 2 : var_limit));
    std::vector<std::string> vars(kNames, kNames + nv);
    RingPtr ring = make_ring(vars);
    int nsummands = static_cast<int>(rng.range(1, 2));
    json module = json::array();
    std::vector<IdealSubquotient> summands;
    bool bad = false;
    for (int si = 0; si < nsummands; ++si) {
      int ngens = static_cast<int>(rng.range(1, 3));
      std::vector<Polynomial> gens;
      for (int gi = 0; gi < ngens; ++gi) {
        Expo m;
        int deg = static_cast<int>(rng.range(1, degree_limit));
        for (int t = 0; t < deg; ++t) {
          int v = static_cast<int>(rng.range(0, nv - 1));
          m.e[v] = static_cast<uint16_t>(m.e[v] + 1);
        }
        m.deg = static_cast<uint32_t>(deg);
        gens.push_back(Polynomial::monomial(ring, m));
      }
      Ideal bottom(ring, gens);
      if (is_unit_ideal(bottom)) {
        bad = true;
        break;
      }
      summands.push_back(make_subquotient(Ideal::unit(ring), bottom));
      module.push_back(json{{"quotient", bottom.gen_strings()}});
    }
    if (bad || summands.empty()) continue;
    ModuleExpr M = make_module(ring, summands);
    if (module_dim(M) < 1) continue;  // corollaries concern positive dimension

    json inst;
    inst["ring"] = {{"vars", vars}, {"field", "QQ"}, {"order", "grevlex"}};
    inst["module"] = module;
    inst["options"] = {{"seed", rng.next() % 100000}, {"n_max", 48}, {"coeff_bound", 3}};
    out.push_back(std::move(inst));
    ++produced;
  }
  return out;
}

}  // namespace seqcm
