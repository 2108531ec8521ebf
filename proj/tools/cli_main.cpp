#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "seqcm/session.hpp"

using namespace seqcm;

namespace {

// Exit contract: 0 computed, 1 verdict false / inequality violated,
// 2 input error, 3 inconclusive (stabilization window or certificate failed).
int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::no_stabilization:
    case ErrorKind::nonintegral_fit:
    case ErrorKind::retries_exhausted:
      return 3;
    default:
      return 2;
  }
}

uint64_t resolve_seed(const CLI::Option* seed_opt, uint64_t cli_seed, const Session& s) {
  if (seed_opt && seed_opt->count() > 0) return cli_seed;
  if (s.options.seed_from_file) return s.options.seed;
  if (const char* env = std::getenv("SEQCM_SEED")) return std::strtoull(env, nullptr, 10);
  return s.options.seed;
}

Ideal named_ideal(const Session& s, const std::string& name) {
  auto it = s.ideals.find(name);
  if (it == s.ideals.end()) fail(ErrorKind::parse, "no ideal named '" + name + "' in the session");
  return it->second;
}

json filtration_json(const ModuleData& D) {
  json j;
  j["dim"] = module_dim(D.M);
  j["lambda"] = D.F.lambda;
  j["levels"] = json::array();
  for (int i = 0; i <= D.F.s(); ++i) {
    json lvl;
    lvl["dim"] = D.F.levels[i].dim;
    lvl["tops"] = json::array();
    for (const auto& t : D.F.levels[i].tops) lvl["tops"].push_back(t.gen_strings());
    j["levels"].push_back(lvl);
  }
  j["h0_length"] = h0_length(D.M);
  return j;
}

json coeffs_json(const HilbertCoefficients& c, const HilbertTable& T) {
  json j;
  j["d"] = c.d;
  j["e"] = c.e;
  j["stabilization_n"] = c.stabilization_n;
  j["table"] = T.values;
  return j;
}

json ardeg_json(const ArdegVector& a) {
  json j;
  j["values"] = a.values;
  j["route"] = a.route == ArdegRoute::direct
                   ? "direct"
                   : (a.route == ArdegRoute::filtration ? "filtration" : "both");
  return j;
}

json params_json(const ParameterSystem& ps) {
  json j;
  json elems = json::array();
  for (const auto& x : ps.elements) elems.push_back(x.str());
  j["elements"] = elems;
  j["ideal"] = ps.ideal.gen_strings();
  j["sop"] = ps.sop;
  j["good"] = ps.good;
  j["distinguished"] = ps.distinguished;
  j["seed"] = ps.seed;
  return j;
}

json report_json(const SeqCMReport& r) {
  json j;
  j["mode"] = r.mode;
  j["q"] = r.q_gens;
  j["q_distinguished"] = r.q_distinguished;
  if (!r.e.empty()) j["e"] = r.e;
  if (!r.ardeg.empty()) j["ardeg"] = r.ardeg;
  if (!r.comparisons.empty()) {
    json cs = json::array();
    for (const auto& c : r.comparisons)
      cs.push_back(json{{"j", c.j}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    j["comparisons"] = cs;
  }
  if (!r.oracle_levels.empty()) {
    json ls = json::array();
    for (const auto& l : r.oracle_levels)
      ls.push_back(json{{"level", l.level},
                        {"dim", l.dim},
                        {"length_mod_params", l.length_mod_params},
                        {"e0", l.e0},
                        {"cohen_macaulay", l.cohen_macaulay}});
    j["oracle_levels"] = ls;
  }
  j["verdict"] = verdict_str(r.verdict);
  return j;
}

json corollaries_json(const CorollaryReport& c) {
  json j;
  j["e1"] = c.e1;
  j["ardeg_top_minus_1"] = c.ardeg_top_minus_1;
  j["bound_holds"] = c.bound_holds;
  j["nonpositive"] = c.nonpositive;
  j["extremal_equality"] = c.extremal_equality;
  j["quotient_unmixed_cm"] = c.quotient_unmixed_cm;
  j["extremal_matches_cm"] = c.extremal_matches_cm;
  j["dim_unmixed"] = c.dim_unmixed;
  j["zero_case_consistent"] = c.zero_case_consistent;
  j["unmixed"] = c.unmixed;
  j["vasconcelos_consistent"] = c.vasconcelos_consistent;
  return j;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

bool corollary_violation(const CorollaryReport& c) {
  return !c.bound_holds || !c.nonpositive || !c.extremal_matches_cm || !c.zero_case_consistent ||
         !c.vasconcelos_consistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients, arithmetic degrees and sequential Cohen-Macaulayness "
               "of monomial-quotient modules"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON reports");

  std::string session_path, ideal_name, mode = "all", route = "both", emit_dir;
  uint64_t cli_seed = 1;
  int max_n = 16, count = 10, var_limit = 4, degree_limit = 3, coeff_bound = 3;
  bool want_distinguished = false;

  auto* cmd_filt = app.add_subcommand("filtration", "dimension filtration and Lambda(M)");
  cmd_filt->add_option("session", session_path)->required();

  auto* cmd_hilb = app.add_subcommand("hilbert", "Hilbert-Samuel table of M against an ideal");
  cmd_hilb->add_option("session", session_path)->required();
  cmd_hilb->add_option("--ideal", ideal_name)->required();
  cmd_hilb->add_option("--max-n", max_n);

  auto* cmd_coef = app.add_subcommand("coeffs", "Hilbert coefficients e_0..e_d");
  cmd_coef->add_option("session", session_path)->required();
  cmd_coef->add_option("--ideal", ideal_name)->required();

  auto* cmd_ardeg = app.add_subcommand("ardeg", "arithmetic degree vector");
  cmd_ardeg->add_option("session", session_path)->required();
  cmd_ardeg->add_option("--ideal", ideal_name)->required();
  cmd_ardeg->add_option("--route", route)->check(CLI::IsMember({"direct", "filtration", "both"}));

  auto* cmd_find = app.add_subcommand("find-params", "search for a (distinguished) parameter system");
  cmd_find->add_option("session", session_path)->required();
  auto* find_seed = cmd_find->add_option("--seed", cli_seed);
  cmd_find->add_flag("--distinguished", want_distinguished);
  cmd_find->add_option("--coeff-bound", coeff_bound);

  auto* cmd_check = app.add_subcommand("check", "coefficient signature / oracle verdicts");
  cmd_check->add_option("session", session_path)->required();
  cmd_check->add_option("--mode", mode)->check(CLI::IsMember({"dim2", "full", "lambda", "oracle", "all"}));
  cmd_check->add_option("--ideal", ideal_name);
  auto* check_seed = cmd_check->add_option("--seed", cli_seed);

  auto* cmd_fuzz = app.add_subcommand("fuzz", "generated corpus + corollary bound checks");
  auto* fuzz_seed = cmd_fuzz->add_option("--seed", cli_seed);
  cmd_fuzz->add_option("--count", count);
  cmd_fuzz->add_option("--var-limit", var_limit);
  cmd_fuzz->add_option("--degree-limit", degree_limit);
  cmd_fuzz->add_option("--emit", emit_dir, "write the generated sessions into this directory");

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_fuzz->parsed()) {
      uint64_t seed = fuzz_seed->count() ? cli_seed
                                         : (std::getenv("SEQCM_SEED")
                                                ? std::strtoull(std::getenv("SEQCM_SEED"), nullptr, 10)
                                                : 1);
      auto corpus = fuzz_corpus(seed, count, var_limit, degree_limit);
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (size_t i = 0; i < corpus.size(); ++i) {
          std::ofstream out(emit_dir + "/fuzz_" + std::to_string(i) + ".json");
          out << corpus[i].dump(2) << "\n";
        }
      }
      json rep;
      rep["command"] = "fuzz";
      rep["seed"] = seed;
      rep["count"] = corpus.size();
      rep["instances"] = json::array();
      int violations = 0;
      for (auto& inst : corpus) {
        Session s = load_session(inst);
        ModuleData D = session_module_data(s);
        ParameterSystem ps = random_parameter_system(D.M, s.options.seed, s.options.coeff_bound);
        CorollaryReport c = corollary_checks(D, ps.ideal);
        if (corollary_violation(c)) ++violations;
        json ji;
        ji["session"] = inst;
        ji["params"] = params_json(ps);
        ji["corollaries"] = corollaries_json(c);
        rep["instances"].push_back(ji);
      }
      rep["violations"] = violations;
      emit(rep, as_json,
           "fuzz: " + std::to_string(corpus.size()) + " instances, " + std::to_string(violations) +
               " corollary violations");
      return violations == 0 ? 0 : 1;
    }

    Session s = load_session_file(session_path);

    if (cmd_filt->parsed()) {
      ModuleData D = session_module_data(s);
      json j = filtration_json(D);
      j["command"] = "filtration";
      std::string dims;
      for (int x : D.F.lambda) dims += (dims.empty() ? "" : ", ") + std::to_string(x);
      emit(j, as_json,
           "filtration: s = " + std::to_string(D.F.s()) + ", Lambda = {" + dims +
               "}, l(H^0) = " + std::to_string(h0_length(D.M)));
      return 0;
    }

    if (cmd_hilb->parsed()) {
      Ideal q = named_ideal(s, ideal_name);
      HilbertTable T = hilbert_table(s.module, q, max_n);
      json j;
      j["command"] = "hilbert";
      j["ideal"] = q.gen_strings();
      j["n_max"] = max_n;
      j["values"] = T.values;
      std::string txt = "l(M/q^{n+1}M), n = 0.." + std::to_string(max_n) + ":";
      for (auto v : T.values) txt += " " + std::to_string(v);
      emit(j, as_json, txt);
      return 0;
    }

    if (cmd_coef->parsed()) {
      Ideal q = named_ideal(s, ideal_name);
      ModuleData D = session_module_data(s);
      HilbertTable T;
      auto c = hilbert_coefficients(D.M, q, T, FitOptions{-1, s.options.n_max, 4});
      json j = coeffs_json(c, T);
      j["command"] = "coeffs";
      j["ideal"] = q.gen_strings();
      std::string txt = "e =";
      for (auto e : c.e) txt += " " + std::to_string(e);
      emit(j, as_json, txt);
      return 0;
    }

    if (cmd_ardeg->parsed()) {
      Ideal q = named_ideal(s, ideal_name);
      ModuleData D = session_module_data(s);
      ArdegRoute r = route == "direct" ? ArdegRoute::direct
                                       : (route == "filtration" ? ArdegRoute::filtration : ArdegRoute::both);
      ArdegVector a = arithmetic_degree(D.M, q, D.F, D.decomps, r);
      json j = ardeg_json(a);
      j["command"] = "ardeg";
      j["ideal"] = q.gen_strings();
      std::string txt = "ardeg =";
      for (auto v : a.values) txt += " " + std::to_string(v);
      emit(j, as_json, txt);
      return 0;
    }

    if (cmd_find->parsed()) {
      ModuleData D = session_module_data(s);
      uint64_t seed = resolve_seed(find_seed, cli_seed, s);
      ParameterSystem ps =
          want_distinguished
              ? distinguished_parameter_system(D.M, D.F, D.decomps, seed, coeff_bound)
              : random_parameter_system(D.M, seed, coeff_bound);
      if (!want_distinguished) {
        ps.distinguished = is_distinguished(ps.ideal, D.F).ok;
        ps.good = ps.distinguished && is_good_system(ps, D.F);
      }
      json j = params_json(ps);
      j["command"] = "find-params";
      std::string txt = "params:";
      for (const auto& x : ps.elements) txt += " " + x.str() + ";";
      txt += ps.distinguished ? " (distinguished)" : " (sop)";
      emit(j, as_json, txt);
      return 0;
    }

    if (cmd_check->parsed()) {
      ModuleData D = session_module_data(s);
      uint64_t seed = resolve_seed(check_seed, cli_seed, s);
      std::optional<Ideal> qopt;
      if (!ideal_name.empty()) qopt = named_ideal(s, ideal_name);

      auto params_or_ideal = [&]() -> Ideal {
        if (qopt) return *qopt;
        return distinguished_parameter_system(D.M, D.F, D.decomps, seed).ideal;
      };

      if (mode == "dim2") {
        SeqCMReport r = check_dim2(D, qopt ? *qopt : random_parameter_system(D.M, seed).ideal);
        json j = report_json(r);
        j["command"] = "check";
        emit(j, as_json, "dim2 verdict: " + verdict_str(r.verdict));
        return r.verdict == Verdict::no ? 1 : 0;
      }
      if (mode == "full" || mode == "lambda") {
        SeqCMReport r = check_signature(D, params_or_ideal(),
                                        mode == "full" ? SignatureMode::full : SignatureMode::lambda);
        json j = report_json(r);
        j["command"] = "check";
        emit(j, as_json, mode + " verdict: " + verdict_str(r.verdict));
        return r.verdict == Verdict::no ? 1 : 0;
      }
      if (mode == "oracle") {
        SeqCMReport r = sequential_cm_oracle(D, seed);
        json j = report_json(r);
        j["command"] = "check";
        emit(j, as_json, "oracle verdict: " + verdict_str(r.verdict));
        return r.verdict == Verdict::no ? 1 : 0;
      }

      // mode == "all": full audit trail with every intermediate integer.
      json j;
      j["command"] = "check";
      j["mode"] = "all";
      j["filtration"] = filtration_json(D);
      ParameterSystem ps;
      if (qopt) {
        ps.elements = qopt->gens();
        ps.ideal = *qopt;
        ps.sop = is_sop(D.M, ps.ideal);
        ps.seed = seed;
        if (ps.sop) {
          ps.distinguished = is_distinguished(ps.ideal, D.F).ok;
          ps.good = ps.distinguished && is_good_system(ps, D.F);
        }
      } else {
        ps = distinguished_parameter_system(D.M, D.F, D.decomps, seed);
      }
      j["params"] = params_json(ps);
      HilbertTable T;
      auto c = hilbert_coefficients(D.M, ps.ideal, T, FitOptions{-1, s.options.n_max, 4});
      j["coeffs"] = coeffs_json(c, T);
      j["ardeg"] = ardeg_json(arithmetic_degree(D.M, ps.ideal, D.F, D.decomps));
      SeqCMReport full = check_signature(D, ps.ideal, SignatureMode::full);
      SeqCMReport lambda = check_signature(D, ps.ideal, SignatureMode::lambda);
      SeqCMReport oracle = sequential_cm_oracle(D, seed);
      j["signature_full"] = report_json(full);
      j["signature_lambda"] = report_json(lambda);
      j["oracle"] = report_json(oracle);
      CorollaryReport cor = corollary_checks(D, ps.ideal);
      j["corollaries"] = corollaries_json(cor);
      j["verdict"] = verdict_str(oracle.verdict);
      emit(j, as_json,
           "seqCM = " + verdict_str(oracle.verdict) + " (oracle); lambda signature: " +
               verdict_str(lambda.verdict) + "; corollaries " +
               (corollary_violation(cor) ? "VIOLATED" : "consistent"));
      return (oracle.verdict == Verdict::no || corollary_violation(cor)) ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
