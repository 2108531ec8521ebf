// Acceptance suite: runs every acceptance criterion at its stated tolerance (all
// tolerances are exact integer equalities) and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "seqcm/session.hpp"

using namespace seqcm;

namespace {

std::string g_sessions_dir = "sessions";
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail, double secs) {
  std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion, detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

template <typename F>
void run(int criterion, const std::string& name, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail = name;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" [exception: ") + e.what() + "]";
    pass = false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(criterion, pass, detail, secs);
}

RingPtr R4() { return make_ring({"X", "Y", "Z", "W"}); }

ModuleData analyze_gens(const RingPtr& r, const std::vector<std::vector<std::string>>& summands) {
  std::vector<IdealSubquotient> sq;
  for (const auto& gens : summands)
    sq.push_back(make_subquotient(Ideal::unit(r), Ideal::from_strings(r, gens)));
  return analyze_module(make_module(r, sq));
}

// Sequentially Cohen-Macaulay corpus: direct sums of Cohen-Macaulay monomial cyclics
// (polynomial rings, primes, pure-power irreducibles, monomial complete
// intersections, hypersurfaces) in at most 4 variables.
std::vector<ModuleData> seqcm_corpus() {
  auto r = R4();
  std::vector<std::vector<std::vector<std::string>>> shapes = {
      {{"X"}},                                  // 3-dim polynomial-like
      {{"X*Y"}},                                // hypersurface
      {{"X", "Y"}},                             // plane
      {{"X^2", "Y^3"}},                         // complete intersection, dim 2
      {{"X^2", "Y", "Z"}},                      // irreducible, dim 1
      {{"X"}, {"Y", "Z", "W"}},                 // dims 3, 1
      {{"X*Y"}, {"X", "Y"}},                    // dims 3, 2
      {{"X", "Y"}, {"X", "Z", "W"}},            // dims 2, 1
      {{"X^2"}, {"Y", "Z"}},                    // dims 3, 2
      {{"X"}, {"X", "Y"}, {"Y", "Z", "W"}},     // dims 3, 2, 1
      {{"X^2", "Y^2"}, {"X", "Y", "Z"}},        // dims 2, 1
      {{"X*Y*Z"}},                              // hypersurface, dim 3
      {{"X", "Y^4"}},                           // CI, dim 2
      {{"W"}, {"X", "Y"}},                      // dims 3, 2
      {{"X"}, {"X", "Y", "Z", "W^2"}},          // dims 3, 0 (nonzero H^0 level)
      {{"X^3", "Y"}, {"X", "Y", "Z^2", "W"}},   // dims 2, 0
      {{"Z", "W"}},                             // plane again, distinct labels
      {{"X^2*Y^2"}},                            // hypersurface with multiplicity
      {{"X", "Z"}, {"X", "Y", "W"}},            // dims 2, 1
      {{"Y"}, {"Z", "W"}},                      // dims 3, 2
      {{"X", "Y"}, {"Z", "W", "X"}, {"X", "Y", "Z", "W^3"}},  // dims 2, 1, 0
  };
  std::vector<ModuleData> out;
  for (const auto& s : shapes) out.push_back(analyze_gens(r, s));
  return out;
}

// Non-sequentially-CM corpus: pairs of dimension-2 monomial components meeting only
// at the origin (depth 1 by Mayer-Vietoris), plus direct sums keeping that quotient.
std::vector<ModuleData> non_seqcm_corpus() {
  auto r = R4();
  auto planes = [&](const std::vector<std::string>& A, const std::vector<std::string>& B) {
    Ideal a = Ideal::from_strings(r, A);
    Ideal b = Ideal::from_strings(r, B);
    return ideal_intersection(a, b).gen_strings();
  };
  std::vector<std::vector<std::vector<std::string>>> shapes = {
      {planes({"X", "Y"}, {"Z", "W"})},
      {planes({"X", "Y^2"}, {"Z", "W"})},
      {planes({"X^2", "Y"}, {"Z", "W^2"})},
      {planes({"X", "Y^3"}, {"Z^2", "W"})},
      {planes({"X^2", "Y^2"}, {"Z", "W"})},
      {planes({"X", "Y"}, {"Z^3", "W"})},
      {planes({"X", "Y"}, {"Z", "W"}), {"W"}},             // the second closing example
      {planes({"X", "Y"}, {"Z", "W"}), {"Y", "Z", "W"}},   // extra dim-1 piece
      {planes({"X", "Y"}, {"Z", "W"}), {}},                // plus a free rank-1 piece
      {planes({"X^2", "Y"}, {"Z", "W"}), {"X", "Y", "Z", "W^2"}},  // plus finite length
  };
  std::vector<ModuleData> out;
  for (const auto& s : shapes) {
    std::vector<std::vector<std::string>> gens;
    for (const auto& g : s) gens.push_back(g);
    out.push_back(analyze_gens(r, gens));
  }
  return out;
}

bool criterion1(std::string& detail) {
  auto s = load_session_file(g_sessions_dir + "/first_closing_example.json");
  ModuleData D = session_module_data(s);
  bool ok = true;

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto q = random_parameter_system(D.M, seed).ideal;
    long long e1 = hilbert_coefficients(D.M, q).e1();
    ok = ok && (e1 == 0);
  }
  ok = ok && (D.F.lambda == std::vector<int>{3, 1});
  ok = ok && (D.F.levels[1].dim == 1);
  ok = ok && ideal_equal(D.F.levels[1].tops[0], Ideal::from_strings(D.M.ring, {"X"}));
  ok = ok && module_is_zero(level_module(D.F, 2));

  auto oracle = sequential_cm_oracle(D, 1);
  ok = ok && (oracle.verdict == Verdict::yes);
  auto ps = distinguished_parameter_system(D.M, D.F, D.decomps, 1);
  auto lam = check_signature(D, ps.ideal, SignatureMode::lambda);
  ok = ok && (lam.verdict == Verdict::yes);

  detail = "first closing example: e_1 = 0 for 10 seeded parameter ideals; filtration (3,1); "
           "oracle and lambda signature report sequentially CM";
  return ok;
}

bool criterion2(std::string& detail) {
  auto s = load_session_file(g_sessions_dir + "/second_closing_example.json");
  ModuleData D = session_module_data(s);
  Ideal Q = s.ideals.at("Q");
  Ideal Qp = s.ideals.at("Qprime");
  bool ok = true;

  auto c = hilbert_coefficients(D.M, Q);
  ok = ok && (c.e1() == -2) && (c.e[2] == 0);
  auto a = arithmetic_degree(D.M, Q, D.F, D.decomps, ArdegRoute::both);
  ok = ok && (a.values == std::vector<long long>{0, 0, 2, 1});
  ok = ok && !is_distinguished(Q, D.F).ok;

  auto oracle = sequential_cm_oracle(D, 1);
  ok = ok && (oracle.verdict == Verdict::no);

  auto lam = check_signature(D, Q, SignatureMode::lambda);
  bool all_pass = true;
  for (const auto& cmp : lam.comparisons) all_pass = all_pass && cmp.pass;
  ok = ok && all_pass && (lam.verdict == Verdict::not_applicable);

  auto lamp = check_signature(D, Qp, SignatureMode::lambda);
  bool some_fail = false;
  for (const auto& cmp : lamp.comparisons) some_fail = some_fail || !cmp.pass;
  ok = ok && lamp.q_distinguished && some_fail && (lamp.verdict == Verdict::no);

  detail = "second closing example: e_1 = -2, e_2 = 0, ardeg (0,0,2,1), Q not distinguished, "
           "oracle false, lambda all-pass with verdict not-applicable, distinguished q' fails";
  return ok;
}

bool criterion3(std::string& detail) {
  bool ok = true;
  int checked_pos = 0, checked_neg = 0;

  for (auto& D : seqcm_corpus()) {
    const int d = module_dim(D.M);
    std::vector<int> expected_nonzero;  // indices d - d_i
    for (int i = 0; i < D.F.s(); ++i) expected_nonzero.push_back(d - D.F.levels[i].dim);
    auto oracle = sequential_cm_oracle(D, 3);
    if (oracle.verdict != Verdict::yes) {
      ok = false;
      detail = "a corpus instance expected sequentially CM failed the oracle";
      return ok;
    }
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      auto ps = distinguished_parameter_system(D.M, D.F, D.decomps, seed);
      auto full = check_signature(D, ps.ideal, SignatureMode::full);
      ok = ok && (full.verdict == Verdict::yes);
      for (int j = 0; j <= d; ++j) {
        bool should_vanish = true;
        for (int idx : expected_nonzero) should_vanish = should_vanish && (j != idx);
        if (should_vanish) ok = ok && (full.e[j] == 0);
      }
    }
    ++checked_pos;
  }

  for (auto& D : non_seqcm_corpus()) {
    auto oracle = sequential_cm_oracle(D, 3);
    ok = ok && (oracle.verdict == Verdict::no);
    auto ps = distinguished_parameter_system(D.M, D.F, D.decomps, 7);
    auto lam = check_signature(D, ps.ideal, SignatureMode::lambda);
    ok = ok && (lam.verdict == Verdict::no);
    ok = ok && (lam.verdict == oracle.verdict);
    ++checked_neg;
  }

  detail = "main-theorem equivalence: " + std::to_string(checked_pos) +
           " sequentially CM instances x 5 distinguished ideals pass the full signature with "
           "e_j = 0 off the level indices; " +
           std::to_string(checked_neg) + " non-seqCM instances fail lambda and match the oracle";
  return ok;
}

bool criterion4(std::string& detail) {
  bool ok = true;
  auto corpus = fuzz_corpus(2026, 50);
  int n = 0;
  for (auto& inst : corpus) {
    Session s = load_session(inst);
    ModuleData D = session_module_data(s);
    ParameterSystem ps = random_parameter_system(D.M, s.options.seed, s.options.coeff_bound);
    CorollaryReport c = corollary_checks(D, ps.ideal);
    ok = ok && c.bound_holds && c.nonpositive;
    ok = ok && c.extremal_matches_cm;
    ok = ok && c.zero_case_consistent;
    ok = ok && c.vasconcelos_consistent;
    ++n;
  }
  detail = "corollary bounds: e_1 <= -ardeg_{d-1} <= 0 with zero violations over " +
           std::to_string(n) + " fuzz instances; extremal and zero cases match the CM criteria";
  return ok && n >= 50;
}

bool criterion5(std::string& detail) {
  bool ok = true;
  int n = 0;
  auto check_instance = [&](ModuleData& D, uint64_t seed) {
    auto q = random_parameter_system(D.M, seed).ideal;
    auto dir = arithmetic_degree_direct(D.M, q, D.decomps);
    auto flt = arithmetic_degree_filtration(D.F, q);
    ok = ok && (dir.values == flt.values);
    ++n;
  };
  for (auto& D : seqcm_corpus()) check_instance(D, 10 + n);
  for (auto& D : non_seqcm_corpus()) check_instance(D, 20 + n);
  for (auto& inst : fuzz_corpus(515, 25)) {
    Session s = load_session(inst);
    ModuleData D = session_module_data(s);
    check_instance(D, s.options.seed);
  }
  detail = "direct and filtration arithmetic-degree vectors identical on all " +
           std::to_string(n) + " monomial corpus instances";
  return ok;
}

bool criterion6(std::string& detail) {
  auto r = R4();
  bool ok = true;
  int pairs = 0;

  // Direct-sum instances M = A + B with dim B < dim A, N = B.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> combos = {
      {{"X"}, {"Y", "Z", "W"}},
      {{"X"}, {"X", "Y"}},
      {{"X*Y"}, {"X", "Y", "Z"}},
      {{"X", "Y"}, {"X", "Z", "W"}},
      {{"X^2"}, {"Y", "Z"}},
      {{"X*Z", "X*W", "Y*Z", "Y*W"}, {"W"}},
      {{"X*Z", "X*W", "Y*Z", "Y*W"}, {"X", "Y", "Z"}},
      {{"W"}, {"X", "Y"}},
      {{"X^2", "Y^3"}, {"X", "Y", "Z"}},
      {{"Y"}, {"Z", "W"}},
  };
  for (const auto& [agens, bgens] : combos) {
    Ideal A = Ideal::from_strings(r, agens);
    Ideal B = Ideal::from_strings(r, bgens);
    ModuleExpr M = direct_sum(cyclic_module(A), cyclic_module(B));
    if (subquotient_dim(M.summands[1]) >= subquotient_dim(M.summands[0])) continue;
    for (uint64_t seed = 1; seed <= 2; ++seed) {
      auto q = random_parameter_system(M, seed).ideal;
      // N = second summand: tops (0) on the first, (1) on the second.
      auto rep = ses_coefficient_check(M, {Ideal::zero(r), Ideal::unit(r)}, q);
      ok = ok && rep.pass;
      ++pairs;
    }
  }

  // dim-1 instances: e_1 = -l(H^0) exactly.
  auto r2 = make_ring({"x", "y"});
  std::vector<std::vector<std::string>> dim1 = {{"x^2", "x*y"}, {"x*y"}, {"y"}, {"x^2*y"}, {"y^2"}};
  int ones = 0;
  for (const auto& gens : dim1) {
    ModuleExpr M = cyclic_module(Ideal::from_strings(r2, gens));
    if (module_dim(M) != 1) continue;
    for (uint64_t seed = 1; seed <= 2; ++seed) {
      auto q = random_parameter_system(M, seed).ideal;
      auto rep = dim1_chern_check(M, q);
      ok = ok && rep.pass;
      ++ones;
    }
  }
  ModuleExpr mixed = direct_sum(cyclic_module(Ideal::from_strings(r2, {"x"})),
                                cyclic_module(Ideal::from_strings(r2, {"x", "y^2"})));
  auto repm = dim1_chern_check(mixed, random_parameter_system(mixed, 5).ideal);
  ok = ok && repm.pass;
  ++ones;

  detail = "exact-sequence coefficient relation on " + std::to_string(pairs) +
           " direct-sum checks; dim-1 identity e_1 = -l(H^0) on " + std::to_string(ones) +
           " instances";
  return ok && pairs >= 20 && ones >= 5;
}

bool criterion7(std::string& detail) {
  bool ok = true;
  int n = 0;
  auto corpus = seqcm_corpus();
  for (size_t i = 0; i < corpus.size() && n < 6; i += 4) {
    ModuleData& D = corpus[i];
    auto ps = distinguished_parameter_system(D.M, D.F, D.decomps, 13 + i);
    auto rep = partial_sum_identity_check(D, ps, D.F.s(), 5);
    ok = ok && rep.applicable && rep.identity_holds && rep.coefficients_match;
    ok = ok && static_cast<int>(rep.lhs.size()) == 5;
    ++n;
  }
  detail = "partial-sum length identity and coefficient consequence on " + std::to_string(n) +
           " sequentially CM instances over 5-point windows";
  return ok && n >= 5;
}

bool criterion8(std::string& detail) {
  bool ok = true;

  // Reduced-basis canonicality under 100 random permutations and scalings.
  auto r = make_ring({"x", "y", "z"});
  std::vector<std::string> gens = {"x*y - z^2", "x^2 - y*z", "y^3 - x*z^2", "x*z - y^2"};
  auto reference = Ideal::from_strings(r, gens).basis();
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) {
      Coeff scale(num(rng), num(rng));
      ps.push_back(parse_polynomial(g, r).mul_scalar(scale));
    }
    if (trial % 4 == 0) ps.push_back(ps[trial % ps.size()]);
    std::shuffle(ps.begin(), ps.end(), rng);
    auto b = Ideal(r, ps).basis();
    bool same = b.elements.size() == reference.elements.size();
    for (size_t i = 0; same && i < b.elements.size(); ++i)
      same = b.elements[i] == reference.elements[i];
    ok = ok && same;
  }

  // Hilbert fits validate on 3 extra points beyond the fitted window, corpus-wide.
  int fits = 0;
  for (auto& inst : fuzz_corpus(77, 12)) {
    Session s = load_session(inst);
    ModuleData D = session_module_data(s);
    auto q = random_parameter_system(D.M, s.options.seed).ideal;
    HilbertTable T;
    auto c = hilbert_coefficients(D.M, q, T, FitOptions{});
    HsEvaluator ev(D.M, q);
    for (int n = T.n_hi + 1; n <= T.n_hi + 3; ++n)
      ok = ok && (hilbert_poly_eval(c, n) == static_cast<long long>(ev.length_at(n)));
    ++fits;
  }

  // Subquotient lengths under generator reordering across corpus levels.
  int perms = 0;
  auto R = R4();
  auto S = analyze_gens(R, {{"X*Y", "X*Z", "X*W"}});
  Ideal U = S.F.levels[1].tops[0];
  Ideal J = S.M.summands[0].bottom;
  Ideal bigger = ideal_sum(J, ideal_power(irrelevant_ideal(R), 2));
  std::vector<Polynomial> ugens = {parse_polynomial("X", R), parse_polynomial("X*Y", R),
                                   parse_polynomial("X*Z", R)};
  Length first = Length::of(0);
  std::sort(ugens.begin(), ugens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.str() < b.str();
  });
  bool have_first = false;
  do {
    Ideal Uperm(R, ugens);
    Length l = ideal_subquotient_length(Uperm, ideal_intersection(bigger, Uperm));
    if (!have_first) {
      first = l;
      have_first = true;
    }
    ok = ok && (l == first);
    ++perms;
  } while (std::next_permutation(ugens.begin(), ugens.end(),
                                 [](const Polynomial& a, const Polynomial& b) { return a.str() < b.str(); }));

  detail = "kernel properties: canonical bases under 100 permutations/scalings, " +
           std::to_string(fits) + " fits validated on 3 extra points, subquotient length stable over " +
           std::to_string(perms) + " generator orderings";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_sessions_dir = argv[1];
  run(1, "", criterion1);
  run(2, "", criterion2);
  run(3, "", criterion3);
  run(4, "", criterion4);
  run(5, "", criterion5);
  run(6, "", criterion6);
  run(7, "", criterion7);
  run(8, "", criterion8);
  if (g_failures == 0)
    std::printf("acceptance: all criteria PASS\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures;
}
