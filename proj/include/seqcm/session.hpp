#ifndef SEQCM_SESSION_HPP
#define SEQCM_SESSION_HPP

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "seqcm/seqcm.hpp"

namespace seqcm {

using json = nlohmann::ordered_json;

struct SessionOptions {
  uint64_t seed = 1;
  int n_max = 48;
  int coeff_bound = 3;
  bool seed_from_file = false;
};

// Batch input: a ring, a module as a list of cyclic quotients (optionally with
// user-supplied decompositions), named parameter-ideal candidates, and options.
struct Session {
  RingPtr ring;
  ModuleExpr module;
  std::vector<std::optional<PrimaryDecomposition>> decomps;
  std::map<std::string, Ideal> ideals;
  SessionOptions options;
  std::vector<std::string> warnings;
};

Session load_session(const json& j);
Session load_session_file(const std::string& path);
json session_to_json(const Session& s);

// Completes automatic decompositions (monomial summands) and builds the filtration.
ModuleData session_module_data(const Session& s);

// Reproducible random monomial-quotient sessions with seeded options; identical seeds
// give byte-identical serializations.
std::vector<json> fuzz_corpus(uint64_t seed, int count, int var_limit = 4, int degree_limit = 3);

}  // namespace seqcm

#endif
