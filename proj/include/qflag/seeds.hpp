#pragma once

// Seeds attached to weakly separated collections: exchange matrix from
// irreducible map counts, the log-commutation matrix from hom dimensions,
// matrix mutation with label tracking, and DOT export.

#include <string>
#include <vector>

#include "json.hpp"

#include "qflag/collections.hpp"
#include "qflag/dmod.hpp"

namespace qflag {

struct Seed {
  int n = 0;
  std::vector<int> J;
  std::vector<KSet> labels;    // mutable block first, then frozen
  std::vector<bool> symbolic;  // label only known formally after mutation
  int num_mutable = 0;
  MatI B;    // rows all labels, columns the mutable ones
  MatI L;    // pairwise hom-dimension differences
  MatI irr;  // irreducible map counts; empty after mutation
};

// a label is frozen when it is weakly separated from every admissible set
bool frozen_in_ambient(int n, const std::vector<int>& J, const KSet& s);

// requires the sizes to form a consecutive block
Seed seed_from_collection(const WSCollection& c);

Seed mutate(const Seed& s, int k);  // k indexes the mutable block

std::string export_dot(const Seed& s);

void to_json(nlohmann::json& j, const Seed& s);
void from_json(const nlohmann::json& j, Seed& s);

}  // namespace qflag
