#pragma once

// Class-lattice bookkeeping: coordinate dictionaries, the three bilinear
// forms, and extension dimensions computed through them.

#include <vector>

#include "json.hpp"

#include "qflag/dmod.hpp"

namespace qflag {

// Class of a module together with the staircase content of its trace.
struct EClass {
  std::vector<long long> delta;  // coordinates in the layer basis, size n
  std::vector<long long> eta;    // staircase multiplicities, size n
};

// Weight vectors are already written in layer coordinates.
std::vector<long long> zeta(const std::vector<long long>& x);

std::vector<long long> omega_coords(int n, int i);  // i leading ones
std::vector<long long> alpha_coords(int n, int i);  // -e_i + e_{i+1}
std::vector<long long> proj_class(int n, int i);    // ones past position i

std::vector<long long> delta_of_set(const KSet& I);
std::vector<long long> eta_to_delta(const std::vector<long long>& eta);
EClass eclass_of(const Rep& m);

long long form_angle(const std::vector<long long>& x, const std::vector<long long>& y);
long long form_round(const EClass& x, const EClass& y);
long long form_Lad(const EClass& x, const EClass& y);

// dim of extensions over the ambient exact structure: hom both ways minus the
// round form; nonnegative by construction.
long long ext1_sym(const Rep& X, const Rep& Y);
// one-sided extension dimension: hom minus the angle form
long long ext1_one(const Rep& X, const Rep& Y);

void to_json(nlohmann::json& j, const EClass& c);
void from_json(const nlohmann::json& j, EClass& c);

}  // namespace qflag
