#pragma once

// Finite subsets of [1..n] with the dominance-order Hom/Ext calculus and the
// weak/strong separation predicates.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qflag {

// A subset of [1..n], elements strictly increasing.
struct KSet {
  int n = 0;
  std::vector<int> elems;

  bool operator==(const KSet&) const = default;
  bool operator<(const KSet& o) const {
    return std::tie(n, elems) < std::tie(o.n, o.elems);
  }
  int size() const { return static_cast<int>(elems.size()); }
  bool contains(int x) const;
};

KSet make_kset(int n, std::vector<int> elems);
void check_kset(const KSet& s);

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_inter(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);

// The d smallest elements of I, increasing. Requires 1 <= d <= |I|.
std::vector<int> s_prefix(const KSet& I, int d);
// The d largest elements of I, increasing. Requires 1 <= d <= |I|.
std::vector<int> e_suffix(const KSet& I, int d);

// Elementwise <= on equal-size increasing tuples.
bool leq_order(const std::vector<int>& a, const std::vector<int>& b);

// dim Hom between the rank-one modules labeled by I and J; both nonempty.
int dim_hom(const KSet& I, const KSet& J);

// dim of self-extensions over the exact-structure ambient algebra (symmetric).
int dim_ext_E(const KSet& I, const KSet& J);

// One-sided extension dimension (not symmetric).
int dim_ext_D(const KSet& I, const KSet& J);

bool weakly_separated(const KSet& I, const KSet& J);
bool strongly_separated(const KSet& I, const KSet& J);

// Quasi-commutation exponent; requires weakly_separated(I, J).
int c_exponent(const KSet& I, const KSet& J);

// min(|I|,|J|) - |I cap J|.
int d_exponent(const KSet& I, const KSet& J);

// Embeds I into [1..2n] by appending the tail [n+|I|+1 .. 2n].
KSet pad(const KSet& I);

std::vector<KSet> all_nonempty_subsets(int n);
std::vector<KSet> all_subsets_of_size(int n, int k);

std::string format_set(const KSet& s);
// Parses "1,3" and range shorthand "1..4", also mixed "1,3..5,7".
std::vector<int> parse_int_set(const std::string& text);

void to_json(nlohmann::json& j, const KSet& s);
void from_json(const nlohmann::json& j, KSet& s);

}  // namespace qflag
