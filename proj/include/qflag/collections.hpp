#pragma once

// Weakly separated collections: the rectangle families, single moves
// (geometric exchange, flip), the compaction schedule, and breadth-first
// search through the move graph.

#include <optional>
#include <vector>

#include "json.hpp"

#include "qflag/subsets.hpp"

namespace qflag {

struct WSCollection {
  int n = 0;
  std::vector<int> J;  // admissible sizes, strictly increasing in [1, n-1]
  std::vector<KSet> sets;
};

void check_collection(const WSCollection& c);
bool contains_set(const WSCollection& c, const KSet& s);
bool is_maximal(const WSCollection& c);

WSCollection rectangle(int n, int k);
WSCollection extended_rectangle(int n, const std::vector<int>& J, int k);

// replaces L+{a,c} by L+{b,d}; (a,b,c,d) must interleave cyclically
struct Exchange {
  KSet L;
  int a = 0, b = 0, c = 0, d = 0;
};

enum class FlipDir { Raise, Lower };

// Raise replaces L+{j} by L+{i,k}; Lower goes the other way. i < j < k.
struct Flip {
  KSet L;
  int i = 0, j = 0, k = 0;
  FlipDir dir = FlipDir::Raise;
};

WSCollection geometric_exchange(const WSCollection& c, const Exchange& e);
WSCollection flip(const WSCollection& c, const Flip& f);

std::vector<Flip> flip_schedule(int n, const std::vector<int>& J, int k);
WSCollection apply_flips(WSCollection c, const std::vector<Flip>& steps);

struct Move {
  bool is_flip = false;
  Exchange ex;
  Flip fl;
};

std::vector<Move> enumerate_moves(const WSCollection& c);
WSCollection apply_move(const WSCollection& c, const Move& m);
std::string describe_move(const Move& m);

// breadth-first search for a collection containing target; nullopt when the
// bound is exhausted
std::optional<std::vector<Move>> reach(const WSCollection& from, const KSet& target,
                                       int max_depth);

void to_json(nlohmann::json& j, const WSCollection& c);
void from_json(const nlohmann::json& j, WSCollection& c);

}  // namespace qflag
