#include "qflag/seeds.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qflag {

namespace {

long long pos(long long x) { return x > 0 ? x : 0; }

MatI irr_of_labels(int n, const std::vector<KSet>& labels) {
  std::vector<Rep> mods;
  mods.reserve(labels.size());
  for (const auto& I : labels) mods.push_back(build_rank_one(n, I));
  return end_radical_irr(mods);
}

void check_compatible(const Seed& s) {
  int nn = static_cast<int>(s.labels.size());
  int m = s.num_mutable;
  MatI prod = s.B.transpose() * s.L;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < nn; ++j) {
      long long want = (i == j) ? 2 : 0;
      if (prod(i, j) != want)
        throw std::logic_error("seed: exchange and commutation data incompatible");
    }
}

}  // namespace

bool frozen_in_ambient(int n, const std::vector<int>& J, const KSet& s) {
  for (int t : J)
    for (const auto& cand : all_subsets_of_size(n, t))
      if (!weakly_separated(s, cand)) return false;
  return true;
}

Seed seed_from_collection(const WSCollection& c) {
  check_collection(c);
  for (size_t i = 1; i < c.J.size(); ++i)
    if (c.J[i] != c.J[i - 1] + 1)
      throw std::invalid_argument("seed: sizes must form a consecutive block");
  Seed s;
  s.n = c.n;
  s.J = c.J;
  std::vector<KSet> froz;
  for (const auto& lab : c.sets) {
    if (frozen_in_ambient(c.n, c.J, lab))
      froz.push_back(lab);
    else
      s.labels.push_back(lab);
  }
  s.num_mutable = static_cast<int>(s.labels.size());
  s.labels.insert(s.labels.end(), froz.begin(), froz.end());
  int nn = static_cast<int>(s.labels.size());
  s.symbolic.assign(nn, false);

  s.L = MatI::Zero(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      if (i != j)
        s.L(i, j) = dim_hom(s.labels[i], s.labels[j]) - dim_hom(s.labels[j], s.labels[i]);

  s.irr = irr_of_labels(c.n, s.labels);
  s.B = MatI::Zero(nn, s.num_mutable);
  for (int j = 0; j < nn; ++j)
    for (int k = 0; k < s.num_mutable; ++k)
      s.B(j, k) = s.irr(j, k) - s.irr(k, j);

  check_compatible(s);
  return s;
}

Seed mutate(const Seed& s, int k) {
  if (k < 0 || k >= s.num_mutable) throw std::out_of_range("mutate: not a mutable index");
  int nn = static_cast<int>(s.labels.size());
  Seed out = s;
  out.irr.resize(0, 0);

  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < s.num_mutable; ++j) {
      if (i == k || j == k)
        out.B(i, j) = -s.B(i, j);
      else
        out.B(i, j) = s.B(i, j) + pos(s.B(i, k)) * pos(s.B(k, j)) -
                      pos(-s.B(i, k)) * pos(-s.B(k, j));
    }

  for (int i = 0; i < nn; ++i) {
    if (i == k) continue;
    long long v = -s.L(i, k);
    for (int j = 0; j < nn; ++j)
      if (j != k) v += pos(s.B(j, k)) * s.L(i, j);
    out.L(i, k) = v;
    out.L(k, i) = -v;
  }
  out.L(k, k) = 0;

  // recover the new label from the four exchange witnesses when possible
  out.symbolic[k] = true;
  std::vector<int> wit;
  bool clean = true;
  for (int j = 0; j < nn && clean; ++j) {
    if (j == k || s.B(j, k) == 0) continue;
    if (std::abs(s.B(j, k)) != 1 || s.symbolic[j]) clean = false;
    wit.push_back(j);
  }
  if (clean && wit.size() == 4 && !s.symbolic[k]) {
    std::vector<int> u, com = s.labels[wit[0]].elems;
    for (int j : wit) {
      u = set_union(u, s.labels[j].elems);
      com = set_inter(com, s.labels[j].elems);
    }
    std::vector<int> cand = set_union(com, set_minus(u, s.labels[k].elems));
    bool ok = std::binary_search(s.J.begin(), s.J.end(), static_cast<int>(cand.size()));
    if (ok) {
      KSet lab = make_kset(s.n, cand);
      for (int j = 0; j < nn && ok; ++j) {
        if (j == k) continue;
        if (s.symbolic[j] || s.labels[j] == lab || !weakly_separated(lab, s.labels[j]))
          ok = false;
      }
      if (ok) {
        out.labels[k] = lab;
        out.symbolic[k] = false;
      }
    }
  }

  check_compatible(out);
  return out;
}

std::string export_dot(const Seed& s) {
  int nn = static_cast<int>(s.labels.size());
  MatI irr = s.irr;
  if (irr.rows() != nn) {
    for (bool sym : s.symbolic)
      if (sym) throw std::logic_error("export_dot: symbolic label has no module");
    std::vector<KSet> labs(s.labels.begin(), s.labels.end());
    irr = irr_of_labels(s.n, labs);
  }
  auto is_frozen = [&](int i) { return i >= s.num_mutable; };
  std::ostringstream os;
  os << "digraph seed {\n";
  for (int i = 0; i < nn; ++i) {
    os << "  v" << i << " [label=\"" << format_set(s.labels[i]) << "\"";
    if (is_frozen(i)) os << ", shape=box";
    os << "];\n";
  }
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < s.num_mutable; ++k)
    for (int j = 0; j < nn; ++j) {
      if (j == k) continue;
      long long b = s.B(j, k);
      if (b > 0)
        for (long long t = 0; t < b; ++t) edges.push_back({j, k});
      else if (b < 0 && is_frozen(j))
        for (long long t = 0; t < -b; ++t) edges.push_back({k, j});
    }
  for (int i = s.num_mutable; i < nn; ++i)
    for (int j = s.num_mutable; j < nn; ++j) {
      if (i == j) continue;
      for (long long t = 0; t < irr(i, j); ++t) edges.push_back({i, j});
    }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

void to_json(nlohmann::json& j, const Seed& s) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : s.labels) labels.push_back(l.elems);
  nlohmann::json brows = nlohmann::json::array();
  for (int i = 0; i < s.B.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < s.B.cols(); ++c) row.push_back(s.B(i, c));
    brows.push_back(row);
  }
  nlohmann::json lrows = nlohmann::json::array();
  for (int i = 0; i < s.L.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < s.L.cols(); ++c) row.push_back(s.L(i, c));
    lrows.push_back(row);
  }
  std::vector<bool> frozen(s.labels.size(), false);
  for (size_t i = s.num_mutable; i < s.labels.size(); ++i) frozen[i] = true;
  j = nlohmann::json{{"n", s.n},         {"J", s.J},
                     {"labels", labels}, {"B", brows},
                     {"L", lrows},       {"frozen", frozen},
                     {"symbolic", s.symbolic}};
}

void from_json(const nlohmann::json& j, Seed& s) {
  s.n = j.at("n").get<int>();
  s.J = j.at("J").get<std::vector<int>>();
  s.labels.clear();
  for (const auto& row : j.at("labels"))
    s.labels.push_back(make_kset(s.n, row.get<std::vector<int>>()));
  auto frozen = j.at("frozen").get<std::vector<bool>>();
  if (frozen.size() != s.labels.size())
    throw std::invalid_argument("seed json: frozen flag count mismatch");
  s.num_mutable = 0;
  for (size_t i = 0; i < frozen.size(); ++i) {
    if (!frozen[i]) {
      if (static_cast<size_t>(s.num_mutable) != i)
        throw std::invalid_argument("seed json: mutable labels must come first");
      ++s.num_mutable;
    }
  }
  if (j.contains("symbolic"))
    s.symbolic = j.at("symbolic").get<std::vector<bool>>();
  else
    s.symbolic.assign(s.labels.size(), false);
  int nn = static_cast<int>(s.labels.size());
  s.B = MatI::Zero(nn, s.num_mutable);
  auto brows = j.at("B");
  for (int i = 0; i < nn; ++i)
    for (int c = 0; c < s.num_mutable; ++c) s.B(i, c) = brows.at(i).at(c).get<long long>();
  s.L = MatI::Zero(nn, nn);
  auto lrows = j.at("L");
  for (int i = 0; i < nn; ++i)
    for (int c = 0; c < nn; ++c) s.L(i, c) = lrows.at(i).at(c).get<long long>();
  s.irr.resize(0, 0);
  check_compatible(s);
}

}  // namespace qflag
