#include "qflag/subsets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qflag {

bool KSet::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

KSet make_kset(int n, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  KSet s{n, std::move(elems)};
  check_kset(s);
  return s;
}

void check_kset(const KSet& s) {
  if (s.n < 0) throw std::out_of_range("set: negative ambient size");
  for (int i = 0; i < s.size(); ++i) {
    if (s.elems[i] < 1 || s.elems[i] > s.n)
      throw std::out_of_range("set: element outside [1..n]");
    if (i > 0 && s.elems[i] <= s.elems[i - 1])
      throw std::out_of_range("set: elements must be strictly increasing");
  }
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<int> set_inter(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<int> s_prefix(const KSet& I, int d) {
  if (d < 1 || d > I.size()) throw std::invalid_argument("s_prefix: d out of range");
  return {I.elems.begin(), I.elems.begin() + d};
}

std::vector<int> e_suffix(const KSet& I, int d) {
  if (d < 1 || d > I.size()) throw std::invalid_argument("e_suffix: d out of range");
  return {I.elems.end() - d, I.elems.end()};
}

bool leq_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("leq_order: size mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int dim_hom(const KSet& I, const KSet& J) {
  if (I.n != J.n) throw std::invalid_argument("dim_hom: ambient mismatch");
  if (I.size() == 0 || J.size() == 0)
    throw std::invalid_argument("dim_hom: sets must be nonempty");
  int best = 0;
  int dmax = std::min(I.size(), J.size());
  for (int d = 1; d <= dmax; ++d)
    if (leq_order(s_prefix(I, d), e_suffix(J, d))) best = d;
  return best;
}

int dim_ext_E(const KSet& I, const KSet& J) {
  int inter = static_cast<int>(set_inter(I.elems, J.elems).size());
  int e = dim_hom(I, J) + dim_hom(J, I) - inter - std::min(I.size(), J.size());
  assert(e >= 0);
  return e;
}

int dim_ext_D(const KSet& I, const KSet& J) {
  int inter = static_cast<int>(set_inter(I.elems, J.elems).size());
  int e = dim_hom(I, J) - inter;
  assert(e >= 0);
  return e;
}

namespace {

// All of a strictly below all of b (vacuous when either is empty).
bool below(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) return true;
  return a.back() < b.front();
}

// Split of J \ I around I \ J: (elements below, elements above); valid only
// when nothing of J \ I lies inside the range of I \ J.
std::optional<std::pair<std::vector<int>, std::vector<int>>> split_around(
    const std::vector<int>& ImJ, const std::vector<int>& JmI) {
  std::vector<int> lo, hi;
  for (int x : JmI) {
    if (ImJ.empty() || x < ImJ.front())
      lo.push_back(x);
    else if (x > ImJ.back())
      hi.push_back(x);
    else
      return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

}  // namespace

bool weakly_separated(const KSet& I, const KSet& J) {
  if (I.n != J.n) throw std::invalid_argument("weakly_separated: ambient mismatch");
  auto ImJ = set_minus(I.elems, J.elems);
  auto JmI = set_minus(J.elems, I.elems);
  if (I.size() >= J.size() && split_around(ImJ, JmI)) return true;
  if (J.size() >= I.size() && split_around(JmI, ImJ)) return true;
  return false;
}

bool strongly_separated(const KSet& I, const KSet& J) {
  if (I.n != J.n) throw std::invalid_argument("strongly_separated: ambient mismatch");
  auto ImJ = set_minus(I.elems, J.elems);
  auto JmI = set_minus(J.elems, I.elems);
  return below(ImJ, JmI) || below(JmI, ImJ);
}

int c_exponent(const KSet& I, const KSet& J) {
  if (!weakly_separated(I, J))
    throw std::domain_error("c_exponent: pair is not weakly separated");
  auto ImJ = set_minus(I.elems, J.elems);
  auto JmI = set_minus(J.elems, I.elems);
  std::optional<int> via_i, via_ii;
  if (I.size() >= J.size()) {
    if (auto sp = split_around(ImJ, JmI))
      via_i = static_cast<int>(sp->second.size()) - static_cast<int>(sp->first.size());
  }
  if (J.size() >= I.size()) {
    if (auto sp = split_around(JmI, ImJ))
      via_ii = static_cast<int>(sp->first.size()) - static_cast<int>(sp->second.size());
  }
  if (via_i && via_ii) assert(*via_i == *via_ii);
  if (via_i) return *via_i;
  if (via_ii) return *via_ii;
  throw std::domain_error("c_exponent: pair is not weakly separated");
}

int d_exponent(const KSet& I, const KSet& J) {
  int inter = static_cast<int>(set_inter(I.elems, J.elems).size());
  return std::min(I.size(), J.size()) - inter;
}

KSet pad(const KSet& I) {
  KSet out;
  out.n = 2 * I.n;
  out.elems = I.elems;
  for (int x = I.n + I.size() + 1; x <= 2 * I.n; ++x) out.elems.push_back(x);
  check_kset(out);
  return out;
}

std::vector<KSet> all_nonempty_subsets(int n) {
  std::vector<KSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    KSet s;
    s.n = n;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.elems.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<KSet> all_subsets_of_size(int n, int k) {
  std::vector<KSet> out;
  for (const auto& s : all_nonempty_subsets(n))
    if (s.size() == k) out.push_back(s);
  if (k == 0) out.push_back(KSet{n, {}});
  return out;
}

std::string format_set(const KSet& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elems[i]);
  }
  return out;
}

std::vector<int> parse_int_set(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        int a = std::stoi(item.substr(0, dots));
        int b = std::stoi(item.substr(dots + 2));
        if (b < a) throw std::invalid_argument("descending range");
        for (int x = a; x <= b; ++x) out.push_back(x);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad set literal: " + text);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void to_json(nlohmann::json& j, const KSet& s) {
  j = nlohmann::json{{"n", s.n}, {"elems", s.elems}};
}

void from_json(const nlohmann::json& j, KSet& s) {
  s.n = j.at("n").get<int>();
  s.elems = j.at("elems").get<std::vector<int>>();
  check_kset(s);
}

}  // namespace qflag
