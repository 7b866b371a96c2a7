#include "qflag/lattices.hpp"

#include <numeric>
#include <stdexcept>

namespace qflag {

std::vector<long long> zeta(const std::vector<long long>& x) { return x; }

std::vector<long long> omega_coords(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("omega_coords: index");
  std::vector<long long> v(n, 0);
  for (int p = 0; p < i; ++p) v[p] = 1;
  return v;
}

std::vector<long long> alpha_coords(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("alpha_coords: index");
  std::vector<long long> v(n, 0);
  v[i - 1] = -1;
  v[i] = 1;
  return v;
}

std::vector<long long> proj_class(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("proj_class: index");
  std::vector<long long> v(n, 0);
  for (int p = i; p < n; ++p) v[p] = 1;
  return v;
}

std::vector<long long> delta_of_set(const KSet& I) {
  std::vector<long long> v(I.n, 0);
  for (int e : I.elems) v[e - 1] = 1;
  return v;
}

std::vector<long long> eta_to_delta(const std::vector<long long>& eta) {
  int n = static_cast<int>(eta.size());
  std::vector<long long> v(n, 0);
  // the j-th staircase contributes ones in positions 1..j
  long long tail = 0;
  for (int i = n - 1; i >= 0; --i) {
    tail += eta[i];
    v[i] = tail;
  }
  return v;
}

EClass eclass_of(const Rep& m) {
  EClass c;
  auto d = delta_dims(m);
  c.delta.assign(d.begin(), d.end());
  auto tr = trace_eta(m);
  c.eta.assign(tr.t_mult.begin(), tr.t_mult.end());
  return c;
}

long long form_angle(const std::vector<long long>& x, const std::vector<long long>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("form_angle: size mismatch");
  long long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

long long form_round(const EClass& x, const EClass& y) {
  return form_angle(x.delta, y.delta) +
         form_angle(eta_to_delta(x.eta), eta_to_delta(y.eta));
}

long long form_Lad(const EClass& x, const EClass& y) {
  return form_angle(x.delta, eta_to_delta(y.eta)) -
         form_angle(y.delta, eta_to_delta(x.eta));
}

long long ext1_sym(const Rep& X, const Rep& Y) {
  long long h = dim_hom(X, Y) + dim_hom(Y, X);
  long long r = form_round(eclass_of(X), eclass_of(Y));
  long long e = h - r;
  if (e < 0) throw std::logic_error("ext1_sym: negative dimension");
  return e;
}

long long ext1_one(const Rep& X, const Rep& Y) {
  long long h = dim_hom(X, Y);
  long long a = form_angle(eclass_of(X).delta, eclass_of(Y).delta);
  long long e = h - a;
  if (e < 0) throw std::logic_error("ext1_one: negative dimension");
  return e;
}

void to_json(nlohmann::json& j, const EClass& c) {
  j = nlohmann::json{{"delta", c.delta}, {"eta", c.eta}};
}

void from_json(const nlohmann::json& j, EClass& c) {
  j.at("delta").get_to(c.delta);
  j.at("eta").get_to(c.eta);
}

}  // namespace qflag
