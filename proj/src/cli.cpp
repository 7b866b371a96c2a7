#include "qflag/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "qflag/collections.hpp"
#include "qflag/dmod.hpp"
#include "qflag/qcluster.hpp"
#include "qflag/qmatrix.hpp"
#include "qflag/seeds.hpp"
#include "qflag/subsets.hpp"
#include "qflag/verify.hpp"
#include "qflag/weyl.hpp"

namespace qflag {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in list: " + text);
    const auto dots = tok.find("..");
    size_t used = 0;
    if (dots == std::string::npos) {
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("bad entry: " + tok);
    } else {
      size_t ub = 0;
      const int a = std::stoi(tok.substr(0, dots), &used);
      const int b = std::stoi(tok.substr(dots + 2), &ub);
      if (used != dots || ub != tok.size() - dots - 2 || a > b)
        throw std::invalid_argument("bad range: " + tok);
      for (int x = a; x <= b; ++x) out.push_back(x);
    }
  }
  return out;
}

json read_json_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return json::parse(in);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return json::parse(f);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << content;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json collection_report(const WSCollection& c) {
  json j = c;
  j["count"] = c.sets.size();
  j["maximal"] = is_maximal(c);
  return j;
}

json flip_json(const Flip& f) {
  return json{{"L", f.L.elems},
              {"i", f.i},
              {"j", f.j},
              {"k", f.k},
              {"dir", f.dir == FlipDir::Raise ? "raise" : "lower"}};
}

std::vector<int> default_sizes(const std::vector<int>& J, int k) {
  return J.empty() ? std::vector<int>{k} : J;
}

void print_collection_pretty(std::ostream& out, const WSCollection& c) {
  out << "n=" << c.n << " sizes=";
  for (size_t i = 0; i < c.J.size(); ++i) out << (i ? "," : "") << c.J[i];
  out << " count=" << c.sets.size() << " maximal=" << (is_maximal(c) ? "yes" : "no")
      << "\n";
  for (const auto& s : c.sets) out << "  " << format_set(s) << "\n";
}

struct QVerifyStats {
  long long checked = 0;
  std::vector<std::string> failures;
  void note(bool ok, const std::string& tag) {
    ++checked;
    if (!ok && failures.size() < 5) failures.push_back(tag);
  }
  bool ok() const { return failures.empty(); }
};

QVerifyStats qverify_run(const std::string& what, int n) {
  QVerifyStats st;
  const auto subs = all_nonempty_subsets(n);
  const auto tag = [n](const KSet& I, const KSet& J) {
    return "n=" + std::to_string(n) + " I=" + format_set(I) + " J=" + format_set(J);
  };
  if (what == "plucker" || what == "incidence") {
    std::vector<KSet> cores = {make_kset(n, {})};
    for (const auto& L : subs)
      if (L.size() <= 2) cores.push_back(L);
    for (const auto& L : cores) {
      std::vector<int> avail;
      for (int x = 1; x <= n; ++x)
        if (!L.contains(x)) avail.push_back(x);
      const int m = static_cast<int>(avail.size());
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int c = b + 1; c < m; ++c) {
            if (what == "incidence") {
              st.note(verify_incidence(n, L, avail[a], avail[b], avail[c]),
                      "L=" + format_set(L));
            } else {
              for (int d = c + 1; d < m; ++d)
                st.note(verify_plucker(n, L, avail[a], avail[b], avail[c], avail[d]),
                        "L=" + format_set(L));
            }
          }
    }
  } else if (what == "quasicomm") {
    for (const auto& I : subs)
      for (const auto& J : subs) st.note(verify_quasicomm(n, I, J), tag(I, J));
  } else if (what == "barprod") {
    for (const auto& I : subs)
      for (const auto& J : subs) st.note(verify_barprod(n, I, J), tag(I, J));
  } else if (what == "lz") {
    for (const auto& I : subs)
      for (const auto& J : subs) {
        if (I.size() <= J.size()) st.note(verify_lzrel1(n, I, J), tag(I, J));
        if (I.size() >= J.size() + 2) st.note(verify_lzrel(n, I, J), tag(I, J));
      }
  } else {
    throw std::invalid_argument("unknown relation family: " + what);
  }
  return st;
}

}  // namespace

std::vector<int> parse_set_literal(const std::string& text) {
  auto out = parse_int_list(text);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("duplicate element in set: " + text);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"exact machinery for separation, collections, seeds and quantum minors"};
  app.name("qflag");
  app.require_subcommand(1);
  int rc = 0;

  int n = 0, k = 0;
  std::string set_i, set_j, set_big_j, set_core, set_target, word_text, ks_text;
  std::string in_path, out_path, at_text, dir_text, only_text;
  int ca = 0, cb = 0, cc = 0, cd = 0, fi = 0, fj = 0, fk = 0, factor_j = 0;
  int max_depth = 8;
  bool pretty = false, with_modules = false;

  const auto add_pair_opts = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "ambient size")->required();
    cmd->add_option("--i", set_i, "first subset, e.g. 1,3 or 2..4")->required();
    cmd->add_option("--j", set_j, "second subset")->required();
  };

  auto* sep = app.add_subcommand("sep", "separation report for a pair of subsets");
  add_pair_opts(sep);
  sep->add_flag("--pretty", pretty, "aligned text instead of JSON");
  sep->callback([&] {
    const KSet I = make_kset(n, parse_set_literal(set_i));
    const KSet J = make_kset(n, parse_set_literal(set_j));
    json j{{"n", n},
           {"i", I.elems},
           {"j", J.elems},
           {"weak", weakly_separated(I, J)},
           {"strong", strongly_separated(I, J)},
           {"ext_E", dim_ext_E(I, J)},
           {"ext_D", {dim_ext_D(I, J), dim_ext_D(J, I)}},
           {"hom", {dim_hom(I, J), dim_hom(J, I)}}};
    if (pretty) {
      out << "I=" << format_set(I) << " J=" << format_set(J) << "\n"
          << "  weakly separated:   " << (j["weak"].get<bool>() ? "yes" : "no") << "\n"
          << "  strongly separated: " << (j["strong"].get<bool>() ? "yes" : "no") << "\n"
          << "  ext_E: " << j["ext_E"] << "\n"
          << "  ext_D: " << j["ext_D"][0] << " / " << j["ext_D"][1] << "\n"
          << "  hom:   " << j["hom"][0] << " / " << j["hom"][1] << "\n";
    } else {
      emit(out, j);
    }
  });

  auto* hom = app.add_subcommand("hom", "hom dimensions between two rank-one labels");
  add_pair_opts(hom);
  hom->callback([&] {
    const KSet I = make_kset(n, parse_set_literal(set_i));
    const KSet J = make_kset(n, parse_set_literal(set_j));
    emit(out, json{{"n", n},
                   {"i", I.elems},
                   {"j", J.elems},
                   {"i_to_j", dim_hom(I, J)},
                   {"j_to_i", dim_hom(J, I)}});
  });

  auto* ext = app.add_subcommand("ext", "extension dimensions between two labels");
  add_pair_opts(ext);
  ext->callback([&] {
    const KSet I = make_kset(n, parse_set_literal(set_i));
    const KSet J = make_kset(n, parse_set_literal(set_j));
    emit(out, json{{"n", n},
                   {"i", I.elems},
                   {"j", J.elems},
                   {"ext_E", dim_ext_E(I, J)},
                   {"ext_D", {dim_ext_D(I, J), dim_ext_D(J, I)}}});
  });

  auto* cexp = app.add_subcommand("c", "commutation exponent of a weakly separated pair");
  add_pair_opts(cexp);
  cexp->callback([&] {
    const KSet I = make_kset(n, parse_set_literal(set_i));
    const KSet J = make_kset(n, parse_set_literal(set_j));
    emit(out, json{{"n", n}, {"i", I.elems}, {"j", J.elems}, {"c", c_exponent(I, J)}});
  });

  auto* coll = app.add_subcommand("collection", "build or inspect collections");
  coll->require_subcommand(1);
  auto* rect = coll->add_subcommand("rectangle", "the rectangle collection");
  rect->add_option("--n", n, "ambient size")->required();
  rect->add_option("--k", k, "subset size")->required();
  rect->add_flag("--pretty", pretty, "one set per line");
  rect->callback([&] {
    const auto c = rectangle(n, k);
    if (pretty)
      print_collection_pretty(out, c);
    else
      emit(out, collection_report(c));
  });
  auto* extc = coll->add_subcommand("extended", "the extended rectangle collection");
  extc->add_option("--n", n, "ambient size")->required();
  extc->add_option("--J", set_big_j, "admissible sizes, e.g. 1..4")->required();
  extc->add_option("--k", k, "base size inside J")->required();
  extc->add_flag("--pretty", pretty, "one set per line");
  extc->callback([&] {
    const auto c = extended_rectangle(n, parse_set_literal(set_big_j), k);
    if (pretty)
      print_collection_pretty(out, c);
    else
      emit(out, collection_report(c));
  });
  auto* maxc = coll->add_subcommand("maximality", "validate a collection and test maximality");
  maxc->add_option("--in", in_path, "collection JSON (default stdin)");
  maxc->callback([&] {
    const WSCollection c = read_json_input(in_path, in).get<WSCollection>();
    check_collection(c);
    emit(out, json{{"n", c.n},
                   {"count", c.sets.size()},
                   {"maximal", is_maximal(c)}});
  });

  auto* exch = app.add_subcommand("exchange", "apply one square exchange to a collection");
  exch->add_option("--in", in_path, "collection JSON (default stdin)");
  exch->add_option("--L", set_core, "common core, may be empty");
  exch->add_option("--a", ca, "first corner")->required();
  exch->add_option("--b", cb, "second corner")->required();
  exch->add_option("--c", cc, "third corner")->required();
  exch->add_option("--d", cd, "fourth corner")->required();
  exch->callback([&] {
    WSCollection c = read_json_input(in_path, in).get<WSCollection>();
    Exchange e{make_kset(c.n, parse_set_literal(set_core)), ca, cb, cc, cd};
    emit(out, collection_report(geometric_exchange(c, e)));
  });

  auto* flp = app.add_subcommand("flip", "apply one flip to a collection");
  flp->add_option("--in", in_path, "collection JSON (default stdin)");
  flp->add_option("--L", set_core, "common core, may be empty");
  flp->add_option("--i", fi, "low corner")->required();
  flp->add_option("--j", fj, "middle corner")->required();
  flp->add_option("--k", fk, "high corner")->required();
  flp->add_option("--dir", dir_text, "raise or lower")->required();
  flp->callback([&] {
    WSCollection c = read_json_input(in_path, in).get<WSCollection>();
    if (dir_text != "raise" && dir_text != "lower")
      throw std::invalid_argument("--dir must be raise or lower");
    Flip f{make_kset(c.n, parse_set_literal(set_core)), fi, fj, fk,
           dir_text == "raise" ? FlipDir::Raise : FlipDir::Lower};
    emit(out, collection_report(flip(c, f)));
  });

  auto* sched = app.add_subcommand("schedule", "flip schedule lowering the base size by one");
  sched->add_option("--n", n, "ambient size")->required();
  sched->add_option("--J", set_big_j, "admissible sizes")->required();
  sched->add_option("--k", k, "base size; the schedule lands on k-1")->required();
  sched->add_flag("--pretty", pretty, "one step per line");
  sched->callback([&] {
    const auto J = parse_set_literal(set_big_j);
    const auto steps = flip_schedule(n, J, k);
    if (pretty) {
      for (const auto& f : steps)
        out << (f.dir == FlipDir::Raise ? "raise " : "lower ") << format_set(f.L)
            << " : " << f.i << "," << f.j << "," << f.k << "\n";
      out << steps.size() << " steps\n";
      return;
    }
    json js = json::array();
    for (const auto& f : steps) js.push_back(flip_json(f));
    emit(out, json{{"n", n}, {"J", J}, {"k", k}, {"count", steps.size()}, {"steps", js}});
  });

  auto* rch = app.add_subcommand("reach", "search the move graph for a target label");
  rch->add_option("--in", in_path, "starting collection JSON (default stdin)");
  rch->add_option("--target", set_target, "label to reach")->required();
  rch->add_option("--max-depth", max_depth, "search depth bound (default 8)");
  rch->callback([&] {
    const WSCollection c = read_json_input(in_path, in).get<WSCollection>();
    const KSet target = make_kset(c.n, parse_set_literal(set_target));
    const auto path = reach(c, target, max_depth);
    json moves = json::array();
    if (path)
      for (const auto& m : *path) moves.push_back(describe_move(m));
    emit(out, json{{"found", path.has_value()}, {"moves", moves}});
    if (!path) rc = 1;
  });

  auto* seedc = app.add_subcommand("seed", "seed of an extended rectangle collection");
  seedc->add_option("--n", n, "ambient size")->required();
  seedc->add_option("--k", k, "base size")->required();
  seedc->add_option("--J", set_big_j, "admissible sizes (default just k)");
  seedc->add_option("--out", out_path, "write the quiver as DOT to this file");
  seedc->callback([&] {
    const Seed s = seed_from_collection(
        extended_rectangle(n, default_sizes(parse_set_literal(set_big_j), k), k));
    if (!out_path.empty()) write_text_file(out_path, export_dot(s));
    emit(out, json(s));
  });

  auto* mut = app.add_subcommand("mutate", "mutate a seed at a sequence of mutable slots");
  mut->add_option("--n", n, "ambient size");
  mut->add_option("--k", k, "base size");
  mut->add_option("--J", set_big_j, "admissible sizes (default just k)");
  mut->add_option("--in", in_path, "seed JSON instead of --n/--k");
  mut->add_option("--at", at_text, "comma-separated mutable slots, applied in order")
      ->required();
  mut->callback([&] {
    Seed s;
    if (!in_path.empty())
      s = read_json_input(in_path, in).get<Seed>();
    else if (n > 0)
      s = seed_from_collection(
          extended_rectangle(n, default_sizes(parse_set_literal(set_big_j), k), k));
    else
      throw std::invalid_argument("need --in or --n/--k");
    for (int slot : parse_int_list(at_text)) s = mutate(s, slot);
    emit(out, json(s));
  });

  auto* qmut = app.add_subcommand("qmutate", "mutate quantum cluster variables");
  qmut->add_option("--n", n, "ambient size")->required();
  qmut->add_option("--k", k, "base size")->required();
  qmut->add_option("--J", set_big_j, "admissible sizes (default just k)");
  qmut->add_option("--at", at_text, "comma-separated mutable slots, applied in order")
      ->required();
  qmut->callback([&] {
    const Seed s = seed_from_collection(
        extended_rectangle(n, default_sizes(parse_set_literal(set_big_j), k), k));
    QClusterState st = init_qcluster(s);
    for (int slot : parse_int_list(at_text)) st = qcluster_mutate(st, slot);
    json labels = json::array();
    for (const auto& l : st.seed.labels) labels.push_back(l.elems);
    json ups = json::array();
    for (const auto& u : st.ups) ups.push_back(json(u));
    emit(out, json{{"n", n},
                   {"labels", labels},
                   {"symbolic", st.seed.symbolic},
                   {"ups", ups}});
  });

  auto* qver = app.add_subcommand("qverify", "verify a family of quantum minor relations");
  std::string what;
  qver->add_option("what", what, "plucker | incidence | quasicomm | lz | barprod")
      ->required();
  qver->add_option("--n", n, "ambient size (at most 6)")->required();
  qver->callback([&] {
    if (n < 1 || n > 6) throw std::invalid_argument("qverify: need 1 <= n <= 6");
    const QVerifyStats st = qverify_run(what, n);
    emit(out, json{{"what", what},
                   {"n", n},
                   {"checked", st.checked},
                   {"ok", st.ok()},
                   {"failures", st.failures}});
    if (!st.ok()) rc = 1;
  });

  auto* wrd = app.add_subcommand("word", "reduced word for the parabolic quotient");
  wrd->add_option("--n", n, "ambient size")->required();
  wrd->add_option("--K", ks_text, "deleted letters, e.g. 2 or 1,5,6");
  wrd->add_option("--factor", factor_j, "emit the factor word for adding this letter")
      ->default_val(0);
  wrd->add_flag("--modules", with_modules, "include root and module data");
  wrd->callback([&] {
    const auto K = parse_set_literal(ks_text);
    const ReducedWord w =
        factor_j > 0 ? factor_step(n, K, factor_j) : word_w0_mod_K(n, K);
    json j{{"n", n},
           {"K", K},
           {"letters", w.letters},
           {"length", w.letters.size()},
           {"reduced", is_reduced(w)},
           {"perm", word_perm(w)}};
    if (factor_j > 0) j["factor"] = factor_j;
    if (with_modules) {
      j["beta"] = beta_roots(w);
      j["module_dims"] = module_M_dims(w);
      j["simple_top"] = check_simple_top(w);
    }
    emit(out, j);
  });

  auto* bfz = app.add_subcommand("bfz", "letter quiver of a reduced word");
  bfz->add_option("--n", n, "ambient size")->required();
  bfz->add_option("--K", ks_text, "deleted letters; the word is constructed");
  bfz->add_option("--word", word_text, "explicit letters, last one acts first");
  bfz->add_option("--out", out_path, "write DOT to this file");
  bfz->callback([&] {
    ReducedWord w;
    w.n = n;
    if (!word_text.empty())
      w.letters = parse_int_list(word_text);
    else
      w = word_w0_mod_K(n, parse_set_literal(ks_text));
    const BfzQuiver q = bfz_quiver(w);
    if (!out_path.empty()) write_text_file(out_path, bfz_dot(q));
    json arrows = json::array();
    for (auto [s, t] : q.arrows) arrows.push_back({s, t});
    std::vector<int> mut_v;
    for (int v = 1; v <= q.r; ++v)
      if (!q.frozen[v - 1]) mut_v.push_back(v);
    emit(out, json{{"n", n},
                   {"letters", q.letters},
                   {"r", q.r},
                   {"arrows", arrows},
                   {"frozen", q.frozen},
                   {"mutable", mut_v}});
  });

  auto* ver = app.add_subcommand("verify-all", "run the acceptance checks");
  ver->add_option("--only", only_text, "comma-separated check ids (default all)");
  ver->add_flag("--pretty", pretty, "one line per check instead of JSON");
  ver->callback([&] {
    std::vector<int> ids =
        only_text.empty() ? all_check_ids() : parse_int_list(only_text);
    bool all = true;
    json results = json::array();
    run_checks(ids, [&](const CheckResult& r) {
      all = all && r.pass;
      if (pretty) {
        std::ostringstream line;
        line << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.id << " " << r.name
             << " (" << r.details << ")";
        out << line.str() << "\n";
      } else {
        results.push_back(json{{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"details", r.details}});
      }
    });
    if (!pretty) emit(out, results);
    if (!all) rc = 1;
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace qflag
