// higgs_census: command-line front end for the fixed-point, bound, census
// and oracle computations. JSON (schema higgs-census/1) or TSV on stdout.
//
// Exit codes: 0 ok, 1 domain error, 2 invariant failure, 64 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "higgs/higgs.hpp"
#include "higgs/json_io.hpp"

using namespace higgs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitUsage = 64;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  template <class... T>
  void row(const T&... cells) {
    rows.push_back({cell(cells)...});
  }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(bool b) { return b ? "true" : "false"; }
  template <class I, class = std::enable_if_t<std::is_integral_v<I>>>
  static std::string cell(I v) {
    return std::to_string(v);
  }
};

struct Output {
  Json json;
  Table table;
  bool invariant_failure = false;
};

struct Config {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string group;
  std::int64_t n = 0;
  std::int64_t genus = 2;
  std::optional<std::int64_t> degree;
  std::string input;
  std::string write_corpus;
  std::optional<std::int64_t> deg_u, deg_uprime, rk_c;
  std::int64_t max_abs_deg = -1;
  std::int64_t max_lines = 3;
  std::int64_t samples = 1000;
  std::string q_bits, u_bits;
  int w2 = 0;
  std::string mutate;
};

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string text_of(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

Json read_json_document(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<Json> read_jsonl(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw DomainError("cannot open '" + path + "'");
    in = &file;
  }
  std::vector<Json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

GroupType need_group(const Config& c) {
  if (c.group.empty()) throw DomainError("--group is required");
  return parse_group(c.group, c.n);
}

std::int64_t need_n(const Config& c) {
  if (c.n < 1) throw DomainError("--n must be >= 1");
  return c.n;
}

std::int64_t need_degree(const Config& c) {
  if (!c.degree) throw DomainError("--degree is required");
  return *c.degree;
}

void check_degree_range(const Config& c, std::int64_t n, const Curve& curve) {
  if (c.degree && (*c.degree < -mw_bound(n, curve) || *c.degree > mw_bound(n, curve)))
    throw DomainError("degree " + std::to_string(*c.degree) + " outside the Milnor-Wood range [-" +
                      std::to_string(mw_bound(n, curve)) + ", " + std::to_string(mw_bound(n, curve)) + "]");
}

// ---- subcommands ----

Output cmd_dim(const Config& c) {
  Curve curve(c.genus);
  GroupType g = need_group(c);
  Output o;
  o.json["group"] = to_json(g);
  o.json["genus"] = c.genus;
  o.json["moduli_dim"] = moduli_dim(g, curve);
  o.table.header = {"group", "genus", "moduli_dim"};
  o.table.row(g.name(), c.genus, moduli_dim(g, curve));
  return o;
}

Output cmd_mw_bound(const Config& c) {
  Curve curve(c.genus);
  std::int64_t n = need_n(c);
  Output o;
  o.json["n"] = n;
  o.json["genus"] = c.genus;
  o.json["bound"] = mw_bound(n, curve);
  o.table.header = {"n", "genus", "bound"};
  o.table.row(n, c.genus, mw_bound(n, curve));
  return o;
}

Output cmd_mw_verify(const Config& c) {
  Curve curve(c.genus);
  std::int64_t n = need_n(c);
  std::int64_t d = need_degree(c);
  if (d <= 0) throw DomainError("mw-verify needs d > 0; d < 0 follows by duality");
  Output o;
  o.json["n"] = n;
  o.json["genus"] = c.genus;
  o.json["d"] = d;
  o.json["bound"] = mw_bound(n, curve);
  o.table.header = {"deg_U", "deg_Uprime", "rk_c", "hypotheses_hold", "conclusion"};
  if (c.deg_u || c.deg_uprime || c.rk_c) {
    if (!c.deg_u || !c.deg_uprime || !c.rk_c)
      throw DomainError("--deg-u, --deg-uprime and --rk-c go together");
    auto r = verify_chain(MWScenario{n, c.genus, d, *c.deg_u, *c.deg_uprime, *c.rk_c});
    o.json["chain"] = to_json(r);
    o.table.row(*c.deg_u, *c.deg_uprime, *c.rk_c, r.hypotheses_hold, r.hypotheses_hold ? text_of(r.conclusion) : "-");
  } else {
    std::int64_t box = c.max_abs_deg < 0 ? 20 : c.max_abs_deg;
    auto ws = mw_witnesses(n, curve, d, box);
    Json list = Json::array();
    for (const auto& s : ws) {
      auto r = verify_chain(s);
      if (list.size() < 20) list.push_back(to_json(r));
      o.table.row(s.deg_U, s.deg_Uprime, s.rk_c, r.hypotheses_hold, r.conclusion);
    }
    o.json["max_abs_deg"] = box;
    o.json["satisfying_tuples"] = ws.size();
    o.json["examples"] = list;
    o.json["realizable_in_box"] = !ws.empty();
  }
  if (d <= mw_bound(n, curve)) {
    auto e = extremal_consequences(n, curve, d);
    o.json["extremal"] = {{"rank_c_full", e.rank_full}, {"c_isomorphism", e.c_isomorphism}};
  } else {
    o.json["extremal"] = nullptr;
  }
  return o;
}

GradedBundle<std::int64_t> load_bundle(const Config& c) {
  if (c.input.empty()) throw DomainError("--input is required (path or - for stdin)");
  // a malformed input is the caller's error, not a failed self-check
  try {
    return graded_bundle_from_json(read_json_document(c.input));
  } catch (const InvariantError& e) {
    throw DomainError(e.what());
  }
}

Output cmd_adjoint(const Config& c) {
  auto e = load_bundle(c);
  auto ad = adjoint_decomposition(e);
  Output o;
  o.json["bundle"] = to_json(e);
  o.json["adjoint"] = to_json(ad, e);
  o.table.header = {"k", "part", "rank", "degree", "pieces"};
  for (const auto& [k, en] : ad.entries) {
    std::string pieces;
    for (const auto& p : en.pieces) {
      std::string l = piece_label(e, p);
      bool neg = !l.empty() && l[0] == '-';
      if (pieces.empty()) pieces = l;
      else pieces += (neg ? " - " + l.substr(1) : " + " + l);
    }
    o.table.row(k, k % 2 == 0 ? "compact" : "noncompact", en.total.rank, en.total.degree, pieces);
  }
  if (!total_rank_degree_check(ad).ok()) o.invariant_failure = true;
  return o;
}

Output cmd_index(const Config& c) {
  Curve curve(c.genus);
  auto e = load_bundle(c);
  auto r = morse_index(e, curve);
  Output o;
  o.json["genus"] = c.genus;
  o.json["bundle"] = to_json(e);
  o.json["morse"] = to_json(r);
  o.table.header = {"k", "rank_term", "degree_term"};
  for (const auto& t : r.contributions) o.table.row(t.k, t.rank_term, t.degree_term);
  o.table.row("index", r.index, r.index == 0 ? "minimum candidate" : "-");
  return o;
}

Output cmd_laumon(const Config& c) {
  Curve curve(c.genus);
  std::int64_t n = need_n(c);
  if (n < 2) throw DomainError("laumon needs n >= 2");
  GroupType g = GroupType::sl(n);
  Output o;
  o.json["group"] = to_json(g);
  o.json["genus"] = c.genus;
  Json types = Json::array();
  o.table.header = {"rank_vector", "computed", "expected", "verdict"};
  bool all_ok = true;
  for (const auto& e : sl_fixed_point_types(n)) {
    auto r = laumon_halfdim(adjoint_decomposition(e), curve, g);
    std::vector<std::int64_t> rv;
    for (const auto& s : e.summands()) rv.push_back(s.cls.rank);
    std::string computed = r.computed.str();
    types.push_back(Json{{"rank_vector", rv},
                         {"computed", computed},
                         {"expected", r.expected},
                         {"deg_U0_zero", r.deg_u0_zero},
                         {"rank_identity", r.rank_identity},
                         {"verdict", r.ok() ? "PASS" : "FAIL"}});
    o.table.row(join(rv), computed, r.expected, r.ok() ? "PASS" : "FAIL");
    all_ok = all_ok && r.ok();
  }
  o.json["types"] = types;
  o.json["verdict"] = all_ok ? "PASS" : "FAIL";
  o.invariant_failure = !all_ok;
  return o;
}

Output cmd_classify(const Config& c) {
  Curve curve(c.genus);
  GroupType g = need_group(c);
  check_degree_range(c, g.n(), curve);
  std::vector<MinimaCensus> cs =
      c.degree ? std::vector<MinimaCensus>{minima_census_at(g, curve, *c.degree)} : minima_census(g, curve);
  Output o;
  o.json["group"] = to_json(g);
  o.json["genus"] = c.genus;
  Json arr = Json::array();
  o.table.header = {"d", "rank_vector", "label", "verdict", "index", "witness"};
  for (const auto& cen : cs) {
    arr.push_back(to_json(cen));
    for (const auto& t : cen.types) {
      std::string idx = t.type.type_impossible ? "-" : t.index.str(t.type.var_names);
      o.table.row(cen.d, join(t.type.rank_vector), t.type.label, verdict_name(t.verdict), idx,
                  t.witness.empty() ? "-" : join(t.witness));
    }
    for (const auto& r : cen.reducible) o.table.row(cen.d, "-", r.key, "reducible-minimum", "0", "-");
  }
  o.json["censuses"] = arr;
  return o;
}

Output cmd_components(const Config& c) {
  Curve curve(c.genus);
  GroupType g = need_group(c);
  std::int64_t d = need_degree(c);
  auto r = count_components(g, curve, d);
  Output o;
  o.json["status"] = r.determined ? "ok" : "not-determined";
  o.json["group"] = to_json(g);
  o.json["genus"] = c.genus;
  o.json["d"] = d;
  o.json["count"] = r.determined ? Json(r.value) : Json(nullptr);
  o.json["basis"] = r.basis;
  if (g.family() == GroupFamily::Sp2nR) o.json["total_lower_bound"] = total_lower_bound(curve);
  o.table.header = {"group", "genus", "d", "status", "count"};
  o.table.row(g.name(), c.genus, d, r.determined ? "ok" : "not-determined",
              r.determined ? std::to_string(r.value) : "not determined");
  return o;
}

Output cmd_strata(const Config& c) {
  Curve curve(c.genus);
  Output o;
  std::int64_t count = 0, muv = 0, m0l = 0, root = 0;
  Json list = Json::array();
  const bool list_json = c.format == "json" && c.genus <= 8;
  o.table.header = {"kind", "u", "v", "l", "root", "connected"};
  for_each_stratum(curve, [&](const Stratum& s) {
    ++count;
    (s.kind == StratumKind::MUV ? muv : s.kind == StratumKind::M0l ? m0l : root)++;
    if (list_json) list.push_back(to_json(s));
    if (c.format == "tsv")
      o.table.row(stratum_kind_name(s.kind), s.kind == StratumKind::MUV ? std::to_string(s.u) : "-",
                  s.kind == StratumKind::MUV ? std::to_string(s.v) : "-",
                  s.kind == StratumKind::MUV ? "-" : std::to_string(s.l),
                  s.kind == StratumKind::M0Root ? std::to_string(s.root) : "-", s.connected);
    return true;
  });
  o.json["genus"] = c.genus;
  o.json["count"] = count;
  o.json["formula"] = extremal_component_formula(curve);
  o.json["identity_holds"] = count == extremal_component_formula(curve);
  o.json["by_kind"] = {{"M(u,v)", muv}, {"M0(l)", m0l}, {"M0(root)", root}};
  if (list_json)
    o.json["strata"] = list;
  else
    o.json["strata"] = nullptr;  // listing above genus 8 only in TSV
  if (count != extremal_component_formula(curve)) o.invariant_failure = true;
  return o;
}

Output cmd_teich(const Config& c) {
  Curve curve(c.genus);
  auto t = teichmuller_dims(curve);
  Output o;
  o.json["genus"] = c.genus;
  o.json["h0_K2_first"] = t.h0_k2_first;
  o.json["h0_K2_second"] = t.h0_k2_second;
  o.json["h0_K4"] = t.h0_k4;
  o.json["hitchin_real_dim"] = t.hitchin_real_dim;
  o.table.header = {"genus", "h0_K2_first", "h0_K2_second", "h0_K4", "hitchin_real_dim"};
  o.table.row(c.genus, t.h0_k2_first, t.h0_k2_second, t.h0_k4, t.hitchin_real_dim);
  return o;
}

std::uint64_t parse_bits(const std::string& s, int g, const char* what) {
  if (static_cast<int>(s.size()) != 2 * g || s.find_first_not_of("01") != std::string::npos)
    throw DomainError(std::string(what) + " must be " + std::to_string(2 * g) + " characters of 0/1");
  std::uint64_t m = 0;
  for (int i = 0; i < 2 * g; ++i)
    if (s[static_cast<std::size_t>(i)] == '1') m |= std::uint64_t{1} << i;
  return m;
}

Output cmd_prym(const Config& c) {
  Curve curve(c.genus);
  const int g = static_cast<int>(c.genus);
  require_sw_genus(g);
  QuadraticRefinement q(g, parse_bits(c.q_bits, g, "--q"));
  H1Class u = parse_bits(c.u_bits, g, "--u");
  auto comp = prym_component(q, u, c.w2);
  Output o;
  o.json["genus"] = c.genus;
  o.json["q"] = c.q_bits;
  o.json["u"] = c.u_bits;
  o.json["w2"] = c.w2;
  o.json["q_of_u"] = q(u);
  o.json["delta"] = delta(q, SWClass{u, c.w2});
  o.json["arf"] = q.arf_formula();
  o.json["component"] = prym_name(comp);
  o.table.header = {"genus", "q", "u", "w2", "delta", "component"};
  o.table.row(c.genus, c.q_bits, c.u_bits, c.w2, delta(q, SWClass{u, c.w2}), prym_name(comp));
  return o;
}

// Built-in invariant suite or a JSONL corpus of chain models.
Output cmd_oracle(const Config& c) {
  Curve curve(c.genus);
  Output o;
  o.json["genus"] = c.genus;
  o.json["seed"] = c.seed;
  o.json["scope"] = kOracleScope;
  Json reports = Json::array();
  o.table.header = {"check", "checked", "failures"};
  auto add = [&](const std::string& name, std::int64_t checked, std::int64_t failures, Json extra = Json::object()) {
    Json r{{"check", name}, {"checked", checked}, {"failures", failures}};
    for (auto it = extra.begin(); it != extra.end(); ++it) r[it.key()] = it.value();
    reports.push_back(r);
    o.table.row(name, checked, failures);
    if (failures != 0) o.invariant_failure = true;
  };
  const std::int64_t box = c.max_abs_deg < 0 ? 3 : c.max_abs_deg;

  if (!c.write_corpus.empty()) {
    std::ofstream out(c.write_corpus);
    if (!out) throw DomainError("cannot write '" + c.write_corpus + "'");
    std::int64_t written = 0;
    auto sks = two_block_skeletons(static_cast<std::size_t>(c.max_lines));
    for (const auto& s : sp_skeletons(static_cast<std::size_t>(c.max_lines) / 2)) sks.push_back(s);
    for (const auto& sk : sks)
      for_each_model(curve, sk, box, [&](const ChainModel& m) {
        out << to_json(m).dump() << '\n';
        ++written;
      });
    o.json["corpus_written"] = written;
  }

  if (!c.input.empty()) {
    QuiverEquivalenceReport rep;
    Json models = Json::array();
    std::int64_t idx = 0;
    for (const auto& doc : read_jsonl(c.input)) {
      ChainModel m = chain_model_from_json(doc);
      QuiverEquivalenceReport one;
      check_quiver_model(m, one);
      auto h = is_stable_higgs(m);
      models.push_back(Json{{"model", idx++},
                            {"higgs_stable", h.stable},
                            {"q_stable", is_stable_q(to_q_bundle(m)).stable},
                            {"polystable", h.polystable},
                            {"certificates", one.certificates_checked},
                            {"ok", one.ok()}});
      rep.merge(one);
    }
    add("corpus quiver equivalence", rep.models, rep.counterexamples);
    add("corpus F/G certificates", rep.certificates_checked, rep.certificate_failures);
    o.json["models"] = models;
  } else {
    auto sks = two_block_skeletons(static_cast<std::size_t>(c.max_lines));
    for (const auto& s : sp_skeletons(static_cast<std::size_t>(c.max_lines) / 2)) sks.push_back(s);
    auto q = check_quiver_equivalence(curve, sks, box);
    add("quiver equivalence", q.models, q.counterexamples, {{"stable_models", q.stable_models}});
    add("F/G certificates", q.certificates_checked, q.certificate_failures);

    std::mt19937_64 rng(c.seed);
    std::int64_t dual_fail = 0;
    const GroupType groups[] = {GroupType::su(2), GroupType::sp(2), GroupType::sl(3)};
    for (std::int64_t i = 0; i < c.samples; ++i) {
      auto e = random_graded_bundle(groups[i % 3], rng);
      if (!total_rank_degree_check(adjoint_decomposition(e)).ok()) ++dual_fail;
    }
    add("adjoint duality", c.samples, dual_fail);

    MWSearchBox mb{2, c.genus, c.genus, 10, 20};
    auto mw = mw_soundness(mb);
    add("milnor-wood soundness", mw.satisfying, mw.violations);

    auto tr = stability_transfer_check(curve, box);
    add("stability transfer", tr.models + tr.inequality_checks, tr.mismatches + tr.inequality_failures);

    const int sg = static_cast<int>(std::min<std::int64_t>(c.genus, 3));
    std::int64_t pairs = 0, failures = 0;
    for (const auto& qr : QuadraticRefinement::all(sg)) {
      HomomorphismReport h;
      if (c.mutate == "pairing") {
        // Deliberately broken cup product: drops the b-part of the pairing.
        auto broken = [sg](H1Class x, H1Class y, int) { return std::popcount(a_part(x, sg) & a_part(y, sg)) & 1; };
        h = homomorphism_check(qr, broken, c.seed);
      } else {
        h = homomorphism_check(qr, StandardPairing{}, c.seed);
      }
      pairs += static_cast<std::int64_t>(h.pairs);
      failures += static_cast<std::int64_t>(h.failures);
    }
    add("delta homomorphism", pairs, failures, {{"genus", sg}});
  }
  o.json["reports"] = reports;
  o.json["verdict"] = o.invariant_failure ? "FAIL" : "PASS";
  return o;
}

void print(const Output& o, const std::string& command, const Config& c) {
  if (c.format == "tsv") {
    std::ostringstream s;
    for (std::size_t i = 0; i < o.table.header.size(); ++i) s << (i ? "\t" : "") << o.table.header[i];
    s << '\n';
    for (const auto& r : o.table.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "\t" : "") << r[i];
      s << '\n';
    }
    std::cout << s.str();
    return;
  }
  Json j = envelope(command);
  if (o.json.contains("status")) j["status"] = o.json["status"];
  if (o.invariant_failure) j["status"] = "invariant-failure";
  Json result = o.json;
  result.erase("status");
  j["result"] = result;
  std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed points, bounds, censuses and oracles for rank-4 Higgs bundle moduli", "higgs_census"};
  app.require_subcommand(1, 1);
  Config c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", c.seed, "Seed for sampled checks");

  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  auto genus = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--genus", c.genus, "Curve genus (>= 2)");
    if (required) opt->required();
  };
  auto group = [&](CLI::App* s) {
    s->add_option("--group", c.group, "su22 | sp4r | sl<n>c | sunn | sp2nr | slnc")->required();
    s->add_option("--n", c.n, "Rank parameter for sunn / sp2nr / slnc");
  };

  auto* dim = sub("dim", "Complex dimension of the moduli space");
  group(dim);
  genus(dim);
  auto* mwb = sub("mw-bound", "Milnor-Wood bound n(g-1)");
  mwb->add_option("--n", c.n)->required();
  genus(mwb);
  auto* mwv = sub("mw-verify", "Check the inequality chain behind the bound");
  mwv->add_option("--n", c.n)->required();
  genus(mwv);
  mwv->add_option("--degree", c.degree)->required();
  mwv->add_option("--deg-u", c.deg_u);
  mwv->add_option("--deg-uprime", c.deg_uprime);
  mwv->add_option("--rk-c", c.rk_c);
  mwv->add_option("--max-abs-deg", c.max_abs_deg);
  auto* adj = sub("adjoint", "Graded decomposition of the adjoint bundle");
  adj->add_option("--input", c.input, "Graded bundle JSON, - for stdin")->required();
  auto* idx = sub("index", "Morse index of a fixed point");
  idx->add_option("--input", c.input, "Graded bundle JSON, - for stdin")->required();
  genus(idx);
  auto* lau = sub("laumon", "Half-dimension check on every SL(n,C) fixed-point type");
  lau->add_option("--n", c.n)->required();
  genus(lau);
  auto* cls = sub("classify", "Census of local minima");
  group(cls);
  genus(cls);
  cls->add_option("--degree", c.degree);
  auto* orc = sub("oracle", "Run invariant oracles; exit 2 on any failure");
  genus(orc, false);
  orc->add_option("--input", c.input, "JSONL corpus of chain models, - for stdin");
  orc->add_option("--write-corpus", c.write_corpus, "Write the enumerated models as JSONL");
  orc->add_option("--max-lines", c.max_lines, "Line summands per model")->check(CLI::Range(2, 4));
  orc->add_option("--max-abs-deg", c.max_abs_deg);
  orc->add_option("--samples", c.samples)->check(CLI::NonNegativeNumber);
  orc->add_option("--mutate", c.mutate, "Inject a known fault")->check(CLI::IsMember({"pairing"}));
  auto* cmp = sub("components", "Connected components with deg V = d");
  group(cmp);
  genus(cmp);
  cmp->add_option("--degree", c.degree)->required();
  auto* str = sub("strata", "Strata of the extremal Sp(4,R) piece");
  genus(str);
  auto* tei = sub("teich", "Dimensions of the Teichmuller-type components");
  genus(tei);
  auto* pry = sub("prym", "Prym component label from (q, w1, w2)");
  genus(pry);
  pry->add_option("--q", c.q_bits, "Values of q on a1..ag b1..bg")->required();
  pry->add_option("--u", c.u_bits, "w1 as 2g bits a1..ag b1..bg")->required();
  pry->add_option("--w2", c.w2)->required()->check(CLI::Range(0, 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    Output o;
    if (name == "dim") o = cmd_dim(c);
    else if (name == "mw-bound") o = cmd_mw_bound(c);
    else if (name == "mw-verify") o = cmd_mw_verify(c);
    else if (name == "adjoint") o = cmd_adjoint(c);
    else if (name == "index") o = cmd_index(c);
    else if (name == "laumon") o = cmd_laumon(c);
    else if (name == "classify") o = cmd_classify(c);
    else if (name == "oracle") o = cmd_oracle(c);
    else if (name == "components") o = cmd_components(c);
    else if (name == "strata") o = cmd_strata(c);
    else if (name == "teich") o = cmd_teich(c);
    else if (name == "prym") o = cmd_prym(c);
    print(o, name, c);
    return o.invariant_failure ? kExitInvariant : kExitOk;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitDomain;
  }
}
