#pragma once

// JSON encodings of the engine's values (schema "higgs-census/1"). Weights
// are written as 2m integers; rationals and affine forms as strings plus
// structured fields.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "higgs/higgs.hpp"

namespace higgs {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "higgs-census/1";

inline Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["status"] = "ok";
  return j;
}

/// Group tags: su22, sp4r, sl<n>c, or sunn / sp2nr / slnc with n given.
inline GroupType parse_group(const std::string& tag, std::int64_t n = 0) {
  auto need_n = [&](const char* t) {
    if (n < 1) throw DomainError(std::string("group tag ") + t + " needs --n");
    return n;
  };
  if (tag == "su22") return GroupType::su(2);
  if (tag == "sp4r") return GroupType::sp(2);
  if (tag == "sunn") return GroupType::su(need_n("sunn"));
  if (tag == "sp2nr") return GroupType::sp(need_n("sp2nr"));
  if (tag == "slnc") return GroupType::sl(need_n("slnc"));
  if (tag.size() > 3 && tag.rfind("sl", 0) == 0 && tag.back() == 'c') {
    std::string mid = tag.substr(2, tag.size() - 3);
    if (mid.find_first_not_of("0123456789") == std::string::npos) return GroupType::sl(std::stoll(mid));
  }
  throw DomainError("unknown group tag '" + tag + "'");
}

inline std::string group_tag(const GroupType& g) {
  switch (g.family()) {
    case GroupFamily::SUnn: return g.n() == 2 ? "su22" : "sunn";
    case GroupFamily::Sp2nR: return g.n() == 2 ? "sp4r" : "sp2nr";
    case GroupFamily::SLnC: return "sl" + std::to_string(g.n()) + "c";
  }
  return "?";
}

inline Json to_json(const GroupType& g) {
  return Json{{"tag", group_tag(g)}, {"name", g.name()}, {"n", g.n()}, {"dim", g.complex_dimension()}};
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const LinearForm& f, const std::vector<std::string>& names = {}) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < f.arity(); ++i) coeffs.push_back(f.coefficient(i).str());
  return Json{{"text", f.str(names)}, {"constant", f.constant().str()}, {"coefficients", coeffs}};
}

inline Json degree_json(std::int64_t d, const std::vector<std::string>& = {}) { return d; }
inline Json degree_json(const LinearForm& d, const std::vector<std::string>& names = {}) {
  return to_json(d, names);
}

template <class Deg>
Json to_json(const BasicBundleClass<Deg>& c, const std::vector<std::string>& names = {}) {
  return Json{{"rank", c.rank}, {"degree", degree_json(c.degree, names)}};
}

inline Block parse_block(const std::string& s) {
  if (s == "V") return Block::V;
  if (s == "V'") return Block::Vprime;
  if (s == "V*") return Block::Vdual;
  if (s == "-" || s.empty()) return Block::None;
  throw DomainError("unknown block tag '" + s + "'");
}

template <class Deg>
Json to_json(const GradedBundle<Deg>& e, const std::vector<std::string>& names = {}) {
  Json j;
  j["group"] = to_json(e.group());
  Json stored = Json::array(), full = Json::array();
  for (const auto& s : e.summands())
    stored.push_back(Json{{"twice_m", s.weight.twice_m}, {"weight", s.weight.str()}, {"rank", s.cls.rank},
                          {"degree", degree_json(s.cls.degree, names)}, {"block", block_name(s.block)}});
  for (const auto& s : e.full())
    full.push_back(Json{{"twice_m", s.weight.twice_m}, {"rank", s.cls.rank},
                        {"degree", degree_json(s.cls.degree, names)}, {"block", block_name(s.block)},
                        {"derived", s.derived}});
  j["summands"] = stored;
  j["full"] = full;
  return j;
}

/// Input document: {"group": "su22", "n": 2, "summands": [{"twice_m": -1,
/// "rank": 2, "degree": 1, "block": "V"}, ...]}. For Sp(2n,R) list only the
/// V side.
inline GradedBundle<std::int64_t> graded_bundle_from_json(const Json& j) {
  try {
    std::string tag = j.at("group").is_object() ? j.at("group").at("tag").get<std::string>()
                                                : j.at("group").get<std::string>();
    std::int64_t n = j.contains("n") ? j.at("n").get<std::int64_t>() : 0;
    if (j.at("group").is_object() && j.at("group").contains("n")) n = j.at("group").at("n").get<std::int64_t>();
    GroupType g = parse_group(tag, n);
    std::vector<GradedSummand<std::int64_t>> sums;
    for (const auto& s : j.at("summands")) {
      GradedSummand<std::int64_t> x;
      x.weight = Weight{s.at("twice_m").get<std::int64_t>()};
      x.cls = make_class(s.at("rank").get<std::int64_t>(), s.at("degree").get<std::int64_t>());
      x.block = parse_block(s.value("block", std::string("-")));
      sums.push_back(x);
    }
    return GradedBundle<std::int64_t>::make(g, std::move(sums));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed graded bundle document: ") + e.what());
  }
}

template <class Deg>
Json to_json(const GradedAdjoint<Deg>& ad, const GradedBundle<Deg>& e, const std::vector<std::string>& names = {}) {
  Json entries = Json::array();
  for (const auto& [k, en] : ad.entries) {
    Json pieces = Json::array();
    for (const auto& p : en.pieces)
      pieces.push_back(Json{{"label", piece_label(e, p)}, {"sign", p.sign}, {"class", to_json(p.cls, names)}});
    entries.push_back(Json{{"k", k},
                           {"part", k % 2 == 0 ? "compact" : "noncompact"},
                           {"rank", en.total.rank},
                           {"degree", degree_json(en.total.degree, names)},
                           {"pieces", pieces}});
  }
  auto chk = total_rank_degree_check(ad);
  return Json{{"entries", entries},
              {"check",
               {{"rank_sum", chk.rank_sum},
                {"expected_rank", chk.expected_rank},
                {"rank_ok", chk.rank_ok},
                {"degree_ok", chk.degree_ok},
                {"duality_ok", chk.duality_ok},
                {"failures", chk.failures}}}};
}

template <class Deg>
Json to_json(const MorseReport<Deg>& r, const std::vector<std::string>& names = {}) {
  Json contrib = Json::array();
  for (const auto& c : r.contributions)
    contrib.push_back(Json{{"k", c.k}, {"rank_term", c.rank_term}, {"degree_term", degree_json(c.degree_term, names)}});
  Json j{{"index", degree_json(r.index, names)}, {"contributions", contrib}, {"assumption", r.assumption}};
  if (r.minimum_candidate) j["minimum_candidate"] = *r.minimum_candidate;
  return j;
}

inline Json to_json(const MWChainReport& r) {
  const auto& s = r.scenario;
  return Json{{"scenario",
               {{"n", s.n}, {"genus", s.genus}, {"d", s.d}, {"deg_U", s.deg_U}, {"deg_Uprime", s.deg_Uprime},
                {"rk_c", s.rk_c}}},
              {"map", r.target_label},
              {"hypotheses",
               {{"deg U' <= 0", r.ineq_one},
                {"d + deg U <= 0", r.ineq_two},
                {"deg U' - d + deg U + (2g-2) rk c >= 0", r.deg_line}}},
              {"hypotheses_hold", r.hypotheses_hold},
              {"conclusion", r.hypotheses_hold ? Json(r.conclusion) : Json(nullptr)},
              {"bound_conclusion", r.hypotheses_hold ? Json(r.bound_conclusion) : Json(nullptr)},
              {"failed", r.failed}};
}

inline Json to_json(const FarkasCertificate& c) {
  Json l = Json::array();
  for (const auto& x : c.lambda) l.push_back(x.str());
  return Json{{"multipliers", l}, {"combined_rhs", c.combined_rhs.str()}};
}

inline Json to_json(const TypeVerdict& v) {
  const auto& t = v.type;
  Json j{{"rank_vector", t.rank_vector},
         {"label", t.label},
         {"verdict", verdict_name(v.verdict)},
         {"needs_review", t.needs_review}};
  if (t.type_impossible) {
    j["reason"] = v.reason;
    return j;
  }
  Json ws = Json::array();
  for (const auto& w : t.weights) ws.push_back(w.twice_m);
  Json bs = Json::array();
  for (auto b : t.blocks) bs.push_back(block_name(b));
  j["twice_weights"] = ws;
  j["blocks"] = bs;
  j["variables"] = t.var_names;
  j["index"] = to_json(v.index, t.var_names);
  j["constraints"] = v.constraints;
  j["stable_feasible"] = v.stable_feasible;
  j["reason"] = v.reason;
  if (!v.witness.empty()) {
    j["witness"] = v.witness;
    j["witness_oracle_stable"] = v.witness_oracle_stable;
  }
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  return j;
}

inline Json to_json(const MinimaCensus& c) {
  Json types = Json::array();
  for (const auto& t : c.types) types.push_back(to_json(t));
  Json red = Json::array();
  for (const auto& r : c.reducible) red.push_back(Json{{"key", r.key}, {"statement", r.statement}});
  return Json{{"group", to_json(c.group)}, {"genus", c.genus}, {"d", c.d}, {"types", types}, {"reducible", red}};
}

inline Json to_json(const Stratum& s) {
  Json j{{"kind", stratum_kind_name(s.kind)}};
  switch (s.kind) {
    case StratumKind::MUV:
      j["u"] = s.u;
      j["v"] = s.v;
      break;
    case StratumKind::M0l: j["l"] = s.l; break;
    case StratumKind::M0Root:
      j["l"] = s.l;
      j["root"] = s.root;
      break;
  }
  j["connected"] = s.connected;
  return j;
}

inline Json to_json(const ChainModel& m) {
  Json sums = Json::array();
  for (const auto& s : m.summands()) {
    Json x{{"rank", s.rank}, {"degree", s.degree}, {"block", block_name(s.block)}};
    if (s.weight) x["twice_m"] = s.weight->twice_m;
    if (s.partner >= 0) x["partner"] = s.partner;
    sums.push_back(x);
  }
  Json arrows = Json::array();
  for (const auto& a : m.arrows()) arrows.push_back(Json::array({a.source, a.target}));
  return Json{{"genus", m.curve().genus()},
              {"group", group_tag(m.group())},
              {"n", m.group().n()},
              {"enforce_group_ranks", m.enforces_group_ranks()},
              {"summands", sums},
              {"arrows", arrows}};
}

inline ChainModel chain_model_from_json(const Json& j) {
  try {
    Curve c(j.at("genus").get<std::int64_t>());
    GroupType g = parse_group(j.at("group").get<std::string>(), j.value("n", std::int64_t{0}));
    std::vector<ChainSummand> sums;
    for (const auto& s : j.at("summands")) {
      ChainSummand x;
      x.rank = s.value("rank", std::int64_t{1});
      x.degree = s.at("degree").get<std::int64_t>();
      x.block = parse_block(s.value("block", std::string("-")));
      if (s.contains("twice_m")) x.weight = Weight{s.at("twice_m").get<std::int64_t>()};
      x.partner = s.value("partner", -1);
      sums.push_back(x);
    }
    std::vector<ChainArrow> arrows;
    for (const auto& a : j.at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return ChainModel::make(c, g, std::move(sums), std::move(arrows), j.value("enforce_group_ranks", true));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed chain model: ") + e.what());
  }
}

}  // namespace higgs
