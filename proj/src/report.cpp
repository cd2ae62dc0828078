#include "posat/report.hpp"

#include "posat/family_io.hpp"

namespace posat {

namespace {

Json header(const char* kind) {
  Json j;
  j["schema"] = std::string("posat.") + kind + "/" + std::to_string(kReportVersion);
  return j;
}

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

Json decomposition_json(const TopChainDecomposition& d) {
  Json j;
  j["base"] = d.base;
  j["chain"] = d.chain;
  j["needs_normalization"] = d.needs_normalization;
  return j;
}

Json bound_json(const ConstantBound& b) {
  Json j;
  j["bound"] = b.bound;
  j["m"] = b.m;
  j["inflate_from"] = b.inflate_from;
  if (b.family.ground_size() > 0) j["family"] = family_json(b.family);
  return j;
}

}  // namespace

Json poset_json(const Poset& p) {
  Json j;
  j["size"] = p.size();
  Json rel = Json::array();
  for (auto [a, b] : p.relations()) rel.push_back({a, b});
  j["relations"] = std::move(rel);
  return j;
}

Json family_json(const SetFamily& f) {
  Json j;
  j["n"] = f.ground_size();
  j["size"] = f.size();
  Json members = Json::array();
  for (SubsetMask s : f) members.push_back(format_set(s));
  j["members"] = std::move(members);
  return j;
}

Json embedding_json(const SetFamily& f, const Embedding& e) {
  Json out = Json::array();
  for (std::size_t p = 0; p < e.image.size(); ++p) {
    out.push_back({{"element", p}, {"set", format_set(f[e.image[p]])}});
  }
  return out;
}

Json saturation_json(const SaturationReport& r, const SetFamily& f) {
  Json j = header("saturation");
  j["poset"] = poset_json(r.poset);
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["family_size"] = r.family_size;
  j["verdict"] = to_string(r.verdict);
  if (r.embedding) j["embedding"] = embedding_json(f, *r.embedding);
  if (r.missing) j["missing"] = format_set(*r.missing);
  j["candidates_tested"] = r.candidates_tested;
  j["copies_found"] = r.copies_found;
  j["search_nodes"] = r.search_nodes;
  j["chain_path"] = r.chain_path;
  j["tail"] = r.tail_used ? Json(*r.tail_used) : Json(nullptr);
  j["cross_check_agrees"] = r.cross_check_agrees ? Json(*r.cross_check_agrees) : Json(nullptr);
  return j;
}

Json greedy_json(const GreedyTrace& t) {
  Json j = header("greedy");
  j["n"] = t.n;
  j["size"] = t.family.size();
  j["stabilization"] = t.stabilization;
  j["f_added"] = bit_string(t.f_added);
  j["g_added"] = bit_string(t.g_added);
  j["search_nodes"] = t.search_nodes;
  j["family"] = family_json(t.family);
  return j;
}

Json oracle_json(const OracleResult& r) {
  Json j = header("oracle");
  j["n"] = r.n;
  j["poset"] = poset_json(r.poset);
  j["mode"] = to_string(r.mode);
  j["minimum"] = r.minimum ? Json(*r.minimum) : Json(nullptr);
  j["start_size"] = r.start_size;
  j["max_size"] = r.max_size;
  Json forced = Json::array();
  for (SubsetMask s : r.forced) forced.push_back(format_set(s));
  j["forced"] = std::move(forced);
  Json witnesses = Json::array();
  for (const SetFamily& f : r.witnesses) witnesses.push_back(family_json(f));
  j["witnesses"] = std::move(witnesses);
  j["witnesses_truncated"] = r.witnesses_truncated;
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json classification_json(const Classification& c) {
  Json j = header("classification");
  j["kind"] = to_string(c.kind);
  j["reason"] = c.reason;
  j["via_dual"] = c.via_dual;
  if (c.decomposition) j["decomposition"] = decomposition_json(*c.decomposition);
  if (c.normalized) j["normalized"] = decomposition_json(*c.normalized);
  if (c.bound) j["bound"] = bound_json(*c.bound);
  j["bound_exists_not_computed"] = c.bound_exists_not_computed;
  if (c.chain_component_length) j["chain_component_length"] = *c.chain_component_length;
  if (c.estar) {
    Json e;
    e["certified_upper"] = c.estar->certified_upper ? Json(*c.estar->certified_upper) : Json(nullptr);
    e["conjectured"] = c.estar->conjectured;
    e["cap_used"] = c.estar->cap_used;
    j["estar"] = std::move(e);
  }
  Json sizes = Json::array();
  for (auto [m, size] : c.greedy_sizes) sizes.push_back({{"m", m}, {"size", size}});
  j["greedy_sizes"] = std::move(sizes);
  Json evidence = Json::array();
  for (const auto& [k, e] : c.estar_evidence) {
    evidence.push_back({{"chain_length", k},
                        {"certified_upper", e.certified_upper ? Json(*e.certified_upper) : Json(nullptr)},
                        {"conjectured", e.conjectured},
                        {"cap_used", e.cap_used}});
  }
  j["estar_evidence"] = std::move(evidence);
  return j;
}

Json estar_json(const EstarEstimate& e, const Poset& p, CopyMode mode) {
  Json j = header("estar");
  j["poset"] = poset_json(p);
  j["mode"] = to_string(mode);
  j["conjectured"] = e.conjectured;
  j["certified_upper"] = e.certified_upper ? Json(*e.certified_upper) : Json(nullptr);
  j["certified"] = e.certified_upper.has_value();
  j["cap_used"] = e.cap_used;
  return j;
}

Json construction_json(const TaggedFamily& t) {
  Json j = header("construction");
  j["name"] = t.name;
  j["target"] = poset_json(t.target);
  j["target_expr"] = t.target_expr.empty() ? Json(nullptr) : Json(t.target_expr);
  j["mode"] = to_string(t.mode);
  j["n"] = t.family.ground_size();
  j["size"] = t.family.size();
  j["claimed_size"] = t.claimed_size;
  j["validity"] = t.validity;
  j["hypotheses_met"] = t.hypotheses_met;
  return j;
}

Json embed_json(const SetFamily& f, const Poset& p, CopyMode mode, const std::optional<Embedding>& e) {
  Json j = header("embed");
  j["poset"] = poset_json(p);
  j["mode"] = to_string(mode);
  j["n"] = f.ground_size();
  j["found"] = e.has_value();
  j["embedding"] = e ? embedding_json(f, *e) : Json(nullptr);
  return j;
}

}  // namespace posat
