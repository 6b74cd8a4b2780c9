#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "rational.hpp"
#include "wcol.hpp"

namespace distk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const VertexSet& s) { return Json(s.ids()); }

inline VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: vertex set must be an array");
  std::vector<Vertex> ids;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw std::invalid_argument("json: bad vertex id");
    ids.push_back(v.get<Vertex>());
  }
  return VertexSet(std::move(ids));
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const IrrelevanceCertificate& c) {
  return Json{{"r", c.r}, {"d", c.d}, {"z", to_json(c.z)}, {"s", to_json(c.s)}, {"l_prime", to_json(c.l_prime)}};
}

inline IrrelevanceCertificate certificate_from_json(const Json& j) {
  IrrelevanceCertificate c;
  c.r = j.at("r").get<int>();
  c.d = j.at("d").get<int>();
  c.z = vertex_set_from_json(j.at("z"));
  c.s = vertex_set_from_json(j.at("s"));
  c.l_prime = vertex_set_from_json(j.at("l_prime"));
  return c;
}

inline Json to_json(const RemovalEntry& e) {
  return Json{{"removed", e.removed}, {"certificate", to_json(e.certificate)}};
}

inline RemovalEntry removal_entry_from_json(const Json& j) {
  return {j.at("removed").get<Vertex>(), certificate_from_json(j.at("certificate"))};
}

inline Json to_json(const KernelOutcome& o) {
  Json j{{"schema", kSchemaVersion}, {"tag", to_string(o.tag)}};
  if (o.tag == KernelOutcome::Tag::kYes) j["witness"] = to_json(o.witness);
  if (o.tag == KernelOutcome::Tag::kKernel) {
    j["y"] = to_json(o.y);
    j["b"] = to_json(o.b);
  }
  Json log = Json::array();
  for (const auto& e : o.removal_log) log.push_back(to_json(e));
  j["removal_log"] = std::move(log);
  return j;
}

inline KernelOutcome kernel_outcome_from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw std::invalid_argument("json: unsupported schema");
  KernelOutcome o;
  const auto tag = j.at("tag").get<std::string>();
  if (tag == "YES") o.tag = KernelOutcome::Tag::kYes;
  else if (tag == "NO") o.tag = KernelOutcome::Tag::kNo;
  else if (tag == "KERNEL") o.tag = KernelOutcome::Tag::kKernel;
  else throw std::invalid_argument("json: unknown outcome tag '" + tag + "'");
  if (j.contains("witness")) o.witness = vertex_set_from_json(j["witness"]);
  if (j.contains("y")) o.y = vertex_set_from_json(j["y"]);
  if (j.contains("b")) o.b = vertex_set_from_json(j["b"]);
  for (const auto& e : j.at("removal_log")) o.removal_log.push_back(removal_entry_from_json(e));
  return o;
}

inline Json to_json(const DualityReport& rep) {
  Json j{{"schema", kSchemaVersion},
         {"r", rep.r},
         {"dominating_set", to_json(rep.dominating_set)},
         {"independent_witness", to_json(rep.independent_witness)},
         {"wcol_value", rep.wcol_value},
         {"order", rep.order.order()},
         {"greedy_bound", to_json(rep.greedy_bound)}};
  if (rep.lp_value) j["lp_value"] = to_json(*rep.lp_value);
  return j;
}

}  // namespace distk
