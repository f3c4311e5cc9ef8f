#pragma once

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpd/divisor_ext.hpp"
#include "hpd/graded.hpp"
#include "hpd/hpd_engine.hpp"

namespace hpd::io {

using nlohmann::json;

// Exact integers are emitted as JSON numbers while they fit in 64 bits and
// as decimal strings beyond that, so no value is ever rounded.
[[nodiscard]] inline json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

[[nodiscard]] inline Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

[[nodiscard]] inline json to_json(const GradedDims& table) {
  json out = json::array();
  for (const auto& [q, dim] : table.entries())
    out.push_back(json::array({q, json_int(dim)}));
  return out;
}

[[nodiscard]] inline GradedDims table_from_json(const json& j) {
  GradedDims out;
  for (const auto& entry : j)
    out.add(entry.at(0).get<int>(), int_from_json(entry.at(1)));
  return out;
}

[[nodiscard]] inline json to_json(const engine::SODBlock& b) {
  json out;
  out["label"] = engine::to_string(b.label);
  out["alpha"] = b.alpha ? json(*b.alpha) : json(nullptr);
  out["beta"] = b.beta ? json(*b.beta) : json(nullptr);
  out["rank"] = json_int(b.rank);
  return out;
}

[[nodiscard]] inline engine::SODBlock block_from_json(const json& j) {
  engine::SODBlock b;
  std::string label = j.at("label").get<std::string>();
  if (label == "BASE_LOCUS") b.label = engine::BlockLabel::BASE_LOCUS;
  else if (label == "AMBIENT_TWIST") b.label = engine::BlockLabel::AMBIENT_TWIST;
  else if (label == "LEFSCHETZ_BLOCK")
    b.label = engine::BlockLabel::LEFSCHETZ_BLOCK;
  else if (label == "HPD_CATEGORY") b.label = engine::BlockLabel::HPD_CATEGORY;
  else throw std::invalid_argument("block_from_json: bad label " + label);
  if (!j.at("alpha").is_null()) b.alpha = j.at("alpha").get<int>();
  if (!j.at("beta").is_null()) b.beta = j.at("beta").get<int>();
  b.rank = int_from_json(j.at("rank"));
  return b;
}

[[nodiscard]] inline json to_json(const engine::Certificate& c) {
  json out;
  out["name"] = c.name;
  out["lhs"] = json_int(c.lhs);
  out["rhs"] = json_int(c.rhs);
  out["pass"] = c.pass;
  return out;
}

[[nodiscard]] inline engine::Certificate certificate_from_json(const json& j) {
  engine::Certificate c;
  c.name = j.at("name").get<std::string>();
  c.lhs = int_from_json(j.at("lhs"));
  c.rhs = int_from_json(j.at("rhs"));
  c.pass = j.at("pass").get<bool>();
  return c;
}

[[nodiscard]] inline json blocks_to_json(
    const std::vector<engine::SODBlock>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(to_json(b));
  return out;
}

[[nodiscard]] inline json certificates_to_json(
    const std::vector<engine::Certificate>& certs) {
  json out = json::array();
  for (const auto& c : certs) out.push_back(to_json(c));
  return out;
}

[[nodiscard]] inline json scalars_to_json(
    const std::map<std::string, Int>& scalars) {
  json out = json::object();
  for (const auto& [key, value] : scalars) out[key] = json_int(value);
  return out;
}

[[nodiscard]] inline json to_json(const engine::SODReport& r) {
  json out;
  out["case"] = engine::to_string(r.case_tag);
  out["blocks"] = blocks_to_json(r.blocks);
  if (!r.alternative_blocks.empty())
    out["alternative_blocks"] = blocks_to_json(r.alternative_blocks);
  out["certificates"] = certificates_to_json(r.certificates);
  out["scalars"] = scalars_to_json(r.scalars);
  if (r.calabi_yau) out["calabi_yau"] = *r.calabi_yau;
  out["all_pass"] = r.all_pass();
  return out;
}

[[nodiscard]] inline json to_json(const engine::ExampleReport& r) {
  json out;
  out["name"] = r.name;
  if (r.n > 0) out["n"] = r.n;
  if (r.case_tag) out["case"] = engine::to_string(*r.case_tag);
  out["blocks"] = blocks_to_json(r.blocks);
  out["certificates"] = certificates_to_json(r.certificates);
  out["scalars"] = scalars_to_json(r.scalars);
  if (r.calabi_yau) out["calabi_yau"] = *r.calabi_yau;
  out["all_pass"] = r.all_pass();
  return out;
}

[[nodiscard]] inline json to_json(const divext::ExtAnswer& a) {
  json out;
  out["status"] = a.status == divext::ExtStatus::Determined ? "determined"
                                                            : "indeterminate";
  out["euler"] = json_int(a.euler);
  out["term_before"] = to_json(a.term_before);
  out["term_after"] = to_json(a.term_after);
  if (a.status == divext::ExtStatus::Determined)
    out["table"] = to_json(a.table);
  return out;
}

[[nodiscard]] inline json box_to_json(const engine::Box& b) {
  return json::array({b.alpha, b.beta});
}

[[nodiscard]] inline json to_json(const engine::GridState& g) {
  json out;
  out["i"] = g.i;
  out["ell"] = g.ell;
  json support = json::array();
  for (const auto& b : g.support) support.push_back(box_to_json(b));
  out["support"] = support;
  json steps = json::array();
  for (const auto& s : g.script) {
    json step;
    step["stage"] = s.stage;
    step["column_alpha"] = s.column_alpha;
    json past = json::array(), skipped = json::array();
    for (const auto& b : s.mutated_past) past.push_back(box_to_json(b));
    for (const auto& b : s.skipped) skipped.push_back(box_to_json(b));
    step["mutated_past"] = past;
    step["skipped"] = skipped;
    step["certificates"] = s.certificate_ids;
    steps.push_back(step);
  }
  out["steps"] = steps;
  json certs = json::object();
  for (const auto& [id, c] : g.certificates) {
    json cert;
    cert["skipped"] = box_to_json(c.skipped);
    cert["target"] = box_to_json(c.target);
    cert["case"] = c.case_id;
    cert["classified"] = c.classified;
    cert["verified"] = c.verified;
    certs[id] = cert;
  }
  out["certificates"] = certs;
  out["all_certified"] = g.all_certified;
  return out;
}

[[nodiscard]] inline json to_json(const engine::GenerationSchedule& s) {
  json out;
  out["i"] = s.i;
  out["ell"] = s.ell;
  out["k"] = s.k;
  json entries = json::array();
  for (const auto& e : s.entries) {
    json entry;
    entry["target"] = box_to_json(e.target);
    entry["detector"] = box_to_json(e.detector);
    entry["euler"] = json_int(e.euler);
    entry["pairing"] = to_json(e.pairing);
    entry["pass"] = e.pass;
    entries.push_back(entry);
  }
  out["entries"] = entries;
  out["all_pass"] = s.all_pass;
  return out;
}

// ---------------------------------------------------------------------------
// TSV: flat renderings of the tabular payloads only

[[nodiscard]] inline std::string tsv_blocks(
    const std::vector<engine::SODBlock>& blocks) {
  std::ostringstream os;
  os << "label\talpha\tbeta\trank\n";
  for (const auto& b : blocks) {
    os << engine::to_string(b.label) << '\t';
    if (b.alpha) os << *b.alpha;
    os << '\t';
    if (b.beta) os << *b.beta;
    os << '\t' << b.rank << '\n';
  }
  return os.str();
}

[[nodiscard]] inline std::string tsv_table(const GradedDims& table) {
  std::ostringstream os;
  os << "q\tdim\n";
  for (const auto& [q, dim] : table.entries()) os << q << '\t' << dim << '\n';
  return os.str();
}

}  // namespace hpd::io
