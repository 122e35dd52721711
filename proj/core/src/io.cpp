/*
   Copyright 2026 The mubkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mubkit/io.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace mubkit {

namespace {

using Json = nlohmann::ordered_json;

// Coefficients that fit in 64 bits travel as JSON numbers, larger ones as
// decimal strings.
Json bigint_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string");
}

Json entry_to_json(const CyclotomicInt& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(bigint_to_json(c));
  return coeffs;
}

CyclotomicInt entry_from_json(const Json& j, unsigned long order) {
  if (!j.is_array()) throw ParseError("entry must be an array of coefficients");
  if (j.size() != euler_phi(order))
    throw ParseError("entry length must equal phi(order)");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return CyclotomicInt::from_raw(order, std::move(coeffs));
}

Json vector_to_json(const StateVector& v) {
  Json out = Json::array();
  for (const auto& e : v.entries()) out.push_back(entry_to_json(e));
  return out;
}

StateVector vector_from_json(const Json& j, unsigned long order, long long scale_sq) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a nonempty array");
  std::vector<CyclotomicInt> entries;
  entries.reserve(j.size());
  for (const auto& e : j) entries.push_back(entry_from_json(e, order));
  return StateVector(std::move(entries), scale_sq);
}

Json parse_document(const std::string& text, const char* expected_kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("record must be an object with a \"kind\" key");
  if (doc["kind"].get<std::string>() != expected_kind)
    throw ParseError(std::string("expected kind \"") + expected_kind + "\"");
  return doc;
}

std::string dump(const Json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace

std::string record_kind(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("record must be an object with a \"kind\" key");
  return doc["kind"].get<std::string>();
}

std::string mub_set_to_record(const MubSet& s) {
  Json doc;
  doc["kind"] = "mub_set";
  doc["dim"] = s.dim();
  doc["order"] = s.order();
  doc["provenance"] = {{"route", s.provenance().route},
                       {"dimension_class", s.provenance().dimension_class},
                       {"moduli", s.provenance().moduli}};
  Json bases = Json::array();
  for (const auto& b : s.bases()) {
    Json basis;
    basis["label"] = b.label();
    basis["scale_sq"] = b.scale_sq();
    Json vectors = Json::array();
    for (const auto& v : b.vectors()) vectors.push_back(vector_to_json(v));
    basis["vectors"] = std::move(vectors);
    bases.push_back(std::move(basis));
  }
  doc["bases"] = std::move(bases);
  return dump(doc);
}

MubSet mub_set_from_record(const std::string& text) {
  Json doc = parse_document(text, "mub_set");
  try {
    auto dim = doc.at("dim").get<std::size_t>();
    auto order = doc.at("order").get<unsigned long>();
    if (dim == 0) throw ParseError("dim must be positive");
    MubProvenance prov;
    if (doc.contains("provenance")) {
      const Json& p = doc["provenance"];
      prov.route = p.value("route", "");
      prov.dimension_class = p.value("dimension_class", "");
      if (p.contains("moduli")) prov.moduli = p["moduli"].get<std::vector<std::string>>();
    }
    std::vector<Basis> bases;
    for (const Json& jb : doc.at("bases")) {
      auto scale = jb.at("scale_sq").get<long long>();
      std::vector<StateVector> vectors;
      for (const Json& jv : jb.at("vectors")) vectors.push_back(vector_from_json(jv, order, scale));
      if (vectors.size() != dim) throw ParseError("basis must hold dim vectors");
      for (const auto& v : vectors)
        if (v.dim() != dim) throw ParseError("vector length must equal dim");
      bases.emplace_back(std::move(vectors), jb.value("label", ""));
    }
    return MubSet(dim, std::move(bases), std::move(prov));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed mub_set record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed mub_set record: ") + e.what());
  }
}

std::string bell_family_to_record(const BellFamily& f) {
  Json doc;
  doc["kind"] = "bell_family";
  doc["dim"] = f.dim();
  unsigned long order = 1;
  long long scale = 1;
  if (f.shift_count() && f.layer_count() && !f.sets()[0][0].empty()) {
    order = f.sets()[0][0][0].order();
    scale = f.sets()[0][0][0].scale_sq();
  }
  doc["order"] = order;
  doc["scale_sq"] = scale;
  doc["index_schema"] = Json::array({"h", "a", "b"});
  doc["provenance"] = {{"route", f.route()}};
  Json sets = Json::array();
  for (const auto& shift : f.sets()) {
    Json layers = Json::array();
    for (const auto& layer : shift) {
      Json states = Json::array();
      for (const auto& v : layer) states.push_back(vector_to_json(v));
      layers.push_back(std::move(states));
    }
    sets.push_back(std::move(layers));
  }
  doc["sets"] = std::move(sets);
  return dump(doc);
}

BellFamily bell_family_from_record(const std::string& text) {
  Json doc = parse_document(text, "bell_family");
  try {
    auto dim = doc.at("dim").get<std::size_t>();
    auto order = doc.at("order").get<unsigned long>();
    auto scale = doc.at("scale_sq").get<long long>();
    std::string route;
    if (doc.contains("provenance")) route = doc["provenance"].value("route", "");
    std::vector<std::vector<std::vector<StateVector>>> sets;
    for (const Json& jshift : doc.at("sets")) {
      std::vector<std::vector<StateVector>> layers;
      for (const Json& jlayer : jshift) {
        std::vector<StateVector> states;
        for (const Json& jv : jlayer) states.push_back(vector_from_json(jv, order, scale));
        layers.push_back(std::move(states));
      }
      sets.push_back(std::move(layers));
    }
    return BellFamily(dim, std::move(sets), std::move(route));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed bell_family record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed bell_family record: ") + e.what());
  }
}

std::string plane_to_record(const IncidencePlane& p) {
  Json doc;
  doc["kind"] = "incidence_plane";
  doc["points"] = p.point_labels;
  Json lines = Json::array();
  for (const auto& line : p.lines) lines.push_back(line);
  doc["lines"] = std::move(lines);
  return dump(doc);
}

std::string field_table_to_record(const std::vector<RepresentationRow>& rows) {
  Json doc;
  doc["kind"] = "field_table";
  Json jrows = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["power"] = r.power;
    row["label"] = r.power_label;
    row["poly"] = r.poly;
    row["tuple"] = r.tuple;
    jrows.push_back(std::move(row));
  }
  doc["rows"] = std::move(jrows);
  return dump(doc);
}

std::string ring_table_to_record(const std::vector<RingRepresentationRow>& rows) {
  Json doc;
  doc["kind"] = "ring_table";
  Json jrows = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["power"] = r.power;
    row["label"] = r.power_label;
    row["poly"] = r.poly;
    row["tuple_z4"] = r.tuple_z4;
    row["tuple_z2"] = r.tuple_z2;
    jrows.push_back(std::move(row));
  }
  doc["rows"] = std::move(jrows);
  return dump(doc);
}

std::string mub_report_to_record(const MubReport& r) {
  Json doc;
  doc["kind"] = "verification_report";
  doc["target"] = "mub_set";
  doc["pass"] = r.pass;
  Json bases = Json::array();
  for (const auto& b : r.bases) {
    Json jb;
    jb["basis"] = b.basis_index;
    jb["orthonormal"] = b.orthonormal;
    if (!b.detail.empty()) jb["detail"] = b.detail;
    bases.push_back(std::move(jb));
  }
  doc["bases"] = std::move(bases);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json jp;
    jp["pair"] = Json::array({p.basis_a, p.basis_b});
    jp["unbiased"] = p.unbiased;
    if (!p.detail.empty()) jp["detail"] = p.detail;
    pairs.push_back(std::move(jp));
  }
  doc["pairs"] = std::move(pairs);
  return dump(doc);
}

std::string bell_report_to_record(const BellReport& r) {
  Json doc;
  doc["kind"] = "verification_report";
  doc["target"] = "bell_family";
  doc["pass"] = r.pass;
  doc["orthonormal"] = r.orthonormal;
  doc["entangled"] = r.entangled;
  doc["unbiased_within_shift"] = r.unbiased_within_shift;
  doc["orthogonal_across_shift"] = r.orthogonal_across_shift;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json jf;
    jf["check"] = f.check;
    jf["left"] = Json::array({f.h_a, f.a_a, f.b_a});
    jf["right"] = Json::array({f.h_b, f.a_b, f.b_b});
    jf["detail"] = f.detail;
    failures.push_back(std::move(jf));
  }
  doc["failures"] = std::move(failures);
  return dump(doc);
}

}  // namespace mubkit
