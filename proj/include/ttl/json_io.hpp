#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "ttl/clique_cover.hpp"
#include "ttl/colored.hpp"
#include "ttl/complex.hpp"
#include "ttl/thrackle.hpp"
#include "ttl/tverberg.hpp"

namespace ttl {

// Insertion-ordered JSON keeps every serialization byte-stable.
using Json = nlohmann::ordered_json;

inline Rat rat_from_json(const Json& value) {
  if (value.is_number_integer()) return Rat(Int(value.get<long long>()));
  if (value.is_string()) return rat_from_string(value.get<std::string>());
  throw InvalidInput("coordinate must be a rational string or an integer");
}

inline Json coords_to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& c : p) arr.push_back(rat_to_string(c));
  return arr;
}

inline Point coords_from_json(const Json& arr) {
  if (!arr.is_array()) throw InvalidInput("coordinates must be an array");
  Point p;
  for (const auto& c : arr) p.push_back(rat_from_json(c));
  return p;
}

inline Json config_to_json(const PointConfiguration& config) {
  Json out;
  out["dim"] = config.dim;
  Json points = Json::array();
  for (const auto& p : config.points) {
    Json jp;
    jp["id"] = p.id;
    jp["coords"] = coords_to_json(p.coords);
    if (p.color) jp["color"] = *p.color;
    points.push_back(std::move(jp));
  }
  out["points"] = std::move(points);
  return out;
}

inline PointConfiguration config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw InvalidInput("point configuration needs \"dim\" and \"points\"");
  PointConfiguration config;
  config.dim = j.at("dim").get<int>();
  for (const auto& jp : j.at("points")) {
    ConfigPoint p;
    p.id = jp.at("id").get<std::string>();
    p.coords = coords_from_json(jp.at("coords"));
    if (jp.contains("color")) p.color = jp.at("color").get<int>();
    config.points.push_back(std::move(p));
  }
  config.validate();
  return config;
}

// Classes are the color values 0..max, each of which must be inhabited.
inline ColoredConfiguration colored_from_config(const PointConfiguration& config, int r, int k) {
  ColoredConfiguration colored;
  colored.dim = config.dim;
  colored.r = r;
  colored.k = k;
  int max_color = -1;
  for (const auto& p : config.points) {
    if (!p.color) throw InvalidInput("point " + p.id + " has no color");
    if (*p.color < 0) throw InvalidInput("point " + p.id + " has a negative color");
    max_color = std::max(max_color, *p.color);
  }
  if (max_color < 0) throw InvalidInput("colored configuration has no points");
  colored.classes.resize(static_cast<std::size_t>(max_color) + 1);
  for (const auto& p : config.points)
    colored.classes[static_cast<std::size_t>(*p.color)].push_back(p.coords);
  for (std::size_t j = 0; j < colored.classes.size(); ++j)
    if (colored.classes[j].empty())
      throw InvalidInput("color class " + std::to_string(j) + " is empty");
  return colored;
}

inline Json partition_to_json(const IndexPartition& partition) {
  Json blocks = Json::array();
  for (const auto& block : partition) {
    Json jb = Json::array();
    for (std::size_t i : block) jb.push_back(i + 1);  // 1-based point indices
    blocks.push_back(std::move(jb));
  }
  return blocks;
}

inline IndexPartition partition_from_json(const Json& j) {
  IndexPartition partition;
  for (const auto& jb : j) {
    std::vector<std::size_t> block;
    for (const auto& idx : jb) {
      long long v = idx.get<long long>();
      if (v < 1) throw InvalidInput("partition point indices are 1-based");
      block.push_back(static_cast<std::size_t>(v - 1));
    }
    partition.push_back(std::move(block));
  }
  return partition;
}

inline Json certificate_to_json(const WitnessCertificate& cert) {
  Json out;
  out["kind"] = "no-partition";
  out["config"] = config_to_json(cert.config);
  out["r"] = cert.r;
  out["k"] = cert.k;
  Json entries = Json::array();
  for (const auto& entry : cert.entries) {
    Json je;
    je["partition"] = partition_to_json(entry.partition);
    Json sub = Json::array();
    for (std::size_t b : entry.empty_subfamily) sub.push_back(b);  // 0-based blocks
    je["empty_subfamily"] = std::move(sub);
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  return out;
}

inline WitnessCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "no-partition")
    throw InvalidInput("certificate needs \"kind\": \"no-partition\"");
  WitnessCertificate cert;
  cert.config = config_from_json(j.at("config"));
  cert.r = j.at("r").get<int>();
  cert.k = j.at("k").get<int>();
  for (const auto& je : j.at("entries")) {
    CertificateEntry entry;
    entry.partition = partition_from_json(je.at("partition"));
    for (const auto& b : je.at("empty_subfamily"))
      entry.empty_subfamily.push_back(b.get<std::size_t>());
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

inline Json partition_witness_to_json(const PartitionWitness& witness) {
  Json out;
  out["kind"] = "partition";
  out["partition"] = partition_to_json(witness.partition);
  Json ws = Json::array();
  for (const auto& w : witness.witnesses) {
    Json jw;
    Json sub = Json::array();
    for (std::size_t b : w.subfamily) sub.push_back(b);
    jw["subfamily"] = std::move(sub);
    jw["point"] = coords_to_json(w.point);
    ws.push_back(std::move(jw));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

inline Json thrackle_to_json(const ThrackleInstance& instance) {
  Json out;
  out["dim"] = instance.dim;
  Json w = Json::array();
  for (const auto& p : instance.W.points) {
    Json jp;
    jp["id"] = p.id;
    jp["coords"] = coords_to_json(p.coords);
    w.push_back(std::move(jp));
  }
  out["W"] = std::move(w);
  out["V"] = instance.V;
  out["bodies"] = instance.bodies;
  return out;
}

inline ThrackleInstance thrackle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("W") || !j.contains("V") || !j.contains("bodies"))
    throw InvalidInput("thrackle instance needs \"dim\", \"W\", \"V\", \"bodies\"");
  ThrackleInstance instance;
  instance.dim = j.at("dim").get<int>();
  instance.W.dim = instance.dim;
  for (const auto& jp : j.at("W")) {
    ConfigPoint p;
    p.id = jp.at("id").get<std::string>();
    p.coords = coords_from_json(jp.at("coords"));
    instance.W.points.push_back(std::move(p));
  }
  instance.V = j.at("V").get<std::vector<std::string>>();
  instance.bodies = j.at("bodies").get<std::vector<std::vector<std::string>>>();
  validate_thrackle(instance);
  return instance;
}

inline Json abstract_to_json(const AbstractThrackle& input) {
  Json out;
  out["sets"] = input.sets;
  out["W"] = input.W;
  return out;
}

inline AbstractThrackle abstract_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sets") || !j.contains("W"))
    throw InvalidInput("abstract input needs \"sets\" and \"W\"");
  AbstractThrackle input;
  input.sets = j.at("sets").get<std::vector<std::vector<std::string>>>();
  input.W = j.at("W").get<std::vector<std::string>>();
  return input;
}

inline Json complex_to_json(const PureComplex& K, const AffineRealization& realization) {
  Json out;
  out["dim"] = K.dim;
  out["facets"] = K.facets;
  Json real = Json::object();
  for (const auto& [id, coords] : realization) real[id] = coords_to_json(coords);
  out["realization"] = std::move(real);
  return out;
}

inline std::pair<PureComplex, AffineRealization> complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("facets"))
    throw InvalidInput("complex needs \"dim\" and \"facets\"");
  PureComplex K;
  K.dim = j.at("dim").get<int>();
  K.facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
  validate_complex(K);
  AffineRealization realization;
  if (j.contains("realization"))
    for (const auto& [id, coords] : j.at("realization").items())
      realization[id] = coords_from_json(coords);
  return {std::move(K), std::move(realization)};
}

inline std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << json_to_text(j);
}

}  // namespace ttl
