#pragma once

// Series file format: a JSON document
//   { "max_degree": N, "basis": "...", "degrees": [
//       { "degree": n, "terms": [ { "partition": [...],
//                                   "coeff": [ {"dL":..,"dc":..,"coeff":"p/q"} ] } ] } ] }
// Degrees ascending, partitions lexicographically descending, motive terms by
// (dL, dc) ascending.  Serialisation is byte-stable: the same series always
// produces the same bytes.

#include <jacgen/symseries.hpp>

#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace jacgen {

using ordered_json = nlohmann::ordered_json;

inline ordered_json motive_to_json(const Motive& m) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, coeff] : m.terms()) {
    ordered_json t;
    t["dL"] = key.first;
    t["dc"] = key.second;
    t["coeff"] = format_fraction(coeff);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Motive motive_from_json(const ordered_json& j) {
  Motive m;
  for (const auto& t : j)
    m.add_term(t.at("dL").get<int>(), t.at("dc").get<int>(),
               parse_fraction(t.at("coeff").get<std::string>()));
  return m;
}

inline ordered_json series_to_json(const SymSeries& s,
                                   Basis basis = Basis::powersum,
                                   bool assert_integral = false) {
  ordered_json doc;
  doc["max_degree"] = s.max_degree();
  doc["basis"] = basis_name(basis);
  ordered_json degrees = ordered_json::array();

  BasisExpansion terms = change_basis(s, basis, assert_integral);
  int current = -1;
  ordered_json* bucket = nullptr;
  for (const auto& [lam, coeff] : terms) {
    int n = partition_size(lam);
    if (n != current) {
      ordered_json d;
      d["degree"] = n;
      d["terms"] = ordered_json::array();
      degrees.push_back(std::move(d));
      bucket = &degrees.back()["terms"];
      current = n;
    }
    ordered_json t;
    t["partition"] = lam;
    t["coeff"] = motive_to_json(coeff);
    bucket->push_back(std::move(t));
  }
  doc["degrees"] = std::move(degrees);
  return doc;
}

inline std::string serialize_series(const SymSeries& s,
                                    Basis basis = Basis::powersum,
                                    bool assert_integral = false) {
  return series_to_json(s, basis, assert_integral).dump(1) + "\n";
}

inline SymSeries series_from_json(const ordered_json& doc) {
  int N = doc.at("max_degree").get<int>();
  std::string bname = doc.at("basis").get<std::string>();
  Basis basis;
  if (bname == "powersum")
    basis = Basis::powersum;
  else if (bname == "schur")
    basis = Basis::schur;
  else if (bname == "homogeneous")
    basis = Basis::homogeneous;
  else
    throw std::invalid_argument("unknown basis tag: " + bname);

  BasisExpansion terms;
  for (const auto& d : doc.at("degrees"))
    for (const auto& t : d.at("terms"))
      terms.emplace_back(t.at("partition").get<Partition>(),
                         motive_from_json(t.at("coeff")));
  return from_basis(terms, basis, N);
}

inline SymSeries parse_series(const std::string& text) {
  return series_from_json(ordered_json::parse(text));
}

// Write-temp-then-rename so concurrent readers never observe partial files.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jacgen
