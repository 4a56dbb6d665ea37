#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvv/arrangement.hpp"
#include "mvv/camera.hpp"
#include "mvv/errors.hpp"
#include "mvv/subspace.hpp"
#include "mvv/triangulation.hpp"
#include "mvv/version.hpp"

namespace mvv {

using nlohmann::json;

// All numbers cross the file boundary as exact rational strings "a/b"
// (b > 0, reduced); nothing is ever rounded. nlohmann::json keeps object
// keys sorted, so serialization is byte-stable for a fixed input.

inline json matrix_to_json(const matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline matrix matrix_from_json(const json& rows, std::size_t expected_cols,
                               const std::string& what) {
  if (!rows.is_array()) throw parse_error(what + ": expected an array of rows");
  matrix m(rows.size(), expected_cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != expected_cols)
      throw parse_error(what + ": row " + std::to_string(r + 1) + " must have " +
                        std::to_string(expected_cols) + " entries");
    for (std::size_t c = 0; c < expected_cols; ++c) {
      if (!row[c].is_string())
        throw parse_error(what + ": entry (" + std::to_string(r + 1) + "," +
                          std::to_string(c + 1) + ") must be a rational string \"a/b\"");
      m(r, c) = rational_from_string(row[c].get<std::string>());
    }
  }
  return m;
}

inline json subspace_to_json(const subspace& s) {
  return json{{"N", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

inline subspace subspace_from_json(const json& j, const std::string& what = "subspace") {
  if (!j.is_object() || !j.contains("N") || !j.contains("basis"))
    throw parse_error(what + ": expected {\"N\": int, \"basis\": [[\"a/b\",...],...]}");
  const int ambient = j.at("N").get<int>();
  if (ambient < 0) throw parse_error(what + ": N must be nonnegative");
  matrix rows = matrix_from_json(j.at("basis"), static_cast<std::size_t>(ambient) + 1, what);
  return subspace::span_rows(ambient, rows);
}

inline json camera_to_json(const camera_matrix& c) {
  return json{{"h", c.image_dim()}, {"N", c.world_dim()}, {"matrix", matrix_to_json(c.entries())}};
}

inline camera_matrix camera_from_json(const json& j, const std::string& what = "camera") {
  if (!j.is_object() || !j.contains("h") || !j.contains("N") || !j.contains("matrix"))
    throw parse_error(what + ": expected {\"h\": int, \"N\": int, \"matrix\": [[...]]}");
  const int h = j.at("h").get<int>();
  const int ambient = j.at("N").get<int>();
  if (h < 0 || ambient < 0) throw parse_error(what + ": dimensions must be nonnegative");
  matrix m = matrix_from_json(j.at("matrix"), static_cast<std::size_t>(ambient) + 1, what);
  if (m.rows() != static_cast<std::size_t>(h) + 1)
    throw parse_error(what + ": matrix must have h+1 rows");
  return camera_matrix(ambient, m);
}

inline json arrangement_to_json(const center_arrangement& arr, bool with_lattice = true) {
  json centers = json::array();
  for (const subspace& c : arr.centers()) centers.push_back(subspace_to_json(c));
  json out{{"N", arr.ambient_dim()}, {"centers", std::move(centers)}};
  if (arr.generic_hint()) out["generic"] = true;
  if (with_lattice) {
    json lattice = json::object();
    const std::uint32_t full = (1u << arr.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::string key;
      for (int i = 0; i < arr.size(); ++i)
        if (mask & (1u << i)) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
      lattice[key] = arr.lattice_dim(mask);
    }
    out["lattice"] = std::move(lattice);
  }
  return out;
}

inline center_arrangement arrangement_from_json(const json& j,
                                                const std::string& what = "arrangement") {
  if (!j.is_object() || !j.contains("N") || !j.contains("centers"))
    throw parse_error(what + ": expected {\"N\": int, \"centers\": [subspace,...]}");
  const int ambient = j.at("N").get<int>();
  const json& centers = j.at("centers");
  if (!centers.is_array() || centers.empty())
    throw parse_error(what + ": centers must be a nonempty array");
  std::vector<subspace> list;
  list.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i)
    list.push_back(subspace_from_json(centers[i], what + ": center " + std::to_string(i + 1)));
  const bool generic = j.value("generic", false);
  return center_arrangement(ambient, std::move(list), generic);
}

inline json scene_to_json(const scene& sc) {
  json cameras = json::array();
  for (const camera_matrix& c : sc.cameras()) cameras.push_back(camera_to_json(c));
  return json{{"N", sc.world_dim()}, {"k", sc.k()}, {"cameras", std::move(cameras)}};
}

inline scene scene_from_json(const json& j, const std::string& what = "scene") {
  if (!j.is_object() || !j.contains("N") || !j.contains("k") || !j.contains("cameras"))
    throw parse_error(what + ": expected {\"N\": int, \"k\": int, \"cameras\": [camera,...]}");
  const json& cams = j.at("cameras");
  if (!cams.is_array() || cams.empty()) throw parse_error(what + ": cameras must be nonempty");
  std::vector<camera_matrix> cameras;
  cameras.reserve(cams.size());
  for (std::size_t i = 0; i < cams.size(); ++i)
    cameras.push_back(camera_from_json(cams[i], what + ": camera " + std::to_string(i + 1)));
  return scene(j.at("N").get<int>(), j.at("k").get<int>(), std::move(cameras));
}

inline json tuple_to_json(const image_tuple& t) {
  json planes = json::array();
  for (const image_plane& p : t.planes) planes.push_back(subspace_to_json(p.plane));
  return json{{"planes", std::move(planes)}};
}

inline image_tuple tuple_from_json(const json& j, const std::string& what = "tuple") {
  if (!j.is_object() || !j.contains("planes"))
    throw parse_error(what + ": expected {\"planes\": [subspace,...]}");
  const json& planes = j.at("planes");
  if (!planes.is_array() || planes.empty()) throw parse_error(what + ": planes must be nonempty");
  image_tuple out;
  out.planes.reserve(planes.size());
  for (std::size_t i = 0; i < planes.size(); ++i)
    out.planes.push_back(
        image_plane{subspace_from_json(planes[i], what + ": plane " + std::to_string(i + 1))});
  return out;
}

inline json partition_to_json(const set_partition& p) {
  json blocks = json::array();
  for (std::uint32_t mask : p.blocks) {
    json block = json::array();
    for (int i = 0; i < 32; ++i)
      if (mask & (1u << i)) block.push_back(i + 1);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline json index_set_to_json(std::uint32_t mask) {
  json out = json::array();
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

inline json options_to_json(const analysis_options& opt) {
  return json{{"seed", opt.seed},
              {"trials", opt.trials},
              {"caps", json{{"partition", opt.partition_cap}, {"feasibility", opt.feasibility_cap}}},
              {"entry_bound", opt.entry_bound},
              {"assume_generic", opt.assume_generic},
              {"artifact_version", version_string}};
}

inline const char* to_string(tristate t) {
  switch (t) {
    case tristate::yes: return "yes";
    case tristate::no: return "no";
    case tristate::unknown: return "unknown";
  }
  return "unknown";
}

inline json report_to_json(const analysis_report& rep) {
  json out;
  out["meta"] = options_to_json(rep.options);
  out["N"] = rep.ambient;
  out["n"] = rep.views;
  out["k"] = rep.k;
  out["ell"] = rep.ell;
  out["ell_witness"] = partition_to_json(rep.ell_witness);
  out["ell_sampled"] = rep.ell_sampled_value;
  out["dim_multiview"] = rep.dim_variety;
  out["dim_product"] = rep.dim_product;
  if (rep.has_feasibility) {
    out["feasibility"] = json{{"h_max", rep.feasibility.h_max}, {"witness", rep.feasibility.witness}};
  } else {
    out["feasibility"] = nullptr;
  }
  out["pseudo_disjoint"] = rep.pseudo_disjoint;
  out["pseudo_disjoint_violation"] =
      rep.pseudo_disjoint ? json(nullptr) : index_set_to_json(rep.pd_violating);
  out["triangulable"] = rep.triangulable;
  out["proper"] = rep.proper;
  out["tau"] = rep.tau_value;
  out["upsilon"] = json{{"value", rep.upsilon_result.value},
                        {"method", rep.upsilon_result.method == upsilon_method::exact_generic
                                       ? "exact-generic"
                                       : "lower-bound"}};
  out["super_triangulable"] = to_string(rep.super_triangulable);
  out["consistent"] = rep.consistent;
  out["inconsistencies"] = rep.inconsistencies;
  return out;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mvv
