#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pi0/classify.hpp"
#include "pi0/counting.hpp"
#include "pi0/csv.hpp"
#include "pi0/density.hpp"
#include "pi0/envelope.hpp"

namespace pi0 {

using json = nlohmann::json;

// Exact values are serialized as decimal strings (they exceed double range);
// rationals additionally carry a float approximation for human readers.
inline json to_json(const BigInt& x) { return x.get_str(); }

inline json to_json(const BigRat& x) {
  return json{{"num", x.get_num().get_str()},
              {"den", x.get_den().get_str()},
              {"approx", x.get_d()}};
}

inline json to_json(const TensorSpec& spec) {
  json factors = json::array();
  for (const auto& f : spec.factors) factors.push_back({f.a, f.b, f.m});
  return factors;
}

inline json to_json(const DensityReport& rep) {
  json j{{"cutoff", rep.cutoff},
         {"tested", rep.tested},
         {"zeros", rep.zeros},
         {"skipped", rep.skipped},
         {"estimate", to_json(rep.estimate)},
         {"spec", to_json(rep.spec)}};
  j["expected"] = rep.expected ? to_json(*rep.expected) : json(nullptr);
  j["mod"] = rep.mod_ell ? json(*rep.mod_ell) : json(nullptr);
  return j;
}

inline json to_json(const ClassifyReport& rep) {
  json j{{"class", to_string(rep.cls)},
         {"ell", rep.ell},
         {"records", rep.records},
         {"trace_zero_fraction", rep.trace_zero_fraction},
         {"trace_zero_threshold", rep.trace_zero_threshold},
         {"disc_qr_fraction", rep.disc_qr_fraction},
         {"disc_qnr_fraction", rep.disc_qnr_fraction},
         {"disc_zero_fraction", rep.disc_zero_fraction}};
  j["pi0"] = rep.pi0 ? json(*rep.pi0) : json(nullptr);
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

inline json to_json(const NoriReport& rep) {
  json j{{"ell", rep.ell},
         {"n", rep.n},
         {"ell_element_count", rep.ell_element_count},
         {"lie_dimension", rep.lie_dimension},
         {"enumeration_complete", rep.enumeration_complete},
         {"sampled", rep.sampled},
         {"budget", rep.budget},
         {"seed", rep.seed}};
  j["group_order"] = rep.group_order ? to_json(*rep.group_order) : json(nullptr);
  j["plus_subgroup_order"] =
      rep.plus_subgroup_order ? to_json(*rep.plus_subgroup_order) : json(nullptr);
  j["envelope_guess"] = rep.envelope_guess ? json(rep.envelope_guess->name()) : json(nullptr);
  return j;
}

inline json to_json(const CountReport& rep) {
  json j{{"family", rep.family},
         {"ell", rep.ell},
         {"group_order", to_json(rep.group_order)},
         {"dimension", rep.dimension}};
  if (rep.gpbound_pass) {
    j["gpbound_pass"] = *rep.gpbound_pass;
    j["lower_margin"] = to_json(*rep.lower_margin);
    j["upper_margin"] = to_json(*rep.upper_margin);
  }
  if (rep.slice_count) {
    j["slice_count"] = to_json(*rep.slice_count);
    j["slice_ratio"] = to_json(*rep.slice_ratio);
    j["slice_scaled"] = to_json(*rep.slice_scaled);
  }
  return j;
}

inline json to_json(const std::vector<CountReport>& reps) {
  json rows = json::array();
  for (const auto& r : reps) rows.push_back(to_json(r));
  return rows;
}

inline json to_json(const ScalingStudy& st) {
  json j{{"rows", to_json(st.rows)}};
  j["max_ratio_times_ell"] = st.max_ratio_times_ell ? to_json(*st.max_ratio_times_ell) : json(nullptr);
  j["min_ratio"] = st.min_ratio ? to_json(*st.min_ratio) : json(nullptr);
  return j;
}

namespace detail {

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.insert(0, w - s.size(), ' ');
  return s;
}

}  // namespace detail

// Aligned-column text rendering of count reports.
inline std::string render_count_table(const std::vector<CountReport>& reps) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"family", "ell", "|G|", "dim", "bound", "|Z|", "|Z|/|G|", "|Z|/ell^(d-1)"});
  for (const auto& r : reps) {
    std::ostringstream ratio, scaled;
    if (r.slice_ratio) ratio << std::fixed << std::setprecision(6) << r.slice_ratio->get_d();
    if (r.slice_scaled) scaled << std::fixed << std::setprecision(4) << r.slice_scaled->get_d();
    cells.push_back({r.family, std::to_string(r.ell), r.group_order.get_str(),
                     std::to_string(r.dimension),
                     r.gpbound_pass ? (*r.gpbound_pass ? "pass" : "FAIL") : "-",
                     r.slice_count ? r.slice_count->get_str() : "-",
                     r.slice_ratio ? ratio.str() : "-", r.slice_scaled ? scaled.str() : "-"});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += detail::pad(row[c], width[c]);
    }
    out += "\n";
  }
  return out;
}

// Optional CSV of (ell, |G|, |Z|, ratio) for external plotting.
inline std::string count_reports_csv(const std::vector<CountReport>& reps) {
  std::string out = "ell,order,slice,ratio\n";
  for (const auto& r : reps) {
    out += std::to_string(r.ell) + "," + r.group_order.get_str() + ",";
    out += (r.slice_count ? r.slice_count->get_str() : "");
    out += ",";
    if (r.slice_ratio) {
      std::ostringstream os;
      os << std::setprecision(10) << r.slice_ratio->get_d();
      out += os.str();
    }
    out += "\n";
  }
  return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw io_error("cannot write '" + path + "'");
}

// Canonical JSON rendering: sorted keys (nlohmann objects are ordered maps),
// two-space indent, trailing newline — byte-stable across runs.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pi0
