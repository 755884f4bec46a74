#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "adorn/coset_table.hpp"
#include "adorn/engine.hpp"
#include "adorn/ints.hpp"
#include "adorn/laurent.hpp"
#include "adorn/presentation.hpp"
#include "adorn/smith.hpp"
#include "adorn/verdict.hpp"

namespace adorn {

using nlohmann::json;

/// Integers that fit in 64 bits stay numbers; anything wider becomes a
/// decimal string so output never loses precision.
inline json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

/// Accepts numbers or decimal strings.
inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("matrix entry must be an integer or a decimal string");
}

/// Array-of-arrays of integers; [] is the 0 x 0 matrix.
inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix literal must be a JSON array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols)
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j.at(i).at(c));
  }
  return m;
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const AbelianGroupData& a) {
  json torsion = json::array();
  for (const Int& t : a.torsion) torsion.push_back(int_to_json(t));
  return json{{"rank", a.rank}, {"torsion", torsion}, {"pretty", a.to_string()}};
}

inline json to_json(const SmithForm& s) {
  json diag = json::array();
  for (const Int& d : s.diag) diag.push_back(int_to_json(d));
  return json{{"diag", diag},
              {"rows", s.rows},
              {"cols", s.cols},
              {"left", matrix_to_json(s.left)},
              {"right", matrix_to_json(s.right)}};
}

/// {"coeffs": {"2": 1, "1": -1, "0": 1}} plus the pretty form.
inline json to_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.coefficients()) coeffs[std::to_string(e)] = int_to_json(c);
  return json{{"coeffs", coeffs}, {"pretty", p.to_string()}};
}

inline json to_json(const DerivedStep& s) {
  return json{{"depth", s.depth},
              {"presentation", to_text(s.presentation)},
              {"generators", s.presentation.generator_count()},
              {"relators", s.presentation.relators().size()},
              {"quotient", to_json(s.quotient)},
              {"coset_index", int_to_json(s.coset_index)}};
}

inline json to_json(const Verdict& v) {
  json out;
  out["kind"] = verdict_kind(v);
  if (const auto* a = std::get_if<Adorable>(&v)) {
    out["doa"] = a->doa;
    if (!a->certificate.empty()) out["certificate"] = a->certificate;
    json trace = json::array();
    for (const DerivedStep& s : a->trace) trace.push_back(to_json(s));
    out["trace"] = std::move(trace);
  } else if (const auto* n = std::get_if<NotAdorable>(&v)) {
    out["reason"] = reason_name(n->reason);
    out["evidence"] = n->evidence;
  } else if (const auto* u = std::get_if<Unknown>(&v)) {
    out["depth_reached"] = u->depth_reached;
    out["stall"] = stall_name(u->stall);
  }
  return out;
}

/// {"index": k, "action": [[...]], "subgroup": "commutator" | [words]}
/// Row c of "action" lists the images of coset c under g0, g0^-1, g1, ...
inline json to_json(const CosetTable& t) {
  json action = json::array();
  const std::size_t g = t.base().generator_count();
  for (std::uint32_t c = 0; c < t.index(); ++c) {
    json row = json::array();
    for (std::size_t j = 0; j < g; ++j) {
      row.push_back(t.act(c, static_cast<int>(j), false));
      row.push_back(t.act(c, static_cast<int>(j), true));
    }
    action.push_back(std::move(row));
  }
  json subgroup;
  if (t.is_commutator_subgroup()) {
    subgroup = "commutator";
  } else {
    subgroup = json::array();
    for (const Word& w : std::get<std::vector<Word>>(t.subgroup()))
      subgroup.push_back(to_text(w, t.base().generators()));
  }
  return json{{"index", t.index()}, {"action", action}, {"subgroup", subgroup}};
}

inline json to_json(const ProbeReport& r) {
  json counts = json::object();
  for (const auto& [key, value] : r.verdict_counts) counts[key] = value;
  return json{{"samples", r.samples},
              {"verdicts", counts},
              {"depth_histogram", r.depth_histogram},
              {"max_quotient_order", int_to_json(r.max_quotient_order)},
              {"seed", r.seed}};
}

}  // namespace adorn
