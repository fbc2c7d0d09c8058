#pragma once

// JSON encoding for the command-line tool. Weights are small integer arrays;
// multiplicities, dimensions and coefficients are decimal strings so big
// values survive any parser. Objects are key-sorted, so dump() is canonical.

#include <string>
#include <vector>

#include <json.hpp>

#include "superbott/superbott.hpp"

namespace superbott::json_out {

using nlohmann::json;

inline std::string dim_string(SuperDim d) { return std::to_string(d.even) + "|" + std::to_string(d.odd); }

inline json character(const VirtualCharacter& c) {
  json terms = json::array();
  for (const auto& [key, mult] : c.terms()) {
    terms.push_back({{"w0", std::vector<int>(key.first.entries().begin(), key.first.entries().end())},
                     {"w1", std::vector<int>(key.second.entries().begin(), key.second.entries().end())},
                     {"mult", std::to_string(mult)},
                     {"dim", (weyl_dim(key.first) * weyl_dim(key.second)).str()}});
  }
  return {{"terms", terms}, {"total_dim", total_dim(c).str()}};
}

inline json graded(const GradedCharacter& g) {
  json degrees = json::array();
  for (const auto& [deg, c] : g.degrees()) {
    json entry = character(c);
    entry["degree"] = std::to_string(deg);
    degrees.push_back(std::move(entry));
  }
  return {{"degrees", degrees}, {"total_dim", total_dim(g).str()}};
}

inline json hilbert(const HilbertSeries& h) {
  json coeffs = json::array();
  for (const BigInt& c : h.coefficients()) coeffs.push_back(c.str());
  return {{"coefficients", coeffs}, {"text", to_string(h)}};
}

inline json e1(const E1Page& page) {
  json bigraded = json::array();
  for (const auto& [key, c] : page.bigraded) {
    json entry = character(c);
    entry["degree"] = std::to_string(key.first);
    entry["filtration"] = std::to_string(key.second);
    bigraded.push_back(std::move(entry));
  }
  return {{"total", graded(page.total)},
          {"bigraded", bigraded},
          {"terms", std::to_string(page.terms)},
          {"possibly_nondegenerate", page.possibly_nondegenerate()}};
}

inline json verify(const VerifyReport& r) {
  json diffs = json::array();
  for (const auto& [deg, c] : r.diffs) {
    json entry = character(c);
    entry["degree"] = std::to_string(deg);
    diffs.push_back(std::move(entry));
  }
  return {{"hypothesis", to_string(r.hypothesis)},
          {"e1", graded(r.e1)},
          {"expected", graded(r.expected)},
          {"diffs", diffs},
          {"ok", r.ok()}};
}

inline json error(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace superbott::json_out
