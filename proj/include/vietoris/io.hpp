#pragma once

#include "vietoris/complexes.hpp"
#include "vietoris/homology.hpp"
#include "vietoris/transport.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace vietoris {

using Json = nlohmann::ordered_json;

/// A space loaded from JSON: exact when every distance is an integer or a
/// rational string, double as soon as one entry is a JSON floating-point number.
using AnySpace = std::variant<SpacePtr<Rational>, SpacePtr<double>>;

template <Scalar T>
T parse_scalar(const Json& value);

template <>
Rational parse_scalar<Rational>(const Json& value);
template <>
double parse_scalar<double>(const Json& value);

/// {"points": [...], "dist": [[...], ...]}; validates the metric axioms.
AnySpace parse_space(const Json& doc, bool force_double = false);
Json read_json(const std::filesystem::path& path);
AnySpace load_space(const std::filesystem::path& path, bool force_double = false);

template <Scalar T>
Json space_to_json(const MetricSpace<T>& space);

/// {"mass": {"a": "1/3", ...}} against a known space.
template <Scalar T>
Measure<T> parse_measure(const Json& doc, const SpacePtr<T>& space);

template <Scalar T>
Json measure_to_json(const Measure<T>& mu);

/// {"space": <inline object or path>, "sets": {"U1": ["a", ...]}, "bound": "D"}.
/// A missing bound defaults to the largest set diameter plus one.
template <Scalar T>
Cover<T> parse_cover(const Json& doc, const SpacePtr<T>& space);

using AnyCover = std::variant<Cover<Rational>, Cover<double>>;

/// Resolves the "space" entry (relative paths against `base_dir`) and parses the cover.
AnyCover parse_cover_document(const Json& doc, const std::filesystem::path& base_dir = {});
AnyCover load_cover(const std::filesystem::path& path);

/// Maximal simplices only, by label: {"vertices": [...], "simplices": [[...], ...]}.
Json complex_to_json(const SimplicialComplex& k);
Json betti_to_json(const BettiVector& b);

std::string scalar_text(const Rational& v);
std::string scalar_text(double v);
Json scalar_json(const Rational& v);
Json scalar_json(double v);

/// "dim,birth,death" with "inf" for infinite deaths; zero-length bars omitted.
template <Scalar T>
std::string barcode_csv(const PersistenceDiagram<T>& diagram) {
  std::string out = "dim,birth,death\n";
  for (const auto& b : diagram.bars) {
    if (b.zero_length()) continue;
    out += std::to_string(b.dim) + "," + scalar_text(b.birth) + "," + (b.death ? scalar_text(*b.death) : "inf") + "\n";
  }
  return out;
}

template <Scalar T>
Json coupling_to_json(const PartialCoupling<T>& c) {
  Json triples = Json::array();
  const auto& space = c.source().space();
  for (const auto& [cell, v] : c.entries())
    triples.push_back(Json::array({space.label(cell.first), space.label(cell.second), scalar_json(v)}));
  return triples;
}

}  // namespace vietoris
