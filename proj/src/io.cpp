#include "vietoris/io.hpp"

#include <fstream>
#include <sstream>

namespace vietoris {
namespace {

bool has_float_entry(const Json& dist) {
  for (const auto& row : dist)
    for (const auto& v : row)
      if (v.is_number_float()) return true;
  return false;
}

template <Scalar T>
SpacePtr<T> build_space(const Json& doc) {
  const auto& points = doc.at("points");
  const auto& dist = doc.at("dist");
  if (!points.is_array() || !dist.is_array()) throw InputError("space: 'points' and 'dist' must be arrays");
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  const auto n = static_cast<Eigen::Index>(labels.size());
  if (static_cast<Eigen::Index>(dist.size()) != n) throw InputError("space: 'dist' must have one row per point");
  typename MetricSpace<T>::Matrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = dist[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw InputError("space: row " + std::to_string(i) + " of 'dist' has the wrong length");
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = parse_scalar<T>(row[static_cast<std::size_t>(j)]);
  }
  return make_space<T>(std::move(labels), std::move(d));
}

template <Scalar T>
PointId lookup(const MetricSpace<T>& space, const Json& label) {
  const std::string key = label.is_string() ? label.get<std::string>() : label.dump();
  auto id = space.index_of(key);
  if (!id) throw InputError("unknown point '" + key + "'");
  return *id;
}

}  // namespace

template <>
Rational parse_scalar<Rational>(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.dump());
  // Shortest round-trip decimal of a JSON float, read exactly.
  if (value.is_number_float()) return parse_rational(value.dump());
  throw InputError("expected a number or rational string, got " + value.dump());
}

template <>
double parse_scalar<double>(const Json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_rational(value.get<std::string>()).convert_to<double>();
  throw InputError("expected a number or rational string, got " + value.dump());
}

AnySpace parse_space(const Json& doc, bool force_double) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("dist"))
    throw InputError("space: expected an object with 'points' and 'dist'");
  if (force_double || has_float_entry(doc.at("dist"))) return build_space<double>(doc);
  return build_space<Rational>(doc);
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

AnySpace load_space(const std::filesystem::path& path, bool force_double) {
  return parse_space(read_json(path), force_double);
}

template <Scalar T>
Json space_to_json(const MetricSpace<T>& space) {
  Json dist = Json::array();
  for (PointId i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (PointId j = 0; j < space.size(); ++j) row.push_back(scalar_json(space.distance(i, j)));
    dist.push_back(std::move(row));
  }
  return Json{{"points", space.labels()}, {"dist", std::move(dist)}};
}

template <Scalar T>
Measure<T> parse_measure(const Json& doc, const SpacePtr<T>& space) {
  if (!doc.is_object() || !doc.contains("mass") || !doc.at("mass").is_object())
    throw InputError("measure: expected {\"mass\": {...}}");
  std::map<PointId, T> masses;
  for (const auto& [label, value] : doc.at("mass").items()) masses[lookup(*space, Json(label))] += parse_scalar<T>(value);
  return Measure<T>(space, std::move(masses));
}

template <Scalar T>
Json measure_to_json(const Measure<T>& mu) {
  Json mass = Json::object();
  for (const auto& [x, m] : mu.masses()) mass[mu.space().label(x)] = scalar_json(m);
  return Json{{"mass", std::move(mass)}};
}

template <Scalar T>
Cover<T> parse_cover(const Json& doc, const SpacePtr<T>& space) {
  if (!doc.contains("sets") || !doc.at("sets").is_object()) throw InputError("cover: expected a 'sets' object");
  std::vector<std::string> names;
  std::vector<PointSet> sets;
  for (const auto& [name, members] : doc.at("sets").items()) {
    if (!members.is_array()) throw InputError("cover: set '" + name + "' must be an array of point labels");
    std::vector<PointId> ids;
    for (const auto& label : members) ids.push_back(lookup(*space, label));
    names.push_back(name);
    sets.emplace_back(std::move(ids));
  }
  T bound;
  if (doc.contains("bound")) {
    bound = parse_scalar<T>(doc.at("bound"));
  } else {
    bound = T(0);
    for (const auto& s : sets)
      if (!s.empty()) bound = max_of(bound, *diameter(*space, s));
    bound += T(1);
  }
  return Cover<T>(space, std::move(sets), std::move(bound), std::move(names));
}

AnyCover parse_cover_document(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("space")) throw InputError("cover: expected an object with 'space'");
  const Json& entry = doc.at("space");
  AnySpace space = entry.is_string() ? load_space(base_dir / entry.get<std::string>()) : parse_space(entry);
  return std::visit([&](const auto& s) -> AnyCover { return parse_cover(doc, s); }, space);
}

AnyCover load_cover(const std::filesystem::path& path) {
  return parse_cover_document(read_json(path), path.parent_path());
}

Json complex_to_json(const SimplicialComplex& k) {
  auto name = [&](std::size_t v) { return k.labels().empty() ? std::to_string(v) : k.labels()[v]; };
  Json vertices = Json::array();
  for (std::size_t v = 0; v < k.num_vertices(); ++v) vertices.push_back(name(v));
  Json simplices = Json::array();
  for (const auto& s : k.maximal_simplices()) {
    Json row = Json::array();
    for (std::size_t v : s) row.push_back(name(v));
    simplices.push_back(std::move(row));
  }
  return Json{{"vertices", std::move(vertices)}, {"simplices", std::move(simplices)}};
}

Json betti_to_json(const BettiVector& b) { return Json{{"betti", b.betti}}; }

std::string scalar_text(const Rational& v) { return to_string(v); }
std::string scalar_text(double v) { return to_string(v); }
Json scalar_json(const Rational& v) { return to_string(v); }
Json scalar_json(double v) { return v; }

template Json space_to_json(const MetricSpace<Rational>&);
template Json space_to_json(const MetricSpace<double>&);
template Measure<Rational> parse_measure(const Json&, const SpacePtr<Rational>&);
template Measure<double> parse_measure(const Json&, const SpacePtr<double>&);
template Json measure_to_json(const Measure<Rational>&);
template Json measure_to_json(const Measure<double>&);
template Cover<Rational> parse_cover(const Json&, const SpacePtr<Rational>&);
template Cover<double> parse_cover(const Json&, const SpacePtr<double>&);

}  // namespace vietoris
