#include <fstream>
#include <sstream>

#include <json.hpp>

#include "circulant/graph.hpp"

namespace circulant {

namespace {

MetricGraph from_json(const nlohmann::json& j) {
  require(j.is_object(), errc::schema_error, "graph spec must be a JSON object");
  require(j.contains("n") && j["n"].is_number_integer(), errc::schema_error,
          "missing integer field \"n\"");
  require(j.contains("a") && j["a"].is_array(), errc::schema_error,
          "missing array field \"a\"");
  std::vector<int> jumps;
  for (const auto& x : j["a"]) {
    require(x.is_number_integer(), errc::schema_error, "\"a\" must contain integers");
    jumps.push_back(x.get<int>());
  }
  CirculantSpec spec;
  try {
    spec = validate_spec(j["n"].get<int>(), std::move(jumps));
  } catch (const Error& e) {
    fail(errc::schema_error, e.what());
  }

  require(j.contains("metric") && j["metric"].is_object(), errc::schema_error,
          "missing object field \"metric\"");
  const auto& m = j["metric"];
  require(m.size() == 1, errc::schema_error,
          "\"metric\" must hold exactly one of symmetric/generic/random_uniform");

  auto lengths = [](const nlohmann::json& arr) {
    std::vector<double> out;
    for (const auto& x : arr) {
      require(x.is_number(), errc::schema_error, "lengths must be numbers");
      out.push_back(x.get<double>());
    }
    return out;
  };

  try {
    if (m.contains("symmetric")) {
      require(m["symmetric"].is_array(), errc::schema_error, "\"symmetric\" must be an array");
      return MetricGraph(spec, SymmetricMetric{lengths(m["symmetric"])});
    }
    if (m.contains("generic")) {
      require(m["generic"].is_array(), errc::schema_error, "\"generic\" must be an array");
      return MetricGraph(spec, GenericMetric{lengths(m["generic"])});
    }
    if (m.contains("random_uniform")) {
      const auto& r = m["random_uniform"];
      require(r.is_object() && r.contains("lo") && r.contains("hi") && r.contains("seed"),
              errc::schema_error, "\"random_uniform\" needs lo, hi, seed");
      const double lo = r["lo"].get<double>();
      const double hi = r["hi"].get<double>();
      const auto seed = r["seed"].get<std::uint64_t>();
      const bool per_class = r.value("per_class", false);
      return per_class ? with_random_class_lengths(spec, lo, hi, seed)
                       : with_random_lengths(spec, lo, hi, seed);
    }
  } catch (const Error& e) {
    if (e.code() == errc::schema_error) throw;
    fail(errc::schema_error, e.what());
  }
  fail(errc::schema_error, "unknown metric kind");
}

}  // namespace

MetricGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::schema_error, std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

MetricGraph load_graph_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::file_not_found, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

}  // namespace circulant
