#include <charconv>
#include <string>

#include <json.hpp>

#include "aqoci/qubo.hpp"

namespace aqoci {

using nlohmann::json;

namespace {

std::size_t parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorKind::parse, "bad variable index '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string to_json(const QuboProblem& problem) {
  json linear = json::object();
  for (const auto& [i, c] : problem.linear()) linear[std::to_string(i)] = c;
  json quadratic = json::object();
  for (const auto& [ij, c] : problem.quadratic())
    quadratic[std::to_string(ij.first) + "," + std::to_string(ij.second)] = c;
  json doc = {{"num_vars", problem.num_vars()},
              {"linear", std::move(linear)},
              {"quadratic", std::move(quadratic)},
              {"constant", problem.constant()}};
  return doc.dump();
}

QuboProblem qubo_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("QUBO JSON: ") + e.what());
  }
  try {
    QuboProblem problem(doc.at("num_vars").get<std::size_t>());
    const json linear = doc.value("linear", json::object());
    const json quadratic = doc.value("quadratic", json::object());
    for (const auto& [key, value] : linear.items())
      problem.add_linear(parse_index(key), value.get<double>());
    for (const auto& [key, value] : quadratic.items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::parse, "bad pair key '" + key + "'");
      const std::string_view view(key);
      problem.add_quadratic(parse_index(view.substr(0, comma)), parse_index(view.substr(comma + 1)),
                            value.get<double>());
    }
    problem.add_constant(doc.value("constant", 0.0));
    return problem;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("QUBO JSON: ") + e.what());
  }
}

}  // namespace aqoci
