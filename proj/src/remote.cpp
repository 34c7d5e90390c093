#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "aqoci/samplers.hpp"

namespace aqoci {

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // base path without trailing slash
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.compare(0, scheme_end, "http") != 0)
    throw Error(ErrorKind::configuration, "remote endpoint must be an http:// URL: '" + url + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint out{url.substr(0, path_start), path_start == std::string::npos ? "" : url.substr(path_start)};
  while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  return out;
}

SampleSet parse_records(const QuboProblem& problem, const std::string& body) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::malformed_body, std::string("response is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array())
    throw Error(ErrorKind::malformed_body, "response lacks a records array");

  std::vector<SampleRecord> records;
  for (const auto& item : doc["records"]) {
    if (!item.is_object() || !item.contains("bits") || !item["bits"].is_string() ||
        !item.contains("energy") || !item["energy"].is_number())
      throw Error(ErrorKind::malformed_body, "record needs string 'bits' and numeric 'energy'");
    const auto bits = item["bits"].get<std::string>();
    if (bits.size() != problem.num_vars())
      throw Error(ErrorKind::malformed_body, "record has " + std::to_string(bits.size()) +
                                                 " bits, problem has " + std::to_string(problem.num_vars()));
    BitVector assignment(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1')
        throw Error(ErrorKind::malformed_body, "bits must contain only '0' and '1'");
      assignment[i] = bits[i] == '1';
    }
    std::uint64_t occurrences = 1;
    if (item.contains("occurrences")) {
      if (!item["occurrences"].is_number_unsigned() || item["occurrences"].get<std::uint64_t>() == 0)
        throw Error(ErrorKind::malformed_body, "occurrences must be a positive integer");
      occurrences = item["occurrences"].get<std::uint64_t>();
    }
    const double reported = item["energy"].get<double>();
    const double local = problem.energy(assignment);
    if (!(std::abs(reported - local) <= 1e-6))
      throw Error(ErrorKind::energy_mismatch, "reported energy " + std::to_string(reported) +
                                                  " differs from local " + std::to_string(local));
    records.push_back({std::move(assignment), local, occurrences});
  }
  if (records.empty()) throw Error(ErrorKind::malformed_body, "response has no records");
  return SampleSet::from_records(std::move(records), "remote");
}

}  // namespace

std::string resolve_token(const RemoteSolverConfig& config) {
  if (!config.auth_token.empty()) return config.auth_token;
  const char* env = std::getenv(kSolverTokenEnv);
  return env ? std::string(env) : std::string();
}

SampleSet remote_hybrid(const QuboProblem& problem, const RemoteSolverConfig& config) {
  if (!(config.timeout_seconds > 0.0)) throw Error(ErrorKind::configuration, "timeout must be positive");
  auto fallback = [&problem] {
    SampleSet local = simulated_annealing(problem, AnnealConfig{});
    return SampleSet::from_records(local.records(), "fallback");
  };
  if (config.endpoint.empty()) {
    if (config.offline_fallback) return fallback();
    throw Error(ErrorKind::configuration, "remote solver needs an endpoint or offline fallback");
  }
  const Endpoint endpoint = split_endpoint(config.endpoint);

  httplib::Client client(endpoint.origin);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(config.timeout_seconds));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  if (const auto token = resolve_token(config); !token.empty()) client.set_bearer_token_auth(token);

  auto response = client.Post(endpoint.path + "/solve", to_json(problem), "application/json");
  if (!response) {
    if (config.offline_fallback) return fallback();
    throw Error(ErrorKind::remote_http,
                "remote solver unreachable: " + httplib::to_string(response.error()));
  }
  if (response->status != 200)
    throw Error(ErrorKind::remote_http, "remote solver returned HTTP " + std::to_string(response->status));
  return parse_records(problem, response->body);
}

}  // namespace aqoci
