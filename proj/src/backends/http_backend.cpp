#include "dac/backends/http_backend.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <thread>

#include "dac/error.hpp"

namespace dac::backends {

std::chrono::milliseconds RetryPolicy::delay_before(int retry) const {
  const double scaled = static_cast<double>(initial_delay.count()) *
                        std::pow(backoff_factor, std::max(0, retry - 1));
  const double capped = std::min(scaled, static_cast<double>(max_delay.count()));
  return std::chrono::milliseconds(static_cast<long long>(capped));
}

HttpBackend::HttpBackend(HttpBackendOptions options) : options_(std::move(options)) {
  if (options_.retry.max_attempts < 1) {
    throw ConfigError("retry.max_attempts must be at least 1");
  }
}

std::string HttpBackend::describe() const {
  return "http:" + options_.model_id;
}

std::string HttpBackend::api_key() const {
  if (options_.api_key) return *options_.api_key;
  const char* env = std::getenv("DAC_API_KEY");
  if (env == nullptr || *env == '\0') {
    throw AuthError("DAC_API_KEY is not set");
  }
  return env;
}

std::string HttpBackend::request_body(const BackendRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& message : request.messages) {
    messages.push_back(
        {{"role", std::string(to_string(message.role))}, {"content", message.text}});
  }
  nlohmann::json body = {{"model", request.model_id},
                         {"messages", std::move(messages)},
                         {"temperature", request.temperature}};
  return body.dump();
}

std::string HttpBackend::parse_response_body(const std::string& body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw TransportError(std::string("response is not JSON: ") + e.what());
  }
  const auto* choices = doc.contains("choices") ? &doc["choices"] : nullptr;
  if (choices == nullptr || !choices->is_array() || choices->empty()) {
    throw TransportError("response has no choices");
  }
  const auto& first = (*choices)[0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string()) {
    throw TransportError("response choice has no message content");
  }
  return first["message"]["content"].get<std::string>();
}

namespace {

bool retryable_status(int status) {
  return status == 408 || status == 409 || status == 429 || status >= 500;
}

}  // namespace

BackendResponse HttpBackend::complete(const BackendRequest& request) {
  request.validate();
  const std::string key = api_key();
  const std::string body = request_body(request);

  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);
  const httplib::Headers headers = {{"Authorization", "Bearer " + key}};

  std::string last_error;
  for (int attempt = 1; attempt <= options_.retry.max_attempts; ++attempt) {
    if (attempt > 1) std::this_thread::sleep_for(options_.retry.delay_before(attempt - 1));

    const auto start = std::chrono::steady_clock::now();
    auto result = client.Post(options_.path, headers, body, "application/json");
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    if (!result) {
      last_error = "transport failure: " + httplib::to_string(result.error());
      continue;
    }
    const int status = result->status;
    if (status == 401 || status == 403) {
      throw AuthError("endpoint rejected credential (HTTP " + std::to_string(status) + ")");
    }
    if (retryable_status(status)) {
      last_error = "HTTP " + std::to_string(status);
      continue;
    }
    if (status < 200 || status >= 300) {
      throw TransportError("HTTP " + std::to_string(status) + ": " + result->body);
    }
    return {parse_response_body(result->body),
            static_cast<std::uint64_t>(elapsed.count()), ResponseSource::http};
  }
  throw TransportError("giving up after " + std::to_string(options_.retry.max_attempts) +
                       " attempts: " + last_error);
}

}  // namespace dac::backends
