#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "dac/backends/backend.hpp"

namespace dac::backends {

struct RetryPolicy {
  int max_attempts = 4;
  std::chrono::milliseconds initial_delay{500};
  double backoff_factor = 2.0;
  std::chrono::milliseconds max_delay{8000};

  /// Delay before retry number `retry` (1-based).
  std::chrono::milliseconds delay_before(int retry) const;
};

struct HttpBackendOptions {
  /// Scheme, host and optional port, e.g. "https://api.openai.com".
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string model_id = "gpt-3.5-turbo";
  /// When unset the key is read from DAC_API_KEY at call time.
  std::optional<std::string> api_key;
  std::chrono::seconds timeout{120};
  RetryPolicy retry;
};

/// Client for chat-completion endpoints that speak the common
/// `{"model", "messages": [{role, content}], "temperature"}` JSON shape.
///
/// Connection failures, HTTP 408/409/429 and 5xx are retried with
/// exponential backoff; 401/403 raise AuthError immediately; other
/// statuses and malformed bodies raise TransportError.
class HttpBackend final : public Backend {
 public:
  explicit HttpBackend(HttpBackendOptions options);

  BackendResponse complete(const BackendRequest& request) override;
  std::string model_id() const override { return options_.model_id; }
  std::string describe() const override;

  static std::string request_body(const BackendRequest& request);
  /// Pulls `choices[0].message.content`; throws TransportError.
  static std::string parse_response_body(const std::string& body);

 private:
  std::string api_key() const;

  HttpBackendOptions options_;
};

}  // namespace dac::backends
