#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dac::backends {

enum class Role { system, user };

struct Message {
  Role role = Role::user;
  std::string text;

  friend bool operator==(const Message&, const Message&) = default;
};

std::string_view to_string(Role role);
Role role_from_string(std::string_view name);

/// One language-model call. The request key is derived from the other
/// fields and is therefore never stored separately.
struct BackendRequest {
  std::vector<Message> messages;
  std::string model_id;
  double temperature = 0.0;

  /// Builds a single-user-message request.
  static BackendRequest user(std::string prompt, std::string model_id,
                             double temperature = 0.0);

  /// Text of the last user message; every prompt grammar keys off this.
  const std::string& prompt() const;

  /// Validates the request; throws PreconditionViolation.
  void validate() const;

  /// Canonical serialization used for hashing. Stable across processes.
  std::string canonical() const;

  /// Lowercase hex SHA-256 of `canonical()`.
  std::string key() const;

  friend bool operator==(const BackendRequest&, const BackendRequest&) = default;
};

enum class ResponseSource { http, mock, replay };
std::string_view to_string(ResponseSource source);

struct BackendResponse {
  std::string text;
  std::uint64_t latency_ms = 0;
  ResponseSource source = ResponseSource::mock;
};

/// Uniform language-model interface. Implementations must be safe to call
/// from several threads at once.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual BackendResponse complete(const BackendRequest& request) = 0;

  /// Model identifier stamped into requests built by the solvers.
  virtual std::string model_id() const = 0;

  /// Short human-readable identity for run reports.
  virtual std::string describe() const = 0;
};

}  // namespace dac::backends
