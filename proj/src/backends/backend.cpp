#include "dac/backends/backend.hpp"

#include <openssl/evp.h>

#include <array>
#include <nlohmann/json.hpp>

#include "dac/error.hpp"

namespace dac::backends {

std::string_view to_string(Role role) {
  return role == Role::system ? "system" : "user";
}

Role role_from_string(std::string_view name) {
  if (name == "system") return Role::system;
  if (name == "user") return Role::user;
  throw PreconditionViolation("unknown message role '" + std::string(name) + "'");
}

std::string_view to_string(ResponseSource source) {
  switch (source) {
    case ResponseSource::http:
      return "http";
    case ResponseSource::mock:
      return "mock";
    case ResponseSource::replay:
      return "replay";
  }
  return "unknown";
}

BackendRequest BackendRequest::user(std::string prompt, std::string model_id,
                                    double temperature) {
  BackendRequest request;
  request.messages.push_back({Role::user, std::move(prompt)});
  request.model_id = std::move(model_id);
  request.temperature = temperature;
  return request;
}

const std::string& BackendRequest::prompt() const {
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role == Role::user) return it->text;
  }
  throw PreconditionViolation("request has no user message");
}

void BackendRequest::validate() const {
  if (messages.empty()) throw PreconditionViolation("request has no messages");
  if (!(temperature >= 0.0)) {
    throw PreconditionViolation("temperature must be non-negative");
  }
}

std::string BackendRequest::canonical() const {
  // nlohmann::json objects keep keys sorted and print doubles in shortest
  // round-trip form independent of locale.
  nlohmann::json messages_json = nlohmann::json::array();
  for (const auto& message : messages) {
    messages_json.push_back({std::string(to_string(message.role)), message.text});
  }
  nlohmann::json doc = {
      {"messages", std::move(messages_json)},
      {"model", model_id},
      {"temperature", temperature},
  };
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

std::string BackendRequest::key() const {
  const std::string text = canonical();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("HashError", "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

}  // namespace dac::backends
