#include "dac/backends/transcript.hpp"

#include <nlohmann/json.hpp>

#include "dac/error.hpp"

namespace dac::backends {

namespace {

nlohmann::json request_to_json(const BackendRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& message : request.messages) {
    messages.push_back(
        {{"role", std::string(to_string(message.role))}, {"content", message.text}});
  }
  return {{"model", request.model_id},
          {"temperature", request.temperature},
          {"messages", std::move(messages)}};
}

}  // namespace

TranscriptStore::TranscriptStore(std::filesystem::path path, Mode mode)
    : path_(std::move(path)), mode_(mode) {}

std::shared_ptr<TranscriptStore> TranscriptStore::open(
    const std::filesystem::path& path, Mode mode) {
  std::shared_ptr<TranscriptStore> store(new TranscriptStore(path, mode));
  std::error_code ec;
  const bool exists = std::filesystem::exists(path, ec);
  if (mode == Mode::replay && !exists) {
    throw StoreIOError("transcript not found: " + path.string());
  }
  if (exists) store->load();
  if (mode == Mode::record) {
    store->out_.open(path, std::ios::app | std::ios::binary);
    if (!store->out_) {
      throw StoreIOError("cannot open transcript for append: " + path.string());
    }
  }
  return store;
}

void TranscriptStore::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw StoreIOError("cannot read transcript: " + path_.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json entry;
    try {
      entry = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!entry.is_object() || !entry.contains("key") || !entry["key"].is_string() ||
        !entry.contains("response") || !entry["response"].is_string()) {
      throw SchemaError(line_no, "transcript entry needs string fields key, response");
    }
    entries_.emplace(entry["key"].get<std::string>(),
                     entry["response"].get<std::string>());
  }
}

void TranscriptStore::record(const BackendRequest& request,
                             const std::string& response_text) {
  if (mode_ != Mode::record) {
    throw StoreIOError("transcript opened read-only: " + path_.string());
  }
  const std::string key = request.key();
  nlohmann::json entry = {
      {"key", key}, {"request", request_to_json(request)}, {"response", response_text}};
  const std::string line = entry.dump() + "\n";

  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) {
    if (it->second != response_text) {
      throw StoreIOError("conflicting response for recorded key " + key);
    }
    return;
  }
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.flush();
  if (!out_) throw StoreIOError("write failed: " + path_.string());
  entries_.emplace(key, response_text);
}

std::optional<std::string> TranscriptStore::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

BackendResponse TranscriptStore::replay(const BackendRequest& request) const {
  const std::string key = request.key();
  auto text = find(key);
  if (!text) throw ReplayMiss("no transcript entry for request " + key);
  return {*text, 0, ResponseSource::replay};
}

std::size_t TranscriptStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

ReplayBackend::ReplayBackend(std::shared_ptr<const TranscriptStore> store,
                             std::string model_id)
    : store_(std::move(store)), model_id_(std::move(model_id)) {}

BackendResponse ReplayBackend::complete(const BackendRequest& request) {
  request.validate();
  return store_->replay(request);
}

std::string ReplayBackend::describe() const {
  return "replay:" + model_id_;
}

RecordingBackend::RecordingBackend(std::shared_ptr<Backend> inner,
                                   std::shared_ptr<TranscriptStore> store)
    : inner_(std::move(inner)), store_(std::move(store)) {}

BackendResponse RecordingBackend::complete(const BackendRequest& request) {
  BackendResponse response = inner_->complete(request);
  store_->record(request, response.text);
  return response;
}

std::string RecordingBackend::describe() const {
  return inner_->describe();
}

}  // namespace dac::backends
