#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "dac/backends/backend.hpp"

namespace dac::backends {

/// Content-addressed request -> response store persisted as line-delimited
/// JSON, one `{key, request, response}` object per line.
///
/// In record mode the store is append-only: existing entries are loaded and
/// new ones are appended and flushed one line at a time under a mutex. In
/// replay mode it is read-only.
class TranscriptStore {
 public:
  enum class Mode { record, replay };

  /// Opens `path`. Replay requires the file to exist; record creates it.
  /// Throws StoreIOError or SchemaError.
  static std::shared_ptr<TranscriptStore> open(const std::filesystem::path& path,
                                               Mode mode);

  /// Appends an entry. Recording an already-present key is a no-op when the
  /// text matches and a StoreIOError otherwise.
  void record(const BackendRequest& request, const std::string& response_text);

  /// Exact-match lookup; throws ReplayMiss.
  BackendResponse replay(const BackendRequest& request) const;

  std::optional<std::string> find(const std::string& key) const;

  std::size_t size() const;
  Mode mode() const noexcept { return mode_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  TranscriptStore(std::filesystem::path path, Mode mode);
  void load();

  std::filesystem::path path_;
  Mode mode_;
  std::map<std::string, std::string> entries_;
  std::ofstream out_;
  mutable std::mutex mutex_;
};

/// Serves every request from a transcript; source = replay.
class ReplayBackend final : public Backend {
 public:
  ReplayBackend(std::shared_ptr<const TranscriptStore> store, std::string model_id);

  BackendResponse complete(const BackendRequest& request) override;
  std::string model_id() const override { return model_id_; }
  std::string describe() const override;

 private:
  std::shared_ptr<const TranscriptStore> store_;
  std::string model_id_;
};

/// Forwards to an inner backend and records every successful exchange.
class RecordingBackend final : public Backend {
 public:
  RecordingBackend(std::shared_ptr<Backend> inner,
                   std::shared_ptr<TranscriptStore> store);

  BackendResponse complete(const BackendRequest& request) override;
  std::string model_id() const override { return inner_->model_id(); }
  std::string describe() const override;

 private:
  std::shared_ptr<Backend> inner_;
  std::shared_ptr<TranscriptStore> store_;
};

}  // namespace dac::backends
