#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "riskroute/icl/templates.hpp"

namespace riskroute::icl {

struct LlmRequest {
  std::string prompt;
  int max_new_tokens = 256;
  bool greedy = true;  // always sent as true; decoding must be deterministic
  double repetition_penalty = 1.0;

  bool operator==(const LlmRequest&) const = default;
};

struct LlmResponse {
  std::string text;
  int tokens = 0;
};

class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  /// Throws BackendError when no response could be obtained.
  virtual LlmResponse generate(const LlmRequest& request) = 0;
  virtual std::string name() const = 0;
};

/// Deterministic stand-in for a model. Summary prompts echo the record; ICL
/// prompts answer the majority label of the demonstrations, ties going to the
/// last (most similar) one. Anything else is a BackendError.
class MockBackend final : public LlmBackend {
 public:
  explicit MockBackend(Templates templates = Templates::defaults());
  LlmResponse generate(const LlmRequest& request) override;
  std::string name() const override { return "mock"; }

 private:
  Templates templates_;
};

/// Wraps a callable; handy for tests and scripted backends.
class FunctionBackend final : public LlmBackend {
 public:
  using Fn = std::function<LlmResponse(const LlmRequest&)>;
  explicit FunctionBackend(Fn fn, std::string name = "function") : fn_(std::move(fn)), name_(std::move(name)) {}
  LlmResponse generate(const LlmRequest& request) override { return fn_(request); }
  std::string name() const override { return name_; }

 private:
  Fn fn_;
  std::string name_;
};

struct HttpBackendConfig {
  std::string url;    // http(s)://host[:port]/path
  std::string token;  // sent as "Authorization: Bearer <token>" when nonempty
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};  // doubled after each failed attempt
  std::chrono::seconds timeout{120};

  /// Reads the URL and token from the named environment variables.
  /// Throws ValidationError if the URL variable is unset or empty.
  static HttpBackendConfig from_env(const std::string& url_var, const std::string& token_var);
};

/// POSTs {"prompt", "max_new_tokens", "greedy", "repetition_penalty"} and
/// expects {"text": string, "tokens": int}. Connection errors, HTTP 429/5xx
/// and malformed bodies are retried; other HTTP errors fail at once.
class HttpBackend final : public LlmBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);
  LlmResponse generate(const LlmRequest& request) override;
  std::string name() const override { return "http"; }

  std::size_t attempts() const { return attempts_; }
  std::size_t retries() const { return retries_; }

 private:
  HttpBackendConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  std::atomic<std::size_t> attempts_{0};
  std::atomic<std::size_t> retries_{0};
};

nlohmann::json request_json(const LlmRequest& request);

/// Memoizes responses by request. Thread-safe. With a cache file, entries are
/// loaded at construction and each new one is appended as a JSON line.
class CachedBackend final : public LlmBackend {
 public:
  explicit CachedBackend(std::shared_ptr<LlmBackend> inner, std::filesystem::path cache_file = {});
  LlmResponse generate(const LlmRequest& request) override;
  std::string name() const override { return inner_->name(); }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t size() const;

 private:
  static std::string key_of(const LlmRequest& request);

  std::shared_ptr<LlmBackend> inner_;
  std::filesystem::path cache_file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, LlmResponse> entries_;
  std::ofstream log_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace riskroute::icl
