#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

#include "chainprover/nl2fol.hpp"

namespace chainprover::nl2fol {

namespace {

class HttpLlmClient : public LlmClient {
 public:
  explicit HttpLlmClient(LlmEndpointConfig cfg) : cfg_(std::move(cfg)) {}

  std::string complete(const std::string& prompt) override {
    httplib::Client client(cfg_.base_url);
    client.set_read_timeout(cfg_.request_timeout_ms / 1000,
                            (cfg_.request_timeout_ms % 1000) * 1000);
    httplib::Headers headers;
    if (!cfg_.api_key_env_var.empty()) {
      const char* key = std::getenv(cfg_.api_key_env_var.c_str());
      if (!key)
        throw TransportError("environment variable " + cfg_.api_key_env_var +
                             " is not set");
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    nlohmann::json body{
        {"model", cfg_.model_name},
        {"temperature", cfg_.temperature},
        {"messages",
         {{{"role", "user"}, {"content", prompt}}}},
    };
    httplib::Result res = client.Post("/v1/chat/completions", headers,
                                      body.dump(), "application/json");
    if (!res) throw TransportError(httplib::to_string(res.error()));
    if (res->status != 200)
      throw TransportError("HTTP status " + std::to_string(res->status));
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        reply["choices"].empty())
      throw TransportError("malformed completion response");
    const nlohmann::json& msg = reply["choices"][0]["message"];
    if (!msg.contains("content") || !msg["content"].is_string())
      throw TransportError("completion response has no content");
    return msg["content"].get<std::string>();
  }

 private:
  LlmEndpointConfig cfg_;
};

}  // namespace

std::unique_ptr<LlmClient> make_http_client(const LlmEndpointConfig& cfg) {
  return std::make_unique<HttpLlmClient>(cfg);
}

}  // namespace chainprover::nl2fol
