#pragma once

// HTTP front end. The handlers are plain functions of the request so they
// can be tested without a socket; install() wires them into cpp-httplib.
//
// Responses carry {"version": 1, "engine": "...", "request": ..., "elapsed_ms": ...}
// plus "analyses" (parse) or "forms" (generate). Errors carry
// {"version": 1, "error": {"code": "...", "reason": "...", "position"?: n}}.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "akkadian/analyzer.hpp"
#include "akkadian/serialize.hpp"
#include "httplib.h"
#include "json.hpp"

namespace akkadian::service {

struct Config {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = default_data_dir();
  std::filesystem::path static_dir;
  std::size_t max_segments = 64;

  static Config from_env() {
    Config c;
    if (const char* v = std::getenv("AKKADIAN_LISTEN")) c.host = v;
    if (const char* v = std::getenv("AKKADIAN_PORT")) c.port = std::atoi(v);
    if (const char* v = std::getenv("AKKADIAN_DATA_DIR")) c.data_dir = v;
    if (const char* v = std::getenv("AKKADIAN_STATIC_DIR")) c.static_dir = v;
    if (const char* v = std::getenv("AKKADIAN_MAX_SEGMENTS")) c.max_segments = std::strtoul(v, nullptr, 10);
    return c;
  }
};

struct Reply {
  int status = 200;
  nlohmann::json body;
};

inline Reply error_reply(int status, std::string code, std::string reason) {
  return {status, {{"version", kApiVersion}, {"error", {{"code", std::move(code)}, {"reason", std::move(reason)}}}}};
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

class Service {
 public:
  explicit Service(Config config) : config_(std::move(config)), analyzer_(config_.data_dir) {}

  const Config& config() const { return config_; }
  const Analyzer& analyzer() const { return analyzer_; }

  Reply parse(const std::optional<std::string>& form) const {
    if (!form) return error_reply(400, "missing_form", "query parameter 'form' is required");
    SegmentedForm decoded;
    try {
      decoded = decode(*form);
    } catch (const DecodeError& e) {
      auto r = error_reply(400, "decode_error", e.reason());
      r.body["error"]["position"] = e.position();
      return r;
    }
    if (decoded.size() > config_.max_segments)
      return error_reply(413, "form_too_long",
                         "form has " + std::to_string(decoded.size()) + " segments; limit is " +
                             std::to_string(config_.max_segments));

    const auto t0 = std::chrono::steady_clock::now();
    const auto analyses = analyzer_.parse(decoded);
    const double elapsed = ms_since(t0);

    nlohmann::json list = nlohmann::json::array();
    for (const auto& a : analyses) list.push_back(to_json(a));
    return {200,
            {{"version", kApiVersion},
             {"engine", kEngineVersion},
             {"request", {{"form", *form}}},
             {"analyses", list},
             {"elapsed_ms", elapsed}}};
  }

  Reply generate(const std::string& body) const {
    nlohmann::json request;
    GenRequest req;
    try {
      request = nlohmann::json::parse(body);
      req = gen_request_from_json(request);
    } catch (const nlohmann::json::exception& e) {
      return error_reply(400, "bad_json", e.what());
    } catch (const FeatureError& e) {
      return error_reply(400, "schema_violation", e.what());
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Generated> generated;
    try {
      generated = analyzer_.generate(req);
    } catch (const UnsupportedCell& e) {
      return error_reply(422, "unsupported_cell", e.what());
    } catch (const FeatureError& e) {
      return error_reply(400, "schema_violation", e.what());
    }
    const double elapsed = ms_since(t0);

    nlohmann::json forms = nlohmann::json::array();
    for (const auto& g : generated) forms.push_back(to_json(g.analysis));
    return {200,
            {{"version", kApiVersion},
             {"engine", kEngineVersion},
             {"request", request},
             {"forms", forms},
             {"elapsed_ms", elapsed}}};
  }

 private:
  Config config_;
  Analyzer analyzer_;
};

inline void send(httplib::Response& res, const Reply& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

inline void install(httplib::Server& server, const Service& svc) {
  server.Get("/api/parse", [&svc](const httplib::Request& req, httplib::Response& res) {
    std::optional<std::string> form;
    if (req.has_param("form")) form = req.get_param_value("form");
    send(res, svc.parse(form));
  });
  server.Post("/api/generate", [&svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc.generate(req.body));
  });
  if (!svc.config().static_dir.empty()) server.set_mount_point("/", svc.config().static_dir.string());
}

}  // namespace akkadian::service
