// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

#include "service.hpp"

#include <memory>

#include "json.hpp"

namespace kanspell::service {
namespace {

using nlohmann::json;
constexpr const char* kJson = "application/json; charset=utf-8";

int http_status(ks_status s) {
  switch (s) {
    case KS_OK: return 200;
    case KS_INVALID_ARGUMENT:
    case KS_INVALID_ROMAN_INPUT:
    case KS_UNMAPPABLE_CODEPOINT:
    case KS_RULE_NOT_APPLICABLE:
      return 400;
    default:
      return 500;
  }
}

void send_error(httplib::Response& res, int http, std::string_view status,
                std::string_view message) {
  res.status = http;
  json body = {{"error", {{"status", status}, {"message", message}}}};
  res.set_content(body.dump(), kJson);
}

void send_failure(httplib::Response& res, ks_status s) {
  send_error(res, http_status(s), ks_status_name(s), ks_last_error());
}

// Sends the JSON document a C call produced, or its failure.
template <class Call>
void reply(httplib::Response& res, Call&& call) {
  char* out = nullptr;
  ks_status s = call(&out);
  std::unique_ptr<char, void (*)(char*)> owned(out, ks_string_free);
  if (s != KS_OK) return send_failure(res, s);
  res.set_content(out, kJson);
}

bool require_param(const httplib::Request& req, httplib::Response& res,
                   const char* name, std::string& value) {
  if (!req.has_param(name)) {
    send_error(res, 400, "invalid_argument",
               std::string("missing query parameter '") + name + "'");
    return false;
  }
  value = req.get_param_value(name);
  return true;
}

// Parses a JSON object body and pulls the named string fields out of it.
bool body_fields(const httplib::Request& req, httplib::Response& res,
                 std::initializer_list<std::pair<const char*, std::string*>> fields) {
  json body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    send_error(res, 400, "invalid_argument", "body must be a JSON object");
    return false;
  }
  for (auto [name, value] : fields) {
    auto it = body.find(name);
    if (it == body.end() || !it->is_string()) {
      send_error(res, 400, "invalid_argument",
                 std::string("missing string field '") + name + "'");
      return false;
    }
    *value = it->get<std::string>();
  }
  return true;
}

void word_route(httplib::Server& server, const char* path, ks_engine* engine,
                ks_status (*fn)(ks_engine*, const char*, char**)) {
  server.Get(path, [engine, fn](const httplib::Request& req,
                                httplib::Response& res) {
    std::string word;
    if (!require_param(req, res, "word", word)) return;
    reply(res, [&](char** out) { return fn(engine, word.c_str(), out); });
  });
}

}  // namespace

void install_routes(httplib::Server& server, ks_engine* engine,
                    const std::string& static_dir) {
  word_route(server, "/check", engine, ks_check);
  word_route(server, "/split", engine, ks_split);
  word_route(server, "/root", engine, ks_root);
  word_route(server, "/suggest", engine, ks_suggest);

  server.Get("/join", [engine](const httplib::Request& req,
                               httplib::Response& res) {
    std::string prefix, suffix;
    if (!require_param(req, res, "prefix", prefix) ||
        !require_param(req, res, "suffix", suffix))
      return;
    std::string rule = req.get_param_value("rule");
    reply(res, [&](char** out) {
      return ks_join(engine, prefix.c_str(), suffix.c_str(), rule.c_str(), out);
    });
  });

  auto corpus = [engine](const std::string& text, httplib::Response& res) {
    reply(res, [&](char** out) { return ks_corpus(engine, text.c_str(), out); });
  };
  server.Get("/corpus", [corpus](const httplib::Request& req,
                                 httplib::Response& res) {
    if (req.has_param("text")) return corpus(req.get_param_value("text"), res);
    if (req.is_multipart_form_data()) {
      for (const char* field : {"text", "file"})
        if (req.has_file(field)) return corpus(req.get_file_value(field).content, res);
    }
    corpus(req.body, res);
  });
  server.Post("/corpus", [corpus](const httplib::Request& req,
                                  httplib::Response& res) {
    if (req.is_multipart_form_data()) {
      for (const char* field : {"text", "file"})
        if (req.has_file(field)) return corpus(req.get_file_value(field).content, res);
      return send_error(res, 400, "invalid_argument",
                        "multipart body needs a 'text' or 'file' part");
    }
    corpus(req.body, res);
  });

  server.Post("/choice", [engine](const httplib::Request& req,
                                  httplib::Response& res) {
    std::string misspelt, chosen;
    if (!body_fields(req, res, {{"misspelt", &misspelt}, {"chosen", &chosen}}))
      return;
    ks_status s = ks_record_choice(engine, misspelt.c_str(), chosen.c_str());
    if (s != KS_OK) return send_failure(res, s);
    res.set_content(json{{"misspelt", misspelt}, {"chosen", chosen}}.dump(), kJson);
  });

  server.Post("/lexicon", [engine](const httplib::Request& req,
                                   httplib::Response& res) {
    std::string word;
    if (!body_fields(req, res, {{"word", &word}})) return;
    int added = 0;
    ks_status s = ks_add_word(engine, word.c_str(), &added);
    if (s != KS_OK) return send_failure(res, s);
    res.set_content(json{{"word", word}, {"added", added != 0}}.dump(), kJson);
  });

  server.Get("/stats", [engine](const httplib::Request&, httplib::Response& res) {
    reply(res, [&](char** out) { return ks_stats(engine, out); });
  });
  server.Get("/rules", [](const httplib::Request&, httplib::Response& res) {
    char* out = nullptr;
    ks_status s = ks_rules_tsv(&out);
    std::unique_ptr<char, void (*)(char*)> owned(out, ks_string_free);
    if (s != KS_OK) return send_failure(res, s);
    res.set_content(out, "text/tab-separated-values; charset=utf-8");
  });

  if (!static_dir.empty()) server.set_mount_point("/", static_dir);

  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.status == 404 && res.body.empty())
      send_error(res, 404, "not_found", "no such route");
  });
}

}  // namespace kanspell::service
