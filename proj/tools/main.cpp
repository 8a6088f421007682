// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

// kanspell: spell check, sandhi split/join and root extraction for Kannada.
//
// Exit status: 0 when every word checks (or the command succeeded), 1 when a
// word is misspelt or nothing was found, 2 on usage or configuration errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kanspell/kanspell.h"
#include "service.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;

struct Options {
  std::string lexicon = KANSPELL_DEFAULT_DATA_DIR "/lexicon.txt";
  std::string markers = KANSPELL_DEFAULT_DATA_DIR "/markers.tsv";
  std::string memory;
  std::string user_lexicon;
  std::string script = "auto";  // auto | kannada | roman
  std::string format = "text";  // text | json
  int port = 8080;
  bool no_roman = false;
};

struct EngineCloser {
  void operator()(ks_engine* e) const { ks_engine_close(e); }
};
using EnginePtr = std::unique_ptr<ks_engine, EngineCloser>;

struct Failure {
  int code;
  std::string message;
};

EnginePtr open_engine(const Options& o) {
  ks_config c{o.lexicon.c_str(), o.markers.c_str(), o.memory.c_str(),
              o.user_lexicon.c_str(), o.no_roman ? 0 : 1};
  ks_engine* e = nullptr;
  if (ks_status s = ks_engine_open(&c, &e); s != KS_OK)
    throw Failure{kUsage, std::string(ks_status_name(s)) + ": " + ks_last_error()};
  return EnginePtr(e);
}

// Calls a JSON-producing entry point and parses its result; input errors
// become std::nullopt with the message printed.
template <class Call>
std::optional<json> call_json(Call&& call) {
  char* out = nullptr;
  ks_status s = call(&out);
  if (s != KS_OK) {
    std::cerr << "kanspell: " << ks_status_name(s) << ": " << ks_last_error()
              << '\n';
    return std::nullopt;
  }
  json doc = json::parse(out);
  ks_string_free(out);
  return doc;
}

class Printer {
 public:
  explicit Printer(const Options& o) : o_(o) {}

  bool json_output() const { return o_.format == "json"; }

  // A word record ({"roman","kannada"}) in the output script; `input` is the
  // script the word was typed in.
  std::string word(const json& w, const std::string& input = "roman") const {
    std::string script = o_.script == "auto" ? input : o_.script;
    return w.at(script == "kannada" ? "kannada" : "roman").get<std::string>();
  }

  std::string split(const json& s, const std::string& input) const {
    return word(s["prefix"], input) + " + " + word(s["suffix"], input) + " [" +
           s["rule"].get<std::string>() + "]";
  }

  // "root [form/category, ...]", markers innermost first.
  std::string analysis(const json& root, const json& stripped,
                       const std::string& input) const {
    std::string out = word(root, input);
    if (stripped.empty()) return out;
    out += " [";
    for (std::size_t i = stripped.size(); i-- > 0;) {
      out += word(stripped[i]["form"], input) + "/" +
             stripped[i]["category"].get<std::string>();
      if (i > 0) out += ", ";
    }
    return out + "]";
  }

  std::string verdict(const json& r) const {
    const std::string input = r.value("script", "roman");
    const std::string v = r["verdict"];
    if (v == "correct") return "correct";
    if (v == "sandhi") {
      const json& s = r["split"];
      return "correct (sandhi: " + s["rule"].get<std::string>() + ": " +
             word(s["prefix"], input) + " + " + word(s["suffix"], input) + ")";
    }
    if (v == "inflected") {
      const json& a = r["analysis"];
      return "correct (inflected: " + analysis(a["root"], a["stripped"], input) + ")";
    }
    std::string out = "misspelt";
    const json& list = r["suggestions"];
    if (list.empty()) return out + "; no suggestions";
    out += "; suggestions: ";
    for (std::size_t i = 0; i < list.size(); ++i)
      out += (i ? ", " : "") + word(list[i]["candidate"], input);
    return out;
  }

 private:
  const Options& o_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_check(const Options& o, const std::vector<std::string>& words,
              const std::string& file) {
  EnginePtr engine = open_engine(o);
  Printer p(o);
  bool all_correct = true;
  if (!file.empty()) {
    std::string text = read_file(file);
    auto report = call_json([&](char** out) {
      return ks_corpus(engine.get(), text.c_str(), out);
    });
    if (!report) return kUsage;
    if (p.json_output()) {
      std::cout << report->dump() << '\n';
    } else {
      for (const json& t : (*report)["tokens"]) {
        std::cout << t["offset"].get<std::size_t>() << '\t'
                  << t["text"].get<std::string>() << ": " << p.verdict(t) << '\n';
      }
      const json& c = (*report)["counts"];
      std::cout << "correct " << c["correct"] << ", inflected " << c["inflected"]
                << ", sandhi " << c["sandhi"] << ", misspelt " << c["misspelt"]
                << '\n';
    }
    return (*report)["counts"]["misspelt"].get<int>() > 0 ? kNotFound : kOk;
  }
  for (const std::string& w : words) {
    auto r = call_json([&](char** out) { return ks_check(engine.get(), w.c_str(), out); });
    if (!r) return kUsage;
    if ((*r)["verdict"] == "misspelt") all_correct = false;
    if (p.json_output())
      std::cout << r->dump() << '\n';
    else
      std::cout << w << ": " << p.verdict(*r) << '\n';
  }
  return all_correct ? kOk : kNotFound;
}

int cmd_split(const Options& o, const std::vector<std::string>& words) {
  EnginePtr engine = open_engine(o);
  Printer p(o);
  bool all_found = true;
  for (const std::string& w : words) {
    auto r = call_json([&](char** out) { return ks_split(engine.get(), w.c_str(), out); });
    if (!r) return kUsage;
    const json& splits = (*r)["splits"];
    if (splits.empty()) all_found = false;
    if (p.json_output()) {
      std::cout << r->dump() << '\n';
      continue;
    }
    if (words.size() > 1) std::cout << w << ":\n";
    if (splits.empty()) std::cout << "no sandhi found\n";
    for (const json& s : splits) std::cout << p.split(s, (*r)["script"]) << '\n';
  }
  return all_found ? kOk : kNotFound;
}

int cmd_join(const Options& o, const std::string& prefix,
             const std::string& suffix, const std::string& rule) {
  EnginePtr engine = open_engine(o);
  Printer p(o);
  auto r = call_json([&](char** out) {
    return ks_join(engine.get(), prefix.c_str(), suffix.c_str(), rule.c_str(), out);
  });
  if (!r) return kUsage;
  if (p.json_output()) {
    std::cout << r->dump() << '\n';
  } else {
    char* script_probe = nullptr;
    // Output in the prefix's script unless told otherwise.
    std::string input = ks_to_roman(prefix.c_str(), &script_probe) == KS_OK
                            ? "kannada"
                            : "roman";
    ks_string_free(script_probe);
    for (const json& j : (*r)["results"])
      std::cout << p.word(j["word"], input) << " [" << j["rule"].get<std::string>()
                << "]\n";
  }
  return (*r)["results"].empty() ? kNotFound : kOk;
}

int cmd_root(const Options& o, const std::vector<std::string>& words) {
  EnginePtr engine = open_engine(o);
  Printer p(o);
  bool all_found = true;
  for (const std::string& w : words) {
    auto r = call_json([&](char** out) { return ks_root(engine.get(), w.c_str(), out); });
    if (!r) return kUsage;
    if ((*r)["root"].is_null()) all_found = false;
    if (p.json_output()) {
      std::cout << r->dump() << '\n';
    } else if ((*r)["root"].is_null()) {
      std::cout << "no root found\n";
    } else {
      std::cout << p.analysis((*r)["root"], (*r)["stripped"], (*r)["script"]) << '\n';
    }
  }
  return all_found ? kOk : kNotFound;
}

int cmd_stats(const Options& o) {
  EnginePtr engine = open_engine(o);
  auto r = call_json([&](char** out) { return ks_stats(engine.get(), out); });
  if (!r) return kUsage;
  if (o.format == "json") {
    std::cout << r->dump() << '\n';
    return kOk;
  }
  std::cout << "words: " << (*r)["word_count"] << " (" << (*r)["user_word_count"]
            << " user)\n"
            << "automaton states: " << (*r)["forward_states"] << '\n'
            << "reverse automaton states: " << (*r)["reverse_states"] << '\n'
            << "trie states: " << (*r)["trie_states"] << '\n'
            << "trie/automaton ratio: " << (*r)["trie_to_automaton_ratio"] << '\n';
  return kOk;
}

int cmd_rules() {
  char* out = nullptr;
  if (ks_rules_tsv(&out) != KS_OK) return kUsage;
  std::cout << out;
  ks_string_free(out);
  return kOk;
}

// Walks misspelt tokens of `file`, asking for a pick, skip or add per token,
// then writes the corrected text.
int cmd_interactive(const Options& o, const std::string& file,
                    std::string output) {
  EnginePtr engine = open_engine(o);
  Printer p(o);
  std::string text = read_file(file);
  if (output.empty()) output = file + ".corrected";
  auto report = call_json([&](char** out) {
    return ks_corpus(engine.get(), text.c_str(), out);
  });
  if (!report) return kUsage;

  std::string corrected;
  std::size_t copied = 0;
  std::string line;
  bool input_open = true;
  for (const json& t : (*report)["tokens"]) {
    if (t["verdict"] != "misspelt") continue;
    const std::string script = t["script"];
    const json& list = t["suggestions"];
    std::cout << t["text"].get<std::string>() << " (byte "
              << t["offset"].get<std::size_t>() << ")\n";
    for (std::size_t i = 0; i < list.size(); ++i)
      std::cout << "  " << i + 1 << ") " << p.word(list[i]["candidate"], script) << '\n';
    std::cout << "  [number] pick, s skip, a add to lexicon > " << std::flush;
    if (!input_open || !std::getline(std::cin, line)) {
      input_open = false;
      std::cout << '\n';
      continue;
    }
    if (line == "a") {
      if (ks_add_word(engine.get(), t["text"].get<std::string>().c_str(), nullptr) != KS_OK)
        std::cerr << "kanspell: " << ks_last_error() << '\n';
      continue;
    }
    std::size_t pick = 0;
    try {
      pick = std::stoul(line);
    } catch (const std::exception&) {
      continue;  // skip
    }
    if (pick == 0 || pick > list.size()) continue;
    const json& chosen = list[pick - 1]["candidate"];
    const std::string text_word = t["text"];
    if (ks_record_choice(engine.get(), text_word.c_str(),
                         chosen["roman"].get<std::string>().c_str()) != KS_OK)
      std::cerr << "kanspell: " << ks_last_error() << '\n';
    std::size_t offset = t["offset"], length = t["length"];
    corrected.append(text, copied, offset - copied);
    corrected += chosen[script == "kannada" ? "kannada" : "roman"].get<std::string>();
    copied = offset + length;
  }
  corrected.append(text, copied, std::string::npos);

  std::ofstream out(output, std::ios::binary);
  out << corrected;
  if (!out.flush()) throw Failure{kUsage, "cannot write " + output};
  std::cout << "wrote " << output << '\n';
  return kOk;
}

int cmd_serve(const Options& o, const std::string& static_dir) {
  EnginePtr engine = open_engine(o);
  httplib::Server server;
  kanspell::service::install_routes(server, engine.get(), static_dir);
  std::cout << "listening on http://127.0.0.1:" << o.port << std::endl;
  if (!server.listen("127.0.0.1", o.port))
    throw Failure{kUsage, "cannot listen on port " + std::to_string(o.port)};
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kannada spell checker, sandhi splitter and root extractor",
               "kanspell"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--lexicon", o.lexicon, "base lexicon file")
      ->envname("KANSPELL_LEXICON");
  app.add_option("--markers", o.markers, "marker file")
      ->envname("KANSPELL_MARKERS");
  app.add_option("--memory", o.memory, "suggestion memory file")
      ->envname("KANSPELL_MEMORY");
  app.add_option("--user-lexicon", o.user_lexicon, "file receiving added words")
      ->envname("KANSPELL_USER_LEXICON");
  app.add_option("--script", o.script, "output script")
      ->check(CLI::IsMember({"auto", "kannada", "roman"}))
      ->envname("KANSPELL_SCRIPT");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("KANSPELL_FORMAT");
  app.add_option("--port", o.port, "service port")
      ->check(CLI::Range(1, 65535))
      ->envname("KANSPELL_PORT");
  app.add_flag("--no-roman", o.no_roman,
               "corpus input: ignore Latin-letter words");

  std::vector<std::string> words;
  std::string file, prefix, suffix, rule, output, static_dir;

  auto* check = app.add_subcommand("check", "check words or a text file");
  check->add_option("words", words, "words to check");
  check->add_option("--file", file, "text file to check")->check(CLI::ExistingFile);
  auto* split = app.add_subcommand("split", "list sandhi splits");
  split->add_option("words", words)->required();
  auto* join = app.add_subcommand("join", "join two words");
  join->add_option("prefix", prefix)->required();
  join->add_option("suffix", suffix)->required();
  join->add_option("--rule", rule, "only this rule");
  auto* root = app.add_subcommand("root", "extract root words");
  root->add_option("words", words)->required();
  auto* interactive =
      app.add_subcommand("interactive", "correct a text file interactively");
  interactive->add_option("file", file)->required()->check(CLI::ExistingFile);
  interactive->add_option("-o,--output", output, "corrected file");
  auto* serve = app.add_subcommand("serve", "run the HTTP/JSON service");
  serve->add_option("--static", static_dir, "directory of static files");
  auto* stats = app.add_subcommand("stats", "lexicon and automaton sizes");
  auto* rules = app.add_subcommand("rules", "dump the sandhi rule table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*check && words.empty() && file.empty()) {
    std::cerr << "kanspell: check needs words or --file\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(o, words, file);
    if (*split) return cmd_split(o, words);
    if (*join) return cmd_join(o, prefix, suffix, rule);
    if (*root) return cmd_root(o, words);
    if (*interactive) return cmd_interactive(o, file, output);
    if (*serve) return cmd_serve(o, static_dir);
    if (*stats) return cmd_stats(o);
    if (*rules) return cmd_rules();
  } catch (const Failure& f) {
    std::cerr << "kanspell: " << f.message << '\n';
    return f.code;
  }
  return kUsage;
}
