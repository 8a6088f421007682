// Copyright 2026 The Kanspell Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "kanspell/kanspell.h"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string data(const char* name) {
  return std::string(KANSPELL_TEST_DATA_DIR) + "/" + name;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ks_string_free(s);
  return out;
}

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kanspell_capi_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
    lexicon_ = data("lexicon.txt");
    markers_ = data("markers.tsv");
    memory_ = (dir_ / "memory.tsv").string();
    user_ = (dir_ / "user.txt").string();
    ASSERT_EQ(open(&engine_), KS_OK) << ks_last_error();
  }
  void TearDown() override {
    ks_engine_close(engine_);
    fs::remove_all(dir_);
  }

  ks_status open(ks_engine** out) {
    ks_config c{lexicon_.c_str(), markers_.c_str(), memory_.c_str(),
                user_.c_str(), 1};
    return ks_engine_open(&c, out);
  }

  json call(ks_status (*fn)(ks_engine*, const char*, char**), const char* word) {
    char* out = nullptr;
    ks_status s = fn(engine_, word, &out);
    EXPECT_EQ(s, KS_OK) << ks_last_error();
    return json::parse(take(out));
  }

  fs::path dir_;
  std::string lexicon_, markers_, memory_, user_;
  ks_engine* engine_ = nullptr;
};

TEST_F(CApiTest, Check) {
  json j = call(ks_check, "deevaalaya");
  EXPECT_EQ(j["verdict"], "sandhi");
  EXPECT_EQ(j["split"]["suffix"]["roman"], "aalaya");
  EXPECT_EQ(call(ks_check, "ಮರವನ್ನು")["verdict"], "inflected");
  EXPECT_EQ(call(ks_check, "deevaalya")["verdict"], "misspelt");
}

TEST_F(CApiTest, SplitRootSuggest) {
  EXPECT_EQ(call(ks_split, "suuryoodaya")["splits"][0]["rule"], "guNa");
  EXPECT_EQ(call(ks_root, "deevaalayagaLalli")["root"]["roman"], "deevaalaya");
  auto s = call(ks_suggest, "deevaalya")["suggestions"];
  ASSERT_FALSE(s.empty());
  EXPECT_TRUE(call(ks_suggest, "mara")["suggestions"].empty());
}

TEST_F(CApiTest, Join) {
  char* out = nullptr;
  ASSERT_EQ(ks_join(engine_, "maLe", "kaala", "aadeesha", &out), KS_OK);
  EXPECT_EQ(json::parse(take(out))["results"][0]["word"]["roman"], "maLegaala");
  ASSERT_EQ(ks_join(engine_, "mara", "annu", nullptr, &out), KS_OK);
  EXPECT_GE(json::parse(take(out))["results"].size(), 2u);
  out = nullptr;
  EXPECT_EQ(ks_join(engine_, "mara", "kaala", "guNa", &out), KS_RULE_NOT_APPLICABLE);
  EXPECT_EQ(out, nullptr);
  EXPECT_NE(std::string(ks_last_error()), "");
  EXPECT_EQ(ks_join(engine_, "mara", "kaala", "bogus", &out), KS_INVALID_ARGUMENT);
}

TEST_F(CApiTest, InputErrors) {
  char* out = nullptr;
  EXPECT_EQ(ks_check(engine_, "mar!", &out), KS_INVALID_ROMAN_INPUT);
  EXPECT_EQ(ks_check(engine_, "ಮರx", &out), KS_UNMAPPABLE_CODEPOINT);
  EXPECT_EQ(ks_check(engine_, nullptr, &out), KS_INVALID_ARGUMENT);
  EXPECT_EQ(ks_check(nullptr, "mara", &out), KS_INVALID_ARGUMENT);
  EXPECT_EQ(ks_check(engine_, "mara", nullptr), KS_INVALID_ARGUMENT);
  EXPECT_EQ(out, nullptr);
  EXPECT_STREQ(ks_status_name(KS_STORAGE_ERROR), "storage_error");
}

TEST_F(CApiTest, OpenFailures) {
  ks_engine* e = nullptr;
  ks_config missing{"/nonexistent/lexicon.txt", markers_.c_str(), nullptr, nullptr, 1};
  EXPECT_EQ(ks_engine_open(&missing, &e), KS_IO_ERROR);
  EXPECT_EQ(e, nullptr);
  fs::path empty = dir_ / "empty.txt";
  { std::ofstream(empty) << "# nothing\n"; }
  std::string empty_path = empty.string();
  ks_config none{empty_path.c_str(), markers_.c_str(), nullptr, nullptr, 1};
  EXPECT_EQ(ks_engine_open(&none, &e), KS_EMPTY_LEXICON);
  EXPECT_EQ(ks_engine_open(nullptr, &e), KS_INVALID_ARGUMENT);
  ks_engine_close(nullptr);  // no-op
}

TEST_F(CApiTest, ChoiceAndLexiconPersist) {
  auto before = call(ks_suggest, "deevaalya")["suggestions"];
  ASSERT_GE(before.size(), 2u);
  std::string last = before.back()["candidate"]["roman"];
  ASSERT_EQ(ks_record_choice(engine_, "deevaalya", last.c_str()), KS_OK);
  EXPECT_EQ(ks_record_choice(engine_, "deevaalya", "kkkk"), KS_INVALID_ARGUMENT);
  int added = -1;
  ASSERT_EQ(ks_add_word(engine_, "kaMpyuuTar", &added), KS_OK);
  EXPECT_EQ(added, 1);
  ASSERT_EQ(ks_add_word(engine_, "kaMpyuuTar", &added), KS_OK);
  EXPECT_EQ(added, 0);

  ks_engine* second = nullptr;
  ASSERT_EQ(open(&second), KS_OK);
  std::swap(second, engine_);
  EXPECT_EQ(call(ks_suggest, "deevaalya")["suggestions"][0]["candidate"]["roman"], last);
  EXPECT_EQ(call(ks_check, "kaMpyuuTar")["verdict"], "correct");
  ks_engine_close(second);
}

TEST_F(CApiTest, ConcurrentReadersAndWriter) {
  std::vector<std::thread> threads;
  std::atomic<int> failures{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 50; ++i) {
        char* out = nullptr;
        if (ks_check(engine_, "deevaalayagaLalli", &out) != KS_OK) ++failures;
        ks_string_free(out);
      }
    });
  }
  threads.emplace_back([&] {
    for (int i = 0; i < 20; ++i) {
      std::string w = "kaMpyuuTar" + std::string(i % 2 ? "u" : "a");
      if (ks_add_word(engine_, w.c_str(), nullptr) != KS_OK) ++failures;
    }
  });
  for (auto& t : threads) t.join();
  EXPECT_EQ(failures, 0);
}

TEST(CApi, StringHelpers) {
  char* out = nullptr;
  ASSERT_EQ(ks_to_kannada("avanu", &out), KS_OK);
  EXPECT_EQ(take(out), "ಅವನು");
  ASSERT_EQ(ks_to_roman("ಸೂರ್ಯ", &out), KS_OK);
  EXPECT_EQ(take(out), "suurya");
  EXPECT_EQ(ks_to_roman("x", &out), KS_UNMAPPABLE_CODEPOINT);
  ASSERT_EQ(ks_rules_tsv(&out), KS_OK);
  std::string tsv = take(out);
  EXPECT_EQ(tsv.rfind("rule\t", 0), 0u);
}

}  // namespace
