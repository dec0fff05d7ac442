/*
 * Copyright 2026 The Chandassu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "chandassu/errors.hpp"
#include "chandassu/meter_config.hpp"
#include "chandassu/varnamala.hpp"

namespace {

using namespace chandassu;
using nlohmann::json;

const std::vector<std::string> kTypes = {"vutpalamaala", "champakamaala", "saardulamu",
                                         "mattebhamu",   "kandamu",       "teytageethi",
                                         "aataveladi",   "seesamu"};

json builtin_json(const std::string& type) {
  return json::parse(*builtin_file(type + ".json"));
}

std::string config_error(const json& doc) {
  try {
    parse_config(doc.dump());
  } catch (const ConfigValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(MeterLibrary, BuiltinTypesInOrder) {
  const auto types = list_types();
  ASSERT_EQ(types.size(), 8u);
  for (std::size_t i = 0; i < types.size(); ++i) EXPECT_EQ(types[i].first, kTypes[i]);
  std::map<ProsodicClass, int> per_class;
  for (const auto& [_, c] : types) ++per_class[c];
  EXPECT_EQ(per_class[ProsodicClass::kVruttamu], 4);
  EXPECT_EQ(per_class[ProsodicClass::kJaathi], 1);
  EXPECT_EQ(per_class[ProsodicClass::kVupajaathi], 3);
}

TEST(MeterLibrary, VruttamuLinesHaveTheDeclaredLength) {
  for (const auto& c : MeterLibrary::builtin().configs()) {
    if (c.prosodic_class != ProsodicClass::kVruttamu) {
      EXPECT_FALSE(c.n_aksharalu) << c.type_name;
      continue;
    }
    ASSERT_TRUE(c.n_aksharalu) << c.type_name;
    ASSERT_EQ(c.gana_kramam.size(), 4u);
    for (const auto& line : c.gana_kramam) {
      std::size_t len = 0;
      for (const auto& alts : line) {
        ASSERT_EQ(alts.size(), 1u);
        len += alts.front()->size();
      }
      EXPECT_EQ(len, static_cast<std::size_t>(*c.n_aksharalu)) << c.type_name;
    }
  }
  EXPECT_EQ(*load_config("vutpalamaala").n_aksharalu, 20);
  EXPECT_EQ(*load_config("champakamaala").n_aksharalu, 21);
  EXPECT_EQ(*load_config("saardulamu").n_aksharalu, 19);
  EXPECT_EQ(*load_config("mattebhamu").n_aksharalu, 20);
}

TEST(MeterLibrary, ConstraintPattern) {
  for (const auto& c : MeterLibrary::builtin().configs()) {
    const bool prasa = c.prosodic_class != ProsodicClass::kVupajaathi;
    EXPECT_EQ(c.prasa_required, prasa) << c.type_name;
    EXPECT_EQ(static_cast<int>(c.gana_kramam.size()), c.n_paadalu * c.lines_per_paadam);
  }
  EXPECT_EQ(load_config("seesamu").gana_kramam.size(), 8u);
  EXPECT_EQ(load_config("kandamu").yati_paadalu, (std::vector<int>{2, 4}));
  EXPECT_TRUE(load_config("kandamu").only_generic_yati);
}

TEST(MeterLibrary, VupajaathiPositionsUseFunctionalClasses) {
  const auto& tg = load_config("teytageethi");
  ASSERT_EQ(tg.gana_kramam[0].size(), 5u);
  EXPECT_EQ(tg.gana_kramam[0][0].size(), 2u);  // SURYA
  EXPECT_EQ(tg.gana_kramam[0][1].size(), 6u);  // INDRA
  const auto& av = load_config("aataveladi");
  EXPECT_EQ(av.gana_kramam[0].size(), 5u);
  EXPECT_EQ(av.gana_kramam[1].size(), 5u);
}

TEST(MeterLibrary, UnknownType) {
  EXPECT_THROW(load_config("nosuchmeter"), UnknownTypeError);
  EXPECT_FALSE(MeterLibrary::builtin().has_type("Vutpalamaala"));
}

TEST(ParseConfig, RoundTripsEveryBuiltin) {
  for (const auto& t : kTypes) {
    const auto c = parse_config(builtin_json(t).dump());
    EXPECT_EQ(c.type_name, t);
  }
}

TEST(ParseConfig, RejectsMalformedConfigs) {
  auto base = builtin_json("vutpalamaala");

  EXPECT_NE(config_error(json("x")), "");
  EXPECT_NE(config_error(json::parse("[1]")), "");

  auto doc = base;
  doc["mystery"] = 1;
  EXPECT_NE(config_error(doc).find("unknown key"), std::string::npos);

  doc = base;
  doc.erase("gana_kramam");
  EXPECT_NE(config_error(doc).find("missing gana_kramam"), std::string::npos);

  doc = base;
  doc["gana_kramam"][0][0] = "XA";
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["n_aksharalu"] = 21;
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc.erase("n_aksharalu");
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["gana_kramam"].erase(3);
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["yati_sthanam"] = {9, 0};
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["yati_paadalu"] = json::array();
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["yati_paadalu"] = {0};
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["class"] = "Sonnet";
  EXPECT_NE(config_error(doc), "");

  doc = builtin_json("kandamu");
  doc["n_aksharalu"] = 20;
  EXPECT_NE(config_error(doc), "");

  doc = builtin_json("seesamu");
  doc["prasa"] = true;
  EXPECT_NE(config_error(doc), "");

  doc = base;
  doc["schema_version"] = 2;
  EXPECT_NE(config_error(doc), "");
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("chandassu-cfg-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }
  void write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
  }

 private:
  std::filesystem::path path_;
};

TEST(MeterLibraryDirectory, OverridesAndExtends) {
  TempDir dir;
  auto kandamu = builtin_json("kandamu");
  kandamu["only_generic_yati"] = false;
  dir.write("kandamu.json", kandamu.dump());
  auto extra = builtin_json("vutpalamaala");
  extra["type_name"] = "myvruttam";
  dir.write("myvruttam.json", extra.dump());
  dir.write("notes.txt", "ignored");

  const auto lib = MeterLibrary::from_directory(dir.path());
  ASSERT_EQ(lib.configs().size(), 9u);
  EXPECT_EQ(lib.configs()[4].type_name, "kandamu");
  EXPECT_FALSE(lib.config("kandamu").only_generic_yati);
  EXPECT_EQ(lib.configs()[8].type_name, "myvruttam");
  EXPECT_EQ(lib.yati_table().letter_classes(),
            MeterLibrary::builtin().yati_table().letter_classes());
}

TEST(MeterLibraryDirectory, FileNameMustMatchType) {
  TempDir dir;
  dir.write("other.json", builtin_json("kandamu").dump());
  EXPECT_THROW(MeterLibrary::from_directory(dir.path()), ConfigValidationError);
  EXPECT_THROW(MeterLibrary::from_directory(dir.path() / "missing"), IoError);
}

TEST(MeterLibraryDirectory, CustomYatiTable) {
  TempDir dir;
  dir.write("yati_table.txt", "vowel <inherent> ా\nletter క గ\n");
  const auto lib = MeterLibrary::from_directory(dir.path());
  EXPECT_EQ(lib.yati_table().letter_classes().size(), 1u);
  EXPECT_EQ(lib.configs().size(), 8u);
}

TEST(YatiTable, BuiltinClassesAreDisjointAndCoverLetters) {
  const auto& table = MeterLibrary::builtin().yati_table();
  std::set<char32_t> seen;
  for (const auto& cls : table.letter_classes()) {
    for (char32_t c : cls) EXPECT_TRUE(seen.insert(c).second) << std::hex << unsigned(c);
  }
  for (char32_t cp = 0x0C00; cp <= 0x0C7F; ++cp) {
    if (varnamala::classify(cp) == varnamala::CharClass::kConsonant) {
      EXPECT_TRUE(table.letter_class_of(cp)) << std::hex << unsigned(cp);
    }
  }
  EXPECT_EQ(table.letter_class_of(U'క'), table.letter_class_of(U'గ'));
  EXPECT_NE(table.letter_class_of(U'క'), table.letter_class_of(U'త'));
  EXPECT_EQ(table.vowel_classes().size(), 3u);
}

TEST(YatiTable, RejectsBadTables) {
  EXPECT_THROW(YatiTable::parse("letter క గ\nletter గ చ\n"), ConfigValidationError);
  EXPECT_THROW(YatiTable::parse("consonant క\n"), ConfigValidationError);
  EXPECT_THROW(YatiTable::parse("letter ా\n"), ConfigValidationError);
  EXPECT_THROW(YatiTable::parse("letter <inherent>\n"), ConfigValidationError);
  EXPECT_THROW(YatiTable::parse("vowel\n"), ConfigValidationError);
  EXPECT_NO_THROW(YatiTable::parse("# comment only\n\n"));
}

TEST(ProsodicClass, Names) {
  EXPECT_EQ(parse_prosodic_class("Vruttamu"), ProsodicClass::kVruttamu);
  EXPECT_EQ(to_string(ProsodicClass::kVupajaathi), "Vupajaathi");
  EXPECT_THROW(parse_prosodic_class("x"), ConfigValidationError);
}

}  // namespace
