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


#include "chandassu/meter_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chandassu/errors.hpp"
#include "chandassu/unicode.hpp"
#include "chandassu/varnamala.hpp"

namespace chandassu {
namespace detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace detail

namespace {

using nlohmann::json;

constexpr std::string_view kBuiltinOrder[] = {
    "vutpalamaala", "champakamaala", "saardulamu", "mattebhamu",
    "kandamu",      "teytageethi",   "aataveladi", "seesamu",
};

constexpr std::string_view kYatiFile = "yati_table.txt";

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ConfigValidationError(where + ": " + what);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int positive_int(const json& doc, const char* key, const std::string& where) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    invalid(where, std::string(key) + " must be a positive integer");
  }
  return v.get<int>();
}

bool flag(const json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key)) return false;
  const auto& v = doc.at(key);
  if (!v.is_boolean()) invalid(where, std::string(key) + " must be true or false");
  return v.get<bool>();
}

// A position is a ganam name, a class macro, or a list of either.
GanamAlternatives resolve_position(const json& pos, const std::string& where) {
  GanamAlternatives out;
  auto add = [&](const json& item) {
    if (!item.is_string()) invalid(where, "ganam references must be strings");
    const auto name = item.get<std::string>();
    if (name == "INDRA" || name == "SURYA") {
      auto members = expand_class(name == "INDRA" ? FunctionalClass::kIndra
                                                  : FunctionalClass::kSurya);
      out.insert(out.end(), members.begin(), members.end());
      return;
    }
    try {
      out.push_back(&ganam_by_name(name));
    } catch (const UnknownGanamError&) {
      invalid(where, "unknown ganam \"" + name + "\"");
    }
  };
  if (pos.is_array()) {
    for (const auto& item : pos) add(item);
  } else {
    add(pos);
  }
  if (out.empty()) invalid(where, "empty alternative list");
  return out;
}

void validate(const PadyamConfig& c, const std::string& where) {
  const std::size_t lines = c.gana_kramam.size();
  if (lines != static_cast<std::size_t>(c.n_paadalu * c.lines_per_paadam)) {
    invalid(where, "gana_kramam has " + std::to_string(lines) +
                       " lines, expected n_paadalu * lines_per_paadam");
  }
  for (std::size_t i = 0; i < lines; ++i) {
    if (c.gana_kramam[i].empty()) {
      invalid(where, "line " + std::to_string(i + 1) + " has no ganams");
    }
  }

  if (c.prosodic_class == ProsodicClass::kVruttamu) {
    if (!c.n_aksharalu) invalid(where, "Vruttamu types require n_aksharalu");
    for (std::size_t i = 0; i < lines; ++i) {
      std::size_t count = 0;
      for (const auto& alts : c.gana_kramam[i]) {
        for (const auto* g : alts) {
          if (g->size() != alts.front()->size()) {
            invalid(where, "Vruttamu alternatives must share one length");
          }
        }
        count += alts.front()->size();
      }
      if (count != static_cast<std::size_t>(*c.n_aksharalu)) {
        invalid(where, "line " + std::to_string(i + 1) + " spans " +
                           std::to_string(count) + " aksharams, n_aksharalu is " +
                           std::to_string(*c.n_aksharalu));
      }
    }
  } else if (c.n_aksharalu) {
    invalid(where, "only Vruttamu types carry n_aksharalu");
  }
  if (c.prosodic_class == ProsodicClass::kVupajaathi && c.prasa_required) {
    invalid(where, "Vupajaathi types carry no prasa constraint");
  }

  if (c.yati_paadalu.empty()) invalid(where, "yati_paadalu is empty");
  if (c.yati_sthanam.ganam == 0) invalid(where, "yati_sthanam ganam index is 1-based");
  for (int line : c.yati_paadalu) {
    if (line < 1 || static_cast<std::size_t>(line) > lines) {
      invalid(where, "yati_paadalu entry " + std::to_string(line) + " is not a line");
    }
    const auto& row = c.gana_kramam[line - 1];
    if (c.yati_sthanam.ganam > row.size()) {
      invalid(where, "yati_sthanam ganam is beyond line " + std::to_string(line));
    }
    const auto& alts = row[c.yati_sthanam.ganam - 1];
    const auto longest = std::max_element(
        alts.begin(), alts.end(),
        [](const GanamSpec* a, const GanamSpec* b) { return a->size() < b->size(); });
    if (c.yati_sthanam.offset >= (*longest)->size()) {
      invalid(where, "yati_sthanam offset exceeds the ganam on line " +
                         std::to_string(line));
    }
  }
}

std::optional<std::string_view> embedded(std::string_view name) {
  for (std::size_t i = 0; i < detail::kEmbeddedFileCount; ++i) {
    if (detail::kEmbeddedFiles[i].first == name) return detail::kEmbeddedFiles[i].second;
  }
  return std::nullopt;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::u32string& set, char32_t cp) {
  return set.find(cp) != std::u32string::npos;
}

void check_disjoint(const std::vector<std::u32string>& classes, const char* kind) {
  std::set<char32_t> seen;
  for (const auto& cls : classes) {
    if (cls.empty()) throw ConfigValidationError(std::string("empty ") + kind + " class");
    for (char32_t cp : cls) {
      if (!seen.insert(cp).second) {
        throw ConfigValidationError(std::string(kind) + " classes overlap at " +
                                    (cp == YatiTable::kInherentVowel
                                         ? std::string("<inherent>")
                                         : unicode::encode_utf8(cp)));
      }
    }
  }
}

}  // namespace

std::string_view to_string(ProsodicClass c) {
  switch (c) {
    case ProsodicClass::kVruttamu: return "Vruttamu";
    case ProsodicClass::kJaathi: return "Jaathi";
    case ProsodicClass::kVupajaathi: return "Vupajaathi";
  }
  return "Vruttamu";
}

ProsodicClass parse_prosodic_class(std::string_view name) {
  const std::string n = lower(name);
  if (n == "vruttamu") return ProsodicClass::kVruttamu;
  if (n == "jaathi") return ProsodicClass::kJaathi;
  if (n == "vupajaathi") return ProsodicClass::kVupajaathi;
  throw ConfigValidationError("unknown prosodic class \"" + std::string(name) + "\"");
}

std::size_t PadyamConfig::total_ganams() const {
  std::size_t n = 0;
  for (const auto& line : gana_kramam) n += line.size();
  return n;
}

YatiTable::YatiTable(std::vector<std::u32string> vowel_classes,
                     std::vector<std::u32string> letter_classes)
    : vowel_(std::move(vowel_classes)), letter_(std::move(letter_classes)) {
  check_disjoint(vowel_, "vowel");
  check_disjoint(letter_, "letter");
}

std::optional<std::size_t> YatiTable::letter_class_of(char32_t letter) const {
  for (std::size_t i = 0; i < letter_.size(); ++i) {
    if (contains(letter_[i], letter)) return i;
  }
  return std::nullopt;
}

YatiTable YatiTable::parse(std::string_view text) {
  using varnamala::CharClass;
  std::vector<std::u32string> vowels;
  std::vector<std::u32string> letters;
  std::istringstream in{std::string(unicode::strip_bom(text))};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string where = "yati table line " + std::to_string(number);
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind) || kind.front() == '#') continue;
    if (kind != "vowel" && kind != "letter") invalid(where, "expected vowel or letter");
    std::u32string members;
    for (std::string word; words >> word;) {
      if (word == "<inherent>") {
        if (kind != "vowel") invalid(where, "<inherent> is a vowel member");
        members.push_back(kInherentVowel);
        continue;
      }
      const auto cps = unicode::decode_utf8(word);
      if (cps.size() != 1) invalid(where, "member \"" + word + "\" is not one codepoint");
      const CharClass c = varnamala::classify(cps[0]);
      const bool ok = kind == "vowel"
                          ? c == CharClass::kIndependentVowel ||
                                c == CharClass::kVowelDiacritic
                          : varnamala::is_base_letter(cps[0]);
      if (!ok) invalid(where, "\"" + word + "\" cannot be a " + kind + " member");
      members.push_back(cps[0]);
    }
    if (members.empty()) invalid(where, "class has no members");
    (kind == "vowel" ? vowels : letters).push_back(std::move(members));
  }
  return YatiTable(std::move(vowels), std::move(letters));
}

PadyamConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigValidationError("config must be a JSON object");

  static const std::set<std::string> kKnown = {
      "schema_version", "type_name",    "class",        "n_paadalu",
      "lines_per_paadam", "gana_kramam", "n_aksharalu", "yati_sthanam",
      "yati_paadalu",   "prasa",        "only_generic_yati"};
  std::string where = "config";
  if (doc.contains("type_name") && doc["type_name"].is_string()) {
    where = doc["type_name"].get<std::string>();
  }
  for (const auto& [key, _] : doc.items()) {
    if (!kKnown.count(key)) invalid(where, "unknown key \"" + key + "\"");
  }
  for (const char* key : {"type_name", "class", "n_paadalu", "gana_kramam",
                          "yati_sthanam", "yati_paadalu"}) {
    if (!doc.contains(key)) invalid(where, std::string("missing ") + key);
  }
  if (doc.contains("schema_version") && doc["schema_version"] != 1) {
    invalid(where, "unsupported schema_version");
  }

  PadyamConfig c;
  if (!doc["type_name"].is_string() || doc["type_name"].get<std::string>().empty()) {
    invalid(where, "type_name must be a non-empty string");
  }
  c.type_name = doc["type_name"].get<std::string>();
  if (!doc["class"].is_string()) invalid(where, "class must be a string");
  c.prosodic_class = parse_prosodic_class(doc["class"].get<std::string>());
  c.n_paadalu = positive_int(doc, "n_paadalu", where);
  if (doc.contains("lines_per_paadam")) {
    c.lines_per_paadam = positive_int(doc, "lines_per_paadam", where);
  }
  if (doc.contains("n_aksharalu")) c.n_aksharalu = positive_int(doc, "n_aksharalu", where);
  c.prasa_required = flag(doc, "prasa", where);
  c.only_generic_yati = flag(doc, "only_generic_yati", where);

  const auto& gk = doc["gana_kramam"];
  if (!gk.is_array()) invalid(where, "gana_kramam must be a list of lines");
  for (const auto& line : gk) {
    if (!line.is_array()) invalid(where, "each gana_kramam line must be a list");
    auto& row = c.gana_kramam.emplace_back();
    for (const auto& pos : line) row.push_back(resolve_position(pos, where));
  }

  const auto& ys = doc["yati_sthanam"];
  if (!ys.is_array() || ys.size() != 2 || !ys[0].is_number_unsigned() ||
      !ys[1].is_number_unsigned()) {
    invalid(where, "yati_sthanam must be [ganam, offset]");
  }
  c.yati_sthanam = {ys[0].get<std::size_t>(), ys[1].get<std::size_t>()};

  const auto& yp = doc["yati_paadalu"];
  if (!yp.is_array()) invalid(where, "yati_paadalu must be a list");
  for (const auto& v : yp) {
    if (!v.is_number_integer()) invalid(where, "yati_paadalu entries must be integers");
    c.yati_paadalu.push_back(v.get<int>());
  }

  validate(c, where);
  return c;
}

const MeterLibrary& MeterLibrary::builtin() {
  static const MeterLibrary library = [] {
    std::vector<PadyamConfig> configs;
    for (auto name : kBuiltinOrder) {
      configs.push_back(parse_config(*embedded(std::string(name) + ".json")));
    }
    return MeterLibrary(std::move(configs), YatiTable::parse(*embedded(kYatiFile)));
  }();
  return library;
}

MeterLibrary MeterLibrary::from_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a directory");

  std::map<std::string, PadyamConfig> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    PadyamConfig c = parse_config(read_file(entry.path()));
    if (c.type_name != entry.path().stem().string()) {
      throw ConfigValidationError(entry.path().string() + ": type_name \"" +
                                  c.type_name + "\" does not match file name");
    }
    found.emplace(c.type_name, std::move(c));
  }

  std::vector<PadyamConfig> configs;
  for (auto name : kBuiltinOrder) {
    auto it = found.find(std::string(name));
    if (it != found.end()) {
      configs.push_back(std::move(it->second));
      found.erase(it);
    } else {
      configs.push_back(builtin().config(name));
    }
  }
  for (auto& [_, c] : found) configs.push_back(std::move(c));

  const fs::path yati_path = dir / std::string(kYatiFile);
  YatiTable yati = fs::exists(yati_path) ? YatiTable::parse(read_file(yati_path))
                                         : builtin().yati_table();
  return MeterLibrary(std::move(configs), std::move(yati));
}

const PadyamConfig& MeterLibrary::config(std::string_view type_name) const {
  for (const auto& c : configs_) {
    if (c.type_name == type_name) return c;
  }
  throw UnknownTypeError("unknown padyam type \"" + std::string(type_name) + "\"");
}

bool MeterLibrary::has_type(std::string_view type_name) const {
  return std::any_of(configs_.begin(), configs_.end(),
                     [&](const PadyamConfig& c) { return c.type_name == type_name; });
}

PadyamConfig load_config(std::string_view type_name) {
  return MeterLibrary::builtin().config(type_name);
}

std::vector<std::pair<std::string, ProsodicClass>> list_types() {
  std::vector<std::pair<std::string, ProsodicClass>> out;
  for (const auto& c : MeterLibrary::builtin().configs()) {
    out.emplace_back(c.type_name, c.prosodic_class);
  }
  return out;
}

std::optional<std::string_view> builtin_file(std::string_view name) {
  return embedded(name);
}

}  // namespace chandassu
