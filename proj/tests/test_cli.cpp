// Copyright 2026 The bellsector Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(BELLSECTOR_CLI_PATH) + " " + args +
                              " 2>&1";
  std::array<char, 4096> buffer;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/bellsector_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kGoodParams = R"({"J":[1.0,0.8,0.5],"B1":0.9,"B2":0.4,"axis":"z"})";

}  // namespace

TEST_CASE("verify subcommand exits zero on a passing suite") {
  const RunResult r = run_cli("verify --suite structure --samples 20 --seed 7");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("ALL CHECKS PASSED") != std::string::npos);
  REQUIRE(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("malformed parameter documents exit with code 2") {
  const std::string bad = write_temp("bad.json", "{not json");
  const RunResult r = run_cli("spectrum --params " + bad);
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.output.find("error") != std::string::npos);

  const std::string missing =
      write_temp("missing.json", R"({"J":[1,2,3],"B1":0.5,"axis":"z"})");
  const RunResult r2 = run_cli("spectrum --params " + missing);
  REQUIRE(r2.exit_code == 2);
  REQUIRE(r2.output.find("missing key") != std::string::npos);
}

TEST_CASE("unknown verification suites are invalid input") {
  const RunResult r = run_cli("verify --suite nonsense");
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("evolve with a single step emits the identity row") {
  const std::string params = write_temp("good.json", kGoodParams);
  const RunResult r = run_cli("evolve --params " + params +
                              " --t0 0 --t1 0 --steps 1 --format csv");
  REQUIRE(r.exit_code == 0);
  std::stringstream ss(r.output);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  REQUIRE(header.rfind("t,u00_re,u00_im", 0) == 0);
  REQUIRE(row.rfind("0,1,0,0,0", 0) == 0);
  // Diagonal entries are 1: u11 sits at column index 1 + 2*(4*1+1) = 11.
  std::vector<std::string> cells;
  std::stringstream rs(row);
  std::string cell;
  while (std::getline(rs, cell, ',')) cells.push_back(cell);
  REQUIRE(cells.size() == 37);
  REQUIRE(std::stod(cells[11]) == 1.0);
  REQUIRE(std::stod(cells[21]) == 1.0);
  REQUIRE(std::stod(cells[31]) == 1.0);
}

TEST_CASE("spectrum output carries the documented keys") {
  const std::string params = write_temp("good2.json", kGoodParams);
  const RunResult r = run_cli("spectrum --params " + params);
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  REQUIRE(doc.contains("levels"));
  REQUIRE(doc.contains("vectors_bell"));
  REQUIRE(doc.contains("oracle_residual"));
  for (const char* key : {"--", "-+", "+-", "++"})
    REQUIRE(doc["levels"].contains(key));
  REQUIRE(doc["vectors_bell"].size() == 4);
  REQUIRE(doc["vectors_bell"][0].size() == 4);
  REQUIRE(doc["vectors_bell"][0][0].size() == 2);
  REQUIRE(doc["oracle_residual"].get<double>() < 1e-10);
  // Levels sum to zero.
  double sum = 0.0;
  for (const auto& [key, value] : doc["levels"].items())
    sum += value.get<double>();
  REQUIRE(std::abs(sum) < 1e-12);
}

TEST_CASE("entangle emits the documented CSV columns") {
  const std::string params = write_temp("good3.json", kGoodParams);
  const RunResult r = run_cli("entangle --params " + params +
                              " --state bell:-+ --t0 0 --t1 2 --steps 5");
  REQUIRE(r.exit_code == 0);
  std::stringstream ss(r.output);
  std::string header;
  std::getline(ss, header);
  REQUIRE(header == "t,C_closed,C_oracle,S_oracle");
  int rows = 0;
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  REQUIRE(rows == 5);

  const RunResult bad = run_cli("entangle --params " + params +
                                " --state bell:xy");
  REQUIRE(bad.exit_code == 2);
}

TEST_CASE("synthesize emits a pulse sequence and solves the target") {
  const RunResult r = run_cli(
      "synthesize --axis z --target \"axis=0,1,0;angle=1.234\" --tol 1e-8");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  REQUIRE(doc["sequence"].size() == 2);
  for (const auto& pulse : doc["sequence"]) {
    REQUIRE(pulse.contains("J"));
    REQUIRE(pulse.contains("B1"));
    REQUIRE(pulse.contains("B2"));
    REQUIRE(pulse.contains("axis"));
    REQUIRE(pulse.contains("t"));
    REQUIRE(pulse["t"].get<double>() >= 0.0);
  }
  REQUIRE(doc["residual"].get<double>() < 1e-8);

  const RunResult bad = run_cli("synthesize --axis z --target \"axis=0,0\"");
  REQUIRE(bad.exit_code == 2);
}

TEST_CASE("loops reports exact candidates for commensurate parameters") {
  const std::string params = write_temp(
      "loops.json", R"({"J":[0.0,0.0,1.0],"B1":0.0,"B2":0.0,"axis":"z"})");
  const RunResult r = run_cli("loops --params " + params + " --horizon 20");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  REQUIRE(doc["exact_found"].get<bool>());
  bool found_pi = false;
  for (const auto& cand : doc["exact"])
    if (std::abs(cand["time"].get<double>() - M_PI) < 1e-9 &&
        cand["sign"].get<int>() == -1)
      found_pi = true;
  REQUIRE(found_pi);
}

TEST_CASE("output bytes are stable across runs for a fixed seed") {
  const std::string params = write_temp("good4.json", kGoodParams);
  for (const std::string& args :
       {std::string("verify --suite group --samples 30 --seed 42"),
        std::string("spectrum --params ") + params,
        std::string("evolve --params ") + params +
            " --t0 0 --t1 3 --steps 7 --format csv",
        std::string("synthesize --axis y --target \"axis=1,0,0;angle=0.7\"")}) {
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.exit_code == b.exit_code);
    REQUIRE(a.output == b.output);
  }
}

namespace {

// Minimal structural validator for the shipped draft-07 schemas: type,
// required, properties, items, minItems/maxItems, enum, minimum.
bool validate_schema(const json& schema, const json& value, std::string* why) {
  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    const bool ok =
        (type == "object" && value.is_object()) ||
        (type == "array" && value.is_array()) ||
        (type == "number" && value.is_number()) ||
        (type == "integer" && value.is_number_integer()) ||
        (type == "string" && value.is_string()) ||
        (type == "boolean" && value.is_boolean());
    if (!ok) {
      *why = "expected type " + type + ", got " + value.dump().substr(0, 40);
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& allowed : schema["enum"]) found = found || allowed == value;
    if (!found) {
      *why = "value " + value.dump() + " not in enum";
      return false;
    }
  }
  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema["minimum"].get<double>()) {
    *why = "value below minimum";
    return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          *why = "missing required key " + key.get<std::string>();
          return false;
        }
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key) && !validate_schema(sub, value.at(key), why)) {
          *why = key + ": " + *why;
          return false;
        }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") &&
        value.size() < schema["minItems"].get<size_t>()) {
      *why = "too few items";
      return false;
    }
    if (schema.contains("maxItems") &&
        value.size() > schema["maxItems"].get<size_t>()) {
      *why = "too many items";
      return false;
    }
    if (schema.contains("items"))
      for (const auto& item : value)
        if (!validate_schema(schema["items"], item, why)) {
          *why = "items: " + *why;
          return false;
        }
  }
  return true;
}

json load_schema(const std::string& name) {
  std::ifstream in(std::string(BELLSECTOR_SCHEMA_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

void require_valid(const json& schema, const json& value) {
  std::string why;
  const bool ok = validate_schema(schema, value, &why);
  INFO(why);
  REQUIRE(ok);
}

}  // namespace

TEST_CASE("JSON outputs validate against the shipped schemas") {
  const std::string params = write_temp("schema.json", kGoodParams);
  require_valid(load_schema("params.schema.json"), json::parse(kGoodParams));

  const RunResult spectrum = run_cli("spectrum --params " + params);
  REQUIRE(spectrum.exit_code == 0);
  require_valid(load_schema("spectrum.schema.json"),
                json::parse(spectrum.output));

  const RunResult sector = run_cli("sector --params " + params + " --t 0.9");
  REQUIRE(sector.exit_code == 0);
  require_valid(load_schema("sector.schema.json"), json::parse(sector.output));

  const RunResult evolve = run_cli("evolve --params " + params +
                                   " --t0 0 --t1 2 --steps 3 --format json");
  REQUIRE(evolve.exit_code == 0);
  require_valid(load_schema("evolve.schema.json"), json::parse(evolve.output));

  const RunResult synth = run_cli(
      "synthesize --axis x --target \"axis=0.6,0,0.8;angle=0.5\"");
  REQUIRE(synth.exit_code == 0);
  require_valid(load_schema("synthesize.schema.json"),
                json::parse(synth.output));

  const RunResult loops = run_cli("loops --params " + params + " --horizon 10");
  REQUIRE(loops.exit_code == 0);
  require_valid(load_schema("loops.schema.json"), json::parse(loops.output));
}

TEST_CASE("results can be written to a file") {
  const std::string params = write_temp("good5.json", kGoodParams);
  const std::string out = "/tmp/bellsector_test_out.json";
  std::remove(out.c_str());
  const RunResult r =
      run_cli("sector --params " + params + " --t 0.7 --out " + out);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  const json doc = json::parse(in);
  REQUIRE(doc["axis"] == "z");
  REQUIRE(doc["sectors"].size() == 2);
}
