#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ekcodes/io.hpp"

namespace ekc {

using Json = nlohmann::ordered_json;

namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw FormatError(std::string("key \"") + key + "\" has the wrong type");
  }
}

}  // namespace

std::string code_to_json(const Code& code) {
  Json out;
  out["n"] = code.params.n;
  out["k"] = code.params.k;
  out["s"] = code.params.s;
  out["q"] = code.params.q;
  out["d"] = code.design_distance;
  out["words"] = code.words;
  if (code.verified_min_distance) {
    out["verified_min_distance"] = *code.verified_min_distance;
  } else {
    out["verified_min_distance"] = nullptr;
  }
  return out.dump();
}

Code code_from_json(std::string_view text) {
  const Json in = parse(text);
  if (!in.is_object()) throw FormatError("code file must hold a JSON object");
  CodeParams params;
  params.n = field<int>(in, "n");
  params.k = field<int>(in, "k");
  params.s = field<int>(in, "s");
  params.q = field<int>(in, "q");
  const int d = field<int>(in, "d");
  auto words = field<std::vector<Codeword>>(in, "words");
  Code code = make_code(params, d, std::move(words));
  if (in.contains("verified_min_distance") && !in["verified_min_distance"].is_null()) {
    code.verified_min_distance = field<int>(in, "verified_min_distance");
  }
  return code;
}

std::string design_to_json(const BlockDesign& design) {
  Json out;
  out["v"] = design.v;
  out["t"] = design.t;
  out["blocks"] = design.blocks;
  return out.dump();
}

BlockDesign design_from_json(std::string_view text) {
  const Json in = parse(text);
  if (!in.is_object()) throw FormatError("design file must hold a JSON object");
  BlockDesign design;
  design.v = field<int>(in, "v");
  design.t = field<int>(in, "t");
  design.blocks = field<std::vector<std::vector<int>>>(in, "blocks");
  if (design.v < 0 || design.t < 1) throw FormatError("design needs v >= 0 and t >= 1");
  for (auto& block : design.blocks) std::sort(block.begin(), block.end());
  return design;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << contents;
  if (!out) throw ParameterError("write failed for " + path);
}

}  // namespace ekc
