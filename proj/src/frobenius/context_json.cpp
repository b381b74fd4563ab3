#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chebdense/errors.hpp"
#include "chebdense/galois_context.hpp"

namespace chebdense {

using nlohmann::json;

namespace {

CycleType cycle_type_from(const json& j) {
  if (j.is_string()) return CycleType::parse(j.get<std::string>());
  return CycleType::of(j.get<std::vector<unsigned>>());
}

ClassifierMode mode_from(const std::string& s) {
  if (s == "residue") return ClassifierMode::residue;
  if (s == "cycle_type") return ClassifierMode::cycle_type;
  throw ConfigError("unknown classifier mode '" + s + "'");
}

}  // namespace

GaloisContext context_from_json_text(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const ClassifierMode mode = mode_from(doc.at("mode").get<std::string>());
    std::vector<ConjClassSpec> classes;
    for (const auto& c : doc.at("classes")) {
      ConjClassSpec spec;
      spec.id = c.at("id").get<std::string>();
      spec.name = c.value("name", spec.id);
      spec.size = c.at("size").get<u64>();
      if (c.contains("residues")) spec.residues = c.at("residues").get<std::vector<u64>>();
      if (c.contains("cycle_type")) spec.cycle_type = cycle_type_from(c.at("cycle_type"));
      classes.push_back(std::move(spec));
    }
    return GaloisContext::create(doc.at("label").get<std::string>(),
                                 doc.at("poly").get<std::vector<std::int64_t>>(),
                                 doc.at("group_order").get<u64>(), std::move(classes), mode,
                                 doc.value("modulus", u64{0}),
                                 doc.value("excluded_primes", std::vector<u64>{}));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid context document: ") + e.what());
  }
}

GaloisContext load_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open context file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return context_from_json_text(buf.str());
}

std::string context_to_json_text(const GaloisContext& ctx) {
  json doc;
  doc["label"] = ctx.label();
  doc["mode"] = std::string(to_string(ctx.mode()));
  if (ctx.mode() == ClassifierMode::residue) doc["modulus"] = ctx.modulus();
  doc["poly"] = ctx.poly();
  doc["group_order"] = ctx.group_order();
  json classes = json::array();
  for (const auto& c : ctx.classes()) {
    json jc{{"id", c.id}, {"name", c.name}, {"size", c.size}};
    if (ctx.mode() == ClassifierMode::residue) jc["residues"] = c.residues;
    if (c.cycle_type) jc["cycle_type"] = c.cycle_type->parts;
    classes.push_back(std::move(jc));
  }
  doc["classes"] = std::move(classes);
  doc["excluded_primes"] = ctx.excluded_primes();
  return doc.dump(2);
}

}  // namespace chebdense
