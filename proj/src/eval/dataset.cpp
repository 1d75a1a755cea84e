#include "dac/eval/dataset.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "dac/error.hpp"

namespace dac::eval {

namespace {

using nlohmann::json;

std::string required_string(const json& doc, const char* field, std::size_t line) {
  if (!doc.contains(field)) throw SchemaError(line, std::string("missing field \"") + field + "\"");
  if (!doc[field].is_string()) {
    throw SchemaError(line, std::string("field \"") + field + "\" must be a string");
  }
  return doc[field].get<std::string>();
}

tasks::DigitString digits_field(const json& doc, const char* field, std::size_t line) {
  try {
    return tasks::DigitString(required_string(doc, field, line));
  } catch (const NonDigitInput& e) {
    throw SchemaError(line, std::string("field \"") + field + "\": " + e.what());
  }
}

tasks::MultiplicationInstance parse_multiplication(const json& doc, std::size_t line) {
  tasks::MultiplicationInstance inst{digits_field(doc, "a", line), digits_field(doc, "b", line),
                                     digits_field(doc, "ground_truth", line)};
  if (inst.ground_truth.canonical() != tasks::exact_multiply(inst.a, inst.b)) {
    throw SchemaError(line, "ground_truth is not the product of a and b");
  }
  return inst;
}

VerificationInstance parse_verification(const json& doc, std::size_t line, bool require_labels) {
  VerificationInstance inst;
  inst.id = required_string(doc, "id", line);
  inst.document = required_string(doc, "document", line);
  inst.candidate = required_string(doc, "candidate", line);
  if (inst.document.empty() || inst.candidate.empty()) {
    throw SchemaError(line, "document and candidate must be non-empty");
  }
  if (doc.contains("label")) {
    try {
      inst.label = tasks::label_from_string(required_string(doc, "label", line));
    } catch (const PreconditionViolation& e) {
      throw SchemaError(line, e.what());
    }
  } else if (require_labels) {
    throw SchemaError(line, "missing field \"label\"");
  }
  if (doc.contains("contradicting")) {
    const auto& list = doc["contradicting"];
    if (!list.is_array()) throw SchemaError(line, "field \"contradicting\" must be an array");
    for (const auto& s : list) {
      if (!s.is_string()) throw SchemaError(line, "\"contradicting\" entries must be strings");
      inst.contradicting.push_back(s.get<std::string>());
    }
  }
  return inst;
}

}  // namespace

core::TaskKind task_kind(const Dataset& dataset) {
  if (const auto* v = std::get_if<VerificationDataset>(&dataset)) return v->kind;
  return core::TaskKind::multiplication;
}

std::size_t size(const Dataset& dataset) {
  return std::visit([](const auto& d) { return d.instances.size(); }, dataset);
}

Dataset load_dataset(const std::filesystem::path& path, core::TaskKind kind,
                     bool require_labels) {
  if (kind == core::TaskKind::bsi) throw DatasetError("bsi has no instance dataset");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot read dataset: " + path.string());

  MultiplicationDataset mul;
  VerificationDataset ver{kind, {}};
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw SchemaError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError(line, "expected a JSON object");
    if (kind == core::TaskKind::multiplication) {
      mul.instances.push_back(parse_multiplication(doc, line));
    } else {
      ver.instances.push_back(parse_verification(doc, line, require_labels));
    }
  }
  if (kind == core::TaskKind::multiplication) return mul;
  return ver;
}

void write_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DatasetError("cannot write dataset: " + path.string());
  if (const auto* mul = std::get_if<MultiplicationDataset>(&dataset)) {
    for (const auto& inst : mul->instances) {
      out << json{{"a", inst.a.str()}, {"b", inst.b.str()},
                  {"ground_truth", inst.ground_truth.str()}}
                 .dump()
          << '\n';
    }
  } else {
    for (const auto& inst : std::get<VerificationDataset>(dataset).instances) {
      json doc = {{"id", inst.id}, {"document", inst.document}, {"candidate", inst.candidate}};
      if (inst.label) doc["label"] = std::string(tasks::to_string(*inst.label));
      if (!inst.contradicting.empty()) doc["contradicting"] = inst.contradicting;
      out << doc.dump() << '\n';
    }
  }
  if (!out) throw DatasetError("write failed: " + path.string());
}

}  // namespace dac::eval
