#include "itc/document.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "itc/errors.hpp"

namespace itc {
namespace {

const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int PositiveInt(const Json& doc, const char* key) {
  const Json& v = Field(doc, key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 64) {
    throw InputError(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<int>();
}

double Finite(const Json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(where + " must be finite");
  return x;
}

std::vector<int> OneBasedIndex(const Json& idx, int order, int dim) {
  if (!idx.is_array() || static_cast<int>(idx.size()) != order) {
    throw InputError("COO index must be an array of " + std::to_string(order) + " integers");
  }
  std::vector<int> out;
  for (const Json& i : idx) {
    if (!i.is_number_integer()) throw InputError("COO index entries must be integers");
    const long long v = i.get<long long>();
    if (v < 1 || v > dim) {
      throw InputError("COO index " + idx.dump() + " is outside [1, " + std::to_string(dim) + "]");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

DenseTensor ParseCoo(const Json& entries, int order, int dim, bool closure) {
  if (!entries.is_array()) throw InputError("COO 'entries' must be an array");
  std::vector<CooEntry> coo;
  for (const Json& e : entries) {
    coo.push_back(CooEntry{OneBasedIndex(Field(e, "idx"), order, dim),
                           Finite(Field(e, "value"), "COO value")});
  }
  if (!closure) return DenseTensor::FromCoo(order, dim, coo);

  std::map<std::vector<int>, double> expanded;
  for (const CooEntry& e : coo) {
    std::vector<int> index = e.index;
    std::sort(index.begin(), index.end());
    do {
      const auto [it, inserted] = expanded.emplace(index, e.value);
      if (!inserted && it->second != e.value) {
        std::string name;
        for (int i : index) name += std::to_string(i);
        throw InputError("symmetric_closure conflict at index " + name);
      }
    } while (std::next_permutation(index.begin(), index.end()));
  }
  std::vector<CooEntry> full;
  for (const auto& [index, value] : expanded) full.push_back(CooEntry{index, value});
  return DenseTensor::FromCoo(order, dim, full);
}

}  // namespace

DenseTensor ParseTensorDocument(const Json& doc) {
  const int order = PositiveInt(doc, "order");
  const int dim = PositiveInt(doc, "dim");
  const Json& format = Field(doc, "format");
  const Json& entries = Field(doc, "entries");
  bool closure = false;
  if (const auto it = doc.find("symmetric_closure"); it != doc.end()) {
    if (!it->is_boolean()) throw InputError("'symmetric_closure' must be a boolean");
    closure = it->get<bool>();
  }
  if (format == "coo") return ParseCoo(entries, order, dim, closure);
  if (format != "dense") throw InputError("'format' must be \"coo\" or \"dense\"");
  if (closure) throw InputError("'symmetric_closure' applies to the coo format only");
  if (!entries.is_array()) throw InputError("dense 'entries' must be an array");
  std::vector<double> values;
  values.reserve(entries.size());
  for (const Json& v : entries) values.push_back(Finite(v, "dense entry"));
  DenseTensor probe(order, dim);
  if (values.size() != probe.size()) {
    throw InputError("dense 'entries' has " + std::to_string(values.size()) +
                     " values, expected " + std::to_string(probe.size()));
  }
  return DenseTensor(order, dim, std::move(values));
}

Json EmitTensorDocument(const DenseTensor& a, TensorFormat format) {
  Json doc;
  doc["order"] = a.order();
  doc["dim"] = a.dim();
  if (format == TensorFormat::kDense) {
    doc["format"] = "dense";
    doc["entries"] = std::vector<double>(a.entries().begin(), a.entries().end());
    return doc;
  }
  doc["format"] = "coo";
  Json entries = Json::array();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0.0) continue;
    std::vector<int> index = a.MultiIndex(k);
    for (int& i : index) ++i;
    entries.push_back(Json{{"idx", index}, {"value", a[k]}});
  }
  doc["entries"] = std::move(entries);
  return doc;
}

IntervalTensor ParseIntervalDocument(const Json& doc) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  const bool bounds = doc.contains("lower") || doc.contains("upper");
  const bool center = doc.contains("center") || doc.contains("radius");
  if (bounds == center) {
    throw InputError("interval document needs exactly one of {lower, upper} or {center, radius}");
  }
  if (bounds) {
    return IntervalTensor::FromBounds(ParseTensorDocument(Field(doc, "lower")),
                                      ParseTensorDocument(Field(doc, "upper")));
  }
  return IntervalTensor(ParseTensorDocument(Field(doc, "center")),
                        ParseTensorDocument(Field(doc, "radius")));
}

Json EmitIntervalDocument(const IntervalTensor& interval, TensorFormat format) {
  return Json{{"center", EmitTensorDocument(interval.center(), format)},
              {"radius", EmitTensorDocument(interval.radius(), format)}};
}

std::variant<DenseTensor, IntervalTensor> ParseAnyDocument(const Json& doc) {
  if (doc.is_object() && doc.contains("order")) return ParseTensorDocument(doc);
  return ParseIntervalDocument(doc);
}

Json VerdictToJson(const Verdict& verdict) {
  Json doc;
  doc["schema"] = 1;
  doc["status"] = std::string(ToString(verdict.status));
  doc["certified"] = std::string(ToString(verdict.certified));
  if (verdict.witness) doc["witness"] = *verdict.witness;
  doc["certificates"] = verdict.certificates;
  if (!verdict.per_vertex.empty()) {
    Json vertices = Json::array();
    for (const VertexVerdict& v : verdict.per_vertex) {
      vertices.push_back(Json{{"z", std::vector<int>(v.z.signs().begin(), v.z.signs().end())},
                              {"status", std::string(ToString(v.status))},
                              {"certified", std::string(ToString(v.certified))}});
    }
    doc["per_vertex"] = std::move(vertices);
  }
  doc["diagnostics"] = verdict.diagnostics;
  return doc;
}

}  // namespace itc
