#include "itc/corpus.hpp"

#include <map>
#include <utility>

#include "itc/errors.hpp"

namespace itc {
namespace {

using Entries = std::vector<std::pair<std::string, double>>;

struct Instance {
  Entries center;
  Entries radius;
};

constexpr double kTwoThirds = 2.0 / 3.0;

const std::map<std::string, Instance>& Instances() {
  static const std::map<std::string, Instance> instances = {
      {"theorem-5.1", {{{"1122", 1.0}, {"1133", 1.0}}, {{"1123", 1.0}}}},
      {"theorem-5.2a", {{{"3333", 1.0}, {"2233", kTwoThirds}}, {{"2333", 1.0}}}},
      {"theorem-5.2b",
       {{{"3333", 1.0}, {"2233", kTwoThirds}, {"1122", 1.0}, {"1133", 1.0}},
        {{"2333", 1.0}, {"1123", 1.0}}}},
      {"theorem-5.3a",
       {{{"2222", 1.0}, {"3333", 1.0}, {"1122", 1.0}, {"1133", 1.0}, {"2233", 1.0}},
        {{"2223", 1.0}, {"2333", 1.0}, {"1123", 1.0}}}},
      {"theorem-5.3b",
       {{{"2222", 1.0}, {"3333", 1.0}, {"1122", kTwoThirds}, {"1133", 1.0}, {"2233", 1.0}},
        {{"2333", 1.0}, {"1223", 1.0}}}},
      {"theorem-5.4a",
       {{{"1111", 1.0}, {"2222", 1.0}, {"3333", 1.0},
         {"1122", kTwoThirds}, {"1133", kTwoThirds}, {"2233", kTwoThirds}},
        {{"1112", 1.0}, {"2223", 1.0}, {"1333", 1.0}}}},
      {"theorem-5.4b",
       {{{"1111", 1.0}, {"2222", 1.0}, {"3333", 1.0},
         {"1122", 1.0}, {"1133", 1.0}, {"2233", 1.0}},
        {{"1112", 1.0}, {"2223", 1.0}, {"1233", 1.0}}}},
  };
  return instances;
}

Json TensorJson(const Entries& entries) {
  Json list = Json::array();
  for (const auto& [key, value] : entries) {
    std::vector<int> idx;
    for (char c : key) idx.push_back(c - '0');
    list.push_back(Json{{"idx", idx}, {"value", value}});
  }
  return Json{{"order", 4}, {"dim", 3}, {"format", "coo"}, {"symmetric_closure", true},
              {"entries", std::move(list)}};
}

}  // namespace

const std::vector<std::string>& CorpusNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, instance] : Instances()) out.push_back(name);
    return out;
  }();
  return names;
}

Json CorpusDocument(const std::string& name) {
  const auto it = Instances().find(name);
  if (it == Instances().end()) {
    std::string valid;
    for (const auto& n : CorpusNames()) valid += (valid.empty() ? "" : ", ") + n;
    throw InputError("unknown corpus instance '" + name + "'; valid names: " + valid);
  }
  return Json{{"center", TensorJson(it->second.center)},
              {"radius", TensorJson(it->second.radius)}};
}

IntervalTensor CorpusInstance(const std::string& name) {
  return ParseIntervalDocument(CorpusDocument(name));
}

}  // namespace itc
