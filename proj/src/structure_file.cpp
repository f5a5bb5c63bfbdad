#include "hyperforge/structure_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hyperforge {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::kParse, msg); }

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

class Names {
 public:
  explicit Names(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (!index_.emplace(names[i], static_cast<Element>(i)).second) fail("duplicate element name '" + names[i] + "'");
    }
  }

  Element operator()(const Json& name) const {
    if (!name.is_string()) fail("element names must be strings");
    auto it = index_.find(name.get<std::string>());
    if (it == index_.end()) fail("unknown element '" + name.get<std::string>() + "'");
    return it->second;
  }

 private:
  std::map<std::string, Element> index_;
};

}  // namespace

StructureFile parse_structure(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("document must be an object");
  for (const auto& [key, value] : doc.items()) {
    static const std::set<std::string> known = {"n", "elements", "op", "le", "grades"};
    if (!known.count(key)) fail("unknown key '" + key + "'");
  }

  const Json& jn = field(doc, "n");
  if (!jn.is_number_integer()) fail("'n' must be an integer");
  const int n = jn.get<int>();
  if (n < 1 || n > kMaxCarrier) {
    throw Error(ErrorKind::kCarrierTooLarge, "carrier size " + std::to_string(n) + " outside [1, 16]");
  }

  StructureFile f{HyperStructure(HyperOp(n)), {}, {}};
  if (auto it = doc.find("elements"); it != doc.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n) fail("'elements' must list n names");
    for (const Json& name : *it) {
      if (!name.is_string()) fail("element names must be strings");
      f.elements.push_back(name.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) f.elements.push_back(std::to_string(i));
  }
  const Names names(f.elements);

  const Json& rows = field(doc, "op");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) fail("'op' must have n rows");
  HyperOp op(n);
  for (Element a = 0; a < n; ++a) {
    const Json& row = rows[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n) fail("every 'op' row must have n entries");
    for (Element b = 0; b < n; ++b) {
      const Json& entry = row[b];
      if (!entry.is_array()) fail("'op' entries must be lists of names");
      if (entry.empty()) {
        throw Error(ErrorKind::kEmptyEntry,
                    "op entry (" + f.elements[a] + ", " + f.elements[b] + ") is empty");
      }
      ElementSet cell;
      for (const Json& name : entry) cell.insert(names(name));
      op.set(a, b, cell);
    }
  }

  std::optional<PartialOrder> order;
  if (auto it = doc.find("le"); it != doc.end()) {
    if (!it->is_array()) fail("'le' must be a list of pairs");
    PartialOrder p = PartialOrder::discrete(n);
    for (const Json& pair : *it) {
      if (!pair.is_array() || pair.size() != 2) fail("'le' entries must be [lower, upper] pairs");
      p.set(names(pair[0]), names(pair[1]), true);
    }
    order = p;
  }
  f.structure = HyperStructure(std::move(op), std::move(order));
  validate(f.structure);

  if (auto it = doc.find("grades"); it != doc.end()) {
    if (!it->is_object()) fail("'grades' must be an object");
    for (const auto& [name, values] : it->items()) {
      if (!values.is_array() || static_cast<int>(values.size()) != n) fail("grades '" + name + "' must have n values");
      FuzzySubset g;
      for (const Json& v : values) {
        if (!v.is_string()) fail("grades must be \"p/q\" strings");
        g.push_back(parse_grade(v.get<std::string>()));
      }
      f.grades.emplace(name, std::move(g));
    }
  }
  return f;
}

std::string print_structure(const StructureFile& f) {
  const HyperStructure& s = f.structure;
  const int n = s.size();
  auto set_json = [&](ElementSet set) {
    Json out = Json::array();
    for (Element e : set) out.push_back(f.elements[e]);
    return out;
  };
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << n << ",\n";
  out << "  \"elements\": " << Json(f.elements).dump() << ",\n";
  out << "  \"op\": [\n";
  for (Element a = 0; a < n; ++a) {
    Json row = Json::array();
    for (Element b = 0; b < n; ++b) row.push_back(set_json(s(a, b)));
    out << "    " << row.dump() << (a + 1 < n ? ",\n" : "\n");
  }
  out << "  ]";
  if (s.has_order()) {
    Json le = Json::array();
    for (Element a = 0; a < n; ++a) {
      for (Element b : s.order().up(a)) {
        if (a != b) le.push_back(Json::array({f.elements[a], f.elements[b]}));
      }
    }
    out << ",\n  \"le\": " << le.dump();
  }
  if (!f.grades.empty()) {
    out << ",\n  \"grades\": {\n";
    size_t i = 0;
    for (const auto& [name, g] : f.grades) {
      Json values = Json::array();
      for (const Grade& v : g) values.push_back(format_grade(v));
      out << "    " << Json(name).dump() << ": " << values.dump() << (++i < f.grades.size() ? ",\n" : "\n");
    }
    out << "  }";
  }
  out << "\n}\n";
  return out.str();
}

StructureFile with_default_names(const HyperStructure& s) {
  StructureFile f{s, {}, {}};
  for (int i = 0; i < s.size(); ++i) f.elements.push_back(std::to_string(i));
  return f;
}

StructureFile load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_structure(text.str());
}

}  // namespace hyperforge
