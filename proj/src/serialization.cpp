#include "girr/serialization.hpp"

#include <fstream>
#include <sstream>

namespace girr {

namespace {

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

Json to_json(const RunConfig& c) {
  return {{"seed", c.seed},
          {"order_bound", c.order_bound},
          {"conductor_bound", c.conductor_bound},
          {"format", c.format},
          {"parallelism", c.parallelism}};
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  Json doc{{"degree", g.degree()}, {"generators", gens}};
  if (!g.name().empty()) doc["name"] = g.name();
  return doc;
}

PermGroup group_from_json(const Json& doc, std::int64_t order_bound) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators")) {
    throw MalformedGroupFile("GroupFile needs \"degree\" and \"generators\"");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "degree" && key != "generators" && key != "name") throw MalformedGroupFile("unknown key \"" + key + "\"");
  }
  if (!doc["degree"].is_number_unsigned()) throw MalformedGroupFile("degree must be a nonnegative integer");
  const auto degree = doc["degree"].get<std::size_t>();
  if (!doc["generators"].is_array()) throw MalformedGroupFile("generators must be an array");
  std::vector<Permutation> gens;
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_array() || gen.size() != degree) throw MalformedGroupFile("generator length differs from degree");
    std::vector<std::uint32_t> images;
    for (const auto& x : gen) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= degree) throw MalformedGroupFile("image out of range");
      images.push_back(x.get<std::uint32_t>());
    }
    try {
      gens.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      throw MalformedGroupFile(e.what());
    }
  }
  PermGroup g = group_from_generators(degree, gens, order_bound);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw MalformedGroupFile("name must be a string");
    g.set_name(doc["name"].get<std::string>());
  }
  return g;
}

std::string serialize_group(const PermGroup& g) { return group_to_json(g).dump() + "\n"; }

PermGroup parse_group(const std::string& text, std::int64_t order_bound) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedGroupFile(e.what());
  }
  return group_from_json(doc, order_bound);
}

PermGroup read_group_file(const std::filesystem::path& path, std::int64_t order_bound) {
  std::ifstream in(path);
  if (!in) throw MalformedGroupFile("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), order_bound);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Json table_to_json(const CharacterTable& t) {
  const auto& cs = t.classes();
  Json classes = Json::array();
  for (const auto& c : cs.classes) classes.push_back({{"size", c.size}, {"elt_order", c.element_order}});
  Json values = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) row.push_back(t.value(i, k).to_string());
    values.push_back(std::move(row));
  }
  return {{"order", t.group().order()}, {"exponent", t.exponent()}, {"classes", classes},
          {"degrees", t.degrees()},     {"values", values}};
}

std::string table_to_text(const CharacterTable& t) {
  std::ostringstream out;
  const auto& cs = t.classes();
  out << "order " << t.group().order() << ", exponent " << t.exponent() << ", " << t.size() << " classes\n";
  out << "class sizes:";
  for (const auto& c : cs.classes) out << ' ' << c.size;
  out << "\nelement orders:";
  for (const auto& c : cs.classes) out << ' ' << c.element_order;
  out << "\ndegrees:";
  for (std::size_t i = 0; i < t.size(); ++i) out << ' ' << t.degree(i);
  out << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "X." << i + 1 << ':';
    for (std::size_t k = 0; k < t.size(); ++k) out << "  " << t.value(i, k).to_string();
    out << '\n';
  }
  return out.str();
}

Json report_to_json(const ClassificationReport& r) {
  const auto& w = r.witnesses;
  Json checklist = Json::array();
  for (const auto& item : r.checklist) {
    checklist.push_back({{"name", item.name}, {"value", item.value ? Json(*item.value) : Json(nullptr)}});
  }
  return {{"group", r.group_name},
          {"verdict", to_string(r.verdict)},
          {"case_tag", r.case_tag ? Json(to_string(*r.case_tag)) : Json(nullptr)},
          {"witnesses",
           {{"p", w.p}, {"n", w.n}, {"d", w.d}, {"order", w.order}, {"order_P", w.order_p}, {"order_U", w.order_u},
            {"order_K", w.order_k}, {"order_H", w.order_h}, {"order_C", w.order_c}}},
          {"checklist", checklist},
          {"irr_s", r.irr_s},
          {"irr_s_degrees", r.irr_s_degrees},
          {"galois_orbits_in_irr_s", r.galois_orbits_in_irr_s},
          {"failure_reason", optional_string(r.failure_reason)},
          {"first_structural_failure", optional_string(r.first_structural_failure)},
          {"theorem_violations", r.theorem_violations},
          {"solvable", r.solvable},
          {"fitting_height_at_most_two", r.fitting_height_at_most_two},
          {"single_class", r.single_class},
          {"structural_match", r.structural_match}};
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream out;
  const auto& w = r.witnesses;
  out << "group: " << (r.group_name.empty() ? "(unnamed)" : r.group_name) << " (order " << w.order << ")\n";
  out << "verdict: " << to_string(r.verdict);
  if (r.case_tag) out << ", case " << to_string(*r.case_tag);
  out << '\n';
  if (r.verdict != Verdict::NilpotentEmpty) {
    out << "p=" << w.p << " n=" << w.n << " d=" << w.d << " |P|=" << w.order_p << " |U|=" << w.order_u
        << " |K|=" << w.order_k << " |H|=" << w.order_h << " |C|=" << w.order_c << '\n';
  }
  out << "irr_s degrees:";
  for (auto d : r.irr_s_degrees) out << ' ' << d;
  out << '\n';
  for (const auto& item : r.checklist) {
    out << "  [" << (item.value ? (*item.value ? "x" : " ") : "-") << "] " << item.name << '\n';
  }
  if (r.failure_reason) out << "failure: " << *r.failure_reason << '\n';
  if (r.first_structural_failure) out << "first structural failure: " << *r.first_structural_failure << '\n';
  for (const auto& v : r.theorem_violations) out << v << '\n';
  return out.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace girr
