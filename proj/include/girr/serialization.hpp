#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "girr/char_table.hpp"
#include "girr/classify.hpp"
#include "girr/perm_group.hpp"

namespace girr {

using Json = nlohmann::json;

class MalformedGroupFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::int64_t order_bound = kDefaultOrderBound;
  std::int64_t conductor_bound = 10'000;
  std::string format = "json";
  int parallelism = 1;
};

Json to_json(const RunConfig& config);

/// GroupFile: {"degree": d, "generators": [[images...], ...], "name": s}.
/// The name is omitted when empty.
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& doc, std::int64_t order_bound = kDefaultOrderBound);
/// Compact dump with sorted keys and a trailing newline.
std::string serialize_group(const PermGroup& g);
PermGroup parse_group(const std::string& text, std::int64_t order_bound = kDefaultOrderBound);
PermGroup read_group_file(const std::filesystem::path& path, std::int64_t order_bound = kDefaultOrderBound);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {order, exponent, classes:[{size, elt_order}], degrees, values}
Json table_to_json(const CharacterTable& t);
std::string table_to_text(const CharacterTable& t);

Json report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& doc);

}  // namespace girr
