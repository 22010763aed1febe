#include <gtest/gtest.h>

#include "girr/serialization.hpp"
#include "small_groups.hpp"

using namespace girr;
namespace ref = girr::reference;

TEST(GroupFile, RoundTrip) {
  auto g = ref::quaternion8();
  const std::string unnamed = serialize_group(g);
  EXPECT_EQ(unnamed.find("name"), std::string::npos);
  g.set_name("Q8");
  const std::string text = serialize_group(g);
  const auto back = parse_group(text);
  EXPECT_EQ(back.order(), 8);
  EXPECT_EQ(back.name(), "Q8");
  EXPECT_EQ(serialize_group(back), text);
  EXPECT_EQ(serialize_group(parse_group(R"({"degree":3,"generators":[[1,2,0],[1,0,2]]})")),
            "{\"degree\":3,\"generators\":[[1,2,0],[1,0,2]]}\n");
}

TEST(GroupFile, Malformed) {
  for (const char* text : {"not json", "[]", R"({"generators":[]})", R"({"degree":3})",
                           R"({"degree":3,"generators":[[0,1]]})", R"({"degree":3,"generators":[[0,0,1]]})",
                           R"({"degree":3,"generators":[[0,1,3]]})", R"({"degree":3,"generators":[[0,1,-2]]})",
                           R"({"degree":3,"generators":[],"extra":1})", R"({"degree":2,"generators":[],"name":5})"}) {
    EXPECT_THROW(parse_group(text), MalformedGroupFile) << text;
  }
  EXPECT_NO_THROW(parse_group(R"({"degree":0,"generators":[]})"));
}

TEST(TableJson, Q8) {
  const auto g = ref::quaternion8();
  const auto t = character_table(g);
  const Json doc = table_to_json(t);
  EXPECT_EQ(doc["order"], 8);
  EXPECT_EQ(doc["exponent"], 4);
  EXPECT_EQ(doc["classes"].size(), 5u);
  EXPECT_EQ(doc["degrees"], Json({1, 1, 1, 1, 2}));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      EXPECT_EQ(CyclotomicNumber::parse(doc["values"][i][k].get<std::string>()), t.value(i, k));
    }
  }
  EXPECT_NE(table_to_text(t).find("degrees: 1 1 1 1 2"), std::string::npos);
}

TEST(ReportJson, FieldsAndDeterminism) {
  const auto g = ref::symmetric(3);
  const auto r = analyze_structure(g, character_table(g));
  const Json doc = report_to_json(r);
  EXPECT_EQ(doc["verdict"], "SingleGaloisClass");
  EXPECT_EQ(doc["case_tag"], "a1");
  for (const char* key : {"p", "n", "d", "order", "order_P", "order_U", "order_K", "order_H", "order_C"}) {
    EXPECT_TRUE(doc["witnesses"].contains(key)) << key;
  }
  EXPECT_EQ(doc["checklist"].size(), 13u);
  EXPECT_TRUE(doc["failure_reason"].is_null());
  const auto again = analyze_structure(g, character_table(g));
  EXPECT_EQ(dump(report_to_json(again)), dump(doc));
  EXPECT_NE(report_to_text(r).find("case a1"), std::string::npos);
}
