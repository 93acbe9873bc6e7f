// Copyright 2026 The ldcat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ldcat/report.hpp"
#include "support.hpp"

namespace ldcat {
namespace {

TEST(Report, KeepsInsertionOrderAndEscapes) {
  Report r;
  r.put("b.key", "two\nlines");
  r.put("a.key", std::size_t{3});
  r.put("flag", true);
  r.put_timing("total", 1.5);
  EXPECT_EQ(r.render(), "ldcat.report.version=1\nb.key=two\\nlines\na.key=3\nflag=true\n# timing\ntiming.total_ms=1.500\n");
  EXPECT_EQ(r.render(false), comparable_section(r.render()));
}

TEST(Report, EmbeddedText) {
  Report r;
  r.put_text("model", "object a\nid a = auto\n");
  ASSERT_EQ(r.entries().size(), 3u);
  EXPECT_EQ(r.entries()[0], (std::pair<std::string, std::string>{"model.line.0001", "object a"}));
  EXPECT_EQ(r.entries()[1].second, "id a = auto");
  EXPECT_EQ(r.entries()[2], (std::pair<std::string, std::string>{"model.lines", "2"}));
}

TEST(Report, EscapeBackslashAndTab) { EXPECT_EQ(escape_value("a\\b\tc"), "a\\\\b\\tc"); }

TEST(Report, ValidationSection) {
  const FinCategory c = testing::h2();
  Report r;
  add_validation(r, c, validate_category(c.with_composite(testing::arr(c, "id_top"), testing::arr(c, "u"),
                                                          testing::arr(c, "id_top"))));
  const std::string text = r.render(false);
  EXPECT_NE(text.find("validation.verdict=FAIL\n"), std::string::npos);
  EXPECT_NE(text.find("validation.violation.0001="), std::string::npos);
}

}  // namespace
}  // namespace ldcat
