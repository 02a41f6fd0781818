#include "simvote/records_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "simvote/error.hpp"
#include "support/fixtures.hpp"

namespace simvote {
namespace {

using namespace simvote::testing;

TEST(ParseRecordsTest, IdsCommentsAndBlankLines) {
    const auto records = parse_records(
        "# header comment\n"
        "r17: Canada, Colombia, Venezuela\n"
        "\n"
        "USA,Mexico\n"
        "  x : Australia  \n");
    ASSERT_EQ(records.size(), 3U);
    EXPECT_EQ(*records[0].id, "r17");
    EXPECT_EQ(records[0].values, (std::vector<std::string>{"Canada", "Colombia", "Venezuela"}));
    EXPECT_EQ(records[0].line, 2U);
    EXPECT_EQ(*records[1].id, "4");
    EXPECT_EQ(records[1].values, (std::vector<std::string>{"USA", "Mexico"}));
    EXPECT_EQ(*records[2].id, "x");
    EXPECT_EQ(records[2].values, (std::vector<std::string>{"Australia"}));
}

TEST(ParseRecordsTest, EmptyRecordParsesButEmptyCellDoesNot) {
    const auto records = parse_records("r1:\n");
    ASSERT_EQ(records.size(), 1U);
    EXPECT_TRUE(records[0].values.empty());
    EXPECT_THROW(parse_records("a,,b\n"), Error);
    EXPECT_THROW(parse_records(": a, b\n"), Error);
}

TEST(ParseRecordsTest, WriteThenParse) {
    const std::vector<FuzzyRecord> records{{"r000001", {"v00", "v07"}, 0}, {"r000002", {"v31"}, 0}};
    std::ostringstream out;
    write_records(out, records);
    EXPECT_EQ(out.str(), "r000001: v00, v07\nr000002: v31\n");
    const auto back = parse_records(out.str());
    ASSERT_EQ(back.size(), 2U);
    EXPECT_EQ(back[0].values, records[0].values);
    EXPECT_EQ(back[1].id, records[1].id);
}

TEST(DistributionCsvTest, RowsAndSkips) {
    const auto tree = build_partition_tree(parse_similarity_matrix(kCountryCsv));
    const auto records = parse_records("r1: Canada, Colombia, Venezuela\nr2: Atlantis\nr3: Australia, N.ZInd\n");
    const auto items = defuzzify_batch(tree, records, {UnknownLabelPolicy::Skip, 1});
    std::ostringstream out;
    write_distribution_csv(out, tree.domain(), items);
    EXPECT_EQ(out.str(),
              "record_id,label,weight\n"
              "r1,Colombia,0.3793103448275862\n"
              "r1,Venezuela,0.3793103448275862\n"
              "r1,Canada,0.24137931034482754\n"
              "r2,SKIPPED,Atlantis\n"
              "r3,Australia,0.5\n"
              "r3,N.ZInd,0.5\n");
}

TEST(TraceFormatTest, TableLayout) {
    const Domain d({"a", "b"});
    const std::vector<TraceEvent> events{{LabelSet::of(2, {0, 1}), 0.0, false}, {LabelSet::of(2, {0, 1}), 0.5, true}};
    EXPECT_EQ(format_trace(d, events), "OUTPUT\tCOMMENTS\n{a, b} 0.0\tSTORED\n{a, b} 0.5\tSTORED, UPDATED\n");
}

}  // namespace
}  // namespace simvote
