#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperrank/io.hpp"

using namespace hyperrank;

namespace {

std::vector<std::string> edge_strings(const Hypergraph& h) {
  std::vector<std::string> out;
  for (const auto& e : h.edges()) {
    std::string s;
    for (const auto& slot : e.support) s += (s.empty() ? "" : ",") + h.label(slot.node);
    out.push_back(s);
  }
  return out;
}

std::vector<std::int64_t> ints(const std::string& text) {
  std::istringstream in(text);
  return read_int_stream(in, "test");
}

}  // namespace

TEST(Decode, Tree5) {
  const auto r = decode_simplicial({3, 2, 2}, {1, 2, 3, 2, 4, 3, 5});
  EXPECT_EQ(r.graph.num_nodes(), 5u);
  EXPECT_EQ(r.graph.labels(), (std::vector<std::string>{"1", "2", "3", "4", "5"}));
  EXPECT_EQ(edge_strings(r.graph), (std::vector<std::string>{"1,2,3", "2,4", "3,5"}));
  EXPECT_EQ(r.report.edges, 3u);
}

TEST(Decode, SingletonDropped) {
  const auto r = decode_simplicial({1, 2}, {7, 1, 2});
  EXPECT_EQ(r.graph.num_edges(), 1u);
  EXPECT_EQ(r.graph.labels(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(r.report.singletons_dropped, 1u);
  EXPECT_EQ(r.report.isolated_dropped, 1u);
}

TEST(Decode, RepeatsAndDuplicates) {
  const auto r = decode_simplicial({3, 2, 2, 2}, {4, 4, 9, 9, 4, 4, 9, 4, 4});
  // {4,4,9} -> {4,9}; {4,4} -> singleton.
  EXPECT_EQ(r.report.simplices_with_repeats, 2u);
  EXPECT_EQ(r.report.singletons_dropped, 1u);
  EXPECT_EQ(r.report.duplicates_merged, 2u);
  ASSERT_EQ(r.graph.num_edges(), 1u);
  EXPECT_EQ(r.graph.edges()[0].weight, 3.0);
}

TEST(Decode, LabelsApplied) {
  const auto r = decode_simplicial({2}, {10, 20}, {{10, "linux"}, {20, "ubuntu"}});
  EXPECT_EQ(r.graph.labels(), (std::vector<std::string>{"linux", "ubuntu"}));
}

TEST(Decode, CountMismatch) {
  EXPECT_THROW(decode_simplicial({3, 2}, {1, 2, 3, 4}), DataError);
  EXPECT_THROW(decode_simplicial({0}, {}), DataError);
}

TEST(ReadInts, Tokens) {
  EXPECT_EQ(ints("1 2\n3\t4\n"), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_THROW(ints("1 2 x"), DataError);
  EXPECT_THROW(ints("1 2.5"), DataError);
}

TEST(ReadLabels, Lines) {
  std::istringstream in("1\tfoo bar\n\n2 baz\r\n");
  const auto m = read_labels(in);
  EXPECT_EQ(m.at(1), "foo bar");
  EXPECT_EQ(m.at(2), "baz");
  std::istringstream bad("x\tfoo\n");
  EXPECT_THROW(read_labels(bad), DataError);
}

TEST(Ingest, FilesAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperrank_io_test";
  std::filesystem::create_directories(dir);
  const auto nv = (dir / "d-nverts.txt").string();
  const auto sx = (dir / "d-simplices.txt").string();
  const auto lb = (dir / "d-node-labels.txt").string();
  std::ofstream(nv) << "3\n2\n2\n";
  std::ofstream(sx) << "1\n2\n3\n2\n4\n3\n5\n";
  std::ofstream(lb) << "1\ta\n2\tb\n3\tc\n4\td\n5\te\n";
  const auto r = ingest_simplicial(nv, sx, lb);
  EXPECT_EQ(r.graph.labels(), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  std::ofstream(nv, std::ios::trunc).flush();
  EXPECT_THROW(ingest_simplicial(nv, sx), DataError);
  EXPECT_THROW(ingest_simplicial((dir / "missing").string(), sx), DataError);
  std::filesystem::remove_all(dir);
}

TEST(Format, TwelveDigits) {
  EXPECT_EQ(format_score(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_score(0.5), "0.5");
  EXPECT_EQ(format_score(std::nan("")), "nan");
}

TEST(Csv, ScoresSortedDescending) {
  std::ostringstream os;
  write_scores_csv(os, {"a", "b", "c"}, {0.2, 0.5, 0.2});
  EXPECT_EQ(os.str(), "label,score\nb,0.5\na,0.2\nc,0.2\n");
}

TEST(Csv, Stats) {
  const auto r = decode_simplicial({3, 2, 2}, {1, 2, 3, 2, 4, 3, 5});
  std::ostringstream os;
  write_stats_csv(os, stats(r.graph));
  EXPECT_EQ(os.str(), "order,nodes,edges,lcc_nodes,lcc_percent\n2,4,2,2,50\n3,3,1,3,100\n");
}
