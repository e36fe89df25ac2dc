#include <gtest/gtest.h>

#include <sstream>

#include "bcapprox/error.hpp"
#include "bcapprox/sample_log.hpp"

using namespace bcapprox;

TEST(SampleLog, RoundTrip) {
  PathBag bag;
  bag.source = 3;
  bag.target = 7;
  bag.path_length = 2;
  bag.bag_size = 2;
  bag.nodes = {4, 5, 6, 5};
  const std::vector<std::int8_t> signs{1, -1, -1};
  PathBag empty;
  empty.source = 1;
  empty.target = 2;
  std::stringstream buf;
  write_sample_record(buf, bag, signs);
  write_sample_record(buf, empty, signs);
  const auto back = read_sample_log(buf);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].bag.source, 3u);
  EXPECT_EQ(back[0].bag.target, 7u);
  EXPECT_EQ(back[0].bag.bag_size, 2u);
  EXPECT_EQ(back[0].bag.path_length, 2u);
  EXPECT_EQ(back[0].bag.nodes, bag.nodes);
  EXPECT_EQ(back[0].signs, signs);
  EXPECT_EQ(back[1].bag.bag_size, 0u);
}

TEST(SampleLog, MalformedRecords) {
  for (const char* text : {"not json\n", "{\"s\":1}\n",
                           "{\"s\":1,\"t\":2,\"paths\":[[3],[4,5]],\"signs\":[1]}\n",
                           "{\"s\":1,\"t\":2,\"paths\":[],\"signs\":[2]}\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_sample_log(in), ParseError) << text;
  }
}
