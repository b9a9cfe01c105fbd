#include <gtest/gtest.h>

#include <cstdlib>

#include "higgs/parallel.hpp"

using namespace higgs;

TEST(Parallel, OrderPreserved) {
  auto v = parallel_map(1000, [](std::size_t i) { return static_cast<int>(i * i); });
  ASSERT_EQ(v.size(), 1000u);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
}

TEST(Parallel, ExceptionsPropagate) {
  EXPECT_THROW(parallel_map(50,
                            [](std::size_t i) {
                              if (i == 17) throw DomainError("boom");
                              return 0;
                            }),
               DomainError);
}

TEST(Parallel, ThreadEnvironment) {
  setenv("HIGGS_CENSUS_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3u);
  setenv("HIGGS_CENSUS_THREADS", "nope", 1);
  EXPECT_THROW(thread_count(), DomainError);
  setenv("HIGGS_CENSUS_THREADS", "0", 1);
  EXPECT_THROW(thread_count(), DomainError);
  unsetenv("HIGGS_CENSUS_THREADS");
  EXPECT_GE(thread_count(), 1u);
}
