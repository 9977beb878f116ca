#include <memory>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "driftstream/instance.hpp"
#include "driftstream/oracle.hpp"
#include "driftstream/rng.hpp"
#include "driftstream/schema.hpp"
#include "driftstream/stream.hpp"

using namespace driftstream;

TEST_CASE("rng reproduces exactly for a seed") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(a == b);
}

TEST_CASE("rng derived draws stay in range") {
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform(-2.0, 3.0);
    CHECK(u >= -2.0);
    CHECK(u < 3.0);
    CHECK(rng.below(7) < 7);
    CHECK(rng.poisson1() >= 0);
  }
}

TEST_CASE("rng gaussian has roughly standard moments") {
  Rng rng(4);
  double sum = 0.0, sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double g = rng.gaussian();
    sum += g;
    sq += g * g;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(sq / n - 1.0) < 0.03);
}

TEST_CASE("rng poisson1 has unit mean") {
  Rng rng(5);
  long total = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) total += rng.poisson1();
  CHECK(std::abs(static_cast<double>(total) / n - 1.0) < 0.01);
}

TEST_CASE("substream separates tags and is stable") {
  static_assert(substream(1, 2) == substream(1, 2));
  CHECK(substream(1, 2) != substream(1, 3));
  CHECK(substream(1, 2) != substream(2, 2));
  // different tags give streams that do not collide in the first draws
  Rng a(substream(77, 1)), b(substream(77, 2));
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    if (a.next_u64() == b.next_u64()) ++equal;
  }
  CHECK(equal == 0);
}

TEST_CASE("schema validation") {
  Schema s;
  s.attributes = {{"x", {}}, {"color", {"red", "green"}}};
  s.class_values = {"a", "b"};
  CHECK_NOTHROW(s.validate());

  SUBCASE("duplicate attribute names rejected") {
    s.attributes.push_back({"x", {}});
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("empty attribute name rejected") {
    s.attributes.push_back({"", {}});
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("single-valued nominal rejected") {
    s.attributes.push_back({"flag", {"only"}});
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("fewer than two classes rejected") {
    s.class_values = {"a"};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("duplicate class values rejected") {
    s.class_values = {"a", "a"};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
}

TEST_CASE("instance missing values") {
  Instance inst;
  inst.values = {1.0, Instance::missing_value(), 2.0};
  CHECK_FALSE(inst.is_missing(0));
  CHECK(inst.is_missing(1));
  CHECK(inst.nominal(2) == 2);
}

static std::shared_ptr<const Schema> tiny_schema() {
  Schema s;
  s.attributes = {{"x", {}}};
  s.class_values = {"a", "b"};
  return std::make_shared<const Schema>(std::move(s));
}

TEST_CASE("vector source yields rows in order, then stays exhausted") {
  std::vector<Instance> rows(3);
  for (int i = 0; i < 3; ++i) {
    rows[i].values = {static_cast<double>(i)};
    rows[i].true_class = i % 2;
  }
  VectorSource source(tiny_schema(), rows);
  for (int i = 0; i < 3; ++i) {
    auto item = source.next();
    REQUIRE(item.has_value());
    CHECK(item->values[0] == static_cast<double>(i));
  }
  CHECK_FALSE(source.next().has_value());
  CHECK_FALSE(source.next().has_value());
}

TEST_CASE("oracle reveals ground truth and counts queries") {
  LabelOracle oracle;
  CHECK(oracle.query_count() == 0);

  Instance inst;
  inst.true_class = 2;
  CHECK(oracle.reveal(inst) == 2);
  CHECK(oracle.query_count() == 1);

  for (int i = 0; i < 999; ++i) oracle.reveal(inst);
  CHECK(oracle.query_count() == 1000);
}
