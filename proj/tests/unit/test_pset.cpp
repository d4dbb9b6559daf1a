#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "dynfpt/pset.hpp"

using namespace dynfpt;

TEST_CASE("insert and remove are persistent") {
  PSet empty;
  PSet five = empty.insert(5);
  CHECK(five.to_vector() == std::vector<Vertex>{5});
  CHECK(empty.empty());

  PSet s = PSet().insert(1).insert(2);
  PSet t = s.remove(1);
  CHECK(t.to_vector() == std::vector<Vertex>{2});
  CHECK(s.to_vector() == std::vector<Vertex>{1, 2});

  try {
    (void)PSet().insert(3).insert(3);
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateElement);
  }
  CHECK_THROWS_AS((void)s.remove(9), Error);
}

TEST_CASE("copies diverge independently") {
  CHECK(PSet().copy().empty());
  PSet s = PSet().insert(1).insert(2);
  PSet t = s.copy();
  PSet t2 = t.insert(9);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 2});
  CHECK(t2.to_vector() == std::vector<Vertex>{1, 2, 9});
  PSet shrunk = s.remove(2);
  CHECK(t.to_vector() == std::vector<Vertex>{1, 2});
  CHECK(shrunk.size() == 1);
}

TEST_CASE("take returns the smallest elements") {
  PSet s = PSet().insert(9).insert(4).insert(7);
  CHECK(s.take(2) == std::vector<Vertex>{4, 7});
  CHECK(PSet().insert(4).take(5) == std::vector<Vertex>{4});
  CHECK(PSet().take(3).empty());
}

TEST_CASE("random versions agree with copied sorted sets") {
  std::mt19937 rng(7);
  std::vector<PSet> versions{PSet()};
  std::vector<std::set<Vertex>> shadow{{}};
  for (int step = 0; step < 10000; ++step) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, versions.size() - 1)(rng);
    const Vertex x = std::uniform_int_distribution<Vertex>(0, 60)(rng);
    const int op = std::uniform_int_distribution<int>(0, 3)(rng);
    if (op == 0) {
      versions.push_back(versions[i].copy());
      shadow.push_back(shadow[i]);
    } else if (op == 1 && !shadow[i].count(x)) {
      versions.push_back(versions[i].insert(x));
      shadow.push_back(shadow[i]);
      shadow.back().insert(x);
    } else if (op == 2 && shadow[i].count(x)) {
      versions.push_back(versions[i].remove(x));
      shadow.push_back(shadow[i]);
      shadow.back().erase(x);
    } else {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
      std::vector<Vertex> expect(shadow[i].begin(), shadow[i].end());
      expect.resize(std::min(k, expect.size()));
      REQUIRE(versions[i].take(k) == expect);
    }
    if (versions.size() > 200) {
      versions.erase(versions.begin() + 1);
      shadow.erase(shadow.begin() + 1);
    }
  }
  for (std::size_t i = 0; i < versions.size(); ++i) {
    REQUIRE(versions[i].to_vector() == std::vector<Vertex>(shadow[i].begin(), shadow[i].end()));
    REQUIRE(versions[i].size() == shadow[i].size());
  }
}

TEST_CASE("updates allocate a logarithmic number of nodes") {
  PSet s;
  for (Vertex v = 0; v < 1024; ++v) s = s.insert(v);
  const auto before = PSet::allocated_nodes();
  const int updates = 2000;
  std::mt19937 rng(3);
  for (int i = 0; i < updates; ++i) {
    const Vertex v = std::uniform_int_distribution<Vertex>(0, 2047)(rng);
    s = s.contains(v) ? s.remove(v) : s.insert(v);
  }
  const double per_update = double(PSet::allocated_nodes() - before) / updates;
  // log2(2048) = 11; allow a factor of 4 for rebalancing copies.
  CHECK(per_update <= 4 * 11);
}
