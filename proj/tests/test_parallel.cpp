// The OpenMP kernels must agree exactly with their serial references.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <memory>

#include "doctest.h"
#include "lexlat/ideal.hpp"
#include "lexlat/local.hpp"
#include "lexlat/root_function.hpp"
#include "testing/helpers.hpp"

using namespace lexlat;
using lexlat::testing::Rng;

TEST_CASE("parallel enumeration matches the serial reference") {
  Rng rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    ForestPoset p = lexlat::testing::random_forest(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(enumerate_ideals_serial(p) == enumerate_ideals_parallel(p));
  }
  std::vector<std::string> ids;
  for (int i = 0; i < 16; ++i) ids.push_back("a" + std::to_string(i));
  ForestPoset wide = ForestPoset::antichain(ids);
  auto serial = enumerate_ideals_serial(wide);
  CHECK(serial.size() == 1u << 16);
  CHECK(serial == enumerate_ideals_parallel(wide));
}

TEST_CASE("parallel compatibility reports match the serial reference") {
  Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    ForestPoset p = lexlat::testing::random_forest(rng, 1 + static_cast<int>(rng() % 8));
    CompatReport a = verify_compatibility_serial(p, 30, 77);
    CompatReport b = verify_compatibility_parallel(p, 30, 77);
    REQUIRE(a.lines.size() == b.lines.size());
    CHECK(a.all_pass == b.all_pass);
    for (size_t i = 0; i < a.lines.size(); ++i) {
      CHECK(a.lines[i].x == b.lines[i].x);
      CHECK(a.lines[i].y == b.lines[i].y);
      CHECK(a.lines[i].axiom == b.lines[i].axiom);
      CHECK(a.lines[i].pass == b.lines[i].pass);
    }
  }
}

TEST_CASE("parallel certification matches the serial reference") {
  auto s = std::make_shared<const ExponentSet>(
      std::vector<Rat>{Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)});
  GridK grid = GridK::reciprocal();
  RootFunction f(s, grid, Germ::from_terms({{Rat(1), Rat(1)}}), {});
  RootFunction g(s, grid, Germ::from_terms({{Rat(3, 2), Rat(3)}}), {});
  RootFunction sup_fg = rf_sup(f, g);
  auto serial = certify_pointwise_max(f, g, sup_fg, 80, -64, 4096, false);
  auto parallel = certify_pointwise_max(f, g, sup_fg, 80, -64, 4096, true);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].equals_max == parallel[i].equals_max);
    CHECK(serial[i].width_ok == parallel[i].width_ok);
  }
}
