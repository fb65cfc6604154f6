#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace netcap;

namespace {
std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST(Matroid, UniformMatrices) {
  auto u24 = uniform_matroid(2, 4, 3);
  EXPECT_EQ(u24.matrix().to_rows(), (std::vector<std::vector<std::int64_t>>{{1, 0, 1, 2}, {0, 1, 1, 1}}));
  EXPECT_THROW(uniform_matroid(2, 4, 2), FieldError);
  auto u33 = uniform_matroid(3, 3, 2);
  EXPECT_EQ(u33.matrix().to_rows(), (std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto u03 = uniform_matroid(0, 3, 2);
  EXPECT_EQ(u03.rank(), 0u);
  EXPECT_EQ(enumerate_circuits(u03).size(), 3u);
}

TEST(Matroid, UniformBasesAndCircuits) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::size_t d = 1; d <= 6; ++d)
      for (std::size_t c = 0; c <= d; ++c) {
        if (c >= 2 && c < d && p + 1 < d) continue;
        auto m = uniform_matroid(c, d, p);
        EXPECT_EQ(enumerate_bases(m).size(), binom(d, c)) << c << "," << d << " p=" << p;
        EXPECT_EQ(enumerate_circuits(m).size(), c < d ? binom(d, c + 1) : 0u);
        for (const auto& b : enumerate_bases(m)) EXPECT_EQ(b.size(), c);
      }
}

TEST(Matroid, GraphicK4) {
  std::vector<std::pair<std::string, std::string>> k4{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}};
  for (std::uint32_t p : {2u, 3u}) {
    auto m = graphic_matroid(k4, p);
    EXPECT_EQ(m.rank(), 3u);
    EXPECT_EQ(enumerate_bases(m).size(), 16u);  // spanning trees of K4
    EXPECT_EQ(enumerate_circuits(m).size(), 7u);
  }
}

TEST(Matroid, GraphGTables) {
  auto g = fixture_matroid("graph_g");
  auto el = [&](std::initializer_list<const char*> xs) {
    std::vector<std::size_t> s;
    for (auto x : xs) s.push_back(*g.element(x));
    std::sort(s.begin(), s.end());
    return s;
  };
  for (auto c : {el({"1", "4", "5", "7"}), el({"2", "1", "3", "4", "5"}), el({"6", "1", "2", "5"}), el({"3", "2", "7"}),
                 el({"4", "3", "6"})})
    EXPECT_TRUE(g.is_circuit(c));
  EXPECT_TRUE(g.is_base(el({"3", "4", "5", "7"})));
  EXPECT_TRUE(g.is_base(el({"1", "2", "3", "6"})));
}

TEST(Matroid, Axioms) {
  EXPECT_TRUE(oracle::matroid_axioms_hold(uniform_matroid(2, 3, 2)));
  EXPECT_TRUE(oracle::matroid_axioms_hold(uniform_matroid(2, 4, 3)));
  EXPECT_TRUE(oracle::matroid_axioms_hold(uniform_matroid(3, 5, 5)));
  EXPECT_TRUE(oracle::matroid_axioms_hold(fano_matroid()));
  EXPECT_TRUE(oracle::matroid_axioms_hold(graphic_matroid({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "a"}}, 2)));
  PrimeField f(3);
  EXPECT_TRUE(oracle::matroid_axioms_hold(RepresentableMatroid(FieldMatrix(f, {{1, 0, 1, 0, 2, 1}, {0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 2}}))));
}

TEST(Matroid, CapEnforced) {
  auto m = uniform_matroid(1, 21, 2);
  EXPECT_THROW(enumerate_bases(m), CapExceeded);
  Caps c;
  c.ground = 21;
  EXPECT_EQ(enumerate_bases(m, c).size(), 21u);
}
