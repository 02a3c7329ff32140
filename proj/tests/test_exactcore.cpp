#include "doctest.h"
#include "operadiq/exactcore.hpp"

#include <chrono>
#include <random>

using namespace operadiq;

namespace {

// Bubble sort by adjacent transpositions, flipping sign when two odd factors swap.
int oracle_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  std::vector<int> cur = order;
  int s = 1;
  for (std::size_t i = 0; i < cur.size(); ++i)
    for (std::size_t j = 0; j + 1 < cur.size() - i; ++j)
      if (cur[j] > cur[j + 1]) {
        if ((degrees[cur[j]] & 1) && (degrees[cur[j + 1]] & 1)) s = -s;
        std::swap(cur[j], cur[j + 1]);
      }
  return s;
}

std::uint64_t pick(std::mt19937_64& g, std::uint64_t n) { return g() % n; }

}  // namespace

TEST_CASE("rational round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
}

TEST_CASE("add_to drops zeros") {
  Vec v;
  add_to(v, 3, Q(2));
  add_to(v, 3, Q(-2));
  CHECK(v.empty());
}

TEST_CASE("koszul sign agrees with transposition oracle") {
  std::mt19937_64 g(20261016);
  auto t0 = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(pick(g, 9));
    std::vector<int> deg(n), ord(n);
    for (int i = 0; i < n; ++i) {
      deg[i] = static_cast<int>(pick(g, 7)) - 3;
      ord[i] = i;
    }
    for (int i = n - 1; i > 0; --i) std::swap(ord[i], ord[pick(g, i + 1)]);
    CHECK(koszul_sign(deg, ord) == oracle_sign(deg, ord));
  }
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(dt < 1.0);
}

TEST_CASE("shuffle and perm signs") {
  SignContext ctx{{1, 1, 0}};
  CHECK(shuffle_sign(ctx, {{2}, {1, 3}}) == -1);
  CHECK(shuffle_sign(ctx, {{1, 3}, {2}}) == 1);
  CHECK(perm_sign(ctx, {2, 1, 3}) == -1);
  CHECK_THROWS_AS(shuffle_sign(ctx, {{3, 1}, {2}}), ValidationError);
  CHECK_THROWS_AS(perm_sign(ctx, {1, 1, 3}), ValidationError);
}

TEST_CASE("linmap degree and window checks") {
  auto b = std::make_shared<GradedBasis>(0, 1);
  int x = b->add("x", 0), y = b->add("y", 1);
  LinMap d(b, b, 1);
  d.add(x, y, 1);
  CHECK_THROWS_AS(d.add(y, x, 1), ValidationError);
  CHECK(compose(d, d).is_zero());
  CHECK_THROWS_AS(b->add("z", 2), WindowOverflow);
}

TEST_CASE("tensor map koszul sign against dense oracle") {
  auto b = std::make_shared<GradedBasis>(0, 1);
  int x = b->add("x", 0), y = b->add("y", 1);
  LinMap d(b, b, 1);
  d.add(x, y, 1);
  Basis bb = b;
  LinMap id = identity_map(bb);
  // (1 ⊗ d)(y ⊗ x) = (-1)^{|d||y|} y ⊗ y = -y⊗y
  LinMap t = tensor_map({id, d});
  Basis T = t.source();
  Vec img = t.col(T->at("y⊗x"));
  CHECK(img.size() == 1);
  CHECK(img.at(T->at("y⊗y")) == -1);
  // (d⊗1 + 1⊗d)^2 = 0
  LinMap D = add(tensor_map({d, id}), t);
  CHECK(compose(D, D).is_zero());
  CHECK(rank_of(to_dense(D)) == 2);
}
