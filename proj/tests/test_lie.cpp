#include <doctest.h>

#include <set>

#include "stringcone/lie.hpp"

using namespace stringcone;

namespace {

// Independent count of reduced words of the longest element in type A via
// the hook length formula on the staircase shape (n-1, n-2, ..., 1).
long long staircase_hook_count(int n) {
  const int rows = n - 1;
  long long cells = 0;
  for (int r = 0; r < rows; ++r) cells += rows - r;
  long long numer = 1;
  for (long long k = 2; k <= cells; ++k) numer *= k;
  long long denom = 1;
  for (int r = 0; r < rows; ++r) {
    const int row_len = rows - r;
    for (int col = 0; col < row_len; ++col) {
      int arm = row_len - col - 1;
      int leg = 0;
      for (int r2 = r + 1; r2 < rows; ++r2)
        if (rows - r2 > col) ++leg;
      denom *= arm + leg + 1;
    }
  }
  return numer / denom;
}

}  // namespace

TEST_CASE("cartan matrices") {
  const CartanDatum a2 = cartan_matrix(Family::A, 2);
  CHECK(a2.cartan == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(a2.N() == 3);

  const CartanDatum d4 = cartan_matrix("D4");
  CHECK(d4.c(1, 2) == -1);
  CHECK(d4.c(2, 3) == -1);
  CHECK(d4.c(2, 4) == -1);
  CHECK(d4.c(1, 3) == 0);
  CHECK(d4.c(1, 4) == 0);
  CHECK(d4.c(3, 4) == 0);
  CHECK(d4.N() == 12);

  CHECK_THROWS_AS(cartan_matrix(Family::A, 0), invalid_input);
  CHECK_THROWS_AS(cartan_matrix(Family::D, 3), invalid_input);
  CHECK_THROWS_AS(cartan_matrix(Family::E, 9), invalid_input);
  CHECK_THROWS_AS(cartan_matrix("Q5"), invalid_input);

  // Dynkin graph edge count n-1 for the connected simply-laced families.
  for (const char* t : {"A4", "D5", "E6", "E7"}) {
    const CartanDatum c = cartan_matrix(t);
    int edges = 0;
    for (int i = 1; i <= c.n(); ++i)
      for (int j = i + 1; j <= c.n(); ++j)
        if (c.c(i, j) == -1) ++edges;
    CHECK(edges == c.n() - 1);
  }
}

TEST_CASE("word properties") {
  const CartanDatum a2 = cartan_matrix("A2");
  const WordProps p1 = word_props(a2, parse_word("1 2 1"));
  CHECK(p1.reduced);
  CHECK(p1.length == 3);
  CHECK(p1.element == longest_element(a2));

  const WordProps p2 = word_props(a2, parse_word("1 1"));
  CHECK_FALSE(p2.reduced);
  CHECK(p2.length == 0);

  const CartanDatum d4 = cartan_matrix("D4");
  const WordProps p3 = word_props(d4, parse_word("2 1 4 2 3 2 4 2 1 2 3 4"));
  CHECK(p3.reduced);
  CHECK(p3.length == 12);

  CHECK_THROWS_AS(word_props(a2, parse_word("1 3")), invalid_input);
}

TEST_CASE("reduced word enumeration") {
  const CartanDatum a2 = cartan_matrix("A2");
  const auto words_a2 = reduced_words(a2, longest_element(a2), std::nullopt);
  REQUIRE(words_a2.size() == 2);
  CHECK(words_a2[0] == parse_word("1 2 1"));
  CHECK(words_a2[1] == parse_word("2 1 2"));

  const CartanDatum a3 = cartan_matrix("A3");
  const auto words_a3 = reduced_words(a3, longest_element(a3), std::nullopt);
  CHECK(words_a3.size() == 16);
  CHECK(static_cast<long long>(words_a3.size()) == staircase_hook_count(4));
  CHECK(std::is_sorted(words_a3.begin(), words_a3.end()));
  CHECK(std::set<Word>(words_a3.begin(), words_a3.end()).size() == 16);
  for (const Word& w : words_a3) CHECK(word_props(a3, w).reduced);

  // Second independent route: connectivity of the move graph.
  {
    std::set<Word> seen{words_a3[0]};
    std::vector<Word> stack{words_a3[0]};
    while (!stack.empty()) {
      const Word cur = stack.back();
      stack.pop_back();
      for (const auto& [next, mv] : word_neighbors(a3, cur)) {
        (void)mv;
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    CHECK(seen.size() == 16);
  }

  const CartanDatum d4 = cartan_matrix("D4");
  const auto first10 = reduced_words(d4, longest_element(d4), 10);
  CHECK(first10.size() == 10);
}

TEST_CASE("moves") {
  const CartanDatum a2 = cartan_matrix("A2");
  const Word w121 = parse_word("1 2 1");
  CHECK(apply_move(a2, w121, {MoveKind::ThreeTerm, 2}) == parse_word("2 1 2"));
  CHECK_THROWS_AS(apply_move(a2, w121, {MoveKind::TwoTerm, 1}), invalid_input);

  const MoveSequence seq = move_path(a2, w121, parse_word("2 1 2"));
  REQUIRE(seq.moves.size() == 1);
  CHECK(seq.moves[0].kind == MoveKind::ThreeTerm);
  CHECK(seq.moves[0].pos == 2);

  CHECK_THROWS_AS(move_path(a2, w121, parse_word("1 2")), invalid_input);

  // Moves preserve reducedness and the element.
  const CartanDatum a3 = cartan_matrix("A3");
  for (const Word& w : reduced_words(a3, longest_element(a3), std::nullopt)) {
    for (const auto& [next, mv] : word_neighbors(a3, w)) {
      (void)mv;
      const WordProps p = word_props(a3, next);
      CHECK(p.reduced);
      CHECK(p.element == longest_element(a3));
    }
  }
}

TEST_CASE("convex order") {
  const CartanDatum a2 = cartan_matrix("A2");
  const auto roots = convex_order(a2, parse_word("1 2 1"));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == IntVector{1, 0});
  CHECK(roots[1] == IntVector{1, 1});
  CHECK(roots[2] == IntVector{0, 1});

  CHECK_THROWS_AS(convex_order(a2, parse_word("1 1 2")), invalid_input);

  const Word d4w = parse_word("2 1 4 2 3 2 4 2 1 2 3 4");
  const std::vector<int> expected_kplus{4, 9, 7, 6, 11, 8, 12, 10, 13, 13, 13, 13};
  for (int k = 1; k <= 12; ++k) CHECK(k_plus(d4w, k) == expected_kplus[k - 1]);

  // Convexity: a sum of two roots sits strictly between them.
  const CartanDatum a3 = cartan_matrix("A3");
  for (const Word& w : reduced_words(a3, longest_element(a3), std::nullopt)) {
    const auto order = convex_order(a3, w);
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        IntVector sum(order[a].size());
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = order[a][t] + order[b][t];
        for (std::size_t c2 = 0; c2 < order.size(); ++c2)
          if (order[c2] == sum) {
            CHECK(a < c2);
            CHECK(c2 < b);
          }
      }
    for (const auto& beta : order)
      for (int x : beta) CHECK(x >= 0);
  }
}

TEST_CASE("diagram involution") {
  const CartanDatum a2 = cartan_matrix("A2");
  CHECK(i_star(a2, 1) == 2);
  CHECK(i_star(a2, 2) == 1);

  const CartanDatum d4 = cartan_matrix("D4");
  for (int i = 1; i <= 4; ++i) CHECK(i_star(d4, i) == i);

  for (const char* t : {"A3", "A4", "D4", "D5", "E6"}) {
    const CartanDatum c = cartan_matrix(t);
    for (int i = 1; i <= c.n(); ++i) CHECK(i_star(c, i_star(c, i)) == i);
  }
}

TEST_CASE("larger types") {
  const CartanDatum e6 = cartan_matrix("E6");
  CHECK(e6.N() == 36);
  CHECK(longest_element(e6).length == 36);
  CHECK(i_star(e6, 1) == 6);
  CHECK(i_star(e6, 2) == 2);
  CHECK(i_star(e6, 3) == 5);
  for (int i = 1; i <= 6; ++i)
    CHECK(is_minuscule(e6, i) == (i == 1 || i == 6));

  const CartanDatum d5 = cartan_matrix("D5");
  CHECK(d5.N() == 20);
  CHECK(i_star(d5, 4) == 5);
  CHECK(i_star(d5, 1) == 1);
  for (int i = 1; i <= 5; ++i)
    CHECK(is_minuscule(d5, i) == (i == 1 || i == 4 || i == 5));

  const CartanDatum e7 = cartan_matrix("E7");
  CHECK(e7.N() == 63);
  for (int i = 1; i <= 7; ++i)
    CHECK(is_minuscule(e7, i) == (i == 7));
}

TEST_CASE("coset data and minuscule letters") {
  const CartanDatum a2 = cartan_matrix("A2");
  const CosetData cd = coset_data(a2, 1);
  CHECK(cd.u == parse_word("1"));
  CHECK(cd.parabolic_longest == parse_word("2"));

  const CartanDatum d4 = cartan_matrix("D4");
  CHECK_FALSE(is_minuscule(d4, 2));
  CHECK(is_minuscule(d4, 1));
  CHECK(is_minuscule(d4, 3));
  CHECK(is_minuscule(d4, 4));

  for (const char* t : {"A2", "A3", "A4", "A5"}) {
    const CartanDatum c = cartan_matrix(t);
    for (int i = 1; i <= c.n(); ++i) CHECK(is_minuscule(c, i));
  }
}
