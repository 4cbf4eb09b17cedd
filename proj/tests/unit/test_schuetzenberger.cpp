#include <doctest.h>

#include <cmath>
#include <random>

#include "bcodec/rsk.hpp"
#include "bcodec/schuetzenberger.hpp"
#include "oracles.hpp"

using namespace bcodec;

TEST_SUITE("schuetzenberger") {

TEST_CASE("nerve hand traces") {
  const Nerve one = nerve(StandardTableau({{1}}));
  CHECK(one.cells == std::vector<Cell>{{1, 1}});
  CHECK(one.values == std::vector<int>{1});

  const Nerve two = nerve(StandardTableau({{1, 3}, {2}}));
  CHECK(two.cells == std::vector<Cell>{{1, 1}, {2, 1}});
  CHECK(two.values == std::vector<int>{1, 2});

  const Nerve three = nerve(StandardTableau({{1, 2, 5}, {3, 4}, {6}}));
  CHECK(three.cells == std::vector<Cell>{{1, 1}, {1, 2}, {2, 2}});
  CHECK(three.values == std::vector<int>{1, 2, 4});

  try {
    nerve(StandardTableau{});
    FAIL("expected EmptyTableau");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyTableau);
  }
}

TEST_CASE("nerve invariants on random tableaux") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const StandardTableau q = rsk(Realization(oracle::uniform_word(gen, 1 + trial % 80))).q;
    const Nerve nv = nerve(q);
    CHECK(nv.cells.front() == Cell{1, 1});
    for (std::size_t i = 1; i < nv.cells.size(); ++i) {
      const int dr = nv.cells[i].row - nv.cells[i - 1].row;
      const int dc = nv.cells[i].col - nv.cells[i - 1].col;
      CHECK(dr + dc == 1);
      CHECK(dr >= 0);
      CHECK(dc >= 0);
      CHECK(nv.values[i] > nv.values[i - 1]);
    }
    const Cell last = nv.cells.back();
    CHECK_FALSE(q.contains({last.row, last.col + 1}));
    CHECK_FALSE(q.contains({last.row + 1, last.col}));
    // the nerve always passes through entry 2 when n >= 2
    if (q.size() >= 2) CHECK(nv.values[1] == 2);
  }
}

TEST_CASE("sch_shift hand traces") {
  CHECK(sch_shift(StandardTableau({{1}})).empty());
  CHECK(sch_shift(StandardTableau({{1, 3}, {2}})) == StandardTableau({{1, 2}}));
  CHECK(sch_shift(StandardTableau({{1, 2}, {3}})) == StandardTableau({{1}, {2}}));
  CHECK(sch_shift(StandardTableau({{1, 3}, {2}})) == rsk(Realization({0.2, 0.9})).q);
  CHECK_THROWS_AS(sch_shift(StandardTableau{}), Error);
}

TEST_CASE("finite shift conjugacy and iteration") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Realization x(oracle::uniform_word(gen, 2 + trial % 49));
    StandardTableau q = rsk(x).q;
    CHECK(sch_shift(q) == rsk(x.drop_first()).q);
    Realization rest = x;
    for (std::size_t k = 1; k <= std::min<std::size_t>(x.size(), 6); ++k) {
      q = sch_shift(q);
      rest = rest.drop_first();
      CHECK(validate_standard(q.rows()));
      CHECK(q == rsk(rest).q);
    }
  }
}

TEST_CASE("nerve_endpoint") {
  CHECK(nerve_endpoint(StandardTableau({{1}})) == NerveEndpoint{1, 1});
  CHECK(nerve_endpoint(StandardTableau({{1, 3}, {2}})) == NerveEndpoint{2, 1});
  CHECK(nerve_endpoint(StandardTableau({{1, 2, 5}, {3, 4}, {6}})) == NerveEndpoint{2, 2});
}

TEST_CASE("decode_first_nerve") {
  CHECK(decode_first_nerve(StandardTableau({{1}}), 1.0) == 1.0);
  StandardTableau::Rows column;
  for (int i = 1; i <= 25; ++i) column.push_back({i});
  CHECK(decode_first_nerve(StandardTableau(column), 0.3) == 1.0);  // 0.3 * 25 / 5 clamps
  CHECK(decode_first_nerve(StandardTableau({{1, 2, 3, 4}}), 1.0) == doctest::Approx(0.5));
  try {
    decode_first_nerve(StandardTableau({{1}}), 0.0);
    FAIL("expected NonpositiveKappa");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonpositiveKappa);
  }
  CHECK_THROWS_AS(decode_first_nerve(StandardTableau{}, 1.0), Error);
}

TEST_CASE("fit_kappa is the least-squares slope through the origin") {
  CHECK(fit_kappa({1.0, 2.0, 3.0}, {0.5, 1.0, 1.5}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(fit_kappa({}, {}), Error);
  CHECK_THROWS_AS(fit_kappa({0.0}, {1.0}), Error);
}

TEST_CASE("q_tableau_stream") {
  const auto stream = q_tableau_stream(Realization({0.6, 0.2, 0.9}));
  REQUIRE(stream.size() == 3);
  CHECK(stream[0] == StandardTableau({{1}}));
  CHECK(stream[1] == StandardTableau({{1}, {2}}));
  CHECK(stream[2] == StandardTableau({{1, 3}, {2}}));

  const auto inc = q_tableau_stream(Realization({0.1, 0.2, 0.3, 0.4}));
  CHECK(inc.back() == StandardTableau({{1, 2, 3, 4}}));

  std::mt19937_64 gen(47);
  const auto s = q_tableau_stream(Realization(oracle::uniform_word(gen, 40)));
  for (std::size_t k = 1; k < s.size(); ++k) {
    CHECK(s[k].size() == k + 1);
    // the previous tableau is the new one with entry k+1 removed
    auto rows = s[k].rows();
    int found = 0;
    for (auto& r : rows) {
      if (!r.empty() && r.back() == static_cast<int>(k + 1)) {
        r.pop_back();
        ++found;
      }
    }
    if (!rows.empty() && rows.back().empty()) rows.pop_back();
    CHECK(found == 1);
    CHECK(StandardTableau(rows) == s[k - 1]);
  }
}

}  // TEST_SUITE
