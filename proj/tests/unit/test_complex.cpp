#include "oracles.hpp"

#include "listagree/error.hpp"
#include "listagree/generators.hpp"

#include <doctest.h>

using namespace listagree;

namespace {

std::vector<SimplicialComplex> small_complexes() {
  std::vector<SimplicialComplex> out;
  for (int n = 3; n <= 7; ++n)
    for (int d = 1; d <= std::min(3, n - 1); ++d) out.push_back(complete_complex(n, d));
  out.push_back(wheel_complex(6));
  out.push_back(cycle_with_pendants(5, {0, 2}));
  out.push_back(spherical_building(2, 1).complex);
  return out;
}

}  // namespace

TEST_CASE("closure of a single triangle") {
  const auto X = SimplicialComplex::build({{1, 2, 3}});
  CHECK(X.dim() == 2);
  CHECK(X.count(2) == 1);
  CHECK(X.count(1) == 3);
  CHECK(X.count(0) == 3);
  CHECK(X.count(-1) == 1);
  CHECK(X.weight(Face{1, 2}) == Rational(1, 3));
  CHECK(X.weight(Face{}) == 1);
}

TEST_CASE("graph with equal-size maximal faces is accepted") {
  const auto X = SimplicialComplex::build({{1, 2}, {2, 3}, {1, 3}, {1, 4}});
  CHECK(X.count(0) == 4);
  CHECK(X.count(1) == 4);
}

TEST_CASE("mixed maximal face sizes are rejected") {
  try {
    SimplicialComplex::build({{1, 2, 3}, {4, 5}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedDimensions);
  }
}

TEST_CASE("duplicate maximal faces are ignored") {
  const auto X = SimplicialComplex::build({{1, 2, 3}, {3, 2, 1}});
  CHECK(X.count(2) == 1);
}

TEST_CASE("complete complex face counts are binomial") {
  const auto X = complete_complex(6, 3);
  for (int i = 0; i <= 3; ++i) CHECK(X.count(i) == binomial(6, i + 1));
  CHECK(complete_complex(4, 2).count(2) == 4);
  CHECK(complete_complex(3, 2).count(2) == 1);
  CHECK_THROWS_AS(complete_complex(3, 3), Error);
}

TEST_CASE("weights match the brute-force count and sum to one") {
  for (const auto& X : small_complexes()) {
    for (int i = -1; i <= X.dim(); ++i) {
      Rational total = 0;
      for (std::size_t idx = 0; idx < X.count(i); ++idx) {
        CHECK(X.weight(i, idx) == oracle::weight(X, X.faces(i)[idx]));
        total += X.weight(i, idx);
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("complete complex weights are uniform") {
  const auto X = complete_complex(6, 2);
  for (std::size_t v = 0; v < X.count(0); ++v) CHECK(X.weight(0, v) == Rational(1, 6));
  for (std::size_t e = 0; e < X.count(1); ++e) CHECK(X.weight(1, e) == Rational(1, 15));
  CHECK_THROWS_AS(X.weight(Face{0, 9}), Error);
}

TEST_CASE("norms") {
  const auto X = SimplicialComplex::build({{1, 2, 3}});
  CHECK(norm(X, X.faces(1)) == 1);
  CHECK(norm(X, {}) == 0);
  CHECK(norm(X, {{1, 2}, {2, 3}}) == Rational(2, 3));
  CHECK_THROWS_AS(norm(X, {{1}, {2, 3}}), Error);
}

TEST_CASE("containment operator and its norm bounds") {
  const auto T = SimplicialComplex::build({{1, 2, 3}});
  CHECK(containment_up(T, {{1}}, 1).size() == 2);
  const auto X = complete_complex(5, 2);
  CHECK(containment_up(X, {{0, 1}}, 2).size() == 3);
  CHECK(containment_up(X, X.faces(0), 2).size() == X.count(2));
  Rng rng(7);
  const auto Y = complete_complex(8, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int i = static_cast<int>(rng.below(3));
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(3 - i + 1)));
    std::vector<Face> S;
    for (const Face& f : Y.faces(i))
      if (rng.below(4) == 0) S.push_back(f);
    const Rational a = norm(Y, S), b = norm(Y, containment_up(Y, S, j));
    CHECK(a <= b);
    CHECK(b <= a * static_cast<long>(binomial(j + 1, i + 1)));
  }
}

TEST_CASE("links and the link weight law") {
  const auto T = SimplicialComplex::build({{1, 2, 3}});
  const auto L = link(T, {1});
  CHECK(L.dim() == 1);
  CHECK(L.maximal_faces() == std::vector<Face>{{2, 3}});
  CHECK_THROWS_AS(link(T, {1, 2, 3}), Error);

  const auto X = complete_complex(6, 2);
  const auto Lv = link(X, {0});
  CHECK(Lv.dim() == 1);
  CHECK(Lv.count(0) == 5);
  CHECK(Lv.count(1) == 10);
  CHECK(link(X, {}).count(2) == X.count(2));

  for (const auto& Y : small_complexes())
    for (int i = -1; i < Y.dim(); ++i)
      for (const Face& s : Y.faces(i)) {
        const auto Ls = link(Y, s);
        for (int j = -1; j <= Ls.dim(); ++j)
          for (const Face& t : Ls.faces(j)) {
            const Rational expected =
                Y.weight(face_union(s, t)) / (Rational(static_cast<long>(binomial(i + j + 2, j + 1))) * Y.weight(s));
            CHECK(Ls.weight(t) == expected);
          }
      }
}

TEST_CASE("skeletons") {
  const auto T = SimplicialComplex::build({{1, 2, 3}});
  CHECK(skeleton(T, 2).maximal_faces() == T.maximal_faces());
  CHECK(skeleton(T, 1).count(1) == 3);
  CHECK(skeleton(T, 1).dim() == 1);
  const auto K5 = skeleton(complete_complex(5, 3), 1);
  CHECK(K5.count(1) == 10);
  for (std::size_t e = 0; e < K5.count(1); ++e) CHECK(K5.weight(1, e) == Rational(1, 10));
}

TEST_CASE("exact sampler law equals the weights") {
  for (const auto& X : small_complexes())
    for (int i = 0; i <= X.dim(); ++i) {
      Rational total = 0;
      for (const auto& [face, p] : face_distribution(X, i)) {
        CHECK(p == X.weight(face));
        total += p;
      }
      CHECK(total == 1);
    }
}

TEST_CASE("sampled vertex frequencies stay within three sigma") {
  const auto X = complete_complex(6, 2);
  Rng rng(12345);
  const int draws = 60000;
  std::map<Face, int> hits;
  for (int t = 0; t < draws; ++t) ++hits[sample_face(X, 0, rng)];
  const double p = 1.0 / 6, sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& [face, count] : hits) CHECK(std::abs(count - draws * p) <= 3 * sigma);
}

TEST_CASE("binomial identity with the corrected index") {
  for (int D = 1; D <= 12; ++D)
    for (int k = 0; k <= D; ++k)
      for (int i = 0; k + i + 1 <= D; ++i)
        CHECK(oracle::choose(D - k, i + 1) * oracle::choose(D, k) ==
              oracle::choose(k + i + 1, k) * oracle::choose(D, k + i + 1));
  // d = 4, k = 1, i = 2 with the uncorrected index.
  CHECK(oracle::choose(4, 2) * oracle::choose(5, 1) != oracle::choose(4, 1) * oracle::choose(5, 4));
}

TEST_CASE("rational formatting round-trips") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("x/2"), Error);
}
