#include <doctest.h>

#include "../oracle.hpp"
#include "takeaway/families.hpp"
#include "takeaway/formulas.hpp"

using namespace takeaway;

TEST_CASE("lambda and ell") {
  const std::vector<NimValue> lambda{0, 1, 0, 2, 3, 2, 4, 5, 4};
  for (std::uint64_t k = 0; k < lambda.size(); ++k) CHECK(lambda_val(k) == lambda[k]);
  CHECK(ell_val(1) == 0);
  CHECK(ell_val(2) == 2);
  CHECK(ell_val(3) == 0);
  CHECK_THROWS_AS(ell_val(0), InputError);
}

TEST_CASE("E sets") {
  CHECK(e_set(1).empty());
  CHECK(e_set(2) == std::set<NimValue>{0, 1});
  CHECK(e_set(3) == std::set<NimValue>{1, 2, 3});
  CHECK_THROWS_AS(e_set(0), InputError);
}

TEST_CASE("path multisets") {
  const PathMultiset xs{3, 7, 5, 6};
  CHECK(xs.lengths() == std::vector<std::uint32_t>{7, 6, 5, 3});
  CHECK(xs.total() == 21);
  CHECK(xs.alternating() == 3);
  CHECK(PathMultiset{}.alternating() == 0);
}

TEST_CASE("predicted values") {
  CHECK(Predicted::exact(3).admits(3));
  CHECK_FALSE(Predicted::exact(3).admits(4));
  CHECK(Predicted::at_least_four().admits(9));
  CHECK_FALSE(Predicted::at_least_four().admits(3));
}

TEST_CASE("bipartite predictor") {
  CHECK(predict_bipartite(build_graph(3, {{0, 1}, {1, 2}})) == Predicted::exact(1));
  CHECK_THROWS_AS(predict_bipartite(build_graph(3, {{0, 1}, {1, 2}, {2, 0}})), DomainError);
}

TEST_CASE("one odd cycle predictors against the oracle") {
  oracle::Solver solver;
  const Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(predict_one_attachment(tri) == Predicted::exact(0));

  // Triangle plus a path of length 2; its middle vertex telescopes with even degree.
  const Graph t2 = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}});
  CHECK(solver.value(t2) == 3);
  CHECK(predict_one_attachment(t2) == Predicted::exact(3));
  CHECK(winner_one_odd_cycle(t2) == Player::FirstPlayer);

  // Triangle plus a pendant edge: the leaf telescopes with odd degree.
  const Graph t1 = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  CHECK(predict_one_attachment(t1) == Predicted::at_least_four());
  CHECK(solver.value(t1) == 4);

  // Pendant edges at two cycle vertices.
  const Graph two = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  CHECK(solver.value(two) == 3);
  CHECK(predict_multi_attachment(two) == Predicted::exact(3));
  CHECK_THROWS_AS(predict_one_attachment(two), DomainError);
  CHECK_THROWS_AS(predict_multi_attachment(t2), DomainError);

  // A pendant path of length 4 at one vertex, paths of length 1 and 2 elsewhere; phi = 0.
  const Graph zero = build_graph(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {4, 5}, {2, 6}, {6, 7}});
  CHECK(winner_one_odd_cycle(zero) == (solver.value(zero) == 0 ? Player::SecondPlayer : Player::FirstPlayer));

  CHECK_THROWS_AS(predict_one_attachment(build_graph(3, {{0, 1}, {1, 2}})), DomainError);
  CHECK_THROWS_AS(predict_one_attachment(build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}})),
                  DomainError);  // two centred leaves: not reduced
}

TEST_CASE("complete graph families") {
  CHECK(predict_complete(4) == Predicted::exact(1));
  const std::uint64_t parts[] = {1, 3, 2};
  CHECK(predict_multipartite(parts) == Predicted::exact(2));
  CHECK(predict_complete_loops(3, 2) == Predicted::exact(2));
  CHECK_THROWS_AS(predict_complete_loops(2, 3), InputError);
  oracle::Solver solver;
  CHECK(solver.value(generate(family::Multipartite{{1, 3, 2}})) == 2);
  CHECK(solver.value(generate(family::Multipartite{{1, 1, 1, 1}})) == 1);
}

TEST_CASE("G1 and G2") {
  oracle::Solver solver;
  CHECK(predict_G1(4) == Predicted::exact(2));
  CHECK(predict_G1(9) == Predicted::exact(8));
  CHECK(solver.value(generate(family::G1{4})) == 2);
  CHECK(solver.value(generate(family::G1{9})) == 8);
  CHECK(predict_G2(0) == Predicted::exact(0));
  CHECK(solver.value(generate(family::G2{0})) == 0);
  CHECK(solver.value(generate(family::G2{4})) == predict_G2(4).value);
  CHECK_THROWS_AS(predict_G1(3), InputError);
}

TEST_CASE("R graphs") {
  oracle::Solver solver;
  CHECK(predict_R(PathMultiset{7, 6, 5, 3}) == Predicted::exact(14));
  CHECK(predict_R(PathMultiset{}) == Predicted::exact(4));
  CHECK(solver.value(generate(family::R{3, {}})) == 4);
  CHECK(solver.value(generate(family::R{3, {1, 1}})) == predict_R(PathMultiset{1, 1}).value);
  const Graph r2 = generate(family::R{3, {2}});
  CHECK(predict_R(PathMultiset{2}) == Predicted::exact(static_cast<NimValue>(phi(r2))));
  CHECK(solver.value(r2) == static_cast<NimValue>(phi(r2)));
  CHECK(solver.value(generate(family::R{5, {2, 1}})) == predict_R(PathMultiset{2, 1}, 5).value);
  CHECK_THROWS_AS(predict_R(PathMultiset{}, 4), InputError);
  CHECK_THROWS_AS(predict_R(PathMultiset{0}), InputError);
}

TEST_CASE("bouquets and linked hubs against the oracle") {
  oracle::Solver solver;
  for (const auto& xs : std::vector<std::vector<std::uint32_t>>{{}, {1}, {2, 1}, {1, 1}, {3}}) {
    for (std::uint64_t r = 1; r <= 2; ++r) {
      const Graph g = generate(family::ROdd{std::vector<std::uint32_t>(r, 3), xs});
      CHECK(solver.value(g) == predict_rodd(r, PathMultiset(xs)).value);
    }
  }
  const std::vector<std::uint32_t> zs{1, 2};
  CHECK(solver.value(generate(family::XYZ{{1}, {}, zs})) == predict_xyz(PathMultiset{1}, PathMultiset{}, zs).value);
  const std::vector<std::uint32_t> z3{1, 1, 2};
  CHECK(solver.value(generate(family::XYZ{{}, {1}, z3})) == predict_xyz(PathMultiset{}, PathMultiset{1}, z3).value);
  const std::vector<std::uint32_t> bad{0};
  CHECK_THROWS_AS(predict_xyz(PathMultiset{}, PathMultiset{}, bad), InputError);
}

TEST_CASE("status flags") {
  CHECK(predict_wheel(25).status == Status::Theorem);
  CHECK(predict_wheel(27).status == Status::Conjecture);
  CHECK(predict_wheel(30).status == Status::Theorem);
  CHECK_THROWS_AS(predict_wheel(2), InputError);
  CHECK(predict_fan(7, FanVariant::Fan).prediction == Predicted::exact(2));
  CHECK(predict_fan(6, FanVariant::Fan).status == Status::Conjecture);
  CHECK(predict_fan(8, FanVariant::FanHandle).prediction == Predicted::exact(1));
  CHECK(predict_fan(9, FanVariant::FanHandle).prediction == Predicted::exact(4));
  CHECK(predict_fan(9, FanVariant::FanHandle).status == Status::Conjecture);
  CHECK_THROWS_AS(predict_fan(5, FanVariant::FanHandle), InputError);
}
