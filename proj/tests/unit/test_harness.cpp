#include "listagree/error.hpp"
#include "listagree/generators.hpp"
#include "listagree/harness.hpp"
#include "listagree/rng.hpp"
#include "listagree/serialization.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace listagree;

namespace {

ComplexPtr share(SimplicialComplex X) { return std::make_shared<const SimplicialComplex>(std::move(X)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidParams;
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("complex JSON round trip") {
  for (const auto& X : {complete_complex(5, 2), wheel_complex(6), cycle_graph(5)}) {
    const SimplicialComplex Y = complex_from_json(complex_to_json(X));
    CHECK(Y.dim() == X.dim());
    CHECK(Y.maximal_faces() == X.maximal_faces());
    CHECK(complex_to_json(Y) == complex_to_json(X));
  }
  CHECK(kind_of([] { complex_from_json("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { complex_from_json(R"({"d": 1})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { complex_from_json(R"({"d": 2, "maximal_faces": [[0,1,2],[0,1]]})"); }) ==
        ErrorKind::MixedDimensions);
}

TEST_CASE("cochain JSON round trip") {
  const auto X = share(complete_complex(5, 2));
  Rng rng(7);
  for (int l = 1; l <= 3; ++l) {
    const auto G = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(l));
    for (int dim = 0; dim <= 1; ++dim) {
      const Cochain f = random_cochain(X, G, dim, rng);
      CHECK(cochain_from_json(cochain_to_json(f), X) == f);
    }
  }
  const auto F2 = std::make_shared<const FiniteGroup>(FiniteGroup::f2());
  const Cochain g = random_cochain(X, F2, 1, rng);
  CHECK(cochain_from_json(cochain_to_json(g), X) == g);
  CHECK(kind_of([&] { cochain_from_json("[1,2", X); }) == ErrorKind::ParseError);
}

TEST_CASE("list assignment and face function JSON round trips") {
  const auto X = share(complete_complex(5, 2));
  Rng rng(11);
  const LAssignment F = random_agreeing_l_assignment(X, 1, 2, rng);
  CHECK(l_assignment_from_json(l_assignment_to_json(F), X) == F);

  FaceFunction h(X, 2);
  for (std::size_t i = 0; i < h.size(); ++i) h.values[i] = static_cast<std::uint8_t>(rng.below(2));
  CHECK(face_function_from_json(face_function_to_json(h), X) == h);
  CHECK(kind_of([&] { l_assignment_from_json("{}", X); }) == ErrorKind::ParseError);
}

TEST_CASE("representation JSON lists k-faces and the complex") {
  const auto X = share(complete_complex(4, 2));
  const auto R = RepresentationComplex::build(X, 1);
  const auto j = nlohmann::json::parse(representation_to_json(*R));
  CHECK(j["k"] == 1);
  CHECK(j["vertices"].size() == X->count(1));
  const SimplicialComplex C = complex_from_json(j["complex"].dump());
  CHECK(C.maximal_faces() == R->complex().maximal_faces());
}

TEST_CASE("file helpers report IO errors") {
  CHECK(kind_of([] { read_text_file("/nonexistent/dir/file.json"); }) == ErrorKind::IoError);
  CHECK(kind_of([] { write_text_file("/nonexistent/dir/file.json", "x"); }) == ErrorKind::IoError);
  const auto path = (std::filesystem::temp_directory_path() / "listagree_harness_io.txt").string();
  write_text_file(path, "hello\n");
  CHECK(read_text_file(path) == "hello\n");
  std::remove(path.c_str());
}

TEST_CASE("agreeing list-agreement run accepts exactly") {
  ExperimentConfig c;
  const Report r = run_experiment(c);
  REQUIRE(r.value("rejection") != nullptr);
  CHECK(*r.value("rejection") == "0/1");
  CHECK_FALSE(r.any_failed());
  REQUIRE(r.check("agreeing_input_accepted") != nullptr);
  CHECK(r.check("agreeing_input_accepted")->status == "pass");
}

TEST_CASE("corrupted list-agreement run rejects") {
  ExperimentConfig c;
  c.input = "corrupted";
  const Report r = run_experiment(c);
  REQUIRE(r.value("rejection") != nullptr);
  CHECK(*r.value("rejection") != "0/1");
  CHECK_FALSE(r.any_failed());
}

TEST_CASE("building cycle run reports the measured length") {
  ExperimentConfig c;
  c.generator = "building";
  c.tester = "building-cycle";
  c.p = 3;
  const Report r = run_experiment(c);
  REQUIRE(r.value("cycle_length") != nullptr);
  CHECK(*r.value("cycle_length") == "8");
  CHECK(r.check("cycle_length_is_2p_minus_2")->status == "fail");
  CHECK(r.check("cycle_is_1_non_skipping")->status == "pass");
  CHECK(r.any_failed());
}

TEST_CASE("monte-carlo reports are deterministic and independent of workers") {
  ExperimentConfig c;
  c.input = "corrupted";
  c.mode = "monte-carlo";
  c.trials = 200;
  c.workers = 1;
  const Report a = run_experiment(c);
  c.workers = 4;
  const Report b = run_experiment(c);
  CHECK(render_report(a, "json") == render_report(b, "json"));
  CHECK(render_report(a, "csv") == render_report(b, "csv"));
  CHECK(line_count(render_report(a, "csv")) == 201);
  CHECK(a.trials.size() == 200);
}

TEST_CASE("report JSON round trip") {
  ExperimentConfig c;
  c.mode = "shot";
  c.trials = 20;
  const Report r = run_experiment(c);
  const Report back = report_from_json(render_report(r, "json"));
  CHECK(back == r);
  CHECK(render_report(back, "json") == render_report(r, "json"));
  CHECK(kind_of([] { report_from_json("{"); }) == ErrorKind::ParseError);
}

TEST_CASE("unknown options are rejected") {
  const Report r = run_experiment(ExperimentConfig{});
  CHECK(kind_of([&] { render_report(r, "xml"); }) == ErrorKind::UnknownFormat);
  CHECK(kind_of([&] { emit_report(r, "xml", "/tmp/x"); }) == ErrorKind::UnknownFormat);
  CHECK(kind_of([&] { emit_report(r, "json", "/nonexistent/dir/r.json"); }) == ErrorKind::IoError);
  ExperimentConfig c;
  c.mode = "bogus";
  CHECK(kind_of([&] { run_experiment(c); }) == ErrorKind::InvalidParams);
  c = {};
  c.tester = "bogus";
  CHECK(kind_of([&] { run_experiment(c); }) == ErrorKind::InvalidParams);
  c = {};
  c.generator = "bogus";
  CHECK(kind_of([&] { run_experiment(c); }) == ErrorKind::InvalidParams);
}

TEST_CASE("oracle refusal becomes a skipped check") {
  ExperimentConfig c;
  c.n = 11;
  c.tester = "oracle-agreeing";
  const Report r = run_experiment(c);
  REQUIRE(r.check("exhaustive_oracle") != nullptr);
  CHECK(r.check("exhaustive_oracle")->status == "skipped");
  CHECK_FALSE(r.any_failed());
}

TEST_CASE("other testers run on small instances") {
  for (const char* t : {"direct-sum", "coboundary", "oracle-agreeing", "oracle-direct-sum", "coloring", "adversary"}) {
    CAPTURE(t);
    ExperimentConfig c;
    c.tester = t;
    c.n = 5;
    c.d = t == std::string("coboundary") ? 3 : 2;
    if (t == std::string("coloring")) {
      c.generator = "cycle";
      c.m = 6;
    }
    const Report r = run_experiment(c);
    CHECK_FALSE(r.values.empty());
    CHECK_FALSE(r.any_failed());
  }
}
