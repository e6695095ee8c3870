#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "examples.hpp"
#include "oracles.hpp"
#include "troprank/cli.hpp"
#include "troprank/errors.hpp"
#include "troprank/io.hpp"

using namespace troprank;

namespace {

const Semifield kTimes = Semifield::max_times();
const Semifield kPlus = Semifield::max_plus();

std::string data(const char* name) { return std::string(TROPRANK_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const cli::RunConfig& config) {
  std::ostringstream out, err;
  const int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config_for(std::vector<std::string> inputs) {
  cli::RunConfig c;
  c.inputs = std::move(inputs);
  return c;
}

// A scratch file removed when the guard goes out of scope.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("troprank_io_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".csv");
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("CSV parsing") {
  const Matrix a = io::parse_matrix("1,3,2,4\n1/3,1,1/3,1/2\n1/2,3,1,1/4\n1/4,2,4,1\n", kTimes);
  CHECK(a == examples::reciprocal_a());
  CHECK(io::parse_matrix("# header\n\n 1 , 0.5 \n2,1\n", kTimes) ==
        Matrix::from_strings(kTimes, {{"1", "1/2"}, {"2", "1"}}));
  CHECK(io::parse_matrix("1", kTimes) == Matrix::identity(kTimes, 1));
  CHECK(io::parse_matrix("0,log2(3)\n-inf,0", kPlus)(0, 1) == Scalar::parse(kPlus, "log2(3)"));
  try {
    io::parse_matrix("1,2\n3\n", kTimes);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("ragged") != std::string::npos);
  }
  try {
    io::parse_matrix("1,2\n\n3,x\n", kTimes);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(io::parse_matrix("1,-2\n3,1", kTimes), ParseError);
  CHECK_THROWS_AS(io::parse_matrix("\n# only a comment\n", kTimes), ParseError);
}

TEST_CASE("JSON matrices") {
  const io::Json j = io::matrix_to_json(examples::reciprocal_a());
  CHECK(j["tag"] == "max-times");
  CHECK(j["rows"] == 4);
  CHECK(j["entries"][1][2] == "1/3");
  CHECK(io::matrix_from_json(j, kTimes) == examples::reciprocal_a());
  CHECK(io::parse_matrix(j.dump(), kTimes) == examples::reciprocal_a());
  CHECK(io::parse_matrix("[[1, \"1/2\"], [2, 1]]", kTimes) ==
        Matrix::from_strings(kTimes, {{"1", "1/2"}, {"2", "1"}}));
  CHECK_THROWS_AS(io::matrix_from_json(j, kPlus), UsageError);
  CHECK_THROWS_AS(io::parse_matrix("[[1, 2], [3]]", kTimes), ParseError);
  CHECK_THROWS_AS(io::parse_matrix("{\"rows\": 1}", kTimes), ParseError);
  const Semifield pf = Semifield::max_plus(Backend::Float);
  CHECK(io::scalar_to_json(Scalar::zero(pf)) == "-inf");
  CHECK(io::scalar_from_json("-inf", pf).is_zero());
  CHECK(io::scalar_to_json(Scalar::from_double(pf, 1.5)) == 1.5);
}

TEST_CASE("serialization round trips") {
  oracle::Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m = oracle::random_positive(kTimes, n, rng);
    m.set(0, 0, Scalar::parse(kTimes, "12^(1/3)"));
    if (n > 1) m.set(1, 0, Scalar::zero(kTimes));
    CHECK(io::parse_matrix(io::matrix_to_csv(m), kTimes) == m);
    CHECK(io::matrix_from_json(io::Json::parse(io::matrix_to_json(m).dump()), kTimes) == m);
    Matrix p(kPlus, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) p.set(i, k, Scalar::from_rooted(kPlus, m(i, k).rooted()));
    CHECK(io::parse_matrix(io::matrix_to_csv(p), kPlus) == p);
    CHECK(io::matrix_from_json(io::matrix_to_json(p), kPlus) == p);
  }
}

TEST_CASE("problem JSON") {
  const io::Json j = {{"scale", "max-times"},
                      {"labels", {"a", "b", "c", "d"}},
                      {"matrices", {io::matrix_to_json(examples::reciprocal_a())}},
                      {"constraints", io::matrix_to_json(examples::cyclic_constraints())}};
  const RatingProblem p = io::problem_from_json(j);
  CHECK(p.constraints.has_value());
  CHECK(io::problem_from_json(io::problem_to_json(p)).matrices == p.matrices);
  const io::Json r = io::result_to_json(rate(p), p);
  CHECK(r["mode"] == "constrained");
  CHECK(r["minimum"] == "4");
  CHECK(r["candidates"][0]["scores"] == io::Json({"1", "1/8", "1/8", "1/8"}));
  CHECK(r["candidates"][0]["ranking"] == io::Json({{"a"}, {"b", "c", "d"}}));
  CHECK(r["candidates"][1]["uniform"] == true);
  CHECK(r["candidates"][1]["generator_columns"] == io::Json({2, 3, 4}));
  CHECK(r["solution_space"]["term_maxima"] == io::Json({"4", "12^(1/2)", "12^(1/3)"}));
  CHECK_THROWS_AS(io::problem_from_json(io::Json::array()), ParseError);
  CHECK_THROWS_AS(io::problem_from_json({{"matrices", 3}}), ParseError);
}

TEST_CASE("command line: single matrix with sum-to-one weights") {
  auto c = config_for({data("example1.csv")});
  c.normalize = cli::NormalizeOutput::Sum;
  const Run r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out.find("minimum: 2\n") != std::string::npos);
  CHECK(r.out.find("12/23, 2/23, 3/23, 6/23") != std::string::npos);
  CHECK(r.out.find("alt1 > alt4 > alt3 > alt2") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("command line: constraints and labels") {
  auto c = config_for({data("example1.csv")});
  c.constraints_path = data("example3_constraints.csv");
  c.normalize = cli::NormalizeOutput::Max;
  c.labels = {"w", "x", "y", "z"};
  const Run r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out.find("minimum: 4\n") != std::string::npos);
  CHECK(r.out.find("1, 1/8, 1/8, 1/8") != std::string::npos);
  CHECK(r.out.find("w > x = y = z") != std::string::npos);
  CHECK(r.out.find("[uniform, uninformative]") != std::string::npos);
}

TEST_CASE("command line: several matrices, JSON and CSV output") {
  auto c = config_for({data("example2_a1.csv"), data("example2_a2.csv")});
  c.format = cli::OutputFormat::Json;
  c.normalize = cli::NormalizeOutput::Max;
  Run r = run(c);
  REQUIRE(r.code == 0);
  const io::Json j = io::Json::parse(r.out);
  CHECK(j["mode"] == "multi");
  CHECK(j["minimum"] == "2");
  CHECK(j["candidates"][0]["scores"] == io::Json({"1", "1/6", "1/4", "1/2"}));

  c.format = cli::OutputFormat::Csv;
  r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("minimum,2\ncandidate,alternative,score,rank,uniform\n", 0) == 0);
  CHECK(r.out.find("1,alt2,1/6,4,no") != std::string::npos);
}

TEST_CASE("command line: max-plus and float backends") {
  const TempFile f("0,1,-1\n-1,0,2\n1,-2,0\n");
  auto c = config_for({f.path.string()});
  c.scale = SemifieldKind::MaxPlus;
  c.normalize = cli::NormalizeOutput::Max;
  Run r = run(c);
  CHECK(r.code == 0);
  CHECK(r.out.find("scale: max-plus (exact)") != std::string::npos);
  c.normalize = cli::NormalizeOutput::Sum;
  r = run(c);
  CHECK(r.code == 2);
  c.format = cli::OutputFormat::Json;
  CHECK(run(c).code == 2);

  auto fl = config_for({data("example1.csv")});
  fl.backend = Backend::Float;
  fl.normalize = cli::NormalizeOutput::Sum;
  r = run(fl);
  CHECK(r.code == 0);
  CHECK(r.out.find("scale: max-times (float)") != std::string::npos);
}

TEST_CASE("command line: error exit codes") {
  auto c = config_for({data("example2_a1.csv"), data("example2_a2.csv")});
  c.constraints_path = data("example3_constraints.csv");
  Run r = run(c);
  CHECK(r.code == 2);
  CHECK(r.err.find("usage error") != std::string::npos);

  CHECK(run(config_for({})).code == 2);
  CHECK(run(config_for({"/nonexistent/matrix.csv"})).code == 2);

  const TempFile ragged("1,2\n3\n");
  r = run(config_for({ragged.path.string()}));
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);

  const TempFile infeasible("0,2\n1,0\n");
  auto ci = config_for({data("example1.csv")});
  ci.constraints_path = infeasible.path.string();
  CHECK(run(ci).code == 2);  // order mismatch
  const TempFile cyc("0,2,0,0\n0,0,1,0\n1,0,0,0\n0,0,0,0\n");
  ci.constraints_path = cyc.path.string();
  r = run(ci);
  CHECK(r.code == 1);
  CHECK(r.err.find("cycle") != std::string::npos);

  const TempFile zero("1,0\n1,1\n");
  CHECK(run(config_for({zero.path.string()})).code == 1);

  auto bad_labels = config_for({data("example1.csv")});
  bad_labels.labels = {"a"};
  CHECK(run(bad_labels).code == 2);

  const TempFile skew("1,2\n1,1\n");
  r = run(config_for({skew.path.string()}));
  CHECK(r.code == 0);
  CHECK(r.err.find("warning: matrix 1 is not reciprocal") != std::string::npos);
}

TEST_CASE("option parsing") {
  CHECK(cli::parse_normalize("sum") == cli::NormalizeOutput::Sum);
  CHECK(cli::parse_format("csv") == cli::OutputFormat::Csv);
  CHECK_THROWS_AS(cli::parse_format("xml"), UsageError);
  CHECK(parse_semifield_kind("mult") == SemifieldKind::MaxTimes);
  CHECK(parse_semifield_kind("add") == SemifieldKind::MaxPlus);
  CHECK_THROWS_AS(parse_semifield_kind("min-plus"), UsageError);
}
