#include <gtest/gtest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "teinv/cli.hpp"
#include "teinv/gen_inverse.hpp"
#include "teinv/poisson.hpp"
#include "teinv/rol_laws.hpp"
#include "teinv/tensor.hpp"
#include "teinv/tensor_json.hpp"
#include "teinv/testkit.hpp"

namespace {

using teinv::DenseTensor;
using teinv::TensorShape;
using teinv::testkit::Family;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = teinv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("teinv_cli_" + name)).string();
}

std::string write_fixture(const std::string& name, const DenseTensor& t) {
  const std::string path = temp_path(name);
  teinv::save_tensor(path, t);
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream file(path, std::ios::binary);
  file << text;
  return path;
}

std::string read_text(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

DenseTensor draw(Family family, TensorShape shape, std::uint64_t seed) {
  return teinv::testkit::generate({std::move(shape), family, seed}).a;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

const TensorShape kSquare{{2, 2}, {2, 2}};

TEST(CliUsageTest, NoArgumentsIsAUsageError) {
  const CliResult r = run_cli({});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  const nlohmann::json e = parse(r.err);
  EXPECT_EQ(e.at("error").at("kind"), "usage");
  EXPECT_EQ(e.at("error").at("message"), "no subcommand given");
}

TEST(CliUsageTest, HelpPrintsTheCommandTable) {
  const CliResult r = run_cli({"help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("usage: teinv"), std::string::npos);
  EXPECT_NE(r.out.find("check-law"), std::string::npos);
  EXPECT_NE(r.out.find("poisson"), std::string::npos);
}

TEST(CliUsageTest, UnknownCommandAndFlagAreRejected) {
  const CliResult cmd = run_cli({"pineapple"});
  EXPECT_EQ(cmd.code, 2);
  EXPECT_NE(cmd.err.find("unknown command"), std::string::npos);
  const CliResult flag = run_cli({"mul", "--frobnicate"});
  EXPECT_EQ(flag.code, 2);
  EXPECT_NE(flag.err.find("unknown flag"), std::string::npos);
  const CliResult bad = run_cli({"check-law", "C3_2", "--random", "many"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("non-negative integer"), std::string::npos);
}

TEST(CliMulTest, MultipliesAndRoundTripsThroughJson) {
  const DenseTensor a = draw(Family::GeneralComplex, kSquare, 3);
  const std::string ia = write_fixture("mul_i.json", teinv::identity({2, 2}));
  const std::string aa = write_fixture("mul_a.json", a);
  const CliResult r = run_cli({"mul", ia, aa});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.err.empty());
  EXPECT_LE(teinv::rel_dist(teinv::read_tensor_json(r.out), a), 1e-15);
}

TEST(CliInverseTest, UnaryCommandsMatchTheLibrary) {
  const DenseTensor a = draw(Family::Index1, kSquare, 5);
  const std::string path = write_fixture("inv_a.json", a);
  const struct {
    const char* command;
    DenseTensor expected;
  } cases[] = {
      {"pinv", teinv::moore_penrose(a)},
      {"core", teinv::core_inverse(a)},
      {"group", teinv::group_inverse(a)},
      {"drazin", teinv::drazin(a)},
  };
  for (const auto& c : cases) {
    const CliResult r = run_cli({c.command, path});
    EXPECT_EQ(r.code, 0) << c.command;
    EXPECT_LE(teinv::rel_dist(teinv::read_tensor_json(r.out), c.expected), 1e-15) << c.command;
  }
}

TEST(CliIndexTest, ReportsIndexAndRankSequence) {
  const DenseTensor n = draw(Family::Nilpotent, kSquare, 3);
  const CliResult r = run_cli({"index", write_fixture("idx_n.json", n)});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = parse(r.out);
  EXPECT_EQ(j.at("index").get<std::size_t>(), teinv::index(n).k);
  EXPECT_TRUE(j.at("ranks").is_array());
}

TEST(CliIndexTest, IndexTooHighExitsOneWithTheComputedIndex) {
  const DenseTensor n = draw(Family::Nilpotent, kSquare, 3);
  const CliResult r = run_cli({"core", write_fixture("idx_hi.json", n)});
  EXPECT_EQ(r.code, 1);
  const nlohmann::json e = parse(r.err);
  EXPECT_EQ(e.at("error").at("kind"), "index_too_high");
  const std::string msg = e.at("error").at("message");
  EXPECT_NE(msg.find("computed index " + std::to_string(teinv::index(n).k)),
            std::string::npos);
}

TEST(CliCheckLawTest, RandomModeAggregatesAllTrials) {
  const CliResult r = run_cli({"check-law", "C3_2", "--random", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = parse(r.out);
  EXPECT_EQ(j.at("law"), "C3_2");
  EXPECT_EQ(j.at("trials").get<std::size_t>(), 100u);
  EXPECT_EQ(j.at("implication_ok").get<std::size_t>(), 100u);
  EXPECT_EQ(j.at("all_ok"), true);
  EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 7u);
  EXPECT_LE(j.at("worst_conclusion_residual").get<double>(), 1e-8);
}

TEST(CliCheckLawTest, FileModeEmitsAFullReport) {
  const teinv::testkit::Generated g = teinv::generate_law_pair(teinv::LawId::T3_1, kSquare, 4);
  const std::string a = write_fixture("law_a.json", g.a);
  const std::string b = write_fixture("law_b.json", *g.b);
  const CliResult r = run_cli({"check-law", "T3_1", a, b});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = parse(r.out);
  EXPECT_EQ(j.at("law"), "T3_1");
  EXPECT_EQ(j.at("implication_ok"), true);
  EXPECT_FALSE(j.at("hypotheses").empty());
  EXPECT_FALSE(j.at("conclusions").empty());
}

TEST(CliCheckLawTest, VacuousInstancesExitZero) {
  const std::string a = write_fixture("vac_a.json", draw(Family::GeneralComplex, kSquare, 11));
  const std::string b = write_fixture("vac_b.json", draw(Family::GeneralComplex, kSquare, 12));
  const CliResult r = run_cli({"check-law", "C3_2", a, b});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = parse(r.out);
  EXPECT_EQ(j.at("implication_ok"), true);
  EXPECT_EQ(j.at("hypotheses_pass"), false);
}

TEST(CliCheckLawTest, ReverseRequiresAnEquivalenceLaw) {
  const CliResult r = run_cli({"check-law", "T3_1", "--random", "5", "--reverse"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not an equivalence"), std::string::npos);
  const CliResult ok = run_cli({"check-law", "T4_2", "--random", "5", "--seed", "1",
                                "--reverse"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(parse(ok.out).at("reversed"), true);
}

TEST(CliCheckLawTest, UnknownLawNamesTheKnownIds) {
  const CliResult r = run_cli({"check-law", "T9_9", "--random", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("T3_1"), std::string::npos);
  EXPECT_NE(r.err.find("T_UNITARY_B"), std::string::npos);
}

TEST(CliSolveTest, ConsistentOneSidedSystemSolves) {
  const DenseTensor a = draw(Family::Index1, kSquare, 5);
  const DenseTensor b = a * draw(Family::GeneralComplex, kSquare, 9);
  const std::string pa = write_fixture("sol_a.json", a);
  const std::string pb = write_fixture("sol_b.json", b);
  const CliResult r = run_cli({"solve", "one-sided", pa, pb});
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = parse(r.out);
  EXPECT_EQ(j.at("solvable"), true);
  EXPECT_LE(j.at("residual").get<double>(), 1e-9);
  const DenseTensor x = teinv::read_tensor_json(j.at("particular").dump());
  EXPECT_LE(teinv::norm_fro(a * x - b) / (1.0 + teinv::norm_fro(b)), 1e-9);
}

TEST(CliSolveTest, InconsistentSystemExitsOneWithNotConsistent) {
  teinv::testkit::GeneratorSpec spec{kSquare, Family::Index1, 6};
  spec.rank = 2;
  const DenseTensor a = teinv::testkit::generate(spec).a;
  const std::string pa = write_fixture("bad_a.json", a);
  const std::string pb =
      write_fixture("bad_b.json", draw(Family::GeneralComplex, kSquare, 10));
  const CliResult r = run_cli({"solve", "one-sided", pa, pb});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse(r.out).at("solvable"), false);
  EXPECT_EQ(parse(r.err).at("error").at("kind"), "not_consistent");
}

TEST(CliSolveTest, TwoSidedSystemSolves) {
  const DenseTensor c = draw(Family::Index1, kSquare, 2);
  const DenseTensor d = draw(Family::Index1, {{3}, {3}}, 3);
  const DenseTensor b = c * draw(Family::GeneralComplex, {{2, 2}, {3}}, 4) * d;
  const CliResult r = run_cli({"solve", "two-sided", write_fixture("ts_c.json", c),
                               write_fixture("ts_d.json", d), write_fixture("ts_b.json", b)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse(r.out).at("solvable"), true);
}

TEST(CliPoissonTest, EmitsCsvRowsAndTheResidualLine) {
  const CliResult r = run_cli({"poisson", "--m", "4"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::vector<std::string> row;
  for (std::string line; std::getline(lines, line);) row.push_back(line);
  ASSERT_EQ(row.size(), 5u);
  EXPECT_EQ(row.back(), "residual<=1e-8");
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(std::count(row[k].begin(), row[k].end(), ','), 3) << "row " << k;
  }
}

TEST(CliPoissonTest, HonorsRhsOutAndHeatmap) {
  const std::size_t m = 3;
  const std::string rhs = write_fixture("poi_rhs.json", teinv::centered_sine_rhs(m));
  const std::string out_path = temp_path("poi_out.csv");
  const std::string heat_path = temp_path("poi_heat.csv");
  const CliResult r = run_cli({"poisson", "--m", "3", "--rhs", rhs, "--out", out_path,
                               "--heatmap", heat_path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const std::string csv = read_text(out_path);
  EXPECT_NE(csv.find("residual<=1e-8\n"), std::string::npos);
  const std::string heat = read_text(heat_path);
  EXPECT_NE(heat.find("0,0,"), std::string::npos);
  EXPECT_NE(heat.find("2,2,"), std::string::npos);
}

TEST(CliPoissonTest, RejectsWronglyShapedRhs) {
  const std::string rhs = write_fixture("poi_bad.json", draw(Family::GeneralComplex,
                                                             kSquare, 1));
  const CliResult r = run_cli({"poisson", "--m", "3", "--rhs", rhs});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse(r.err).at("error").at("kind"), "shape_mismatch");
}

TEST(CliPoissonTest, RequiresTheGridFlag) {
  const CliResult r = run_cli({"poisson"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--m"), std::string::npos);
}

TEST(CliConvertTest, CanonicalizesAndDefaultsMissingImaginaryPart) {
  const std::string path = write_text(
      "conv.json", R"({"left_shape":[2],"right_shape":[2],"re":[1,2,3,4]})");
  const CliResult r = run_cli({"convert", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"im\":[0.0,0.0,0.0,0.0]"), std::string::npos);
  const DenseTensor t = teinv::read_tensor_json(r.out);
  EXPECT_EQ(r.out, teinv::write_tensor_json(t) + "\n");
}

TEST(CliConvertTest, MalformedJsonExitsTwoNamingTheField) {
  const std::string path = write_text(
      "conv_bad.json", R"({"left_shape":[2],"right_shape":[2],"re":[1,2,3]})");
  const CliResult r = run_cli({"convert", path});
  EXPECT_EQ(r.code, 2);
  const nlohmann::json e = parse(r.err);
  EXPECT_EQ(e.at("error").at("kind"), "io");
  const std::string msg = e.at("error").at("message");
  EXPECT_NE(msg.find("\"re\""), std::string::npos);
  EXPECT_NE(msg.find("expected 4"), std::string::npos);
}

TEST(CliOutputTest, OutFlagRedirectsTheArtifact) {
  const DenseTensor a = draw(Family::GeneralComplex, kSquare, 8);
  const std::string in = write_fixture("out_a.json", a);
  const std::string dest = temp_path("out_dest.json");
  const CliResult r = run_cli({"convert", in, "--out", dest});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_LE(teinv::rel_dist(teinv::load_tensor(dest), a), 1e-15);
}

TEST(CliOutputTest, ByteStableAcrossRepeatedRuns) {
  const CliResult first = run_cli({"check-law", "T_KRON", "--random", "10", "--seed", "3"});
  const CliResult second = run_cli({"check-law", "T_KRON", "--random", "10", "--seed", "3"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
}

#ifdef TEINV_CLI_PATH
int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

TEST(CliSubprocessTest, BinaryRunsEndToEnd) {
  const std::string bin = TEINV_CLI_PATH;
  const std::string out_path = temp_path("sub_out.txt");
  const std::string err_path = temp_path("sub_err.txt");

  EXPECT_EQ(shell("'" + bin + "' check-law C3_2 --random 5 --seed 7 > '" + out_path +
                  "' 2> '" + err_path + "'"),
            0);
  EXPECT_EQ(parse(read_text(out_path)).at("all_ok"), true);
  EXPECT_TRUE(read_text(err_path).empty());

  EXPECT_EQ(shell("'" + bin + "' > '" + out_path + "' 2> '" + err_path + "'"), 2);
  EXPECT_EQ(parse(read_text(err_path)).at("error").at("kind"), "usage");

  EXPECT_EQ(shell("'" + bin + "' core '" + temp_path("sub_missing.json") + "' > '" +
                  out_path + "' 2> '" + err_path + "'"),
            2);
  EXPECT_EQ(parse(read_text(err_path)).at("error").at("kind"), "io");
}
#endif

}  // namespace
