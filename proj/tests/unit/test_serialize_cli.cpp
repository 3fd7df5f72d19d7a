#include "diffortho/cli.hpp"
#include "diffortho/serialize.hpp"

#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace diffortho;
using diffortho::testing::X;

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("diffortho_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = execute(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("spec JSON round trip") {
  MeasureSpec s = make_spec(Case::laguerre(X("0.5")), {X("1") / 3, X("2")});
  MeasureSpec t = parse_spec_json(spec_json(s));
  CHECK(t.basis.same_basis(s.basis));
  REQUIRE(t.rho.size() == 2);
  CHECK(t.rho[0] == s.rho[0]);
  CHECK_THROWS_AS(parse_spec_json("{"), Error);
  CHECK_THROWS_AS(parse_spec_json(R"({"case":"hermite","rho":["1","1"]})"), Error);
}

TEST_CASE("complex strings round trip") {
  ExtComplex z(X("1") / 7, -X("2") / 3);
  ExtComplex w = parse_complex(format_complex(z));
  CHECK(w.re == z.re);
  CHECK(w.im == z.im);
}

TEST_CASE("CSV headers") {
  CHECK(zeros_csv(ZeroCloud{}).rfind("n,index,re,im,normalized,c_n\n", 0) == 0);
  CHECK(curve_csv(LevelCurve{}).rfind("polyline_id,vertex_index,re,im\n", 0) == 0);
  CHECK(nth_root_csv({}).rfind("z,n,value,limit,rel_error\n", 0) == 0);
  CHECK(ratio_csv({}).rfind("z,n,region,ratio,error\n", 0) == 0);
}

TEST_CASE("masked field rows leave velocity empty") {
  FlowSystem sys = make_flow_system(Case::hermite(), {ExtComplex(-1), ExtComplex(1)});
  std::string csv = field_csv(sample_field(sys, -1, -1, 0, 0, 1));
  CHECK(csv.find(",1,,,\n") != std::string::npos);
}

TEST_CASE("cli happy path and determinism") {
  TempDir a("cli_a"), b("cli_b");
  for (const auto* d : {&a, &b}) {
    CHECK(run({"verify", "--case", "laguerre", "--alpha", "0", "--rho", "1,1", "--n", "6", "--out", d->path.string()}) ==
          0);
  }
  CHECK(fs::exists(a.path / "verify.csv"));
  CHECK(slurp(a.path / "verify.csv") == slurp(b.path / "verify.csv"));
  CHECK(!fs::exists(a.path / "verify.csv.tmp"));
}

TEST_CASE("cli exit codes") {
  TempDir d("cli_codes");
  std::string err;
  CHECK(run({"construct", "--case", "laguerre", "--alpha", "0", "--rho", "-1,1", "--n", "6", "--out", d.path.string()},
            &err) == kExitInput);
  CHECK(err.find("E_MEASURE") != std::string::npos);
  CHECK(run({"construct", "--case", "laguerre", "--rho", "1,1", "--n", "1", "--out", d.path.string()}) == kExitInput);
  CHECK(run({"frobnicate"}) == kExitInput);
  CHECK(run({"curve", "--case", "hermite", "--zeta", "4", "--window", "20,21,20,21", "--step", "0.1", "--out",
             d.path.string()}) == kExitNumeric);
  CHECK(run({"asympt", "--case", "hermite", "--rho", "1,0,1", "--n", "20", "--z", "0.5", "--out", d.path.string()}) ==
        kExitInput);  // on the support
}

TEST_CASE("cli curve and flow") {
  TempDir d("cli_curve");
  CHECK(run({"curve", "--case", "hermite", "--zeta", "4+0i", "--window", "-3,5,-3,3", "--step", "0.02", "--out",
             d.path.string()}) == 0);
  std::string csv = slurp(d.path / "curve.csv");
  CHECK(csv.rfind("polyline_id,vertex_index,re,im\n", 0) == 0);
  CHECK(csv.size() > 1000);
  CHECK(run({"flow", "--case", "hermite", "--rho", "1,0,1", "--n", "6", "--field-window", "-2,2,-2,2", "--field-step",
             "0.5", "--out", d.path.string()}) == 0);
  CHECK(fs::exists(d.path / "stagnation_6.csv"));
  CHECK(fs::exists(d.path / "field_6.csv"));
  CHECK(slurp(d.path / "flow_6.json").find("\"strengths\"") != std::string::npos);
}

TEST_CASE("precision from the environment") {
  TempDir d("cli_prec");
  ::setenv(kPrecisionEnv, "128", 1);
  CHECK(run({"construct", "--case", "hermite", "--rho", "1,0,1", "--n", "4", "--out", d.path.string()}) == 0);
  ::unsetenv(kPrecisionEnv);
  const std::string low = slurp(d.path / "qhat_4.json");
  CHECK(run({"construct", "--case", "hermite", "--rho", "1,0,1", "--n", "4", "--out", d.path.string()}) == 0);
  CHECK(low.size() < slurp(d.path / "qhat_4.json").size());
  CHECK(run({"construct", "--case", "hermite", "--rho", "1,0,1", "--n", "4", "--precision", "32", "--out",
             d.path.string()}) == kExitInput);
}
