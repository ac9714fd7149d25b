#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "qhom/cli.hpp"
#include "qhom/enumerate.hpp"
#include "qhom/io.hpp"

using namespace qhom;
namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string fx(char const* name) {
    return (fixtures::dir() / name).string();
  }

  fs::path scratch(std::string const& name) {
    auto dir = fs::temp_directory_path() / "qhom_test_cli";
    fs::create_directories(dir);
    return dir / name;
  }

}  // namespace

TEST_CASE("qnd parsing") {
  CHECK(load_quandle(fx("r3.qnd")) == fixtures::r3());
  CHECK(parse_qnd("# leading\nqnd 1\n\n2 # order\n0 1\n# between\n0 1\n") == QuandleTable::trivial(2));

  CHECK_THROWS_WITH_AS(parse_qnd("qnd 2\n1\n0\n"), doctest::Contains("version"), file_error);
  try {
    parse_qnd("qnd 1\n3\n0 2 1\n2 1\n1 0 2\n");
    FAIL("expected a parse error");
  } catch (file_error const& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_qnd("qnd 1\n2\n0 1\n"), file_error);
  CHECK_THROWS_AS(parse_qnd("qnd 1\n2\n0 1\n0 1\n0 1\n"), file_error);
  CHECK_THROWS_AS(parse_qnd("qnd 1\n2\n0 x\n0 1\n"), file_error);
  CHECK_THROWS_AS(parse_qnd("qnd 1\n2\n0 2\n0 1\n"), file_error);
  CHECK_THROWS_AS(parse_qnd("qnd 1\n2\n1 1\n0 0\n"), invalid_quandle);
  CHECK_THROWS_AS(load_quandle(fx("missing.qnd")), input_error);

  for (auto const& q : {fixtures::r3(), fixtures::f4a()}) {
    CHECK(parse_qnd(format_qnd(q, {"note"})) == q);
  }
}

TEST_CASE("mesh parsing") {
  auto m = load_mesh(fx("t13.mesh"));
  REQUIRE(m.index_count() == 2);
  CHECK(m.groups[1].order() == 3);
  CHECK(m.consts[0][1] == 1);
  CHECK(m.consts[1][0] == 1);
  CHECK(parse_mesh(format_mesh(m)).consts == m.consts);

  auto r3 = load_mesh(fx("r3.mesh"));
  CHECK(mesh_to_quandle(r3).table == fixtures::r3());
  CHECK(parse_mesh(format_mesh(r3)).phi == r3.phi);

  CHECK_THROWS_AS(parse_mesh("mesh 2\ncomponents 1\ngroup 0 Z1\n"), file_error);
  CHECK_THROWS_AS(parse_mesh("mesh 1\ncomponents 2\ngroup 0 Z1\n"), file_error);
  CHECK_THROWS_AS(parse_mesh("mesh 1\ncomponents 1\ngroup 0 Z1\ngroup 0 Z1\n"), file_error);
  CHECK_THROWS_AS(parse_mesh("mesh 1\ncomponents 1\ngroup 0 Y3\n"), file_error);
  CHECK_THROWS_AS(parse_mesh("mesh 1\ncomponents 1\ngroup 0 Z3\nphi 0 0 0 2\n"), file_error);
  CHECK_THROWS_AS(parse_mesh("mesh 1\ncomponents 1\ngroup 0 Z3\nconst 0 0 3\n"), file_error);
  CHECK_THROWS_AS(parse_mesh("mesh 1\ncomponents 1\ngroup 0 Z3\nwibble\n"), file_error);

  auto unlabelled = AffineMesh::zero({AbelianGroupTable::from_table(2, {0, 1, 1, 0})});
  CHECK_THROWS_AS(format_mesh(unlabelled), input_error);
}

TEST_CASE("hom command") {
  auto r = run({"hom", fx("triv2.qnd"), fx("triv3.qnd"), "--count", "--method", "auto"});
  CHECK(r.code == 0);
  CHECK(r.out == "9\n");

  for (char const* method : {"brute", "mesh", "auto"}) {
    auto t = run({"hom", fx("f4a.qnd"), fx("t13.mesh"), "--count", "--method", method});
    CHECK(t.code == 0);
    CHECK(t.out == "13\n");
  }

  auto list = run({"hom", fx("triv1.qnd"), fx("q3_3.qnd"), "--list"});
  CHECK(list.out == "homset 1 3 3 two_reductive_mesh\n0\n1\n2\n");

  auto general = run({"hom", fx("triv2.qnd"), fx("r3.mesh"), "--list", "--method", "mesh"});
  CHECK(general.code == 0);
  CHECK(general.out.rfind("homset 2 3 3 general_mesh\n", 0) == 0);

  auto table = run({"hom", fx("r3.qnd"), fx("r3.qnd"), "--table"});
  CHECK(table.code == 0);
  CHECK(parse_qnd(table.out).order() == 9);

  CHECK(run({"hom", fx("r3.qnd"), fx("r3.qnd"), "--count", "--list"}).code == 2);
  CHECK(run({"hom", fx("r3.qnd"), fx("r3.qnd"), "--count", "--method", "magic"}).code == 2);
  CHECK(run({"hom", fx("triv2.qnd"), fx("r3.qnd"), "--count", "--method", "mesh"}).code == 2);
}

TEST_CASE("brute and mesh methods agree") {
  std::vector<std::string> files{"triv1.qnd", "triv2.qnd", "triv3.qnd", "r3.qnd", "q3_3.qnd",
                                 "f4a.qnd",   "f4a.mesh",  "t13.mesh",  "r3.mesh"};
  for (auto const& s : files) {
    for (auto const& t : files) {
      auto brute = run({"hom", fx(s.c_str()), fx(t.c_str()), "--count", "--method", "brute"});
      auto mesh  = run({"hom", fx(s.c_str()), fx(t.c_str()), "--count", "--method", "mesh"});
      auto aut   = run({"hom", fx(s.c_str()), fx(t.c_str()), "--count"});
      CAPTURE(s);
      CAPTURE(t);
      CHECK(brute.code == 0);
      CHECK(aut.out == brute.out);
      if (mesh.code == 0) {
        CHECK(mesh.out == brute.out);
      }
    }
  }
}

TEST_CASE("props, components, identity, check") {
  auto p = run({"props", fx("f4a.qnd")});
  CHECK(p.code == 0);
  for (char const* line : {"medial: true\n", "two_reductive: true\n", "latin: false\n",
                           "connected: false\n", "components: 2\n"}) {
    CHECK(p.out.find(line) != std::string::npos);
  }

  CHECK(run({"components", fx("q3_3.qnd")}).out == "0 1 | 2\n");

  auto yes = run({"identity", fx("r3.qnd"), "(x*y)*(z*w) = (x*z)*(y*w)"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "true\n");
  auto no = run({"identity", fx("r3.qnd"), "(x*y)*z = y*z"});
  CHECK(no.code == 1);
  CHECK(no.out == "false\nwitness: x=0 y=1 z=0\n");
  CHECK(run({"identity", fx("r3.qnd"), "(x*y = y"}).code == 2);

  CHECK(run({"check", fx("r3.qnd")}).out == "ok\n");
  auto bad = scratch("bad.qnd");
  write_text_file(bad, "qnd 1\n2\n1 1\n0 0\n");
  auto c = run({"check", bad.string()});
  CHECK(c.code == 1);
  CHECK(c.out.rfind("fail: idempotence", 0) == 0);
  CHECK(run({"props", bad.string()}).code == 2);
}

TEST_CASE("quotient command") {
  auto q = run({"quotient", fx("r3.qnd"), "--two-reductive"});
  CHECK(q.code == 0);
  CHECK(parse_qnd(q.out) == QuandleTable::trivial(1));

  auto m = run({"quotient", fx("q3_3.qnd"), "--identity", "x*y = y"});
  CHECK(parse_qnd(m.out) == QuandleTable::trivial(2));

  auto out = scratch("quot.qnd");
  CHECK(run({"quotient", fx("f4a.qnd"), "--medial", "-o", out.string()}).code == 0);
  CHECK(load_quandle(out) == fixtures::f4a());

  CHECK(run({"quotient", fx("r3.qnd")}).code == 2);
  CHECK(run({"quotient", fx("r3.qnd"), "--medial", "--two-reductive"}).code == 2);
}

TEST_CASE("mesh round trip through files") {
  auto mesh = scratch("f4a.mesh");
  auto back = scratch("f4a_back.qnd");
  CHECK(run({"mesh", "decompose", fx("f4a.qnd"), "-o", mesh.string()}).code == 0);
  CHECK(run({"mesh", "compose", mesh.string(), "-o", back.string()}).code == 0);
  auto iso = run({"iso", fx("f4a.qnd"), back.string()});
  CHECK(iso.code == 0);
  CHECK(iso.out.rfind("true\n", 0) == 0);

  CHECK(run({"mesh", "decompose", fx("r3.qnd")}).code == 2);
  CHECK(run({"mesh"}).code == 2);
}

TEST_CASE("iso and triv") {
  auto no = run({"iso", fx("r3.qnd"), fx("q3_3.qnd")});
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");
  CHECK(run({"iso", fx("r3.qnd"), fx("r3.mesh")}).code == 0);

  auto t = run({"triv", fx("triv2.qnd"), fx("f4a.qnd")});
  CHECK(t.code == 0);
  CHECK(t.out == "count: 8\npredicted: 8\n");
}

TEST_CASE("enumerate command") {
  auto e = run({"enumerate", "3"});
  CHECK(e.code == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 3);

  auto dir = scratch("catalog4");
  fs::remove_all(dir);
  CHECK(run({"enumerate", "4", "--out-dir", dir.string()}).out == "7\n");
  CHECK(fs::exists(dir / "q4_0.qnd"));
  CHECK(fs::exists(dir / "q4_6.qnd"));
  CHECK(fs::exists(dir / "q4_index.txt"));
  CHECK(load_quandle(dir / "q4_6.qnd") == enumerate_quandles(4).entries[6].table);

  CHECK(run({"enumerate", "7"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"props"}).code == 2);
  CHECK(run({"props", fx("missing.qnd")}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("hom") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"hom", fx("f4a.qnd"), fx("t13.mesh"), "--list"},
        std::vector<std::string>{"props", fx("r3.qnd")}, std::vector<std::string>{"enumerate", "4"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
