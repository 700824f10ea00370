#include <sstream>

#include "doctest.h"
#include "uncross/checks.hpp"
#include "uncross/cli.hpp"

using namespace uncross;

TEST_SUITE_BEGIN("checks");

TEST_CASE("every named check passes at n=2 and n=3") {
  for (int n = 2; n <= 3; ++n) {
    CheckContext ctx(n);
    for (const auto& name : all_check_names()) {
      if (name == "shelling" && n != 3) continue;
      const CheckReport rep = run_check(name, ctx);
      INFO("check ", name, " at n=", n, ": ",
           rep.violations.empty() ? "" : rep.violations[0]);
      CHECK(rep.pass());
      CHECK(rep.casesChecked > 0);
    }
  }
  CHECK_THROWS_AS(run_check("no-such-check", CheckContext(2)), std::invalid_argument);
}

TEST_CASE("universe sizes match independent counts") {
  CheckContext ctx(3);
  // comparable pairs straight from the closure
  long long pairs = 0;
  for (int y = 1; y <= ctx.num_matchings(); ++y)
    ctx.P.down_set(y).for_each([&](int x) {
      if (x != 0) ++pairs;
    });
  CHECK(check_class_exclusion(ctx).casesChecked == pairs * 2 * ctx.n);
  CHECK(check_lifting(ctx).casesChecked == pairs * 2 * ctx.n * 2);
  CHECK(check_duality(ctx).casesChecked ==
        (long long)ctx.num_matchings() * ctx.num_matchings());
  // kappa sweeps every (eta, i) with i in B(eta)
  long long bsites = 0;
  for (int y = 1; y <= ctx.num_matchings(); ++y)
    for (int i = 1; i <= 2 * ctx.n; ++i)
      if (ctx.cls_of(y, i) == BoundaryClass::B) ++bsites;
  CHECK(check_kappa(ctx).casesChecked == bsites);
}

TEST_CASE("negative control: a corrupted bruhat oracle fails loudly") {
  CheckContext ctx(2);
  const BruhatLeqFn negated = [](const AffinePermutation& u, const AffinePermutation& w) {
    return !bruhat_leq(u, w);
  };
  const CheckReport lift = check_lifting(ctx, negated);
  CHECK_FALSE(lift.pass());
  CHECK(!lift.violations.empty());
  const CheckReport dual = check_duality(ctx, negated);
  CHECK_FALSE(dual.pass());
  // counterexamples name the offending pair
  CHECK(dual.violations[0].find("pair") != std::string::npos);
}

TEST_CASE("reports serialize to one json line") {
  CheckReport rep;
  rep.name = "demo";
  rep.universe = "nothing";
  rep.casesChecked = 3;
  rep.violations = {"bad thing"};
  const std::string line = to_json_line(rep);
  CHECK(line ==
        "{\"name\":\"demo\",\"universe\":\"nothing\",\"casesChecked\":3,"
        "\"violations\":[\"bad thing\"]}");
}

TEST_CASE("cli verify is deterministic and reports every check") {
  CliConfig cfg;
  cfg.command = "verify";
  cfg.n = 2;
  std::ostringstream out1, out2, err;
  CHECK(cli_run(cfg, out1, err) == 0);
  CHECK(cli_run(cfg, out2, err) == 0);
  CHECK(out1.str() == out2.str());
  CHECK(out1.str().find("\"allPass\":true") != std::string::npos);
  for (const auto& name : default_check_names(2))
    CHECK(out1.str().find("\"name\":\"" + name + "\"") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
  std::ostringstream out, err;
  CliConfig bad;
  bad.command = "verify";
  bad.n = 0;
  CHECK(cli_run(bad, out, err) == 2);
  bad.n = 2;
  bad.checks = {"bogus"};
  CHECK(cli_run(bad, out, err) == 2);
  CliConfig big;
  big.command = "build";
  big.n = 9;
  CHECK(cli_run(big, out, err) == 2);
  CliConfig v5;
  v5.command = "verify";
  v5.n = 5;  // missing --budget
  CHECK(cli_run(v5, out, err) == 2);
}

TEST_CASE("cli build writes the poset json") {
  CliConfig cfg;
  cfg.command = "build";
  cfg.n = 3;
  cfg.bottom = true;
  std::ostringstream out, err;
  CHECK(cli_run(cfg, out, err) == 0);
  const std::string s = out.str();
  CHECK(s.find("\"includesBottom\": true") != std::string::npos);
  size_t ids = 0;
  for (size_t p = s.find("\"id\":"); p != std::string::npos; p = s.find("\"id\":", p + 1))
    ++ids;
  CHECK(ids == 16);
}

TEST_CASE("cli mobius agrees with rank parity on the full interval") {
  CliConfig cfg;
  cfg.command = "mobius";
  cfg.n = 3;
  cfg.bottom = true;
  cfg.x = 0;
  {
    // the top element's id in enumeration order
    const GradedPoset P = GradedPoset::build(3, true);
    cfg.y = P.id_of(top_matching(3));
  }
  std::ostringstream out, err;
  CHECK(cli_run(cfg, out, err) == 0);
  CHECK(out.str().find("\"mu\":1") != std::string::npos);
  // two distinct atoms are incomparable: exit 1
  CliConfig inc = cfg;
  {
    const GradedPoset P = GradedPoset::build(3, true);
    inc.x = P.id_of(Matching({2, 1, 4, 3, 6, 5}));
    inc.y = P.id_of(Matching({2, 1, 6, 5, 4, 3}));
  }
  std::ostringstream out2, err2;
  CHECK(cli_run(inc, out2, err2) == 1);
  CHECK(err2.str().find("incomparable") != std::string::npos);
}

TEST_CASE("cli shelling passes at n=3") {
  CliConfig cfg;
  cfg.command = "shelling";
  cfg.n = 3;
  std::ostringstream out, err;
  CHECK(cli_run(cfg, out, err) == 0);
  CHECK(out.str().find("\"relabeling\":0") != std::string::npos);
}

TEST_CASE("cli medial-demo resolves the chosen matching") {
  CliConfig cfg;
  cfg.command = "medial-demo";
  cfg.n = 2;
  cfg.matching_json = "[3,4,1,2]";
  std::ostringstream out, err;
  CHECK(cli_run(cfg, out, err) == 0);
  CHECK(out.str().find("\"crossings\":1") != std::string::npos);
  CHECK(out.str().find("\"matchingAfterReduction\":[2,1,4,3]") != std::string::npos);
  CliConfig bad = cfg;
  bad.matching_json = "[1,2,3]";
  std::ostringstream out2, err2;
  CHECK(cli_run(bad, out2, err2) == 2);
}

TEST_CASE("worker count does not change the report bytes") {
  CliConfig one;
  one.command = "verify";
  one.n = 3;
  one.jobs = 1;
  CliConfig many = one;
  many.jobs = 4;
  std::ostringstream a, b, err;
  CHECK(cli_run(one, a, err) == 0);
  CHECK(cli_run(many, b, err) == 0);
  CHECK(a.str() == b.str());
}

TEST_SUITE_END();
