#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "hlzeta/report.hpp"
#include "hlzeta/suite.hpp"

using namespace hlzeta;

TEST(Registry, SortedUniqueAnchored) {
    const auto& reg = suite_registry();
    ASSERT_GT(reg.size(), 200u);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        EXPECT_TRUE(seen.insert(reg[i].id).second) << reg[i].id;
        if (i) EXPECT_LT(reg[i - 1].id, reg[i].id);
    }
}

TEST(Registry, Selection) {
    auto all = select_identities({"all"});
    EXPECT_EQ(all.size(), suite_registry().size());
    auto kub = select_identities({"kubert.*"});
    EXPECT_EQ(kub.size(), 20u);
    auto pre = select_identities({"franel2.table"});
    EXPECT_EQ(pre.size(), 12u);
    auto one = select_identities({"hardy2.z1", "hardy2.z1"});
    EXPECT_EQ(one.size(), 1u);
    EXPECT_THROW(select_identities({"nope.*"}), UnknownIdentityError);
    // the prefix rule respects dots: "hl.power.sin" must not pull in "hl.power.sinh"
    for (auto* e : select_identities({"hl.power"})) EXPECT_EQ(e->id.rfind("hl.power.", 0), 0u);
}

TEST(Glob, Basics) {
    EXPECT_TRUE(glob_match("kubert.*", "kubert.m2.x0.5"));
    EXPECT_TRUE(glob_match("*.s3", "crandall.relation.s3"));
    EXPECT_FALSE(glob_match("crandall.*", "chi.half.t1"));
    EXPECT_TRUE(glob_match("chi.half.t?", "chi.half.t4"));
}

TEST(Config, ParseFlatKeys) {
    auto cfg = parse_config_text(
        "# comment\n"
        "select = kubert.*, laplace.p1\n"
        "tol.crandall.* = 1e-4\n"
        "jobs = 3\n"
        "sieve_bound = 500000\n"
        "format = jsonl\n"
        "out = result.jsonl\n\n");
    EXPECT_EQ(cfg.selectors, (std::vector<std::string>{"kubert.*", "laplace.p1"}));
    ASSERT_EQ(cfg.tolerance_overrides.size(), 1u);
    EXPECT_EQ(cfg.tolerance_overrides[0].first, "crandall.*");
    EXPECT_DOUBLE_EQ(cfg.tolerance_overrides[0].second, 1e-4);
    EXPECT_EQ(cfg.jobs, 3);
    EXPECT_EQ(cfg.sieve_bound, 500000);
    EXPECT_EQ(cfg.format, "jsonl");
    EXPECT_EQ(cfg.output_path, "result.jsonl");
}

TEST(Config, Rejects) {
    EXPECT_THROW(parse_config_text("colour = blue\n"), ConfigError);
    EXPECT_THROW(parse_config_text("jobs = zero\n"), ConfigError);
    EXPECT_THROW(parse_config_text("format = xml\n"), ConfigError);
    EXPECT_THROW(parse_config_text("tol.x = -1\n"), ConfigError);
    EXPECT_THROW(parse_config_text("just a line\n"), ConfigError);
    SuiteConfig c;
    EXPECT_THROW(add_tolerance_override(c, "novalue"), ConfigError);
    add_tolerance_override(c, "hardy2.*=1e-9");
    EXPECT_EQ(c.tolerance_overrides.size(), 1u);
}

TEST(Runner, JobsDoNotChangeOutput) {
    auto sel = select_identities({"kubert.*", "laplace.*", "theta.*", "chi.half.*"});
    SuiteConfig one, four;
    one.jobs = 1;
    four.jobs = 4;
    auto a = run_suite(sel, one), b = run_suite(sel, four);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i)
        EXPECT_EQ(report_csv_row(a.reports[i]), report_csv_row(b.reports[i]));
}

TEST(Runner, CallbackSeesCanonicalOrder) {
    auto sel = select_identities({"laplace.*", "kubert.m2.*"});
    SuiteConfig cfg;
    cfg.jobs = 3;
    std::vector<std::string> ids;
    run_suite(sel, cfg, [&](const IdentityReport& r) { ids.push_back(r.id); });
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_EQ(ids.size(), sel.size());
}

TEST(Runner, OverridesAndExitCodes) {
    auto sel = select_identities({"hardy2.z1"});
    SuiteConfig cfg;
    auto ok = run_suite(sel, cfg);
    EXPECT_EQ(suite_exit_code(ok), 0);
    add_tolerance_override(cfg, "hardy2.*=1e-18");
    auto bad = run_suite(sel, cfg);
    EXPECT_EQ(suite_exit_code(bad), 1);
    EXPECT_EQ(bad.reports[0].tolerance, 1e-18);
    bool noted = false;
    for (auto& [k, v] : bad.reports[0].extras) noted |= k == "default_tolerance";
    EXPECT_TRUE(noted);
}

TEST(Runner, EngineErrorsBecomeReports) {
    std::vector<SuiteEntry> fake{{"fake.boom", []() -> IdentityReport { throw ConvergenceError("boom", 0, 1); }}};
    std::vector<const SuiteEntry*> sel{&fake[0]};
    auto r = run_suite(sel, SuiteConfig{});
    EXPECT_EQ(suite_exit_code(r), 2);
    ASSERT_EQ(r.reports.size(), 1u);
    EXPECT_FALSE(r.reports[0].pass);
    EXPECT_EQ(r.reports[0].anchor, "engine");
}

TEST(Report, PassMatchesTolerance) {
    auto r = make_report("x", "anchor", 1.0, 1.0 + 1e-9, 1e-8);
    EXPECT_TRUE(r.pass);
    auto s = make_report("x", "anchor", 1.0, 1.0 + 1e-7, 1e-8);
    EXPECT_FALSE(s.pass);
    EXPECT_EQ(fmt_num(0.1), "0.1");
    EXPECT_EQ(fmt_num(1.0 / 3.0), "0.333333333333333");
}

TEST(Report, CsvIsLfAndEscaped) {
    CsvTable t({"a", "b"});
    t.add({"1", "x,y"});
    std::ostringstream os;
    t.write(os);
    EXPECT_EQ(os.str(), "a,b\n1,\"x,y\"\n");
    std::ostringstream js;
    t.write_jsonl(js);
    EXPECT_EQ(js.str(), "{\"a\":1,\"b\":\"x,y\"}\n");
}

TEST(SuiteSmoke, EveryReportHasAnchor) {
    auto sel = select_identities({"kubert.m2.*", "franel2.table", "chi.half", "segal"});
    auto r = run_suite(sel, SuiteConfig{});
    for (auto& rep : r.reports) {
        EXPECT_FALSE(rep.anchor.empty()) << rep.id;
        EXPECT_EQ(rep.pass, rep.abs_diff <= rep.tolerance) << rep.id;
    }
}
