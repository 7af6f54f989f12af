#include <gtest/gtest.h>

#include <complex>
#include <sstream>

#include "unitary/cli.hpp"

using namespace unitary;
using namespace unitary::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(RunConfig cfg) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(std::string command, int n, int q, std::string target = "") {
    RunConfig c;
    c.command = std::move(command);
    c.target = std::move(target);
    c.n = n;
    c.q = q;
    return c;
}

Json parse(const std::string& s) { return Json::parse(s); }

// Complex value of a serialized cyclotomic number.
std::complex<double> value(const Json& c) {
    const int N = c["N"].get<int>();
    std::complex<double> z = 0;
    const auto& coeffs = c["coeffs"];
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const double r = coeffs[i][0].get<double>() / coeffs[i][1].get<double>();
        z += r * std::polar(1.0, 2 * M_PI * static_cast<double>(i) / N);
    }
    return z;
}

}  // namespace

TEST(Cli, ChartableOfU1IsCyclicTable) {
    Outcome o = invoke(config("chartable", 1, 2));
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = parse(o.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["conductor"], 3);
    ASSERT_EQ(j["values"].size(), 3u);
    // Characters of C_3: row j, column k carries zeta_3^{jk}, up to relabeling of rows.
    std::set<std::vector<long>> seen;
    for (const auto& row : j["values"]) {
        ASSERT_EQ(row.size(), 3u);
        std::vector<long> exps;
        for (const auto& c : row) {
            EXPECT_EQ(c["coeffs"].size(), 2u);  // padded to phi(3)
            const std::complex<double> z = value(c);
            EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
            long e = std::lround(std::arg(z) / (2 * M_PI / 3));
            exps.push_back(((e % 3) + 3) % 3);
        }
        EXPECT_EQ(exps[0], 0);
        EXPECT_EQ(exps[2], (2 * exps[1]) % 3);
        seen.insert(exps);
    }
    EXPECT_EQ(seen.size(), 3u);
    EXPECT_EQ(j["rows"][0]["label"], "{th[1:0]:(1)}");
}

TEST(Cli, ChartablePretty) {
    RunConfig c = config("chartable", 1, 2);
    c.format = Format::pretty;
    Outcome o = invoke(c);
    EXPECT_NE(o.out.find("-0.5+0.8660254038i"), std::string::npos);
}

TEST(Cli, VerifyDegreeSum) {
    RunConfig c = config("verify", 1, 2, "degree-sum");
    c.m = 2;
    Outcome o = invoke(c);
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = parse(o.out);
    EXPECT_EQ(j["status"], "PASS");
    ASSERT_EQ(j["checks"].size(), 1u);
    EXPECT_EQ(j["checks"][0]["status"], "PASS");
    EXPECT_EQ(j["checks"][0]["detail"]["value"], 12);
}

TEST(Cli, VerifyAllSmallGroup) {
    Outcome o = invoke(config("verify", 2, 2, "all"));
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = parse(o.out);
    EXPECT_EQ(j["checks"].size(), 9u);
    for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "PASS") << c["name"];
    Json t = parse(o.err);
    EXPECT_GT(t["runtime_us"].get<long>(), 0);
}

TEST(Cli, VerifySkipsBruteChecksWithoutGroup) {
    Outcome o = invoke(config("verify", 2, 5, "all"));
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = parse(o.out);
    for (const auto& c : j["checks"])
        if (c["name"] == "unsym" || c["name"] == "fs") EXPECT_EQ(c["status"], "SKIP");
    EXPECT_EQ(invoke(config("verify", 2, 5, "fs")).code, 2);
}

TEST(Cli, BudgetIsHonored) {
    RunConfig c = config("bruteforce", 2, 3);
    c.max_group_order = 50;
    Outcome o = invoke(c);
    EXPECT_EQ(o.code, 2);
    EXPECT_EQ(parse(o.err)["error"]["kind"], "bound_exceeded");
}

TEST(Cli, Deterministic) {
    std::vector<RunConfig> cfgs{config("orbits", 3, 3), config("classes", 2, 3), config("chartable", 2, 3), config("degrees", 3, 2),
                                config("decompose", 2, 3, "model"), config("verify", 2, 3, "all"), config("bruteforce", 2, 3)};
    for (const auto& c : cfgs) {
        Outcome a = invoke(c), b = invoke(c);
        EXPECT_EQ(a.code, 0) << c.command << " " << a.err;
        EXPECT_EQ(a.out, b.out) << c.command;
    }
    RunConfig par = config("chartable", 3, 2);
    par.parallel = 3;
    EXPECT_EQ(invoke(par).out, invoke(config("chartable", 3, 2)).out);
}

TEST(Cli, InvalidConfigurations) {
    std::vector<RunConfig> bad{config("chartable", 1, 6), config("chartable", 0, 2), config("nonsense", 1, 2),
                               config("verify", 1, 2, "everything"), config("decompose", 2, 2, "model"),
                               config("orbits", 1, 2, "extra"), config("bruteforce", 3, 3), config("chartable", 8, 7)};
    for (const auto& c : bad) {
        Outcome o = invoke(c);
        EXPECT_EQ(o.code, 2) << c.command << " " << c.n << " " << c.q;
        EXPECT_TRUE(o.out.empty());
        Json e = parse(o.err);
        EXPECT_EQ(e["schema"], 1);
        EXPECT_TRUE(e["error"].contains("kind"));
        EXPECT_TRUE(e["error"].contains("message"));
    }
    EXPECT_EQ(parse(invoke(config("decompose", 2, 2, "model")).err)["error"]["kind"], "even_q");
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Cli, EvenQOverrideIsMarkedConjectural) {
    RunConfig c = config("decompose", 2, 2, "model");
    c.allow_even_q = true;
    Outcome o = invoke(c);
    ASSERT_EQ(o.code, 0);
    Json j = parse(o.out);
    EXPECT_TRUE(j["conjectural"].get<bool>());
    EXPECT_TRUE(j["union_ok"].get<bool>());
    RunConfig s = config("decompose", 1, 3, "sp-induction");
    s.r = 1;
    Json sp = parse(invoke(s).out);
    EXPECT_FALSE(sp["conjectural"].get<bool>());
    EXPECT_EQ(sp["constituents"].size(), 4u);
    EXPECT_EQ(value(sp["degree"]).real(), 4.0);
}

TEST(Cli, GelfandGraevDegree) {
    RunConfig c = config("decompose", 2, 2, "gelfand-graev");
    Json j = parse(invoke(c).out);
    EXPECT_EQ(j["constituents"].size(), 6u);
    EXPECT_EQ(j["degree"]["coeffs"][0][0], 9);
}

TEST(Cli, DegreesCsv) {
    RunConfig c = config("degrees", 2, 2);
    c.format = Format::csv;
    Outcome o = invoke(c);
    std::istringstream in(o.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "lambda,degree,tau,height,odd_conjugate");
    std::multiset<std::string> degrees;
    while (std::getline(in, line)) {
        // Labels may be quoted and contain commas; the last four fields are plain.
        std::vector<std::string> tail;
        std::string rest = line;
        for (int i = 0; i < 4; ++i) {
            const size_t cut = rest.rfind(',');
            ASSERT_NE(cut, std::string::npos) << line;
            tail.push_back(rest.substr(cut + 1));
            rest = rest.substr(0, cut);
        }
        degrees.insert(tail.back());
    }
    EXPECT_EQ(degrees, (std::multiset<std::string>{"1", "1", "1", "1", "1", "1", "2", "2", "2"}));
}

TEST(Cli, ClassesSumToOrder) {
    Json j = parse(invoke(config("classes", 2, 3)).out);
    EXPECT_EQ(j["order"], 96);
    long total = 0;
    for (const auto& c : j["classes"]) total += c["size"].get<long>();
    EXPECT_EQ(total, 96);
}

TEST(Cli, OrbitCounts) {
    Json j = parse(invoke(config("orbits", 2, 2)).out);
    EXPECT_EQ(j["levels"][1]["d_m"], 0);  // N_2 = N_1 = 3 at q = 2
    EXPECT_EQ(j["theta"].size(), 3u);
    EXPECT_EQ(j["phi"][0]["kind"], "phi");
}

TEST(Cli, BruteforceReport) {
    Json j = parse(invoke(config("bruteforce", 2, 2)).out);
    EXPECT_EQ(j["order"], 18);
    EXPECT_EQ(j["classes"].size(), 9u);
    EXPECT_EQ(j["symmetric_count"], 12);
    EXPECT_EQ(j["fs_indicators"].size(), 9u);
    for (const auto& [label, e] : j["fs_indicators"].items()) EXPECT_EQ(value(e).real(), 1.0) << label;
    for (const auto& c : j["classes"]) EXPECT_EQ(c["size"], c["expected_size"]);
}

TEST(Cli, CheckStatusStrings) {
    CheckResult r{"x"};
    EXPECT_STREQ(r.status_string(), "PASS");
    r.status = CheckResult::Status::fail;
    EXPECT_TRUE(r.failed());
    EXPECT_STREQ(r.status_string(), "FAIL");
}
