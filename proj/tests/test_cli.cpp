#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + RECAP_CLI_PATH + "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

const std::string kFib = R"(--json '{"coeffs":[1,1],"initial":[0,1]}')";

using Triple = std::array<long, 3>;

std::vector<Triple> triples(const nlohmann::json& arr) {
    std::vector<Triple> out;
    for (const auto& s : arr)
        out.push_back({s["outer"][0].get<long>(), s["mean"].get<long>(), s["outer"][1].get<long>()});
    return out;
}

}  // namespace

TEST(Cli, HelpAndUsage) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("search " + kFib + " --terms 5").code, 2);
    EXPECT_EQ(run("search " + kFib + " --window 9:3").code, 2);
    EXPECT_EQ(run("search " + kFib + " --window abc").code, 2);
    EXPECT_EQ(run("factor --variant mid 7").code, 2);
    EXPECT_EQ(run("factor --variant side 7 2").code, 2);
}

TEST(Cli, MalformedInput) {
    EXPECT_EQ(run(R"(classify --json '{"coeffs":[1,1],')").code, 2);
    EXPECT_EQ(run(R"(classify --json '{"coeffs":[1,"q"],"initial":[0,1]}')").code, 2);
    EXPECT_EQ(run("classify --input /nonexistent/rec.json").code, 2);
}

TEST(Cli, ResourceCap) {
    EXPECT_EQ(run("search " + kFib + " --window 0:100", "RECAP_MAX_WINDOW=50").code, 3);
    EXPECT_EQ(run("search " + kFib + " --window 0:40", "RECAP_MAX_WINDOW=50").code, 0);
}

TEST(Cli, FibonacciSearch) {
    auto r = run("search " + kFib + " --window 0:60");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["families"].size(), 1u);
    EXPECT_EQ(j["families"][0]["notation"], "(f_{n}, f_{n+2}, f_{n+3})");
    EXPECT_EQ(triples(j["isolated"]), (std::vector<Triple>{{0, 1, 3}, {2, 3, 4}, {1, 4, 5}}));
    EXPECT_EQ(j["members"].size(), 58u);
    EXPECT_FALSE(j["symmetric_families"].empty());
    EXPECT_FALSE(j["isolated"][0]["symmetric_families"].empty());
    for (const auto& s : j["members"]) {
        long m = s["outer"][0], n = s["mean"], k = s["outer"][1];
        EXPECT_TRUE((n == m + 2 && k == m + 3) || (m == 1 && n == k - 1)) << s.dump();
    }
}

TEST(Cli, FibonacciFourTerms) {
    auto r = run("search " + kFib + " --window 0:60 --terms 4");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    std::vector<std::vector<long>> got;
    for (const auto& s : j["solutions"]) got.push_back(s["indices"].get<std::vector<long>>());
    EXPECT_EQ(got, (std::vector<std::vector<long>>{{0, 1, 3, 4}, {0, 2, 3, 4}}));
}

TEST(Cli, UnitaryDeclaredFamily) {
    auto r = run(R"(search --json '{"coeffs":[1,2],"initial":[0,1]}' --window 1:60)");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["families"].size(), 1u);
    EXPECT_TRUE(j["families"][0]["declared"].get<bool>());
    EXPECT_FALSE(j["members"].empty());
    for (const auto& s : j["members"]) {
        long m = s["outer"][0], n = s["mean"], k = s["outer"][1];
        EXPECT_TRUE((m == 1 && k == n + 1) || (k == 1 && m == n + 1)) << s.dump();
        EXPECT_EQ(n % 2, 1) << s.dump();
    }
}

TEST(Cli, Classify) {
    auto r = run("classify " + kFib);
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["structure"]["minimal_order"], 2);
    EXPECT_FALSE(j["structure"]["is_degenerate"].get<bool>());
    EXPECT_EQ(j["families"][0]["kind"], "shift");

    // n 2^n: exceptional with K = 1, gamma = 0, R = 1
    auto e = nlohmann::json::parse(run(R"(classify --json '{"coeffs":[4,-4],"initial":[0,2]}')").out);
    ASSERT_TRUE(e["structure"].contains("exceptional"));
    EXPECT_EQ(e["families"][0]["kind"], "exceptional");

    auto d = run(R"(classify --json '{"coeffs":[0,-1],"initial":[1,1]}' --format text)");
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("degenerate: yes"), std::string::npos) << d.out;
}

TEST(Cli, Factor) {
    auto mid = nlohmann::json::parse(run("factor --variant mid 7 2").out);
    EXPECT_TRUE(mid["certified"].get<bool>());
    EXPECT_TRUE(mid["exception"].get<bool>());
    EXPECT_EQ(mid["factors"].size(), 2u);

    auto low = run("factor --variant low 4 1 --format text");
    EXPECT_EQ(low.code, 0);
    EXPECT_NE(low.out.find("certified: yes"), std::string::npos) << low.out;

    auto p = run("factor --poly 'X^4+X^2-2' --format text");
    EXPECT_EQ(p.code, 0);
    EXPECT_NE(p.out.find("(X - 1) (X + 1) (X^2 + 2)"), std::string::npos) << p.out;
    EXPECT_NE(p.out.find("certified: yes"), std::string::npos) << p.out;
}

TEST(Cli, VerifyPaperReportsFailures) {
    EXPECT_EQ(run("verify-paper --lemma-degree-bound 1").code, 2);
    auto r = run("verify-paper --lemma-degree-bound 8 --window 0:20 --format text");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("PASS table_bin"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("FAIL table_ter"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS unitary"), std::string::npos) << r.out;
}

TEST(Cli, Deterministic) {
    auto a = run("search " + kFib + " --window -10:40");
    auto b = run("search " + kFib + " --window -10:40");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("classify " + kFib).out, run("classify " + kFib).out);
}
