#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(PPVAL_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return ::testing::TempDir() + "ppval_cli_" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CountFamilies) {
    EXPECT_EQ(run("count pp 3").out, "980\n");
    EXPECT_EQ(run("count SPP 4").out, "2772\n");
    EXPECT_EQ(run("count tspp 5").out, "352\n");
    EXPECT_EQ(run("count tsscpp 4").out, "2\n");
    EXPECT_EQ(run("count tsscpp 16").out, "10850216\n");
}

TEST(Cli, CountFormula) {
    const auto r = run("count --formula 'prod i,j,k : 1<=i<=n, 1<=j<=n, 1<=k<=n : (i+j+k-1)/(i+j+k-2)' 4");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "232848\n");

    const std::string path = temp_path("formula.txt");
    std::ofstream(path) << "prod j,i : 1<=j<=i<=n : (i+j+n-1)/(i+j-1)\n";
    EXPECT_EQ(run("count --formula-file " + path + " 3").out, "112\n");
}

TEST(Cli, NonIntegerFormulaPrintsRatio) {
    EXPECT_EQ(run("count --formula 'prod i : 1<=i<=n : (2*i+1)/(2*i)' 1").out, "3/2\n");
}

TEST(Cli, Valuations) {
    EXPECT_EQ(run("v2 pp 3").out, "2\n");
    EXPECT_EQ(run("v2 tspp 3").out, "4\n");
    EXPECT_EQ(run("v2 tsscpp 4").out, "1\n");
    const auto checked = run("v2 spp 40 --oracle");
    EXPECT_EQ(checked.status, 0);
    EXPECT_EQ(checked.out, run("v2 spp 40").out);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("count tsscpp 5").status, 2);
    EXPECT_EQ(run("v2 tsscpp 7").status, 2);
    EXPECT_EQ(run("count ppx 3").status, 2);
    EXPECT_EQ(run("count pp three").status, 2);
    EXPECT_EQ(run("count --formula 'prod i : 1<=i : (i)/(i)' 3").status, 2);
    EXPECT_EQ(run("count --formula 'prod i 1<=i<=n : (i)/(i)' 3").status, 2);
    EXPECT_EQ(run("v2 pp 61 --oracle").status, 2);
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, VerifyTheoremAndLemma) {
    const auto theorem = run("verify theorem --max 300");
    EXPECT_EQ(theorem.status, 0);
    EXPECT_EQ(theorem.out, "even_positive\t[2,300] even\tHolds\t\nodd_negative\t[3,300] odd\tHolds\t\n");
    const auto lemma = run("verify lemma --max 5000");
    EXPECT_EQ(lemma.status, 0);
    EXPECT_NE(lemma.out.find("k_le_D_lt_2k\t[1,5000]\tHolds"), std::string::npos);
}

TEST(Cli, VerifyFramesReportsLowColumnGap) {
    const auto r = run("verify frames --max 64");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("column_decomposition\t[1,64]\tHolds"), std::string::npos);
    EXPECT_NE(r.out.find("top_column_exact\t[1,64]\tHolds"), std::string::npos);
    EXPECT_NE(r.out.find("low_column_proximity\t[1,64]\tFails\tk=10 b=2 direct=2 printed=2/3"), std::string::npos);
}

TEST(Cli, AuditWritesReports) {
    const std::string tsv = temp_path("audit.tsv");
    const std::string json = temp_path("audit.json");
    const auto r = run("audit --max 40 --report " + tsv + " --json " + json);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(slurp(tsv), r.out);
    EXPECT_NE(r.out.find("case2_shift_correction\t[3,40] odd\tFails\tn=3 lhs=-2 rhs=0"), std::string::npos);
    EXPECT_NE(slurp(json).find("\"case2_reindex_2k1\""), std::string::npos);
}

TEST(Cli, SeriesCsv) {
    const std::string path = temp_path("series.csv");
    EXPECT_EQ(run("series --max 4 --out " + path).status, 0);
    EXPECT_EQ(slurp(path),
              "cube,v2_pp,v2_spp,v2_tspp,v2_tsscpp,diff,ratio_even,odd_margin\n"
              "1,1,1,1,,0,,3\n2,2,1,0,0,2,0,\n3,2,4,4,,-2,,4\n4,4,2,1,1,3,5/3,\n");
    EXPECT_EQ(run("series --max 4").out, slurp(path));
}

TEST(Cli, Stats) {
    const auto ratio = run("stats ratio --max 64");
    EXPECT_EQ(ratio.status, 0);
    EXPECT_EQ(ratio.out.substr(0, 9), "max\t5/3\na");
    EXPECT_EQ(run("stats minima --max 255").status, 0);
    const auto profile = run("stats tsscpp-profile --m 2 3");
    EXPECT_EQ(profile.status, 0);
    EXPECT_EQ(profile.out, "m=2\t[3,5]\tmax=1\ttarget=1\tmatch\nm=3\t[6,10]\tmax=3\ttarget=3\tmatch\n");
}

TEST(Cli, FrameMatchesLibraryDeterministically) {
    const auto a = run("frame --k 11");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, run("frame --k 11").out);
    EXPECT_EQ(a.out.rfind("k = 11: low window [0, 10], high window [22, 32]", 0), 0u);
}
