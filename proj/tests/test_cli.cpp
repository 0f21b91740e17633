#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome cli(const std::string& args) {
  const std::string command = std::string(SIGMAKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  Outcome result;
  if (!pipe)
    return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

TEST(Cli, ElementProductCancels) {
  const Outcome r = cli("element mul '[(**),*]|[*,(**)]' '[*,(**)]|[*,*,*]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[(**),*]|[*,*,*]\n");
}

TEST(Cli, ElementProductOfInverses) {
  const Outcome r = cli("element mul '((**)*)|(*(**))' '(*(**))|((**)*)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "*|*\n");
}

TEST(Cli, CharacterOnIdentityIsZero) {
  const Outcome r = cli("element char --n 3 --chi psi0 '*|*'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, CharacterMatchesBasisValues) {
  const Outcome basis = cli("--json element chars '((***)**)|(**(***))'");
  const auto values = nlohmann::json::parse(basis.out);
  const long long expected = values["chi0"].get<long long>() + 2 * values["psi"][0].get<long long>();
  const Outcome r = cli("element char --n 3 --chi 'chi0 + 2*psi0' '((***)**)|(**(***))'");
  EXPECT_EQ(r.out, std::to_string(expected) + "\n");
}

TEST(Cli, MatchingComplexIsConnected) {
  const Outcome r = cli("--json matching homology --n 3 --r 9 --D 2");
  ASSERT_EQ(r.code, 0);
  const auto data = nlohmann::json::parse(r.out);
  EXPECT_EQ(data["degrees"][0]["betti"], 0);
  EXPECT_TRUE(data["degrees"][0]["torsion"].empty());
}

TEST(Cli, SigmaQMembers) {
  const Outcome r = cli("matching sigmaq --n 3 --r 15 --q 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s=6 {e[2,4], e[6,8], e[10,12]}\n");
}

TEST(Cli, HoughtonClassify) {
  const Outcome r = cli("--json houghton classify --n 4 --a 0,0,0,1");
  ASSERT_EQ(r.code, 0);
  const auto data = nlohmann::json::parse(r.out);
  EXPECT_EQ(data["normalized"], nlohmann::json({"-1", "-1", "-1", "0"}));
  EXPECT_EQ(data["m"], 3);
  EXPECT_EQ(data["member_of"], 2);
}

TEST(Cli, HoughtonInfo) {
  const Outcome r = cli("houghton info '2; m=(0,1); map:'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "f=1 bijective=no up=2 down=2\n");
}

TEST(Cli, ClassifyF) {
  EXPECT_EQ(cli("classify --n 3 --chi psi0").out, "psi0: in Sigma^infinity\n");
  EXPECT_EQ(cli("classify --n 3 --chi 'chi0 + chi1' --m 2").out, "chi0 + chi1: not in Sigma^2\n");
}

TEST(Cli, ComplexFromStdin) {
  const std::string path = ::testing::TempDir() + "sigmakit_triangle.txt";
  std::ofstream(path) << "dim 1\nvertices 3\nfaces 6\n0\n1\n2\n0 1\n0 2\n1 2\n";
  const Outcome r = cli("--json complex homology - < " + path);
  ASSERT_EQ(r.code, 0);
  const auto data = nlohmann::json::parse(r.out);
  EXPECT_EQ(data["degrees"][1]["betti"], 1);
  EXPECT_EQ(data["euler_consistent"], true);
}

TEST(Cli, VerifyIsDeterministic) {
  const Outcome a = cli("verify --seed 42");
  const Outcome b = cli("verify --seed 42");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("[PASS] 1 characters"), std::string::npos);
}

TEST(Cli, VerifyMatchingsWithCap) {
  const Outcome r = cli("verify matchings --max-r 12");
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("verify nonsense").code, 2);
  EXPECT_EQ(cli("houghton classify --n 2 --a 1,x").code, 2);
  EXPECT_EQ(cli("element mul '(**)|*' '(**)|*'").code, 2);
  EXPECT_EQ(cli("--budget-faces 5 matching homology --n 3 --r 12 --D 2").code, 1);
}

}  // namespace
