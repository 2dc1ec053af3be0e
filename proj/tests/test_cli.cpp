#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kCli = std::string("\"") + SCHRODER_CLI_PATH + "\"";

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run(const std::string& cmd) {
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), k);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    if (end == std::string::npos) return "";
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1,
                       end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("count") {
    auto r = run(kCli + " count --kind schroeder --n 10");
    CHECK(r.status == 0);
    CHECK(last_line(r.out) == "10\t103049");
    CHECK(count_lines(r.out) == 10);

    r = run(kCli + " count --kind catalan --n 4");
    CHECK(r.status == 0);
    CHECK(r.out == "1\t1\n2\t1\n3\t2\n4\t5\n");

    r = run(kCli + " count --kind pointed --n 4");
    CHECK(r.status == 0);
    CHECK(last_line(r.out) == "4\t77\t44\t33");

    r = run(kCli + " count --kind schroeder --n 0 2>/dev/null");
    CHECK(r.status == 2);
}

TEST_CASE("verify exit codes and report lines") {
    auto r = run(kCli + " verify --recurrence 1 --n-max 50");
    CHECK(r.status == 0);
    CHECK(last_line(r.out) == "n=50 ok");

    r = run(kCli + " verify --recurrence 2 --n-max 50");
    CHECK(r.status == 0);

    r = run(kCli + " verify --recurrence sigma --n-max 3");
    CHECK(r.status == 0);
    CHECK(r.out == "n=2 pairs=9 lt=9 it=0\nn=3 pairs=45 lt=44 it=1\n");

    r = run(kCli + " verify --recurrence phi --n-max 4");
    CHECK(r.status == 0);
    CHECK(last_line(r.out) == "n=4 trees=11 ok");
}

TEST_CASE("map phi and phi-inv") {
    auto r = run("echo '{* * *}' | " + kCli + " map --which phi");
    CHECK(r.status == 0);
    CHECK(r.out == "(2 * (1 * *))\n");

    r = run("echo '(2 * (1 * *))' | " + kCli + " map --which phi-inv");
    CHECK(r.status == 0);
    CHECK(r.out == "{* * *}\n");

    r = run("echo '(2 * *)' | " + kCli + " map --which phi-inv 2>/dev/null");
    CHECK(r.status == 1);  // precondition violation

    r = run("echo '{*}' | " + kCli + " map --which phi 2>/dev/null");
    CHECK(r.status == 2);  // parse error
}

TEST_CASE("map sigma and sigma-inv") {
    auto r = run("printf \"(2 *' (1 * *))\\n\" | " + kCli + " map --which sigma --label L2");
    CHECK(r.status == 0);
    CHECK(r.out == "IT: (1' * *)\n");

    r = run("printf \"(1 *' *)\\n\" | " + kCli + " map --which sigma --label 2");
    CHECK(r.status == 0);
    CHECK(r.out == "LT: (2 * (1 * *'))\n");

    r = run("printf \"IT: (1' * *)\\n\" | " + kCli + " map --which sigma-inv");
    CHECK(r.status == 0);
    CHECK(r.out == "L2 (2 *' (1 * *))\n");

    r = run("printf \"LT: (1 (1 *' *) *)\\n\" | " + kCli + " map --which sigma-inv");
    CHECK(r.status == 0);
    CHECK(r.out == "L1 (1 *' *)\n");

    // missing label
    r = run("printf \"(1 *' *)\\n\" | " + kCli + " map --which sigma 2>/dev/null");
    CHECK(r.status == 2);
    // TooSmall
    r = run("printf \"*'\\n\" | " + kCli + " map --which sigma --label L1 2>/dev/null");
    CHECK(r.status == 1);
    // not well-weighted
    r = run("printf \"(2 *' *)\\n\" | " + kCli + " map --which sigma --label L1 2>/dev/null");
    CHECK(r.status == 1);
    // prefix contradicting the pointed node
    r = run("printf \"LT: (1' * *)\\n\" | " + kCli + " map --which sigma-inv 2>/dev/null");
    CHECK(r.status == 2);
}

TEST_CASE("enumerate") {
    auto r = run(kCli + " enumerate --kind wellweighted --n 4");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 11);

    r = run(kCli + " enumerate --kind binary --n 4");
    CHECK(count_lines(r.out) == 5);

    r = run(kCli + " enumerate --kind schroeder --n 1");
    CHECK(r.out == "*\n");

    r = run(kCli + " enumerate --kind pointed --n 3");
    CHECK(count_lines(r.out) == 15);

    r = run(kCli + " enumerate --kind wellweighted --n 2 --format jsonl");
    CHECK(r.out == "{\"n\":2,\"tree\":\"(1 * *)\"}\n");
}

TEST_CASE("enumerate piped through phi-inv then phi is the identity") {
    for (int n = 2; n <= 6; ++n) {
        std::string base = kCli + " enumerate --kind wellweighted --n " + std::to_string(n);
        auto direct = run(base);
        auto piped = run(base + " | " + kCli + " map --which phi-inv | " + kCli +
                         " map --which phi");
        CHECK(piped.status == 0);
        CHECK(direct.out == piped.out);
    }
}

TEST_CASE("sample") {
    auto r = run(kCli + " sample --kind catalan --n 2 --count 3 --seed 7");
    CHECK(r.status == 0);
    CHECK(r.out == "(* *)\n(* *)\n(* *)\n");

    r = run(kCli + " sample --kind schroeder --n 2 --count 1 --seed 1");
    CHECK(r.out == "{* *}\n");

    r = run(kCli + " sample --kind wellweighted --n 4 --count 5 --seed 42");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 5);

    // determinism and the SCHRODER_SEED default
    auto a = run(kCli + " sample --kind schroeder --n 5 --count 4 --seed 9");
    auto b = run("SCHRODER_SEED=9 " + kCli + " sample --kind schroeder --n 5 --count 4");
    CHECK(a.out == b.out);
    auto c = run(kCli + " sample --kind schroeder --n 5 --count 4 --seed 10");
    CHECK(a.out != c.out);
}

TEST_CASE("render") {
    auto r = run("echo '(1 * *)' | " + kCli + " render --format dot");
    CHECK(r.status == 0);
    CHECK(r.out.find("digraph tree {") != std::string::npos);
    std::size_t vertices = 0, edges = 0;
    for (std::size_t pos = 0; (pos = r.out.find("label=", pos)) != std::string::npos; ++pos)
        ++vertices;
    for (std::size_t pos = 0; (pos = r.out.find(" -> ", pos)) != std::string::npos; ++pos)
        ++edges;
    CHECK(vertices == 3);
    CHECK(edges == 2);

    r = run("echo '*' | " + kCli + " render --format ascii");
    CHECK(r.out == "*\n");

    r = run("printf \"(2' * (1 * *))\\n\" | " + kCli + " render --format dot");
    CHECK(r.status == 0);
    CHECK(r.out.find("peripheries=2") != std::string::npos);
    CHECK(r.out.find("label=\"2'\"") != std::string::npos);

    r = run("echo '{* * *}' | " + kCli + " render --format ascii");
    CHECK(r.out == ".\n  *\n  *\n  *\n");

    r = run("echo '(1 * ' | " + kCli + " render --format dot 2>/dev/null");
    CHECK(r.status == 2);
}

TEST_CASE("usage errors") {
    auto r = run(kCli + " 2>/dev/null");
    CHECK(r.status == 2);
    r = run(kCli + " count --kind nonsense --n 3 2>/dev/null");
    CHECK(r.status == 2);
    r = run(kCli + " enumerate --kind wellweighted --n 3 --label L1 2>/dev/null");
    CHECK(r.status == 2);
}
