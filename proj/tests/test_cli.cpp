#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// End-to-end runs of the command-line driver against the fixture scenes.

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = {}) {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + STARKIT_CLI_PATH + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(STARKIT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli kernel: both methods agree on the lshape") {
    const CliResult r = run_cli("kernel " + fixture("lshape.scene") + " --method both");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("kernel.extreme:") != std::string::npos);
    CHECK(r.out.find("kernel.halfplane: [[0,0],[1,0],[1,1],[0,1]]") != std::string::npos);
    CHECK(r.out.find("hausdorff: 0") != std::string::npos);
}

TEST_CASE("cli kernel: ushape is empty, square is itself") {
    const CliResult u = run_cli("kernel " + fixture("ushape.scene"));
    CHECK(u.exit_code == 0);
    CHECK(u.out.find("kernel: EMPTY") != std::string::npos);

    const CliResult s = run_cli("kernel " + fixture("square.scene") + " --method halfplane");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("kernel: [[0,0],[1,0],[1,1],[0,1]]") != std::string::npos);
}

TEST_CASE("cli extreme: lshape lists five vertices") {
    const CliResult r = run_cli("extreme " + fixture("lshape.scene"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("extreme: 5") != std::string::npos);
    CHECK(r.out.find("vertex: 3") == std::string::npos);  // the reflex corner
}

TEST_CASE("cli certify: headlines") {
    const CliResult l = run_cli("certify " + fixture("lshape.scene"));
    CHECK(l.exit_code == 0);
    CHECK(l.out.find("STARSHAPED kernel=4 vertices") != std::string::npos);

    const CliResult u = run_cli("certify " + fixture("ushape.scene"));
    CHECK(u.exit_code == 0);
    CHECK(u.out.find("NOT STARSHAPED (B empty)") != std::string::npos);

    const CliResult h = run_cli("certify " + fixture("htri.scene"));
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("STARSHAPED kernel=3 vertices") != std::string::npos);
}

TEST_CASE("cli star: exterior point exits with code 3") {
    const CliResult r = run_cli("star " + fixture("lshape.scene") + " --point 1.5,1.5");
    CHECK(r.exit_code == 3);

    const CliResult ok = run_cli("star " + fixture("lshape.scene") + " --point 0.5,0.5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("star: [[") != std::string::npos);
}

TEST_CASE("cli: input errors exit with code 2") {
    CHECK(run_cli("kernel /nonexistent.scene").exit_code == 2);
    CHECK(run_cli("kernel").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("cli: STARKIT_EPS widens the on-boundary band") {
    // A point 0.05 outside the polygon is exterior normally (exit 3) but
    // falls in the boundary band when the tolerance is raised.
    const std::string args = "star " + fixture("square.scene") + " --point 0.5,-0.05";
    CHECK(run_cli(args).exit_code == 3);
    CHECK(run_cli(args, "STARKIT_EPS=0.1").exit_code == 0);
}

TEST_CASE("cli kernel: --out renders an svg with the kernel layer") {
    const std::string out = std::string(STARKIT_TMP_DIR) + "/cli_kernel.svg";
    const CliResult r =
        run_cli("kernel " + fixture("lshape.scene") + " --method halfplane --out " + out);
    CHECK(r.exit_code == 0);
    FILE* f = std::fopen(out.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
    std::fclose(f);
    CHECK(content.find("id=\"kernel\"") != std::string::npos);
}

TEST_CASE("cli verify: deterministic, exit 0 clean, exit 1 with planted fault") {
    const std::string args = "verify --trials 4 --seed 11 --model euclidean --resolution 32";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("summary trials=4") != std::string::npos);

    const CliResult bug = run_cli(args + " --inject-bug shift-kernel");
    CHECK(bug.exit_code == 1);
    CHECK(bug.out.find("candidate trial=") != std::string::npos);
}

TEST_CASE("cli render: writes byte-identical svg") {
    const std::string out1 = std::string(STARKIT_TMP_DIR) + "/cli_render_1.svg";
    const std::string out2 = std::string(STARKIT_TMP_DIR) + "/cli_render_2.svg";
    const std::string args = "render " + fixture("lshape.scene") +
                             " --layers polygon,kernel,extreme-markers,gap-segments,probes";
    CHECK(run_cli(args + " --out " + out1).exit_code == 0);
    CHECK(run_cli(args + " --out " + out2).exit_code == 0);

    auto slurp = [](const std::string& path) {
        std::string content;
        std::array<char, 4096> buf{};
        FILE* f = std::fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        std::size_t n;
        while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
        std::fclose(f);
        return content;
    };
    const std::string svg1 = slurp(out1);
    CHECK(svg1 == slurp(out2));
    CHECK(svg1.find("id=\"polygon\"") != std::string::npos);
    CHECK(svg1.find("id=\"kernel\"") != std::string::npos);
    CHECK(svg1.find("id=\"gap-segments\"") != std::string::npos);
}
