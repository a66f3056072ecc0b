// End-to-end checks of the command-line tool: JSON shape, exit codes,
// determinism, and the citation contract against the bundled manifest.
// Usage: cli_tests <path-to-cli-binary>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

using json = nlohmann::json;

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string command = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        std::cerr << "failed to spawn: " << command << "\n";
        std::exit(1);
    }
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& label) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAILED: " << label << "\n";
    }
}

json parse(const RunResult& r, const std::string& label) {
    try {
        return json::parse(r.out);
    } catch (...) {
        ++g_failures;
        std::cerr << "FAILED: " << label << " (unparseable output)\n" << r.out << "\n";
        return json::object();
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <cli-binary>\n";
        return 1;
    }
    g_cli = argv[1];

    {
        const RunResult r = run("chi -q 6 -n 2");
        expect(r.exit_code == 0, "chi exit code");
        const json doc = parse(r, "chi");
        expect(doc.value("command", "") == "chi", "chi command echo");
        expect(doc["result"]["chi"] == "15", "chi value");
    }

    {
        const RunResult r = run("square -a 1 -b 0");
        const json doc = parse(r, "square");
        expect(doc["result"]["square"] == "2", "square of H");
        expect(doc["inputs"]["basis"] == "hdelta", "square default basis");
    }

    {
        const RunResult r = run("square -a 0 -b 1 --basis hl");
        const json doc = parse(r, "square hl");
        expect(doc["result"]["square"] == "0", "square of L in (H, L) basis");
    }

    {
        const RunResult r = run("pair -a 1 -b 0 --a2 2 --b2 -3");
        const json doc = parse(r, "pair");
        expect(doc["result"]["pair"] == "4", "(H, W) pairing");
    }

    {
        // (L, W) in (H, L) coordinates: L = (0,1), W = (-1,3).
        const RunResult r = run("pair -a 0 -b 1 --a2 -1 --b2 3 --basis hl");
        const json doc = parse(r, "pair hl");
        expect(doc["result"]["pair"] == "-2", "(L, W) pairing in (H, L) basis");
    }

    {
        const RunResult r = run("div -a 2 -b -3");
        const json doc = parse(r, "div");
        expect(doc["result"]["divisibility"] == "2", "div of W");
    }

    {
        const RunResult r = run("cone -a 1 -b 2");
        const json doc = parse(r, "cone");
        expect(doc["result"]["on_flop_wall"] == true, "wall membership");
        expect(doc["result"]["square"] == "10", "wall square");
    }

    {
        const RunResult r = run("baselocus -a 1 -b 1 --model x");
        const json doc = parse(r, "baselocus");
        expect(doc["result"]["verdict"] == "PlaneP2Reduced", "verdict for H+L on X");
        expect(doc["result"]["big"] == true, "H+L is big");
        expect(!doc["citations"].empty(), "baselocus cites its statements");
    }

    {
        const RunResult r = run("baselocus -a 1 -b 1 --model xprime");
        const json doc = parse(r, "baselocus xprime");
        expect(doc["result"]["verdict"] == "NotNef", "H+L not nef on X'");
    }

    {
        const RunResult r = run("flop -a 0 -b 1 --from xprime");
        const json doc = parse(r, "flop");
        expect(doc["result"]["e_coeff"] == "-1", "pullback coefficient of L from X'");
        expect(doc["result"]["restriction"]["s"] == "0", "restriction s");
        expect(doc["result"]["restriction"]["t"] == "1", "restriction t");
    }

    {
        const RunResult r = run("flop -a 1 -b 0 --from x");
        const json doc = parse(r, "flop from x");
        expect(doc["result"]["e_coeff"] == "0", "pullback from X has no E part");
        expect(doc["result"]["restriction"]["s"] == "2", "H restricts to O(2, 0)");
        expect(doc["result"]["restriction"]["t"] == "0", "H restricts to O(2, 0)");
        expect(doc["result"]["line_degree"] == "2", "deg(H) on a flopped line");
    }

    {
        const RunResult r = run("mayer --gram 2 --h 1 --bound 10");
        const json doc = parse(r, "mayer rank 1");
        expect(doc["result"]["count"] == 0, "rank-1 search is empty");
        expect(doc["result"]["decompositions"].empty(), "rank-1 decomposition list");
    }

    {
        const RunResult r = run("sweep --max 4 --model xprime");
        expect(r.exit_code == 0, "sweep xprime exit code");
        expect(r.out.find("PlaneP2Reduced") == std::string::npos,
               "no plane verdict on X'");
        expect(r.out.find("0,1,true,false,Free\n") != std::string::npos,
               "L is nef, isotropic and free on X'");
    }

    {
        const RunResult r = run("mayer --gram 0,1,-2 --h 2,1 --bound 5");
        const json doc = parse(r, "mayer");
        expect(doc["result"]["count"] == 2, "mayer count");
        expect(doc["result"]["decompositions"][0]["m"] == "2", "mayer first m");
        expect(doc["result"]["decompositions"][0]["E"] == json::array({"1", "0"}),
               "mayer first E");
        expect(doc["result"]["decompositions"][0]["C"] == json::array({"0", "1"}),
               "mayer first C");
        expect(doc["result"]["effectivity_checked"] == false, "mayer caveat");
    }

    {
        const RunResult r = run("moduli -d 3 -m 2");
        const json doc = parse(r, "moduli");
        expect(doc["result"]["nonempty"] == true, "moduli (3,2) nonempty");
        expect(doc["result"]["witness_hl"] == json::array({"1", "1"}),
               "moduli witness is H+L");
        expect(doc["result"]["generic_bpf"] == true, "moduli (3,2) generic bpf");
    }

    {
        const RunResult first = run("verify-mu");
        const RunResult second = run("verify-mu");
        expect(first.exit_code == 0, "verify-mu exit code");
        expect(first.out == second.out, "verify-mu determinism");
        const json doc = parse(first, "verify-mu");
        expect(doc["result"]["rank"] == 15, "verify-mu rank");
        expect(doc["result"]["kernel_dimension"] == 3, "verify-mu kernel dimension");
        const std::string digest = doc["result"]["matrix_digest"].get<std::string>();
        expect(digest.rfind("sha256:", 0) == 0 && digest.size() == 7 + 64,
               "verify-mu digest shape");
    }

    {
        const RunResult first = run("sweep --max 5 --model x");
        const RunResult second = run("sweep --max 5 --model x");
        expect(first.exit_code == 0, "sweep exit code");
        expect(first.out == second.out, "sweep determinism");
        expect(first.out.rfind("a,b,nef,big,verdict\n", 0) == 0, "sweep header");
        expect(first.out.find("1,1,true,true,PlaneP2Reduced\n") != std::string::npos,
               "sweep marks H+L");
    }

    // Domain errors surface as JSON with exit code 2.
    {
        const RunResult r = run("chi -q 3 -n 2");
        expect(r.exit_code == 2, "odd square exit code");
        const json doc = parse(r, "chi odd");
        expect(doc["error"]["code"] == "OddSquare", "odd square error code");
    }
    {
        const RunResult r = run("moduli -d 0 -m 1");
        expect(r.exit_code == 2, "nonpositive square exit code");
        const json doc = parse(r, "moduli d=0");
        expect(doc["error"]["code"] == "NonPositiveSquare", "nonpositive square code");
    }
    {
        const RunResult r = run("moduli -d 3 -m 5");
        expect(r.exit_code == 2, "unsupported divisibility exit code");
    }
    {
        const RunResult r = run("mayer --gram 0,1,-2 --h 0,1 --bound 5");
        expect(r.exit_code == 2, "not-big exit code");
        const json doc = parse(r, "mayer not big");
        expect(doc["error"]["code"] == "NotBig", "not-big error code");
    }

    // Usage errors exit with 1 and print nothing on stdout.
    {
        const RunResult r = run("frobnicate");
        expect(r.exit_code == 1, "unknown subcommand exit code");
    }
    {
        const RunResult r = run("square -a x -b 0");
        expect(r.exit_code == 1, "non-integer argument exit code");
    }
    {
        const RunResult r = run("square -a 1 -b 0 --basis hl --d0 2");
        expect(r.exit_code == 1, "basis/d0 conflict exit code");
    }

    // Every citation quote emitted by the tool appears verbatim in the
    // bundled manifest.
    {
        std::ifstream in(std::string(HILBSQ_SOURCE_DIR) + "/data/citations.json");
        expect(in.good(), "manifest present");
        const json manifest = json::parse(in, nullptr, false);
        expect(!manifest.is_discarded(), "manifest parses");

        const std::array<std::string, 8> commands = {
            "square -a 1 -b 0",       "div -a 2 -b -3",
            "chi -q 6 -n 2",          "cone -a 1 -b 2",
            "baselocus -a 1 -b 1 --model x", "flop -a 0 -b 1 --from xprime",
            "moduli -d 3 -m 2",       "verify-mu"};
        for (const auto& cmd : commands) {
            const json doc = parse(run(cmd), "citations of " + cmd);
            for (const auto& c : doc.value("citations", json::array())) {
                const std::string id = c.value("statement", "");
                const std::string quote = c.value("quote", "");
                expect(manifest.contains(id) && manifest[id] == quote,
                       "manifest covers " + id + " for " + cmd);
            }
        }
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << g_failures << " check(s) failed\n";
    return 1;
}
