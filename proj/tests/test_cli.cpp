// End-to-end tests for the ipset binary: exit codes, file outputs, CSV
// stability. Usage: test_cli <path-to-ipset>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "ipset/cache.hpp"
#include "ipset/constructions.hpp"
#include "ipset/serialization.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("ok: %s\n", what.c_str());
    } else {
        ++failures;
        std::printf("FAILED: %s\n", what.c_str());
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    const std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    RunResult res;
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-ipset>\n");
        return 2;
    }
    const std::string ipset = argv[1];
    const fs::path dir =
        fs::temp_directory_path() / ("ipset_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cache = (dir / "cache.tsv").string();
    const std::string in_dir = " --out-dir " + dir.string() + " --cache " + cache;

    // --- search: found, written, cached -------------------------------------
    {
        auto r = run(ipset + " search --n 3 --position semi --max-diameter 10" + in_dir);
        expect(r.exit_code == 0, "search n=3 semi exits 0");
        const fs::path witness = dir / "n3_semi_d1_w0.json";
        expect(fs::exists(witness), "search n=3 writes one witness file");
        const auto s = ipset::read_set_file(witness);
        expect(ipset::validate(s).valid && ipset::diameter(s) == ipset::Integer(1),
               "witness parses, validates, diameter 1");
        auto rows = ipset::read_cache(cache);
        expect(rows.size() == 1 && rows.back().minimal_d == 1 &&
                   rows.back().exhausted_up_to == 0,
               "cache row records d = 1");
    }

    // --- search: budget exhausted -> exit 3, cache still updated -------------
    {
        auto r = run(ipset + " search --n 4 --position semi --max-diameter 3" + in_dir);
        expect(r.exit_code == 3, "search n=4 semi d<=3 exits 3");
        auto rows = ipset::read_cache(cache);
        expect(rows.size() == 2 && !rows.back().minimal_d.has_value() &&
                   rows.back().exhausted_up_to == 3,
               "budget row records exhausted_up_to = 3");
    }

    // --- search: bad input -> exit 2 -----------------------------------------
    expect(run(ipset + " search --n 2 --position semi").exit_code == 2,
           "search n=2 exits 2");
    expect(run(ipset + " search --n 4 --position sideways").exit_code == 2,
           "search with unknown position exits 2");

    // --- verify: files from search/construct exit 0 --------------------------
    {
        auto c = run(ipset + " construct facher --height 3 --out " +
                     (dir / "facher3.json").string());
        expect(c.exit_code == 0 && contains(c.out, "diameter: 8"),
               "construct facher h=3 reports diameter 8");
        auto v = run(ipset + " verify " + (dir / "facher3.json").string());
        expect(v.exit_code == 0, "verify accepts the constructed fan");

        auto c2 = run(ipset + " construct circular --n 4 --out " +
                      (dir / "circ4.json").string());
        expect(c2.exit_code == 0 && contains(c2.out, "position: semi-general"),
               "construct circular n=4 is semi-general");
        auto v2 = run(ipset + " verify " + (dir / "circ4.json").string());
        expect(v2.exit_code == 0, "verify accepts the circular set");

        auto v3 = run(ipset + " verify " + (dir / "n3_semi_d1_w0.json").string() +
                      " --checks replay");
        expect(v3.exit_code == 0 && contains(v3.out, "not applicable (n < 4)"),
               "verify --checks replay reports not-applicable on n=3, exit 0");
    }

    // --- verify: invalid sets exit 1 ------------------------------------------
    {
        const fs::path line_file = dir / "line.json";
        std::ofstream(line_file) << R"({"k": 1, "points": [
            {"x": "0", "r": "0"}, {"x": "1", "r": "0"}, {"x": "2", "r": "0"}]})";
        auto v = run(ipset + " verify " + line_file.string());
        expect(v.exit_code == 1 && contains(v.out, "straight line"),
               "verify flags the collinear-only file, exit 1");

        const fs::path bad_file = dir / "bad.json";
        std::ofstream(bad_file) << "{ not json";
        expect(run(ipset + " verify " + bad_file.string()).exit_code == 2,
               "verify exits 2 on parse failure");
        expect(run(ipset + " verify " + (dir / "missing.json").string()).exit_code == 2,
               "verify exits 2 on missing file");
        expect(run(ipset + " verify " + line_file.string() + " --checks bogus").exit_code == 2,
               "verify exits 2 on unknown check name");
    }

    // --- construct: the h = 12 fan through the CLI ------------------------------
    {
        auto r = run(ipset + " construct facher --height 12 --out " +
                     (dir / "facher12.json").string());
        expect(r.exit_code == 0 && contains(r.out, "n: 10") &&
                   contains(r.out, "diameter: 70"),
               "construct facher h=12 reports n=10, diameter 70");
        expect(run(ipset + " verify " + (dir / "facher12.json").string()).exit_code == 0,
               "verify accepts the h=12 fan");
    }

    // --- construct: bad parameters --------------------------------------------
    expect(run(ipset + " construct facher --height 0").exit_code == 2,
           "construct facher height 0 exits 2");
    expect(run(ipset + " construct circular --n 2").exit_code == 2,
           "construct circular n=2 exits 2");
    expect(run(ipset + " construct blob --n 4").exit_code == 2,
           "construct unknown family exits 2");

    // --- bounds ----------------------------------------------------------------
    {
        auto r = run(ipset + " bounds --from 3 --to 12 --format csv");
        expect(r.exit_code == 0, "bounds csv exits 0");
        expect(contains(r.out, "n,theorem,linear,min_dist,remark,upper,collinear"),
               "bounds csv header");
        std::istringstream in(r.out);
        std::string line;
        bool n5 = false, n11 = false, n8 = false;
        while (std::getline(in, line)) {
            if (line.rfind("5,", 0) == 0) n5 = contains(line, "5,1.000000000,");
            if (line.rfind("11,", 0) == 0) {
                std::istringstream ls(line);
                std::string field;
                std::getline(ls, field, ','); // n
                std::getline(ls, field, ','); // theorem
                std::getline(ls, field, ','); // linear
                n11 = field == "5.000000000";
            }
            if (line.rfind("8,", 0) == 0) {
                std::istringstream ls(line);
                std::string field;
                for (int i = 0; i < 4; ++i) std::getline(ls, field, ',');
                n8 = field == "2.000000000";
            }
        }
        expect(n5, "bounds row n=5 theorem column is 1.000000000");
        expect(n11, "bounds row n=11 linear column is 5.000000000");
        expect(n8, "bounds row n=8 min_dist column is 2.000000000");

        auto again = run(ipset + " bounds --from 3 --to 12 --format csv");
        expect(again.out == r.out, "bounds csv is bit-stable across runs");

        expect(run(ipset + " bounds --from 9 --to 3").exit_code == 2,
               "bounds with reversed range exits 2");
        expect(run(ipset + " bounds --from 3 --to 5 --epsilon -1").exit_code == 2,
               "bounds with epsilon <= 0 exits 2");
    }

    // --- candidates --------------------------------------------------------------
    {
        auto r = run(ipset + " candidates --d 4 --format csv");
        expect(r.exit_code == 0, "candidates csv exits 0");
        expect(contains(r.out, "x,r,k,a,b"), "candidates csv header");
        expect(contains(r.out, "2,2,3,4,4"), "candidates d=4 includes (2,2,3,4,4)");
        expect(contains(r.out, "1/2,1/2,15,2,4"), "candidates d=4 includes the k=15 cell");
        expect(contains(r.out, "1,0,1,1,3") && contains(r.out, "2,0,1,2,2") &&
                   contains(r.out, "3,0,1,3,1"),
               "candidates d=4 on-line rows");

        auto again = run(ipset + " candidates --d 4 --format csv");
        expect(again.out == r.out, "candidates csv is bit-stable across runs");

        auto d1 = run(ipset + " candidates --d 1");
        expect(d1.exit_code == 0 && contains(d1.out, "0 on-line") &&
                   contains(d1.out, "x=1/2") && contains(d1.out, "k = 3"),
               "candidates d=1 is the equilateral apex pair only");

        expect(run(ipset + " candidates --d 0").exit_code == 2, "candidates d=0 exits 2");
    }

    // --- determinism across worker counts -----------------------------------------
    {
        const fs::path dir1 = dir / "t1";
        const fs::path dir4 = dir / "t4";
        const std::string tail = " search --n 5 --position semi --max-diameter 8 --all";
        auto r1 = run("IPSET_THREADS=1 " + ipset + tail + " --out-dir " + dir1.string() +
                      " --cache " + (dir1 / "c.tsv").string());
        auto r4 = run("IPSET_THREADS=4 " + ipset + tail + " --out-dir " + dir4.string() +
                      " --cache " + (dir4 / "c.tsv").string());
        bool same = r1.exit_code == 0 && r4.exit_code == 0;
        int compared = 0;
        if (same) {
            for (const auto& entry : fs::directory_iterator(dir1)) {
                if (entry.path().extension() != ".json") continue;
                ++compared;
                std::ifstream a(entry.path()), b(dir4 / entry.path().filename());
                std::stringstream sa, sb;
                sa << a.rdbuf();
                sb << b.rdbuf();
                same = same && b.good() && sa.str() == sb.str();
            }
        }
        expect(same && compared == 4,
               "witness files are byte-identical for IPSET_THREADS=1 and 4");
    }

    // --- general-position constraint through the CLI --------------------------------
    {
        auto r = run(ipset + " search --n 3 --position general --max-diameter 5" +
                     " --out-dir " + dir.string() + " --cache " + cache);
        expect(r.exit_code == 0 && fs::exists(dir / "n3_general_d1_w0.json"),
               "search n=3 general finds d=1");
    }

    // --- no subcommand ------------------------------------------------------------
    expect(run(ipset).exit_code == 2, "bare invocation exits 2");
    expect(run(ipset + " --help").exit_code == 0, "--help exits 0");

    fs::remove_all(dir);
    if (failures == 0) {
        std::printf("all cli checks passed\n");
        return 0;
    }
    std::printf("%d cli check(s) failed\n", failures);
    return 1;
}
