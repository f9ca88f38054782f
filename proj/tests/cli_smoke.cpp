// End-to-end checks of the command-line tool: exit codes, JSON/CSV shape,
// and byte-identical reruns. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& command) {
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_smoke <path-to-qec-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path work = fs::temp_directory_path() / "qec_cli_smoke";
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string out = (work / "out.txt").string();

    // fidelity: JSON report, clean exit, engine/closed-form cross-check.
    expect(run(bin + " fidelity --code five --p 0.04 --mu 0.1 > " + out) == 0,
           "fidelity exits 0");
    {
        const std::string text = slurp(out);
        expect(text.find("\"fidelity_exact\"") != std::string::npos, "report has fidelity_exact");
        expect(text.find("\"fidelity_closed_form\"") != std::string::npos,
               "report has closed form");
        expect(text.find("0.974213856706") != std::string::npos, "report value matches");
    }

    // asymmetric run with a published closed form
    expect(run(bin + " fidelity --code set2 --p 0.04 --mu 0.1 --alpha-x 0.16129032258064516"
                     " --alpha-y 0.032258064516129031 --alpha-z 0.80645161290322581 > " + out) == 0,
           "asymmetric fidelity exits 0");

    // usage errors exit 2
    expect(run(bin + " fidelity --code five --p 0.04 --mu 0.1 --alpha-x 0.5 --alpha-y 0.2"
                     " --alpha-z 0.2 2> /dev/null") == 2,
           "bad alpha sum exits 2");
    expect(run(bin + " fidelity --code nine --p 0.1 --mu 0 2> /dev/null") == 2,
           "unknown code exits 2");
    expect(run(bin + " threshold --code five 2> /dev/null") == 2,
           "threshold without mode exits 2");
    expect(run(bin + " 2> /dev/null") == 2, "missing subcommand exits 2");

    // threshold point value
    expect(run(bin + " threshold --code set1 --mu 0.0 > " + out) == 0, "threshold point exits 0");
    expect(slurp(out).find("\"p_threshold\"") != std::string::npos, "threshold JSON field");

    // threshold curve: identical bytes across reruns and worker counts
    const std::string csv_a = (work / "a.csv").string();
    const std::string csv_b = (work / "b.csv").string();
    const std::string csv_c = (work / "c.csv").string();
    const std::string curve_args =
        " threshold --code five --curve --p-min 0.02 --p-max 0.2 --p-points 10 --out ";
    expect(run(bin + curve_args + csv_a) == 0, "curve run 1 exits 0");
    expect(run(bin + curve_args + csv_b) == 0, "curve run 2 exits 0");
    expect(run("QEC_THREADS=1 " + bin + curve_args + csv_c) == 0, "curve run 3 exits 0");
    const std::string bytes = slurp(csv_a);
    expect(!bytes.empty() && bytes == slurp(csv_b), "curve reruns byte-identical");
    expect(bytes == slurp(csv_c), "curve independent of worker count");
    expect(bytes.rfind("# schema=1\np,mu_threshold\n", 0) == 0, "curve CSV header");

    // dump-code
    expect(run(bin + " dump-code --code set2 > " + out) == 0, "dump-code exits 0");
    {
        const std::string text = slurp(out);
        expect(text.find("\"recovery_table\"") != std::string::npos, "dump has recovery table");
        expect(text.find("\"Z1Z2\"") != std::string::npos, "dump lists ZZ members");
    }

    // figures: six CSVs plus manifest, all schema-tagged
    const fs::path figs = work / "figs";
    expect(run(bin + " figures --out " + figs.string()) == 0, "figures exits 0");
    for (int i = 1; i <= 6; ++i) {
        const fs::path f = figs / ("fig" + std::to_string(i) + ".csv");
        expect(fs::exists(f), f.string() + " exists");
        expect(slurp(f).rfind("# schema=1\n", 0) == 0, f.string() + " schema header");
    }
    expect(fs::exists(figs / "manifest.json"), "manifest exists");

    if (failures == 0) std::puts("cli smoke: all checks passed");
    return failures == 0 ? 0 : 1;
}
