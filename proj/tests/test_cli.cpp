// End-to-end checks of the command-line tool: file round trips, subcommand
// wiring, exit codes, and the OLCT_SEED override. argv[1] is the binary path.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "olct/io.hpp"
#include "olct/signal.hpp"

using namespace olct;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <olct-binary>\n");
        return 1;
    }
    const std::string cli = argv[1];
    const std::string dir = "/tmp/olct_cli_test";
    if (run("rm -rf " + dir + " && mkdir -p " + dir) != 0) {
        std::fprintf(stderr, "cannot prepare %s\n", dir.c_str());
        return 1;
    }
    const auto path = [&](const std::string& name) { return dir + "/" + name; };

    check(run(cli + " generate --kind gaussian --grid=-16,0.03125,1024 --args 0,1 --out " +
              path("f.csv")) == 0,
          "generate gaussian");
    check(run(cli + " transform --params 1,1,1,2,1,0 --in " + path("f.csv") + " --out " +
              path("F.csv")) == 0,
          "forward transform");
    check(run(cli + " inverse --in " + path("F.csv") + " --out " + path("f2.csv")) == 0,
          "inverse transform");

    {
        const SampledSignal f = read_signal(path("f.csv"));
        const SampledSignal f2 = read_signal(path("f2.csv"));
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            num += std::norm(f2.samples[k] - f.samples[k]);
            den += std::norm(f.samples[k]);
        }
        check(std::sqrt(num / den) < 1e-8, "file round trip through transform+inverse");
    }

    check(run(cli + " generate --kind gaussian --grid=-16,0.03125,1024 --args=-0.5,0.8 --out " +
              path("g.csv")) == 0,
          "generate second signal");
    check(run(cli + " convolve --params 1,1,1,2,1,0 --in1 " + path("f.csv") + " --in2 " +
              path("g.csv") + " --out " + path("conv.csv") + " --method spectral") == 0,
          "convolve spectral");
    check(run(cli + " convolve --params 1,1,1,2,1,0 --in1 " + path("f.csv") + " --in2 " +
              path("g.csv") + " --out " + path("conv_t.csv") + " --method time") == 0,
          "convolve time");
    {
        const SampledSignal a = read_signal(path("conv.csv"));
        const SampledSignal b = read_signal(path("conv_t.csv"));
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            num += std::norm(a.samples[k] - b.samples[k]);
            den += std::norm(b.samples[k]);
        }
        check(std::sqrt(num / den) < 1e-6, "CLI spectral vs time convolution agree");
    }

    check(run(cli + " correlate --params 1,1,1,2,0,0 --in1 " + path("f.csv") + " --in2 " +
              path("g.csv") + " --out " + path("corr.csv") + " --variant proof") == 0,
          "correlate");
    check(run(cli + " filter --params 1,1,1,2,1,0 --in " + path("f.csv") + " --out " +
              path("fil.csv") + " --kind low --edges 40 --rolloff 1") == 0,
          "filter low-pass");
    check(run(cli + " pw-estimate --params 1,1,1,2,1,0 --in " + path("f.csv") +
              " --nmax 6 --out " + path("pw.json")) == 0,
          "pw-estimate runs");
    check(run(cli + " demo chirp-denoise --out " + path("demo")) == 0, "demo with outputs");
    check(slurp(path("demo_output.csv")).size() > 0, "demo wrote output files");

    {
        std::ofstream cfg(path("demo.cfg"));
        cfg << "params=1,1,1,2,0.5,-0.3\nnoise_level_db=-12\nseed=9\ncenter_freq=1.5\n";
    }
    check(run(cli + " demo chirp-denoise --config " + path("demo.cfg")) == 0,
          "demo with config file");
    {
        std::ofstream cfg(path("bad.cfg"));
        cfg << "not_a_key=1\n";
    }
    check(run(cli + " demo chirp-denoise --config " + path("bad.cfg")) == 2,
          "unknown config key exits 2");

    // Exit codes: usage error 2, unknown option 2, verification success 0.
    check(run(cli + " transform") == 2, "missing required option exits 2");
    check(run(cli + " transform --params 1,1,1,1,0,0 --in " + path("f.csv")) == 2,
          "invalid params exit 2");
    check(run(cli + " bogus-subcommand") == 2, "unknown subcommand exits 2");
    check(run(cli + " verify --params 0,1,-1,0,0,0 --out " + path("report.json")) == 0,
          "single-params verify exits 0");
    check(slurp(path("report.json")).find("\"all_passed\": true") != std::string::npos,
          "verify report records success");

    // OLCT_SEED overrides the configured seed.
    check(run("OLCT_SEED=77 " + cli + " generate --kind noise --grid=-8,0.0625,256 --args 1 "
              "--seed 1 --out " + path("n1.csv")) == 0 &&
          run("OLCT_SEED=77 " + cli + " generate --kind noise --grid=-8,0.0625,256 --args 1 "
              "--seed 2 --out " + path("n2.csv")) == 0,
          "noise generation with OLCT_SEED");
    check(slurp(path("n1.csv")) == slurp(path("n2.csv")),
          "OLCT_SEED overrides --seed (bit-identical files)");

    if (failures == 0) {
        std::printf("cli tests passed\n");
        return 0;
    }
    std::printf("%d cli check(s) failed\n", failures);
    return 1;
}
