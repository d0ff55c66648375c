#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gqfi/cli.hpp"
#include "gqfi/io.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("gqfi");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return gqfi::cli::run(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gqfi_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int value = 0;
        return value;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("sample writes the documented CSV") {
    TempDir dir;
    const std::string out = dir.file("thermal.csv");
    REQUIRE(run_cli({"sample", "--class", "single-thermal", "--n-a", "1", "--count", "3",
                     "--seed", "7", "--out", out, "--workers", "1"}) == 0);
    const auto lines = read_lines(out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "index,class,n_a,avg_qfi,coherence,log_negativity,param_json,seed");
    for (int i = 1; i <= 3; ++i) {
        const auto fields = gqfi::io::csv_split(lines[i]);
        REQUIRE(fields.size() == 8);
        CHECK(fields[0] == std::to_string(i - 1));
        CHECK(fields[1] == "single-thermal");
        CHECK(std::stod(fields[3]) == doctest::Approx(3.6).epsilon(1e-3));
        CHECK(fields[5].empty());  // no negativity for single-mode classes
    }
    CHECK(fs::exists(out + ".manifest.json"));
}

TEST_CASE("sample covers the tmsv class") {
    TempDir dir;
    const std::string out = dir.file("tmsv.csv");
    REQUIRE(run_cli({"sample", "--class", "tmsv", "--n-a", "1", "--count", "1", "--seed", "1",
                     "--out", out, "--workers", "1"}) == 0);
    const auto lines = read_lines(out);
    REQUIRE(lines.size() == 2);
    const auto fields = gqfi::io::csv_split(lines[1]);
    CHECK(std::stod(fields[3]) == doctest::Approx(10.0).epsilon(1e-3));
    CHECK(fields[4].empty());  // no coherence for two-mode classes
    CHECK(std::stod(fields[5]) == doctest::Approx(1.76275).epsilon(1e-4));
}

TEST_CASE("sample reruns are byte-identical") {
    TempDir dir;
    const std::string first = dir.file("a.csv");
    const std::string second = dir.file("b.csv");
    const std::vector<std::string> base = {"sample", "--class",  "two-mode-general",
                                           "--n-a",  "1",        "--count",
                                           "40",     "--seed",   "11",
                                           "--theta-nodes", "16"};
    auto with_out = [&](const std::string& out, const std::string& workers) {
        auto args = base;
        args.push_back("--out");
        args.push_back(out);
        args.push_back("--workers");
        args.push_back(workers);
        return args;
    };
    REQUIRE(run_cli(with_out(first, "1")) == 0);
    REQUIRE(run_cli(with_out(second, "4")) == 0);
    CHECK(gqfi::io::read_text_file(first) == gqfi::io::read_text_file(second));
}

TEST_CASE("bounds emit the printed rows") {
    TempDir dir;
    SUBCASE("upper-single") {
        const std::string out = dir.file("upper.csv");
        REQUIRE(run_cli({"bounds", "--curve", "upper-single", "--range", "0:2:1", "--out", out}) ==
                0);
        const auto lines = read_lines(out);
        REQUIRE(lines.size() == 4);
        CHECK(lines[0] == "x,value");
        CHECK(lines[1] == "0,2");
        CHECK(lines[2] == "1,10");
        CHECK(lines[3] == "2,26");
    }
    SUBCASE("coherent-max") {
        const std::string out = dir.file("coherent.csv");
        REQUIRE(run_cli({"bounds", "--curve", "coherent-max", "--range", "0:1:1", "--out", out}) ==
                0);
        const auto lines = read_lines(out);
        CHECK(lines[1] == "0,2");
        CHECK(lines[2] == "1,6");
    }
    SUBCASE("separable-max at n = 1") {
        const std::string out = dir.file("sep.csv");
        REQUIRE(run_cli({"bounds", "--curve", "separable-max", "--range", "1:1:1", "--out", out}) ==
                0);
        const auto lines = read_lines(out);
        CHECK(std::stod(gqfi::io::csv_split(lines[1])[1]) ==
              doctest::Approx(4.666667).epsilon(1e-6));
    }
    SUBCASE("malformed range exits 2") {
        CHECK(run_cli({"bounds", "--curve", "upper-single", "--range", "nonsense", "--out",
                       dir.file("x.csv")}) == 2);
        CHECK(run_cli({"bounds", "--curve", "no-such-curve", "--range", "0:1:1", "--out",
                       dir.file("y.csv")}) == 2);
    }
}

TEST_CASE("figure emits scatter, curves, script and manifest") {
    TempDir dir;
    SUBCASE("figure 2") {
        const std::string out_dir = dir.file("fig2");
        REQUIRE(run_cli({"figure", "--id", "2", "--count", "30", "--seed", "1", "--out-dir",
                         out_dir, "--theta-nodes", "16", "--workers", "2"}) == 0);
        CHECK(fs::exists(out_dir + "/fig2_scatter.csv"));
        CHECK(fs::exists(out_dir + "/fig2_curve_upper-single.csv"));
        CHECK(fs::exists(out_dir + "/fig2_curve_lower-single.csv"));
        CHECK(fs::exists(out_dir + "/fig2_curve_coherent-max.csv"));
        CHECK(fs::exists(out_dir + "/fig2_plot.gp"));
        CHECK(fs::exists(out_dir + "/fig2_manifest.json"));
        CHECK(read_lines(out_dir + "/fig2_scatter.csv").size() == 31);
    }
    SUBCASE("figure 5 carries all four overlays") {
        const std::string out_dir = dir.file("fig5");
        REQUIRE(run_cli({"figure", "--id", "5", "--count", "10", "--seed", "2", "--out-dir",
                         out_dir, "--theta-nodes", "16"}) == 0);
        CHECK(fs::exists(out_dir + "/fig5_curve_upper-single.csv"));
        CHECK(fs::exists(out_dir + "/fig5_curve_lower-single.csv"));
        CHECK(fs::exists(out_dir + "/fig5_curve_coherent-max.csv"));
        CHECK(fs::exists(out_dir + "/fig5_curve_separable-max.csv"));
    }
    SUBCASE("figure 8 emits four panels with entangled overlays") {
        const std::string out_dir = dir.file("fig8");
        REQUIRE(run_cli({"figure", "--id", "8", "--count", "8", "--seed", "3", "--out-dir",
                         out_dir, "--theta-nodes", "16"}) == 0);
        for (const char* panel : {"3", "5", "10", "100"}) {
            CHECK(fs::exists(out_dir + "/fig8_panel_na" + std::string(panel) +
                             "_entangled.csv"));
            CHECK(fs::exists(out_dir + "/fig8_panel_na" + std::string(panel) +
                             "_curve_entangled-vs-negativity.csv"));
        }
    }
    SUBCASE("unknown id exits 2") {
        CHECK(run_cli({"figure", "--id", "9", "--out-dir", dir.file("fig9")}) == 2);
    }
}

TEST_CASE("fit round-trips synthetic data and reports errors") {
    TempDir dir;
    SUBCASE("synthetic exponential") {
        // bin minima placed exactly on the curve at the 25 default-bin
        // midpoints of [0, 2.5]; padding rows sit above any in-bin variation
        const auto model = [](double x) { return 0.169 * std::exp(2.187 * x) + 1.778; };
        std::ostringstream csv;
        csv << "index,class,n_a,avg_qfi,coherence,log_negativity,param_json,seed\n";
        int row = 0;
        const auto add = [&](double x, double y) {
            csv << row++ << ",entangled-standard,3," << gqfi::io::format_g9(y) << ",,"
                << gqfi::io::format_g9(x) << ",\"{}\",0\n";
        };
        add(0.0, model(0.0) + 30.0);
        add(2.5, model(2.5) + 30.0);
        for (int bin = 0; bin < 25; ++bin) {
            const double mid = (bin + 0.5) * 0.1;
            add(mid, model(mid));
        }
        for (int i = 0; i < 300; ++i) {
            const double x = 2.5 * i / 299.0;
            add(x, model(x) + 15.0 + (i % 7));
        }
        const std::string input = dir.file("synthetic.csv");
        gqfi::io::write_text_file(input, csv.str());
        const std::string out = dir.file("fit.json");
        REQUIRE(run_cli({"fit", "--input", input, "--bins", "25", "--out", out}) == 0);
        const std::string report = gqfi::io::read_text_file(out);
        CHECK(report.find("\"A1\"") != std::string::npos);
        const auto a1_pos = report.find("\"A1\": ");
        const double a1 = std::stod(report.substr(a1_pos + 6));
        const auto b1_pos = report.find("\"B1\": ");
        const double b1 = std::stod(report.substr(b1_pos + 6));
        CHECK(a1 == doctest::Approx(0.169).epsilon(1e-5));
        CHECK(b1 == doctest::Approx(2.187).epsilon(1e-5));
    }
    SUBCASE("too few rows exits 3") {
        std::ostringstream csv;
        csv << "index,class,n_a,avg_qfi,coherence,log_negativity,param_json,seed\n";
        for (int i = 0; i < 3; ++i)
            csv << i << ",entangled-standard,3,5.0,," << 0.3 * i << ",\"{}\",0\n";
        const std::string input = dir.file("small.csv");
        gqfi::io::write_text_file(input, csv.str());
        CHECK(run_cli({"fit", "--input", input, "--out", dir.file("fit.json")}) == 3);
    }
    SUBCASE("missing input exits 4") {
        CHECK(run_cli({"fit", "--input", dir.file("no_such.csv")}) == 4);
    }
}

TEST_CASE("oracle-check handles a starved cutoff") {
    TempDir dir;
    // deliberately tiny cutoff: thermal tails overflow, exit 5 with failures
    CHECK(run_cli({"oracle-check", "--cutoff", "8", "--cutoff-two", "8", "--out",
                   dir.file("oracle.json")}) == 5);
    const std::string report = gqfi::io::read_text_file(dir.file("oracle.json"));
    CHECK(report.find("cutoff") != std::string::npos);
    CHECK(report.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("replaying a manifest reproduces the output digest") {
    TempDir dir;
    const std::string out = dir.file("replay.csv");
    REQUIRE(run_cli({"sample", "--class", "discordant", "--n-a", "2", "--count", "25", "--seed",
                     "13", "--theta-nodes", "16", "--out", out, "--workers", "2"}) == 0);
    const std::string manifest = gqfi::io::read_text_file(out + ".manifest.json");
    const auto digest_pos = manifest.find("\"sha256\": \"");
    REQUIRE(digest_pos != std::string::npos);
    const std::string recorded = manifest.substr(digest_pos + 11, 64);

    // rerun the recorded command against a fresh path
    const std::string replayed = dir.file("replayed.csv");
    REQUIRE(run_cli({"sample", "--class", "discordant", "--n-a", "2", "--count", "25", "--seed",
                     "13", "--theta-nodes", "16", "--out", replayed, "--workers", "1"}) == 0);
    CHECK(gqfi::io::sha256_hex(gqfi::io::read_text_file(replayed)) == recorded);
}

TEST_CASE("numbers are formatted with nine significant digits") {
    CHECK(gqfi::io::format_g9(4.0 + 2.0 / 3.0) == "4.66666667");
    CHECK(gqfi::io::format_g9(2.0) == "2");
    CHECK(gqfi::io::format_g9(0.1) == "0.1");
    CHECK(gqfi::io::format_g9(123456789.25) == "123456789");
}

TEST_CASE("sha256 known answers") {
    CHECK(gqfi::io::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(gqfi::io::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(gqfi::io::sha256_hex(
              "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // exercise the multi-block path
    CHECK(gqfi::io::sha256_hex(std::string(1000000, 'a')) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("config file presets flags") {
    TempDir dir;
    const std::string config = dir.file("preset.ini");
    gqfi::io::write_text_file(config,
                              "[sample]\nclass = single-thermal\nn-a = 1\ncount = 2\nseed = 5\n");
    const std::string out = dir.file("from_config.csv");
    REQUIRE(run_cli({"--config", config, "sample", "--out", out, "--workers", "1"}) == 0);
    CHECK(read_lines(out).size() == 3);
}
