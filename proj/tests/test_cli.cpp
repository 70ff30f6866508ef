#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invaut/cli.hpp"

using invaut::run_cli;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "invaut");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("invaut_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("analyze") {
    const auto r = run({"analyze", write_file("p34.txt", "0010\n1100\n")});
    CHECK(r.status == 0);
    CHECK(r.out.find("k: 2") != std::string::npos);
    CHECK(r.out.find("PAut order: 2\n") != std::string::npos);
    CHECK(r.out.find("PAut generators: (1,2)\n") != std::string::npos);
    CHECK(r.out.find("weight distribution: 1 1 1 1 0") != std::string::npos);

    const auto rep = run({"analyze", write_file("rep.txt", "1111\n")});
    CHECK(rep.out.find("PAut order: 24\n") != std::string::npos);

    CHECK(run({"analyze", write_file("empty.txt", "")}).status == 2);
    CHECK(run({"analyze", write_file("ragged.txt", "11\n101\n")}).status == 2);
    CHECK(run({"analyze", "/nonexistent/file"}).status == 2);

    const auto j = run({"analyze", "--output", "json", write_file("w.txt", "110000\n100011\n")});
    CHECK(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["sigma_in_paut"] == true);
    CHECK(doc["t_sigma"] == "{1}");
    CHECK(doc["fixed_dim"] == 1);
    CHECK(doc["fixed_point_witness"] == "(3,4)(5,6)");

    std::string big;
    for (int i = 0; i < 14; ++i) big += std::string(14, '0').replace(i, 1, "1") + "\n";
    const auto large = run({"analyze", write_file("big.txt", big)});
    CHECK(large.status == 3);
    CHECK(large.out.find("n: 14") != std::string::npos);
    CHECK(large.out.find("minimum weight: 1") != std::string::npos);
}

TEST_CASE("witness") {
    const auto r = run({"witness", write_file("w1.txt", "110000\n100011\n")});
    CHECK(r.status == 0);
    CHECK(r.out == "(3,4)(5,6) via T(σ)-complement\n");
    const auto f = run({"witness", write_file("w2.txt", "110000\n001111\n")});
    CHECK(f.out == "(1,2) via pointwise-fixing pair\n");
    CHECK(run({"witness", write_file("w3.txt", "1000\n")}).status == 4);
    CHECK(run({"witness", write_file("w4.txt", "111\n")}).status == 4);
}

TEST_CASE("verify") {
    const auto p = run({"verify", "prop-3.4", "--output", "json"});
    CHECK(p.status == 0);
    CHECK(nlohmann::json::parse(p.out)["scanned"] == 210);

    const auto t = run({"verify", "thm-3.2", "--n", "6", "--output", "json", "--stable"});
    CHECK(t.status == 0);
    const auto doc = nlohmann::json::parse(t.out);
    CHECK(doc["scanned"] == 651);
    CHECK(doc["counterexamples"].empty());
    CHECK(run({"verify", "thm-3.2", "--n", "6", "--output", "json", "--stable"}).out == t.out);

    CHECK(run({"verify", "thm-4.4", "--n", "14"}).status == 3);
    CHECK(run({"verify", "no-such-theorem"}).status == 2);
    CHECK(run({"verify"}).status == 2);
    CHECK(run({"verify", "lemma-2.1", "--trials", "200"}).status == 0);
    CHECK(run({"verify", "thm-5.1", "--trials", "200"}).status == 0);
}

TEST_CASE("conjecture") {
    CHECK(run({"conjecture", "--n", "8"}).status == 2);
    CHECK(run({"conjecture", "--n", "10", "--slice", "3/2"}).status == 2);
    CHECK(run({"conjecture", "--n", "10", "--slice", "x"}).status == 2);
    CHECK(run({"conjecture", "--n", "14", "--k", "5"}).status == 3);

    const auto journal = std::filesystem::temp_directory_path() / "invaut_cli_conj.ndjson";
    std::filesystem::remove(journal);
    const auto r = run({"conjecture", "--n", "10", "--k", "5", "--journal", journal.string(), "--output", "json",
                        "--stable", "--jobs", "2"});
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["scanned"] == 18291);
    const auto again = run({"conjecture", "--n", "10", "--k", "5", "--journal", journal.string(), "--output",
                            "json", "--stable"});
    CHECK(again.out == r.out);
    std::filesystem::remove(journal);
}

TEST_CASE("census") {
    const auto r = run({"census", "--n", "6", "--k", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "n=6 k=2: 651\n");
    const auto s = run({"census", "--n", "8", "--sigma", "--output", "json"});
    const auto doc = nlohmann::json::parse(s.out);
    CHECK(doc["counts"].size() == 9);
    CHECK(doc["counts"][4]["count"] == 771);
    CHECK(run({"census", "--n", "4", "--k", "2", "--slice", "1/5"}).out == "n=4 k=2: 7\n");
    CHECK(run({"census", "--n", "12", "--k", "6"}).status == 3);
    CHECK(run({"census", "--n", "5", "--sigma"}).status == 2);
    CHECK(run({"census"}).status == 2);
}

TEST_CASE("usage") {
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"verify", "thm-3.2", "--output", "yaml"}).status == 2);
}
