#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <probelab.h>

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/probelab_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
    std::string read() const {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

} // namespace

TEST_CASE("hash sampling, evaluation, round trip") {
    probelab_hash* h = nullptr;
    REQUIRE(probelab_hash_sample("poly", 5, 1009, 505, 7, &h) == PROBELAB_OK);
    uint32_t y = 0;
    CHECK(probelab_hash_eval(h, 123, &y) == PROBELAB_OK);
    CHECK(y < 505);

    char* text = nullptr;
    REQUIRE(probelab_hash_serialize(h, &text) == PROBELAB_OK);
    probelab_hash* g = nullptr;
    REQUIRE(probelab_hash_parse(text, &g) == PROBELAB_OK);
    uint32_t y2 = 0;
    CHECK(probelab_hash_eval(g, 123, &y2) == PROBELAB_OK);
    CHECK(y2 == y);
    probelab_string_free(text);
    probelab_hash_free(g);

    CHECK(probelab_hash_eval(h, 1009, &y) == PROBELAB_ERR_DOMAIN);
    CHECK(std::strlen(probelab_last_error()) > 0);
    probelab_hash_free(h);
}

TEST_CASE("hash error paths") {
    probelab_hash* h = nullptr;
    CHECK(probelab_hash_sample("nope", 2, 1009, 505, 7, &h) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
    CHECK(probelab_hash_sample("poly", 6, 1009, 505, 7, &h) !=
          PROBELAB_OK);
    CHECK(probelab_hash_sample("poly", 2, 1024, 505, 7, &h) ==
          PROBELAB_ERR_DOMAIN); // composite p
    CHECK(probelab_hash_parse("garbage", &h) == PROBELAB_ERR_INVALID_ARGUMENT);
    CHECK(probelab_hash_sample(nullptr, 2, 1009, 505, 7, &h) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("linear table lifecycle and status codes") {
    probelab_table* t = nullptr;
    REQUIRE(probelab_table_create_linear(4, &t) == PROBELAB_OK);
    uint64_t probes = 0;
    CHECK(probelab_table_insert(t, 1, 0, &probes) == PROBELAB_OK);
    CHECK(probes == 1);
    CHECK(probelab_table_insert(t, 2, 0, &probes) == PROBELAB_OK);
    CHECK(probes == 2);
    CHECK(probelab_table_insert(t, 2, 0, nullptr) == PROBELAB_ERR_DUPLICATE_KEY);
    CHECK(probelab_table_insert(t, 3, 9, nullptr) == PROBELAB_ERR_DOMAIN);

    int found = 0;
    CHECK(probelab_table_search(t, 2, 0, &found, &probes) == PROBELAB_OK);
    CHECK((found == 1 && probes == 2));
    CHECK(probelab_table_search(t, 9, 0, &found, nullptr) == PROBELAB_OK);
    CHECK(found == 0);

    uint32_t size = 0;
    CHECK(probelab_table_size(t, &size) == PROBELAB_OK);
    CHECK(size == 2);
    uint64_t cost = 0;
    CHECK(probelab_table_total_cost(t, &cost) == PROBELAB_OK);
    CHECK(cost == 3);
    CHECK(probelab_table_erase(t, 1, 0, nullptr) == PROBELAB_ERR_INVALID_ARGUMENT);

    probelab_table_insert(t, 3, 0, nullptr);
    probelab_table_insert(t, 4, 0, nullptr);
    CHECK(probelab_table_insert(t, 5, 0, nullptr) == PROBELAB_ERR_CAPACITY);
    probelab_table_free(t);
}

TEST_CASE("blocked table lifecycle") {
    probelab_table* t = nullptr;
    CHECK(probelab_table_create_blocked(12, "xor", &t) == PROBELAB_ERR_DOMAIN);
    CHECK(probelab_table_create_blocked(8, "sideways", &t) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
    REQUIRE(probelab_table_create_blocked(8, "bidirectional", &t) == PROBELAB_OK);
    uint64_t probes = 0;
    CHECK(probelab_table_insert(t, 10, 5, &probes) == PROBELAB_OK);
    CHECK(probelab_table_insert(t, 11, 5, &probes) == PROBELAB_OK);
    CHECK(probes == 2); // second probe of home 5 is slot 4
    CHECK(probelab_table_erase(t, 10, 5, &probes) == PROBELAB_OK);
    int found = 0;
    CHECK(probelab_table_search(t, 11, 5, &found, &probes) == PROBELAB_OK);
    CHECK((found == 1 && probes == 1)); // repair pulled it home
    uint64_t cost = 0;
    CHECK(probelab_table_total_cost(t, &cost) == PROBELAB_ERR_INVALID_ARGUMENT);
    probelab_table_free(t);
}

TEST_CASE("null handles are rejected") {
    CHECK(probelab_table_insert(nullptr, 1, 0, nullptr) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
    CHECK(probelab_table_create_linear(4, nullptr) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
    CHECK(probelab_hash_eval(nullptr, 0, nullptr) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bound rows") {
    double out[6];
    REQUIRE(probelab_bounds_row(0.5, 0.0, out) == PROBELAB_OK);
    CHECK(out[0] == doctest::Approx(10.288889).epsilon(1e-6));
    CHECK(out[1] == doctest::Approx(11.288889).epsilon(1e-6));
    CHECK(out[2] == doctest::Approx(21.577778).epsilon(1e-6));
    CHECK(out[3] == doctest::Approx(out[2]));
    CHECK(out[5] == doctest::Approx(7.157486).epsilon(1e-6));
    CHECK(probelab_bounds_row(1.5, 0.0, out) == PROBELAB_ERR_DOMAIN);

    double hi = 0.0;
    REQUIRE(probelab_bounds_high_load(0.8, 0.0, &hi) == PROBELAB_OK);
    CHECK(hi == doctest::Approx(27.3));
    CHECK(probelab_bounds_high_load(0.5, 0.0, &hi) == PROBELAB_ERR_DOMAIN);
}

TEST_CASE("experiment driver writes the pinned csv") {
    TempFile cfg("cfg.json"), csv("out.csv");
    cfg.write(R"({"scheme":"linear","family":"polynomial-5",
                  "n":64,"r":128,"trials":2,"seed":3,
                  "workload":"random-keys"})");
    REQUIRE(probelab_experiment_run(cfg.path.c_str(), csv.path.c_str()) ==
            PROBELAB_OK);
    const std::string text = csv.read();
    CHECK(text.rfind("scheme,family,k,n,r,alpha,trial,seed,op,count,", 0) == 0);
    CHECK(text.find("successful_search") != std::string::npos);

    TempFile bad("bad.json");
    bad.write(R"({"scheme":"linear"})");
    CHECK(probelab_experiment_run(bad.path.c_str(), csv.path.c_str()) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
    CHECK(probelab_experiment_run("/nonexistent/x.json", csv.path.c_str()) ==
          PROBELAB_ERR_IO);
}

TEST_CASE("adversary driver") {
    TempFile csv("adv.csv");
    REQUIRE(probelab_adversary_run(8, 5, "cw", 77, csv.path.c_str()) ==
            PROBELAB_OK);
    std::istringstream in(csv.read());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "r,trial,a,m,total_steps");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 5);
    CHECK(probelab_adversary_run(4, 5, "cw", 77, csv.path.c_str()) ==
          PROBELAB_ERR_INVALID_ARGUMENT);
    CHECK(probelab_adversary_run(8, 5, "polynomial", 77, csv.path.c_str()) !=
          PROBELAB_OK);
}

TEST_CASE("verify dispatch") {
    char* detail = nullptr;
    CHECK(probelab_verify("pairwise", &detail) == PROBELAB_OK);
    REQUIRE(detail != nullptr);
    CHECK(std::strlen(detail) > 0);
    probelab_string_free(detail);
    CHECK(probelab_verify("made-up", nullptr) == PROBELAB_ERR_INVALID_ARGUMENT);
}
