#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "probelab.h"

namespace {

int report_failure(const char* what) {
    std::fprintf(stderr, "%s: %s\n", what, probelab_last_error());
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probing-scheme experiments: limited-independence hash families, "
                 "linear and blocked probing, analytic bounds"};
    app.require_subcommand(1);

    // experiment run --config <file> --out <csv>
    auto* experiment = app.add_subcommand("experiment", "Run a configured experiment");
    experiment->require_subcommand(1);
    auto* exp_run = experiment->add_subcommand("run", "Execute trials and emit CSV");
    std::string config_path, exp_out = "-";
    exp_run->add_option("--config", config_path, "JSON experiment config")->required();
    exp_run->add_option("--out", exp_out, "output CSV path, '-' for stdout");

    // adversary --log-r <i> --trials <t> --family cw|star --seed <s>
    auto* adversary = app.add_subcommand(
        "adversary", "Measure adversarial insertion cost for a pairwise family");
    std::uint32_t log_r = 10, adv_trials = 100;
    std::string adv_family = "cw", adv_out = "-";
    std::uint64_t adv_seed = 0;
    adversary->add_option("--log-r", log_r, "log2 of the target table size")->required();
    adversary->add_option("--trials", adv_trials, "independent trials");
    adversary->add_option("--family", adv_family, "hash family: cw or star");
    adversary->add_option("--seed", adv_seed, "master seed");
    adversary->add_option("--out", adv_out, "output CSV path, '-' for stdout");

    // bounds --alpha-grid a,b,c --eps <e>
    auto* bounds = app.add_subcommand("bounds", "Tabulate the analytic cost bounds");
    std::vector<double> alpha_grid;
    double eps = 0.0;
    bounds->add_option("--alpha-grid", alpha_grid, "load factors")
        ->required()
        ->delimiter(',');
    bounds->add_option("--eps", eps, "approximate-uniformity slack");

    // verify --suite <name>
    auto* verify = app.add_subcommand("verify", "Run a brute-force oracle suite");
    std::string suite;
    verify->add_option("--suite", suite,
                       "moments | lemma2 | pairwise | differential")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (exp_run->parsed()) {
        if (probelab_experiment_run(config_path.c_str(), exp_out.c_str()) != PROBELAB_OK)
            return report_failure("experiment failed");
        return 0;
    }

    if (adversary->parsed()) {
        if (probelab_adversary_run(log_r, adv_trials, adv_family.c_str(), adv_seed,
                                   adv_out.c_str()) != PROBELAB_OK)
            return report_failure("adversary run failed");
        return 0;
    }

    if (bounds->parsed()) {
        std::printf("alpha,eps,T,U,I,D,S,eq1\n");
        for (double alpha : alpha_grid) {
            double row[6];
            if (probelab_bounds_row(alpha, eps, row) != PROBELAB_OK)
                return report_failure("bounds evaluation failed");
            std::printf("%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", alpha, eps,
                        row[0], row[1], row[2], row[3], row[4], row[5]);
        }
        return 0;
    }

    if (verify->parsed()) {
        char* detail = nullptr;
        const probelab_status status = probelab_verify(suite.c_str(), &detail);
        if (status == PROBELAB_OK) {
            std::printf("%s: PASS (%s)\n", suite.c_str(), detail ? detail : "");
            probelab_string_free(detail);
            return 0;
        }
        if (status == PROBELAB_ERR_VERIFICATION) {
            std::printf("%s: FAIL (%s)\n", suite.c_str(), detail ? detail : "");
            probelab_string_free(detail);
            return 1;
        }
        probelab_string_free(detail);
        return report_failure("verify failed to run");
    }

    return 0;
}
