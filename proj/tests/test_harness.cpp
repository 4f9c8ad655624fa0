#include <doctest.h>

#include "wicklab/harness.hpp"

using namespace wicklab;

namespace {

RunConfig tiny_config() {
    RunConfig cfg;
    cfg.grid_step = 0.05;
    cfg.random_pairs = 3;
    cfg.admissible_trials = 10;
    cfg.u_values = {2.0};
    cfg.p_values = {1.5, 2.0};
    cfg.q_values = {2.0, 4.0};
    return cfg;
}

} // namespace

TEST_CASE("random chaos is deterministic and seed-sensitive") {
    ChaosExpansion a = random_chaos(42, 1, 6);
    ChaosExpansion b = random_chaos(42, 1, 6);
    ChaosExpansion c = random_chaos(43, 1, 6);
    double same = 0.0, diff = 0.0;
    for (const auto& [alpha, v] : a.coeffs()) {
        same = std::max(same, std::abs(v - b.coeff(alpha)));
        diff = std::max(diff, std::abs(v - c.coeff(alpha)));
    }
    CHECK(same == 0.0);
    CHECK(diff > 1e-3);
    CHECK(a.norm_l2() > 0.0);
    CHECK(a.max_degree() == 6);
}

TEST_CASE("config json round trip and validation") {
    RunConfig cfg = tiny_config();
    RunConfig back = RunConfig::from_json(cfg.to_json());
    CHECK(back.to_json() == cfg.to_json());

    json bad = cfg.to_json();
    bad["dim"] = 3;
    CHECK_THROWS_AS(RunConfig::from_json(bad), std::invalid_argument);
    bad = cfg.to_json();
    bad["quad_order"] = 500;
    CHECK_THROWS_AS(RunConfig::from_json(bad), std::invalid_argument);
    bad = cfg.to_json();
    bad["grid_step"] = 0.07; // L/h not an integer
    CHECK_THROWS_AS(RunConfig::from_json(bad), std::invalid_argument);
}

TEST_CASE("verify run passes and is byte-deterministic") {
    RunConfig cfg = tiny_config();
    SweepResult a = run_verify(cfg);
    SweepResult b = run_verify(cfg);
    CHECK(!a.rows.empty());
    for (const auto& rep : a.rows) {
        INFO(rep.check, " note=", rep.note, " residual=", rep.residual, " ratio=", rep.ratio);
        CHECK(rep.pass);
    }
    CHECK(emit_csv(a) == emit_csv(b));
    CHECK(emit_json(a) == emit_json(b));
    CHECK(a.config_hash == b.config_hash);
}

TEST_CASE("sweep is identical in serial and parallel") {
    RunConfig cfg = tiny_config();
    cfg.threads = 1;
    SweepResult serial = run_sweep(cfg);
    cfg.threads = 4;
    SweepResult parallel = run_sweep(cfg);
    // the thread count is part of the config, not of the rows
    CHECK(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i)
        CHECK(to_csv_row(serial.rows[i]) == to_csv_row(parallel.rows[i]));
    for (const auto& rep : serial.rows) CHECK(rep.pass);
}

TEST_CASE("malformed sweep grid points become failure rows") {
    RunConfig cfg = tiny_config();
    cfg.p_values = {1.0, 2.0}; // p = 1 is outside the admissible exponent range
    SweepResult result = run_sweep(cfg);
    bool found_error = false;
    for (const auto& rep : result.rows)
        if (rep.check == "sweep-point") {
            found_error = true;
            CHECK(!rep.pass);
            CHECK(rep.note.find("error:") != std::string::npos);
        }
    CHECK(found_error);
    CHECK(!all_pass(result.rows));
}

TEST_CASE("oracles") {
    RunConfig cfg = tiny_config();
    for (const char* name :
         {"quadrature", "projection", "exp-tail", "norm-conversion", "lieb-worked"}) {
        SweepResult r = run_oracle(name, cfg);
        INFO(name);
        CHECK(all_pass(r.rows));
    }
    CHECK_THROWS_AS(run_oracle("no-such-case", cfg), std::invalid_argument);
}

TEST_CASE("csv artifact shape") {
    RunConfig cfg = tiny_config();
    SweepResult r = run_oracle("lieb-worked", cfg);
    std::string csv = emit_csv(r);
    CHECK(csv.rfind("check,u,v,p,q,r,lhs,rhs,ratio,residual,pass,budget_note\n", 0) == 0);
    // one header plus one line per row, each with 11 commas
    std::size_t lines = 0, commas = 0;
    for (char ch : csv) {
        if (ch == '\n') ++lines;
        if (ch == ',') ++commas;
    }
    CHECK(lines == r.rows.size() + 1);
    CHECK(commas == 11 * (r.rows.size() + 1));
}

TEST_CASE("chaos and grid json round trips") {
    ChaosExpansion phi = random_chaos(77, 2, 3);
    ChaosExpansion back = chaos_from_json(to_json(phi));
    CHECK(back.dim() == phi.dim());
    double res = 0.0;
    for (const auto& [alpha, c] : phi.coeffs()) res = std::max(res, std::abs(c - back.coeff(alpha)));
    CHECK(res == 0.0);

    GridSpec spec(1, 2.0, 0.5);
    GridFunction f = GridFunction::sample(spec, [](const std::vector<double>& x) {
        return Complex(x[0], -x[0]);
    });
    GridFunction g = grid_from_json(to_json(f));
    CHECK(g.spec() == spec);
    CHECK(g.samples() == f.samples());
}
