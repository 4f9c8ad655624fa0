// Acceptance battery: one printed pass/fail line per criterion.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wicklab/harness.hpp"

using namespace wicklab;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what, bool ok) {
    std::printf("criterion %2d: %s - %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

std::vector<const CheckReport*> rows_named(const std::vector<CheckReport>& rows,
                                           const std::string& prefix) {
    std::vector<const CheckReport*> out;
    for (const auto& r : rows)
        if (r.check.rfind(prefix, 0) == 0) out.push_back(&r);
    return out;
}

bool section_passes(const std::vector<CheckReport>& rows, const std::string& prefix,
                    std::size_t min_count) {
    auto sel = rows_named(rows, prefix);
    if (sel.size() < min_count) return false;
    return std::all_of(sel.begin(), sel.end(), [](const CheckReport* r) { return r->pass; });
}

// criterion 1: wick coefficients vs the quadrature projection of the
// pointwise product, all Hermite pairs with total degree <= 4, d in {1, 2}
bool wick_oracle_equivalence() {
    for (int d : {1, 2}) {
        QuadratureRule rule = gauss_hermite_rule(d == 1 ? 64 : 32);
        auto indices = MultiIndex::up_to_degree(d, 4);
        for (const auto& a : indices)
            for (const auto& b : indices) {
                ChaosExpansion ha(d, a.total_degree()), hb(d, b.total_degree());
                ha.set(a, 1.0);
                hb.set(b, 1.0);
                ChaosExpansion w = wick_product(ha, hb);
                Field prod = [&](const std::vector<double>& x) {
                    return chaos_eval(ha, x) * chaos_eval(hb, x);
                };
                auto layer =
                    chaos_projection(prod, d, a.total_degree() + b.total_degree(), rule);
                for (const auto& [gamma, c] : layer)
                    if (std::abs(c - w.coeff(gamma)) > 1e-8) return false;
            }
    }
    return true;
}

bool young_constants() {
    if (young_axis_constant(1.0) != 1.0 || young_axis_constant(kInf) != 1.0) return false;
    if (std::abs(young_axis_constant(2.0) - 1.0) > 1e-14) return false;
    return std::abs(sharp_young_constant(4.0 / 3.0, 4.0 / 3.0, 2.0, 1) - 0.877383) <= 1e-6;
}

} // namespace

int main() {
    RunConfig cfg = RunConfig::load(std::string(WICKLAB_SOURCE_DIR) +
                                    "/configs/verify_default.json");
    SweepResult run = run_verify(cfg);
    const std::vector<CheckReport>& rows = run.rows;

    criterion(1, "wick product matches the quadrature projection oracle",
              wick_oracle_equivalence());
    criterion(2, "convolution-wick identity residual <= 1e-6 on the fixture set",
              section_passes(rows, "conv-wick", 30));
    criterion(3, "plain hoelder ratio <= 1 + 1e-8 on 200 pairs per p, sharp witness",
              section_passes(rows, "holder", 800) && section_passes(rows, "holder-sharp", 2));
    criterion(4, "hypercontractivity ratio <= 1 + 1e-8 on 200 pairs per (p, r), psi = 1 sharp",
              section_passes(rows, "nelson", 600) && section_passes(rows, "nelson-sharp", 3));
    criterion(5, "full inequality on the exponent grid plus both specializations",
              section_passes(rows, "full-holder", 48) &&
                  section_passes(rows, "specialize-holder", 3) &&
                  section_passes(rows, "specialize-nelson", 3));
    criterion(6, "lieb supremum search vs closed form incl. the worked 2^(1/20)",
              section_passes(rows, "lieb-sup", 12) && section_passes(rows, "lieb-worked", 1));
    criterion(7, "constant identities residual <= 1e-12 across the grid",
              section_passes(rows, "const-", 7 * 48));
    criterion(8, "sharp young constants and grid convolution checks",
              young_constants() && section_passes(rows, "young-grid", 6) &&
                  section_passes(rows, "young-sharp", 2));
    criterion(9, "minimality counterexamples found, zero false positives",
              section_passes(rows, "minimality-violation", 4) &&
                  section_passes(rows, "minimality-measured", 1) &&
                  section_passes(rows, "minimality-admissible", 1));
    criterion(10, "tensorization squares d = 1 ratios and kernel values",
              section_passes(rows, "tensorization", 3));

    SweepResult rerun = run_verify(cfg);
    criterion(11, "two verify runs with the pinned config are byte-identical",
              emit_csv(run) == emit_csv(rerun) && emit_json(run) == emit_json(rerun));

    std::size_t failed_rows = 0;
    for (const auto& r : rows)
        if (!r.pass) ++failed_rows;
    std::printf("verify rows: %zu total, %zu failed\n", rows.size(), failed_rows);
    if (failed_rows != 0)
        for (const auto& r : rows)
            if (!r.pass) std::printf("  failed: %s\n", to_csv_row(r).c_str());

    return (g_failures == 0 && failed_rows == 0) ? 0 : 1;
}
