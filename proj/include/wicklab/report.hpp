#ifndef WICKLAB_REPORT_HPP
#define WICKLAB_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wicklab/exponents.hpp"

namespace wicklab {

/// One verified claim: parameters, both sides, ratio/residual, pass flag.
struct CheckReport {
    std::string check;
    double u = 0.0, v = 0.0, p = 0.0, q = 0.0, r = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double residual = 0.0;
    bool pass = false;
    std::string note; // numeric budget: truncation tail, grid error bound, ...

    void set_exponents(const ExponentTuple& e) {
        u = e.u;
        v = e.v;
        p = e.p;
        q = e.q;
        r = e.r;
    }
};

namespace detail {

inline std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace detail

inline std::string csv_header() {
    return "check,u,v,p,q,r,lhs,rhs,ratio,residual,pass,budget_note";
}

inline std::string to_csv_row(const CheckReport& c) {
    std::string row = c.check;
    for (double x : {c.u, c.v, c.p, c.q, c.r, c.lhs, c.rhs, c.ratio, c.residual})
        row += "," + detail::format_double(x);
    row += c.pass ? ",1," : ",0,";
    row += c.note;
    return row;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& c : reports)
        if (!c.pass) return false;
    return !reports.empty();
}

} // namespace wicklab

#endif
