// likeiper: reproduce the tiny Li-Keiper coefficient tables and plots.
//
// Subcommands: coeffs, phi, approx, table, crossing, plot.
// Default digits can be overridden with the LIKEIPER_DIGITS environment
// variable. Exit codes: 0 success, 2 usage error, 3 computation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "likeiper/format.hpp"
#include "likeiper/sequences.hpp"
#include "likeiper/svg.hpp"
#include "likeiper/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace likeiper;

int default_digits() {
    if (const char* env = std::getenv("LIKEIPER_DIGITS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("LIKEIPER_DIGITS", std::string("not an integer: ") + env);
        }
    }
    return 20;
}

struct CommonOpts {
    int n_max = 30;
    int digits = 20;
    int guard_digits = 15;
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_n_max = true) {
    if (with_n_max)
        cmd->add_option("--n-max", opts.n_max, "largest n to emit")->check(CLI::PositiveNumber);
    cmd->add_option("--digits", opts.digits, "requested decimal digits")->check(CLI::Range(6, 1000));
    cmd->add_option("--guard-digits", opts.guard_digits, "extra working digits")
        ->check(CLI::Range(10, 1000));
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--output,-o", opts.output, "output path (default stdout)");
}

json metadata(const PrecisionContext& ctx) {
    return json{{"digits", ctx.requested_digits()},
                {"guard_digits", ctx.guard_digits()},
                {"version", kVersion}};
}

void emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + opts.output);
    out << payload;
}

std::string fixed(const Real& v, int decimals) {
    return format_fixed(v, decimals, DecimalRounding::half_even);
}

int run_coeffs(const CommonOpts& opts) {
    PrecisionContext ctx(opts.digits, opts.guard_digits);
    TinySequence t = tiny_coefficients(opts.n_max, ctx);
    const int dec = ctx.requested_digits();

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "coeffs"}, {"n_max", opts.n_max}};
        json n = json::array(), chi = json::array(), lam = json::array();
        for (int i = 1; i <= opts.n_max; ++i) {
            n.push_back(i);
            chi.push_back(fixed(t.chi(i), dec));
            lam.push_back(fixed(t.lambda_star(i), dec));
        }
        j["n"] = n;
        j["chi"] = chi;
        j["lambda_star"] = lam;
        j["metadata"] = metadata(ctx);
        os << j.dump(2) << "\n";
    } else {
        const char sep = opts.format == "csv" ? ',' : '\t';
        os << "n" << sep << "chi" << sep << "lambda_star\n";
        for (int i = 1; i <= opts.n_max; ++i)
            os << i << sep << fixed(t.chi(i), dec) << sep << fixed(t.lambda_star(i), dec) << "\n";
    }
    emit(opts, os.str());
    return 0;
}

int run_phi(const CommonOpts& opts, int order_k) {
    PrecisionContext ctx(opts.digits, opts.guard_digits);
    TinySequence t = tiny_coefficients(opts.n_max, ctx);
    DifferenceSequence d = difference_sequence(t, order_k);
    const int dec = ctx.requested_digits();

    std::ostringstream summary;
    if (d.sign_changes.empty()) {
        summary << "no sign changes";
    } else {
        summary << "sign changes:";
        for (int n : d.sign_changes)
            summary << " between " << n - 1 << " and " << n;
    }

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "phi"}, {"order", order_k}, {"n_max", opts.n_max}};
        json n = json::array(), phi = json::array();
        for (int i = 1; i <= opts.n_max; ++i) {
            n.push_back(i);
            phi.push_back(fixed(d.at(i), dec));
        }
        j["n"] = n;
        j["phi"] = phi;
        j["sign_changes"] = d.sign_changes;
        j["metadata"] = metadata(ctx);
        os << j.dump(2) << "\n";
    } else {
        const char sep = opts.format == "csv" ? ',' : '\t';
        os << "n" << sep << "phi\n";
        for (int i = 1; i <= opts.n_max; ++i)
            os << i << sep << fixed(d.at(i), dec) << "\n";
        os << "# " << summary.str() << "\n";
    }
    emit(opts, os.str());
    return 0;
}

int run_approx(const CommonOpts& opts, const std::string& scheme_str) {
    auto scheme = scheme_from_name(scheme_str);
    if (!scheme)
        throw CLI::ValidationError("--scheme", "unknown scheme: " + scheme_str);
    PrecisionContext ctx(opts.digits, opts.guard_digits);
    TinySequence t = tiny_coefficients(opts.n_max, ctx);
    ApproximationTable a = approximation(t, *scheme, opts.n_max);
    const int dec = ctx.requested_digits();

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "approx"}, {"scheme", scheme_name(*scheme)}, {"n_max", opts.n_max}};
        json n = json::array(), v = json::array();
        for (int i = a.first_n; i <= a.last_n(); ++i) {
            n.push_back(i);
            v.push_back(fixed(a.at(i), dec));
        }
        j["n"] = n;
        j["value"] = v;
        j["metadata"] = metadata(ctx);
        os << j.dump(2) << "\n";
    } else {
        const char sep = opts.format == "csv" ? ',' : '\t';
        os << "n" << sep << "value\n";
        for (int i = a.first_n; i <= a.last_n(); ++i)
            os << i << sep << fixed(a.at(i), dec) << "\n";
    }
    emit(opts, os.str());
    return 0;
}

int run_table(const CommonOpts& opts) {
    PrecisionContext ctx(opts.digits, opts.guard_digits);
    TinySequence t = tiny_coefficients(opts.n_max, ctx);
    auto rows = comparison_table(t, opts.n_max);

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "table"}, {"n_max", opts.n_max}};
        json n = json::array(), a = json::array(), c = json::array(), b = json::array();
        for (const auto& row : rows) {
            n.push_back(row.n);
            a.push_back(row.a.empty() ? json(nullptr) : json(row.a));
            c.push_back(row.c);
            b.push_back(row.b.empty() ? json(nullptr) : json(row.b));
        }
        j["n"] = n;
        j["A"] = a;
        j["C"] = c;
        j["B"] = b;
        j["metadata"] = metadata(ctx);
        os << j.dump(2) << "\n";
    } else {
        const char sep = opts.format == "csv" ? ',' : '\t';
        os << "n" << sep << "A" << sep << "C" << sep << "B\n";
        for (const auto& row : rows)
            os << row.n << sep << row.a << sep << row.c << sep << row.b << "\n";
    }
    emit(opts, os.str());
    return 0;
}

int run_crossing(const CommonOpts& opts, int n1, int n2, const std::string& anchor_str) {
    CrossingAnchor anchor = CrossingAnchor::automatic;
    if (anchor_str == "paper")
        anchor = CrossingAnchor::paper;
    else if (anchor_str == "n1")
        anchor = CrossingAnchor::at_n1;
    PrecisionContext ctx(opts.digits, opts.guard_digits);
    TinySequence t = tiny_coefficients(std::max(n2, 2), ctx);
    LineCrossing lc = line_crossing(t, n1, n2, anchor);
    const int dec = ctx.requested_digits();

    std::ostringstream os;
    if (opts.format == "json") {
        json j{{"command", "crossing"}, {"n1", n1}, {"n2", n2}, {"anchor_n", lc.anchor_n}};
        j["slope"] = fixed(lc.slope, dec);
        j["crossing"] = lc.crossing ? json(fixed(*lc.crossing, dec)) : json(nullptr);
        j["metadata"] = metadata(ctx);
        os << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << "n1,n2,anchor_n,slope,crossing\n";
        os << n1 << ',' << n2 << ',' << lc.anchor_n << ',' << fixed(lc.slope, dec) << ','
           << (lc.crossing ? fixed(*lc.crossing, dec) : std::string()) << "\n";
    } else {
        os << "line through chi*(" << n1 << "), chi*(" << n2 << "), anchored at n=" << lc.anchor_n
           << "\n";
        os << "slope = " << fixed(lc.slope, dec) << "\n";
        if (lc.crossing)
            os << "crossing = " << fixed(*lc.crossing, dec) << "\n";
        else
            os << "no crossing (slope >= 0)\n";
    }
    emit(opts, os.str());
    return 0;
}

int run_plot(const CommonOpts& opts, const std::string& what, int order_k, int n_min) {
    PrecisionContext ctx(opts.digits, opts.guard_digits);
    std::vector<StepSeries> series;
    std::string title;
    if (what == "phi") {
        TinySequence t = tiny_coefficients(opts.n_max, ctx);
        DifferenceSequence d = difference_sequence(t, order_k);
        StepSeries s{"phi_" + std::to_string(order_k) + "(n)", "steelblue", 1, {}};
        for (const auto& v : d.values)
            s.values.push_back(static_cast<double>(v));
        series.push_back(std::move(s));
        title = "order-" + std::to_string(order_k) + " binomial difference of lambda*";
    } else if (what == "compare") {
        TinySequence t = tiny_coefficients(opts.n_max, ctx);
        ApproximationTable a = approximation(t, Scheme::A_table, opts.n_max);
        ApproximationTable b = approximation(t, Scheme::B_table, opts.n_max);
        StepSeries sa{"A (quasi Fibonacci)", "green", a.first_n, {}};
        for (const auto& v : a.values)
            sa.values.push_back(static_cast<double>(v));
        StepSeries sc{"C (exact chi*)", "red", 1, {}};
        for (int n = 1; n <= t.n_max(); ++n)
            sc.values.push_back(static_cast<double>(t.chi(n)));
        StepSeries sb{"B (three antecedents)", "maroon", b.first_n, {}};
        for (const auto& v : b.values)
            sb.values.push_back(static_cast<double>(v));
        series = {std::move(sa), std::move(sc), std::move(sb)};
        title = "chi*(n) and its two recurrence approximations";
    } else if (what == "coeffs") {
        TinySequence t = tiny_coefficients(opts.n_max, ctx);
        StepSeries s{"chi*(n)", "red", 1, {}};
        for (int n = 1; n <= t.n_max(); ++n)
            s.values.push_back(static_cast<double>(t.chi(n)));
        series.push_back(std::move(s));
        title = "Taylor coefficients chi*(n)";
    } else {
        throw CLI::ValidationError("--what", "unknown plot kind: " + what);
    }

    std::ostringstream os;
    write_step_svg(os, series, n_min, opts.n_max, title);
    emit(opts, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tiny Li-Keiper coefficient toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", likeiper::kVersion);

    CommonOpts opts;
    try {
        opts.digits = default_digits();
    } catch (const CLI::Error& e) {
        return app.exit(e) ? 2 : 2;
    }

    auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients chi*(n) and lambda*(n)");
    add_common(coeffs, opts);

    int order_k = 2;
    auto* phi = app.add_subcommand("phi", "order-k binomial difference of lambda*");
    add_common(phi, opts);
    phi->add_option("--order", order_k, "binomial difference order k")->check(CLI::Range(1, 6));

    std::string scheme = "A_table";
    auto* approx = app.add_subcommand("approx", "recurrence approximation column");
    add_common(approx, opts);
    approx->add_option("--scheme", scheme, "A_table, B_table, A_literal or B_literal");

    auto* table = app.add_subcommand("table", "A / C / B comparison table, first 6 decimals");
    add_common(table, opts);

    int n1 = 2, n2 = 3;
    std::string anchor = "auto";
    auto* crossing = app.add_subcommand("crossing", "straight-line zero crossing of chi*");
    add_common(crossing, opts, /*with_n_max=*/false);
    crossing->add_option("--n1", n1, "first sample point")->check(CLI::PositiveNumber);
    crossing->add_option("--n2", n2, "second sample point")->check(CLI::PositiveNumber);
    crossing->add_option("--anchor", anchor, "line anchoring mode")
        ->check(CLI::IsMember({"auto", "paper", "n1"}));

    std::string what = "compare";
    int n_min = 1;
    auto* plot = app.add_subcommand("plot", "step-function SVG plot");
    add_common(plot, opts);
    plot->add_option("--what", what, "phi, compare or coeffs");
    plot->add_option("--order", order_k, "difference order for --what phi")->check(CLI::Range(1, 6));
    plot->add_option("--n-min", n_min, "left edge of the plotted range")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coeffs->parsed())
            return run_coeffs(opts);
        if (phi->parsed())
            return run_phi(opts, order_k);
        if (approx->parsed())
            return run_approx(opts, scheme);
        if (table->parsed())
            return run_table(opts);
        if (crossing->parsed())
            return run_crossing(opts, n1, n2, anchor);
        if (plot->parsed())
            return run_plot(opts, what, order_k, n_min);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
