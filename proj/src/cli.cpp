#include "pebbling/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "pebbling/asymptotics.hpp"
#include "pebbling/board.hpp"
#include "pebbling/count_table.hpp"
#include "pebbling/series.hpp"

namespace pebbling::cli {

namespace {

using json = nlohmann::ordered_json;

// Column-oriented emitter keeping text/csv/json byte-deterministic.
// Big counts travel as decimal strings (JSON consumers stay overflow-free).
class Table {
public:
    Table(std::string name, std::vector<std::string> columns)
        : name_(std::move(name)), columns_(std::move(columns)) {}

    void row(std::vector<std::string> values) { rows_.push_back(std::move(values)); }

    void emit(Format f, std::ostream& os) const {
        switch (f) {
            case Format::csv: {
                for (size_t i = 0; i < columns_.size(); ++i)
                    os << (i ? "," : "") << columns_[i];
                os << '\n';
                for (const auto& r : rows_) {
                    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
                    os << '\n';
                }
                break;
            }
            case Format::json: {
                json doc;
                doc["kind"] = name_;
                json items = json::array();
                for (const auto& r : rows_) {
                    json item;
                    for (size_t i = 0; i < columns_.size(); ++i) item[columns_[i]] = r[i];
                    items.push_back(std::move(item));
                }
                doc["rows"] = std::move(items);
                os << doc.dump(2) << '\n';
                break;
            }
            case Format::text: {
                os << "# " << name_ << '\n';
                for (size_t i = 0; i < columns_.size(); ++i)
                    os << (i ? "  " : "") << columns_[i];
                os << '\n';
                for (const auto& r : rows_) {
                    for (size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << r[i];
                    os << '\n';
                }
                break;
            }
        }
    }

private:
    std::string name_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    CountTable t = CountTable::build(cfg.k_max);
    Table tab("table", {"k", "m", "count"});
    for (long k = 0; k <= cfg.k_max; ++k) {
        long m_top = std::max(0L, max_m_for(k));
        if (cfg.m_max >= 0) m_top = std::min(m_top, cfg.m_max);
        for (long m = 0; m <= m_top; ++m)
            tab.row({std::to_string(k), std::to_string(m), t.g(k, m).get_str()});
    }
    tab.emit(cfg.format, out);
    return kExitOk;
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out) {
    CountTable t = CountTable::build(cfg.k_max);
    Table tab("sequence", {"k", "count"});
    for (long k = 2; k <= cfg.k_max; ++k)
        tab.row({std::to_string(k), t.g_total(k).get_str()});
    tab.emit(cfg.format, out);
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    long m_top = cfg.m_max < 0 ? 1 : cfg.m_max;
    long k_need = 2 * m_top + 2 + cfg.max_steps;
    CountTable t = CountTable::build(k_need);
    Table tab("enumerate", {"m", "k", "bfs_count", "recurrence", "equal"});
    bool exhausted = false;
    for (long m = 0; m <= m_top; ++m) {
        EnumerationResult res = enumerate_counts(m, cfg.max_steps, cfg.state_budget);
        exhausted = exhausted || res.exhausted;
        if (res.exhausted)
            err << "note: state budget reached for m=" << m
                << "; counts complete through " << res.last_complete_level
                << " pebbles\n";
        for (long k = 2 * m + 2; k <= res.last_complete_level; ++k) {
            auto it = res.clean_counts.find(k);
            std::uint64_t bfs = it == res.clean_counts.end() ? 0 : it->second;
            const BigInt& exact = t.g(k, m);
            tab.row({std::to_string(m), std::to_string(k), std::to_string(bfs),
                     exact.get_str(), exact == bfs ? "yes" : "NO"});
        }
    }
    tab.emit(cfg.format, out);
    return exhausted ? kExitResource : kExitOk;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
    PrecisionPolicy policy{cfg.digits, 10, cfg.order};
    AsymptoticConstants c = compute_constants(policy);
    Table tab("constants", {"name", "value", "digits"});
    auto add = [&](const char* name, const Real& v) {
        tab.row({name, decimal_string(v, cfg.digits), std::to_string(cfg.digits)});
    };
    add("z_star", c.z_star);
    add("a", c.a);
    add("s_prime", c.s_prime);
    add("c_star", c.c_star);
    add("c1", c.c1);
    add("w_prefactor", c.w_prefactor);
    tab.emit(cfg.format, out);
    return kExitOk;
}

int cmd_asymptotic(const RunConfig& cfg, std::ostream& out) {
    PrecisionPolicy policy{cfg.digits, 10, cfg.order};
    CountTable t = CountTable::build(cfg.k_max);
    std::vector<long> ks;
    for (long k : {cfg.k_max / 8, cfg.k_max / 4, cfg.k_max / 2, cfg.k_max})
        if (k >= 2 && (ks.empty() || ks.back() != k)) ks.push_back(k);
    std::vector<long> ms;
    for (long m = 0; m <= std::max(0L, cfg.m_max < 0 ? 1 : cfg.m_max); ++m)
        ms.push_back(m);
    RatioReport rep = ratio_report(t, policy, ks, ms);
    Table tab("asymptotic", {"k", "m", "exact", "asymptotic", "ratio", "abs_gap"});
    for (const auto& r : rep.rows) {
        if (!r.applicable) {
            tab.row({std::to_string(r.k), std::to_string(r.m), "inapplicable", "", "", ""});
            continue;
        }
        std::ostringstream gap;
        gap << std::scientific << std::setprecision(3) << r.abs_gap;
        tab.row({std::to_string(r.k), std::to_string(r.m), r.exact, r.asymptotic,
                 r.ratio, gap.str()});
    }
    tab.emit(cfg.format, out);
    return kExitOk;
}

int cmd_w0(const RunConfig& cfg, std::ostream& out) {
    long order = cfg.order > 0 ? cfg.order : cfg.l_max;
    if (order < cfg.l_max - 2) order = cfg.l_max;
    IntSeries w0 = w0_series(order);
    Table tab("w0", {"l", "count"});
    for (long l = 2; l <= cfg.l_max; ++l)
        tab.row({std::to_string(l), w0_value(w0, l).get_str()});
    tab.emit(cfg.format, out);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    long k_max = std::max<long>(cfg.k_max, 20);
    long order = cfg.order > 0 ? cfg.order : 100;
    VerificationReport report;

    CountTable table = CountTable::build(k_max);
    report.merge(verify_boundary_identities(table));
    report.merge(verify_series_identities(order));

    // BFS oracle against the recurrence (small depths).
    {
        CheckResult res{"oracle_equality", true, 0, {}};
        for (long m = 0; m <= 2 && res.passed; ++m) {
            long steps = std::min<long>(cfg.max_steps > 0 ? cfg.max_steps : 6, 8);
            EnumerationResult e = enumerate_counts(m, steps);
            for (long k = 2 * m + 2; k <= e.last_complete_level; ++k) {
                auto it = e.clean_counts.find(k);
                std::uint64_t bfs = it == e.clean_counts.end() ? 0 : it->second;
                ++res.checked;
                if (table.g(k, m) != bfs) {
                    res.passed = false;
                    res.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                 ": bfs=" + std::to_string(bfs) +
                                 " recurrence=" + table.g(k, m).get_str();
                    break;
                }
            }
        }
        if (res.passed) res.detail = "m = 0..2";
        report.add(std::move(res));
    }

    // Coefficient extraction against the recurrence.
    {
        CheckResult res{"coefficient_equality", true, 0, {}};
        long k_top = std::min<long>(k_max, 80);
        for (long m = 1; m <= 10 && res.passed; ++m) {
            IntSeries ghat = gm_series(m, k_top);
            for (long k = 0; k <= k_top; ++k) {
                ++res.checked;
                if (g_from_series(k, ghat) != table.g(k, m)) {
                    res.passed = false;
                    res.detail = "k=" + std::to_string(k) + " m=" + std::to_string(m);
                    break;
                }
            }
        }
        IntSeries ghat1 = gm_series(1, k_top);
        for (long k = 2; k <= k_top && res.passed; ++k) {
            ++res.checked;
            if (g_total_from_series(k, ghat1) != table.g_total(k)) {
                res.passed = false;
                res.detail = "total at k=" + std::to_string(k);
            }
        }
        if (res.passed)
            res.detail = "k <= " + std::to_string(k_top) + ", m = 1..10, totals";
        report.add(std::move(res));
    }

    // W-collapse: w0(l) equals the table entry at l = k - m(m+5)/2.
    {
        CheckResult res{"w_collapse", true, 0, {}};
        IntSeries w0 = w0_series(11);
        for (long m = 0; m <= 8 && res.passed; ++m) {
            for (long l = 2; l <= m + 3; ++l) {
                long k = m * (m + 5) / 2 + l;
                if (k > k_max) break;
                ++res.checked;
                if (w0_value(w0, l) != table.g(k, m)) {
                    res.passed = false;
                    res.detail = "m=" + std::to_string(m) + " l=" + std::to_string(l);
                    break;
                }
            }
        }
        if (res.passed) res.detail = "m = 0..8, l = 2..m+3";
        report.add(std::move(res));
    }

    // Published constants.
    {
        CheckResult res{"constants", true, 0, {}};
        PrecisionPolicy policy{std::max(cfg.digits, 20), 10, 0};
        AsymptoticConstants c = compute_constants(policy);
        auto in_window = [](const Real& v, const char* lo_str, double width) {
            Real lo(lo_str);
            return v >= lo && v < lo + Real(width);
        };
        res.checked = 4;
        if (!in_window(c.z_star, "0.430729593137930", 1e-15))
            res.passed = false, res.detail = "z_star digits";
        else if (!in_window(c.a, "2.321642199494", 1e-12))
            res.passed = false, res.detail = "a digits";
        else if (abs(c.c1 - Real("2.027402047468498")) > Real(1e-14))
            res.passed = false, res.detail = "c1 digits";
        else if (abs(c.w_prefactor - Real("0.287777704935052")) > Real(1e-13))
            res.passed = false, res.detail = "w_prefactor digits";
        if (res.passed) res.detail = "z_star, a, c1, w_prefactor";
        report.add(std::move(res));
    }

    Table tab("verify", {"check", "status", "checked", "detail"});
    for (const auto& c : report.checks)
        tab.row({c.name, c.passed ? "pass" : "FAIL", std::to_string(c.checked), c.detail});
    tab.emit(cfg.format, out);
    if (const CheckResult* f = report.first_failure()) {
        out << "FIRST FAILURE: " << f->name << ": " << f->detail << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::table: return cmd_table(cfg, out);
            case Command::sequence: return cmd_sequence(cfg, out);
            case Command::enumerate: return cmd_enumerate(cfg, out, err);
            case Command::constants: return cmd_constants(cfg, out);
            case Command::asymptotic: return cmd_asymptotic(cfg, out);
            case Command::w0: return cmd_w0(cfg, out);
            case Command::verify: return cmd_verify(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            bool stdout_is_tty) {
    CLI::App app{"Exact and asymptotic reachable-configuration counts for quadrant pebbling"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k-max", cfg.k_max, "largest k");
        sub->add_option("--m-max", cfg.m_max, "largest m");
        sub->add_option("--max-steps", cfg.max_steps, "search depth");
        sub->add_option("--l-max", cfg.l_max, "largest l");
        sub->add_option("--digits", cfg.digits, "decimal digits")->check(CLI::PositiveNumber);
        sub->add_option("--order", cfg.order, "series order");
        sub->add_option("--format", format, "csv|json|text")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--out", cfg.out_path, "output path");
    };

    std::pair<const char*, Command> commands[] = {
        {"table", Command::table},         {"sequence", Command::sequence},
        {"enumerate", Command::enumerate}, {"constants", Command::constants},
        {"asymptotic", Command::asymptotic}, {"w0", Command::w0},
        {"verify", Command::verify},
    };
    for (const auto& entry : commands) {
        CLI::App* sub = app.add_subcommand(entry.first);
        add_common(sub);
        Command cmd = entry.second;
        sub->callback([&cfg, cmd] { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (cfg.k_max < 0 || cfg.max_steps < 0 || cfg.l_max < 2 || cfg.order < 0) {
        err << "usage error: bounds must be positive (k-max >= 0, l-max >= 2)\n";
        return kExitUsage;
    }

    if (format == "csv")
        cfg.format = Format::csv;
    else if (format == "json")
        cfg.format = Format::json;
    else if (format == "text")
        cfg.format = Format::text;
    else
        cfg.format = (stdout_is_tty && cfg.out_path.empty()) ? Format::text : Format::json;

    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "usage error: cannot open " << cfg.out_path << '\n';
            return kExitUsage;
        }
        return run(cfg, file, err);
    }
    return run(cfg, out, err);
}

}  // namespace pebbling::cli
