#pragma once

/**
 * @file cli.hpp
 * @brief The `curvilinear` command-line driver.
 *
 * Exit codes: 0 success, 1 computation error, 2 usage or parse error,
 * 3 verification mismatch. With `--json` a single document goes to stdout,
 * errors included (see schema/report.schema.json).
 */

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvilinear/curvilinear.hpp"

namespace curvilinear::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, computation_error = 1, usage_error = 2, mismatch = 3 };

namespace detail {

/// Integers go out as JSON numbers when they fit, else as decimal strings.
inline Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline Json specialized_json(const SpecializedValue& v) {
    if (const auto* i = std::get_if<Integer>(&v)) return integer_json(*i);
    return to_string(std::get<WeightPolynomial>(v));
}

inline Json resolution_json(const ResolutionData& res) {
    Json j;
    j["ambient_dim"] = res.ambient_dim;
    j["origin_mult"] = res.origin_mult ? Json(*res.origin_mult) : Json(nullptr);
    Json divisors = Json::array();
    for (const auto& d : res.divisors) {
        Json e;
        e["id"] = d.id;
        e["N"] = d.N;
        e["nu"] = d.nu;
        e["m"] = d.m;
        e["neighbors"] = d.neighbors;
        e["strict_meets"] = d.strict_meets ? Json(*d.strict_meets) : Json(nullptr);
        e["class_open"] = to_string(class_open(res, d.id));
        e["class_strict"] = to_string(class_strict(res, d.id));
        divisors.push_back(std::move(e));
    }
    j["divisors"] = std::move(divisors);
    Json edges = Json::array();
    for (const auto& [a, b] : dual_graph_edges(res)) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["smooth_branch"] = has_smooth_branch(res);
    return j;
}

inline SpecializationMode parse_mode(const std::string& text) {
    if (text == "euler") return EulerMode{};
    if (text == "weight") return WeightMode{};
    if (text.rfind("q=", 0) == 0) {
        long q = 0;
        const char* first = text.data() + 2;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, q);
        if (ec == std::errc{} && ptr == last && first != last) return PointCountMode{q};
    }
    throw Error(ErrorCode::InvalidArgument, "--specialize expects euler, weight or q=<int>, got '" + text + "'");
}

inline std::vector<long> parse_primes(const std::string& text) {
    std::vector<long> out;
    std::string list = text;
    std::replace(list.begin(), list.end(), ',', ' ');
    std::istringstream items(list);
    std::string item;
    while (items >> item) {
        long p = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::InvalidArgument, "bad prime '" + item + "'");
        }
        if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, item + " is not a prime");
        out.push_back(p);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "--primes is empty");
    return out;
}

/// Where the resolution comes from: a curve to resolve or a file to read.
struct Source {
    std::string curve;
    std::string file;

    bool has_curve() const { return !curve.empty(); }

    ResolutionData load(Json& doc) const {
        if (has_curve() == !file.empty()) {
            throw Error(ErrorCode::InvalidArgument, "give exactly one of <curve> or --resolution <file>");
        }
        if (has_curve()) {
            const CurvePoly f = parse_curve(curve);
            doc["curve"] = to_string(f);
            return resolve(f);
        }
        std::ifstream in(file);
        if (!in) throw Error(ErrorCode::InvalidResolutionFile, "cannot open " + file);
        doc["resolution_file"] = file;
        return read_resolution_file(in);
    }
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace detail

/// Runs one command line; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvilinear Hilbert schemes and Igusa zeta functions of plane curve germs", "curvilinear"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit a single JSON document");

    detail::Source source;
    auto add_source = [&source](CLI::App* sub, bool allow_file) {
        sub->add_option("curve", source.curve, "polynomial in x, y vanishing at the origin");
        if (allow_file) sub->add_option("--resolution", source.file, "read resolution data from a file");
    };

    auto* resolve_cmd = app.add_subcommand("resolve", "embedded resolution: divisor table and dual graph");
    add_source(resolve_cmd, false);
    resolve_cmd->get_option("curve")->required();
    std::string write_path;
    resolve_cmd->add_option("--write-resolution", write_path, "also write the resolution file to this path");

    auto* zeta_cmd = app.add_subcommand("zeta", "Denef-type curvilinear zeta function");
    add_source(zeta_cmd, true);

    auto* hilb_cmd = app.add_subcommand("hilb", "classes of curvilinear Hilbert schemes");
    add_source(hilb_cmd, true);
    int max_k = 0;
    hilb_cmd->add_option("--max-k", max_k, "largest k")->required()->check(CLI::Range(2, 1000));
    std::string specialize_text;
    hilb_cmd->add_option("--specialize", specialize_text, "euler, weight or q=<int>");

    auto* q_cmd = app.add_subcommand("qseries", "closed form and expansion of Q(T) = sum H_k T^k");
    add_source(q_cmd, true);
    int order = 8;
    q_cmd->add_option("--order", order, "expand up to T^order")->check(CLI::Range(0, 1000));
    std::string constant = "corrected";
    q_cmd->add_option("--constant", constant, "constant term of the zeta/Q identity")
        ->check(CLI::IsMember({"corrected", "verbatim"}));

    auto* verify_cmd = app.add_subcommand("verify", "compare H_k with brute-force jet counts over F_p");
    add_source(verify_cmd, false);
    verify_cmd->get_option("curve")->required();
    std::string primes_text;
    verify_cmd->add_option("--primes", primes_text, "comma-separated primes")->required();
    int verify_k = 0;
    verify_cmd->add_option("--max-k", verify_k, "largest k")->required()->check(CLI::Range(2, 64));
    unsigned jobs = 1;
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

    Json doc;
    auto fail = [&](const std::string& code, const std::string& message, std::optional<std::size_t> offset,
                    int exit_code) {
        if (json) {
            doc["ok"] = false;
            Json e;
            e["code"] = code;
            e["message"] = message;
            if (offset) e["offset"] = *offset;
            doc["error"] = std::move(e);
            out << doc.dump(2) << '\n';
        }
        err << "error: " << message << '\n';
        return exit_code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        for (int i = 1; i < argc; ++i) {
            if (std::string(argv[i]) == "--json") json = true;
        }
        doc["command"] = nullptr;
        return fail("UsageError", e.what(), std::nullopt, usage_error);
    }

    CLI::App* chosen = app.get_subcommands().front();
    doc["command"] = chosen->get_name();
    try {
        int status = ok;
        if (chosen == resolve_cmd) {
            const ResolutionData res = source.load(doc);
            if (!write_path.empty()) {
                std::ofstream file(write_path);
                if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + write_path);
                write_resolution_file(file, res);
            }
            if (json) {
                doc["resolution"] = detail::resolution_json(res);
            } else {
                out << "curve: " << doc["curve"].get<std::string>() << '\n';
                out << "origin multiplicity: " << *res.origin_mult << '\n';
                out << std::setw(4) << "E" << std::setw(5) << "N" << std::setw(5) << "nu" << std::setw(5) << "m"
                    << std::setw(8) << "strict" << "  class_open\n";
                for (const auto& d : res.divisors) {
                    out << std::setw(4) << d.id << std::setw(5) << d.N << std::setw(5) << d.nu << std::setw(5) << d.m
                        << std::setw(8) << d.strict_meets.value_or(0) << "  " << to_string(class_open(res, d.id))
                        << '\n';
                }
                out << "edges:";
                for (const auto& [a, b] : dual_graph_edges(res)) out << ' ' << a << '-' << b;
                out << '\n';
                out << "smooth branch: " << detail::yes_no(has_smooth_branch(res)) << '\n';
            }
        } else if (chosen == zeta_cmd) {
            const ResolutionData res = source.load(doc);
            const std::string z = to_string(denef_zeta(res).normalized());
            if (json) {
                doc["zeta"] = z;
            } else {
                out << z << '\n';
            }
        } else if (chosen == hilb_cmd) {
            const ResolutionData res = source.load(doc);
            const HilbTable table = hilb_recursion(res, max_k);
            std::optional<SpecializationMode> mode;
            if (!specialize_text.empty()) mode = detail::parse_mode(specialize_text);
            Json rows = Json::array();
            for (int k = 2; k <= max_k; ++k) {
                Json row;
                row["k"] = k;
                row["class"] = to_string(table[k]);
                std::string extra;
                if (mode) {
                    const SpecializedValue v = specialize(table[k], *mode);
                    row["specialized"] = detail::specialized_json(v);
                    extra = "  [" + specialize_text + ": " + to_string(v) + "]";
                }
                if (!json) out << "H_" << k << " = " << to_string(table[k]) << extra << '\n';
                rows.push_back(std::move(row));
            }
            const auto limit = table.threshold();
            if (json) {
                doc["hilb"] = std::move(rows);
                doc["threshold"] = limit ? Json(*limit) : Json(nullptr);
                if (mode) doc["specialization"] = specialize_text;
            } else {
                out << "threshold = " << (limit ? std::to_string(*limit) : "none") << '\n';
            }
        } else if (chosen == q_cmd) {
            const ResolutionData res = source.load(doc);
            const ConstantTerm term = constant == "verbatim" ? ConstantTerm::verbatim : ConstantTerm::corrected;
            const FactoredRational q = q_series_closed(res, term);
            const SeriesT series = expand_series(q, order);
            Json coeffs = Json::array();
            if (!json) out << "Q = " << to_string(q) << '\n';
            for (int k = 0; k <= order; ++k) {
                if (series[k].is_zero()) continue;
                coeffs.push_back({{"k", k}, {"class", to_string(series[k])}});
                if (!json) out << "[T^" << k << "] " << to_string(series[k]) << '\n';
            }
            if (json) {
                doc["closed_form"] = to_string(q);
                doc["order"] = order;
                doc["coefficients"] = std::move(coeffs);
            }
        } else if (chosen == verify_cmd) {
            const std::vector<long> primes = detail::parse_primes(primes_text);
            const ResolutionData res = source.load(doc);
            const CurvePoly f = parse_curve(source.curve);
            const HilbTable table = hilb_recursion(res, verify_k);
            const auto reports = verify(f, table, primes, verify_k, jobs, jet_budget_from_env());
            const VerifyVerdict verdict = assess(reports);
            Json rows = Json::array();
            if (!json) {
                out << std::setw(6) << "prime" << std::setw(4) << "k" << std::setw(14) << "raw_count"
                    << std::setw(14) << "predicted" << std::setw(7) << "match" << '\n';
            }
            for (const auto& r : reports) {
                rows.push_back({{"prime", r.prime},
                                {"k", r.k},
                                {"raw_count", detail::integer_json(r.raw_count)},
                                {"predicted", detail::integer_json(r.predicted)},
                                {"match", r.match}});
                if (!json) {
                    out << std::setw(6) << r.prime << std::setw(4) << r.k << std::setw(14) << r.raw_count.get_str()
                        << std::setw(14) << r.predicted.get_str() << std::setw(7) << detail::yes_no(r.match) << '\n';
                }
            }
            const char* verdict_name = verdict == VerifyVerdict::all_match          ? "all_match"
                                       : verdict == VerifyVerdict::partial_mismatch ? "partial_mismatch"
                                                                                    : "total_mismatch";
            if (verdict == VerifyVerdict::partial_mismatch) {
                err << "warning: mismatch at some primes only; suspect bad reduction there\n";
            }
            if (verdict != VerifyVerdict::all_match) status = mismatch;
            if (json) {
                doc["reports"] = std::move(rows);
                doc["verdict"] = verdict_name;
            } else {
                out << "verdict: " << verdict_name << '\n';
            }
        }
        if (json) {
            doc["ok"] = status == ok;
            out << doc.dump(2) << '\n';
        }
        return status;
    } catch (const Error& e) {
        return fail(std::string(code_name(e.code())), e.what(), e.offset(),
                    is_input_error(e.code()) ? usage_error : computation_error);
    } catch (const std::exception& e) {
        return fail("InternalError", e.what(), std::nullopt, computation_error);
    }
}

} // namespace curvilinear::cli
