#include "patrol/cli.h"

#include "patrol/analysis.h"
#include "patrol/error.h"
#include "patrol/generators.h"
#include "patrol/io.h"
#include "patrol/schedules.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace patrol::cli {

namespace {

using Json = nlohmann::ordered_json;

void put(Json& j, const std::string& key, const Rational& q) {
    j[key] = to_string(q);
    j[key + "_decimal"] = to_double(q);
}

void put(Json& j, const std::string& key, const std::optional<Rational>& q) {
    if (q) {
        put(j, key, *q);
    } else {
        j[key] = nullptr;
        j[key + "_decimal"] = nullptr;
    }
}

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw Error(ErrorKind::BadArgument, "cannot open " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

Json indices(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto i : v) a.push_back(i);
    return a;
}

const char* class_name(const Classification& c, std::size_t i) {
    auto has = [i](const std::vector<std::size_t>& v) { return std::find(v.begin(), v.end(), i) != v.end(); };
    if (has(c.s00)) return "S00";
    if (has(c.s01)) return "S01";
    if (has(c.s10)) return "S10";
    return "S11";
}

std::optional<CriticalPoints> try_critical(const Instance& inst, std::string* why = nullptr) {
    try {
        return critical_points(inst);
    } catch (const Error& e) {
        if (why) *why = e.what();
        return std::nullopt;
    }
}

Json critical_json(const Instance& inst) {
    std::string why;
    auto cp = try_critical(inst, &why);
    Json j;
    if (!cp) {
        j["error"] = why;
        return j;
    }
    put(j, "x1", cp->x1);
    put(j, "x2", cp->x2);
    put(j, "x3", cp->x3);
    put(j, "x4", cp->x4);
    put(j, "alpha", cp->alpha);
    put(j, "d", cp->d);
    j["flipped"] = cp->flipped;
    return j;
}

Json digest(const Instance& inst) {
    auto c = classify(inst);
    Json j;
    j["n"] = inst.size();
    j["classes"] = {{"S00", indices(c.s00)}, {"S01", indices(c.s01)}, {"S10", indices(c.s10)}, {"S11", indices(c.s11)}};
    j["critical_points"] = critical_json(inst);
    return j;
}

Json trajectory_json(const Trajectory& tr) {
    Json j;
    j["cycle_start_index"] = tr.cycle_start();
    j["cycle_start_time"] = to_string(tr.cycle_start_time());
    j["period"] = to_string(tr.period());
    Json w = Json::array();
    for (const auto& p : tr.waypoints()) w.push_back({to_string(p.time), to_string(p.position)});
    j["waypoints"] = std::move(w);
    return j;
}

Json schedule_json(const SchedulePair& sp) {
    Json j;
    j["kind"] = to_string(sp.kind);
    j["steady_start"] = to_string(sp.steady_start());
    j["joint_period"] = to_string(sp.joint_period());
    j["r1"] = trajectory_json(sp.r1);
    j["r2"] = trajectory_json(sp.r2);
    return j;
}

Json check_json(const AdmissibilityReport& rep) {
    Json j;
    j["verdict"] = to_string(rep.verdict);
    Json conds = Json::array();
    for (const auto& c : rep.conditions) {
        Json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        if (c.certificate) {
            Json cert;
            cert["index"] = c.certificate->index;
            put(cert, "position", c.certificate->position);
            cert["detail"] = c.certificate->detail;
            e["certificate"] = std::move(cert);
        } else {
            e["certificate"] = nullptr;
        }
        conds.push_back(std::move(e));
    }
    j["conditions"] = std::move(conds);
    return j;
}

SchedulePair build(const std::string& algo, const Instance& inst, const Rational& horizon) {
    if (algo == "partition") return partition_schedule(inst);
    if (algo == "nested4") return nested4_schedule(inst);
    if (algo == "alg1") return alg1_schedule(inst);
    if (algo == "alg2") {
        Alg2Options opt;
        opt.sim.horizon = horizon;
        return alg2_schedule(inst, opt);
    }
    return best_schedule(inst).schedule;
}

/// Guarantee of the requested algorithm on this instance; absent when the
/// instance has no expansion (S00 empty or degenerate).
std::optional<Rational> bound_for(const std::string& algo, const SchedulePair& sp, const Instance& inst) {
    if (algo == "partition" || (algo == "best" && sp.kind == ScheduleKind::Partition)) return Rational(1);
    if (algo == "nested4") return Rational(4);
    auto cp = try_critical(inst);
    if (!cp) return std::nullopt;
    auto b = bounds(cp->alpha);
    if (algo == "alg1") return b.bound_alg1;
    if (algo == "alg2") return b.bound_alg2;
    return b.combined;
}

std::optional<Verdict> verdict_of(const Instance& inst) {
    try {
        return check_necessary(inst).verdict;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Json run_report(const std::string& algo, const Instance& inst, const SchedulePair& sp, const WaitingReport& rep,
                const WaitingReport* other) {
    Json j;
    j["algo"] = algo;
    j["kind"] = to_string(sp.kind);
    j["mode"] = to_string(rep.mode);
    j["instance"] = digest(inst);
    auto v = verdict_of(inst);
    j["admissibility"] = v ? Json(to_string(*v)) : Json(nullptr);
    Json rows = Json::array();
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& p = rep.points[i];
        Json r;
        r["index"] = i;
        put(r, "position", inst[i].position);
        put(r, "idleness", inst[i].idleness);
        put(r, "analytic", p.analytic);
        r["analytic_is_bound"] = p.analytic_is_bound;
        put(r, "simulated", p.simulated);
        if (other)
            put(r, other->mode == WaitingMode::SteadyState ? "simulated_steady" : "simulated_transient",
                other->points[i].simulated);
        put(r, "ratio", p.ratio);
        rows.push_back(std::move(r));
    }
    j["points"] = std::move(rows);
    put(j, "max_ratio", rep.max_ratio);
    auto bound = bound_for(algo, sp, inst);
    put(j, "bound", bound);
    if (bound && rep.max_ratio)
        j["within_bound"] = *rep.max_ratio <= *bound;
    else
        j["within_bound"] = nullptr;
    return j;
}

WaitingMode parse_mode(const std::string& s) {
    return s == "transient" ? WaitingMode::TransientInclusive : WaitingMode::SteadyState;
}

std::string family_for(const std::string& algo) { return algo == "alg1" ? "tight1" : "tight2"; }

Instance family_instance(const std::string& family, const Rational& alpha, const Rational& eps, std::uint64_t seed,
                         std::size_t n) {
    if (family == "tight1") return gen_tight_alg1(alpha);
    if (family == "tight2") return gen_tight_alg2(alpha, eps);
    if (family == "feasible") return gen_theorem1_feasible(seed, n);
    return gen_admissible_random(seed, n);
}

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::InfeasibleCertified:
        case ErrorKind::ConditionsFail:
        case ErrorKind::EmptyIntersection: return kInfeasible;
        default: return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-robot path patrolling: schedules, simulation and verification"};
    app.name("patrol");
    app.require_subcommand(1);

    const std::vector<std::string> algos{"partition", "nested4", "alg1", "alg2", "best"};
    std::string file, algo = "best", mode = "steady", horizon = "100";
    std::string family, alpha = "1", eps = "1/1000";
    std::uint64_t seed = 1;
    std::size_t n = 5;
    std::vector<std::string> alphas;

    auto* classify_cmd = app.add_subcommand("classify", "Classes, ranges and critical points");
    classify_cmd->add_option("file", file, "Instance file or - for stdin")->required();

    auto* check_cmd = app.add_subcommand("check", "Necessary feasibility conditions");
    check_cmd->add_option("file", file, "Instance file or - for stdin")->required();

    auto* schedule_cmd = app.add_subcommand("schedule", "Trajectories and waiting report");
    schedule_cmd->add_option("file", file, "Instance file or - for stdin")->required();
    schedule_cmd->add_option("--algo", algo)->check(CLI::IsMember(algos));
    schedule_cmd->add_option("--horizon", horizon, "Time limit for the alg2 controller");

    auto* simulate_cmd = app.add_subcommand("simulate", "Simulated waiting times");
    simulate_cmd->add_option("file", file, "Instance file or - for stdin")->required();
    simulate_cmd->add_option("--algo", algo)->check(CLI::IsMember(algos));
    simulate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"steady", "transient"}));
    simulate_cmd->add_option("--horizon", horizon, "Time limit for the alg2 controller");

    auto* ratio_cmd = app.add_subcommand("ratio", "Maximum ratio against the guarantee");
    ratio_cmd->add_option("file", file, "Instance file or - for stdin")->required();
    ratio_cmd->add_option("--algo", algo)->check(CLI::IsMember(algos));
    ratio_cmd->add_option("--mode", mode)->check(CLI::IsMember({"steady", "transient"}));

    auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance to stdout");
    gen_cmd->add_option("family", family)->required()->check(CLI::IsMember({"tight1", "tight2", "random", "feasible"}));
    gen_cmd->add_option("--alpha", alpha);
    gen_cmd->add_option("--eps", eps, "Only used by tight2 with alpha >= 1");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--n", n);

    auto* sweep_cmd = app.add_subcommand("sweep", "CSV of max ratio and guarantee over alpha");
    sweep_cmd->add_option("--algo", algo)->check(CLI::IsMember(algos));
    sweep_cmd->add_option("--alphas", alphas)->required()->delimiter(',');
    sweep_cmd->add_option("--family", family)->check(CLI::IsMember({"tight1", "tight2"}));
    sweep_cmd->add_option("--eps", eps);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) {
            Rational a = parse_rational(alpha);
            Instance inst = family_instance(family, a, parse_rational(eps), seed, n);
            out << "# " << family;
            if (family == "tight1" || family == "tight2") out << " alpha=" << to_string(a);
            if (family == "tight2" && a >= 1) out << " eps=" << to_string(parse_rational(eps));
            if (family == "random" || family == "feasible") out << " seed=" << seed << " n=" << n;
            out << "\n" << serialize_instance(inst);
            return kOk;
        }
        if (*sweep_cmd) {
            if (family.empty()) family = family_for(algo);
            Rational e = parse_rational(eps);
            out << "alpha,max_ratio,bound,max_ratio_exact,bound_exact\n";
            for (const auto& text : alphas) {
                Rational a = parse_rational(text);
                Instance inst = family_instance(family, a, e, seed, n);
                SchedulePair sp = build(algo, inst, 100);
                auto rep = full_report(sp, inst);
                auto bound = bound_for(algo, sp, inst);
                out << to_decimal(a) << "," << (rep.max_ratio ? to_decimal(*rep.max_ratio) : "") << ","
                    << (bound ? to_decimal(*bound) : "") << "," << (rep.max_ratio ? to_string(*rep.max_ratio) : "")
                    << "," << (bound ? to_string(*bound) : "") << "\n";
            }
            return kOk;
        }

        Instance inst = parse_instance(read_source(file, in));

        if (*classify_cmd) {
            auto c = classify(inst);
            Json j;
            Json pts = Json::array();
            for (std::size_t i = 0; i < inst.size(); ++i) {
                Json p;
                p["index"] = i;
                put(p, "position", inst[i].position);
                put(p, "idleness", inst[i].idleness);
                auto r = range(inst[i]);
                p["range"] = {to_string(r.lo), to_string(r.hi)};
                p["class"] = class_name(c, i);
                pts.push_back(std::move(p));
            }
            j["points"] = std::move(pts);
            auto d = digest(inst);
            j["classes"] = d["classes"];
            j["critical_points"] = d["critical_points"];
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*check_cmd) {
            auto rep = check_necessary(inst);
            out << check_json(rep).dump(2) << "\n";
            return rep.verdict == Verdict::InfeasibleCertified ? kInfeasible : kOk;
        }

        SchedulePair sp = build(algo, inst, parse_rational(horizon));
        WaitingMode m = parse_mode(mode);
        auto rep = full_report(sp, inst, m);

        if (*schedule_cmd) {
            Json j;
            j["schedule"] = schedule_json(sp);
            j["report"] = run_report(algo, inst, sp, rep, nullptr);
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*simulate_cmd) {
            WaitingMode other_mode = m == WaitingMode::SteadyState ? WaitingMode::TransientInclusive : WaitingMode::SteadyState;
            auto other = waiting_times(sp, inst, other_mode);
            out << run_report(algo, inst, sp, rep, &other).dump(2) << "\n";
            return kOk;
        }
        // ratio
        auto bound = bound_for(algo, sp, inst);
        Json j;
        j["algo"] = algo;
        j["kind"] = to_string(sp.kind);
        put(j, "max_ratio", rep.max_ratio);
        put(j, "bound", bound);
        bool within = rep.max_ratio && (!bound || *rep.max_ratio <= *bound);
        j["within_bound"] = within;
        out << j.dump(2) << "\n";
        return within ? kOk : kAboveBound;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e);
    }
}

}  // namespace patrol::cli
