// Acceptance run: one [PASS]/[FAIL] line per criterion. Exit status is the
// number of failed criteria. Argument 1 is the path of the softdito CLI,
// used for the determinism criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "softdito/softdito.hpp"

using namespace softdito;
using namespace softdito::oracle;

namespace {

// Time limits, in seconds, for criteria 1-7.
constexpr double kFixtureLimit = 1.0;
constexpr double kSuiteLimit = 300.0;
constexpr double kAlgebraLimit = 10.0;
constexpr double kOperatorLimit = 60.0;

// Instance cap for criterion 6, large enough that no algebra or map
// claim is truncated at (2,2).
constexpr std::uint64_t kAlgebraInstanceBudget = 10'000'000;

std::string samples(const std::string& name) { return std::string(SOFTDITO_SAMPLES_DIR) + "/" + name; }

dsl::SpecDocument load(const std::string& name) {
    auto r = dsl::parse_file(samples(name));
    if (!r.ok()) {
        throw std::runtime_error(name + ": " + r.errors.front().to_string());
    }
    return std::move(r.document);
}

template<typename T_>
const T_& named(const std::vector<dsl::Decl<T_>>& v, std::string_view name) {
    for (const auto& d : v) {
        if (d.name == name) {
            return d.value;
        }
    }
    throw std::runtime_error("missing declaration " + std::string(name));
}

std::string pair_text(const Context& ctx, const AxiomWitness& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.points.size(); ++i) {
        s += (i ? ", " : "") + ctx.points()[w.points[i]];
    }
    return s + ") at " + dsl::format_params(ctx, w.domain);
}

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs >= limit) {
        o.ok = false;
        o.detail += "; over the " + std::to_string(static_cast<int>(limit)) + " s limit";
    }
    failures += o.ok ? 0 : 1;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << n << " " << title << " (" << t.str() << " s): " << o.detail << std::endl;
}

Outcome fixture_p1() {
    const auto doc = load("p1.sdt");
    const auto& tau = named(doc.topologies, "tau");
    const auto& ctx = *tau.context();
    const auto scope = PointScope::at(named(doc.domains, "A").value);
    const bool valid = check_topology(tau.context(), tau.listed()).ok();
    const bool t0 = check_tau_axiom(tau, Axiom::T0, scope).holds;
    const auto t1 = check_tau_axiom(tau, Axiom::T1, scope);
    const auto want = ctx.param_set({"e1", "e2"});
    const bool witness_ok = !t1.holds && t1.witness && t1.witness->domain == want && t1.witness->points.size() == 2
                         && ctx.points()[t1.witness->points[0]] == "x" && ctx.points()[t1.witness->points[1]] == "z";
    return {valid && t0 && witness_ok, std::string("check ") + (valid ? "ok" : "violation") + ", T0 " + (t0 ? "true" : "false")
                                           + ", T1 " + (t1.holds ? "true" : "false")
                                           + (t1.witness ? " with witness " + pair_text(ctx, *t1.witness) : "")};
}

Outcome fixture_p2() {
    const auto doc = load("p2.sdt");
    const auto& tau = named(doc.topologies, "tau");
    const auto& ctx = *tau.context();
    const auto scope = PointScope::at(named(doc.domains, "A").value);
    const auto report = check_topology(tau.context(), tau.listed());
    const bool t1 = check_tau_axiom(tau, Axiom::T1, scope).holds;
    const auto t2 = check_tau_axiom(tau, Axiom::T2, scope);
    std::string detail = "check ";
    if (report.ok()) {
        detail += "ok";
    } else {
        const auto& v = report.violations.front();
        detail += "violation (" + std::to_string(report.violations.size()) + " missing results, first " + to_string(v.op)
                + " of " + to_string(v.left) + " and " + to_string(v.right) + ")";
    }
    detail += std::string(", T1 ") + (t1 ? "true" : "false") + ", T2 " + (t2.holds ? "true" : "false");
    if (t2.witness) {
        detail += " with witness " + pair_text(ctx, *t2.witness);
    }
    const bool ok = report.ok() && t1 && !t2.holds && t2.witness && t2.witness->domain == ctx.param_set({"e1", "e2"});
    return {ok, detail};
}

Outcome fixture_p3() {
    const auto doc = load("p3.sdt");
    const auto& tau = named(doc.topologies, "tau");
    const bool valid = check_topology(tau.context(), tau.listed()).ok();
    const bool regular = check_tau_axiom(tau, Axiom::regular).holds;
    const auto t1 = check_tau_axiom(tau, Axiom::T1);
    return {valid && regular && !t1.holds,
            std::string("check ") + (valid ? "ok" : "violation") + ", regular " + (regular ? "true" : "false") + ", T1 "
                + (t1.holds ? "true" : "false") + (t1.witness ? " with witness " + pair_text(*tau.context(), *t1.witness) : "")};
}

Outcome fixture_p4() {
    const auto doc = load("p4.sdt");
    const auto& f = named(doc.maps, "f");
    const auto& k1 = named(doc.cotopologies, "kappa1");
    const auto& k2 = named(doc.cotopologies, "kappa2");
    const bool cont = is_kappa_continuous(f, k1, k2);
    const auto t1 = check_kappa_axiom(k1, Axiom::T1);
    return {cont && !t1.holds && t1.witness.has_value(),
            std::string("kappa-continuous ") + (cont ? "true" : "false") + ", source kappa-T1 "
                + (t1.holds ? "true" : "false")
                + (t1.witness ? " with witness " + pair_text(*k1.context(), *t1.witness) + " on the " + t1.witness->side + " side"
                              : "")};
}

bool accounted(const TheoremReport& r) {
    if (r.status == ReportStatus::verified) {
        return r.failures == 0;
    }
    return r.witness.has_value() && r.replayed;
}

Outcome theorem_suite() {
    const auto b = parse_bounds("2,1");
    const auto reports = run_theorem_suite(b);
    std::size_t verified = 0;
    std::size_t found = 0;
    std::vector<std::string> logged;
    std::vector<std::string> bad;
    for (const auto& r : reports) {
        if (!accounted(r)) {
            bad.push_back(r.id);
        }
        if (r.status == ReportStatus::verified) {
            ++verified;
        } else if (r.status == ReportStatus::counterexample) {
            ++found;
        } else {
            logged.push_back(r.id);
        }
    }
    std::vector<std::string> missing;
    for (const auto* id : {"tau-T0-not-T1", "kappa-T0-not-T1", "tau-T1-not-T2", "kappa-T1-not-T2", "tau-regular-not-T1",
                           "de-morgan-strictness"}) {
        const auto it = std::find_if(reports.begin(), reports.end(), [&](const TheoremReport& r) { return r.id == id; });
        if (it == reports.end() || it->status != ReportStatus::counterexample || !it->replayed) {
            missing.push_back(id);
        }
    }
    std::string detail = std::to_string(reports.size()) + " claims: " + std::to_string(verified) + " verified, "
                       + std::to_string(found) + " witnesses found, " + std::to_string(logged.size()) + " logged (";
    for (std::size_t i = 0; i < logged.size(); ++i) {
        detail += (i ? ", " : "") + logged[i];
    }
    detail += ")";
    for (const auto& id : bad) {
        detail += "; unaccounted " + id;
    }
    for (const auto& id : missing) {
        detail += "; no witness for " + id;
    }
    return {bad.empty() && missing.empty(), detail};
}

Outcome algebra_suite() {
    auto b = parse_bounds("2,2");
    b.instance_budget = kAlgebraInstanceBudget;
    auto ids = theorem_ids("algebra");
    for (auto& id : theorem_ids("maps")) {
        ids.push_back(id);
    }
    const auto reports = run_theorems(ids, b);
    bool ok = true;
    bool union_logged = false;
    std::size_t verified = 0;
    std::string logged;
    for (const auto& r : reports) {
        ok = ok && accounted(r) && r.exhaustive;
        if (r.status == ReportStatus::verified) {
            ++verified;
        } else if (r.status == ReportStatus::discrepancy_logged) {
            logged += (logged.empty() ? "" : ", ") + r.id;
        }
        union_logged = union_logged || (r.id == "whole-union-absorbs" && r.status == ReportStatus::discrepancy_logged && r.replayed);
    }
    return {ok && union_logged, std::to_string(reports.size()) + " claims, " + std::to_string(verified)
                                    + " verified exhaustively, logged: " + logged};
}

Outcome operator_laws() {
    const std::vector<std::string> ids{"interior-laws", "interior-monotone-meet-join", "closure-laws",
                                       "closure-monotone-join-meet", "closure-as-adherence"};
    const auto reports = run_theorems(ids, parse_bounds("2,1"));
    bool ok = true;
    std::string detail;
    for (const auto& r : reports) {
        ok = ok && r.status == ReportStatus::verified && r.exhaustive;
        detail += (detail.empty() ? "" : "; ") + r.id + " " + to_string(r.status) + " on " + std::to_string(r.instances);
    }
    return {ok, detail};
}

std::string capture(const std::string& command) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        throw std::runtime_error("cannot run " + command);
    }
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    pclose(pipe);
    return out;
}

Outcome determinism(const std::string& cli) {
    if (cli.empty()) {
        return {false, "no CLI path given"};
    }
    const std::vector<std::string> commands{
        "check --spec " + samples("p2.sdt"),
        "axioms --spec " + samples("p1.sdt") + " --space tau --domain A",
        "interior --spec " + samples("p1.sdt") + " --space tau --set F",
        "continuity --spec " + samples("p4.sdt") + " --map f --space kappa1 --space kappa2 --property kappa_continuous",
        "enumerate --bounds 2,1",
        "counterexample --property kappa-T0-not-T1 --bounds 2,1",
        "verify-theorems --group algebra --bounds 2,1",
    };
    for (const auto& c : commands) {
        const auto line = "\"" + cli + "\" " + c + " --json - 2>/dev/null";
        const auto a = capture(line);
        const auto b = capture(line);
        if (a.empty() || a != b) {
            return {false, "'" + c + "' " + (a.empty() ? "wrote no JSON" : "differs between runs")};
        }
    }
    return {true, std::to_string(commands.size()) + " commands produced identical JSON on two runs"};
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion(1, "fixture P1: T0 but not T1", kFixtureLimit, fixture_p1);
    criterion(2, "fixture P2: T1 but not T2", kFixtureLimit, fixture_p2);
    criterion(3, "fixture P3: regular but not T1", kFixtureLimit, fixture_p3);
    criterion(4, "fixture P4: kappa-continuous map, source not kappa-T1", kFixtureLimit, fixture_p4);
    criterion(5, "theorem suite at |U|=2, |E|=1", kSuiteLimit, theorem_suite);
    criterion(6, "algebra and map laws at |U|=2, |E|=2", kAlgebraLimit, algebra_suite);
    criterion(7, "closure and interior laws at |U|=2, |E|=1", kOperatorLimit, operator_laws);
    criterion(8, "deterministic JSON reports", 0, [&] { return determinism(cli); });
    std::cout << (8 - failures) << " of 8 criteria passed" << std::endl;
    return failures;
}
