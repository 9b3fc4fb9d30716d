// softdito: command-line front end for the soft ditopology library.
//
// Every command builds one JSON record {command, inputs, verdict, witness,
// timing}. The record goes to --json PATH ("-" for standard output); a short
// human summary is printed otherwise. `timing` holds work counters rather
// than wall-clock readings so that repeated runs are byte-identical; pass
// --wall-clock to add elapsed milliseconds.
//
// Exit status: 0 when every check passes, 1 when a check reports false or a
// violation, 2 on parse or usage errors.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "softdito/softdito.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace softdito;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

/// Raised for user mistakes that are not parse errors: unknown names,
/// missing options, kind mismatches.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string spec;
    std::vector<std::string> spaces;
    std::string set;
    std::string map;
    std::string bounds = "2,2,6";
    std::uint64_t instance_budget = oracle::EnumBounds{}.instance_budget;
    std::string json;
    std::string domain;
    std::vector<std::string> axioms;
    std::vector<std::string> properties;
    std::string group;
    bool wall_clock = false;
};

struct Outcome {
    Json verdict;
    Json witness;
    Json timing = Json::object();
    std::string text;
    int code = kOk;
};

// ---------------------------------------------------------------------------
// Formatting helpers

std::string fmt_set(const SoftSet& f) {
    return "over " + dsl::format_params(*f.context(), f.domain()) + " " + dsl::format_soft_set(f);
}

std::string fmt_point(const SoftPoint& p) {
    return p.ctx->points()[p.point] + " over " + dsl::format_params(*p.ctx, p.domain);
}

Json axiom_witness_json(const Context& ctx, const AxiomWitness& w) {
    Json j;
    j["failed"] = to_string(w.failed);
    j["side"] = w.side;
    j["domain"] = dsl::format_params(ctx, w.domain);
    Json pts = Json::array();
    for (auto x : w.points) {
        pts.push_back(ctx.points()[x]);
    }
    j["points"] = pts;
    Json sets = Json::array();
    for (const auto& s : w.sets) {
        sets.push_back(fmt_set(s));
    }
    j["sets"] = sets;
    return j;
}

// ---------------------------------------------------------------------------
// Document access

class Spec {
public:
    explicit Spec(const std::string& path) {
        if (path.empty()) {
            throw UsageError("--spec FILE is required for this command");
        }
        auto r = dsl::parse_file(path);
        if (!r.ok()) {
            errors_ = std::move(r.errors);
        }
        doc_ = std::move(r.document);
    }

    bool ok() const { return errors_.empty(); }
    const std::vector<dsl::Diagnostic>& errors() const { return errors_; }
    const dsl::SpecDocument& doc() const { return doc_; }

    const SoftSet& set(const std::string& name) const {
        if (name.empty()) {
            throw UsageError("--set NAME is required for this command");
        }
        if (const auto* s = doc_.set(name)) {
            return *s;
        }
        throw UsageError(unknown("soft set", name));
    }

    const SoftMap& map(const std::string& name) const {
        if (name.empty()) {
            throw UsageError("--map NAME is required for this command");
        }
        if (const auto* f = doc_.map(name)) {
            return *f;
        }
        throw UsageError(unknown("map", name));
    }

    /// "topology", "cotopology" or "ditopology" for a declared space.
    std::string space_kind(const std::string& name) const {
        const auto k = doc_.kind_of(name);
        if (k == "topology" || k == "cotopology" || k == "ditopology") {
            return k;
        }
        throw UsageError(k.empty() ? unknown("space", name) : "'" + name + "' is a " + k + ", not a space");
    }

    ContextPtr space_context(const std::string& name) const {
        const auto k = space_kind(name);
        if (k == "topology") return doc_.topology(name)->context();
        if (k == "cotopology") return doc_.cotopology(name)->context();
        return doc_.ditopology(name)->value.context();
    }

    /// The axiom scope: a declared domain name or a literal like "e1,e2" or
    /// "{e1, e2}"; empty means every non-empty domain.
    PointScope scope(const std::string& text, const ContextPtr& ctx) const {
        if (text.empty()) {
            return PointScope::all();
        }
        if (const auto* d = doc_.domain(text)) {
            if (!same_context(d->context, ctx)) {
                throw UsageError("domain '" + text + "' belongs to another context");
            }
            return PointScope::at(d->value);
        }
        std::string body = text;
        std::erase_if(body, [](char c) { return c == '{' || c == '}' || c == ' '; });
        std::vector<std::string> labels;
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto comma = body.find(',', start);
            const auto piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!piece.empty()) {
                labels.push_back(piece);
            }
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        try {
            const auto a = ctx->param_set(labels);
            if (a.empty()) {
                throw UsageError("--domain must name at least one parameter");
            }
            return PointScope::at(a);
        } catch (const DomainError& e) {
            throw UsageError("--domain '" + text + "': " + e.what());
        }
    }

private:
    std::string unknown(const char* what, const std::string& name) const {
        return std::string("unknown ") + what + " '" + name + "'";
    }

    dsl::SpecDocument doc_;
    std::vector<dsl::Diagnostic> errors_;
};

// ---------------------------------------------------------------------------
// Commands

template<typename Kind_>
Json family_check(const std::string& name, const char* kind, const SoftFamily<Kind_>& fam, Json& witness, bool& all_ok) {
    const auto report = fam.check();
    Json j;
    j["name"] = name;
    j["kind"] = kind;
    j["ok"] = report.ok();
    j["violations"] = report.violations.size();
    if (!report.ok()) {
        all_ok = false;
        if (witness.is_null()) {
            const auto& v = report.violations.front();
            witness = Json{{"structure", name},
                           {"operation", to_string(v.op)},
                           {"left", fmt_set(v.left)},
                           {"right", fmt_set(v.right)},
                           {"result", fmt_set(v.result)}};
        }
    }
    return j;
}

Outcome run_check(const Spec& spec) {
    const auto& doc = spec.doc();
    Outcome out;
    bool all_ok = true;
    Json structures = Json::array();
    std::size_t members = 0;
    for (const auto& t : doc.topologies) {
        structures.push_back(family_check(t.name, "topology", t.value, out.witness, all_ok));
        members += t.value.listed().size();
    }
    for (const auto& k : doc.cotopologies) {
        structures.push_back(family_check(k.name, "cotopology", k.value, out.witness, all_ok));
        members += k.value.listed().size();
    }
    out.verdict["ok"] = all_ok;
    out.verdict["declarations"] = {{"contexts", doc.contexts.size()},       {"sets", doc.sets.size()},
                                   {"points", doc.points.size()},           {"domains", doc.domains.size()},
                                   {"topologies", doc.topologies.size()},   {"cotopologies", doc.cotopologies.size()},
                                   {"ditopologies", doc.ditopologies.size()}, {"maps", doc.maps.size()}};
    out.verdict["structures"] = structures;
    out.timing["listed_members_checked"] = members;
    out.text = all_ok ? "ok: every declared structure is closed under union and intersection\n"
                      : "violation: " + out.witness["structure"].get<std::string>() + " misses the "
                            + out.witness["operation"].get<std::string>() + " " + out.witness["result"].get<std::string>()
                            + "\n";
    out.code = all_ok ? kOk : kViolation;
    return out;
}

std::string single_space(const Options& o) {
    if (o.spaces.size() != 1) {
        throw UsageError("exactly one --space NAME is required for this command");
    }
    return o.spaces.front();
}

Outcome run_interior(const Spec& spec, const Options& o) {
    const auto name = single_space(o);
    const auto kind = spec.space_kind(name);
    const SoftTopology* tau = nullptr;
    if (kind == "topology") {
        tau = spec.doc().topology(name);
    } else if (kind == "ditopology") {
        tau = &spec.doc().ditopology(name)->value.tau;
    } else {
        throw UsageError("interior needs a topology or ditopology, '" + name + "' is a " + kind);
    }
    const auto& f = spec.set(o.set);
    const auto in = interior(*tau, f);
    Outcome out;
    out.verdict = {{"interior", fmt_set(in)}, {"open", tau->contains(f)}};
    Json inside = Json::array();
    std::size_t scanned = 0;
    for (const auto& g : tau->all_members()) {
        ++scanned;
        if (is_subset(g, f) && !g.is_null()) {
            inside.push_back(fmt_set(g));
        }
    }
    out.witness = {{"set", fmt_set(f)}, {"open_subsets", inside}};
    out.timing["members_scanned"] = scanned;
    out.text = "int " + o.set + " = " + fmt_set(in) + "\n";
    return out;
}

Outcome run_closure(const Spec& spec, const Options& o) {
    const auto name = single_space(o);
    const auto kind = spec.space_kind(name);
    const SoftCotopology* kappa = nullptr;
    if (kind == "cotopology") {
        kappa = spec.doc().cotopology(name);
    } else if (kind == "ditopology") {
        kappa = &spec.doc().ditopology(name)->value.kappa;
    } else {
        throw UsageError("closure needs a cotopology or ditopology, '" + name + "' is a " + kind);
    }
    const auto& f = spec.set(o.set);
    const auto cl = closure(*kappa, f);
    Outcome out;
    out.verdict = {{"closure", fmt_set(cl)}, {"closed", kappa->contains(f)}};
    Json supersets = Json::array();
    const auto minimal = kappa->minimal_members_containing(f);
    for (const auto& k : minimal) {
        supersets.push_back(fmt_set(k));
    }
    Json adherent = Json::array();
    for (const auto& p : adherence_points(*kappa, f)) {
        adherent.push_back(fmt_point(p));
    }
    out.witness = {{"set", fmt_set(f)}, {"minimal_closed_supersets", supersets}, {"adherence_points", adherent}};
    out.timing["minimal_supersets"] = minimal.size();
    out.text = "cl " + o.set + " = " + fmt_set(cl) + "\n";
    return out;
}

Outcome run_axioms(const Spec& spec, const Options& o) {
    const auto name = single_space(o);
    const auto kind = spec.space_kind(name);
    const auto ctx = spec.space_context(name);
    const auto scope = spec.scope(o.domain, ctx);
    std::vector<Axiom> axioms;
    try {
        for (const auto& a : o.axioms) {
            axioms.push_back(parse_axiom(a));
        }
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    if (axioms.empty()) {
        axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
    }
    Outcome out;
    out.verdict = Json::object();
    out.witness = Json::object();
    bool all = true;
    for (auto a : axioms) {
        AxiomResult r;
        if (kind == "topology") {
            r = check_tau_axiom(*spec.doc().topology(name), a, scope);
        } else if (kind == "cotopology") {
            r = check_kappa_axiom(*spec.doc().cotopology(name), a, scope);
        } else {
            r = check_dito_axiom(spec.doc().ditopology(name)->value, a, scope);
        }
        out.verdict[to_string(a)] = r.holds;
        out.text += std::string(to_string(a)) + ": " + (r.holds ? "true" : "false");
        if (r.witness) {
            out.witness[to_string(a)] = axiom_witness_json(*ctx, *r.witness);
            const auto& w = out.witness[to_string(a)];
            out.text += "  (" + w["failed"].get<std::string>() + " fails at " + w["domain"].get<std::string>();
            if (!w["points"].empty()) {
                out.text += " for " + w["points"].dump();
            }
            out.text += ")";
        }
        out.text += "\n";
        all = all && r.holds;
    }
    out.timing["axioms_checked"] = axioms.size();
    out.timing["domains_per_axiom"] = scope.domains(*ctx).size();
    out.code = all ? kOk : kViolation;
    return out;
}

/// First target member whose preimage is missing from the source family.
template<typename Kind_>
Json preimage_witness(const SoftMap& f, const SoftFamily<Kind_>& src, const SoftFamily<Kind_>& tgt) {
    for (const auto& g : tgt.listed()) {
        const auto pre = preimage(f, g);
        if (!src.contains(pre)) {
            return Json{{"member", fmt_set(g)}, {"preimage", fmt_set(pre)}};
        }
    }
    return nullptr;
}

template<typename Kind_>
Json image_witness(const SoftMap& f, const SoftFamily<Kind_>& src, const SoftFamily<Kind_>& tgt) {
    for (const auto& g : src.generators()) {
        const auto im = image(f, g);
        if (!tgt.contains(im)) {
            return Json{{"member", fmt_set(g)}, {"image", fmt_set(im)}};
        }
    }
    return nullptr;
}

Outcome run_continuity(const Spec& spec, const Options& o) {
    if (o.spaces.size() != 2) {
        throw UsageError("continuity needs --space SOURCE --space TARGET");
    }
    const auto& f = spec.map(o.map);
    const auto kind = spec.space_kind(o.spaces[0]);
    if (spec.space_kind(o.spaces[1]) != kind) {
        throw UsageError("continuity needs two spaces of the same kind");
    }
    if (!same_context(f.source(), spec.space_context(o.spaces[0]))
        || !same_context(f.target(), spec.space_context(o.spaces[1]))) {
        throw UsageError("map '" + o.map + "' does not run from '" + o.spaces[0] + "' to '" + o.spaces[1] + "'");
    }
    std::vector<std::string> props = o.properties;
    if (props.empty()) {
        props = {kind == "topology" ? "tau_continuous" : kind == "cotopology" ? "kappa_continuous" : "continuous"};
    }
    const auto& doc = spec.doc();
    const auto tau_of = [&](const std::string& n) -> const SoftTopology* {
        if (kind == "topology") return doc.topology(n);
        if (kind == "ditopology") return &doc.ditopology(n)->value.tau;
        return nullptr;
    };
    const auto kappa_of = [&](const std::string& n) -> const SoftCotopology* {
        if (kind == "cotopology") return doc.cotopology(n);
        if (kind == "ditopology") return &doc.ditopology(n)->value.kappa;
        return nullptr;
    };
    const auto* t1 = tau_of(o.spaces[0]);
    const auto* t2 = tau_of(o.spaces[1]);
    const auto* k1 = kappa_of(o.spaces[0]);
    const auto* k2 = kappa_of(o.spaces[1]);
    const auto need = [&](bool have, const std::string& p) {
        if (!have) {
            throw UsageError("property '" + p + "' does not apply to " + kind + " spaces");
        }
    };
    Outcome out;
    out.verdict = Json::object();
    out.witness = Json::object();
    bool all = true;
    for (const auto& p : props) {
        bool holds = false;
        Json w = nullptr;
        if (p == "tau_continuous") {
            need(t1 != nullptr, p);
            holds = is_tau_continuous(f, *t1, *t2);
            w = preimage_witness(f, *t1, *t2);
        } else if (p == "kappa_continuous") {
            need(k1 != nullptr, p);
            holds = is_kappa_continuous(f, *k1, *k2);
            w = preimage_witness(f, *k1, *k2);
        } else if (p == "continuous") {
            need(kind == "ditopology", p);
            holds = is_dito_continuous(f, doc.ditopology(o.spaces[0])->value, doc.ditopology(o.spaces[1])->value);
            w = preimage_witness(f, *t1, *t2);
            if (w.is_null()) {
                w = preimage_witness(f, *k1, *k2);
            }
        } else if (p == "open_map") {
            need(t1 != nullptr, p);
            holds = is_open_map(f, *t1, *t2);
            w = image_witness(f, *t1, *t2);
        } else if (p == "closed_map") {
            need(k1 != nullptr, p);
            holds = is_closed_map(f, *k1, *k2);
            w = image_witness(f, *k1, *k2);
        } else {
            throw UsageError("unknown continuity property '" + p
                             + "' (tau_continuous, kappa_continuous, continuous, open_map, closed_map)");
        }
        out.verdict[p] = holds;
        if (!holds) {
            out.witness[p] = w;
        }
        out.text += p + ": " + (holds ? "true" : "false") + "\n";
        all = all && holds;
    }
    out.timing["properties_checked"] = props.size();
    out.code = all ? kOk : kViolation;
    return out;
}

oracle::EnumBounds bounds_of(const Options& o) {
    try {
        auto b = oracle::parse_bounds(o.bounds);
        b.instance_budget = o.instance_budget;
        return b;
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
}

Outcome run_enumerate(const Options& o) {
    const auto b = bounds_of(o);
    oracle::Catalog cat(b);
    Outcome out;
    Json contexts = Json::array();
    std::uint64_t families = 0;
    for (std::size_t c = 0; c < cat.size(); ++c) {
        const auto& ctx = cat.contexts()[c];
        const auto n = cat.topologies(c).size();
        families += n;
        contexts.push_back({{"universe", ctx->num_points()},
                            {"params", ctx->num_params()},
                            {"soft_sets", oracle::soft_set_count(*ctx)},
                            {"soft_points", cat.points(c).size()},
                            {"families", n},
                            {"self_maps", cat.maps(c, c).size()}});
    }
    out.verdict = {{"bounds", b.to_string()}, {"contexts", contexts}, {"families", families}};
    out.witness = nullptr;
    out.timing["families_enumerated"] = families;
    std::ostringstream text;
    for (const auto& c : contexts) {
        text << "|U|=" << c["universe"] << " |E|=" << c["params"] << ": " << c["soft_sets"] << " soft sets, "
             << c["families"] << " families\n";
    }
    out.text = text.str();
    return out;
}

Json report_json(const oracle::TheoremReport& r) {
    Json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["kind"] = oracle::to_string(r.kind);
    j["status"] = oracle::to_string(r.status);
    j["instances"] = r.instances;
    j["skipped"] = r.skipped;
    j["failures"] = r.failures;
    j["exhaustive"] = r.exhaustive;
    j["bounds"] = r.bounds;
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    j["replayed"] = r.replayed;
    j["note"] = r.note;
    return j;
}

Outcome run_verify(const Options& o) {
    const auto b = bounds_of(o);
    std::vector<std::string> ids = o.properties;
    try {
        if (!o.group.empty()) {
            const auto more = oracle::theorem_ids(o.group);
            ids.insert(ids.end(), more.begin(), more.end());
        }
        for (const auto& id : ids) {
            oracle::find_theorem(id);
        }
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    const auto reports = oracle::run_theorems(ids, b);
    Outcome out;
    std::size_t verified = 0;
    std::size_t found = 0;
    std::size_t logged = 0;
    std::uint64_t instances = 0;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
        instances += r.instances + r.skipped;
        switch (r.status) {
        case oracle::ReportStatus::verified: ++verified; break;
        case oracle::ReportStatus::counterexample: ++found; break;
        case oracle::ReportStatus::discrepancy_logged: ++logged; break;
        }
        list.push_back(report_json(r));
        text << std::left << std::setw(20) << oracle::to_string(r.status) << r.id << "  (" << r.note << ")\n";
    }
    out.verdict = {{"bounds", b.to_string()},
                   {"verified", verified},
                   {"counterexample", found},
                   {"discrepancy_logged", logged},
                   {"reports", list}};
    out.witness = nullptr;
    out.timing["instances_examined"] = instances;
    text << verified << " verified, " << found << " counterexamples, " << logged << " discrepancies logged\n";
    out.text = text.str();
    out.code = logged == 0 ? kOk : kViolation;
    return out;
}

Outcome run_counterexample(const Options& o) {
    const auto b = bounds_of(o);
    if (o.properties.size() != 1) {
        std::string known;
        for (const auto& id : oracle::counterexample_ids()) {
            known += (known.empty() ? "" : ", ") + id;
        }
        throw UsageError("counterexample needs exactly one --property ID, one of: " + known);
    }
    oracle::TheoremReport r;
    try {
        r = oracle::find_counterexample(o.properties.front(), b);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    Outcome out;
    out.verdict = {{"property", r.id},     {"statement", r.statement}, {"found", r.witness.has_value()},
                   {"status", oracle::to_string(r.status)}, {"bounds", r.bounds},  {"replayed", r.replayed},
                   {"note", r.note}};
    out.witness = r.witness ? Json(*r.witness) : Json(nullptr);
    out.timing["instances_examined"] = r.instances + r.skipped;
    out.text = r.witness ? "# " + r.id + ": " + r.note + "\n" + *r.witness : "no witness: " + r.note + "\n";
    out.code = r.witness ? kOk : kViolation;
    return out;
}

Outcome run_replay(const Options& o) {
    if (o.properties.size() != 1) {
        throw UsageError("replay needs exactly one --property ID");
    }
    if (o.spec.empty()) {
        throw UsageError("replay needs --spec WITNESS_FILE");
    }
    std::ifstream in(o.spec, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + o.spec + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    bool reproduced = false;
    try {
        reproduced = oracle::replay(o.properties.front(), ss.str());
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    Outcome out;
    out.verdict = {{"property", o.properties.front()}, {"reproduced", reproduced}};
    out.witness = ss.str();
    out.timing["instances_examined"] = 1;
    out.text = std::string(reproduced ? "reproduced" : "not reproduced") + "\n";
    out.code = reproduced ? kOk : kViolation;
    return out;
}

// ---------------------------------------------------------------------------

Json inputs_json(const std::string& command, const Options& o) {
    Json j;
    if (!o.spec.empty()) j["spec"] = o.spec;
    if (!o.spaces.empty()) j["spaces"] = o.spaces;
    if (!o.set.empty()) j["set"] = o.set;
    if (!o.map.empty()) j["map"] = o.map;
    if (!o.domain.empty()) j["domain"] = o.domain;
    if (!o.axioms.empty()) j["axioms"] = o.axioms;
    if (!o.properties.empty()) j["properties"] = o.properties;
    if (!o.group.empty()) j["group"] = o.group;
    if (command == "enumerate" || command == "verify-theorems" || command == "counterexample") j["bounds"] = o.bounds;
    if (command == "verify-theorems" || command == "counterexample") j["instance_budget"] = o.instance_budget;
    return j.is_null() ? Json::object() : j;
}

void emit(const std::string& command, const Options& o, const Outcome& out, double elapsed_ms) {
    Json rec;
    rec["command"] = command;
    rec["inputs"] = inputs_json(command, o);
    rec["verdict"] = out.verdict;
    rec["witness"] = out.witness;
    rec["timing"] = out.timing;
    if (o.wall_clock) {
        rec["timing"]["elapsed_ms"] = elapsed_ms;
    }
    const auto text = rec.dump(2) + "\n";
    if (o.json == "-") {
        std::cout << text;
        return;
    }
    std::cout << out.text;
    if (!o.json.empty()) {
        std::ofstream f(o.json, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write '" + o.json + "'");
        }
        f << text;
    }
}

int dispatch(const std::string& command, const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    if (command == "enumerate") {
        out = run_enumerate(o);
    } else if (command == "verify-theorems") {
        out = run_verify(o);
    } else if (command == "counterexample") {
        out = run_counterexample(o);
    } else if (command == "replay") {
        out = run_replay(o);
    } else {
        const Spec spec(o.spec);
        if (!spec.ok()) {
            for (const auto& d : spec.errors()) {
                std::cerr << o.spec << ":" << d.to_string() << "\n";
            }
            if (!o.json.empty()) {
                Json errs = Json::array();
                for (const auto& d : spec.errors()) {
                    errs.push_back(d.to_string());
                }
                Outcome bad;
                bad.verdict = {{"error", "parse"}, {"diagnostics", errs}};
                bad.witness = nullptr;
                emit(command, o, bad, 0.0);
            }
            return kUsage;
        }
        if (command == "check") {
            out = run_check(spec);
        } else if (command == "interior") {
            out = run_interior(spec, o);
        } else if (command == "closure") {
            out = run_closure(spec, o);
        } else if (command == "axioms") {
            out = run_axioms(spec, o);
        } else {
            out = run_continuity(spec, o);
        }
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(command, o, out, ms);
    return out.code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite soft ditopological spaces: checks, operators, axioms and exhaustive theorem verification"};
    app.require_subcommand(1);
    Options o;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--spec", o.spec, "specification file");
        sub->add_option("--json", o.json, "write the JSON record to PATH ('-' for standard output)");
        sub->add_flag("--wall-clock", o.wall_clock, "add elapsed milliseconds to the timing block");
    };
    const auto bounds = [&](CLI::App* sub) {
        sub->add_option("--bounds", o.bounds, "enumeration bounds U,E[,M]")->capture_default_str();
    };
    const auto budget = [&](CLI::App* sub) {
        sub->add_option("--instance-budget", o.instance_budget, "instances examined per claim before a check stops")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* check = app.add_subcommand("check", "validate every declared structure");
    common(check);
    auto* interior_cmd = app.add_subcommand("interior", "interior of a soft set in a topology or ditopology");
    common(interior_cmd);
    auto* closure_cmd = app.add_subcommand("closure", "closure of a soft set in a cotopology or ditopology");
    common(closure_cmd);
    for (auto* sub : {interior_cmd, closure_cmd}) {
        sub->add_option("--space", o.spaces, "space name")->required();
        sub->add_option("--set", o.set, "soft set name")->required();
    }
    auto* axioms = app.add_subcommand("axioms", "separation axioms of a space");
    common(axioms);
    axioms->add_option("--space", o.spaces, "space name")->required();
    axioms->add_option("--domain", o.domain, "restrict to one domain A (declared name or e1,e2)");
    axioms->add_option("--axiom", o.axioms, "T0, T1, T2, regular, T3, normal, T4 (repeatable; default all)");
    auto* continuity = app.add_subcommand("continuity", "continuity of a map between two spaces");
    common(continuity);
    continuity->add_option("--map", o.map, "map name")->required();
    continuity->add_option("--space", o.spaces, "source then target space")->required();
    continuity->add_option("--property", o.properties,
                           "tau_continuous, kappa_continuous, continuous, open_map, closed_map (repeatable)");
    auto* enumerate = app.add_subcommand("enumerate", "census of the enumerated families");
    common(enumerate);
    bounds(enumerate);
    auto* verify = app.add_subcommand("verify-theorems", "exhaustive check of the theorem registry");
    common(verify);
    bounds(verify);
    budget(verify);
    verify->add_option("--property", o.properties, "theorem id (repeatable; default all)");
    verify->add_option("--group", o.group, "algebra, maps, topology, cotopology or ditopology");
    auto* counter = app.add_subcommand("counterexample", "smallest witness for an existence claim");
    common(counter);
    bounds(counter);
    budget(counter);
    counter->add_option("--property", o.properties, "counterexample id")->required();
    auto* replay = app.add_subcommand("replay", "re-run a theorem on a serialized witness (--spec)");
    common(replay);
    replay->add_option("--property", o.properties, "theorem id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, o);
    } catch (const UsageError& e) {
        std::cerr << "softdito " << command << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "softdito " << command << ": " << e.what() << "\n";
        return kUsage;
    }
}
