#include "torus_git/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

#include "torus_git/polarization.hpp"
#include "torus_git/report.hpp"
#include "torus_git/stability.hpp"
#include "torus_git/wonderful.hpp"

namespace torus_git::cli {

namespace {

using report::Document;
using report::Json;
using report::Section;
using report::Status;
using rootsys::IntVector;
using rootsys::RootDatum;
using rootsys::Weight;
using weyl::WeylGroup;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string type;
    long long rank = -1;
    std::string chi_omega;
    std::string chi_alpha;
    std::string format = "json";
    std::string scope = "all";
    long long bound = -1;
    std::string word;
    std::string lambda;
    std::string state_omega;
};

std::int64_t parse_int(const std::string& token) {
    std::int64_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last) throw UsageError("malformed integer '" + token + "'");
    return v;
}

IntVector parse_int_list(const std::string& s, const std::string& what) {
    IntVector out;
    std::stringstream ss(s);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            out.push_back(parse_int(token));
        } catch (const UsageError& e) {
            throw UsageError(what + ": " + e.what());
        }
    }
    if (out.empty() || (!s.empty() && s.back() == ',')) throw UsageError(what + ": malformed list '" + s + "'");
    return out;
}

IntVector sized(IntVector v, std::size_t n, const std::string& what) {
    if (v.size() != n)
        throw UsageError(what + ": expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    return v;
}

RootDatum datum_from(const Options& o) {
    if (o.type.size() != 1) throw UsageError("--type must be a single letter A-G");
    if (o.rank < 1) throw UsageError("--rank must be a positive integer");
    return rootsys::build_root_datum(rootsys::parse_type(static_cast<char>(std::toupper(o.type[0]))),
                                     static_cast<std::size_t>(o.rank));
}

Weight chi_from(const RootDatum& d, const Options& o) {
    if (o.chi_omega.empty() == o.chi_alpha.empty()) throw UsageError("give exactly one of --chi-omega, --chi-alpha");
    if (!o.chi_omega.empty()) return Weight{sized(parse_int_list(o.chi_omega, "--chi-omega"), d.rank(), "--chi-omega")};
    return d.from_alpha(sized(parse_int_list(o.chi_alpha, "--chi-alpha"), d.rank(), "--chi-alpha"));
}

std::size_t element_from_word(const WeylGroup& g, const std::string& s) {
    const RootDatum& d = g.datum();
    weyl::WeylElement acc = weyl::identity_element(d);
    if (!s.empty() && s != "e")
        for (const auto i : parse_int_list(s, "--word")) {
            if (i < 1 || static_cast<std::size_t>(i) > d.rank())
                throw UsageError("--word: reflection index " + std::to_string(i) + " out of range");
            acc = weyl::compose(d, acc, weyl::simple_reflection(d, static_cast<std::size_t>(i - 1)));
        }
    return g.index_of(acc);
}

Json echo_base(const RootDatum& d) {
    return Json{{"type", std::string(1, rootsys::type_letter(d.type()))}, {"rank", d.rank()}};
}

bool dominant_in_root_lattice(const RootDatum& d, const Weight& chi) {
    return chi.is_dominant() && rootsys::in_root_lattice(d, chi);
}

std::string words_of(const stability::CellSweep& sweep, const std::vector<std::size_t>& cells) {
    std::ostringstream os;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        os << (k ? "; " : "") << "w=";
        const auto& w = sweep.cells[cells[k]].reduced_word;
        if (w.empty()) os << "e";
        for (std::size_t j = 0; j < w.size(); ++j) os << (j ? "," : "") << "s" << w[j] + 1;
    }
    return os.str();
}

Section checked(std::string name, bool pass, std::string description, std::string witness = {}) {
    Section s;
    s.name = std::move(name);
    s.status = pass ? Status::Pass : Status::Fail;
    s.description = std::move(description);
    if (!pass) s.witness = std::move(witness);
    return s;
}

Section info(std::string name, Json data, std::string description = {}) {
    Section s;
    s.name = std::move(name);
    s.status = Status::Info;
    s.description = std::move(description);
    s.data = std::move(data);
    return s;
}

/// Re-verifies every cell certificate against a freshly computed state.
std::pair<bool, std::string> recheck_cells(const WeylGroup& g, const stability::CellSweep& sweep) {
    const RootDatum& d = g.datum();
    for (const auto& c : sweep.cells) {
        const auto state = stability::schubert_cell_state(d, sweep.support, sweep.chi, g[c.weyl_index]);
        if (!stability::verify_verdict(d, state, c.generic_verdict))
            return {false, "certificate of cell " + report::word(c.reduced_word).dump() + " does not verify"};
    }
    return {true, {}};
}

void lemma1_sections(Document& doc, const WeylGroup& g, const Weight& chi, const std::string& prefix) {
    const auto cert = polarization::check_lemma1(g, chi);
    const bool flags[] = {cert.in_ns, cert.regular_dominant, cert.reflections_nonneg, cert.pairings_nonzero};
    const char* descriptions[] = {
        "χ is a nonnegative integer combination of simple roots",
        "<χ, α_i^∨> > 0 for every i",
        "s_i(χ) is a nonnegative combination of simple roots for every i",
        "<χ, w(λ_i)> ≠ 0 for every w and i",
    };
    for (int c = 0; c < 4; ++c) {
        const auto cond = static_cast<polarization::Condition>(c);
        std::string witness;
        Json data = Json::object();
        if (!flags[c]) {
            if (cert.failure && cert.failure->condition == cond) {
                witness = "i=" + std::to_string(cert.failure->index + 1);
                if (cert.failure->weyl_index) witness += " w=" + report::word(g[*cert.failure->weyl_index].reduced_word).dump();
                data["witness_reproduces"] = polarization::witness_reproduces(g, chi, *cert.failure);
            } else {
                witness = "fails (an earlier condition carries the witness)";
            }
        }
        Section s = checked(prefix + polarization::condition_name(cond), flags[c], descriptions[c], witness);
        s.data = std::move(data);
        doc.add(std::move(s));
    }
    doc.add(info(prefix + "certificate", report::chi_certificate(g, cert)));
}

void flag_sections(Document& doc, const WeylGroup& g, const Weight& chi) {
    const RootDatum& d = g.datum();
    lemma1_sections(doc, g, chi, "lemma1.");
    if (!dominant_in_root_lattice(d, chi)) {
        doc.notes.emplace_back("χ is not dominant in the root lattice: Schubert-cell checks skipped");
        return;
    }
    const auto r = stability::verify_lemma2(g, chi);
    doc.add(checked("lemma2.codim_implication", r.codim_implication.pass,
                    "every w with w(χ) ≰ 0 has codim l(w₀) - l(w) ≥ 2",
                    words_of(r.sweep, r.codim_implication.witnesses)));
    doc.add(checked("lemma2.no_strictly_semistable", r.no_strictly_semistable.pass,
                    "no generic Schubert-cell state is semistable but not stable",
                    words_of(r.sweep, r.no_strictly_semistable.witnesses)));
    doc.add(checked("lemma2.low_codim_stable", r.low_codim_stable.pass,
                    "every cell of codim ≤ 1 has a stable generic state",
                    words_of(r.sweep, r.low_codim_stable.witnesses)));
    const auto [ok, why] = recheck_cells(g, r.sweep);
    doc.add(checked("lemma2.certificates_verified", ok, "every cell verdict certificate re-verifies exactly", why));
    Json min = r.min_unstable_codim ? Json(*r.min_unstable_codim) : Json(nullptr);
    doc.add(info("lemma2.cells",
                 Json{{"hypotheses_met", r.sweep.hypotheses_met},
                      {"support_size", r.sweep.support.size()},
                      {"min_unstable_codim", min},
                      {"cells", report::cells(g, r.sweep)}}));
}

void wonderful_sections(Document& doc, const WeylGroup& g, const Weight& chi) {
    const RootDatum& d = g.datum();
    if (!dominant_in_root_lattice(d, chi))
        throw UsageError("wonderful scope needs χ dominant and in the root lattice");
    const auto model = wonderful::build_model(g, chi);
    const auto ev = wonderful::verify_cor1(g, model);
    const auto& rep = ev.report;
    for (const auto& n : rep.notes) doc.notes.push_back(n);

    doc.add(info("wonderful.hypotheses", Json{{"hypotheses_met", rep.hypotheses_met}}));
    for (const auto& c : rep.checks) {
        Section s;
        s.name = "wonderful." + c.id;
        s.status = report::from_check(c.status);
        s.description = c.description;
        s.witness = c.witness;
        if (c.id == "closed_orbit_translation") {
            Json boundary = Json::array();
            for (const auto& [a, b] : ev.restriction.boundary) boundary.push_back(Json{a.omega, b.omega});
            s.data = Json{{"first", ev.restriction.first.omega},
                          {"second", ev.restriction.second.omega},
                          {"translated", ev.restriction.translated.omega},
                          {"boundary", std::move(boundary)}};
        } else if (c.id == "z_level_semistable_equals_stable") {
            s.data = Json{{"chi_prime", report::weight_both(d, ev.z_level.sweep.chi)},
                          {"cells", report::cells(g, ev.z_level.sweep)}};
        } else if (c.id == "identity_stable") {
            s.data = report::verdict(ev.identity, ev.identity_verdict);
        } else if (c.id == "x_level_unstable_codim") {
            s.data = Json{{"min_unstable_codim_in_Z", rep.min_unstable_codim_in_z ? Json(*rep.min_unstable_codim_in_z) : Json(nullptr)},
                          {"derived_codim_bound_in_X", rep.derived_codim_bound_in_x ? Json(*rep.derived_codim_bound_in_x) : Json(nullptr)}};
        }
        doc.add(std::move(s));
    }
    auto [ok, why] = recheck_cells(g, ev.z_level.sweep);
    if (ok && !stability::verify_verdict(d, ev.identity, ev.identity_verdict)) {
        ok = false;
        why = "identity certificate does not verify";
    }
    doc.add(checked("wonderful.certificates_verified", ok, "every Z-level and identity certificate re-verifies", why));
}

void picard_sections(Document& doc, const RootDatum& d) {
    const auto rep = wonderful::picard_rank_report(d);
    for (const auto& n : rep.notes) doc.notes.push_back(n);
    auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
    doc.add(info("picard.ranks", Json{{"hypotheses_met", rep.hypotheses_met},
                                      {"picard_rank_X", opt(rep.picard_rank_x)},
                                      {"picard_rank_Z", opt(rep.picard_rank_z)},
                                      {"picard_rank_Y", opt(rep.picard_rank_y)},
                                      {"basis", rep.picard_basis}}));
    for (const auto& c : rep.checks) {
        Section s;
        s.name = "picard." + c.id;
        s.status = report::from_check(c.status);
        s.description = c.description;
        s.witness = c.witness;
        doc.add(std::move(s));
    }
}

void cmd_roots(Document& doc, const Options& o) {
    const RootDatum d = datum_from(o);
    doc.input = echo_base(d);
    doc.add(info("root_datum", report::datum(d)));
    doc.add(info("weyl_order", Json{{"order", weyl::weyl_order(d)}}));
}

void cmd_find_chi(Document& doc, const Options& o) {
    const RootDatum d = datum_from(o);
    if (o.bound < 0) throw UsageError("--bound must be a nonnegative integer");
    doc.input = echo_base(d);
    doc.input["bound"] = o.bound;
    if (d.type() == rootsys::SimpleType::A && d.rank() == 2)
        doc.notes.emplace_back("A2 is excluded by hypothesis; no polarization character exists");
    if (d.rank() < 2) doc.notes.emplace_back("rank 1 is excluded by hypothesis");
    const WeylGroup g = WeylGroup::enumerate(d);
    const auto found = polarization::search_chi(g, static_cast<std::size_t>(o.bound));
    Json results = Json::array();
    std::string bad;
    for (const auto& chi : found) {
        results.push_back(report::chi_certificate(g, polarization::check_lemma1(g, chi)));
        if (bad.empty() && !polarization::reference::check_lemma1(g, chi).passes()) bad = Json(chi.omega).dump();
    }
    if (found.empty()) doc.notes.emplace_back("no χ of height ≤ " + std::to_string(o.bound) + " passes");
    doc.add(info("search", Json{{"bound", o.bound}, {"count", found.size()}, {"results", std::move(results)}}));
    doc.add(checked("recheck", bad.empty(), "every returned χ passes the serial re-check", "chi_omega=" + bad));
}

void cmd_check_chi(Document& doc, const Options& o) {
    const RootDatum d = datum_from(o);
    const Weight chi = chi_from(d, o);
    doc.input = echo_base(d);
    doc.input["chi"] = report::weight_both(d, chi);
    lemma1_sections(doc, WeylGroup::enumerate(d), chi, "");
}

void cmd_classify_cells(Document& doc, const Options& o) {
    const RootDatum d = datum_from(o);
    const Weight chi = chi_from(d, o);
    doc.input = echo_base(d);
    doc.input["chi"] = report::weight_both(d, chi);
    if (!dominant_in_root_lattice(d, chi)) throw UsageError("χ must be dominant and in the root lattice");
    const WeylGroup g = WeylGroup::enumerate(d);
    const auto sweep = stability::classify_cells(g, chi);
    if (!sweep.hypotheses_met) doc.notes.emplace_back("χ fails a polarization condition");
    doc.add(info("cells", Json{{"hypotheses_met", sweep.hypotheses_met},
                               {"support_size", sweep.support.size()},
                               {"cells", report::cells(g, sweep)}}));
    const auto [ok, why] = recheck_cells(g, sweep);
    doc.add(checked("certificates_verified", ok, "every cell verdict certificate re-verifies exactly", why));
}

void cmd_mu(Document& doc, const Options& o) {
    const RootDatum d = datum_from(o);
    doc.input = echo_base(d);
    if (o.lambda.empty()) throw UsageError("--lambda is required");
    const rootsys::Coweight lambda{sized(parse_int_list(o.lambda, "--lambda"), d.rank(), "--lambda")};
    doc.input["lambda"] = lambda.lambda;

    std::optional<stability::State> state;
    std::optional<Weight> lowest;
    if (!o.state_omega.empty()) {
        if (!o.chi_omega.empty() || !o.chi_alpha.empty() || !o.word.empty())
            throw UsageError("--state-omega excludes --chi-omega, --chi-alpha and --word");
        std::vector<Weight> ws;
        std::stringstream ss(o.state_omega);
        std::string item;
        while (std::getline(ss, item, ';')) ws.push_back(Weight{sized(parse_int_list(item, "--state-omega"), d.rank(), "--state-omega")});
        if (ws.empty()) throw UsageError("--state-omega: empty state");
        state.emplace(std::move(ws));
        Json echo = Json::array();
        for (const auto& w : state->weights()) echo.push_back(w.omega);
        doc.input["state_omega"] = std::move(echo);
    } else {
        const Weight chi = chi_from(d, o);
        if (!dominant_in_root_lattice(d, chi)) throw UsageError("χ must be dominant and in the root lattice");
        const WeylGroup g = WeylGroup::enumerate(d);
        const std::size_t k = element_from_word(g, o.word);
        doc.input["chi"] = report::weight_both(d, chi);
        doc.input["word"] = report::word(g[k].reduced_word);
        state.emplace(stability::schubert_cell_state(d, chi, g[k]));
        lowest = weyl::act_on_weight(g[k], chi);
    }
    const ratlp::Rational value = stability::mu(d, *state, lambda);
    const auto v = stability::classify_state(d, *state);
    doc.add(info("mu", Json{{"mu", report::rational(value)},
                            {"destabilizing", value.sign() < 0},
                            {"verdict", report::verdict(*state, v)}}));
    doc.add(checked("certificate_verified", stability::verify_verdict(d, *state, v),
                    "the state's verdict certificate re-verifies exactly", "certificate does not verify"));
    const bool dominant_lambda =
        std::all_of(lambda.lambda.begin(), lambda.lambda.end(), [](std::int64_t x) { return x >= 0; });
    if (lowest && dominant_lambda) {
        const ratlp::Rational expected = -rootsys::pairing(d, *lowest, lambda);
        doc.add(checked("mu_formula", value == expected, "μ(cell state, λ) = -<w(χ), λ> for dominant λ",
                        "expected " + expected.str() + ", got " + value.str()));
    }
}

void cmd_verify(Document& doc, const Options& o, const std::string& scope) {
    if (scope != "flag" && scope != "wonderful" && scope != "all") throw UsageError("--scope must be flag, wonderful or all");
    const RootDatum d = datum_from(o);
    const Weight chi = chi_from(d, o);
    doc.input = echo_base(d);
    doc.input["chi"] = report::weight_both(d, chi);
    doc.input["scope"] = scope;
    const WeylGroup g = WeylGroup::enumerate(d);
    if (scope == "flag" || scope == "all") flag_sections(doc, g, chi);
    if (scope == "wonderful" || scope == "all") {
        wonderful_sections(doc, g, chi);
        picard_sections(doc, d);
    }
}

void cmd_picard(Document& doc, const Options& o) {
    const RootDatum d = datum_from(o);
    doc.input = echo_base(d);
    picard_sections(doc, d);
}

void add_datum_options(CLI::App* sub, Options& o) {
    sub->add_option("--type", o.type, "root system type, A-G")->required();
    sub->add_option("--rank", o.rank, "rank")->required();
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
}

void add_chi_options(CLI::App* sub, Options& o) {
    sub->add_option("--chi-omega", o.chi_omega, "χ in fundamental-weight coordinates, a,b,c");
    sub->add_option("--chi-alpha", o.chi_alpha, "χ in simple-root coordinates, m1,m2,m3");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of torus GIT quotients of flag varieties and wonderful compactifications",
                 "torus-git"};
    app.set_version_flag("--version", std::string(TORUS_GIT_VERSION));
    app.require_subcommand(1);
    Options o;

    auto* roots = app.add_subcommand("roots", "dump root datum");
    add_datum_options(roots, o);
    auto* find = app.add_subcommand("find-chi", "search polarization characters by height");
    add_datum_options(find, o);
    find->add_option("--bound", o.bound, "height bound")->required();
    auto* check = app.add_subcommand("check-chi", "check the four polarization conditions");
    add_datum_options(check, o);
    add_chi_options(check, o);
    auto* classify = app.add_subcommand("classify-cells", "classify generic Schubert-cell states");
    add_datum_options(classify, o);
    add_chi_options(classify, o);
    auto* mu = app.add_subcommand("mu", "Hilbert-Mumford weight of a state");
    add_datum_options(mu, o);
    add_chi_options(mu, o);
    mu->add_option("--word", o.word, "Weyl element as 1-based reflection indices, e.g. 1,2,1");
    mu->add_option("--lambda", o.lambda, "coweight in the basis dual to the simple roots")->required();
    mu->add_option("--state-omega", o.state_omega, "explicit state, weights separated by ';'");
    auto* vflag = app.add_subcommand("verify-flag", "flag-variety checks");
    add_datum_options(vflag, o);
    add_chi_options(vflag, o);
    auto* vwond = app.add_subcommand("verify-wonderful", "wonderful-compactification checks");
    add_datum_options(vwond, o);
    add_chi_options(vwond, o);
    auto* verify = app.add_subcommand("verify", "flag and/or wonderful checks");
    add_datum_options(verify, o);
    add_chi_options(verify, o);
    verify->add_option("--scope", o.scope, "flag, wonderful or all")->check(CLI::IsMember({"flag", "wonderful", "all"}));
    auto* picard = app.add_subcommand("picard", "Picard rank report");
    add_datum_options(picard, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << TORUS_GIT_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Document doc;
    try {
        auto* sub = app.get_subcommands().front();
        doc.command = sub->get_name();
        if (sub == roots) cmd_roots(doc, o);
        else if (sub == find) cmd_find_chi(doc, o);
        else if (sub == check) cmd_check_chi(doc, o);
        else if (sub == classify) cmd_classify_cells(doc, o);
        else if (sub == mu) cmd_mu(doc, o);
        else if (sub == vflag) cmd_verify(doc, o, "flag");
        else if (sub == vwond) cmd_verify(doc, o, "wonderful");
        else if (sub == verify) cmd_verify(doc, o, o.scope);
        else if (sub == picard) cmd_picard(doc, o);
    } catch (const weyl::EnumerationLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.format == "tsv")
        out << report::to_tsv(doc);
    else
        out << report::to_json(doc).dump(2) << "\n";
    return doc.any_failure() ? 1 : 0;
}

}  // namespace torus_git::cli
