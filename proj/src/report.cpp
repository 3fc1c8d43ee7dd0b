#include "torus_git/report.hpp"

#include <algorithm>
#include <sstream>

namespace torus_git::report {

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "machine_checked_pass";
    case Status::Fail: return "machine_checked_fail";
    case Status::Asserted: return "asserted";
    case Status::Info: return "info";
    }
    return "?";
}

Status from_check(wonderful::CheckStatus s) {
    switch (s) {
    case wonderful::CheckStatus::MachineCheckedPass: return Status::Pass;
    case wonderful::CheckStatus::MachineCheckedFail: return Status::Fail;
    case wonderful::CheckStatus::Asserted: return Status::Asserted;
    }
    return Status::Info;
}

bool Document::any_failure() const {
    return std::any_of(sections.begin(), sections.end(), [](const Section& s) { return s.status == Status::Fail; });
}

Json to_json(const Document& doc) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["tool_version"] = TORUS_GIT_VERSION;
    j["command"] = doc.command;
    j["input"] = doc.input;
    j["notes"] = doc.notes;
    Json sections = Json::array();
    for (const auto& s : doc.sections) {
        Json e;
        e["name"] = s.name;
        e["status"] = status_name(s.status);
        if (!s.description.empty()) e["description"] = s.description;
        if (s.status == Status::Fail) e["witness"] = s.witness;
        e["data"] = s.data;
        sections.push_back(std::move(e));
    }
    j["sections"] = std::move(sections);
    j["all_machine_checks_pass"] = !doc.any_failure();
    return j;
}

std::string to_tsv(const Document& doc) {
    std::ostringstream os;
    os << "# format_version\t" << kFormatVersion << "\n";
    os << "# tool_version\t" << TORUS_GIT_VERSION << "\n";
    os << "# command\t" << doc.command << "\n";
    for (const auto& [k, v] : doc.input.items()) os << "# " << k << "\t" << v.dump() << "\n";
    for (const auto& n : doc.notes) os << "# note\t" << n << "\n";
    os << "name\tstatus\twitness\n";
    for (const auto& s : doc.sections)
        os << s.name << "\t" << status_name(s.status) << "\t" << (s.status == Status::Fail ? s.witness : "") << "\n";
    return os.str();
}

Json rational(const ratlp::Rational& r) { return r.str(); }

Json rationals(const ratlp::RatVector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

Json weight(const rootsys::Weight& w) { return w.omega; }

Json weight_both(const rootsys::RootDatum& d, const rootsys::Weight& w) {
    return Json{{"omega", w.omega}, {"alpha", rationals(rootsys::alpha_coords(d, w))}};
}

Json word(const std::vector<std::size_t>& w) {
    Json j = Json::array();
    for (const auto i : w) j.push_back(i + 1);
    return j;
}

Json datum(const rootsys::RootDatum& d) {
    Json roots = Json::array();
    for (const auto& a : d.positive_roots()) roots.push_back(a);
    return Json{{"type", std::string(1, rootsys::type_letter(d.type()))},
                {"rank", d.rank()},
                {"label", d.label()},
                {"cartan", d.cartan()},
                {"determinant", d.cartan_determinant()},
                {"positive_roots_alpha", std::move(roots)},
                {"positive_root_count", d.positive_roots().size()},
                {"two_rho", weight_both(d, rootsys::two_rho(d))}};
}

Json chi_certificate(const weyl::WeylGroup& g, const polarization::ChiCertificate& c) {
    Json j{{"chi", weight_both(g.datum(), c.chi)},
           {"in_NS", c.in_ns},
           {"regular_dominant", c.regular_dominant},
           {"reflections_nonneg", c.reflections_nonneg},
           {"pairings_nonzero", c.pairings_nonzero},
           {"passes", c.passes()}};
    if (c.failure) {
        Json f{{"condition", polarization::condition_name(c.failure->condition)}, {"index", c.failure->index + 1}};
        if (c.failure->weyl_index) f["weyl_word"] = word(g[*c.failure->weyl_index].reduced_word);
        j["failure"] = std::move(f);
    }
    return j;
}

namespace {

Json sparse(const stability::State& s, const ratlp::RatVector& coef) {
    Json j = Json::array();
    for (std::size_t k = 0; k < coef.size() && k < s.size(); ++k)
        if (!coef[k].is_zero()) j.push_back(Json{{"weight", s.weights()[k].omega}, {"coef", coef[k].str()}});
    return j;
}

}  // namespace

Json verdict(const stability::State& s, const stability::Verdict& v) {
    Json j{{"kind", stability::verdict_name(v.kind)}, {"state_size", s.size()}};
    if (v.destabilizer) j["destabilizer"] = v.destabilizer->lambda;
    if (v.supporting) j["supporting"] = v.supporting->lambda;
    if (!v.hull.empty()) j["hull"] = sparse(s, v.hull);
    if (!v.directions.empty()) {
        Json dirs = Json::array();
        for (std::size_t k = 0; k < v.directions.size(); ++k)
            dirs.push_back(Json{{"target", (k % 2 ? "+e" : "-e") + std::to_string(k / 2 + 1)},
                                {"combination", sparse(s, v.directions[k])}});
        j["directions"] = std::move(dirs);
    }
    return j;
}

Json cell(const weyl::WeylGroup& g, const stability::CellSweep& sweep, const stability::CellReport& c) {
    const stability::State state = stability::schubert_cell_state(g.datum(), sweep.support, sweep.chi, g[c.weyl_index]);
    return Json{{"word", word(c.reduced_word)},
                {"length", c.length},
                {"codim", c.codim},
                {"w_chi", c.w_chi.omega},
                {"w_chi_leq_zero", c.w_chi_leq_zero},
                {"verdict", verdict(state, c.generic_verdict)}};
}

Json cells(const weyl::WeylGroup& g, const stability::CellSweep& sweep) {
    Json j = Json::array();
    for (const auto& c : sweep.cells) j.push_back(cell(g, sweep, c));
    return j;
}

}  // namespace torus_git::report
