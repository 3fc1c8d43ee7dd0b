#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "torus_git/polarization.hpp"
#include "torus_git/stability.hpp"
#include "torus_git/wonderful.hpp"

namespace torus_git::report {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Section statuses. The first three mirror wonderful::CheckStatus; `info`
/// marks data dumps that carry no verdict.
enum class Status { Pass, Fail, Asserted, Info };

const char* status_name(Status s);
Status from_check(wonderful::CheckStatus s);

struct Section {
    std::string name;
    Status status = Status::Info;
    std::string description;
    std::string witness;
    Json data = Json::object();
};

/// Header shared by every command's output.
struct Document {
    std::string command;
    Json input = Json::object();
    std::vector<std::string> notes;
    std::vector<Section> sections;

    void add(Section s) { sections.push_back(std::move(s)); }
    bool any_failure() const;
};

Json to_json(const Document& doc);
/// One line per section: name, status, witness. Header lines start with '#'.
std::string to_tsv(const Document& doc);

Json rational(const ratlp::Rational& r);
Json rationals(const ratlp::RatVector& v);
Json weight(const rootsys::Weight& w);
/// A weight echoed in both bases.
Json weight_both(const rootsys::RootDatum& d, const rootsys::Weight& w);
/// 1-based simple-reflection indices.
Json word(const std::vector<std::size_t>& w);

Json datum(const rootsys::RootDatum& d);
Json chi_certificate(const weyl::WeylGroup& g, const polarization::ChiCertificate& c);
/// Certificates are sparse: only weights with nonzero coefficient are listed,
/// each with its ω-coordinates, so a verdict can be re-checked without the state.
Json verdict(const stability::State& s, const stability::Verdict& v);
Json cell(const weyl::WeylGroup& g, const stability::CellSweep& sweep, const stability::CellReport& c);
Json cells(const weyl::WeylGroup& g, const stability::CellSweep& sweep);

}  // namespace torus_git::report
