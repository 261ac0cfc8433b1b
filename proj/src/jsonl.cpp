#include "cq/jsonl.hpp"

#include <istream>

namespace cq {

namespace {

ordered_json opt_str(const std::optional<Int>& v) {
    if (!v) return nullptr;
    return to_string(*v);
}

ordered_json opt_bool(const std::optional<bool>& v) {
    if (!v) return nullptr;
    return *v;
}

Int json_int(const ordered_json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(std::to_string(j.get<long long>()));
}

}  // namespace

ordered_json certificate_json(const Certificate& cert) {
    ordered_json j;
    if (cert.params) {
        const GrasParams& p = *cert.params;
        j["a"] = to_string(p.a);
        j["b"] = to_string(p.b);
        j["g"] = to_string(p.g);
        j["m"] = to_string(p.m);
        j["x"] = to_string(p.x);
        j["y"] = to_string(p.y);
        j["z"] = to_string(p.z);
        j["t"] = p.t ? ordered_json(to_string(*p.t)) : ordered_json(nullptr);
        j["chi"] = to_string(Int(p.chi));
    } else if (cert.z) {
        j["z"] = to_string(*cert.z);
    }
    j["poly"] = cert.polynomial.to_string();
    j["irreducible"] = cert.irreducible;
    j["is_c4"] = cert.is_c4;
    j["squarefree_a"] = cert.squarefree_a;
    j["squarefree_m_part"] = cert.squarefree_m_part;
    j["conductor"] = opt_str(cert.conductor);
    j["disc_poly"] = to_string(cert.disc_poly);
    j["disc_field"] = opt_str(cert.disc_field);
    j["index_square"] = opt_str(cert.index_square);
    j["monogenic"] = opt_bool(cert.monogenic);
    j["reasons"] = cert.reasons;
    return j;
}

ordered_json hit_json(const SweepHit& hit) {
    ordered_json j;
    const GrasParams& p = hit.params;
    j["a"] = to_string(p.a);
    j["b"] = to_string(p.b);
    j["g"] = to_string(p.g);
    j["m"] = to_string(p.m);
    j["x"] = to_string(p.x);
    j["y"] = to_string(p.y);
    j["z"] = to_string(p.z);
    j["t"] = p.t ? ordered_json(to_string(*p.t)) : ordered_json(nullptr);
    j["chi"] = to_string(Int(p.chi));
    const Certificate& c = hit.certificate;
    j["poly"] = c.polynomial.to_string();
    j["irreducible"] = c.irreducible;
    j["is_c4"] = c.is_c4;
    j["conductor"] = opt_str(c.conductor);
    j["disc_poly"] = to_string(c.disc_poly);
    j["disc_field"] = opt_str(c.disc_field);
    j["index_square"] = opt_str(c.index_square);
    j["monogenic"] = opt_bool(c.monogenic);
    j["reasons"] = c.reasons;
    return j;
}

std::vector<CorpusEntry> load_corpus(std::istream& in) {
    ordered_json doc = ordered_json::parse(in);
    if (!doc.is_array()) throw std::invalid_argument("corpus file must be a JSON array");
    std::vector<CorpusEntry> out;
    for (const auto& e : doc) {
        CorpusEntry entry;
        entry.label = e.at("label").get<std::string>();
        entry.conductor = json_int(e.at("conductor"));
        entry.field_disc = json_int(e.at("field_disc"));
        entry.source = e.value("source", std::string{});
        if (e.contains("family_z") && !e["family_z"].is_null())
            entry.family_z = json_int(e["family_z"]);
        out.push_back(std::move(entry));
    }
    return out;
}

CorpusReport corpus_check(const std::vector<CorpusEntry>& entries) {
    CorpusReport report;
    for (const CorpusEntry& e : entries) {
        ordered_json line;
        line["label"] = e.label;
        if (!e.family_z) {
            ++report.informational;
            line["status"] = "informational";
            line["note"] = "no family parameter; values are not recomputed";
            report.lines.push_back(std::move(line));
            continue;
        }
        ++report.checked;
        Certificate cert = certify_z(*e.family_z);
        bool cond_ok = cert.conductor && *cert.conductor == e.conductor;
        bool disc_ok = cert.disc_field && *cert.disc_field == e.field_disc;
        bool mono_ok = cert.monogenic && *cert.monogenic;
        line["family_z"] = to_string(*e.family_z);
        line["expected_conductor"] = to_string(e.conductor);
        line["computed_conductor"] = opt_str(cert.conductor);
        line["expected_disc"] = to_string(e.field_disc);
        line["computed_disc"] = opt_str(cert.disc_field);
        line["monogenic"] = opt_bool(cert.monogenic);
        if (cond_ok && disc_ok && mono_ok) {
            ++report.passed;
            line["status"] = "pass";
        } else {
            ++report.failed;
            line["status"] = "fail";
        }
        report.lines.push_back(std::move(line));
    }
    return report;
}

}  // namespace cq
