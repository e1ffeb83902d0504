#include "dtwist/pipeline/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "dtwist/errors.hpp"
#include "dtwist/pipeline/pipeline.hpp"

namespace dtwist::pipeline {

using json = nlohmann::ordered_json;

bool VerificationReport::pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

namespace {

bool same_double(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same_model(const model::ModelReport& a, const model::ModelReport& b) {
    if (a.verifier != b.verifier || a.kind != b.kind || a.dim != b.dim || a.samples != b.samples || a.seed != b.seed ||
        a.residuals.size() != b.residuals.size())
        return false;
    for (std::size_t i = 0; i < a.residuals.size(); ++i) {
        const auto &x = a.residuals[i], &y = b.residuals[i];
        if (x.identity != y.identity || !same_double(x.max, y.max) || !same_double(x.tolerance, y.tolerance)) return false;
    }
    return true;
}

std::string model_verdict_name(const model::ModelReport& m) {
    return "model " + m.verifier + " (" + model::to_string(m.kind) + ", n = " + std::to_string(m.dim) + ")";
}

bool is_permutation(const gf2::BitMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t row = 0, col = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row += m.get(i, j);
            col += m.get(j, i);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

std::string vector_string(const gf2::BitVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string grading_name(gf2::Grading g) { return g == gf2::Grading::Mod2 ? "mod2" : "integer"; }

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_number(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

}  // namespace

bool VerificationReport::operator==(const VerificationReport& o) const {
    if (scenario != o.scenario || seed != o.seed || ranks != o.ranks || involution != o.involution || a != o.a ||
        verdicts != o.verdicts || model.size() != o.model.size())
        return false;
    for (std::size_t i = 0; i < model.size(); ++i)
        if (!same_model(model[i], o.model[i])) return false;
    return true;
}

std::vector<Verdict> recompute_verdicts(const VerificationReport& r) {
    std::vector<Verdict> out;
    if (r.a) {
        const auto it = r.ranks.find(keys::twist);
        const std::size_t h0 = it == r.ranks.end() ? 0 : it->second.at(0);
        out.push_back({"A != 0", !gf2::is_zero(*r.a)});
        out.push_back({"A = (1,...,1) in the component basis", *r.a == gf2::BitVector(h0, 1)});
    }
    if (!r.involution.empty()) {
        const auto m0 = r.involution.find(0);
        if (r.a)
            out.push_back({"c*(A) = A", m0 != r.involution.end() && m0->second.cols() == r.a->size() &&
                                            m0->second * *r.a == *r.a});
        bool squares = true;
        for (const auto& [k, m] : r.involution) squares = squares && m.rows() == m.cols() && (m * m).is_identity();
        out.push_back({"c* squares to the identity", squares});
        out.push_back({"degree-0 c* permutes the components", m0 != r.involution.end() && is_permutation(m0->second)});
    }
    if (r.ranks.count(keys::qtn)) {
        const auto& sn = r.ranks.at(keys::sn);
        const auto& qs = r.ranks.at(keys::qs);
        const auto& t = r.ranks.at(keys::tensor);
        out.push_back({"Kunneth: H(CF(S,N) x CF(Q,S)) = HF(S,N) x HF(Q,S)", t == gf2::convolve(sn, qs)});
        for (auto& v : les_verdicts(t.total(), r.ranks.at(keys::qn).total(), r.ranks.at(keys::qtn).total()))
            out.push_back(v);
    }
    for (const auto& m : r.model) out.push_back({model_verdict_name(m), m.pass()});
    return out;
}

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "structured") return Format::Structured;
    throw ParseError(0, 0, "unknown format '" + s + "' (table, structured)");
}

VerificationReport model_report(const std::vector<model::ModelReport>& reports, std::uint64_t seed) {
    VerificationReport r;
    r.scenario = "model geometry";
    r.seed = seed;
    r.model = reports;
    for (const auto& m : reports) r.verdicts.push_back({model_verdict_name(m), m.pass()});
    return r;
}

std::string emit_report(const VerificationReport& r, Format f) {
    if (f == Format::Structured) {
        json j;
        j["scenario"] = r.scenario;
        j["seed"] = r.seed;
        json ranks = json::object();
        for (const auto& [key, d] : r.ranks) {
            json dims = json::object();
            for (const auto& [k, n] : d.dims) dims[std::to_string(k)] = n;
            ranks[key] = {{"grading", grading_name(d.grading)}, {"dims", dims}};
        }
        j["ranks"] = ranks;
        json inv = json::object();
        for (const auto& [k, m] : r.involution)
            inv[std::to_string(k)] = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_rows()}};
        j["involution"] = inv;
        j["A"] = r.a ? json(*r.a) : json(nullptr);
        json verdicts = json::array();
        for (const auto& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"pass", v.pass}});
        j["verdicts"] = verdicts;
        json model = json::array();
        for (const auto& m : r.model) {
            json res = json::array();
            for (const auto& x : m.residuals)
                res.push_back({{"identity", x.identity}, {"max", number(x.max)}, {"tolerance", number(x.tolerance)}});
            model.push_back({{"verifier", m.verifier},
                             {"kind", model::to_string(m.kind)},
                             {"dim", m.dim},
                             {"samples", m.samples},
                             {"seed", m.seed},
                             {"residuals", res}});
        }
        j["model"] = model;
        j["pass"] = r.pass();
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "scenario  " << r.scenario << "\n";
    if (!r.ranks.empty()) {
        os << "\nranks\n";
        for (const auto& [key, d] : r.ranks) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  %-22s", key.c_str());
            os << buf;
            for (const auto& [k, n] : d.dims) os << "  H" << k << " = " << n;
            os << "  (total " << d.total() << ")\n";
        }
    }
    if (!r.involution.empty()) {
        os << "\nc*\n";
        for (const auto& [k, m] : r.involution) os << "  degree " << k << "  " << m.to_string() << "\n";
    }
    if (r.a) os << "\nA = " << vector_string(*r.a) << "\n";
    for (const auto& m : r.model) {
        os << "\nmodel " << m.verifier << "  kind " << model::to_string(m.kind) << "  n = " << m.dim << "  samples "
           << m.samples << "  seed " << m.seed << "\n";
        for (const auto& x : m.residuals) {
            char buf[256];
            std::snprintf(buf, sizeof buf, "  %s  %-58s  max %.3e  tol %.1e\n", x.pass() ? "pass" : "FAIL",
                          x.identity.c_str(), x.max, x.tolerance);
            os << buf;
        }
    }
    if (!r.verdicts.empty()) os << "\nverdicts\n";
    for (const auto& v : r.verdicts) os << "  " << (v.pass ? "pass" : "FAIL") << "  " << v.name << "\n";
    os << "\n" << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

VerificationReport parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, static_cast<int>(e.byte), e.what());
    }
    try {
        VerificationReport r;
        r.scenario = j.at("scenario").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& [key, d] : j.at("ranks").items()) {
            gf2::GradedDims g;
            g.grading = d.at("grading").get<std::string>() == "mod2" ? gf2::Grading::Mod2 : gf2::Grading::Integer;
            for (const auto& [k, n] : d.at("dims").items()) g.dims[std::stoi(k)] = n.get<std::size_t>();
            r.ranks[key] = g;
        }
        for (const auto& [k, m] : j.at("involution").items()) {
            gf2::BitMatrix b(m.at("rows").get<std::size_t>(), m.at("cols").get<std::size_t>());
            const auto rows = m.at("entries").get<std::vector<std::vector<int>>>();
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t c = 0; c < rows[i].size(); ++c) b.set(i, c, rows[i][c] != 0);
            r.involution[std::stoi(k)] = b;
        }
        if (!j.at("A").is_null()) r.a = j.at("A").get<gf2::BitVector>();
        for (const auto& v : j.at("verdicts")) r.verdicts.push_back({v.at("name"), v.at("pass")});
        for (const auto& m : j.at("model")) {
            model::ModelReport x;
            x.verifier = m.at("verifier");
            x.kind = model::parse_kind(m.at("kind"));
            x.dim = m.at("dim");
            x.samples = m.at("samples");
            x.seed = m.at("seed");
            for (const auto& res : m.at("residuals"))
                x.residuals.push_back({res.at("identity"), read_number(res.at("max")), read_number(res.at("tolerance"))});
            r.model.push_back(std::move(x));
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(0, 0, std::string("report: ") + e.what());
    }
}

}  // namespace dtwist::pipeline
