#include "colorlie/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "colorlie/version.hpp"

namespace colorlie {

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw std::runtime_error("parse error in " + path.string() + ": " + ex.what());
    }
    return j;
}

void save_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

Json algebra_to_json(const GradedAlgebra& A) {
    Json j;
    j["kind"] = "algebra";
    j["name"] = A.name;
    j["dim"] = A.dim;
    Json degs = Json::array();
    for (GroupElement g : A.degrees) degs.push_back(Json::array({g.i, g.j}));
    j["degrees"] = degs;
    Json st = Json::array();
    for (const auto& e : A.entries())
        st.push_back(Json::array({e.i, e.j, e.k, rat_to_string(e.c)}));
    j["struct"] = st;
    return j;
}

GradedAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "algebra")
        throw std::runtime_error("algebra spec: expected {\"kind\": \"algebra\", ...}");
    const std::string name = j.at("name").get<std::string>();
    const int dim = j.at("dim").get<int>();
    std::vector<GroupElement> degrees;
    for (const auto& d : j.at("degrees")) {
        if (!d.is_array() || d.size() != 2)
            throw std::runtime_error("algebra spec: degree entries must be [i, j] bit pairs");
        const int bi = d[0].get<int>(), bj = d[1].get<int>();
        if ((bi != 0 && bi != 1) || (bj != 0 && bj != 1))
            throw std::runtime_error("algebra spec: degree bits must be 0 or 1");
        degrees.push_back({static_cast<std::uint8_t>(bi), static_cast<std::uint8_t>(bj)});
    }
    std::vector<StructEntry> entries;
    for (const auto& e : j.at("struct")) {
        if (!e.is_array() || e.size() != 4)
            throw std::runtime_error("algebra spec: struct entries must be [i, j, k, coeff]");
        entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                           rat_from_string(e[3].get<std::string>())});
    }
    return GradedAlgebra::from_entries(name, dim, std::move(degrees), std::move(entries));
}

Json sign_table_to_json(const SignTable& t, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    Json rows = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) row.push_back(t.v[r][c]);
        rows.push_back(row);
    }
    j["table"] = rows;
    return j;
}

SignTable sign_table_from_json(const Json& j) {
    const Json& rows = j.is_object() ? j.at("table") : j;
    if (!rows.is_array() || rows.size() != 4)
        throw std::runtime_error("sign table: expected a 4x4 array");
    SignTable t;
    for (int r = 0; r < 4; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 4)
            throw std::runtime_error("sign table: expected a 4x4 array");
        for (int c = 0; c < 4; ++c) {
            const int v = rows[r][c].get<int>();
            if (v != 1 && v != -1) throw std::runtime_error("sign table: entries must be +-1");
            t.v[r][c] = v;
        }
    }
    return t;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rat_to_string(v[i]));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::runtime_error("vector: expected an array of rationals");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = rat_from_string(j[i].get<std::string>());
    return v;
}

Json witness_to_json(const WitnessPolynomial& w) {
    Json j;
    j["kind"] = "witness";
    j["algebra"] = w.algebra;
    j["monomial"] = w.poly.terms().begin()->first.to_string();
    j["alt_set"] = w.alt_set;
    j["aux"] = w.aux_vars;
    Json ev;
    for (const auto& [var, vec] : w.evaluation) ev[std::to_string(var)] = vec_to_json(vec);
    j["evaluation"] = ev;
    j["alt_value"] = vec_to_json(w.alt_value);
    return j;
}

WitnessPolynomial witness_from_json(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "witness")
        throw std::runtime_error("witness file: expected {\"kind\": \"witness\", ...}");
    WitnessPolynomial w;
    w.algebra = j.at("algebra").get<std::string>();
    w.poly = MultilinearPoly::from_monomial(Monomial::parse(j.at("monomial").get<std::string>()));
    w.alt_set = j.at("alt_set").get<std::vector<int>>();
    w.aux_vars = j.at("aux").get<std::vector<int>>();
    for (const auto& [key, val] : j.at("evaluation").items())
        w.evaluation[std::stoi(key)] = vec_from_json(val);
    if (j.contains("alt_value")) w.alt_value = vec_from_json(j.at("alt_value"));
    return w;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

Json report_body(const CodimReport& rep) {
    Json j;
    j["algebra"] = rep.algebra;
    j["n"] = rep.n;
    j["mode"] = rep.mode;
    j["row_shape"] = rep.row_shape;
    j["value"] = rep.value;
    j["rows"] = rep.rows;
    j["columns_processed"] = rep.columns_processed;
    j["status"] = rep.status;
    j["seed"] = rep.seed;
    j["primes"] = rep.primes;
    j["stabilization_window"] = rep.stabilization_window;
    if (rep.graded_key)
        j["graded_key"] = Json::array({(*rep.graded_key)[0], (*rep.graded_key)[1],
                                       (*rep.graded_key)[2], (*rep.graded_key)[3]});
    return j;
}

}  // namespace

Json codim_report_to_json(const CodimReport& rep, const RunInfo& info) {
    Json j;
    j["command"] = info.command;
    j["version"] = info.version.empty() ? kVersion : info.version;
    j["report"] = report_body(rep);
    return j;
}

std::string codim_report_to_tsv(const CodimReport& rep, const RunInfo& info) {
    std::ostringstream os;
    os << "# command\t" << info.command << '\n';
    os << "# version\t" << (info.version.empty() ? kVersion : info.version) << '\n';
    os << "algebra\tn\tmode\trow_shape\tvalue\trows\tcolumns_processed\tstatus\tseed\tprimes";
    if (rep.graded_key) os << "\tgraded_key";
    os << '\n';
    os << rep.algebra << '\t' << rep.n << '\t' << rep.mode << '\t' << rep.row_shape << '\t'
       << rep.value << '\t' << rep.rows << '\t' << rep.columns_processed << '\t' << rep.status
       << '\t' << rep.seed << '\t';
    for (std::size_t t = 0; t < rep.primes.size(); ++t) {
        if (t) os << ',';
        os << rep.primes[t];
    }
    if (rep.graded_key) {
        os << '\t';
        for (int t = 0; t < 4; ++t) {
            if (t) os << ',';
            os << (*rep.graded_key)[t];
        }
    }
    os << '\n';
    return os.str();
}

}  // namespace colorlie
