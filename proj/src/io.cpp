#include "wsos/io.hpp"

#include <fstream>

#include <json.hpp>

namespace wsos {

using nlohmann::json;

namespace {

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void dump(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

Rational rat(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": expected a \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

Vec rat_vec(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    Vec out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rat(e, what));
    return out;
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
}

BasisId basis_from_json(const json& j) {
    BasisId b;
    b.kind = basis_kind_from_string(j.at("kind").get<std::string>());
    b.degree = j.at("degree").get<unsigned>();
    b.n = j.value("n", 1u);
    if (j.contains("nodes")) {
        for (const auto& node : j.at("nodes")) {
            if (node.is_string()) {
                b.nodes.push_back({Rational::parse(node.get<std::string>())});
            } else {
                b.nodes.push_back(rat_vec(node, "basis node"));
            }
        }
    }
    return b;
}

json basis_to_json(const BasisId& b) {
    json j;
    j["kind"] = to_string(b.kind);
    j["degree"] = b.degree;
    j["n"] = b.n;
    if (!b.nodes.empty()) {
        json nodes = json::array();
        for (const auto& z : b.nodes) {
            if (z.size() == 1) {
                nodes.push_back(z[0].str());
            } else {
                nodes.push_back(vec_json(z));
            }
        }
        j["nodes"] = nodes;
    }
    return j;
}

}  // namespace

ConeSpec read_cone_file(const std::string& path) {
    const json j = load(path);
    ConeSpec spec;
    try {
        spec.n = j.at("n").get<unsigned>();
        spec.q_basis = basis_from_json(j.at("q_basis"));
        spec.q_basis.n = spec.n;
        for (const auto& w : j.at("weights")) spec.weights.push_back(rat_vec(w, "weight"));
        for (const auto& d : j.at("degrees")) spec.degrees.push_back(d.get<unsigned>());
        for (const auto& p : j.at("p_bases")) {
            BasisId b = basis_from_json(p);
            b.n = spec.n;
            spec.p_bases.push_back(std::move(b));
        }
        if (j.contains("interior_points")) {
            for (const auto& z : j.at("interior_points")) {
                if (z.is_string()) {
                    spec.interior_points.push_back({Rational::parse(z.get<std::string>())});
                } else {
                    spec.interior_points.push_back(rat_vec(z, "interior point"));
                }
            }
        }
    } catch (const json::exception& e) {
        throw ParseError("cone file '" + path + "': " + e.what());
    }
    spec.validate();
    return spec;
}

void write_cone_file(const std::string& path, const ConeSpec& spec) {
    json j;
    j["n"] = spec.n;
    j["q_basis"] = basis_to_json(spec.q_basis);
    json ws = json::array();
    for (const auto& w : spec.weights) ws.push_back(vec_json(w));
    j["weights"] = ws;
    j["degrees"] = spec.degrees;
    json ps = json::array();
    for (const auto& p : spec.p_bases) ps.push_back(basis_to_json(p));
    j["p_bases"] = ps;
    if (!spec.interior_points.empty()) {
        json pts = json::array();
        for (const auto& z : spec.interior_points)
            pts.push_back(z.size() == 1 ? json(z[0].str()) : vec_json(z));
        j["interior_points"] = pts;
    }
    dump(path, j);
}

Vec read_poly_file(const std::string& path, size_t expected_len) {
    const json j = load(path);
    Vec coeffs;
    try {
        coeffs = rat_vec(j.at("coeffs"), "poly coeffs");
    } catch (const json::exception& e) {
        throw ParseError("poly file '" + path + "': " + e.what());
    }
    if (expected_len != 0 && coeffs.size() != expected_len)
        throw ParseError("poly file '" + path + "': expected " + std::to_string(expected_len) +
                         " coefficients, found " + std::to_string(coeffs.size()));
    return coeffs;
}

void write_poly_file(const std::string& path, const Vec& coeffs) {
    json j;
    j["coeffs"] = vec_json(coeffs);
    dump(path, j);
}

Certificate read_certificate_file(const std::string& path) {
    const json j = load(path);
    Certificate cert;
    try {
        cert.cone_digest = j.at("cone_digest").get<std::string>();
        cert.x = rat_vec(j.at("x"), "certificate x");
        if (j.contains("c") && !j.at("c").is_null()) cert.c = rat(j.at("c"), "certificate c");
        if (j.contains("N") && !j.at("N").is_null())
            cert.n = Integer(j.at("N").get<std::string>());
        cert.verified = j.value("verified", false);
    } catch (const json::exception& e) {
        throw ParseError("certificate file '" + path + "': " + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("certificate file '" + path + "': malformed N");
    }
    return cert;
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
    json j;
    j["cone_digest"] = cert.cone_digest;
    j["x"] = vec_json(cert.x);
    j["c"] = cert.c ? json(cert.c->str()) : json(nullptr);
    j["N"] = cert.n ? json(cert.n->get_str()) : json(nullptr);
    j["verified"] = cert.verified;
    dump(path, j);
}

void write_decomposition_file(const std::string& path, const WsosDecomposition& dec,
                              const std::string& digest) {
    json j;
    j["cone_digest"] = digest;
    json blocks = json::array();
    for (const auto& b : dec.gram_blocks) {
        json rows = json::array();
        for (size_t i = 0; i < b.order(); ++i) {
            json row = json::array();
            for (size_t k = 0; k < b.order(); ++k) row.push_back(b.at(i, k).str());
            rows.push_back(row);
        }
        blocks.push_back(rows);
    }
    j["gram_blocks"] = blocks;
    j["block_psd"] = dec.block_psd;
    j["verified"] = dec.verified;
    dump(path, j);
}

WsosDecomposition read_decomposition_file(const std::string& path) {
    const json j = load(path);
    WsosDecomposition dec;
    try {
        for (const auto& rows : j.at("gram_blocks")) {
            const size_t n = rows.size();
            SymMatrix b(n);
            for (size_t i = 0; i < n; ++i) {
                if (rows[i].size() != n) throw ParseError("decomposition block is not square");
                for (size_t k = i; k < n; ++k) {
                    const Rational v = rat(rows[i][k], "gram entry");
                    if (rat(rows[k][i], "gram entry") != v)
                        throw ParseError("decomposition block is not symmetric");
                    b.set(i, k, v);
                }
            }
            dec.gram_blocks.push_back(std::move(b));
        }
        for (const auto& f : j.at("block_psd")) dec.block_psd.push_back(f.get<bool>());
        dec.verified = j.value("verified", false);
    } catch (const json::exception& e) {
        throw ParseError("decomposition file '" + path + "': " + e.what());
    }
    return dec;
}

void write_trace_file(const std::string& path, const IterationTrace& trace) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    for (const auto& rec : trace.records) {
        json j;
        j["iter"] = rec.iter;
        j["c"] = rec.c.str();
        j["delta_c"] = rec.delta_c.str();
        j["N"] = rec.n.get_str();
        j["max_bits_x"] = rec.max_bits_x;
        out << j.dump() << "\n";
    }
}

}  // namespace wsos
