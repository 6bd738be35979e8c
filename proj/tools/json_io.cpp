#include "json_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tetratrig::io {

namespace {

const char* kEdgeKeys[6] = {"12", "13", "14", "23", "24", "34"};

Json vec4_json(const Vec4& v) {
    Json a = Json::array();
    for (int i = 0; i < 4; ++i) a.push_back(to_json(v(i)));
    return a;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

long to_int(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw BadInput("not an integer: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw BadInput("not an integer: '" + s + "'");
    return v;
}

}  // namespace

Json real_json(double x) {
    if (std::isfinite(x)) return x;
    return Json{{"inf", true}};
}

Json to_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const P1& z) {
    if (z.is_infinite()) return Json{{"inf", true}};
    return to_json(z.value());
}

Json to_json(const MobiusMap& m) {
    return Json::array({Json::array({to_json(m.m(0, 0)), to_json(m.m(0, 1))}),
                        Json::array({to_json(m.m(1, 0)), to_json(m.m(1, 1))})});
}

Json to_json(const Config8& c) {
    Json a = Json::array();
    for (const auto& z : c.z) a.push_back(to_json(z));
    return a;
}

Json to_json(const CKFn& f) {
    Json z = Json::array(), p = Json::array();
    for (cplx x : f.zeros) z.push_back(to_json(x));
    for (cplx x : f.poles) p.push_back(to_json(x));
    return Json{{"zeros", z}, {"poles", p}};
}

Json to_json(const LatticeVec& v) { return Json(v.d); }

Json to_json(const PicClass& c) {
    Json coeffs = Json::object();
    for (int k = 0; k < 10; ++k) coeffs[pic_basis_name(k)] = c.c[k];
    return Json{{"class", c.str()}, {"coefficients", coeffs}};
}

Json to_json(const MetricSpec& s) {
    Json l = Json::object();
    for (int k = 0; k < 6; ++k) l[kEdgeKeys[k]] = s.lengths[k];
    return Json{{"geometry", geometry_name(s.geometry)}, {"lengths", l}};
}

Json to_json(const MarkedTetra& T) {
    Json q = Json::array();
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) q.push_back(to_json(T.Q.matrix()(i, j)));
    Json planes = Json::array();
    for (const auto& h : T.H) planes.push_back(vec4_json(h));
    return Json{{"quadric", q}, {"planes", planes}, {"orientation", T.orientation}, {"order_bits", edge_order_bits(T)}};
}

Json to_json(const Solution& s) {
    Json angles = Json::object();
    for (int k = 0; k < 6; ++k) angles[kEdgeKeys[k]] = s.angles[k];
    return Json{{"angles", angles},
                {"psi", to_json(s.psi)},
                {"principal_parameters", Json::array({to_json(s.principal.p1), to_json(s.principal.p2)})},
                {"ck_L", to_json(s.ckL)},
                {"ck_A", to_json(s.ckA)},
                {"generic", s.generic},
                {"surviving_assignments", s.surviving_assignments}};
}

Json to_json(const SuiteReport& r) {
    Json trials = Json::array();
    for (const auto& t : r.trials) {
        Json o{{"index", t.index}, {"label", t.label}, {"residual", real_json(t.residual)}, {"pass", t.pass}};
        if (!t.detail.empty()) o["detail"] = t.detail;
        trials.push_back(o);
    }
    Json facts = Json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    return Json{{"suite", r.name},
                {"tolerance", r.tolerance},
                {"max_residual", real_json(r.max_residual)},
                {"pass", r.pass},
                {"facts", facts},
                {"trials", trials}};
}

cplx cplx_from_json(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_object() && j.contains("re") && j.contains("im") && j["re"].is_number() && j["im"].is_number())
        return {j["re"].get<double>(), j["im"].get<double>()};
    throw BadInput("expected a number or {\"re\", \"im\"}: " + j.dump());
}

P1 p1_from_json(const Json& j) {
    if (j.is_object() && j.contains("inf")) {
        if (j["inf"] != true) throw BadInput("\"inf\" must be true");
        return P1::infinity();
    }
    return P1::finite(cplx_from_json(j));
}

MetricSpec metric_from_json(const Json& j) {
    if (!j.is_object()) throw BadInput("metric spec must be an object");
    MetricSpec s;
    if (!j.contains("geometry") || !j["geometry"].is_string()) throw BadInput("missing \"geometry\"");
    std::string g = j["geometry"].get<std::string>();
    if (g == "spherical")
        s.geometry = Geometry::Spherical;
    else if (g == "hyperbolic")
        s.geometry = Geometry::Hyperbolic;
    else
        throw BadInput("geometry must be \"spherical\" or \"hyperbolic\"");
    if (!j.contains("lengths") || !j["lengths"].is_object()) throw BadInput("missing \"lengths\" object");
    const Json& l = j["lengths"];
    if (l.size() != 6) throw BadInput("\"lengths\" needs exactly the keys 12,13,14,23,24,34");
    for (int k = 0; k < 6; ++k) {
        if (!l.contains(kEdgeKeys[k]) || !l[kEdgeKeys[k]].is_number())
            throw BadInput(std::string("missing numeric length \"") + kEdgeKeys[k] + "\"");
        s.lengths[k] = l[kEdgeKeys[k]].get<double>();
        if (!std::isfinite(s.lengths[k]) || s.lengths[k] <= 0) throw BadInput("lengths must be positive");
    }
    return s;
}

LatticeVec parse_lattice_vec(const std::string& text) {
    if (text == "regge") return regge_root();
    if (text.size() >= 2 && text[0] == 'e') {
        std::string name = text.substr(1);
        if (!name.empty() && name[0] == '_') name = name.substr(1);
        int s = aff_index(name);
        if (s < 0) throw BadInput("unknown basis vector: " + text);
        return LatticeVec::unit(s);
    }
    auto parts = split_commas(text);
    if (parts.size() != 8) throw BadInput("expected 8 doubled coordinates: " + text);
    LatticeVec v;
    for (int i = 0; i < 8; ++i) v.d[i] = int(to_int(parts[i]));
    if (!in_lattice(v)) throw BadInput("not a lattice vector: " + text);
    return v;
}

PicClass parse_pic_class(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        auto parts = split_commas(text);
        if (parts.size() != 10) throw BadInput("expected 10 coefficients: " + text);
        PicClass c;
        for (int i = 0; i < 10; ++i) c.c[i] = int(to_int(parts[i]));
        return c;
    }
    PicClass c;
    std::size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') sign = text[i++] == '-' ? -1 : 1;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        int k = i > start ? int(to_int(text.substr(start, i - start))) : 1;
        std::size_t name_start = i;
        while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
        std::string name = text.substr(name_start, i - name_start);
        int idx = -1;
        for (int b = 0; b < 10; ++b)
            if (name == pic_basis_name(b)) idx = b;
        if (idx < 0) throw BadInput("unknown Picard basis element '" + name + "' in " + text);
        c.c[idx] += sign * k;
        any = true;
    }
    if (!any) throw BadInput("empty class");
    return c;
}

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw BadInput("cannot open " + path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw BadInput(std::string("invalid JSON: ") + e.what());
    }
}

void write_output(const Json& j, const std::string& path) {
    std::string text = j.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw BadInput("cannot write " + path);
    out << text;
}

}  // namespace tetratrig::io
