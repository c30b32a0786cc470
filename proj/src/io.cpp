#include "halfgrids/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace halfgrids {

namespace {

using nlohmann::json;

// Scale a vector so its first nonzero entry is 1.
Vec normalized(Vec v) {
    for (const auto &x : v)
        if (!x.is_zero()) {
            CycElem inv = x.inv();
            for (auto &y : v) y = y * inv;
            return v;
        }
    return v;
}

json vec_to_json(const Vec &v) {
    json out = json::array();
    for (const auto &x : v) out.push_back(cyc_to_json(x));
    return out;
}

Vec vec_from_json(const json &j) {
    if (!j.is_array()) throw std::invalid_argument("io: expected a coordinate array");
    Vec v;
    for (const auto &e : j) v.push_back(cyc_from_json(e));
    return v;
}

} // namespace

json cyc_to_json(const CycElem &x) {
    json coeffs = json::array();
    for (const auto &r : x.coeffs()) coeffs.push_back(rat_to_string(r));
    return json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycElem cyc_from_json(const json &j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw std::invalid_argument("io: malformed cyclotomic element");
    long n = j.at("conductor").get<long>();
    std::vector<Rat> coeffs;
    for (const auto &s : j.at("coeffs")) coeffs.push_back(rat_from_string(s.get<std::string>()));
    return CycElem(n, std::move(coeffs));
}

json point_to_json(const ProjPoint &p) { return vec_to_json(p.canonical().v); }

ProjPoint point_from_json(const json &j) {
    return ProjPoint::from_coords(vec_from_json(j));
}

ProjLine3 line_from_pluecker(const std::array<CycElem, 6> &p) {
    // Antisymmetric Pluecker matrix; its image is spanned by line points.
    Matrix mat(4, Vec(4, CycElem::zero(1)));
    mat[0][1] = p[0];
    mat[0][2] = p[1];
    mat[0][3] = p[2];
    mat[1][2] = p[3];
    mat[1][3] = p[4];
    mat[2][3] = p[5];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) mat[i][j] = CycElem::zero(1) - mat[j][i];
    std::vector<ProjPoint> pts;
    for (int k = 0; k < 4 && pts.size() < 2; ++k) {
        Vec col(4, CycElem::zero(1));
        bool zero = true;
        for (int i = 0; i < 4; ++i) {
            col[i] = mat[i][k];
            zero = zero && col[i].is_zero();
        }
        if (zero) continue;
        ProjPoint q = ProjPoint::from_coords(col);
        if (pts.empty() || !proj_eq(pts[0], q)) pts.push_back(q);
    }
    if (pts.size() != 2) throw std::invalid_argument("io: degenerate Pluecker vector");
    ProjLine3 l = ProjLine3::through(pts[0], pts[1]);
    Vec want = normalized(Vec(p.begin(), p.end()));
    Vec got = normalized(Vec(l.pluecker.begin(), l.pluecker.end()));
    if (want != got)
        throw std::invalid_argument("io: Pluecker vector violates the quadric relation");
    return l;
}

json line_to_json(const ProjLine3 &l) {
    return json{{"pluecker", vec_to_json(normalized(Vec(l.pluecker.begin(), l.pluecker.end())))}};
}

ProjLine3 line_from_json(const json &j) {
    if (j.is_object() && j.contains("pluecker")) {
        Vec v = vec_from_json(j.at("pluecker"));
        if (v.size() != 6) throw std::invalid_argument("io: Pluecker vector needs 6 entries");
        std::array<CycElem, 6> p;
        std::copy(v.begin(), v.end(), p.begin());
        return line_from_pluecker(p);
    }
    if (j.is_object() && j.contains("points")) {
        const auto &pts = j.at("points");
        if (!pts.is_array() || pts.size() != 2)
            throw std::invalid_argument("io: line needs two spanning points");
        return ProjLine3::through(point_from_json(pts[0]), point_from_json(pts[1]));
    }
    throw std::invalid_argument("io: line needs \"pluecker\" or \"points\"");
}

json config_to_json(const Config &z) {
    std::vector<const Config::LabeledPoint *> pts;
    for (const auto &lp : z.points) pts.push_back(&lp);
    std::sort(pts.begin(), pts.end(),
              [](auto *a, auto *b) { return a->label < b->label; });
    std::vector<const Config::LabeledLine *> lns;
    for (const auto &ll : z.lines) lns.push_back(&ll);
    std::sort(lns.begin(), lns.end(),
              [](auto *a, auto *b) { return a->label < b->label; });
    json points = json::array();
    for (const auto *lp : pts)
        points.push_back(json{{"label", lp->label}, {"coords", point_to_json(lp->pt)}});
    json lines = json::array();
    for (const auto *ll : lns) {
        json entry = line_to_json(ll->line);
        entry["label"] = ll->label;
        lines.push_back(std::move(entry));
    }
    return json{{"conductor", z.conductor}, {"points", points}, {"lines", lines}};
}

Config config_from_json(const json &j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("points"))
        throw std::invalid_argument("io: malformed config");
    Config z;
    z.conductor = j.at("conductor").get<long>();
    for (const auto &e : j.at("points")) {
        if (!e.contains("label") || !e.contains("coords"))
            throw std::invalid_argument("io: malformed config point");
        z.add_point(e.at("label").get<std::string>(), point_from_json(e.at("coords")));
    }
    if (j.contains("lines"))
        for (const auto &e : j.at("lines")) {
            if (!e.contains("label")) throw std::invalid_argument("io: unlabeled line");
            z.add_line(e.at("label").get<std::string>(), line_from_json(e));
        }
    return z;
}

json cert_to_json(const GeprociCert &c) {
    json trials = json::array();
    for (const auto &t : c.trials)
        trials.push_back(json{{"center", point_to_json(t.center)},
                              {"a", t.a},
                              {"b", t.b},
                              {"fa", vec_to_json(t.fa)},
                              {"fb", vec_to_json(t.fb)},
                              {"shear_lambda", t.shear_lambda},
                              {"resultant_y0", t.resultant_y0},
                              {"resultant", cyc_to_json(t.resultant)}});
    return json{{"a", c.a}, {"b", c.b}, {"seed", c.seed}, {"trials", trials}};
}

GeprociCert cert_from_json(const json &j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("trials"))
        throw std::invalid_argument("io: malformed certificate");
    GeprociCert c;
    c.a = j.at("a").get<int>();
    c.b = j.at("b").get<int>();
    c.seed = j.value("seed", 0ULL);
    for (const auto &e : j.at("trials")) {
        TrialRecord t;
        t.center = point_from_json(e.at("center"));
        t.a = e.at("a").get<int>();
        t.b = e.at("b").get<int>();
        t.fa = vec_from_json(e.at("fa"));
        t.fb = vec_from_json(e.at("fb"));
        t.shear_lambda = e.at("shear_lambda").get<long>();
        t.resultant_y0 = e.at("resultant_y0").get<long>();
        t.resultant = cyc_from_json(e.at("resultant"));
        c.trials.push_back(std::move(t));
    }
    return c;
}

void save_json(const json &j, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("io: cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("io: cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("io: malformed JSON in " + path);
    return j;
}

} // namespace halfgrids
