#include "halfgrids/halfgrid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace halfgrids {

namespace {

std::string cyc_key(const CycElem &e) {
    // Rewrite at the smallest conductor holding the value, so equal elements
    // produced at different conductors share one key.
    CycElem v = e;
    for (long d = 1; d < v.conductor(); ++d)
        if (v.conductor() % d == 0)
            if (auto down = try_descend(v, d)) {
                v = *down;
                break;
            }
    std::string s = std::to_string(v.conductor());
    for (const auto &c : v.coeffs()) {
        s += '|';
        s += rat_to_string(c);
    }
    return s;
}

std::string point_key(const ProjPoint &p) {
    ProjPoint c = p.canonical();
    std::string s;
    for (const auto &x : c.v) {
        s += cyc_key(x);
        s += ';';
    }
    return s;
}

std::string line_key(const ProjLine3 &l) {
    // Scale the Pluecker vector so its first nonzero entry is 1.
    CycElem scale = CycElem::one(1);
    for (const auto &x : l.pluecker)
        if (!x.is_zero()) {
            scale = x.inv();
            break;
        }
    std::string s;
    for (const auto &x : l.pluecker) {
        s += cyc_key(x * scale);
        s += ';';
    }
    return s;
}

} // namespace

void Config::add_point(std::string label, ProjPoint p) {
    points.push_back({std::move(label), std::move(p)});
}

void Config::add_line(std::string label, ProjLine3 l) {
    lines.push_back({std::move(label), std::move(l)});
}

const ProjPoint &Config::point(const std::string &label) const {
    for (const auto &lp : points)
        if (lp.label == label) return lp.pt;
    throw std::out_of_range("Config: no point labeled " + label);
}

const ProjLine3 &Config::line(const std::string &label) const {
    for (const auto &ll : lines)
        if (ll.label == label) return ll.line;
    throw std::out_of_range("Config: no line labeled " + label);
}

bool Config::has_point(const std::string &label) const {
    for (const auto &lp : points)
        if (lp.label == label) return true;
    return false;
}

bool Config::has_line(const std::string &label) const {
    for (const auto &ll : lines)
        if (ll.label == label) return true;
    return false;
}

std::optional<std::string> Config::label_of(const ProjPoint &p) const {
    for (const auto &lp : points)
        if (proj_eq(lp.pt, p)) return lp.label;
    return std::nullopt;
}

Config standard_grid(long m) {
    if (m < 3) throw std::invalid_argument("standard_grid: m must be >= 3");
    long n = std::lcm(m, 4L);
    auto u = [&](long k) {
        long e = ((k % m) + m) % m;
        return CycElem::root_of_unity(n, e * (n / m));
    };
    Config cfg;
    cfg.conductor = n;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            cfg.add_point("p[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                          ProjPoint::p3(CycElem::one(n), u(j), u(i), u(i + j)));
    for (long i = 0; i < m; ++i) {
        // M_i : w - u^i y = 0, u^i x - z = 0
        Plane3 h1 = Plane3::from_coeffs({CycElem::zero(n), -u(i), CycElem::zero(n), CycElem::one(n)});
        Plane3 h2 = Plane3::from_coeffs({u(i), CycElem::zero(n), -CycElem::one(n), CycElem::zero(n)});
        cfg.add_line("M[" + std::to_string(i) + "]", ProjLine3::from_planes(h1, h2));
    }
    for (long j = 0; j < m; ++j) {
        // L_j : w - u^j z = 0, u^j x - y = 0
        Plane3 h1 = Plane3::from_coeffs({CycElem::zero(n), CycElem::zero(n), -u(j), CycElem::one(n)});
        Plane3 h2 = Plane3::from_coeffs({u(j), -CycElem::one(n), CycElem::zero(n), CycElem::zero(n)});
        cfg.add_line("L[" + std::to_string(j) + "]", ProjLine3::from_planes(h1, h2));
    }
    cfg.add_line("T1", meet_planes(Plane3::of(1, 0, 0, 0), Plane3::of(0, 1, 0, 0)));
    cfg.add_line("T2", meet_planes(Plane3::of(0, 0, 1, 0), Plane3::of(0, 0, 0, 1)));
    return cfg;
}

std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> y_sets(long m) {
    if (m < 3) throw std::invalid_argument("y_sets: m must be >= 3");
    long n = std::lcm(m, 4L);
    std::vector<ProjPoint> y1, y2;
    for (long j = 0; j < m; ++j) {
        CycElem uj = CycElem::root_of_unity(n, j * (n / m));
        y1.push_back(ProjPoint::p3(-CycElem::one(n), CycElem::zero(n), CycElem::zero(n), uj));
        y2.push_back(ProjPoint::p3(CycElem::zero(n), -CycElem::one(n), uj, CycElem::zero(n)));
    }
    return {y1, y2};
}

bool halfgrid_variant_supported(long m, HalfGridVariant variant) {
    return variant != HalfGridVariant::Full || m % 2 == 0;
}

Config standard_halfgrid(long m, HalfGridVariant variant) {
    Config cfg = standard_grid(m);
    // The half-grid family is the column lines plus the Y lines; the row
    // lines M[i] belong to the grid structure only.
    std::erase_if(cfg.lines,
                  [](const Config::LabeledLine &l) { return l.label.starts_with("M["); });
    auto [y1, y2] = y_sets(m);
    bool take1 = variant != HalfGridVariant::Y2;
    bool take2 = variant != HalfGridVariant::Y1;
    if (take1) {
        for (long j = 0; j < m; ++j)
            cfg.add_point("Y1[" + std::to_string(j) + "]", y1[j]);
        cfg.add_line("Y1", meet_planes(Plane3::of(0, 1, 0, 0), Plane3::of(0, 0, 1, 0)));
    }
    if (take2) {
        for (long j = 0; j < m; ++j)
            cfg.add_point("Y2[" + std::to_string(j) + "]", y2[j]);
        cfg.add_line("Y2", meet_planes(Plane3::of(1, 0, 0, 0), Plane3::of(0, 0, 0, 1)));
    }
    return cfg;
}

Config f4_root_model() {
    Config cfg;
    cfg.conductor = 1;
    const char *axis[4] = {"e1", "e2", "e3", "e4"};
    for (int i = 0; i < 4; ++i) {
        Vec v(4, CycElem::zero(1));
        v[i] = CycElem::one(1);
        cfg.add_point(axis[i], ProjPoint::from_coords(v));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1}) {
                Vec v(4, CycElem::zero(1));
                v[i] = CycElem::one(1);
                v[j] = CycElem::rational(Rat(s));
                std::string label = std::string(axis[i]) + (s > 0 ? "+" : "-") + axis[j];
                cfg.add_point(label, ProjPoint::from_coords(v));
            }
    for (int s2 : {1, -1})
        for (int s3 : {1, -1})
            for (int s4 : {1, -1}) {
                std::string label = std::string("h") + (s2 > 0 ? "+" : "-") +
                                    (s3 > 0 ? "+" : "-") + (s4 > 0 ? "+" : "-");
                cfg.add_point(label, ProjPoint::p3i(1, s2, s3, s4));
            }
    return cfg;
}

std::vector<IncidenceLine> incidence_lines(const Config &z, int k) {
    if (k < 2) throw std::invalid_argument("incidence_lines: k must be >= 2");
    std::map<std::string, ProjLine3> seen;
    size_t n = z.points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            ProjLine3 l = line_through(z.points[i].pt, z.points[j].pt);
            seen.emplace(line_key(l), l);
        }
    std::vector<IncidenceLine> out;
    for (auto &[key, l] : seen) {
        IncidenceLine il{l, {}};
        for (const auto &lp : z.points)
            if (on_line(lp.pt, l)) il.labels.push_back(lp.label);
        if (static_cast<int>(il.labels.size()) >= k) out.push_back(std::move(il));
    }
    return out;
}

namespace {

// Search for `want` pairwise skew lines among the candidates covering every
// point exactly once; returns indices of the first family found.
bool skew_cover_search(const std::vector<IncidenceLine> &cands, int want,
                       size_t total_points, std::vector<int> &chosen) {
    std::set<std::string> covered;
    std::vector<int> stack;
    std::function<bool(size_t)> rec = [&](size_t start) -> bool {
        if (static_cast<int>(stack.size()) == want)
            return covered.size() == total_points;
        for (size_t c = start; c < cands.size(); ++c) {
            bool ok = true;
            for (int idx : stack)
                if (!lines_skew(cands[idx].line, cands[c].line)) {
                    ok = false;
                    break;
                }
            for (const auto &lab : cands[c].labels)
                if (covered.count(lab)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            stack.push_back(static_cast<int>(c));
            for (const auto &lab : cands[c].labels) covered.insert(lab);
            if (rec(c + 1)) {
                chosen = stack;
                return true;
            }
            for (const auto &lab : cands[c].labels) covered.erase(lab);
            stack.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

StructureResult detect_structure(const Config &z, int a, int b) {
    if (static_cast<long>(z.points.size()) != static_cast<long>(a) * b)
        throw std::invalid_argument("detect_structure: |Z| != a*b");
    auto all = incidence_lines(z, std::min(a, b));
    // Family A: a skew lines with exactly b points each.
    std::vector<IncidenceLine> cand_a, cand_b;
    for (const auto &il : all) {
        if (static_cast<int>(il.labels.size()) == b) cand_a.push_back(il);
        if (static_cast<int>(il.labels.size()) == a) cand_b.push_back(il);
    }
    std::vector<int> pick_a, pick_b;
    bool have_a = skew_cover_search(cand_a, a, z.points.size(), pick_a);
    bool have_b = skew_cover_search(cand_b, b, z.points.size(), pick_b);
    if (have_a && have_b && a == b) {
        // Same-size families must be disjoint; the cover search returns the
        // lexicographically first family for both, so re-run B avoiding A.
        std::set<std::string> used;
        for (int i : pick_a) used.insert(line_key(cand_a[i].line));
        std::vector<IncidenceLine> rest;
        for (const auto &il : cand_b)
            if (!used.count(line_key(il.line))) rest.push_back(il);
        pick_b.clear();
        have_b = skew_cover_search(rest, b, z.points.size(), pick_b);
        cand_b = std::move(rest);
    }
    StructureResult res;
    if (have_a && have_b) {
        res.kind = StructureKind::Grid;
        GridCert cert;
        for (int i : pick_a) cert.a_lines.push_back(cand_a[i]);
        for (int i : pick_b) cert.b_lines.push_back(cand_b[i]);
        res.grid = std::move(cert);
    } else if (have_a || have_b) {
        res.kind = StructureKind::HalfGrid;
        HalfGridCert cert;
        const auto &found = have_a ? cand_a : cand_b;
        const auto &pick = have_a ? pick_a : pick_b;
        for (int i : pick) cert.lines.push_back(found[i]);
        cert.refutation_candidates = have_a ? cand_b : cand_a;
        res.half_grid = std::move(cert);
    }
    return res;
}

ThreeLineCheck three_line_grid_check(const Config &z,
                                     const std::array<ProjLine3, 3> &lines) {
    ThreeLineCheck out;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!lines_skew(lines[i], lines[j])) {
                out.failure = "chosen lines are not pairwise skew";
                return out;
            }
    std::array<std::vector<std::string>, 3> on;
    for (const auto &lp : z.points)
        for (int k = 0; k < 3; ++k)
            if (on_line(lp.pt, lines[k])) on[k].push_back(lp.label);
    if (on[0].empty() || on[0].size() != on[1].size() || on[0].size() != on[2].size()) {
        out.failure = "chosen lines carry unequal point counts";
        return out;
    }
    std::array<std::set<std::string>, 3> covered;
    for (const auto &lab : on[0]) {
        ProjLine3 t = transversal_through_point(z.point(lab), lines[1], lines[2]);
        for (int k = 1; k < 3; ++k) {
            auto q = lines_meet(t, lines[k]);
            auto hit = q ? z.label_of(*q) : std::nullopt;
            if (!hit) {
                out.failure = "transversal misses the configuration";
                return out;
            }
            covered[k].insert(*hit);
        }
        out.transversals.push_back(t);
    }
    for (int k = 1; k < 3; ++k)
        if (covered[k].size() != on[k].size()) {
            out.failure = "transversal family does not cover the chosen lines";
            return out;
        }
    out.ok = true;
    return out;
}

namespace {

// Sorted sizes of the big incidence lines through each point.
std::map<std::string, std::vector<int>> point_signatures(const Config &cfg,
                                                         const std::vector<IncidenceLine> &big) {
    std::map<std::string, std::vector<int>> sig;
    for (const auto &lp : cfg.points) sig[lp.label] = {};
    for (const auto &il : big)
        for (const auto &lab : il.labels)
            sig[lab].push_back(static_cast<int>(il.labels.size()));
    for (auto &[lab, v] : sig) std::sort(v.begin(), v.end());
    return sig;
}

// pair_counts[i][j] = number of configuration points on the line through
// points i and j (>= 2); used to prune frame assignments.
std::vector<std::vector<int>> pair_counts(const Config &cfg) {
    size_t n = cfg.points.size();
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < n; ++i) index[cfg.points[i].label] = i;
    std::vector<std::vector<int>> counts(n, std::vector<int>(n, 2));
    for (const auto &il : incidence_lines(cfg, 2)) {
        int c = static_cast<int>(il.labels.size());
        for (size_t x = 0; x < il.labels.size(); ++x)
            for (size_t y = x + 1; y < il.labels.size(); ++y) {
                size_t i = index[il.labels[x]], j = index[il.labels[y]];
                counts[i][j] = counts[j][i] = c;
            }
    }
    return counts;
}

} // namespace

EquivResult find_projective_equivalence(const Config &a, const Config &b) {
    EquivResult out;
    if (a.points.size() != b.points.size()) return out;
    size_t n = a.points.size();
    auto big_a = incidence_lines(a, 3);
    auto big_b = incidence_lines(b, 3);
    // Global line-size multisets must agree.
    std::vector<int> sizes_a, sizes_b;
    for (const auto &il : big_a) sizes_a.push_back(static_cast<int>(il.labels.size()));
    for (const auto &il : big_b) sizes_b.push_back(static_cast<int>(il.labels.size()));
    std::sort(sizes_a.begin(), sizes_a.end());
    std::sort(sizes_b.begin(), sizes_b.end());
    if (sizes_a != sizes_b) return out;
    auto sig_a = point_signatures(a, big_a);
    auto sig_b = point_signatures(b, big_b);
    auto pc_a = pair_counts(a);
    auto pc_b = pair_counts(b);

    std::map<std::string, std::string> b_key_to_label;
    for (const auto &lp : b.points) b_key_to_label[point_key(lp.pt)] = lp.label;

    // Frame in a: five points in general position, preferring points that sit
    // on the richest lines so that candidate images are rare.
    auto in_general_position = [](const std::array<ProjPoint, 5> &pts) {
        Matrix cols(4, Vec(4, CycElem::zero(1)));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) cols[i][j] = pts[j].v[i];
        auto lambda = linalg::solve(cols, pts[4].v);
        if (!lambda) return false;
        for (int j = 0; j < 4; ++j)
            if ((*lambda)[j].is_zero()) return false;
        return true;
    };
    std::array<int, 5> frame{};
    bool found_frame = false;
    for (size_t i1 = 0; i1 < n && !found_frame; ++i1)
        for (size_t i2 = i1 + 1; i2 < n && !found_frame; ++i2)
            for (size_t i3 = i2 + 1; i3 < n && !found_frame; ++i3)
                for (size_t i4 = i3 + 1; i4 < n && !found_frame; ++i4)
                    for (size_t i5 = i4 + 1; i5 < n && !found_frame; ++i5) {
                        std::array<ProjPoint, 5> pts = {a.points[i1].pt, a.points[i2].pt,
                                                        a.points[i3].pt, a.points[i4].pt,
                                                        a.points[i5].pt};
                        if (in_general_position(pts)) {
                            frame = {static_cast<int>(i1), static_cast<int>(i2),
                                     static_cast<int>(i3), static_cast<int>(i4),
                                     static_cast<int>(i5)};
                            found_frame = true;
                        }
                    }
    if (!found_frame) return out;

    std::array<ProjPoint, 5> src;
    std::array<std::vector<int>, 5> cand;
    for (int k = 0; k < 5; ++k) {
        src[k] = a.points[frame[k]].pt;
        const auto &want = sig_a.at(a.points[frame[k]].label);
        for (size_t j = 0; j < n; ++j)
            if (sig_b.at(b.points[j].label) == want) cand[k].push_back(static_cast<int>(j));
        if (cand[k].empty()) return out;
    }

    std::array<int, 5> pick{};
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == 5) {
            std::array<ProjPoint, 5> dst;
            for (int k = 0; k < 5; ++k) dst[k] = b.points[pick[k]].pt;
            Matrix t;
            try {
                t = transform_from_point_correspondence(src, dst);
            } catch (const std::invalid_argument &) {
                return false;
            }
            std::vector<std::pair<std::string, std::string>> pmap;
            std::set<std::string> hit;
            for (const auto &lp : a.points) {
                ProjPoint im = apply_transform(t, lp.pt);
                auto it = b_key_to_label.find(point_key(im));
                if (it == b_key_to_label.end() || hit.count(it->second)) return false;
                hit.insert(it->second);
                pmap.emplace_back(lp.label, it->second);
            }
            out.equivalent = true;
            out.transform = std::move(t);
            out.point_map = std::move(pmap);
            return true;
        }
        for (int j : cand[depth]) {
            if (used[j]) continue;
            bool compatible = true;
            for (int e = 0; e < depth; ++e)
                if (pc_a[frame[e]][frame[depth]] != pc_b[pick[e]][j]) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            used[j] = true;
            pick[depth] = j;
            if (rec(depth + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    rec(0);
    return out;
}

} // namespace halfgrids
